// Copyright (c) 2026 The SummaryLens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "summarylens/embeddings.h"

#include <fstream>

namespace summarylens {

EmbeddingTable LoadEmbeddingTableFile(const std::filesystem::path& path,
                                      std::optional<std::size_t> max_entries) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIoFailure,
                "cannot open embedding table " + path.string());
  }
  return LoadEmbeddingTable<double>(in, max_entries);
}

}  // namespace summarylens

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

#ifndef SUMMARYLENS_CLI_H_
#define SUMMARYLENS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "summarylens/config.h"
#include "summarylens/error.h"

namespace summarylens {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitEngine = 2,
  kExitIo = 3,
};

ExitCode ExitCodeFor(ErrorKind kind);

/// Runs the command line (args excludes the program name):
///
///   summarize [FILE] [--k N] [--method textrank|frequency]
///             [--format json|text|highlight] [--embeddings PATH]
///             [--config PATH] [--data-dir PATH] [--id ID]
///             [--open-marker S] [--close-marker S]
///   serve     [--config PATH] [--bind HOST] [--port N] [--data-dir PATH]
///             [--embeddings PATH]
///   docs list [--data-dir PATH] [--config PATH]
///   docs show ID [--data-dir PATH] [--config PATH]
///
/// summarize reads FILE, or `in` when FILE is absent or "-".
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err,
           const EnvLookup& env = ProcessEnv);

}  // namespace summarylens

#endif  // SUMMARYLENS_CLI_H_

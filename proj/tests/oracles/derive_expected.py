#!/usr/bin/env python3
"""Independent oracles for the frozen expected values in the C++ tests.

Nothing here shares code with the C++ implementation. Ranking is computed
by a direct dense linear solve, not by power iteration.

    python3 tests/oracles/derive_expected.py
"""
import math
import pathlib
import re

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[2]
DAMPING = 0.85


def stationary(weights, d=DAMPING):
    w = np.asarray(weights, dtype=float)
    n = w.shape[0]
    p = np.empty_like(w)
    for i in range(n):
        rs = w[i].sum()
        p[i] = w[i] / rs if rs > 0 else np.full(n, 1.0 / n)
    a = np.eye(n) - d * p.T
    b = np.full(n, (1.0 - d) / n)
    return np.linalg.solve(a, b)


def words(path):
    return [l.strip() for l in open(path, encoding="utf-8")
            if l.strip() and not l.startswith("#")]


def fixture_pipeline(k=5):
    raw = (ROOT / "data/fixture_document.txt").read_text(encoding="utf-8")
    text = re.sub(r"-\n\s*", "", raw)
    text = " ".join(text.split())
    # The fixture contains one abbreviation ("Dr.") and no other traps.
    protected = text.replace("Dr. ", "Dr\0 ")
    parts = re.split(r"(?<=[.!?])\s+(?=[A-Z0-9])", protected)
    sentences = [p.replace("\0", ".") for p in parts]
    stop = set(words(ROOT / "data/stopwords.txt"))
    table = {}
    for line in open(ROOT / "data/mini_glove.txt", encoding="utf-8"):
        tok, *vals = line.split()
        table.setdefault(tok, np.array([float(v) for v in vals]))
    vecs = []
    for s in sentences:
        toks = [t for t in re.split(r"[^a-z0-9]+", s.lower()) if t and t not in stop]
        known = [table[t] for t in toks if t in table]
        vecs.append(np.mean(known, axis=0) if known else np.zeros(5))
    n = len(vecs)
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                na, nb = np.linalg.norm(vecs[i]), np.linalg.norm(vecs[j])
                c = 0.0 if na == 0 or nb == 0 else vecs[i] @ vecs[j] / (na * nb)
                w[i, j] = max(0.0, c)
    s = stationary(w)
    order = sorted(range(n), key=lambda i: (-s[i], i))
    return text, sentences, s, sorted(order[:k])


if __name__ == "__main__":
    print("cos((1,2,3),(4,5,6)) =", repr(32 / (math.sqrt(14) * math.sqrt(77))))
    w3 = [[0, 0.8, 0.2], [0.8, 0, 0.4], [0.2, 0.4, 0]]
    print("three-node textrank =", [repr(x) for x in stationary(w3)])
    raw = np.array([0.75, 0.875, 1.0])
    print("frequency =", [repr(x) for x in raw / raw.sum()])
    text, sentences, s, sel = fixture_pipeline()
    print("fixture text =", text)
    for i, x in enumerate(sentences):
        print(f"  [{i}] {x}")
    print("fixture scores =", [repr(x) for x in s])
    print("fixture selected (k=5) =", sel)

#!/usr/bin/env python3
"""Brute-force oracle for the seed family distances.

Builds the seed matrices from their block recursion, applies the cyclic
stacking step with numpy and enumerates every message in lexicographic order.
Prints `p j n k d` per line.
"""
import itertools
import sys

import numpy as np


def seed_matrix(i):
    a1 = np.array([[0, -1], [1, 0]])
    b1 = np.array([[1, -1], [-1, 1]])
    a, b = a1, b1
    for _ in range(1, i):
        a = np.block([[a1, b], [-b.T, a]])
        b = np.hstack([b1, b])
    return a


def step(basis):
    k, n = basis.shape
    out = np.zeros((k + 1, n * (k + 1)), dtype=np.int64)
    for t in range(k + 1):
        for r in range(k + 1):
            src = (r - t) % (k + 1)
            if src:
                out[t, r * n:(r + 1) * n] = basis[src - 1]
    return out


def min_distance(basis, p):
    k, n = basis.shape
    best = n
    for msg in itertools.product(range(p), repeat=k):
        if any(msg):
            w = np.count_nonzero((np.array(msg) @ basis) % p)
            best = min(best, w)
    return best


def main():
    i = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    jmax = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    for p in (2, 3, 5):
        basis = (seed_matrix(i).T[: 2 * i - 1]) % p
        for j in range(jmax + 1):
            if p ** basis.shape[0] <= 5 ** 7:
                print(p, j, basis.shape[1], basis.shape[0], min_distance(basis, p))
            basis = step(basis) % p


if __name__ == "__main__":
    main()

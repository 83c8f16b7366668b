#!/usr/bin/env python3
"""Regenerates the bundled OEIS b-file prefixes used by the offline
cross-checks.

Every value is computed from first principles in Python, independently of the
C++ library: the area totals by brute-force summation over integer
compositions, everything else from closed-form binomials. Output files follow
the standard b-file format (one "index value" pair per line).
"""

import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write_bfile(name, pairs, comment):
    path = os.path.join(HERE, name)
    with open(path, "w") as fh:
        fh.write(f"# {comment}\n")
        for index, value in pairs:
            fh.write(f"{index} {value}\n")
    print(f"wrote {path} ({len(pairs)} terms)")


def area_total(n):
    """Total parallelogram polyominoes with n cells: sum over all integer
    compositions (m_1, ..., m_k) of n of the product of min(m_i, m_{i+1})."""
    total = 0
    # stack holds (remaining, last_part, product); parts are appended one at
    # a time, counting the running min-product when the composition closes
    stack = [(n, None, 1)]
    while stack:
        remaining, last, prod = stack.pop()
        if remaining == 0:
            total += prod
            continue
        for part in range(1, remaining + 1):
            weight = 1 if last is None else min(last, part)
            stack.append((remaining - part, part, prod * weight))
    return total


def narayana(m, j):
    return math.comb(m, j) * math.comb(m, j - 1) // m


def main():
    # A006958: parallelogram polyominoes by area, offset 1
    write_bfile(
        "b006958.txt",
        [(n, area_total(n)) for n in range(1, 21)],
        "A006958: parallelogram polyominoes with n cells",
    )

    # A174158: squares of the Narayana triangle, read by rows, offset 1
    pairs = []
    index = 1
    for m in range(1, 10):
        for j in range(1, m + 1):
            pairs.append((index, narayana(m, j) ** 2))
            index += 1
    write_bfile("b174158.txt", pairs, "A174158: squared Narayana triangle, read by rows")

    # A045943: 3*n*(n+1)/2, offset 0
    write_bfile(
        "b045943.txt",
        [(n, 3 * n * (n + 1) // 2) for n in range(0, 26)],
        "A045943: triangular matchstick numbers 3*n*(n+1)/2",
    )

    # A000891: C(2n,n)*C(2n+1,n)/(n+1), offset 0
    write_bfile(
        "b000891.txt",
        [(n, math.comb(2 * n, n) * math.comb(2 * n + 1, n) // (n + 1)) for n in range(0, 16)],
        "A000891: central Narayana-square column",
    )

    # A319743: antidiagonal sums of the squared Narayana triangle, offset 1
    write_bfile(
        "b319743.txt",
        [(l - 1, sum(narayana(l - 1, k) ** 2 for k in range(1, l))) for l in range(2, 17)],
        "A319743: antidiagonal sums of the squared Narayana triangle",
    )


if __name__ == "__main__":
    main()

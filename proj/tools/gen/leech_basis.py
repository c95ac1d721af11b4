"""Emit an integer basis of sqrt(8) * Leech from the extended binary Golay code.

The generating set is {2c : c in a Golay basis} + {4e_i + 4e_j} + {8e_i} + {(-3, 1^23)}.
Output: 24 rows of 24 integers (ambient form diag(1/8)).
"""
import itertools
import sys

import sympy


def golay_basis():
    # cyclic [23,12,7] code, generator x^11+x^10+x^6+x^5+x^4+x^2+1, extended by parity
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # coefficients x^0..x^11
    rows = []
    for s in range(12):
        w = [0] * 23
        for k, bit in enumerate(g):
            if bit:
                w[(k + s) % 23] = 1
        rows.append(w + [sum(w) % 2])
    return rows


def span_weights(rows):
    weights = {}
    for mask in range(1 << 12):
        w = [0] * 24
        for i in range(12):
            if mask >> i & 1:
                w = [a ^ b for a, b in zip(w, rows[i])]
        s = sum(w)
        weights[s] = weights.get(s, 0) + 1
    return weights


def row_hnf(rows):
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    out = []
    for col in range(ncols):
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (nxt if r[col] != 0 else rest).append(r)
            live = nxt
        if live:
            p = live[0]
            if p[col] < 0:
                p = [-a for a in p]
            out.append(p)
        rows = [r for r in rest if any(r)]
    for i, r in enumerate(out):
        piv = next(k for k, a in enumerate(r) if a)
        for j in range(i):
            q = out[j][piv] // r[piv]
            out[j] = [a - q * b for a, b in zip(out[j], r)]
    return out


def main():
    code = golay_basis()
    wt = span_weights(code)
    assert wt == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, wt
    gens = [[2 * x for x in c] for c in code]
    for i in range(24):
        gens.append([8 if k == i else 0 for k in range(24)])
    for i, j in itertools.combinations(range(24), 2):
        gens.append([4 if k in (i, j) else 0 for k in range(24)])
    gens.append([-3] + [1] * 23)
    basis = row_hnf(gens)
    B = sympy.Matrix(basis)
    gram = B * B.T
    assert all(x % 8 == 0 for x in gram), "not integral"
    assert all(gram[i, i] % 16 == 0 for i in range(24)), "not even"
    det = (gram / 8).det()
    assert det == 1, det
    for row in basis:
        print(" ".join(str(int(x)) for x in row))


if __name__ == "__main__":
    sys.exit(main())

"""Pure Python enumeration kernels.

A candidate index names a rows x cols matrix over GF(p): entries are base-p
digits of the index in row-major order, first entry most significant.  Each
scan walks a contiguous index range with an odometer and returns the indices
whose matrix passes the kernel's condition, in ascending order.

All tensor arguments are flat tuples of residues: bracket tensors are indexed
by (i*dim + j)*dim + k, the action table by (i*rows + b)*rows + r where
act[(i*rows + b)*rows + r] is the r-th coordinate of f0(e_i) acting on the
b-th codomain basis vector.
"""

from __future__ import annotations

BACKEND = "pure"


def _decode(index: int, p: int, n: int) -> list[int]:
    digits = [0] * n
    for t in range(n - 1, -1, -1):
        index, digits[t] = divmod(index, p)
    return digits


def _bracket_pairs(dom_br, cols):
    """Per pair i < j: the nonzero coordinates of [e_i, e_j] in the domain."""
    pairs = []
    for i in range(cols):
        for j in range(i + 1, cols):
            base = (i * cols + j) * cols
            br = [(k, dom_br[base + k]) for k in range(cols) if dom_br[base + k]]
            pairs.append((i, j, br))
    return pairs


def _cod_by_row(cod_br, rows):
    """Per output row r: nonzero (a, b, c[a][b][r]) of the codomain bracket."""
    return [[(a, b, cod_br[(a * rows + b) * rows + r])
             for a in range(rows) for b in range(rows)
             if cod_br[(a * rows + b) * rows + r]]
            for r in range(rows)]


def scan_lie_morphisms(p, dom_br, cod_br, rows, cols, start, stop):
    """Indices of F with F[e_i, e_j] = [F e_i, F e_j] for all i < j.

    Valid (antisymmetric) bracket tensors make the i > j and i = j cases
    redundant, so only i < j pairs are tested.
    """
    n = rows * cols
    pairs = _bracket_pairs(dom_br, cols)
    cod = _cod_by_row(cod_br, rows)
    row_range = range(rows)
    out = []
    digits = _decode(start, p, n)
    idx = start
    while idx < stop:
        ok = True
        for i, j, br in pairs:
            for r in row_range:
                base = r * cols
                lhs = 0
                for k, v in br:
                    lhs += digits[base + k] * v
                rhs = 0
                for a, b, v in cod[r]:
                    rhs += digits[a * cols + i] * digits[b * cols + j] * v
                if (lhs - rhs) % p:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(idx)
        idx += 1
        t = n - 1
        while t >= 0:
            digits[t] += 1
            if digits[t] == p:
                digits[t] = 0
                t -= 1
            else:
                break
    return out


def scan_derivations(p, dom_br, act, cod_br, rows, cols, start, stop):
    """Indices of D obeying the derivation law on all pairs i < j:

        D[e_i, e_j] = f0(e_i).D(e_j) - f0(e_j).D(e_i) + [D(e_i), D(e_j)]

    with the action of f0 precomputed into act.  Both sides are antisymmetric
    in (i, j) and vanish at i = j, so i < j pairs suffice.
    """
    n = rows * cols
    pairs = _bracket_pairs(dom_br, cols)
    cod = _cod_by_row(cod_br, rows)
    act_nz = [[(b, act[(i * rows + b) * rows + r]) for b in range(rows)
               if act[(i * rows + b) * rows + r]]
              for i in range(cols) for r in range(rows)]
    row_range = range(rows)
    out = []
    digits = _decode(start, p, n)
    idx = start
    while idx < stop:
        ok = True
        for i, j, br in pairs:
            for r in row_range:
                base = r * cols
                lhs = 0
                for k, v in br:
                    lhs += digits[base + k] * v
                rhs = 0
                for b, v in act_nz[i * rows + r]:
                    rhs += digits[b * cols + j] * v
                for b, v in act_nz[j * rows + r]:
                    rhs -= digits[b * cols + i] * v
                for a, b, v in cod[r]:
                    rhs += digits[a * cols + i] * digits[b * cols + j] * v
                if (lhs - rhs) % p:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(idx)
        idx += 1
        t = n - 1
        while t >= 0:
            digits[t] += 1
            if digits[t] == p:
                digits[t] = 0
                t -= 1
            else:
                break
    return out

"""Exhaustive enumeration over prime fields and the homotopy groupoid.

Morphism enumeration does not walk the raw product of both matrix spaces.
Each component space is scanned once for the Lie-morphism property (the scan
is cached per algebra pair), survivors are joined on the boundary-square
condition via a bucket key, and only joined pairs get the equivariance
check.  The output order still matches the odometer over concatenated
(f1, f0) entries, so results are identical to a full product scan.

All kernel work happens on plain integer residues; exact Scalar objects are
only materialized for accepted results.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels
from .algebras import CrossedModule, LieAction, LieAlgebra
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    FiniteFieldRequiredError,
)
from .fields import FieldSpec
from .homotopy import Derivation, identity_homotopy, shift_morphism
from .linalg import LinearMap
from .morphisms import CrossedMorphism
from .validation import ValidationReport

DEFAULT_BUDGET = 100_000_000

# Ranges smaller than this are not worth splitting across workers.
_MIN_CHUNK = 4096

_scan_cache: dict[tuple, tuple[int, ...]] = {}
_scan_cache_lock = threading.Lock()


@dataclass(frozen=True)
class Arrow:
    """One groupoid arrow: derivation anchored at objects[src], into objects[dst]."""

    src: int
    dst: int
    derivation: Derivation


@dataclass(frozen=True)
class HomGroupoid:
    """All morphisms between two crossed modules and all homotopies between them."""

    source_module: CrossedModule
    target_module: CrossedModule
    objects: tuple[CrossedMorphism, ...]
    arrows: tuple[Arrow, ...]

    def arrows_from(self, i: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == i]

    def __str__(self):
        return (f"HOM({self.source_module.name}, {self.target_module.name}): "
                f"{len(self.objects)} objects, {len(self.arrows)} arrows")


def _require_prime(field: FieldSpec):
    if not field.is_prime_field:
        raise FiniteFieldRequiredError()


def _check_budget(space: int, budget: int, what: str):
    if space > budget:
        raise BudgetExceededError(space, budget, what)


def _residue(scalar) -> int:
    return scalar.num


def _flat_structure(algebra: LieAlgebra) -> tuple[int, ...]:
    n = algebra.dim
    c = algebra.structure
    return tuple(_residue(c[i][j][k])
                 for i in range(n) for j in range(n) for k in range(n))


def _int_matrix(m: LinearMap) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_residue(e) for e in row) for row in m.entries)


def _digits(index: int, p: int, n: int) -> list[int]:
    digits = [0] * n
    for t in range(n - 1, -1, -1):
        index, digits[t] = divmod(index, p)
    return digits


def _digit_matrix(index: int, p: int, rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    d = _digits(index, p, rows * cols)
    return tuple(tuple(d[r * cols + c] for c in range(cols)) for r in range(rows))


def _matrix_from_index(field: FieldSpec, index: int, rows: int, cols: int) -> LinearMap:
    d = _digits(index, field.p, rows * cols)
    entries = tuple(tuple(field.scalar(d[r * cols + c]) for c in range(cols))
                    for r in range(rows))
    return LinearMap(field, rows, cols, entries)


def _matmul_mod(a, b, p: int) -> tuple[tuple[int, ...], ...]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(inner)) % p for c in range(cols))
        for r in range(rows))


def _scan(fn, args: tuple, total: int, workers: int) -> list[int]:
    """Run a kernel over [0, total), splitting into contiguous worker ranges.

    Compiled kernels drop the GIL, so threads scan in parallel; chunk results
    concatenate back in range order and are sorted for safety, making the
    output independent of the worker count.
    """
    if workers <= 1 or total < 2 * _MIN_CHUNK:
        return list(fn(*args, 0, total))
    chunk = -(-total // workers)
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
        parts = list(pool.map(lambda b: fn(*args, b[0], b[1]), bounds))
    merged = [idx for part in parts for idx in part]
    merged.sort()
    return merged


def _lie_morphism_scan(p: int, dom: LieAlgebra, cod: LieAlgebra,
                       workers: int) -> tuple[int, ...]:
    """Cached full scan of Lie morphisms dom -> cod over GF(p)."""
    dom_br = _flat_structure(dom)
    cod_br = _flat_structure(cod)
    key = (p, dom_br, cod_br, cod.dim, dom.dim)
    with _scan_cache_lock:
        hit = _scan_cache.get(key)
    if hit is not None:
        return hit
    total = p ** (cod.dim * dom.dim)
    found = tuple(_scan(_kernels.scan_lie_morphisms,
                        (p, dom_br, cod_br, cod.dim, dom.dim), total, workers))
    with _scan_cache_lock:
        _scan_cache[key] = found
    return found


def _action_vectors(action: LieAction) -> list[list[tuple[int, ...]]]:
    """vec[i][j] = coordinates of e_i . e_j as plain residues."""
    t = action.tensor
    return [[tuple(_residue(c) for c in t[i][j]) for j in range(action.acted.dim)]
            for i in range(action.actor.dim)]


def _act_table(f0_cols, act_dst, dim_p: int, dim_m2: int, p: int):
    """table[i][b][r] = r-th coordinate of f0(e_i) acting on e_b of M'."""
    dim_p2 = len(f0_cols[0]) if f0_cols else 0
    return [
        [[sum(f0_cols[i][a] * act_dst[a][b][r] for a in range(dim_p2)) % p
          for r in range(dim_m2)]
         for b in range(dim_m2)]
        for i in range(dim_p)]


def enumerate_morphisms(source: CrossedModule, target: CrossedModule,
                        budget: int = DEFAULT_BUDGET,
                        workers: int = 1) -> list[CrossedMorphism]:
    """All crossed-module morphisms source -> target over a prime field.

    Results are sorted by the base-p odometer over concatenated (f1, f0)
    matrix entries, f1 block most significant; deterministic for fixed
    inputs regardless of worker count.
    """
    if source.field != target.field:
        raise FieldMismatchError("modules over different fields")
    _require_prime(source.field)
    field = source.field
    p = field.p
    dm, dm2 = source.m_algebra.dim, target.m_algebra.dim
    dp, dp2 = source.p_algebra.dim, target.p_algebra.dim
    _check_budget(p ** (dm2 * dm), budget, "f1 component scan")
    _check_budget(p ** (dp2 * dp), budget, "f0 component scan")

    s1 = _lie_morphism_scan(p, source.m_algebra, target.m_algebra, workers)
    s0 = _lie_morphism_scan(p, source.p_algebra, target.p_algebra, workers)
    if not s1 or not s0:
        return []

    b_src = _int_matrix(source.boundary)
    b_dst = _int_matrix(target.boundary)

    # Bucket f0 survivors by their side of the square: f0 . boundary.
    buckets: dict[tuple, list[tuple[int, tuple[tuple[int, ...], ...]]]] = {}
    for idx0 in s0:
        f0 = _digit_matrix(idx0, p, dp2, dp)
        buckets.setdefault(_matmul_mod(f0, b_src, p), []).append((idx0, f0))

    act_src = _action_vectors(source.action)
    act_dst = _action_vectors(target.action)
    m_range = range(dm)
    m2_range = range(dm2)
    p_range = range(dp)

    accepted: list[tuple[int, int]] = []
    act_tables: dict[int, list] = {}
    for idx1 in s1:
        f1 = _digit_matrix(idx1, p, dm2, dm)
        group = buckets.get(_matmul_mod(b_dst, f1, p))
        if not group:
            continue
        # Left side of equivariance depends on f1 only: f1(e_i . e_j).
        lhs = [[tuple(sum(f1[r][k] * act_src[i][j][k] for k in m_range) % p
                      for r in m2_range)
                for j in m_range]
               for i in p_range]
        f1_cols = [tuple(f1[b][j] for b in m2_range) for j in m_range]
        for idx0, f0 in group:
            table = act_tables.get(idx0)
            if table is None:
                f0_cols = [tuple(f0[a][i] for a in range(dp2)) for i in p_range]
                table = _act_table(f0_cols, act_dst, dp, dm2, p)
                act_tables[idx0] = table
            ok = True
            for i in p_range:
                t_i = table[i]
                for j in m_range:
                    col = f1_cols[j]
                    want = lhs[i][j]
                    for r in m2_range:
                        if sum(col[b] * t_i[b][r] for b in m2_range) % p != want[r]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                accepted.append((idx1, idx0))

    return [CrossedMorphism(source, target,
                            _matrix_from_index(field, idx1, dm2, dm),
                            _matrix_from_index(field, idx0, dp2, dp))
            for idx1, idx0 in accepted]


def enumerate_derivations(f: CrossedMorphism, budget: int = DEFAULT_BUDGET,
                          workers: int = 1) -> list[Derivation]:
    """All derivations along f over a prime field, in odometer order."""
    _require_prime(f.source.field)
    field = f.source.field
    p = field.p
    rows = f.target.m_algebra.dim
    cols = f.source.p_algebra.dim
    _check_budget(p ** (rows * cols), budget, "derivation scan")

    dom_br = _flat_structure(f.source.p_algebra)
    cod_br = _flat_structure(f.target.m_algebra)
    f0 = _int_matrix(f.f0)
    act_dst = _action_vectors(f.target.action)
    dp2 = f.target.p_algebra.dim
    f0_cols = [tuple(f0[a][i] for a in range(dp2)) for i in range(cols)]
    table = _act_table(f0_cols, act_dst, cols, rows, p)
    act_flat = tuple(table[i][b][r]
                     for i in range(cols) for b in range(rows) for r in range(rows))

    total = p ** (rows * cols)
    found = _scan(_kernels.scan_derivations,
                  (p, dom_br, act_flat, cod_br, rows, cols), total, workers)
    return [Derivation(f, _matrix_from_index(field, idx, rows, cols))
            for idx in found]


def build_hom_groupoid(source: CrossedModule, target: CrossedModule,
                       budget: int = DEFAULT_BUDGET,
                       workers: int = 1) -> HomGroupoid:
    """Objects, then all derivations at each object with resolved targets."""
    objects = enumerate_morphisms(source, target, budget=budget, workers=workers)
    position = {(_int_matrix(f.f1), _int_matrix(f.f0)): i
                for i, f in enumerate(objects)}
    arrows = []
    for i, f in enumerate(objects):
        for der in enumerate_derivations(f, budget=budget, workers=workers):
            g = shift_morphism(f, der.d)
            j = position.get((_int_matrix(g.f1), _int_matrix(g.f0)))
            # Every homotopy target is itself a morphism, so it was enumerated.
            assert j is not None, "homotopy target missing from object list"
            arrows.append(Arrow(i, j, der))
    return HomGroupoid(source, target, tuple(objects), tuple(arrows))


def validate_groupoid(groupoid: HomGroupoid) -> ValidationReport:
    """Exhaustively verify endpoint bookkeeping and the groupoid laws."""
    report = ValidationReport(
        f"HOM({groupoid.source_module.name}, {groupoid.target_module.name})")
    for check in ("endpoints", "identity", "inverse", "associativity"):
        report.record(check)

    objects = groupoid.objects
    arrows = groupoid.arrows

    # Arrow endpoints: anchored at objects[src], shifting onto objects[dst].
    targets = []
    for t, a in enumerate(arrows):
        der = a.derivation
        shifted = shift_morphism(der.source_morphism, der.d)
        targets.append(shifted)
        if der.source_morphism != objects[a.src]:
            report.fail("endpoints", (t + 1,),
                        "arrow anchor", f"objects[{a.src}]")
        if shifted != objects[a.dst]:
            report.fail("endpoints", (t + 1,),
                        "arrow target", f"objects[{a.dst}]")

    by_key = {(a.src, _int_matrix(a.derivation.d)): t
              for t, a in enumerate(arrows)}

    def zero_key(i: int):
        return (i, _int_matrix(identity_homotopy(objects[i]).d))

    # Identity arrows exist and are two-sided units.
    for i in range(len(objects)):
        if zero_key(i) not in by_key:
            report.fail("identity", (i + 1,), "no identity arrow", "zero derivation")
    for t, a in enumerate(arrows):
        der = a.derivation
        left = identity_homotopy(objects[a.src]).d + der.d
        right = der.d + identity_homotopy(objects[a.dst]).d
        if left != der.d or right != der.d:
            report.fail("identity", (t + 1,), "unit law", "arrow unchanged")

    # Inverses: -d anchored at the target, composing to identities both ways.
    zero_maps = {i: identity_homotopy(objects[i]).d for i in range(len(objects))}
    for t, a in enumerate(arrows):
        inv_key = (a.dst, _int_matrix(-a.derivation.d))
        if inv_key not in by_key:
            report.fail("inverse", (t + 1,), "no inverse arrow", "-d at target")
            continue
        round_trip = a.derivation.d + (-a.derivation.d)
        if round_trip != zero_maps[a.src]:
            report.fail("inverse", (t + 1,), round_trip, zero_maps[a.src])

    # Associativity on all composable triples; composition adds the d's.
    out_of: dict[int, list[int]] = {}
    for t, a in enumerate(arrows):
        out_of.setdefault(a.src, []).append(t)
    for t1, a in enumerate(arrows):
        for t2 in out_of.get(a.dst, ()):
            b = arrows[t2]
            ab = a.derivation.d + b.derivation.d
            for t3 in out_of.get(b.dst, ()):
                c = arrows[t3]
                lhs = ab + c.derivation.d
                rhs = a.derivation.d + (b.derivation.d + c.derivation.d)
                if lhs != rhs:
                    report.fail("associativity", (t1 + 1, t2 + 1, t3 + 1), lhs, rhs)
    return report


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def homotopy_classes(groupoid: HomGroupoid) -> list[list[int]]:
    """Connected components of the groupoid, as sorted 0-based object indices.

    Components are ordered by smallest member.  Directed and undirected
    reachability agree because every arrow has an inverse; the symmetry is
    asserted here rather than re-proved.
    """
    edges = {(a.src, a.dst) for a in groupoid.arrows}
    assert all((j, i) in edges for i, j in edges), "arrow set is not symmetric"
    uf = _UnionFind(len(groupoid.objects))
    for i, j in edges:
        uf.union(i, j)
    components: dict[int, list[int]] = {}
    for i in range(len(groupoid.objects)):
        components.setdefault(uf.find(i), []).append(i)
    return [sorted(members) for _, members in sorted(components.items())]

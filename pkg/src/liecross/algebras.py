"""Lie algebras by structure constants, actions, and crossed modules.

A Lie algebra of dimension n is a tensor c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k.  An action of P on M is a tensor
a[i][j][k] with e_i . e_j = sum_k a[i][j][k] e_k (first index over P, last
two over M).  A crossed module bundles M, P, a boundary map M -> P and an
action of P on M.

Axiom checking lives in the validate_* functions, which return witness
bearing reports instead of raising.  Constructors only reject malformed
shapes; the one exception is inclusion_crossed_module, which must refuse a
non-ideal to produce anything meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .errors import (
    FieldMismatchError,
    NotAbelianError,
    NotAnIdealError,
    ShapeMismatchError,
)
from .fields import FieldSpec, Scalar
from .linalg import LinearMap, Vector, span_solver
from .validation import ValidationReport

# Structure tensors are dense, so O(n^3) storage; fine for desk scale.
MAX_DIM = 8

Tensor = tuple[tuple[tuple[Scalar, ...], ...], ...]


def _check_dim(dim: int):
    if dim < 0:
        raise ShapeMismatchError("negative dimension")
    if dim > MAX_DIM:
        raise ShapeMismatchError(f"dimension {dim} exceeds the cap of {MAX_DIM}")


def _coerce_tensor(field: FieldSpec, tensor, shape: tuple[int, int, int]) -> Tensor:
    d0, d1, d2 = shape
    if len(tensor) != d0:
        raise ShapeMismatchError(f"tensor has {len(tensor)} slices, expected {d0}")
    out = []
    for plane in tensor:
        if len(plane) != d1:
            raise ShapeMismatchError(
                f"tensor slice has {len(plane)} rows, expected {d1}")
        rows = []
        for row in plane:
            if len(row) != d2:
                raise ShapeMismatchError(
                    f"tensor row has {len(row)} entries, expected {d2}")
            rows.append(tuple(field.scalar(v) for v in row))
        out.append(tuple(rows))
    return tuple(out)


def _zero_tensor(field: FieldSpec, shape: tuple[int, int, int]) -> Tensor:
    z = field.zero()
    d0, d1, d2 = shape
    return tuple(tuple(tuple(z for _ in range(d2)) for _ in range(d1))
                 for _ in range(d0))


def _sparse_to_dense(field: FieldSpec, shape: tuple[int, int, int],
                     entries: Iterable[tuple[int, int, Mapping[int, object]]],
                     antisymmetric: bool) -> Tensor:
    """Fill a dense tensor from 1-based sparse entries (i, j, {k: coeff})."""
    d0, d1, d2 = shape
    cells: dict[tuple[int, int, int], Scalar] = {}
    for i, j, out in entries:
        if not (1 <= i <= d0 and 1 <= j <= d1):
            raise ShapeMismatchError(f"bracket pair ({i}, {j}) out of range")
        if antisymmetric and i >= j:
            raise ShapeMismatchError(
                f"bracket entries require i < j, got ({i}, {j})")
        for k, coeff in out.items():
            if not 1 <= k <= d2:
                raise ShapeMismatchError(f"output index {k} out of range")
            key = (i - 1, j - 1, k - 1)
            if key in cells:
                raise ShapeMismatchError(
                    f"duplicate tensor entry at ({i}, {j}, {k})")
            cells[key] = field.scalar(coeff)
    rows = [[[field.zero()] * d2 for _ in range(d1)] for _ in range(d0)]
    for (i, j, k), c in cells.items():
        rows[i][j][k] = c
        if antisymmetric:
            rows[j][i][k] = -c
    return tuple(tuple(tuple(r) for r in plane) for plane in rows)


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra presented by structure constants.

    Equality ignores the name: two algebras are the same when field, dim and
    tensor agree entry for entry.
    """

    name: str = dc_field(compare=False)
    field: FieldSpec = dc_field()
    dim: int = dc_field()
    structure: Tensor = dc_field()

    def __post_init__(self):
        _check_dim(self.dim)
        object.__setattr__(self, "structure", _coerce_tensor(
            self.field, self.structure, (self.dim, self.dim, self.dim)))

    @classmethod
    def abelian(cls, name: str, field: FieldSpec, dim: int) -> "LieAlgebra":
        _check_dim(dim)
        return cls(name, field, dim, _zero_tensor(field, (dim, dim, dim)))

    @classmethod
    def from_sparse_brackets(
            cls, name: str, field: FieldSpec, dim: int,
            brackets: Iterable[tuple[int, int, Mapping[int, object]]],
    ) -> "LieAlgebra":
        """Build from 1-based entries (i, j, {k: c}) with i < j.

        The j > i half and the zero diagonal are filled in automatically, so
        the stored tensor is antisymmetric by construction.
        """
        _check_dim(dim)
        tensor = _sparse_to_dense(field, (dim, dim, dim), brackets,
                                  antisymmetric=True)
        return cls(name, field, dim, tensor)

    def basis(self, i: int) -> Vector:
        return Vector.basis(self.field, self.dim, i)

    def basis_vectors(self) -> list[Vector]:
        return [self.basis(i) for i in range(self.dim)]

    def zero_vector(self) -> Vector:
        return Vector.zero(self.field, self.dim)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """[x, y] by bilinear expansion through the structure tensor."""
        self._check_member(x)
        self._check_member(y)
        out = [self.field.zero()] * self.dim
        for i, xi in enumerate(x.entries):
            if not xi:
                continue
            for j, yj in enumerate(y.entries):
                if not yj:
                    continue
                coeff = xi * yj
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] = out[k] + coeff * c
        return Vector(self.field, tuple(out))

    def _check_member(self, v: Vector):
        if v.field != self.field:
            raise FieldMismatchError(
                f"vector over {v.field} in algebra over {self.field}")
        if v.dim != self.dim:
            raise ShapeMismatchError(
                f"{v.dim}-vector in a {self.dim}-dimensional algebra")

    def is_abelian(self) -> bool:
        return not any(c for plane in self.structure for row in plane for c in row)

    def __str__(self):
        return f"{self.name} (dim {self.dim} over {self.field})"


@dataclass(frozen=True)
class LieAction:
    """Bilinear action of an actor algebra P on an acted algebra M."""

    actor: LieAlgebra
    acted: LieAlgebra
    tensor: Tensor

    def __post_init__(self):
        if self.actor.field != self.acted.field:
            raise FieldMismatchError("actor and acted algebras over different fields")
        object.__setattr__(self, "tensor", _coerce_tensor(
            self.actor.field, self.tensor,
            (self.actor.dim, self.acted.dim, self.acted.dim)))

    @property
    def field(self) -> FieldSpec:
        return self.actor.field

    @classmethod
    def zero(cls, actor: LieAlgebra, acted: LieAlgebra) -> "LieAction":
        shape = (actor.dim, acted.dim, acted.dim)
        return cls(actor, acted, _zero_tensor(actor.field, shape))

    @classmethod
    def from_sparse(cls, actor: LieAlgebra, acted: LieAlgebra,
                    entries: Iterable[tuple[int, int, Mapping[int, object]]],
                    ) -> "LieAction":
        tensor = _sparse_to_dense(actor.field,
                                  (actor.dim, acted.dim, acted.dim),
                                  entries, antisymmetric=False)
        return cls(actor, acted, tensor)

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> "LieAction":
        """The algebra acting on itself by its own bracket."""
        return cls(algebra, algebra, algebra.structure)

    def act(self, p: Vector, m: Vector) -> Vector:
        """p . m by bilinear expansion through the action tensor."""
        self.actor._check_member(p)
        self.acted._check_member(m)
        out = [self.field.zero()] * self.acted.dim
        for i, pi in enumerate(p.entries):
            if not pi:
                continue
            for j, mj in enumerate(m.entries):
                if not mj:
                    continue
                coeff = pi * mj
                for k, a in enumerate(self.tensor[i][j]):
                    if a:
                        out[k] = out[k] + coeff * a
        return Vector(self.field, tuple(out))


@dataclass(frozen=True)
class CrossedModule:
    """Boundary map m_algebra -> p_algebra with a compatible action.

    The constructor checks shapes only; run validate_crossed_module for the
    axioms.  Equality ignores the name.
    """

    name: str = dc_field(compare=False)
    m_algebra: LieAlgebra = dc_field()
    p_algebra: LieAlgebra = dc_field()
    boundary: LinearMap = dc_field()
    action: LieAction = dc_field()

    def __post_init__(self):
        if self.m_algebra.field != self.p_algebra.field:
            raise FieldMismatchError("module and base algebras over different fields")
        if self.boundary.field != self.m_algebra.field:
            raise FieldMismatchError("boundary map over a different field")
        if (self.boundary.rows, self.boundary.cols) != (self.p_algebra.dim,
                                                        self.m_algebra.dim):
            raise ShapeMismatchError(
                f"boundary is {self.boundary.rows}x{self.boundary.cols}, expected "
                f"{self.p_algebra.dim}x{self.m_algebra.dim}")
        if self.action.actor != self.p_algebra or self.action.acted != self.m_algebra:
            raise ShapeMismatchError("action does not connect the stated algebras")

    @property
    def field(self) -> FieldSpec:
        return self.p_algebra.field

    def __str__(self):
        return (f"{self.name} (module {self.m_algebra.name}, "
                f"base {self.p_algebra.name})")


def bracket(algebra: LieAlgebra, x: Vector, y: Vector) -> Vector:
    return algebra.bracket(x, y)


def act(action: LieAction, p: Vector, m: Vector) -> Vector:
    return action.act(p, m)


def validate_lie_algebra(algebra: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity on all basis tuples.

    Antisymmetry includes the alternating requirement c[i][i][k] = 0, which
    is not implied by c[i][j][k] = -c[j][i][k] in characteristic 2.
    """
    report = ValidationReport(algebra.name)
    report.record("antisymmetry")
    report.record("jacobi")
    c = algebra.structure
    n = algebra.dim
    zero = algebra.field.zero()
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if i == j:
                    if c[i][i][k]:
                        report.fail("antisymmetry", (i + 1, i + 1, k + 1),
                                    c[i][i][k], zero)
                elif c[i][j][k] != -c[j][i][k]:
                    report.fail("antisymmetry", (i + 1, j + 1, k + 1),
                                c[i][j][k], -c[j][i][k])
    zero_vec = algebra.zero_vector()
    basis = algebra.basis_vectors()
    for i in range(n):
        for j in range(n):
            for l in range(n):
                total = (algebra.bracket(basis[i], algebra.bracket(basis[j], basis[l]))
                         + algebra.bracket(basis[j], algebra.bracket(basis[l], basis[i]))
                         + algebra.bracket(basis[l], algebra.bracket(basis[i], basis[j])))
                if not total.is_zero():
                    report.fail("jacobi", (i + 1, j + 1, l + 1), total, zero_vec)
    return report


def validate_action(action: LieAction) -> ValidationReport:
    """Check the bracket-actor and Leibniz axioms on all basis tuples."""
    p_alg, m_alg = action.actor, action.acted
    report = ValidationReport(f"action of {p_alg.name} on {m_alg.name}")
    report.record("action_bracket")
    report.record("action_leibniz")
    ps = p_alg.basis_vectors()
    ms = m_alg.basis_vectors()
    for i, p in enumerate(ps):
        for j, q in enumerate(ps):
            pq = p_alg.bracket(p, q)
            for k, m in enumerate(ms):
                lhs = action.act(pq, m)
                rhs = action.act(p, action.act(q, m)) - action.act(q, action.act(p, m))
                if lhs != rhs:
                    report.fail("action_bracket", (i + 1, j + 1, k + 1), lhs, rhs)
    for i, p in enumerate(ps):
        for j, m in enumerate(ms):
            for k, m2 in enumerate(ms):
                lhs = action.act(p, m_alg.bracket(m, m2))
                rhs = (m_alg.bracket(action.act(p, m), m2)
                       + m_alg.bracket(m, action.act(p, m2)))
                if lhs != rhs:
                    report.fail("action_leibniz", (i + 1, j + 1, k + 1), lhs, rhs)
    return report


def _morphism_mismatches(f: LinearMap, dom: LieAlgebra, cod: LieAlgebra):
    """Yield (i, j, lhs, rhs) where f[e_i, e_j] != [f e_i, f e_j], 0-based."""
    basis = dom.basis_vectors()
    images = [f.apply(b) for b in basis]
    for i in range(dom.dim):
        for j in range(dom.dim):
            lhs = f.apply(dom.bracket(basis[i], basis[j]))
            rhs = cod.bracket(images[i], images[j])
            if lhs != rhs:
                yield i, j, lhs, rhs


def validate_crossed_module(xmod: CrossedModule) -> ValidationReport:
    """Check the three crossed-module axioms on all basis pairs.

    Assumes the component algebras and the action are validated separately;
    this report covers boundary_morphism, cm1 and cm2 only.
    """
    report = ValidationReport(xmod.name)
    report.record("boundary_morphism")
    report.record("cm1")
    report.record("cm2")
    m_alg, p_alg = xmod.m_algebra, xmod.p_algebra
    boundary, action = xmod.boundary, xmod.action
    for i, j, lhs, rhs in _morphism_mismatches(boundary, m_alg, p_alg):
        report.fail("boundary_morphism", (i + 1, j + 1), lhs, rhs)
    ps = p_alg.basis_vectors()
    ms = m_alg.basis_vectors()
    boundary_images = [boundary.apply(m) for m in ms]
    for i, p in enumerate(ps):
        for j, m in enumerate(ms):
            lhs = boundary.apply(action.act(p, m))
            rhs = p_alg.bracket(p, boundary_images[j])
            if lhs != rhs:
                report.fail("cm1", (i + 1, j + 1), lhs, rhs)
    for i, m in enumerate(ms):
        for j, m2 in enumerate(ms):
            lhs = action.act(boundary_images[i], m2)
            rhs = m_alg.bracket(m, m2)
            if lhs != rhs:
                report.fail("cm2", (i + 1, j + 1), lhs, rhs)
    return report


def inclusion_crossed_module(p_algebra: LieAlgebra,
                             ideal_basis: Sequence[Vector],
                             name: str | None = None) -> CrossedModule:
    """Crossed module of an ideal: M = span(ideal_basis), boundary = inclusion.

    The span must be closed under bracketing with every basis vector of the
    ambient algebra; the first violation aborts with the offending pair.
    """
    field = p_algebra.field
    ideal_basis = list(ideal_basis)
    for v in ideal_basis:
        p_algebra._check_member(v)
    coords_of = span_solver(ideal_basis, field, p_algebra.dim)
    k = len(ideal_basis)

    # [e_i, v_j] in ideal coordinates; doubles as the action tensor.
    action_rows = []
    for i in range(p_algebra.dim):
        e_i = p_algebra.basis(i)
        row = []
        for j, v in enumerate(ideal_basis):
            w = p_algebra.bracket(e_i, v)
            coords = coords_of(w)
            if coords is None:
                raise NotAnIdealError((i + 1, j + 1), w)
            row.append(coords.entries)
        action_rows.append(tuple(row))

    # Bracket closure of the span follows by bilinearity, so this cannot fail.
    structure = []
    for v in ideal_basis:
        row = []
        for w in ideal_basis:
            coords = coords_of(p_algebra.bracket(v, w))
            assert coords is not None
            row.append(coords.entries)
        structure.append(tuple(row))

    if name is None:
        name = f"{p_algebra.name}_ideal{k}"
    m_algebra = LieAlgebra(f"{name}_module", field, k, tuple(structure))
    action = LieAction(p_algebra, m_algebra, tuple(action_rows))
    boundary = (LinearMap.from_columns(field, ideal_basis, rows=p_algebra.dim)
                if k else LinearMap.zero(field, p_algebra.dim, 0))
    xmod = CrossedModule(name, m_algebra, p_algebra, boundary, action)
    assert validate_crossed_module(xmod).ok
    return xmod


@dataclass(frozen=True)
class ImageIdealResult:
    """Outcome of the boundary-image ideal check, truthy iff it holds."""

    is_ideal: bool
    spanning: tuple[Vector, ...]
    witness: tuple[tuple[int, int], Vector] | None = None

    def __bool__(self) -> bool:
        return self.is_ideal


def image_is_ideal(xmod: CrossedModule) -> ImageIdealResult:
    """Check that the boundary image is an ideal of the base algebra.

    Holds for every valid crossed module; the spanning set returned is an
    independent subset of the boundary's columns.
    """
    p_alg = xmod.p_algebra
    field = xmod.field

    spanning: list[Vector] = []
    for j in range(xmod.boundary.cols):
        col = xmod.boundary.column(j)
        if col.is_zero():
            continue
        if not spanning:
            spanning.append(col)
            continue
        if span_solver(spanning, field, p_alg.dim)(col) is None:
            spanning.append(col)

    if not spanning:
        return ImageIdealResult(True, ())
    coords_of = span_solver(spanning, field, p_alg.dim)
    for i in range(p_alg.dim):
        e_i = p_alg.basis(i)
        for j, s in enumerate(spanning):
            w = p_alg.bracket(e_i, s)
            if coords_of(w) is None:
                return ImageIdealResult(False, tuple(spanning), ((i + 1, j + 1), w))
    return ImageIdealResult(True, tuple(spanning))


def abelian_zero_crossed_module(p_algebra: LieAlgebra,
                                module_action: LieAction,
                                name: str | None = None) -> CrossedModule:
    """Crossed module with zero boundary over an abelian module algebra.

    Both crossed-module axioms collapse: cm1 becomes 0 = [p, 0] and cm2
    becomes 0 = [m, m'], which is why the module must be abelian.
    """
    if module_action.actor != p_algebra:
        raise ShapeMismatchError("action is not an action of the given algebra")
    m_algebra = module_action.acted
    if not m_algebra.is_abelian():
        raise NotAbelianError(
            f"module algebra {m_algebra.name} has a nonzero bracket")
    if name is None:
        name = f"{p_algebra.name}_on_{m_algebra.name}"
    boundary = LinearMap.zero(p_algebra.field, p_algebra.dim, m_algebra.dim)
    xmod = CrossedModule(name, m_algebra, p_algebra, boundary, module_action)
    assert validate_crossed_module(xmod).ok
    return xmod

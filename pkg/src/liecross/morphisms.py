"""Morphisms between crossed modules and their category structure.

A morphism is a pair of linear maps f1: M -> M' and f0: P -> P' that are
both Lie algebra morphisms, intertwine the actions, and commute with the
boundaries.  Equality is structural on endpoints and matrices, so enumerated
morphisms deduplicate and hash consistently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import CrossedModule, LieAlgebra, _morphism_mismatches
from .errors import EndpointMismatchError, FieldMismatchError, ShapeMismatchError
from .linalg import LinearMap
from .validation import ValidationReport


@dataclass(frozen=True)
class CrossedMorphism:
    """Pair (f1: M -> M', f0: P -> P') between two crossed modules."""

    source: CrossedModule
    target: CrossedModule
    f1: LinearMap
    f0: LinearMap

    def __post_init__(self):
        if self.source.field != self.target.field:
            raise FieldMismatchError("source and target over different fields")
        if self.f1.field != self.source.field or self.f0.field != self.source.field:
            raise FieldMismatchError("component map over a different field")
        want_f1 = (self.target.m_algebra.dim, self.source.m_algebra.dim)
        if (self.f1.rows, self.f1.cols) != want_f1:
            raise ShapeMismatchError(
                f"f1 is {self.f1.rows}x{self.f1.cols}, expected "
                f"{want_f1[0]}x{want_f1[1]}")
        want_f0 = (self.target.p_algebra.dim, self.source.p_algebra.dim)
        if (self.f0.rows, self.f0.cols) != want_f0:
            raise ShapeMismatchError(
                f"f0 is {self.f0.rows}x{self.f0.cols}, expected "
                f"{want_f0[0]}x{want_f0[1]}")

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def __str__(self):
        return (f"({self.source.name} -> {self.target.name}: "
                f"f1={self.f1}, f0={self.f0})")


def is_lie_morphism(f: LinearMap, dom: LieAlgebra, cod: LieAlgebra,
                    subject: str = "map") -> ValidationReport:
    """Check f[e_i, e_j] = [f e_i, f e_j] on all basis pairs."""
    if (f.rows, f.cols) != (cod.dim, dom.dim):
        raise ShapeMismatchError(
            f"map is {f.rows}x{f.cols}, expected {cod.dim}x{dom.dim}")
    if f.field != dom.field or dom.field != cod.field:
        raise FieldMismatchError("map and algebras over different fields")
    report = ValidationReport(subject)
    report.record("lie_morphism")
    for i, j, lhs, rhs in _morphism_mismatches(f, dom, cod):
        report.fail("lie_morphism", (i + 1, j + 1), lhs, rhs)
    return report


def validate_crossed_morphism(phi: CrossedMorphism,
                              subject: str = "morphism") -> ValidationReport:
    """Check both component morphisms, equivariance and the boundary square."""
    report = ValidationReport(subject)
    report.record("f1_morphism")
    report.record("f0_morphism")
    report.record("equivariance")
    report.record("square")
    src, dst = phi.source, phi.target
    for i, j, lhs, rhs in _morphism_mismatches(phi.f1, src.m_algebra, dst.m_algebra):
        report.fail("f1_morphism", (i + 1, j + 1), lhs, rhs)
    for i, j, lhs, rhs in _morphism_mismatches(phi.f0, src.p_algebra, dst.p_algebra):
        report.fail("f0_morphism", (i + 1, j + 1), lhs, rhs)
    # Equivariance: f1(p . m) = f0(p) . f1(m) on basis pairs of P x M.
    p_basis = src.p_algebra.basis_vectors()
    m_basis = src.m_algebra.basis_vectors()
    f0_images = [phi.f0.apply(p) for p in p_basis]
    f1_images = [phi.f1.apply(m) for m in m_basis]
    for i, p in enumerate(p_basis):
        for j, m in enumerate(m_basis):
            lhs = phi.f1.apply(src.action.act(p, m))
            rhs = dst.action.act(f0_images[i], f1_images[j])
            if lhs != rhs:
                report.fail("equivariance", (i + 1, j + 1), lhs, rhs)
    # Square: boundary' . f1 = f0 . boundary, compared column by column.
    left = dst.boundary.compose(phi.f1)
    right = phi.f0.compose(src.boundary)
    for j in range(left.cols):
        if left.column(j) != right.column(j):
            report.fail("square", (j + 1,), left.column(j), right.column(j))
    return report


def compose_morphisms(phi: CrossedMorphism, chi: CrossedMorphism) -> CrossedMorphism:
    """Diagrammatic composite of phi: X -> X' and chi: X' -> X''."""
    if phi.target != chi.source:
        raise EndpointMismatchError(
            f"cannot compose: target {phi.target.name} is not source {chi.source.name}")
    return CrossedMorphism(phi.source, chi.target,
                           chi.f1.compose(phi.f1), chi.f0.compose(phi.f0))


def identity_morphism(xmod: CrossedModule) -> CrossedMorphism:
    field = xmod.field
    return CrossedMorphism(xmod, xmod,
                           LinearMap.identity(field, xmod.m_algebra.dim),
                           LinearMap.identity(field, xmod.p_algebra.dim))

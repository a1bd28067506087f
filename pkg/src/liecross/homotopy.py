"""Derivations along a morphism and the homotopies they generate.

Given a morphism f = (f1, f0) between crossed modules, a linear map
d: P -> M' satisfying

    d[p, p'] = f0(p) . d(p') - f0(p') . d(p) + [d(p), d(p')]

shifts f to a new morphism g with g0 = f0 + boundary' . d and
g1 = f1 + d . boundary.  Such a d is an arrow f => g; the zero map, -d and
d + d' provide identities, inverses and composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EndpointMismatchError,
    FieldMismatchError,
    InvalidDerivationError,
    ShapeMismatchError,
)
from .linalg import LinearMap
from .morphisms import CrossedMorphism, validate_crossed_morphism
from .validation import ValidationReport


def _check_shape(d: LinearMap, f: CrossedMorphism):
    if d.field != f.source.field:
        raise FieldMismatchError("derivation map over a different field")
    want = (f.target.m_algebra.dim, f.source.p_algebra.dim)
    if (d.rows, d.cols) != want:
        raise ShapeMismatchError(
            f"derivation map is {d.rows}x{d.cols}, expected {want[0]}x{want[1]}")


@dataclass(frozen=True)
class Derivation:
    """An arrow of the homotopy groupoid: a verified d anchored at f.

    The constructor checks shapes only; use Derivation.checked to verify the
    derivation law on untrusted input.  Producers in this package only wrap
    maps that already passed the law.
    """

    source_morphism: CrossedMorphism
    d: LinearMap

    def __post_init__(self):
        _check_shape(self.d, self.source_morphism)

    @classmethod
    def checked(cls, f: CrossedMorphism, d: LinearMap) -> "Derivation":
        report = is_f0_derivation(d, f)
        if not report.ok:
            raise InvalidDerivationError(report)
        return cls(f, d)

    def target_morphism(self) -> CrossedMorphism:
        return homotopy_target(self.source_morphism, self.d, verify=False)

    def __str__(self):
        return f"derivation {self.d} at {self.source_morphism}"


def is_f0_derivation(d: LinearMap, f: CrossedMorphism) -> ValidationReport:
    """Check the derivation law on all ordered basis pairs of P."""
    _check_shape(d, f)
    report = ValidationReport("derivation")
    report.record("derivation_law")
    p_alg = f.source.p_algebra
    m_prime = f.target.m_algebra
    action = f.target.action
    basis = p_alg.basis_vectors()
    f0_images = [f.f0.apply(p) for p in basis]
    d_images = [d.apply(p) for p in basis]
    for i in range(p_alg.dim):
        for j in range(p_alg.dim):
            lhs = d.apply(p_alg.bracket(basis[i], basis[j]))
            rhs = (action.act(f0_images[i], d_images[j])
                   - action.act(f0_images[j], d_images[i])
                   + m_prime.bracket(d_images[i], d_images[j]))
            if lhs != rhs:
                report.fail("derivation_law", (i + 1, j + 1), lhs, rhs)
    return report


def shift_morphism(f: CrossedMorphism, d: LinearMap) -> CrossedMorphism:
    """The raw shift (f0 + boundary'.d, f1 + d.boundary), no verification."""
    _check_shape(d, f)
    g0 = f.f0 + f.target.boundary.compose(d)
    g1 = f.f1 + d.compose(f.source.boundary)
    return CrossedMorphism(f.source, f.target, g1, g0)


def homotopy_target(f: CrossedMorphism, d: LinearMap,
                    verify: bool = True) -> CrossedMorphism:
    """The morphism g that d carries f to.

    With verify on, d must pass is_f0_derivation (otherwise
    InvalidDerivationError carries the failing report) and the resulting g is
    re-validated as a crossed-module morphism before being returned.
    """
    if verify:
        report = is_f0_derivation(d, f)
        if not report.ok:
            raise InvalidDerivationError(report)
    g = shift_morphism(f, d)
    if verify:
        assert validate_crossed_morphism(g).ok
    return g


def connects(d: LinearMap, f: CrossedMorphism, g: CrossedMorphism) -> bool:
    """True iff d is an f0-derivation carrying f exactly to g."""
    if f.source != g.source or f.target != g.target:
        raise EndpointMismatchError("morphisms do not share endpoints")
    shifted = shift_morphism(f, d)
    if shifted.f0 != g.f0 or shifted.f1 != g.f1:
        return False
    return is_f0_derivation(d, f).ok


def identity_homotopy(f: CrossedMorphism) -> Derivation:
    """The zero derivation at f; connects f to f."""
    zero = LinearMap.zero(f.source.field,
                          f.target.m_algebra.dim, f.source.p_algebra.dim)
    return Derivation(f, zero)


def inverse_homotopy(h: Derivation) -> Derivation:
    """The arrow -d anchored at the target of h; undoes h."""
    return Derivation(h.target_morphism(), -h.d)


def concat_homotopies(h1: Derivation, h2: Derivation) -> Derivation:
    """The composite arrow d1 + d2, defined when h2 starts where h1 ends."""
    if h2.source_morphism != h1.target_morphism():
        raise EndpointMismatchError(
            "second homotopy is not anchored at the target of the first")
    return Derivation(h1.source_morphism, h1.d + h2.d)

"""Workspace documents: declarative YAML input and its serializer.

A document declares one ground field and named objects over it:

    field: GF(3)
    algebras:
      affine2:
        dim: 2
        brackets:
          - {i: 1, j: 2, out: [{k: 2, c: "1"}]}
    crossed_modules:
      X_aff:
        m: ideal_m
        p: affine2
        boundary: [["0"], ["1"]]
        action:
          - {i: 1, j: 1, out: [{k: 1, c: "1"}]}
    morphisms:
      f:
        source: X_aff
        target: X_aff
        f1: [["1"]]
        f0: [["1", "0"], ["0", "1"]]
    derivations:
      h:
        base: f
        d: [["0", "1"]]

Basis indices are 1-based; bracket entries carry only i < j (the other half
and the zero diagonal are implied).  Matrices are row-major lists of scalar
strings.  Parsing applies shape checks only; axiom validation is a separate
step, so invalid algebras can be loaded and then reported on.  Every parse
error carries the path of the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

import yaml

from .algebras import CrossedModule, LieAction, LieAlgebra
from .errors import DocumentError, LiecrossError
from .fields import FieldSpec
from .homotopy import Derivation
from .linalg import LinearMap
from .morphisms import CrossedMorphism

_FIELD_RE = re.compile(r"^GF\((\d+)\)$")

_TOP_KEYS = {"field", "algebras", "crossed_modules", "morphisms", "derivations"}
_ALGEBRA_KEYS = {"dim", "brackets"}
_XMOD_KEYS = {"m", "p", "boundary", "action"}
_MORPHISM_KEYS = {"source", "target", "f1", "f0"}
_DERIVATION_KEYS = {"base", "d"}
_BRACKET_KEYS = {"i", "j", "out"}
_OUT_KEYS = {"k", "c"}


@dataclass(frozen=True)
class DerivationCertificate:
    """A named candidate homotopy: a base morphism and a raw d matrix.

    The derivation law is deliberately not checked at parse time; commands
    decide whether to verify or report.
    """

    base_name: str
    base: CrossedMorphism
    d: LinearMap

    def as_derivation(self) -> Derivation:
        return Derivation.checked(self.base, self.d)


@dataclass
class Workspace:
    """Everything a document declares, fully resolved over one field."""

    field: FieldSpec
    algebras: dict[str, LieAlgebra] = dc_field(default_factory=dict)
    crossed_modules: dict[str, CrossedModule] = dc_field(default_factory=dict)
    morphisms: dict[str, CrossedMorphism] = dc_field(default_factory=dict)
    derivations: dict[str, DerivationCertificate] = dc_field(default_factory=dict)

    def require_module(self, name: str) -> CrossedModule:
        if name not in self.crossed_modules:
            raise DocumentError("crossed_modules", f"unknown crossed module {name!r}")
        return self.crossed_modules[name]

    def require_morphism(self, name: str) -> CrossedMorphism:
        if name not in self.morphisms:
            raise DocumentError("morphisms", f"unknown morphism {name!r}")
        return self.morphisms[name]

    def require_derivation(self, name: str) -> DerivationCertificate:
        if name not in self.derivations:
            raise DocumentError("derivations", f"unknown derivation {name!r}")
        return self.derivations[name]


def _expect_mapping(node, path: str) -> dict:
    if not isinstance(node, dict):
        raise DocumentError(path, "expected a mapping")
    return node


def _expect_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise DocumentError(path, "expected a list")
    return node


def _check_keys(node: dict, allowed: set, path: str):
    unknown = set(node) - allowed
    if unknown:
        raise DocumentError(path, f"unknown key {sorted(unknown)[0]!r}")


def _get(node: dict, key: str, path: str):
    if key not in node:
        raise DocumentError(path, f"missing key {key!r}")
    return node[key]


def _expect_index(node, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise DocumentError(path, "expected an integer index")
    return node


def _parse_scalar(field: FieldSpec, node, path: str):
    if isinstance(node, bool) or not isinstance(node, (int, str)):
        raise DocumentError(path, "expected a scalar literal string")
    try:
        return field.parse_scalar(str(node))
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from exc


def _parse_matrix(field: FieldSpec, node, rows: int, cols: int,
                  path: str) -> LinearMap:
    data = _expect_list(node, path)
    if len(data) != rows:
        raise DocumentError(path, f"expected {rows} rows, got {len(data)}")
    entries = []
    for r, row in enumerate(data):
        row = _expect_list(row, f"{path}[{r}]")
        if len(row) != cols:
            raise DocumentError(f"{path}[{r}]",
                                f"expected {cols} entries, got {len(row)}")
        entries.append([_parse_scalar(field, cell, f"{path}[{r}][{c}]")
                        for c, cell in enumerate(row)])
    return LinearMap.from_rows(field, entries) if rows and cols else \
        LinearMap.zero(field, rows, cols)


def _parse_field_spec(node, path: str) -> FieldSpec:
    if isinstance(node, str):
        text = node.strip()
        if text in ("QQ", "rational"):
            return FieldSpec.rational()
        m = _FIELD_RE.match(text)
        if m:
            try:
                return FieldSpec.prime(int(m.group(1)))
            except ValueError as exc:
                raise DocumentError(path, str(exc)) from exc
        raise DocumentError(path, f"unrecognized field {text!r}")
    if isinstance(node, dict):
        _check_keys(node, {"kind", "p"}, path)
        kind = _get(node, "kind", path)
        try:
            if kind == "rational":
                if "p" in node:
                    raise DocumentError(path, "rational field takes no p")
                return FieldSpec.rational()
            if kind == "prime":
                return FieldSpec.prime(_expect_index(_get(node, "p", path),
                                                     f"{path}.p"))
        except ValueError as exc:
            raise DocumentError(path, str(exc)) from exc
        raise DocumentError(f"{path}.kind", f"unknown field kind {kind!r}")
    raise DocumentError(path, "expected a field name or mapping")


def _parse_sparse_entries(field: FieldSpec, node, path: str):
    """Sparse tensor rows [{i, j, out: [{k, c}]}] to (i, j, {k: scalar})."""
    entries = []
    for t, item in enumerate(_expect_list(node, path)):
        ipath = f"{path}[{t}]"
        item = _expect_mapping(item, ipath)
        _check_keys(item, _BRACKET_KEYS, ipath)
        i = _expect_index(_get(item, "i", ipath), f"{ipath}.i")
        j = _expect_index(_get(item, "j", ipath), f"{ipath}.j")
        out = {}
        for u, cell in enumerate(_expect_list(_get(item, "out", ipath),
                                              f"{ipath}.out")):
            cpath = f"{ipath}.out[{u}]"
            cell = _expect_mapping(cell, cpath)
            _check_keys(cell, _OUT_KEYS, cpath)
            k = _expect_index(_get(cell, "k", cpath), f"{cpath}.k")
            if k in out:
                raise DocumentError(cpath, f"duplicate output index {k}")
            out[k] = _parse_scalar(field, _get(cell, "c", cpath), f"{cpath}.c")
        entries.append((i, j, out))
    return entries


def _parse_algebra(name: str, node, field: FieldSpec, path: str) -> LieAlgebra:
    node = _expect_mapping(node, path)
    _check_keys(node, _ALGEBRA_KEYS, path)
    dim = _expect_index(_get(node, "dim", path), f"{path}.dim")
    entries = _parse_sparse_entries(field, node.get("brackets", []),
                                    f"{path}.brackets")
    try:
        return LieAlgebra.from_sparse_brackets(name, field, dim, entries)
    except LiecrossError as exc:
        raise DocumentError(path, str(exc)) from exc


def _parse_crossed_module(name: str, node, ws: Workspace,
                          path: str) -> CrossedModule:
    node = _expect_mapping(node, path)
    _check_keys(node, _XMOD_KEYS, path)
    m_name = _get(node, "m", path)
    if m_name not in ws.algebras:
        raise DocumentError(f"{path}.m", f"unknown algebra {m_name!r}")
    p_name = _get(node, "p", path)
    if p_name not in ws.algebras:
        raise DocumentError(f"{path}.p", f"unknown algebra {p_name!r}")
    m_alg, p_alg = ws.algebras[m_name], ws.algebras[p_name]
    boundary = _parse_matrix(ws.field, _get(node, "boundary", path),
                             p_alg.dim, m_alg.dim, f"{path}.boundary")
    if "action" in node:
        entries = _parse_sparse_entries(ws.field, node["action"], f"{path}.action")
        try:
            action = LieAction.from_sparse(p_alg, m_alg, entries)
        except LiecrossError as exc:
            raise DocumentError(f"{path}.action", str(exc)) from exc
    else:
        action = LieAction.zero(p_alg, m_alg)
    try:
        return CrossedModule(name, m_alg, p_alg, boundary, action)
    except LiecrossError as exc:
        raise DocumentError(path, str(exc)) from exc


def _parse_morphism(node, ws: Workspace, path: str) -> CrossedMorphism:
    node = _expect_mapping(node, path)
    _check_keys(node, _MORPHISM_KEYS, path)
    src_name = _get(node, "source", path)
    if src_name not in ws.crossed_modules:
        raise DocumentError(f"{path}.source",
                            f"unknown crossed module {src_name!r}")
    dst_name = _get(node, "target", path)
    if dst_name not in ws.crossed_modules:
        raise DocumentError(f"{path}.target",
                            f"unknown crossed module {dst_name!r}")
    src, dst = ws.crossed_modules[src_name], ws.crossed_modules[dst_name]
    f1 = _parse_matrix(ws.field, _get(node, "f1", path),
                       dst.m_algebra.dim, src.m_algebra.dim, f"{path}.f1")
    f0 = _parse_matrix(ws.field, _get(node, "f0", path),
                       dst.p_algebra.dim, src.p_algebra.dim, f"{path}.f0")
    try:
        return CrossedMorphism(src, dst, f1, f0)
    except LiecrossError as exc:
        raise DocumentError(path, str(exc)) from exc


def _parse_derivation(node, ws: Workspace, path: str) -> DerivationCertificate:
    node = _expect_mapping(node, path)
    _check_keys(node, _DERIVATION_KEYS, path)
    base_name = _get(node, "base", path)
    if base_name not in ws.morphisms:
        raise DocumentError(f"{path}.base", f"unknown morphism {base_name!r}")
    base = ws.morphisms[base_name]
    d = _parse_matrix(ws.field, _get(node, "d", path),
                      base.target.m_algebra.dim, base.source.p_algebra.dim,
                      f"{path}.d")
    return DerivationCertificate(base_name, base, d)


def parse_workspace(text: str) -> Workspace:
    """Parse a document into a resolved Workspace; no axiom validation."""
    try:
        root = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "?"
        raise DocumentError("", f"syntax error at {where}") from exc
    if root is None:
        raise DocumentError("", "empty document")
    root = _expect_mapping(root, "")
    _check_keys(root, _TOP_KEYS, "document")
    ws = Workspace(_parse_field_spec(_get(root, "field", "document"), "field"))
    for name, node in _expect_mapping(root.get("algebras", {}),
                                      "algebras").items():
        ws.algebras[str(name)] = _parse_algebra(str(name), node, ws.field,
                                                f"algebras.{name}")
    for name, node in _expect_mapping(root.get("crossed_modules", {}),
                                      "crossed_modules").items():
        ws.crossed_modules[str(name)] = _parse_crossed_module(
            str(name), node, ws, f"crossed_modules.{name}")
    for name, node in _expect_mapping(root.get("morphisms", {}),
                                      "morphisms").items():
        ws.morphisms[str(name)] = _parse_morphism(node, ws,
                                                  f"morphisms.{name}")
    for name, node in _expect_mapping(root.get("derivations", {}),
                                      "derivations").items():
        ws.derivations[str(name)] = _parse_derivation(node, ws,
                                                      f"derivations.{name}")
    return ws


def _matrix_doc(m: LinearMap) -> list[list[str]]:
    return [[str(e) for e in row] for row in m.entries]


def _sparse_doc(tensor, antisymmetric: bool) -> list[dict]:
    """Nonzero tensor entries back to 1-based sparse rows (i < j if required)."""
    rows = []
    for i, plane in enumerate(tensor):
        for j, row in enumerate(plane):
            if antisymmetric and i >= j:
                continue
            out = [{"k": k + 1, "c": str(c)} for k, c in enumerate(row) if c]
            if out:
                rows.append({"i": i + 1, "j": j + 1, "out": out})
    return rows


def _algebra_name(ws: Workspace, algebra: LieAlgebra, context: str) -> str:
    for name, candidate in ws.algebras.items():
        if candidate == algebra:
            return name
    raise DocumentError(context, f"algebra {algebra.name!r} is not registered")


def _module_name(ws: Workspace, xmod: CrossedModule, context: str) -> str:
    for name, candidate in ws.crossed_modules.items():
        if candidate == xmod:
            return name
    raise DocumentError(context, f"crossed module {xmod.name!r} is not registered")


def serialize_workspace(ws: Workspace) -> str:
    """Render a workspace back to its document form; parses back equal."""
    doc: dict = {"field": str(ws.field)}
    if ws.algebras:
        doc["algebras"] = {
            name: ({"dim": alg.dim, "brackets": brackets}
                   if (brackets := _sparse_doc(alg.structure, True))
                   else {"dim": alg.dim})
            for name, alg in ws.algebras.items()}
    if ws.crossed_modules:
        section = {}
        for name, xm in ws.crossed_modules.items():
            entry = {
                "m": _algebra_name(ws, xm.m_algebra, f"crossed_modules.{name}"),
                "p": _algebra_name(ws, xm.p_algebra, f"crossed_modules.{name}"),
                "boundary": _matrix_doc(xm.boundary),
            }
            action = _sparse_doc(xm.action.tensor, False)
            if action:
                entry["action"] = action
            section[name] = entry
        doc["crossed_modules"] = section
    if ws.morphisms:
        doc["morphisms"] = {
            name: {"source": _module_name(ws, f.source, f"morphisms.{name}"),
                   "target": _module_name(ws, f.target, f"morphisms.{name}"),
                   "f1": _matrix_doc(f.f1),
                   "f0": _matrix_doc(f.f0)}
            for name, f in ws.morphisms.items()}
    if ws.derivations:
        doc["derivations"] = {
            name: {"base": cert.base_name, "d": _matrix_doc(cert.d)}
            for name, cert in ws.derivations.items()}
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)

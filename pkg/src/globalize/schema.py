"""JSON input formats (schema version 1) for monoids, actions, topologies and algebras.

Every parser raises `SchemaError` with a dotted location on malformed input;
the math-level validators (associativity, topology axioms, ...) raise their
own named errors afterwards.
"""

from __future__ import annotations

from typing import Any, Sequence

from .algebra import AlgebraError, FinDimAlgebra, validate_algebra
from .bialgebra import Bialgebra, BialgebraError, group_bialgebra, sweedler_h4, validate_bialgebra
from .exact import QQ, Field, FieldError, Matrix, matrix_to_json, vector_to_json
from .fintop import FinTopology, bits, discrete, validate_topology
from .monoid import FiniteMonoid, MonoidError, parse_monoid_spec, validate_monoid
from .pca import AlgebraicPCA, verify_algebraic_pca
from .setact import GlobalAction, PartialActionDatum
from .topact import TopMonoid, TopPartialModule, subspace_domain_topology

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


def _need(obj: dict, key: str, where: str, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    if key not in obj:
        raise SchemaError(f"{where}.{key}", "missing")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return val


def _check_version(obj: Any, where: str) -> None:
    if isinstance(obj, dict) and obj.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise SchemaError(f"{where}.schema", f"unsupported schema version {obj['schema']!r}")


def split_pair(key: str, left: Sequence[str], right: Sequence[str], where: str) -> tuple[int, int]:
    """Split "a,b" at the unique comma where both halves are known labels."""
    hits = []
    for i, ch in enumerate(key):
        if ch == ",":
            a, b = key[:i], key[i + 1:]
            if a in left and b in right:
                hits.append((left.index(a), right.index(b)))
    if len(hits) != 1:
        raise SchemaError(where, f"cannot read {key!r} as a pair of labels")
    return hits[0]


def _label_index(labels: Sequence[str], s, where: str) -> int:
    if not isinstance(s, str) or s not in labels:
        raise SchemaError(where, f"unknown label {s!r}")
    return list(labels).index(s)


# -- monoids ------------------------------------------------------------------

def parse_monoid(obj, where: str = "monoid") -> FiniteMonoid:
    if isinstance(obj, str):
        try:
            return parse_monoid_spec(obj)
        except MonoidError as exc:
            raise SchemaError(where, str(exc)) from None
    elements = _need(obj, "elements", where, list)
    if not all(isinstance(e, str) for e in elements) or len(set(elements)) != len(elements):
        raise SchemaError(f"{where}.elements", "labels must be distinct strings")
    ident = _label_index(elements, _need(obj, "identity", where), f"{where}.identity")
    table_obj = _need(obj, "table", where, dict)
    n = len(elements)
    table = [[None] * n for _ in range(n)]
    for key, val in table_obj.items():
        i, j = split_pair(key, elements, elements, f"{where}.table[{key!r}]")
        table[i][j] = _label_index(elements, val, f"{where}.table[{key!r}]")
    for i in range(n):
        for j in range(n):
            if table[i][j] is None:
                raise SchemaError(f"{where}.table", f"missing entry {elements[i]},{elements[j]}")
    return validate_monoid(elements, table, ident)


def monoid_to_json(M: FiniteMonoid) -> dict:
    n = len(M)
    return {
        "elements": list(M.elements),
        "identity": M.label(M.identity),
        "table": {f"{M.label(a)},{M.label(b)}": M.label(M.mul(a, b)) for a in range(n) for b in range(n)},
    }


# -- set actions --------------------------------------------------------------

def parse_set_action(obj, where: str = "input", monoid=None) -> PartialActionDatum:
    _check_version(obj, where)
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    if "monoid" in obj:
        M = parse_monoid(obj["monoid"], f"{where}.monoid")
    elif monoid is not None:
        M = monoid if isinstance(monoid, FiniteMonoid) else parse_monoid(monoid, "--monoid")
    else:
        raise SchemaError(f"{where}.monoid", "missing (or pass --monoid)")
    X = _need(obj, "X", where, list)
    if not all(isinstance(x, str) for x in X) or len(set(X)) != len(X):
        raise SchemaError(f"{where}.X", "labels must be distinct strings")
    domain = set()
    for k, pair in enumerate(_need(obj, "domain", where, list)):
        loc = f"{where}.domain[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(loc, "expected [x, m]")
        domain.add((_label_index(X, pair[0], loc), _label_index(M.elements, pair[1], loc)))
    rho = {}
    for key, val in _need(obj, "rho", where, dict).items():
        loc = f"{where}.rho[{key!r}]"
        rho[split_pair(key, X, M.elements, loc)] = _label_index(X, val, loc)
    return PartialActionDatum(M, tuple(X), frozenset(domain), rho)


def set_action_to_json(d: PartialActionDatum) -> dict:
    M = d.M
    return {
        "schema": SCHEMA_VERSION,
        "monoid": monoid_to_json(M),
        "X": list(d.X),
        "domain": [[d.X[x], M.label(m)] for (x, m) in d.sorted_domain()],
        "rho": {f"{d.X[x]},{M.label(m)}": d.X[d.rho[(x, m)]] for (x, m) in d.sorted_domain()},
    }


def parse_global_action(obj, where: str = "target", monoid=None) -> GlobalAction:
    _check_version(obj, where)
    if "monoid" in obj:
        M = parse_monoid(obj["monoid"], f"{where}.monoid")
    elif monoid is not None:
        M = monoid
    else:
        raise SchemaError(f"{where}.monoid", "missing")
    Y = _need(obj, "Y", where, list)
    table = [[None] * len(M) for _ in Y]
    for key, val in _need(obj, "table", where, dict).items():
        loc = f"{where}.table[{key!r}]"
        y, m = split_pair(key, Y, M.elements, loc)
        table[y][m] = _label_index(Y, val, loc)
    if any(v is None for r in table for v in r):
        raise SchemaError(f"{where}.table", "the action table must be total")
    return GlobalAction(M, tuple(Y), tuple(tuple(r) for r in table))


def global_action_to_json(Y: GlobalAction) -> dict:
    M = Y.M
    return {
        "monoid": monoid_to_json(M),
        "Y": list(Y.Y),
        "table": {f"{Y.Y[y]},{M.label(m)}": Y.Y[Y.act(y, m)] for y in range(len(Y)) for m in range(len(M))},
    }


# -- topologies ---------------------------------------------------------------

def parse_topology(obj, points: Sequence[str], where: str) -> FinTopology:
    if isinstance(obj, str):
        if obj == "discrete":
            return discrete(len(points))
        if obj == "indiscrete":
            return validate_topology(len(points), [0, (1 << len(points)) - 1])
        raise SchemaError(where, f"unknown topology shorthand {obj!r}")
    if "points" in obj and list(obj["points"]) != list(points):
        raise SchemaError(f"{where}.points", "does not match the carrier")
    opens = []
    for k, u in enumerate(_need(obj, "opens", where, list)):
        if not isinstance(u, list):
            raise SchemaError(f"{where}.opens[{k}]", "expected a list of points")
        opens.append([_label_index(points, p, f"{where}.opens[{k}]") for p in u])
    return validate_topology(len(points), opens)


def topology_to_json(t: FinTopology, points: Sequence[str]) -> dict:
    return {"points": list(points), "opens": [[points[i] for i in bits(u)] for u in t.opens]}


def _domain_points(d: PartialActionDatum) -> list[str]:
    return [f"{d.X[x]},{d.M.label(m)}" for (x, m) in d.sorted_domain()]


def parse_top_action(obj, where: str = "input", monoid=None) -> TopPartialModule:
    d = parse_set_action(obj, where, monoid)
    tX = parse_topology(_need(obj, "tX", where), d.X, f"{where}.tX")
    tMt = parse_topology(_need(obj, "tM", where), d.M.elements, f"{where}.tM")
    tM = TopMonoid(d.M, tMt)
    if "tD" in obj:
        tD_obj = obj["tD"]
        pts = _domain_points(d)
        if isinstance(tD_obj, dict):
            tD_obj = dict(tD_obj)
            tD_obj["opens"] = [[f"{p[0]},{p[1]}" if isinstance(p, list) else p for p in u]
                               for u in _need(tD_obj, "opens", f"{where}.tD", list)]
            tD_obj.pop("points", None)
        tD = parse_topology(tD_obj, pts, f"{where}.tD")
    else:
        tD = subspace_domain_topology(d, tX, tMt)
    return TopPartialModule(d, tX, tM, tD)


def top_action_to_json(m: TopPartialModule) -> dict:
    d = m.base
    out = set_action_to_json(d)
    out["tX"] = topology_to_json(m.tX, d.X)
    out["tM"] = topology_to_json(m.tM.topology, d.M.elements)
    dl = d.sorted_domain()
    out["tD"] = {"opens": [[[d.X[dl[i][0]], d.M.label(dl[i][1])] for i in bits(u)] for u in m.tD.opens]}
    return out


# -- algebras -----------------------------------------------------------------

def parse_field(obj, where: str, default: Field = QQ) -> Field:
    if obj is None:
        return default
    try:
        return Field.from_name(obj)
    except (FieldError, ValueError) as exc:
        raise SchemaError(where, str(exc)) from None


def _scalar(field: Field, s, where: str):
    try:
        return field.parse(s)
    except (ValueError, ZeroDivisionError, FieldError) as exc:
        raise SchemaError(where, f"bad scalar {s!r}: {exc}") from None


def _index(s, dim: int, labels: Sequence[str] | None, where: str) -> int:
    """A basis label when the input names its basis, otherwise an integer index."""
    if labels is not None:
        if s not in labels:
            raise SchemaError(where, f"unknown basis label {s!r}")
        return list(labels).index(s)
    try:
        i = int(s)
    except (TypeError, ValueError):
        raise SchemaError(where, f"bad basis index {s!r}") from None
    if not 0 <= i < dim:
        raise SchemaError(where, f"basis index {i} out of range")
    return i


def parse_algebra(obj, where: str = "algebra", field: Field | None = None) -> FinDimAlgebra:
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    F = parse_field(obj.get("field"), f"{where}.field", field or QQ)
    dim = _need(obj, "dim", where, int)
    named = obj.get("basis")
    if named is not None and (not isinstance(named, list) or len(named) != dim
                              or len(set(map(str, named))) != dim):
        raise SchemaError(f"{where}.basis", "expected dim distinct labels")
    keys = [str(x) for x in named] if named is not None else None
    labels = keys or [f"e{i}" for i in range(dim)]
    constants = {}
    for key, row in _need(obj, "constants", where, dict).items():
        loc = f"{where}.constants[{key!r}]"
        if keys is not None:
            i, j = split_pair(key, keys, keys, loc)
        else:
            parts = key.split(",")
            if len(parts) != 2:
                raise SchemaError(loc, "expected 'i,j'")
            i, j = (_index(p.strip(), dim, None, loc) for p in parts)
        if not isinstance(row, dict):
            raise SchemaError(loc, "expected {k: c}")
        constants[(i, j)] = {_index(k, dim, keys, loc): _scalar(F, c, loc) for k, c in row.items()}
    unit = _need(obj, "unit", where, list)
    if len(unit) != dim:
        raise SchemaError(f"{where}.unit", "length differs from dim")
    unit = [_scalar(F, c, f"{where}.unit") for c in unit]
    return validate_algebra(F, dim, constants, unit, labels)


def algebra_to_json(A: FinDimAlgebra) -> dict:
    F = A.field
    L = A.labels
    constants = {}
    for i in range(A.dim):
        for j in range(A.dim):
            if A.mult[i][j]:
                constants[f"{L[i]},{L[j]}"] = {L[k]: F.fmt(c) for k, c in A.mult[i][j]}
    return {"field": F.name, "dim": A.dim, "basis": list(A.labels), "constants": constants,
            "unit": vector_to_json(F, A.unit)}


def _matrix(F: Field, rows, nrows: int, ncols: int, where: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows or any(
            not isinstance(r, list) or len(r) != ncols for r in rows):
        raise SchemaError(where, f"expected a {nrows} x {ncols} matrix")
    return Matrix(F, nrows, ncols, [[_scalar(F, x, where) for x in r] for r in rows])


def builtin_bialgebra(spec: str, field: Field = QQ) -> Bialgebra:
    if spec == "h4":
        return sweedler_h4(field)
    if spec.startswith("group:"):
        name = spec[len("group:"):]
        alias = {"sym3": "sym:3", "z2": "cyclic:2", "z3": "cyclic:3"}
        return group_bialgebra(parse_monoid_spec(alias.get(name, name)), field)
    raise SchemaError("bialgebra", f"unknown built-in bialgebra {spec!r}")


def parse_bialgebra(obj, where: str = "bialgebra", field: Field | None = None) -> Bialgebra:
    if isinstance(obj, str):
        try:
            return builtin_bialgebra(obj, field or QQ)
        except (MonoidError, BialgebraError) as exc:
            raise SchemaError(where, str(exc)) from None
    H = parse_algebra(obj, where, field)
    d = H.dim
    # rows of "comult" are Delta(e_i) in H(x)H, so the stored matrix is its transpose
    comult = _matrix(H.field, _need(obj, "comult", where), d, d * d, f"{where}.comult").T
    counit = _matrix(H.field, _need(obj, "counit", where), 1, d, f"{where}.counit")
    return validate_bialgebra(H, comult, counit)


def bialgebra_to_json(B: Bialgebra) -> dict:
    out = algebra_to_json(B.H)
    out["comult"] = matrix_to_json(B.comult.T)
    out["counit"] = matrix_to_json(B.counit)
    return out


def parse_pca(obj, where: str = "input", field: Field | None = None, bialgebra=None) -> AlgebraicPCA:
    _check_version(obj, where)
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    F = parse_field(obj.get("field"), f"{where}.field", field or QQ)
    A = parse_algebra(_need(obj, "algebra", where), f"{where}.algebra", F)
    if "bialgebra" in obj:
        H = parse_bialgebra(obj["bialgebra"], f"{where}.bialgebra", F)
    elif bialgebra is not None:
        H = parse_bialgebra(bialgebra, "--bialgebra", F)
    else:
        raise SchemaError(f"{where}.bialgebra", "missing (or pass --bialgebra)")
    if A.field != H.field:
        raise SchemaError(where, "algebra and bialgebra use different fields")
    coaction = _matrix(F, _need(obj, "coaction", where), A.dim * H.dim, A.dim, f"{where}.coaction")
    return verify_algebraic_pca(A, H, coaction)


def pca_to_json(p: AlgebraicPCA) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "field": p.field.name,
        "algebra": algebra_to_json(p.A),
        "bialgebra": bialgebra_to_json(p.H),
        "coaction": matrix_to_json(p.coaction),
    }


INPUT_ERRORS = (SchemaError, MonoidError, AlgebraError, BialgebraError, FieldError)

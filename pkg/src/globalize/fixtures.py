"""Catalog of named input fixtures, returned as JSON-ready objects.

The same objects are committed under tests/golden/fixtures; `dump_all` rewrites them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .exact import QQ, Field
from .monoid import SubgroupSpec, alternating_subgroup, cyclic, symmetric
from .pca import ab1_fixture, ab2_fixture, global_fixture, trivial_fixture
from .schema import builtin_bialgebra, pca_to_json


class UnknownFixture(KeyError):
    def __str__(self):
        return f"unknown fixture {self.args[0]!r}"


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    kind: str  # set-action | top-action | pca | monoid
    summary: str
    build: Callable[[Field], dict]


Z2 = {"elements": ["e", "g"], "identity": "e",
      "table": {"e,e": "e", "e,g": "g", "g,e": "g", "g,g": "e"}}
TRIVIAL = {"elements": ["e"], "identity": "e", "table": {"e,e": "e"}}


def _z2part(_field) -> dict:
    return {"schema": 1, "monoid": Z2, "X": ["1", "2"],
            "domain": [["1", "e"], ["1", "g"], ["2", "e"]],
            "rho": {"1,e": "1", "1,g": "1", "2,e": "2"}}


def _z2part_bad(_field) -> dict:
    d = _z2part(_field)
    d["rho"]["1,g"] = "2"
    return d


def _counter(_field) -> dict:
    return {"schema": 1, "monoid": TRIVIAL, "X": ["a", "b"],
            "domain": [["a", "e"], ["b", "e"]], "rho": {"a,e": "a", "b,e": "b"},
            "tX": {"points": ["a", "b"], "opens": [[], ["a", "b"]]},
            "tM": {"points": ["e"], "opens": [[], ["e"]]},
            "tD": {"opens": [[], [["a", "e"]], [["b", "e"]], [["a", "e"], ["b", "e"]]]}}


def _swap_rho(_field) -> dict:
    # the swap is not continuous for the Sierpinski topology on X
    pairs = [[x, m] for x in ("a", "b") for m in ("e", "g")]
    return {"schema": 1, "monoid": Z2, "X": ["a", "b"], "domain": pairs,
            "rho": {"a,e": "a", "b,e": "b", "a,g": "b", "b,g": "a"},
            "tX": {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]},
            "tM": "indiscrete"}


def _finite_ggpm(_field) -> dict:
    # restriction of Y = {0,1}^2 (opens: the two columns) with j flipped by g,
    # to the row j = 0, which is not open in Y
    return {"schema": 1, "monoid": Z2, "X": ["00", "10"],
            "domain": [["00", "e"], ["10", "e"]], "rho": {"00,e": "00", "10,e": "10"},
            "tX": {"points": ["00", "10"], "opens": [[], ["00"], ["10"], ["00", "10"]]},
            "tM": "indiscrete",
            "global": {"Y": ["00", "01", "10", "11"],
                       "opens": [[], ["00", "01"], ["10", "11"], ["00", "01", "10", "11"]],
                       "table": {"00,e": "00", "01,e": "01", "10,e": "10", "11,e": "11",
                                 "00,g": "01", "01,g": "00", "10,g": "11", "11,g": "10"}}}


def _sierpinski(_field) -> dict:
    return {"schema": 1, "monoid": Z2, "X": ["a", "b"],
            "domain": [["a", "e"], ["a", "g"], ["b", "e"]],
            "rho": {"a,e": "a", "a,g": "a", "b,e": "b"},
            "tX": {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]},
            "tM": "discrete"}


def _monoid_nonassoc(_field) -> dict:
    table = {"e,e": "e", "e,a": "a", "e,b": "b", "a,e": "a", "b,e": "b",
             "a,a": "e", "a,b": "e", "b,a": "e", "b,b": "e"}
    return {"elements": ["e", "a", "b"], "identity": "e", "table": table}


def _ab1(group: str, normal: str):
    def build(field: Field) -> dict:
        G = {"z2": cyclic(2), "z3": cyclic(3), "sym3": symmetric(3)}[group]
        if normal == "alt3":
            N = alternating_subgroup(G)
        else:
            N = SubgroupSpec(G, frozenset(range(len(G))))
        return pca_to_json(ab1_fixture(G, N, field))
    return build


def _ab2(alpha: str):
    def build(field: Field) -> dict:
        return pca_to_json(ab2_fixture(field.parse(alpha), field))
    return build


def _global(spec: str):
    def build(field: Field) -> dict:
        return pca_to_json(global_fixture(builtin_bialgebra(spec, field)))
    return build


def _trivial(spec: str):
    def build(field: Field) -> dict:
        return pca_to_json(trivial_fixture(builtin_bialgebra(spec, field)))
    return build


def _noncounital(field: Field) -> dict:
    obj = pca_to_json(ab2_fixture(0, field))
    obj["coaction"] = [[field.fmt(2 * field.parse(x)) for x in row] for row in obj["coaction"]]
    return obj


CATALOG: dict[str, FixtureInfo] = {f.name: f for f in [
    FixtureInfo("z2part", "set-action", "Z/2 acting on {1,2} with 1.g = 1 and 2.g undefined", _z2part),
    FixtureInfo("z2part-bad", "set-action", "z2part with 1.g = 2 (breaks partial associativity)", _z2part_bad),
    FixtureInfo("counter", "top-action", "indiscrete X, trivial M, discrete domain topology", _counter),
    FixtureInfo("swap-rho", "top-action", "Z/2 swapping a Sierpinski space (rho not continuous)", _swap_rho),
    FixtureInfo("finite-ggpm", "top-action", "non-open row of a 4-point global Z/2-space", _finite_ggpm),
    FixtureInfo("sierpinski", "top-action", "topological partial action of discrete Z/2", _sierpinski),
    FixtureInfo("monoid-nonassoc", "monoid", "3-element table with identity, not associative",
                _monoid_nonassoc),
    FixtureInfo("ab1:z2", "pca", "t.kG for G = N = Z/2", _ab1("z2", "full")),
    FixtureInfo("ab1:z3", "pca", "t.kG for G = N = Z/3", _ab1("z3", "full")),
    FixtureInfo("ab1:sym3/alt3", "pca", "t.kG for G = S3, N = A3", _ab1("sym3", "alt3")),
    FixtureInfo("ab1:sym3/sym3", "pca", "t.kG for G = N = S3", _ab1("sym3", "full")),
    FixtureInfo("ab2:alpha=0", "pca", "k with delta(1) = (1+g)/2 in H4", _ab2("0")),
    FixtureInfo("ab2:alpha=1", "pca", "k with delta(1) = (1+g+gx)/2 in H4", _ab2("1")),
    FixtureInfo("global:h4", "pca", "H4 coacting on itself", _global("h4")),
    FixtureInfo("global:z2", "pca", "kZ/2 coacting on itself", _global("group:z2")),
    FixtureInfo("global:sym3", "pca", "kS3 coacting on itself", _global("group:sym3")),
    FixtureInfo("trivial:h4", "pca", "k with the trivial H4-coaction", _trivial("h4")),
    FixtureInfo("coaction-noncounital", "pca", "ab2:alpha=0 with the coaction doubled", _noncounital),
]}


def _parametric(name: str) -> FixtureInfo | None:
    if name.startswith("ab2:alpha="):
        alpha = name[len("ab2:alpha="):]
        try:
            Fraction(alpha)
        except ValueError:
            return None
        return FixtureInfo(name, "pca", f"ab2 with alpha = {alpha}", _ab2(alpha))
    return None


def fixture_info(name: str) -> FixtureInfo:
    info = CATALOG.get(name) or _parametric(name)
    if info is None:
        raise UnknownFixture(name)
    return info


def fixtures(name: str, field: Field = QQ) -> dict:
    return fixture_info(name).build(field)


def golden_filename(name: str) -> str:
    return name.replace(":", "_").replace("/", "_").replace("=", "") + ".json"


def dump_all(directory: Path) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in CATALOG:
        path = directory / golden_filename(name)
        path.write_text(json.dumps(fixtures(name), sort_keys=True, indent=2) + "\n")
        out.append(path)
    return out

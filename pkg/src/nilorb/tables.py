"""Rational nilpotent classes of G2(F_q), p=3, and F4(F_q), p=2: orbit
representatives supported on positive-root duals with symbolic field
parameters, exact centralizer orders, and the mass identity."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import ConstructionError, ParameterUnavailableError
from .gf import GF
from .qpoly import QPoly, parse
from .rootsys import Root

_GROUPS = {"G2": "G2p3", "F4": "F4p2"}


@dataclass(frozen=True)
class RationalClassRow:
    group: str
    label: str
    orbit: str
    rep: tuple[tuple[str, str], ...]  # (root name, coefficient token)
    centralizer: QPoly
    centralizer_str: str


def _load() -> dict:
    with resources.files("nilorb.data").joinpath("exceptional_tables.json").open() as fh:
        return json.load(fh)


_CACHE: dict = {}


def table(group: str) -> list[RationalClassRow]:
    """The published rational-class rows, verbatim."""
    if group not in _GROUPS:
        raise ValueError(f"unknown group {group!r}; expected G2 or F4")
    if group not in _CACHE:
        raw = _load()["groups"][group]
        _CACHE[group] = [
            RationalClassRow(
                group,
                row["label"],
                row["orbit"],
                tuple((rn, tok) for rn, tok in row["rep"]),
                parse(row["centralizer"]),
                row["centralizer"],
            )
            for row in raw["rows"]
        ]
    return _CACHE[group]


def group_data(group: str) -> dict:
    return _load()["groups"][group]


def row_by_label(group: str, label: str) -> RationalClassRow:
    for row in table(group):
        if row.label == label:
            return row
    raise KeyError(f"no row {label!r} in the {group} table")


def group_order(group: str) -> QPoly:
    """|G(F_q)| read from the zero-orbit row (its centralizer is all of G)."""
    for row in table(group):
        if not row.rep:
            return row.centralizer
    raise ConstructionError(f"{group} table has no zero-orbit row")


def mass_sum(rows: list[RationalClassRow], order: QPoly) -> QPoly:
    """Sum of |G|/|Z| over the rows, by exact polynomial division."""
    total = QPoly()
    for row in rows:
        total = total + order / row.centralizer
    return total


def mass_check(group: str) -> tuple[bool, dict]:
    """Does the mass identity sum |G|/|Z| = q^{2N} hold exactly?"""
    rows = table(group)
    order = group_order(group)
    n_pos = group_data(group)["n_positive"]
    total = mass_sum(rows, order)
    expected = QPoly.q_power(2 * n_pos)
    report = {
        "group": group,
        "rows": len(rows),
        "sum": str(total),
        "expected": f"q^{2 * n_pos}",
        "ok": total == expected,
    }
    return total == expected, report


def field_parameters(q: int) -> dict[str, int]:
    """Smallest admissible eta, zeta, varpi over F_q (missing keys mean the
    parameter does not exist over this field)."""
    field = GF(q)
    out = {}
    images = {x: field.add(field.mul(x, x), x) for x in field.elements()}
    complement = [x for x in field.elements() if x not in set(images.values())]
    if complement:
        out["eta"] = complement[0]
    squares = {field.mul(x, x) for x in field.elements()}
    nonsq = [x for x in field.elements() if x not in squares]
    if nonsq:
        out["zeta"] = nonsq[0]
    cubes = {field.add(field.mul(field.mul(x, x), x), x) for x in field.elements()}
    nonc = [x for x in field.elements() if x not in cubes]
    if nonc:
        out["varpi"] = nonc[0]
    return out


def materialize_rep(row: RationalClassRow, q: int, rep_lie=None) -> list[int]:
    """Concrete state vector of the representative over F_q (evaluation
    coordinates in the Chevalley basis order of the built Lie algebra)."""
    from .chevalley import build_lie, dual_index

    lie = rep_lie if rep_lie is not None else build_lie(_GROUPS[row.group])
    field = GF(q)
    if field.p != lie.p:
        raise ValueError(f"q={q} has the wrong characteristic for {row.group}")
    params = field_parameters(q)
    coords = [0] * lie.dim
    for root_name, token in row.rep:
        root: Root = lie.rs.parse_name(root_name)
        coords[dual_index(lie, root)] = _token_value(token, params, field, row)
    return coords


def _token_value(token: str, params: dict, field: GF, row: RationalClassRow) -> int:
    neg = token.startswith("-")
    body = token[1:] if neg else token
    if body.isdigit():
        val = field.from_int(int(body))
    else:
        if body not in params:
            raise ParameterUnavailableError(
                f"row {row.label} of {row.group} needs {body}, "
                f"which does not exist over F_{field.q}"
            )
        val = params[body]
    return field.neg(val) if neg else val

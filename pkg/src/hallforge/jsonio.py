"""JSON forms for everything the command line reads or writes.

All producers go through canonical_dumps so identical data serializes to
identical bytes: keys sorted, compact separators, lists emitted in a
documented deterministic order. Coordinates travel as decimal strings
("p/q" for non-integer rationals) so arbitrary precision survives.
"""

from __future__ import annotations

import json

from .basis import HallBasis, hall_basis
from .canonical import CanonicalPolynomials
from .conventions import convention_header
from .deformation import PolynomialCocycle
from .errors import ShapeMismatchError
from .group import GroupElement
from .lie import GradedLieRing
from .rings import poly_from_obj, poly_to_obj


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- group elements ------------------------------------------------------------


def element_to_obj(group, g: GroupElement) -> dict:
    return {
        "r": group.rank,
        "c": group.nclass,
        "coords": [group.ring.format(a) for a in g.coords],
    }


def element_from_obj(group, obj: dict) -> GroupElement:
    if obj.get("r") != group.rank or obj.get("c") != group.nclass:
        raise ShapeMismatchError(
            f"element is for rank {obj.get('r')}, class {obj.get('c')}; "
            f"the group has rank {group.rank}, class {group.nclass}"
        )
    coords = obj.get("coords")
    if not isinstance(coords, list):
        raise ShapeMismatchError("element object needs a coords list")
    return group.element([group.ring.parse(s) for s in coords])


# -- basis ---------------------------------------------------------------------


def basis_to_obj(basis: HallBasis) -> dict:
    return {
        "r": basis.rank,
        "c": basis.nclass,
        "counts": list(basis.counts),
        "entries": [
            {
                "index": list(e.pair),
                "weight": e.weight,
                "label": e.label(),
                "tree": e.tree_obj(),
            }
            for e in basis.entries
        ],
    }


def basis_from_obj(obj: dict) -> HallBasis:
    """Parse by rebuilding: the object must match the canonical basis."""
    basis = hall_basis(int(obj["r"]), int(obj["c"]))
    if basis_to_obj(basis) != obj:
        raise ShapeMismatchError("basis object does not match the Hall convention")
    return basis


# -- words ---------------------------------------------------------------------


def word_to_obj(group, letters) -> list:
    return [
        {"index": list(pair), "exp": group.ring.format(e)} for pair, e in letters
    ]


def word_from_obj(group, obj) -> list:
    if not isinstance(obj, list):
        raise ShapeMismatchError("a word is a JSON list of letters")
    out = []
    for item in obj:
        pair = tuple(item["index"])
        out.append((pair, group.ring.parse(item["exp"])))
    return out


# -- binomial tables and cocycles ----------------------------------------------


def table_to_obj(table) -> list:
    return [
        {"degrees": list(e), "coeff": str(c)} for e, c in table.coeffs
    ]


def table_from_dict_obj(obj, arity: int):
    from .rings import BinomialTable

    entries = {}
    for item in obj:
        entries[tuple(item["degrees"])] = int(item["coeff"])
    return BinomialTable.from_dict(arity, entries)


def cocycle_family_to_obj(rank: int, nclass: int, cocycles) -> dict:
    return {
        "r": rank,
        "c": nclass,
        "cocycles": [
            [table_to_obj(t) for t in f.components] for f in cocycles
        ],
    }


def cocycle_family_from_obj(obj: dict) -> tuple:
    fams = obj.get("cocycles")
    if not isinstance(fams, list):
        raise ShapeMismatchError("cocycle file needs a 'cocycles' list")
    out = []
    for components in fams:
        out.append(
            PolynomialCocycle(
                table_from_dict_obj(comp, 2) for comp in components
            )
        )
    return tuple(out)


# -- canonical polynomials -----------------------------------------------------


def canonical_polys_to_obj(cp: CanonicalPolynomials) -> dict:
    basis = hall_basis(cp.rank, cp.nclass)
    pairs = basis.pairs
    return {
        "convention": convention_header(cp.rank, cp.nclass),
        "r": cp.rank,
        "c": cp.nclass,
        "mul_vars": list(cp.mul_vars),
        "pow_vars": list(cp.pow_vars),
        "p": [
            {
                "index": list(pair),
                "monomial": poly_to_obj(poly),
                "binomial": table_to_obj(table),
            }
            for pair, poly, table in zip(pairs, cp.p, cp.p_tables)
        ],
        "q": [
            {
                "index": list(pair),
                "monomial": poly_to_obj(poly),
                "binomial": table_to_obj(table),
            }
            for pair, poly, table in zip(pairs, cp.q, cp.q_tables)
        ],
    }


def canonical_polys_parse_check(obj: dict) -> bool:
    """Round-trip check: every polynomial entry parses back to equal data."""
    for key in ("p", "q"):
        arity = len(obj["mul_vars" if key == "p" else "pow_vars"])
        for item in obj[key]:
            poly = poly_from_obj(item["monomial"])
            if poly_to_obj(poly) != item["monomial"]:
                return False
            table = table_from_dict_obj(item["binomial"], arity)
            if table_to_obj(table) != item["binomial"]:
                return False
    return True


# -- graded Lie rings ----------------------------------------------------------


def lie_to_obj(L: GradedLieRing) -> dict:
    rows = []
    for (a, b) in sorted(L.table):
        targets = L.table[(a, b)]
        rows.append(
            {
                "left": a,
                "right": b,
                "targets": [
                    {"index": t, "coeff": str(targets[t])} for t in sorted(targets)
                ],
            }
        )
    return {"dims": list(L.dims), "label": L.label, "table": rows}


def lie_from_obj(obj: dict) -> GradedLieRing:
    from fractions import Fraction

    table = {}
    for row in obj["table"]:
        table[(int(row["left"]), int(row["right"]))] = {
            int(t["index"]): Fraction(t["coeff"]) for t in row["targets"]
        }
    return GradedLieRing(obj["dims"], table, label=obj.get("label", ""))

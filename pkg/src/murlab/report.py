"""Structured result documents ("murlab-report/1") and certificate replay.

A report carries everything needed to re-check its claims offline: the
graph, both bounds, and replayable certificate witnesses.  Replay never
reruns the candidate search; it only verifies the certificates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import inf
from typing import Optional

from .algebraic import AlgebraicContext
from .engine import (
    Budget,
    Certificate,
    MurResult,
    ParamPoint,
    SpreadResult,
    _laplacian_max_multiplicity,
    family_mur,
    laplacian,
    universal_matrix,
)
from .families import recognize_family
from .graphs import Graph, components, diameter, encode_graph6, parse_graph6
from .matrices import charpoly, rank_algebraic, rank_rational
from .pathsearch import PathForestWitness, validate_path_forest
from .polynomials import Poly, root_multiplicity

FORMAT = "murlab-report/1"


class ReportError(ValueError):
    pass


def _graph_descriptor(g: Graph) -> dict:
    return {"order": g.n, "edges": [list(e) for e in g.edges()], "graph6": encode_graph6(g)}


def _cert_dict(cert: Certificate) -> dict:
    return {"kind": cert.kind, "data": cert.data, "describe": cert.describe()}


def build_report(
    g: Graph,
    result: MurResult,
    budget: Budget,
    elapsed: float,
    spread: Optional[SpreadResult] = None,
) -> dict:
    doc = {
        "format": FORMAT,
        "graph": _graph_descriptor(g),
        "result": {
            "lower": result.lower,
            "upper": result.upper,
            "exact": result.exact,
            "value": result.value,
        },
        "lower_certificate": _cert_dict(result.lower_cert),
        "upper_certificate": _cert_dict(result.upper_cert),
        "budget": {
            "search_nodes": budget.search_nodes,
            "grid_den": budget.grid_den,
            "grid_num": budget.grid_num,
            "random_points": budget.random_points,
            "max_candidates": budget.max_candidates,
            "seed": budget.seed,
        },
        "budget_exhausted": result.budget_exhausted,
        "elapsed_seconds": elapsed,
    }
    if spread is not None:
        doc["spread"] = {
            "vertex": spread.vertex,
            "lower": spread.lower,
            "upper": spread.upper,
            "exact": spread.exact,
            "deleted": build_report(
                g.delete_vertex(spread.vertex), spread.deleted, budget, 0.0
            ),
        }
    return doc


def report_to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def parse_report(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise ReportError(f"not a {FORMAT} document")
    return doc


# ---------------------------------------------------------------------------
# replay


@dataclass
class ReplayCheck:
    name: str
    ok: bool
    message: str = ""


def _side(g: Graph, data: dict) -> Graph:
    return g.complement() if data.get("on_complement") else g


def _replay_lower(g: Graph, cert: dict) -> tuple[Optional[int], str]:
    """Re-derive the lower bound implied by a certificate; None on mismatch."""
    kind, data = cert["kind"], cert["data"]
    if kind == "trivial":
        return 0, ""
    if kind == "path_forest":
        side = _side(g, data)
        w = PathForestWitness(
            [tuple(p) for p in data["paths"]], list(data["isolated"]), data["bound"]
        )
        if not validate_path_forest(side, w):
            return None, "path forest witness failed validation"
        return w.bound, ""
    if kind == "diameter":
        side = _side(g, data)
        d = diameter(side)
        if d == inf or int(d) != data["diameter"]:
            return None, f"recomputed diameter {d} != {data['diameter']}"
        return data["diameter"] - 1, ""
    if kind == "not_in_rank01_families":
        kinds = {m.kind for m in recognize_family(g)}
        if kinds & {"complete", "empty"}:
            return None, "graph is in a rank-0 family"
        claimed = data["bound"]
        if claimed >= 2 and kinds & {"two_cliques", "clique_plus_isolated"}:
            return None, "graph is in a rank-1 family"
        return min(claimed, 2), ""
    if kind == "family_formula":
        fam = family_mur(g)
        if fam is None or fam[0] != data["value"]:
            return None, "family value could not be reproduced"
        return data["value"], ""
    return None, f"unknown lower certificate kind {kind!r}"


def _parse_point(data: dict) -> ParamPoint:
    return ParamPoint(
        Fraction(data["beta"]), Fraction(data["gamma"]), Fraction(data["delta"])
    )


def _replay_algebraic_params(g: Graph, data: dict) -> tuple[Optional[int], str]:
    branch = Poly([Fraction(c) for c in data["branch"]])
    if data.get("source") != "laplacian_eigenvalue":
        return None, "algebraic certificate without an eigenvalue provenance"
    cp = charpoly(laplacian(g))
    _, rest = root_multiplicity(cp, Fraction(0))
    try:
        rest.exact_div(branch)
    except ArithmeticError:
        return None, "branch modulus does not divide the Laplacian spectrum"
    ctx = AlgebraicContext(branch)
    scalars = []
    for key in ("beta", "gamma", "delta"):
        rep = Poly([Fraction(c) for c in data[key]])
        scalars.append(ctx.element(rep))
    p = ParamPoint(*scalars)
    branches = rank_algebraic(universal_matrix(g, p), ctx)
    if any(r != data["rank"] for _, r in branches):
        return None, f"recomputed ranks {[r for _, r in branches]} != {data['rank']}"
    return data["rank"], ""


def _replay_upper(g: Graph, cert: dict) -> tuple[Optional[int], str]:
    kind, data = cert["kind"], cert["data"]
    n = g.n
    if kind == "trivial":
        return 0, ""
    if kind == "order_bound":
        if n < 2:
            return None, "order bound needs n >= 2"
        return n - 2, ""
    if kind == "component_bound":
        side = _side(g, data)
        c = components(side)[0]
        if c != data["components"]:
            return None, f"recomputed components {c} != {data['components']}"
        return n - c, ""
    if kind == "laplacian_multiplicity":
        side = _side(g, data)
        if components(side)[0] != 1:
            return None, "laplacian bound needs a connected side"
        m = _laplacian_max_multiplicity(side)
        if m != data["multiplicity"]:
            return None, f"recomputed multiplicity {m} != {data['multiplicity']}"
        return n - m - 1, ""
    if kind == "family_formula":
        fam = family_mur(g)
        if fam is None or fam[0] != data["value"]:
            return None, "family value could not be reproduced"
        return data["value"], ""
    if kind == "explicit_params":
        if "modulus" in data:
            return _replay_algebraic_params(g, data)
        r = rank_rational(universal_matrix(g, _parse_point(data)))
        if r != data["rank"]:
            return None, f"recomputed rank {r} != {data['rank']}"
        return r, ""
    return None, f"unknown upper certificate kind {kind!r}"


def replay_report(doc: dict) -> list[ReplayCheck]:
    """Re-check every certificate in a report document."""
    checks = []
    gdesc = doc["graph"]
    g = parse_graph6(gdesc["graph6"])
    same = g.n == gdesc["order"] and sorted(g.edges()) == sorted(
        tuple(e) for e in gdesc["edges"]
    )
    checks.append(ReplayCheck("graph descriptor consistent", same))
    res = doc["result"]
    lower, upper = res["lower"], res["upper"]
    ok = 0 <= lower <= upper
    checks.append(ReplayCheck("bounds ordered", ok, f"[{lower}, {upper}]"))
    value, msg = _replay_lower(g, doc["lower_certificate"])
    checks.append(
        ReplayCheck(
            "lower certificate",
            value is not None and value >= lower,
            msg or f"certified {value}, claimed {lower}",
        )
    )
    value, msg = _replay_upper(g, doc["upper_certificate"])
    checks.append(
        ReplayCheck(
            "upper certificate",
            value is not None and value <= upper,
            msg or f"certified {value}, claimed {upper}",
        )
    )
    exact_ok = res["exact"] == (lower == upper) and (
        res["value"] == (lower if lower == upper else None)
    )
    checks.append(ReplayCheck("exactness flag", exact_ok))
    if "spread" in doc:
        sp = doc["spread"]
        inner = replay_report(sp["deleted"])
        checks.extend(
            ReplayCheck(f"deleted-graph {c.name}", c.ok, c.message) for c in inner
        )
        dres = sp["deleted"]["result"]
        arith = (
            sp["lower"] == lower - dres["upper"]
            and sp["upper"] == upper - dres["lower"]
        )
        checks.append(ReplayCheck("spread arithmetic", arith))
    return checks

"""Universal-matrix construction and the certified bounds pipeline.

A universal matrix of a graph is A + beta*I + gamma*J + delta*D after
normalizing the adjacency coefficient to 1.  The pipeline computes a
certified lower bound, a certified upper bound, and the exact minimum
universal rank whenever the two meet.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf
from typing import Iterator, Optional, Union

from .algebraic import AlgebraicContext, AlgebraicNumber
from .families import FamilyMatch, recognize_family
from .graphs import Graph, components, diameter
from .matrices import charpoly, rank_rational
from .multipoly import TriPoly
from .pathsearch import (
    DEFAULT_NODE_BUDGET,
    PathForestResult,
    best_induced_path_forest,
)
from .polynomials import Poly, rational_roots, root_multiplicity, squarefree_decomposition

Scalar = Union[Fraction, AlgebraicNumber]


class EngineError(ValueError):
    pass


@dataclass(frozen=True)
class ParamPoint:
    """Matrix parameters (beta, gamma, delta); the adjacency coefficient is 1."""

    beta: Scalar
    gamma: Scalar
    delta: Scalar

    def __post_init__(self):
        ctxs = {
            s.context for s in (self.beta, self.gamma, self.delta)
            if isinstance(s, AlgebraicNumber)
        }
        if len(ctxs) > 1:
            raise EngineError("parameter scalars use different algebraic contexts")

    @classmethod
    def rational(cls, beta, gamma, delta) -> "ParamPoint":
        return cls(Fraction(beta), Fraction(gamma), Fraction(delta))

    def is_rational(self) -> bool:
        return all(isinstance(s, Fraction) for s in (self.beta, self.gamma, self.delta))

    def context(self) -> Optional[AlgebraicContext]:
        for s in (self.beta, self.gamma, self.delta):
            if isinstance(s, AlgebraicNumber):
                return s.context
        return None


@dataclass(frozen=True)
class Preset:
    """A named classical matrix as a raw (alpha, beta, gamma, delta) quadruple."""

    name: str
    raw: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def normalized(self) -> ParamPoint:
        a, b, c, d = self.raw
        if a == 0:
            raise EngineError("preset with zero adjacency coefficient")
        return ParamPoint.rational(b / a, c / a, d / a)


PRESETS = [
    Preset("adjacency", (Fraction(1), Fraction(0), Fraction(0), Fraction(0))),
    Preset("laplacian", (Fraction(-1), Fraction(0), Fraction(0), Fraction(1))),
    Preset("signless_laplacian", (Fraction(1), Fraction(0), Fraction(0), Fraction(1))),
    Preset("seidel", (Fraction(-2), Fraction(-1), Fraction(1), Fraction(0))),
    Preset("complement_adjacency", (Fraction(-1), Fraction(-1), Fraction(1), Fraction(0))),
]


def universal_matrix(g: Graph, p: ParamPoint) -> list[list]:
    """A + beta*I + gamma*J + delta*D as a dense matrix of exact scalars."""
    degs = g.degrees()
    out = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(p.beta + p.gamma + p.delta * degs[i])
            elif g.has_edge(i, j):
                row.append(1 + p.gamma)
            else:
                row.append(p.gamma + 0)
        out.append(row)
    return out


def symbolic_universal_matrix(g: Graph) -> list[list[TriPoly]]:
    """Universal matrix with the three parameters left symbolic."""
    beta, gamma, delta = TriPoly.beta(), TriPoly.gamma(), TriPoly.delta()
    degs = g.degrees()
    out = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(beta + gamma + delta * degs[i])
            elif g.has_edge(i, j):
                row.append(gamma + 1)
            else:
                row.append(gamma + 0)
        out.append(row)
    return out


def laplacian(g: Graph) -> list[list[Fraction]]:
    degs = g.degrees()
    return [
        [
            Fraction(degs[i]) if i == j else Fraction(-1 if g.has_edge(i, j) else 0)
            for j in range(g.n)
        ]
        for i in range(g.n)
    ]


def complement_params(g: Graph, p: ParamPoint) -> ParamPoint:
    """Parameters q with U_complement(q) == -U_g(p); rank is preserved."""
    n = g.n
    return ParamPoint(
        -(p.beta - 1 + (n - 1) * p.delta),
        -(p.gamma + 1),
        p.delta + 0,
    )


# ---------------------------------------------------------------------------
# certificates and results


@dataclass
class Certificate:
    kind: str
    data: dict = field(default_factory=dict)

    def describe(self) -> str:
        if self.kind == "path_forest":
            paths = self.data["paths"]
            side = "complement " if self.data.get("on_complement") else ""
            if len(paths) == 1 and not self.data["isolated"]:
                return f"{side}induced P{len(paths[0])}"
            return (
                f"{side}induced path forest "
                f"({len(paths)} paths, {len(self.data['isolated'])} isolated)"
            )
        if self.kind == "diameter":
            side = "complement " if self.data.get("on_complement") else ""
            return f"{side}diameter {self.data['diameter']}"
        if self.kind == "not_in_rank01_families":
            return "not in a rank<=1 family"
        if self.kind == "component_bound":
            side = "complement " if self.data.get("on_complement") else ""
            return f"{side}order minus components"
        if self.kind == "laplacian_multiplicity":
            side = "complement " if self.data.get("on_complement") else ""
            return f"{side}laplacian multiplicity m={self.data['multiplicity']}"
        if self.kind == "regular_spectrum":
            return f"regular spectrum: m={self.data['multiplicity']}"
        if self.kind == "family_formula":
            return f"family:{self.data['family']}"
        if self.kind == "explicit_params":
            return (
                f"rank {self.data['rank']} at "
                f"(beta={self.data['beta']}, gamma={self.data['gamma']}, "
                f"delta={self.data['delta']})"
            )
        if self.kind == "order_bound":
            return "order minus two"
        return self.kind


@dataclass
class MurResult:
    lower: int
    lower_cert: Certificate
    upper: int
    upper_cert: Certificate
    budget_exhausted: bool = False

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def interval(self) -> tuple[int, int]:
        return self.lower, self.upper


@dataclass(frozen=True)
class Budget:
    search_nodes: int = DEFAULT_NODE_BUDGET
    grid_den: int = 4
    grid_num: int = 4
    random_points: int = 200
    max_candidates: Optional[int] = None
    seed: int = 0
    algebraic: bool = True


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# lower bounds


def _forest_certificate(res: PathForestResult, on_complement: bool) -> Certificate:
    w = res.witness
    t, m = len(w.paths), len(w.isolated)
    if t == 1 and m == 0:
        variant = "single-path"
    elif m == 0:
        variant = "multi-path"
    elif t == 1:
        variant = "single-path-plus-isolated"
    else:
        variant = "multi-path-plus-isolated"
    return Certificate(
        "path_forest",
        {
            "paths": [list(p) for p in w.paths],
            "isolated": list(w.isolated),
            "bound": w.bound,
            "variant": variant,
            "on_complement": on_complement,
            "exhaustive": res.exact,
        },
    )


def _in_rank0_family(matches: list[FamilyMatch]) -> bool:
    return any(m.kind in ("complete", "empty") for m in matches)


def _in_rank1_family(matches: list[FamilyMatch]) -> bool:
    return any(m.kind in ("two_cliques", "clique_plus_isolated") for m in matches)


def mur_lower(g: Graph, budget: Budget = DEFAULT_BUDGET) -> tuple[int, Certificate, bool]:
    """Best certified lower bound; also reports whether searches were exhaustive."""
    n = g.n
    if n == 0:
        return 0, Certificate("trivial"), True
    matches = recognize_family(g)
    exhausted = False
    best = 0
    cert = Certificate("trivial")

    def consider(value: int, c: Certificate):
        nonlocal best, cert
        if value > best:
            best, cert = value, c

    for comp_side in (False, True):
        side = g.complement() if comp_side else g
        res = best_induced_path_forest(side, budget.search_nodes)
        if not res.exact:
            exhausted = True
        if res.witness is not None:
            consider(res.witness.bound, _forest_certificate(res, comp_side))
        d = diameter(side)
        if d != inf and d >= 2:
            consider(int(d) - 1, Certificate("diameter", {"diameter": int(d), "on_complement": comp_side}))

    if not _in_rank0_family(matches):
        value = 1 if _in_rank1_family(matches) else 2
        consider(value, Certificate("not_in_rank01_families", {"bound": value}))
    return best, cert, exhausted


# ---------------------------------------------------------------------------
# family formulas


def regular_mur(g: Graph) -> int:
    """Exact value for a regular graph from adjacency eigenvalue multiplicities."""
    degs = g.degrees()
    if not degs:
        return 0
    r = degs[0]
    if any(d != r for d in degs):
        raise EngineError("regular_mur requires a regular graph")
    n = g.n
    adj = [[Fraction(1 if g.has_edge(i, j) else 0) for j in range(n)] for i in range(n)]
    cp = charpoly(adj)
    c = components(g)[0]
    mult_r, rest = root_multiplicity(cp, Fraction(r))
    if mult_r != c:
        raise EngineError("degree eigenvalue multiplicity does not match components")
    exps = [e for _, e in squarefree_decomposition(rest)] if rest.degree >= 1 else []
    m = max(exps, default=0)
    if c == 1:
        return n - (m + 1)
    # Disconnected case: apply the connected-regular formula to the complement.
    # Orthogonally to the all-ones vector the degree eigenvalue survives with
    # multiplicity c-1, so the relevant maximum multiplicity is max(m, c-1).
    return n - 1 - max(m, c - 1)


def _apex_family_value(r: int, s: int) -> Optional[int]:
    if s == 0 or (s == 1 and r == 0):
        return 0
    if r <= 1:
        return 1
    if s - r + 1 != 0:
        return 2
    if s >= 3:
        return 3
    return None


def family_mur(g: Graph) -> Optional[tuple[int, Certificate]]:
    """Exact value with a theorem-backed certificate, when a recognizer fires."""
    matches = recognize_family(g)

    def cert(match: FamilyMatch, value: int) -> Certificate:
        return Certificate(
            "family_formula",
            {"family": match.describe(), "value": value},
        )

    for m in matches:
        if m.kind in ("complete", "empty"):
            return 0, cert(m, 0)
    for m in matches:
        if m.kind in ("two_cliques", "clique_plus_isolated"):
            return 1, cert(m, 1)
    for m in matches:
        if m.kind == "union_of_cliques":
            sizes = m.params["sizes"]
            if len(sizes) >= 2 and all(s > 1 for s in sizes):
                return len(sizes) - 1, cert(m, len(sizes) - 1)
    for m in matches:
        if m.kind == "clique_isolated_apex":
            value = _apex_family_value(m.params["r"], m.params["s"])
            if value is not None:
                return value, cert(m, value)
    for m in matches:
        if m.kind == "regular":
            side = g.complement() if m.complemented else g
            value = regular_mur(side)
            return value, cert(m, value)
    for m in matches:
        if m.kind == "path":
            n = m.params["n"]
            if n >= 3:
                return n - 2, cert(m, n - 2)
    return None


# ---------------------------------------------------------------------------
# upper bounds


def _laplacian_max_multiplicity(g: Graph) -> int:
    """Maximum multiplicity among the nonzero Laplacian eigenvalues (connected g)."""
    cp = charpoly(laplacian(g))
    zeros, rest = root_multiplicity(cp, Fraction(0))
    if rest.degree < 1:
        return 0
    return max(e for _, e in squarefree_decomposition(rest))


def structural_upper(g: Graph, use_families: bool = True) -> tuple[int, Certificate]:
    """Best theorem-backed upper bound that needs no parameter search."""
    n = g.n
    if n == 0:
        return 0, Certificate("trivial")
    if use_families:
        fam = family_mur(g)
        if fam is not None:
            return fam
    best = None
    cert = None

    def consider(value: int, c: Certificate):
        nonlocal best, cert
        if best is None or value < best:
            best, cert = value, c

    if n >= 2:
        consider(n - 2, Certificate("order_bound", {}))
    for comp_side in (False, True):
        side = g.complement() if comp_side else g
        c = components(side)[0]
        consider(n - c, Certificate("component_bound", {"components": c, "on_complement": comp_side}))
        if c == 1 and n >= 2:
            m = _laplacian_max_multiplicity(side)
            if m >= 1:
                consider(
                    n - m - 1,
                    Certificate(
                        "laplacian_multiplicity",
                        {"multiplicity": m, "on_complement": comp_side},
                    ),
                )
    assert best is not None
    return best, cert


def _param_cert(p: ParamPoint, rank: int) -> Certificate:
    return Certificate(
        "explicit_params",
        {
            "beta": str(p.beta),
            "gamma": str(p.gamma),
            "delta": str(p.delta),
            "rank": rank,
        },
    )


def candidate_params(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Iterator[ParamPoint]:
    """Deduplicated rational parameter points, structured ones first."""
    n = g.n
    seen: set[tuple] = set()
    emitted = 0

    def emit(p: ParamPoint):
        nonlocal emitted
        key = (p.beta, p.gamma, p.delta)
        if key in seen:
            return None
        seen.add(key)
        emitted += 1
        return p

    def capped() -> bool:
        return budget.max_candidates is not None and emitted >= budget.max_candidates

    def stream() -> Iterator[ParamPoint]:
        for preset in PRESETS:
            yield preset.normalized

        degs = sorted(set(g.degrees()))
        deltas = [Fraction(0), Fraction(1), Fraction(-1)]
        for d in degs:
            # 1/(d-1) matches the clique construction delta = 1/(r-1) with
            # r = d + 1; 1/d covers the same with r = d.
            if d >= 2:
                deltas.extend((Fraction(1, d - 1), Fraction(-1, d - 1)))
            if d >= 1:
                deltas.extend((Fraction(1, d), Fraction(-1, d)))
        gammas = [Fraction(0), Fraction(-1), Fraction(-1, 2)]
        for delta in deltas:
            for gamma in gammas:
                yield ParamPoint(Fraction(0), gamma, delta)
                for d in degs:
                    yield ParamPoint(-gamma - delta * d, gamma, delta)

        # Laplacian-eigenvalue shifts, on the graph and (mapped back) on the
        # complement.
        for comp_side in (False, True):
            side = g.complement() if comp_side else g
            if side.n < 1:
                continue
            cp = charpoly(laplacian(side))
            for lam in rational_roots(cp):
                if lam == 0:
                    continue
                for p in (
                    ParamPoint(lam, Fraction(-lam, n), Fraction(-1)),
                    ParamPoint(-lam, Fraction(lam, n), Fraction(1)),
                ):
                    yield complement_params(side, p) if comp_side else p

        # Reciprocal-of-order style points that close the near-path families.
        for m in (n - 1, n, n + 1):
            if m >= 1:
                yield ParamPoint(Fraction(1), Fraction(-1, m), Fraction(-1))
        for k in range(1, n // 2 + 1):
            yield ParamPoint(Fraction(0), Fraction(-1, 2 * k), Fraction(0))
            yield ParamPoint(Fraction(0), Fraction(0), Fraction(-1, 2 * k))

        values = sorted(
            {
                Fraction(p, q)
                for q in range(1, budget.grid_den + 1)
                for p in range(-budget.grid_num, budget.grid_num + 1)
            }
        )
        for beta in values:
            for gamma in values:
                for delta in values:
                    yield ParamPoint(beta, gamma, delta)

        rng = random.Random(budget.seed)
        for _ in range(budget.random_points):
            yield ParamPoint(
                Fraction(rng.randint(-8, 8), rng.randint(1, 6)),
                Fraction(rng.randint(-8, 8), rng.randint(1, 6)),
                Fraction(rng.randint(-8, 8), rng.randint(1, 6)),
            )

    for p in stream():
        if capped():
            return
        out = emit(p)
        if out is not None:
            yield out


def algebraic_eigen_candidates(g: Graph) -> Iterator[tuple[AlgebraicContext, ParamPoint]]:
    """Laplacian-shift points at irrational eigenvalues, one per squarefree factor.

    Every root of each factor is a genuine (real) Laplacian eigenvalue, so the
    rank at any branch of such a point is a valid upper bound.
    """
    n = g.n
    if n == 0:
        return
    cp = charpoly(laplacian(g))
    _, rest = root_multiplicity(cp, Fraction(0))
    if rest.degree < 1:
        return
    for factor, _ in squarefree_decomposition(rest):
        if factor.degree < 2:
            continue
        ctx = AlgebraicContext(factor)
        theta = ctx.generator()
        yield ctx, ParamPoint(theta, theta * Fraction(-1, n), ctx.element(-1))


def _alg_param_cert(ctx: AlgebraicContext, branch: Poly, p: ParamPoint, rank: int) -> Certificate:
    def coeffs(s) -> list[str]:
        rep = s.rep if isinstance(s, AlgebraicNumber) else Poly((s,))
        return [str(c) for c in rep.coeffs]

    return Certificate(
        "explicit_params",
        {
            "modulus": [str(c) for c in ctx.modulus.coeffs],
            "branch": [str(c) for c in branch.coeffs],
            "beta": coeffs(p.beta),
            "gamma": coeffs(p.gamma),
            "delta": coeffs(p.delta),
            "rank": rank,
            "source": "laplacian_eigenvalue",
        },
    )


def _refine_algebraic(g, lower, upper, ucert):
    from .matrices import rank_algebraic

    for ctx, p in algebraic_eigen_candidates(g):
        if upper <= lower:
            break
        for branch, r in rank_algebraic(universal_matrix(g, p), ctx):
            if r < upper:
                upper, ucert = r, _alg_param_cert(ctx, branch, p, r)
    return upper, ucert


def mur_upper(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    stop_at: Optional[int] = None,
    use_candidates: bool = True,
) -> tuple[int, Certificate]:
    """Best certified upper bound, refining structural bounds by search."""
    best, cert = structural_upper(g)
    if not use_candidates or (stop_at is not None and best <= stop_at):
        return best, cert
    for p in candidate_params(g, budget):
        r = rank_rational(universal_matrix(g, p))
        if r < best:
            best, cert = r, _param_cert(p, r)
            if stop_at is not None and best <= stop_at:
                break
    return best, cert


# ---------------------------------------------------------------------------
# the pipeline


def compute_mur(
    g: Graph, budget: Budget = DEFAULT_BUDGET, use_families: bool = True
) -> MurResult:
    """Certified interval (exact whenever the two bounds meet)."""
    n = g.n
    if n == 0:
        t = Certificate("trivial")
        return MurResult(0, t, 0, t)
    lower, lcert, exhausted = mur_lower(g, budget)
    fam = family_mur(g) if use_families else None
    if fam is not None:
        value, ucert = fam
        if lower > value:
            raise EngineError(
                f"lower bound {lower} exceeds family value {value}: unsound certificate"
            )
        if lower < value:
            lcert = Certificate("family_formula", dict(ucert.data))
            lower = value
        return MurResult(value, lcert, value, ucert, budget_exhausted=exhausted)
    upper, ucert = structural_upper(g, use_families=use_families)
    if lower > upper:
        raise EngineError(f"bounds crossed: lower {lower} > upper {upper}")
    if lower < upper:
        for p in candidate_params(g, budget):
            r = rank_rational(universal_matrix(g, p))
            if r < upper:
                upper, ucert = r, _param_cert(p, r)
                if upper <= lower:
                    break
        if lower < upper and budget.algebraic:
            upper, ucert = _refine_algebraic(g, lower, upper, ucert)
        if lower > upper:
            raise EngineError("candidate rank fell below the certified lower bound")
    return MurResult(lower, lcert, upper, ucert, budget_exhausted=exhausted)


@dataclass
class SpreadResult:
    vertex: int
    lower: int
    upper: int
    whole: MurResult
    deleted: MurResult

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


def spread_bounds(g: Graph, v: int) -> tuple[int, int]:
    """The proven a-priori interval for the spread at v."""
    d = g.degree(v)
    n = g.n
    return max(-d, -(n - d - 1)), min(d + 2, n - d + 1)


def mur_spread(g: Graph, v: int, budget: Budget = DEFAULT_BUDGET) -> SpreadResult:
    """mur(G) - mur(G minus v), exact when both sides are exact."""
    if g.n < 2:
        raise EngineError("spread needs at least two vertices")
    if not 0 <= v < g.n:
        raise EngineError(f"vertex {v} out of range")
    whole = compute_mur(g, budget)
    deleted = compute_mur(g.delete_vertex(v), budget)
    lo = whole.lower - deleted.upper
    hi = whole.upper - deleted.lower
    blo, bhi = spread_bounds(g, v)
    if hi < blo or lo > bhi:
        raise EngineError(
            f"spread interval [{lo}, {hi}] misses the proven bounds [{blo}, {bhi}]"
        )
    return SpreadResult(v, lo, hi, whole, deleted)

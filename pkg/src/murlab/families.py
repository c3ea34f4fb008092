"""Recognizers for the graph families with known exact universal rank."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, components


@dataclass(frozen=True)
class FamilyMatch:
    kind: str
    params: dict
    complemented: bool = False

    def describe(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        tag = f"{self.kind}({inner})" if inner else self.kind
        return f"complement:{tag}" if self.complemented else tag


def _is_clique(g: Graph, verts: list[int]) -> bool:
    return all(g.has_edge(u, v) for i, u in enumerate(verts) for v in verts[i + 1:])


def _clique_components(g: Graph) -> list[int] | None:
    """Component sizes if every component is a clique, else None."""
    _, parts = components(g)
    sizes = []
    for part in parts:
        if not _is_clique(g, part):
            return None
        sizes.append(len(part))
    return sorted(sizes, reverse=True)


def _matches_one_side(g: Graph) -> list[FamilyMatch]:
    out: list[FamilyMatch] = []
    n = g.n
    ecount = g.edge_count()
    degs = g.degrees()

    if ecount == n * (n - 1) // 2:
        out.append(FamilyMatch("complete", {"n": n}))
    if ecount == 0:
        out.append(FamilyMatch("empty", {"n": n}))

    sizes = _clique_components(g)
    if sizes is not None:
        nontrivial = [s for s in sizes if s > 1]
        isolated = len(sizes) - len(nontrivial)
        if len(sizes) == 2 and n > 2:
            out.append(FamilyMatch("two_cliques", {"r": sizes[0], "s": sizes[1]}))
        if len(nontrivial) == 1 and isolated >= 1 and nontrivial[0] >= 2:
            out.append(
                FamilyMatch("clique_plus_isolated", {"r": nontrivial[0], "s": isolated})
            )
        if len(sizes) >= 2 and not isolated:
            out.append(FamilyMatch("union_of_cliques", {"sizes": tuple(sizes)}))

    # Apex over a clique plus isolated vertices: some dominating vertex whose
    # removal leaves clique components with at most one of size >= 2.
    for v in range(n):
        if degs[v] == n - 1 and n >= 2:
            rest = g.delete_vertex(v)
            rest_sizes = _clique_components(rest)
            if rest_sizes is None:
                continue
            nontrivial = [s for s in rest_sizes if s > 1]
            if len(nontrivial) > 1:
                continue
            if nontrivial:
                r = nontrivial[0]
                s = len(rest_sizes) - 1
            else:
                # All isolated: take one as the degenerate clique when present.
                r = 1 if rest_sizes else 0
                s = len(rest_sizes) - r
            out.append(FamilyMatch("clique_isolated_apex", {"r": r, "s": s}))
            break

    if n >= 1 and ecount == n - 1 and sorted(degs) == [1] * min(2, n - 1) + [2] * max(0, n - 2):
        # Degree profile of a path; connectivity follows from the edge count.
        if components(g)[0] == 1:
            out.append(FamilyMatch("path", {"n": n}))

    if degs and degs.count(degs[0]) == n:
        r = degs[0]
        out.append(FamilyMatch("regular", {"degree": r}))
        c, parts = components(g)
        if r == 2 and len({len(p) for p in parts}) == 1:
            length = len(parts[0])
            if length >= 3:
                if c == 1:
                    out.append(FamilyMatch("cycle", {"n": length}))
                out.append(FamilyMatch("equal_cycles", {"k": c, "n": length}))
    return out


def recognize_family(g: Graph) -> list[FamilyMatch]:
    """All family matches on g and on its complement."""
    out = list(_matches_one_side(g))
    out.extend(
        FamilyMatch(m.kind, m.params, complemented=True)
        for m in _matches_one_side(g.complement())
    )
    return out

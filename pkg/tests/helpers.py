"""Shared test utilities: small random graphs and a brute-force packing oracle."""

from __future__ import annotations

from hypothesis import strategies as st

from tritile.graphs import ColouredGraph, MonoClique, complete_colouring


def small_graphs(max_n: int = 7, r: int = 2) -> st.SearchStrategy[ColouredGraph]:
    """Random partial r-colourings on up to ``max_n`` vertices."""

    def build(n: int, code: int, keep: int) -> ColouredGraph:
        g = complete_colouring(n, r, code % (r ** (n * (n - 1) // 2)))
        edges = [e for i, e in enumerate(g.edges()) if (keep >> i) & 1]
        return ColouredGraph(n, r, edges)

    return st.builds(
        build,
        st.integers(min_value=1, max_value=max_n),
        st.integers(min_value=0),
        st.integers(min_value=0),
    )


def oracle_max_packing(triangles: list[MonoClique]) -> int:
    """Largest disjoint subfamily, by enumerating every disjoint subfamily."""
    best = 0

    def rec(start: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        for j in range(start, len(triangles)):
            if used & triangles[j].mask == 0:
                rec(j + 1, used | triangles[j].mask, count + 1)

    rec(0, 0, 0)
    return best

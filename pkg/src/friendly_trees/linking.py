"""Side and linking predicates on edge sets of one tree.

Two evaluators are kept on purpose. ``same_side``/``unlinked`` decide by
crossing parities against precomputed root paths and sit on the solver's hot
path; the ``*_bruteforce`` forms re-walk an explicit path for every endpoint
pair and stay, permanently, the oracle the fast forms are tested against.
"""

from __future__ import annotations

from itertools import combinations

from .tree import Tree, path_edges


def _check_edge_set(t: Tree, mask: int, name: str) -> None:
    if mask < 0 or mask >> t.edge_count:
        raise ValueError(f"{name} has edge ids outside 0..{t.edge_count - 1}")


def endpoints(t: Tree, mask: int) -> tuple[int, ...]:
    """Sorted distinct endpoints of the edges in ``mask``."""
    seen: set[int] = set()
    m = mask
    while m:
        low = m & -m
        m ^= low
        u, v = t.edges[low.bit_length() - 1]
        seen.add(u)
        seen.add(v)
    return tuple(sorted(seen))


def same_side(t: Tree, p: int, q: int) -> bool:
    """Whether ``p`` lies on one side of ``q``: the two sets share no edge and
    every tree path between endpoints of ``p``'s edges crosses ``q`` an even
    number of times.

    Deleting ``q`` splits the tree; coloring each vertex by the parity of
    ``q``-edges on its root path makes the condition "all endpoints of ``p``
    get one color", which is what is checked here.
    """
    _check_edge_set(t, p, "p")
    _check_edge_set(t, q, "q")
    if p & q:
        return False
    if p == 0 or q == 0:
        return True
    rp = t.root_path_masks
    ends = t.edges
    first = -1
    m = p
    while m:
        low = m & -m
        m ^= low
        u, v = ends[low.bit_length() - 1]
        cu = (rp[u] & q).bit_count() & 1
        if first < 0:
            first = cu
        elif cu != first:
            return False
        if ((rp[v] & q).bit_count() & 1) != first:
            return False
    return True


def unlinked(t: Tree, p: int, q: int) -> bool:
    """Whether ``p`` and ``q`` are each on the same side of the other."""
    return same_side(t, p, q) and same_side(t, q, p)


def same_side_bruteforce(t: Tree, p: int, q: int) -> bool:
    """Oracle form of ``same_side``: materialize the path for every unordered
    pair of distinct endpoints of ``p`` (pairs from one edge included) and
    count its ``q`` edges directly."""
    _check_edge_set(t, p, "p")
    _check_edge_set(t, q, "q")
    if p & q:
        return False
    for x, y in combinations(endpoints(t, p), 2):
        if (path_edges(t, x, y) & q).bit_count() & 1:
            return False
    return True


def unlinked_bruteforce(t: Tree, p: int, q: int) -> bool:
    return same_side_bruteforce(t, p, q) and same_side_bruteforce(t, q, p)

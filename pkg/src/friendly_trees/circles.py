"""Dual trees of systems of disjoint circles on the sphere.

Up to homeomorphism, a union of disjoint circles is exactly its containment
structure, so circle systems come in as nesting forests: each circle knows
the smallest circle properly containing it, or is a root. The dual tree has
one vertex per complementary region (the outer region plus the region just
inside every circle) and one edge per circle, joining the two regions the
circle separates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree


@dataclass(frozen=True)
class NestingForest:
    """Containment forest of disjoint circles; ``parents[i]`` is the id of
    the smallest circle enclosing circle ``i``, or ``None`` for outermost
    circles."""

    parents: tuple[int | None, ...]

    def __post_init__(self) -> None:
        k = len(self.parents)
        for i, p in enumerate(self.parents):
            if p is None:
                continue
            if not (0 <= p < k):
                raise ValueError(f"circle {i}: dangling parent id {p}")
            if p == i:
                raise ValueError(f"circle {i} contains itself")
        for i in range(k):
            seen = set()
            v: int | None = i
            while v is not None:
                if v in seen:
                    raise ValueError(f"containment cycle through circle {i}")
                seen.add(v)
                v = self.parents[v]

    @property
    def circle_count(self) -> int:
        return len(self.parents)


def dual_tree(forest: NestingForest) -> Tree:
    """The region-adjacency tree of the circle system.

    Vertex 0 is the outer region; circle ``i``'s inside region is vertex
    ``i + 1``; edge ``i`` joins circle ``i``'s region to its parent's region.
    One edge per circle, so the tree has ``circle_count`` edges.
    """
    edges = [
        (0 if p is None else p + 1, i + 1)
        for i, p in enumerate(forest.parents)
    ]
    return Tree(forest.circle_count + 1, edges)


def circle_count_of_tree(t: Tree) -> int:
    """Circles in any system whose dual is ``t``: one per edge."""
    return t.edge_count


def parse_nesting(text: str) -> NestingForest:
    """Parse the nesting file format: one ``C <id> <parent-id|->`` line per
    circle, ids dense from 0. An empty file is the empty system."""
    entries: dict[int, int | None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] != "C":
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
        try:
            cid = int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: bad circle id {fields[1]!r}") from None
        if cid in entries:
            raise ValueError(f"line {lineno}: duplicate circle id {cid}")
        if fields[2] == "-":
            entries[cid] = None
        else:
            try:
                entries[cid] = int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: bad parent id {fields[2]!r}") from None
    k = len(entries)
    missing = [i for i in range(k) if i not in entries]
    if missing:
        raise ValueError(f"circle ids are not dense from 0: missing {missing[0]}")
    return NestingForest(tuple(entries[i] for i in range(k)))

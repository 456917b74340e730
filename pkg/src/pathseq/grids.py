"""Parameter grids over each family, used by ``verify`` and the test suite."""

from __future__ import annotations

from typing import Iterator

from pathseq.generators import (BranchSequence, Complete, CompleteBipartite, Cycle, FamilySpec,
                                GeneralizedStarlike, Kite, Lollipop, Path, Star, Starlike)


def partitions(total: int, max_part: int | None = None) -> Iterator[list[int]]:
    """Partitions of ``total`` into positive parts, largest part first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield []
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield [first] + rest


def branch_sequences(max_vertices: int, min_m: int = 1) -> Iterator[BranchSequence]:
    """Every branch multiset whose tree has at most ``max_vertices`` vertices."""
    for edges in range(1, max_vertices):
        for parts in partitions(edges):
            if len(parts) >= min_m:
                yield BranchSequence.from_branch_lengths(parts)


def starlike_grid(max_n: int = 12) -> list[Starlike]:
    return [Starlike(b) for b in branch_sequences(max_n, min_m=3)]


def generalized_starlike_grid(n1_max: int = 5, n2_max: int = 8) -> list[GeneralizedStarlike]:
    return [GeneralizedStarlike(n1, b) for n1 in range(3, n1_max + 1)
            for b in branch_sequences(n2_max)]


def family_grid(kind: str, max_param: int | None = None, max_n: int | None = None) -> list[FamilySpec]:
    """Grid for one family.

    ``max_param`` bounds the size parameters (n, or n1 and n2); ``max_n``
    bounds the vertex count of the starlike part for branch families.
    Defaults reproduce the acceptance grids.
    """
    if kind == "complete":
        return [Complete(n) for n in range(1, (max_param or 10) + 1)]
    if kind == "complete-bipartite":
        top = max_param or 6
        return [CompleteBipartite(a, b) for a in range(1, top + 1) for b in range(a, top + 1)]
    if kind == "path":
        return [Path(n) for n in range(1, (max_param or 12) + 1)]
    if kind == "cycle":
        return [Cycle(n) for n in range(3, (max_param or 12) + 1)]
    if kind == "star":
        return [Star(n) for n in range(3, (max_param or 12) + 1)]
    if kind == "kite":
        top = max_param or 7
        return [Kite(a, b) for a in range(2, top + 1) for b in range(2, top + 1)]
    if kind == "lollipop":
        top = max_param or 8
        return [Lollipop(a, b) for a in range(3, top + 1) for b in range(2, top + 1)]
    if kind == "starlike":
        return starlike_grid(max_n or max_param or 12)
    if kind == "genstar":
        return generalized_starlike_grid(max_param or 5, max_n or 8)
    raise ValueError(f"unknown family kind {kind!r}")


ACCEPTANCE_KINDS = ("complete", "complete-bipartite", "path", "cycle", "star", "kite", "lollipop",
                    "starlike", "genstar")


def acceptance_grid() -> list[FamilySpec]:
    return [spec for kind in ACCEPTANCE_KINDS for spec in family_grid(kind)]

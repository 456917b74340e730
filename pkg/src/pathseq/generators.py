"""Parameter types for the graph families and deterministic constructors.

Labeling conventions used by :func:`build`:

* complete: vertices ``0..n-1``, all adjacent
* complete bipartite: parts ``0..n1-1`` and ``n1..n1+n2-1``
* path ``0-1-...-(n-1)``; cycle closes it with ``(n-1)-0``
* star, starlike, generalized starlike: the center (coalescence vertex) is 0;
  branches are laid out in nondecreasing length order, each branch numbered
  consecutively outward
* kite, lollipop: the clique or cycle occupies ``0..n1-1`` with the attachment
  vertex at 0; the pendant path continues ``n1..n1+n2-2``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterable, Union

from pathseq.graph_core import Graph


class SpecError(ValueError):
    """Family parameters violate an invariant."""


@dataclass(frozen=True)
class BranchSequence:
    """Branch-length multiplicities ``(L_1, ..., L_t)`` of a starlike tree.

    ``lengths[i]`` is the number of branches of length ``i + 1``.
    """

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if not self.lengths:
            raise SpecError("branch sequence must have t >= 1 entries")
        if any(x < 0 for x in self.lengths):
            raise SpecError("branch multiplicities must be nonnegative")
        if self.lengths[-1] < 1:
            raise SpecError("trailing zero in branch sequence (L_t must be >= 1)")

    @classmethod
    def from_branch_lengths(cls, branch_lengths: Iterable[int]) -> BranchSequence:
        """Build from the multiset of individual branch lengths."""
        items = list(branch_lengths)
        if not items or min(items) < 1:
            raise SpecError("branch lengths must be positive and nonempty")
        counts = [0] * max(items)
        for b in items:
            counts[b - 1] += 1
        return cls(tuple(counts))

    def L(self, i: int) -> int:
        """Number of branches of length ``i`` (0 outside ``1..t``)."""
        return self.lengths[i - 1] if 1 <= i <= len(self.lengths) else 0

    @property
    def t(self) -> int:
        return len(self.lengths)

    @property
    def m(self) -> int:
        return sum(self.lengths)

    @property
    def n(self) -> int:
        """Vertex count of the tree, center included."""
        return 1 + sum(i * c for i, c in enumerate(self.lengths, start=1))

    def branch_lengths(self) -> list[int]:
        return [i for i, c in enumerate(self.lengths, start=1) for _ in range(c)]

    @property
    def t1(self) -> int:
        return self.t

    @property
    def t2(self) -> int:
        """Second-longest branch length in the multiset sense; 0 with one branch."""
        bl = self.branch_lengths()
        return bl[-2] if len(bl) >= 2 else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.lengths)) + ")"


@dataclass(frozen=True)
class Complete:
    n: int
    kind: ClassVar[str] = "complete"

    def __post_init__(self) -> None:
        _require(self.n >= 1, "complete graph needs n >= 1")


@dataclass(frozen=True)
class CompleteBipartite:
    n1: int
    n2: int
    kind: ClassVar[str] = "complete-bipartite"

    def __post_init__(self) -> None:
        _require(self.n1 >= 1, "complete bipartite graph needs n1 >= 1")
        _require(self.n1 <= self.n2, "complete bipartite graph needs n1 <= n2")


@dataclass(frozen=True)
class Path:
    n: int
    kind: ClassVar[str] = "path"

    def __post_init__(self) -> None:
        _require(self.n >= 1, "path needs n >= 1")


@dataclass(frozen=True)
class Cycle:
    n: int
    kind: ClassVar[str] = "cycle"

    def __post_init__(self) -> None:
        _require(self.n >= 3, "cycle needs n >= 3")


@dataclass(frozen=True)
class Star:
    n: int
    kind: ClassVar[str] = "star"

    def __post_init__(self) -> None:
        _require(self.n >= 3, "star needs n >= 3")

    def as_starlike(self) -> Starlike:
        """The same tree as a starlike spec (needs n >= 4, i.e. m >= 3)."""
        return Starlike(BranchSequence((self.n - 1,)))


@dataclass(frozen=True)
class Starlike:
    branches: BranchSequence
    kind: ClassVar[str] = "starlike"

    def __post_init__(self) -> None:
        _require(self.branches.m >= 3, "starlike tree needs center degree m >= 3")


@dataclass(frozen=True)
class Kite:
    n1: int
    n2: int
    kind: ClassVar[str] = "kite"

    def __post_init__(self) -> None:
        _require(self.n1 >= 2, "kite needs n1 >= 2")
        _require(self.n2 >= 2, "kite needs n2 >= 2")


@dataclass(frozen=True)
class Lollipop:
    n1: int
    n2: int
    kind: ClassVar[str] = "lollipop"

    def __post_init__(self) -> None:
        _require(self.n1 >= 3, "lollipop needs n1 >= 3")
        _require(self.n2 >= 2, "lollipop needs n2 >= 2")


@dataclass(frozen=True)
class GeneralizedStarlike:
    n1: int
    branches: BranchSequence
    kind: ClassVar[str] = "genstar"

    def __post_init__(self) -> None:
        _require(self.n1 >= 3, "generalized starlike tree needs n1 >= 3")
        _require(self.coalescence_degree > 2,
                 "generalized starlike tree needs coalescence degree n1-1+m > 2")

    @property
    def n2(self) -> int:
        return self.branches.n

    @property
    def coalescence_degree(self) -> int:
        return self.n1 - 1 + self.branches.m


FamilySpec = Union[Complete, CompleteBipartite, Path, Cycle, Star, Starlike, Kite, Lollipop,
                   GeneralizedStarlike]

FAMILY_KINDS = ("complete", "complete-bipartite", "path", "cycle", "star", "starlike", "kite",
                "lollipop", "genstar")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SpecError(message)


def vertex_count(spec: FamilySpec) -> int:
    if isinstance(spec, (Complete, Path, Cycle, Star)):
        return spec.n
    if isinstance(spec, CompleteBipartite):
        return spec.n1 + spec.n2
    if isinstance(spec, Starlike):
        return spec.branches.n
    if isinstance(spec, (Kite, Lollipop)):
        return spec.n1 + spec.n2 - 1
    if isinstance(spec, GeneralizedStarlike):
        return spec.n1 + spec.n2 - 1
    raise TypeError(f"not a family spec: {spec!r}")


def _attach_branches(edges: list[tuple[int, int]], root: int, first: int,
                     branches: BranchSequence) -> int:
    nxt = first
    for length in branches.branch_lengths():
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def build(spec: FamilySpec) -> Graph:
    n = vertex_count(spec)
    edges: list[tuple[int, int]] = []
    if isinstance(spec, Complete):
        edges = [(u, v) for v in range(n) for u in range(v)]
    elif isinstance(spec, CompleteBipartite):
        edges = [(u, spec.n1 + w) for u in range(spec.n1) for w in range(spec.n2)]
    elif isinstance(spec, Path):
        edges = [(v, v + 1) for v in range(n - 1)]
    elif isinstance(spec, Cycle):
        edges = [(v, (v + 1) % n) for v in range(n)]
    elif isinstance(spec, Star):
        edges = [(0, v) for v in range(1, n)]
    elif isinstance(spec, Starlike):
        _attach_branches(edges, 0, 1, spec.branches)
    elif isinstance(spec, (Kite, Lollipop)):
        if isinstance(spec, Kite):
            edges = [(u, v) for v in range(spec.n1) for u in range(v)]
        else:
            edges = [(v, (v + 1) % spec.n1) for v in range(spec.n1)]
        prev = 0
        for v in range(spec.n1, n):
            edges.append((prev, v))
            prev = v
    elif isinstance(spec, GeneralizedStarlike):
        edges = [(u, v) for v in range(spec.n1) for u in range(v)]
        _attach_branches(edges, 0, spec.n1, spec.branches)
    else:
        raise TypeError(f"not a family spec: {spec!r}")
    return Graph.from_edges(n, edges)


def rho(spec: FamilySpec) -> int:
    """Length of a longest path in the family member."""
    if isinstance(spec, (Complete, Path, Cycle)):
        return spec.n - 1
    if isinstance(spec, CompleteBipartite):
        return 2 * spec.n1 - 1 if spec.n1 == spec.n2 else 2 * spec.n1
    if isinstance(spec, Star):
        return 2
    if isinstance(spec, Starlike):
        return spec.branches.t1 + spec.branches.t2
    if isinstance(spec, (Kite, Lollipop)):
        return spec.n1 + spec.n2 - 2
    if isinstance(spec, GeneralizedStarlike):
        b = spec.branches
        return max(b.t1 + spec.n1 - 1, b.t1 + b.t2)
    raise TypeError(f"not a family spec: {spec!r}")


def family_kind(spec: FamilySpec) -> str:
    """Kind used for within-family comparison; a star is a starlike tree."""
    return "starlike" if isinstance(spec, Star) else spec.kind


def describe(spec: FamilySpec) -> str:
    if isinstance(spec, (Complete, Path, Cycle, Star)):
        return f"{spec.kind} n={spec.n}"
    if isinstance(spec, (CompleteBipartite, Kite, Lollipop)):
        return f"{spec.kind} n1={spec.n1} n2={spec.n2}"
    if isinstance(spec, Starlike):
        return f"starlike L={spec.branches}"
    if isinstance(spec, GeneralizedStarlike):
        return f"genstar n1={spec.n1} L={spec.branches}"
    raise TypeError(f"not a family spec: {spec!r}")

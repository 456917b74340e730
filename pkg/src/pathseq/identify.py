"""Recover family parameters from a path sequence.

Every route inverts the cheap parameters from ``P_0``, ``P_1`` and ``P_2``,
then confirms the candidate by recomputing its whole sequence with
:func:`pathseq.closed_forms.sequence_of`.  A returned match therefore always
reproduces the query exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Sequence

from pathseq.closed_forms import _generalized_starlike_count, _starlike_count, sequence_of
from pathseq.generators import (FAMILY_KINDS, BranchSequence, Complete, CompleteBipartite, Cycle,
                                FamilySpec, GeneralizedStarlike, Kite, Lollipop, Path, SpecError,
                                Star, Starlike, family_kind)

log = logging.getLogger(__name__)

DIRECT = "direct-inversion"
SEARCH = "parameter-search"
PRUNED = "pruned-branch-search"


class SequenceError(ValueError):
    """The query is not a well-formed path sequence."""


class FamilyMismatchError(TypeError):
    """Two specs from different families were compared."""


@dataclass
class IdentifyResult:
    """Outcome of :func:`identify`.

    ``survivors`` lists every candidate that reproduced the query; ``match`` is
    set only when there is exactly one.  For starlike recovery ``divisions``
    records ``(h, remainder)`` for each step that solved for ``L_{h-2}``.
    """

    match: FamilySpec | None
    method: str
    candidates_examined: int = 0
    survivors: list[FamilySpec] = field(default_factory=list)
    divisions: list[tuple[int, int]] = field(default_factory=list)


def validate_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if not seq:
        raise SequenceError("path sequence is empty")
    for i, x in enumerate(seq):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise SequenceError(f"entry {i} is not a nonnegative integer: {x!r}")
    if seq[0] >= 1 and seq[-1] == 0:
        raise SequenceError("last entry must be nonzero (the sequence ends at the longest path)")
    if len(seq) > 1 and seq[0] == 0:
        raise SequenceError("a graph with no vertices has no paths of positive length")
    return seq


def _at(seq: tuple[int, ...], h: int) -> int:
    return seq[h] if h < len(seq) else 0


def _root_of_half_quadratic(value: int, linear: int) -> int | None:
    """Integer ``x`` with ``x*x + linear*x == 2*value`` and ``x`` on the rising side."""
    disc = linear * linear + 8 * value
    if disc < 0:
        return None
    r = isqrt(disc)
    if r * r != disc or (r - linear) % 2:
        return None
    return (r - linear) // 2


def _verified(spec_factory, seq: tuple[int, ...]) -> FamilySpec | None:
    try:
        spec = spec_factory()
    except SpecError:
        return None
    return spec if sequence_of(spec) == seq else None


def _one(found: FamilySpec | None, method: str, examined: int) -> IdentifyResult:
    return IdentifyResult(found, method, examined, [found] if found else [])


def _identify_starlike(seq: tuple[int, ...]) -> IdentifyResult:
    n = seq[0]
    if len(seq) < 3:
        return IdentifyResult(None, DIRECT)
    # P_2 = m^2/2 - 3m/2 + n - 1
    m = _root_of_half_quadratic(seq[2] - n + 1, -3)
    if m is None or m < 3:
        return IdentifyResult(None, DIRECT)
    L: list[int] = []
    divisions: list[tuple[int, int]] = []
    h = 3
    while sum(L) < m or sum(i * x for i, x in enumerate(L, 1)) < n - 1:
        if sum(L) > m or sum(i * x for i, x in enumerate(L, 1)) > n - 1 or h > n + 2:
            return IdentifyResult(None, DIRECT, len(divisions), divisions=divisions)
        # P_h is affine in L_{h-2} with slope 2 - m once n and m are fixed
        base = _starlike_count(n, m, L + [0], h)
        q, r = divmod(_at(seq, h) - base, 2 - m)
        divisions.append((h, r))
        if r or q < 0:
            return IdentifyResult(None, DIRECT, len(divisions), divisions=divisions)
        L.append(q)
        h += 1
    while L and L[-1] == 0:
        L.pop()
    found = _verified(lambda: Starlike(BranchSequence(tuple(L))), seq) if L else None
    result = _one(found, DIRECT, len(divisions))
    result.divisions = divisions
    return result


def _identify_generalized_starlike(seq: tuple[int, ...]) -> IdentifyResult:
    P0, P1 = seq[0], _at(seq, 1)
    # P_1 - P_0 = n1^2/2 - 3 n1/2
    n1 = _root_of_half_quadratic(P1 - P0, -3)
    if n1 is None or n1 < 3:
        return IdentifyResult(None, PRUNED)
    n2 = P0 - n1 + 1
    n = P0
    # P_2 = m^2/2 + (n1 - 5/2) m + n1^3/2 - 3 n1^2/2 + n
    twice = 2 * _at(seq, 2) - (n1 ** 3 - 3 * n1 * n1 + 2 * n)
    if twice % 2:
        return IdentifyResult(None, PRUNED)
    m = _root_of_half_quadratic(twice // 2, 2 * n1 - 5)
    if m is None or m < 1 or n2 < 2:
        return IdentifyResult(None, PRUNED)

    survivors: list[FamilySpec] = []
    examined = 0
    L: list[int] = []

    def search(j: int, mass: int, length: int) -> None:
        # L holds L_1..L_{j-1}; remaining branches all have length >= j
        nonlocal examined
        examined += 1
        if mass == m and length == n2 - 1:
            lengths = list(L)
            while lengths[-1] == 0:
                lengths.pop()
            spec = GeneralizedStarlike(n1, BranchSequence(tuple(lengths)))
            if sequence_of(spec) == seq:
                survivors.append(spec)
            return
        left, room = m - mass, n2 - 1 - length
        if left <= 0 or room < left * j:
            return
        for c in range(left + 1):
            if c * j > room:
                break
            L.append(c)
            # L_1..L_j now fix P_{j+2}
            if _generalized_starlike_count(n1, n2, m, L, j + 2) == _at(seq, j + 2):
                search(j + 1, mass + c, length + c * j)
            L.pop()

    search(1, 0, 0)
    if len(survivors) > 1:
        log.warning("generalized starlike search left %d survivors for %s", len(survivors), seq)
    match = survivors[0] if len(survivors) == 1 else None
    return IdentifyResult(match, PRUNED, examined, survivors)


def identify(kind: str, seq: Sequence[int]) -> IdentifyResult:
    """Find the member of family ``kind`` whose path sequence is ``seq``."""
    seq = validate_sequence(seq)
    P0, P1 = seq[0], _at(seq, 1)
    if kind == "complete":
        return _one(_verified(lambda: Complete(P0), seq), DIRECT, 1)
    if kind == "path":
        return _one(_verified(lambda: Path(P0), seq), DIRECT, 1)
    if kind == "cycle":
        return _one(_verified(lambda: Cycle(P0), seq), DIRECT, 1)
    if kind == "star":
        return _one(_verified(lambda: Star(P0), seq), DIRECT, 1)
    if kind == "complete-bipartite":
        # n1, n2 are the roots of x^2 - P0 x + P1
        disc = P0 * P0 - 4 * P1
        r = isqrt(disc) if disc >= 0 else -1
        if r < 0 or r * r != disc or (P0 - r) % 2:
            return IdentifyResult(None, DIRECT, 1)
        a, b = (P0 - r) // 2, (P0 + r) // 2
        return _one(_verified(lambda: CompleteBipartite(a, b), seq), DIRECT, 1)
    if kind == "kite":
        n1 = _root_of_half_quadratic(P1 - P0, -3)
        if n1 is None:
            return IdentifyResult(None, DIRECT, 1)
        return _one(_verified(lambda: Kite(n1, P0 - n1 + 1), seq), DIRECT, 1)
    if kind == "lollipop":
        survivors = []
        examined = 0
        for n1 in range(3, P0):
            examined += 1
            spec = _verified(lambda: Lollipop(n1, P0 + 1 - n1), seq)
            if spec is not None:
                survivors.append(spec)
        match = survivors[0] if len(survivors) == 1 else None
        return IdentifyResult(match, SEARCH, examined, survivors)
    if kind == "starlike":
        return _identify_starlike(seq)
    if kind == "genstar":
        return _identify_generalized_starlike(seq)
    raise ValueError(f"unknown family kind {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")


def same_by_sequence(a: FamilySpec, b: FamilySpec) -> bool:
    if family_kind(a) != family_kind(b):
        raise FamilyMismatchError(
            f"cannot compare {family_kind(a)} with {family_kind(b)}: equal path sequences across "
            "families do not imply isomorphism")
    return sequence_of(a) == sequence_of(b)

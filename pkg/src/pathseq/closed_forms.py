"""Closed-form path counts for the graph families in :mod:`pathseq.generators`.

Conventions used everywhere below: an empty product is 1 and an empty sum is 0.
Counts are exact Python integers.

The composite families (kite, lollipop, generalized starlike) are evaluated by
one composition rule: paths inside the dense part, paths inside the pendant
part, and paths that cross the shared vertex, where the crossing term is the
number of dense-side paths ending at the shared vertex times the number of
pendant-side paths ending there.  Each side's factor vanishes once its length
exceeds what that side can hold, so no case split on ``h`` is needed.  The
piecewise statements are kept as ``*_display`` functions for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Sequence

from pathseq.generators import (BranchSequence, Complete, CompleteBipartite, Cycle, FamilySpec,
                                GeneralizedStarlike, Kite, Lollipop, Path, Star, Starlike, rho,
                                vertex_count)
from pathseq.path_oracle import PathTypeCounts, z_ranges


def _falling(n: int, k: int) -> int:
    """``n (n-1) ... (n-k+1)``; zero as soon as a factor hits zero."""
    return prod(n - i for i in range(k))


def complete_count(n: int, h: int) -> int:
    if h == 0:
        return n
    if h >= n:
        return 0
    return _falling(n, h + 1) // 2


def complete_bipartite_count(n1: int, n2: int, h: int) -> int:
    """Paths of length ``h`` in K_{n1,n2}.

    Even ``h`` uses the two-term form (ends in the same part, one term per
    part) rather than the combined fraction, which divides by zero at
    ``h = 2*n1`` when ``n1 < n2``.
    """
    if h == 0:
        return n1 + n2
    if h % 2:
        k = (h - 1) // 2
        return prod((n1 - i) * (n2 - i) for i in range(k + 1))
    k = h // 2
    twice = _falling(n1, k + 1) * _falling(n2, k) + _falling(n2, k + 1) * _falling(n1, k)
    return twice // 2


def complete_bipartite_display(n1: int, n2: int, h: int) -> Fraction | None:
    """The combined even/odd formula for ``h >= 1``; None at ``h = 0`` and
    where it divides by zero."""
    if h == 0:
        return None
    if h % 2:
        k = (h - 1) // 2
        return Fraction(prod((n1 - i) * (n2 - i) for i in range(k + 1)))
    k = h // 2
    if n1 == k or n2 == k:
        return None
    base = prod((n1 - i) * (n2 - i) for i in range(k + 1))
    return Fraction(base, 2) * (Fraction(1, n1 - k) + Fraction(1, n2 - k))


def path_count(n: int, h: int) -> int:
    return max(n - h, 0)


def cycle_count(n: int, h: int) -> int:
    if h == 0:
        return n
    return n if h <= n - 1 else 0


def simple_family_sequence(spec: Path | Cycle | Star) -> tuple[int, ...]:
    n = spec.n
    if isinstance(spec, Path):
        return tuple(range(n, 0, -1))
    if isinstance(spec, Cycle):
        return (n,) * n
    if isinstance(spec, Star):
        return (n, n - 1, (n - 1) * (n - 2) // 2)
    raise TypeError(f"not a path, cycle or star: {spec!r}")


# --- starlike trees --------------------------------------------------------

def _type_counts(n: int, m: int, L: Sequence[int], h: int) -> PathTypeCounts:
    """Bucket counts for a starlike tree given ``n``, ``m`` and ``L``.

    ``L[i - 1]`` is the number of branches of length ``i``; entries past the
    end of ``L`` are zero.  ``n`` and ``m`` are taken as given rather than
    recomputed from ``L``, which lets identification evaluate a partially
    known branch sequence.
    """
    def Lx(i: int) -> int:
        return L[i - 1] if 1 <= i <= len(L) else 0

    def S(k: int) -> int:
        return sum(Lx(i) for i in range(1, k + 1))

    out = PathTypeCounts(h)
    longer = m - S(h)
    out.x1 = Lx(h)
    out.x2 = longer
    out.y1 = (n - 1) - sum(i * Lx(i) for i in range(1, h + 1)) - (h + 1) * longer
    out.y2 = longer

    r1, r2, r3 = z_ranges(h)
    even = h % 2 == 0
    for a in r1:
        shared = a >= h // 2 if even else a >= (h - 1) // 2
        out.z1[a] = Lx(a + 1) * (m - S(h - (a + 1)) - (1 if shared else 0))
    for a in r2:
        if even and a == h // 2 - 1:
            out.z2[a] = (Lx(a + 1) - 1) * Lx(a + 1) // 2
        else:
            out.z2[a] = Lx(a + 1) * Lx(h - a - 1)
    for a in r3:
        if even and a == h // 2:
            c = m - S(a)
            out.z3[a] = c * (c - 1) // 2
        else:
            out.z3[a] = (m - S(h - a)) * (m - 1 - S(a))
    return out


def starlike_type_counts(branches: BranchSequence, h: int) -> PathTypeCounts:
    if h <= 0:
        raise ValueError("path type counts are defined for h >= 1")
    return _type_counts(branches.n, branches.m, branches.lengths, h)


def _starlike_count(n: int, m: int, L: Sequence[int], h: int) -> int:
    if h == 0:
        return n
    if h == 1:
        return n - 1
    if h == 2:
        return (m * m - 3 * m) // 2 + n - 1
    return _type_counts(n, m, L, h).total


def starlike_count(branches: BranchSequence, h: int) -> int:
    """Paths of length ``h`` in the starlike tree with these branches."""
    if h > branches.t1 + branches.t2:
        return 0
    return _starlike_count(branches.n, branches.m, branches.lengths, h)


def starlike_p3_display(branches: BranchSequence) -> int:
    """Printed cubic-length polynomial ``m^2 + m + n - 1 + (2 - m) L_1``.

    Kept only as an erratum witness: it disagrees with enumeration (K_{1,4}
    has no paths of length 3, the polynomial gives 16).
    """
    n, m = branches.n, branches.m
    return m * m + m + n - 1 + (2 - m) * branches.L(1)


def starlike_p4_display(branches: BranchSequence) -> Fraction:
    n, m, L1, L2 = branches.n, branches.m, branches.L(1), branches.L(2)
    return (n - 1 - Fraction(13, 2) * m + Fraction(3, 2) * m * m
            + (Fraction(7, 2) - 2 * m) * L1 + Fraction(1, 2) * L1 * L1 + (2 - m) * L2)


# --- kite and lollipop -----------------------------------------------------

def _clique_ends(n1: int, k: int) -> int:
    """Paths of length ``k`` in K_{n1} that start at a fixed vertex."""
    return prod(n1 - i for i in range(1, k + 1))


def kite_count(n1: int, n2: int, h: int) -> int:
    if h == 0:
        return n1 + n2 - 1
    cross = sum(_clique_ends(n1, k) for k in range(1, h) if 1 <= h - k <= n2 - 1)
    return complete_count(n1, h) + path_count(n2, h) + cross


def kite_display(n1: int, n2: int, h: int) -> int | None:
    """The piecewise statement for kites; None outside its listed ranges."""
    g = lambda k: _clique_ends(n1, k)  # noqa: E731
    half = lambda: _falling(n1, h + 1) // 2  # noqa: E731
    if h == 0:
        return n1 + n2 - 1
    if h == 1:
        return n1 * (n1 - 1) // 2 + n2 - 1
    if n2 <= n1:
        if 2 <= h <= n2 - 1:
            return half() + (n2 - h) + sum(g(k) for k in range(1, h))
        if n2 <= h <= n1 - 1:
            return half() + sum(g(h - k) for k in range(1, n2))
        if n1 <= h <= n1 + n2 - 2:
            return sum(g(h - k) for k in range(1, n2))
    else:
        if 2 <= h <= n1 - 1:
            return half() + (n2 - h) + sum(g(k) for k in range(1, h))
        if n1 <= h <= n2 - 1:
            return (n2 - h) + sum(g(k) for k in range(1, n1))
        if n2 <= h <= n1 + n2 - 2:
            return sum(g(k) for k in range(1, n1))
    return None


def lollipop_count(n1: int, n2: int, h: int) -> int:
    if h == 0:
        return n1 + n2 - 1
    cross = sum(2 for k in range(1, h) if k <= n1 - 1 and 1 <= h - k <= n2 - 1)
    return cycle_count(n1, h) + path_count(n2, h) + cross


def lollipop_display(n1: int, n2: int, h: int) -> int | None:
    if h in (0, 1):
        return n1 + n2 - 1
    if n2 <= n1:
        if 2 <= h <= n2 - 1:
            return n1 + n2 + h - 2
        if n2 <= h <= n1 - 1:
            return n1 + 2 * n2 - 2
        if n1 <= h <= n1 + n2 - 2:
            return 2 * n1 + 2 * n2 - 2 * h - 2
    else:
        if 2 <= h <= n1 - 1:
            return n1 + n2 + h - 2
        if n1 <= h <= n2 - 1:
            return 2 * n1 + n2 - h - 2
        if n2 <= h <= n1 + n2 - 2:
            return 2 * n1 + 2 * n2 - 2 * h - 2
    return None


# --- generalized starlike trees --------------------------------------------

def _branch_ends(m: int, L: Sequence[int], j: int) -> int:
    """Paths of length ``j`` in the starlike part that start at the root.

    Equals the number of branches of length at least ``j``.
    """
    return m - sum(L[i - 1] for i in range(1, min(j, len(L) + 1)))


def _generalized_starlike_count(n1: int, n2: int, m: int, L: Sequence[int], h: int) -> int:
    if h == 0:
        return n1 + n2 - 1
    cross = sum(_clique_ends(n1, k) * _branch_ends(m, L, h - k) for k in range(1, h))
    return complete_count(n1, h) + _starlike_count(n2, m, L, h) + cross


def generalized_starlike_count(n1: int, branches: BranchSequence, h: int) -> int:
    spec = GeneralizedStarlike(n1, branches)
    if h > rho(spec):
        return 0
    return _generalized_starlike_count(n1, branches.n, branches.m, branches.lengths, h)


def generalized_starlike_display(n1: int, branches: BranchSequence, h: int) -> Fraction | None:
    """The regime-by-regime statement; None where no listed regime covers ``h``."""
    n2, m, L = branches.n, branches.m, branches.lengths
    t1, t2 = branches.t1, branches.t2
    n = n1 + n2 - 1
    if h == 0:
        return Fraction(n1 + n2 - 1)
    if h == 1:
        return Fraction(n1 * (n1 - 1) // 2 + n2 - 1)
    if h == 2:
        return (Fraction(m * m, 2) + (n1 - Fraction(5, 2)) * m + Fraction(n1 ** 3, 2)
                - Fraction(3 * n1 * n1, 2) + n)

    pk = complete_count(n1, h)
    ps = _starlike_count(n2, m, L, h) if h <= t1 + t2 else 0
    g = lambda k: _clique_ends(n1, k)  # noqa: E731
    f = lambda j: _branch_ends(m, L, j)  # noqa: E731

    def gf(upper: int) -> int:
        return sum(g(k) * f(h - k) for k in range(1, upper + 1))

    def fg(upper: int) -> int:
        return sum(f(k) * g(h - k) for k in range(1, upper + 1))

    if t2 < n1 - 1:
        if n1 - 1 <= t1 + t2:
            if n1 - 1 <= t1 < t1 + t2:
                if 3 <= h <= n1 - 1:
                    return Fraction(pk + ps + gf(h - 1))
                if n1 <= h <= t1 + t2:
                    return Fraction(ps + gf(n1 - 1))
                if t1 + t2 + 1 <= h <= t1 + n1 - 1:
                    return Fraction(gf(n1 - 1))
            elif t2 <= t1 < n1 - 1:
                if 3 <= h <= t1:
                    return Fraction(pk + ps + fg(h - 1))
                if t1 + 1 <= h <= n1 - 1:
                    return Fraction(pk + ps + fg(t1))
                if n1 <= h <= t1 + t2:
                    return Fraction(ps + fg(t1))
                if t1 + t2 + 1 <= h <= t1 + n1 - 1:
                    return Fraction(fg(t1))
        else:
            if 3 <= h <= t1:
                return Fraction(pk + ps + fg(h - 1))
            if t1 + 1 <= h <= t1 + t2:
                return Fraction(pk + ps + fg(t1))
            if t1 + t2 + 1 <= h <= n1 - 1:
                return Fraction(pk + fg(t1))
            if n1 <= h <= t1 + n1 - 1:
                return Fraction(fg(t1))
    else:
        if 3 <= h <= n1 - 1:
            return Fraction(pk + ps + gf(h - 1))
        if n1 <= h <= t1 + n1 - 1:
            return Fraction(ps + gf(n1 - 1))
        if t1 + n1 <= h <= t1 + t2:
            return Fraction(ps)
    return None


# --- dispatch --------------------------------------------------------------

def count_at(spec: FamilySpec, h: int) -> int:
    """``P_h`` of the family member; 0 past its longest path."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return vertex_count(spec)
    if h > rho(spec):
        return 0
    if isinstance(spec, Complete):
        return complete_count(spec.n, h)
    if isinstance(spec, CompleteBipartite):
        return complete_bipartite_count(spec.n1, spec.n2, h)
    if isinstance(spec, Path):
        return path_count(spec.n, h)
    if isinstance(spec, Cycle):
        return cycle_count(spec.n, h)
    if isinstance(spec, Star):
        return simple_family_sequence(spec)[h]
    if isinstance(spec, Starlike):
        return starlike_count(spec.branches, h)
    if isinstance(spec, Kite):
        return kite_count(spec.n1, spec.n2, h)
    if isinstance(spec, Lollipop):
        return lollipop_count(spec.n1, spec.n2, h)
    if isinstance(spec, GeneralizedStarlike):
        return generalized_starlike_count(spec.n1, spec.branches, h)
    raise TypeError(f"not a family spec: {spec!r}")


def sequence_of(spec: FamilySpec) -> tuple[int, ...]:
    return tuple(count_at(spec, h) for h in range(rho(spec) + 1))

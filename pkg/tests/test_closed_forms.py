from fractions import Fraction
from math import comb

import pytest

from pathseq.closed_forms import (complete_bipartite_count, complete_bipartite_display,
                                  complete_count, count_at, cycle_count,
                                  generalized_starlike_count, generalized_starlike_display,
                                  kite_count, kite_display, lollipop_count, lollipop_display,
                                  path_count, sequence_of, simple_family_sequence, starlike_count,
                                  starlike_p3_display, starlike_p4_display, starlike_type_counts)
from pathseq.generators import (BranchSequence, Complete, CompleteBipartite, Cycle,
                                GeneralizedStarlike, Kite, Lollipop, Path, Star, Starlike, build,
                                rho)
from pathseq.grids import acceptance_grid, family_grid
from pathseq.path_oracle import path_sequence_dp

B = BranchSequence


@pytest.fixture(scope="module")
def oracle():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = path_sequence_dp(build(spec))
        return cache[spec]
    return get


def at(seq, h):
    return seq[h] if h < len(seq) else 0


def test_complete():
    assert complete_count(4, 2) == 12
    assert complete_count(4, 5) == 0
    assert complete_count(1, 0) == 1
    assert [complete_count(5, h) for h in range(5)] == [5, 10, 30, 60, 60]


def test_complete_bipartite():
    assert complete_bipartite_count(2, 3, 2) == 9
    assert complete_bipartite_count(2, 3, 4) == 6
    assert complete_bipartite_count(2, 2, 3) == 4
    assert complete_bipartite_count(2, 3, 0) == 5
    assert complete_bipartite_count(2, 3, 5) == 0


def test_complete_bipartite_display_where_defined():
    compared = 0
    for a in range(1, 7):
        for b in range(a, 7):
            for h in range(0, 2 * a + 2):
                shown = complete_bipartite_display(a, b, h)
                if shown is None:
                    assert h in (0, 2 * a)
                    continue
                assert shown == complete_bipartite_count(a, b, h), (a, b, h)
                compared += 1
    assert compared > 100


def test_simple_families():
    assert simple_family_sequence(Path(4)) == (4, 3, 2, 1)
    assert simple_family_sequence(Cycle(5)) == (5, 5, 5, 5, 5)
    assert simple_family_sequence(Star(4)) == (4, 3, 3)
    assert path_count(4, 4) == 0
    assert cycle_count(5, 5) == 0


def test_star_agrees_with_starlike_route():
    for n in range(4, 13):
        assert sequence_of(Star(n)) == sequence_of(Star(n).as_starlike())


def test_type_counts_examples():
    out = starlike_type_counts(B((2, 1)), 2)
    assert (out.x1, out.x2, out.y1, out.y2) == (1, 0, 0, 0)
    assert (sum(out.z1.values()), sum(out.z2.values()), sum(out.z3.values())) == (2, 1, 0)
    out = starlike_type_counts(B((4,)), 2)
    assert sum(out.z2.values()) == 6 and out.total == 6
    out = starlike_type_counts(B((2, 1)), 3)
    assert sum(out.z2.values()) == 2 and out.total == 2


def test_type_counts_beyond_rho_are_zero():
    assert starlike_type_counts(B((2, 1)), 9).total == 0
    with pytest.raises(ValueError):
        starlike_type_counts(B((2, 1)), 0)


def test_starlike_examples():
    assert starlike_count(B((2, 1)), 2) == 4
    assert starlike_count(B((2, 1)), 3) == 2
    for leaves in range(3, 9):
        assert starlike_count(B((leaves,)), 3) == 0


def test_starlike_depends_only_on_prefix(oracle):
    # P_h is fixed by n, m and L_1..L_{h-2}
    groups = {}
    for spec in family_grid("starlike"):
        b = spec.branches
        for h in range(3, rho(spec) + 2):
            key = (b.n, b.m, h, tuple(b.L(i) for i in range(1, h - 1)))
            groups.setdefault(key, set()).add(at(oracle(spec), h))
    assert all(len(values) == 1 for values in groups.values())


def test_starlike_polynomial_errata():
    # the printed cubic and quartic polynomials disagree with enumeration
    assert starlike_p3_display(B((4,))) == 16 != starlike_count(B((4,)), 3)
    misses = [b for b in (s.branches for s in family_grid("starlike"))
              if starlike_p4_display(b) != starlike_count(b, 4)]
    assert misses


def test_kite_examples():
    assert kite_count(4, 2, 2) == 15
    assert kite_count(4, 2, 4) == 6
    assert kite_count(4, 2, 1) == 7
    assert sequence_of(Kite(4, 2)) == (5, 7, 15, 18, 6)


def test_kite_display(oracle):
    wrong = []
    for spec in family_grid("kite"):
        seq = oracle(spec)
        for h in range(rho(spec) + 1):
            shown = kite_display(spec.n1, spec.n2, h)
            assert shown is not None
            if shown != seq[h]:
                wrong.append((spec.n1, spec.n2, h))
    # the short-clique, long-tail block drops the bound k >= h - n2 + 1
    assert wrong
    assert all(n1 < n2 and h > n2 for n1, n2, h in wrong)


def test_lollipop_examples_and_display(oracle):
    assert lollipop_count(4, 3, 2) == 7
    assert lollipop_count(4, 3, 4) == 4
    assert lollipop_count(4, 3, 1) == 6
    assert sequence_of(Lollipop(4, 3)) == (6, 6, 7, 8, 4, 2)
    for spec in family_grid("lollipop"):
        seq = oracle(spec)
        for h in range(rho(spec) + 1):
            assert lollipop_display(spec.n1, spec.n2, h) == seq[h], (spec, h)


def test_generalized_starlike_examples():
    assert generalized_starlike_count(3, B((3,)), 2) == 12
    assert generalized_starlike_count(3, B((3,)), 3) == 6
    assert generalized_starlike_count(3, B((3,)), 4) == 0
    assert generalized_starlike_display(3, B((3,)), 2) == 12


def test_generalized_starlike_display(oracle):
    uncovered = []
    for spec in family_grid("genstar"):
        seq = oracle(spec)
        for h in range(rho(spec) + 1):
            shown = generalized_starlike_display(spec.n1, spec.branches, h)
            if shown is None:
                uncovered.append(spec)
                continue
            assert shown == Fraction(seq[h]), (spec, h)
    # the regime table needs a second branch; a single branch falls through
    assert all(s.branches.m == 1 for s in uncovered)


@pytest.mark.parametrize("spec", acceptance_grid()[::7], ids=str)
def test_truncation(spec):
    r = rho(spec)
    assert count_at(spec, r) > 0
    assert count_at(spec, r + 1) == 0
    assert count_at(spec, 0) == build(spec).n


def test_sequence_examples():
    assert sequence_of(Complete(4)) == (4, 6, 12, 12)
    assert sequence_of(CompleteBipartite(2, 3)) == (5, 6, 9, 12, 6)
    assert sequence_of(GeneralizedStarlike(3, B((3,)))) == (6, 6, 12, 6)
    assert sequence_of(Star(5)) == (5, 4, comb(4, 2))

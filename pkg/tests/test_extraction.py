import itertools

import pytest

from enumorder.errors import (
    BadBound,
    BadExtra,
    BadPattern,
    InvalidPairing,
    PreconditionViolated,
    ValueAbsent,
)
from enumorder.extraction import (
    Membership,
    PairedListings,
    ascending_view,
    check_inverse_positions,
    decide_membership,
    descent_chain,
    family_below,
    make_paired,
    predecessor,
)
from enumorder.prefixes import Pattern, PrefixListing, SetSample, inversions, make_prefix


@pytest.fixture
def paired():
    # f = [1,4,2,6] over {2,4,6,8} ∪ {1}, g = [2,6,4,8] over {2,4,6,8}
    return make_paired(SetSample(frozenset({2, 4, 6, 8}), 9), 1, Pattern((1, 3, 2, 4)))


class TestInversePositions:
    def test_equivalent_pair(self):
        report = check_inverse_positions(make_prefix([2, 4, 6]), make_prefix([2, 3, 4]))
        assert (report.clause1.fpos, report.clause1.gpos) == (1, 1)
        assert report.clause1.holds
        assert all(e.premise_held and e.holds for e in report.clause2)
        assert report.all_hold

    def test_premise_fails_early(self):
        report = check_inverse_positions(make_prefix([1, 2, 3]), make_prefix([2, 1, 3]))
        assert (report.clause1.fpos, report.clause1.gpos) == (1, 2)
        assert report.clause1.holds
        first = report.clause2[0]
        assert first.index == 2 and not first.premise_held and first.holds
        assert report.all_hold

    def test_identical_listings(self):
        p = make_prefix([3, 1, 2])
        report = check_inverse_positions(p, p)
        assert (report.clause1.fpos, report.clause1.gpos) == (2, 2)
        assert all(e.premise_held and e.fpos == e.gpos for e in report.clause2)
        assert report.all_hold

    def test_precondition_enforced(self):
        with pytest.raises(PreconditionViolated):
            check_inverse_positions(make_prefix([2, 1]), make_prefix([1, 2]))

    @pytest.mark.parametrize("n", range(5))
    def test_all_clauses_hold_exhaustively(self, n):
        perms = [
            PrefixListing(tuple(p))
            for p in itertools.permutations(range(1, n + 1))
        ]
        for f, g in itertools.product(perms, repeat=2):
            if not inversions(f) <= inversions(g):
                continue
            assert check_inverse_positions(f, g).all_hold


class TestMakePaired:
    def test_rank_aligned_construction(self, paired):
        assert paired.f.values == (1, 4, 2, 6)
        assert paired.g.values == (2, 6, 4, 8)
        assert paired.m == 1

    def test_pattern_length_must_match(self):
        with pytest.raises(BadPattern):
            make_paired(SetSample(frozenset({2, 4, 6}), 6), 1, Pattern((1, 2, 3, 4)))

    def test_pattern_must_open_with_rank_one(self):
        with pytest.raises(BadPattern):
            make_paired(SetSample(frozenset({2, 4}), 4), 1, Pattern((2, 1)))

    def test_extra_must_be_below_min(self):
        with pytest.raises(BadExtra):
            make_paired(SetSample(frozenset({2, 4}), 4), 3, Pattern((1, 2)))

    def test_extra_must_be_new(self):
        with pytest.raises(BadExtra):
            make_paired(SetSample(frozenset({2, 4}), 4), 2, Pattern((1, 2)))

    def test_arbitrary_pair_validated(self):
        # rank misalignment: f's second value has rank 3 in B, g's has rank 1 in A
        with pytest.raises(InvalidPairing):
            PairedListings(make_prefix([1, 4]), make_prefix([2, 4]), 1)

    def test_f_must_start_at_extra(self):
        with pytest.raises(InvalidPairing):
            PairedListings(make_prefix([2, 1]), make_prefix([2, 4]), 1)

    def test_all_opening_patterns_produce_valid_pairs(self):
        sample = SetSample(frozenset({2, 4, 6, 8, 10}), 12)
        for tail in itertools.permutations(range(2, 6)):
            pat = Pattern((1,) + tail)
            p = make_paired(sample, 1, pat)
            assert p.f(1) == 1
            assert set(p.g.values) == sample.elements


class TestPredecessor:
    def test_one_rank_down(self, paired):
        assert predecessor(paired, 6) == 4

    def test_min_maps_to_extra(self, paired):
        assert predecessor(paired, 2) == 1 == paired.m

    def test_middle(self, paired):
        assert predecessor(paired, 4) == 2

    def test_absent(self, paired):
        with pytest.raises(ValueAbsent):
            predecessor(paired, 5)

    @pytest.mark.parametrize("size", range(1, 7))
    def test_against_ascending_view(self, size):
        sample = SetSample(frozenset(2 * i for i in range(1, size + 1)), 2 * size)
        asc = sorted(sample.elements)
        for tail in itertools.permutations(range(2, size + 1)):
            p = make_paired(sample, 1, Pattern((1,) + tail))
            assert predecessor(p, asc[0]) == 1
            for k in range(1, size):
                assert predecessor(p, asc[k]) == asc[k - 1]


class TestDescentChain:
    def test_full_descent(self, paired):
        assert descent_chain(paired, 8) == [6, 4, 2]

    def test_nothing_below_min(self, paired):
        assert descent_chain(paired, 2) == []

    def test_single_step(self, paired):
        assert descent_chain(paired, 4) == [2]

    def test_lists_exactly_the_lesser_elements(self, paired):
        a_set = set(paired.g.values)
        for a in a_set:
            assert descent_chain(paired, a) == sorted(
                (x for x in a_set if x < a), reverse=True
            )


class TestDecideMembership:
    def test_excluded_by_descent(self, paired):
        report = decide_membership(paired, 5)
        assert report.result is Membership.NOT_IN_A
        assert report.descent == (4, 2)

    def test_directly_enumerated(self, paired):
        assert decide_membership(paired, 4).result is Membership.IN_A

    def test_no_witness_above(self, paired):
        assert decide_membership(paired, 100).result is Membership.INSUFFICIENT

    @pytest.mark.parametrize("size", range(1, 7))
    def test_sound_against_ground_truth(self, size):
        elements = frozenset(2 * i for i in range(1, size + 1))
        bound = 2 * size
        sample = SetSample(elements, bound)
        for tail in itertools.permutations(range(2, size + 1)):
            p = make_paired(sample, 1, Pattern((1,) + tail))
            for x in range(1, bound + 1):
                result = decide_membership(p, x).result
                if result is Membership.IN_A:
                    assert x in elements
                elif result is Membership.NOT_IN_A:
                    assert x not in elements


class TestFamilyBelow:
    def test_three_members(self):
        fam = family_below(SetSample(frozenset({2, 4, 6, 8}), 9), 2)
        assert [sorted(s.elements) for s in fam] == [
            [4, 6, 8],
            [1, 4, 6, 8],
            [1, 2, 4, 6, 8],
        ]

    def test_zero_is_identity(self):
        sample = SetSample(frozenset({3, 7}), 8)
        assert family_below(sample, 0) == [sample]

    def test_two_members(self):
        fam = family_below(SetSample(frozenset({2, 4}), 5), 1)
        assert [sorted(s.elements) for s in fam] == [[2, 4], [1, 2, 4]]

    def test_bad_bound(self):
        with pytest.raises(BadBound):
            family_below(SetSample(frozenset({2}), 3), 4)

    @pytest.mark.parametrize("n", range(5))
    def test_distinct_and_bounded_difference(self, n):
        a = frozenset({2, 4, 6, 8, 10})
        fam = family_below(SetSample(a, 10), n)
        assert len(fam) == n + 1
        seen = {s.elements for s in fam}
        assert len(seen) == n + 1
        for s in fam:
            assert len(s.elements ^ a) <= n
            assert s.bound == 10


class TestAscendingView:
    def test_sorted(self):
        assert ascending_view(make_prefix([6, 2, 4])) == (2, 4, 6)

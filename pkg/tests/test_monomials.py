"""Tests for bigraded monomials, bilex sets, ideals and their Hilbert data."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import ClosureError, MonomialError, NonBilexError
from core.monomials import (
    BiDegree,
    BiMonomial,
    MonomialBiIdeal,
    VariableOrder,
    alpha_from_ideal,
    dictionary_coordinates,
    hilbert_table,
    is_bilex,
    maximal_ideal_power,
    membership,
    minimal_generators,
    monomial_set_of,
    monomials_of,
    t_monomial,
)
from core.partitions import SidedPartition, enumerate_partitions

from reference_tables import (
    ADMISSIBLE,
    ADMISSIBLE_IDEAL,
    H_I_DOUBLE_PRIME,
    H_I_PRIME,
    I_DOUBLE_PRIME,
    I_PRIME,
    SINGLE_DEGREE_IDEAL,
    ideal,
    monomial,
)


def random_partition(rng, sides):
    l1, l2 = sides
    return SidedPartition(sides, tuple(sorted((rng.randint(0, l1) for _ in range(l2)), reverse=True)))


@st.composite
def degree_partition_pairs(draw, max_side: int = 5):
    """Two partitions with the sides (a+1, b+1) of one bidegree."""
    l1 = draw(st.integers(1, max_side))
    l2 = draw(st.integers(1, max_side))
    column = st.lists(st.integers(0, l1), min_size=l2, max_size=l2)
    first = sorted(draw(column), reverse=True)
    second = sorted(draw(column), reverse=True)
    return SidedPartition.make((l1, l2), first), SidedPartition.make((l1, l2), second)


class TestMonomials:
    def test_parse_forms_agree(self):
        assert monomial("x1^2 y1") == monomial("x1^2*y1") == monomial("2 0 1 0") == BiMonomial(2, 0, 1, 0)
        assert monomial("1") == BiMonomial(0, 0, 0, 0)
        with pytest.raises(MonomialError):
            monomial("z1")

    def test_bidegree(self):
        assert monomial("x1 x2 y1^2 y2").bidegree == BiDegree(2, 3)

    def test_slice_enumeration(self):
        at = BiDegree(2, 3)
        members = monomials_of(at)
        assert len(members) == at.dimension == 12
        assert members[0] == monomial("x1^2 y1^3")
        assert members[-1] == monomial("x2^2 y2^3")


class TestDictionary:
    def test_t_monomial(self):
        assert t_monomial(2, 3, BiDegree(2, 3)) == monomial("x1 x2 y1^2 y2")
        assert t_monomial(1, 1, BiDegree(0, 0)) == monomial("1")

    def test_zero_coordinates_stand_for_zero(self):
        assert t_monomial(0, 2, BiDegree(2, 3)) is None
        assert t_monomial(2, 0, BiDegree(2, 3)) is None

    def test_out_of_range(self):
        with pytest.raises(MonomialError):
            t_monomial(4, 1, BiDegree(2, 3))

    def test_coordinates_invert_t(self):
        at = BiDegree(3, 2)
        for m in monomials_of(at):
            assert t_monomial(*dictionary_coordinates(m), at) == m

    def test_monomial_set_of(self):
        alpha = SidedPartition((3, 5), (3, 3, 2, 1, 0))
        members = monomial_set_of(alpha)
        assert len(members) == alpha.weight == 9
        expected = {
            BiMonomial(i, 2 - i, j, 4 - j)
            for j, top in enumerate(alpha.entries)
            for i in range(top)
        }
        assert members == expected

    def test_extreme_partitions(self):
        at = BiDegree(2, 2)
        assert monomial_set_of(SidedPartition.zero(at.sides)) == frozenset()
        assert monomial_set_of(SidedPartition.full(at.sides)) == frozenset(monomials_of(at))


class TestBilex:
    @pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 2)])
    def test_complement_of_every_diagram_is_bilex(self, a, b):
        at = BiDegree(a, b)
        everything = frozenset(monomials_of(at))
        for h in range(at.dimension + 1):
            for alpha in enumerate_partitions(h, at.sides):
                assert is_bilex(everything - monomial_set_of(alpha), at)

    def test_generators_in_one_degree(self):
        assert is_bilex(SINGLE_DEGREE_IDEAL.generators, BiDegree(2, 3))

    def test_not_bilex(self):
        assert not is_bilex({monomial("x1 x2 y1^2 y2")}, BiDegree(2, 3))

    def test_reversed_order(self):
        at = BiDegree(2, 2)
        raised = {monomial("x2^2 y2^2"), monomial("x1 x2 y2^2"), monomial("x2^2 y1 y2")}
        assert is_bilex(raised, at, VariableOrder.REVERSED)
        assert not is_bilex(raised, at, VariableOrder.STANDARD)

    def test_mixed_bidegrees_rejected(self):
        with pytest.raises(MonomialError):
            is_bilex({monomial("x1 y1"), monomial("x1")}, BiDegree(1, 1))


class TestDictionaryLaws:
    @pytest.mark.property_based
    @given(degree_partition_pairs())
    @settings(max_examples=200)
    def test_one_monomial_per_box(self, pair):
        alpha, _ = pair
        members = monomial_set_of(alpha)
        assert len(members) == alpha.weight
        coordinates = {dictionary_coordinates(m) for m in members}
        assert len(coordinates) == len(members)
        for p, q in coordinates:
            assert 1 <= p <= alpha.entries[q - 1]

    @pytest.mark.property_based
    @given(degree_partition_pairs())
    @settings(max_examples=200)
    def test_order_is_inclusion(self, pair):
        alpha, beta = pair
        lower = alpha.meet(beta)
        assert monomial_set_of(lower) == monomial_set_of(alpha) & monomial_set_of(beta)
        assert monomial_set_of(lower) <= monomial_set_of(alpha)
        if alpha.leq(beta):
            assert monomial_set_of(alpha) <= monomial_set_of(beta)

    @pytest.mark.property_based
    @given(degree_partition_pairs())
    @settings(max_examples=200)
    def test_every_diagram_is_bilex_with_raised_order(self, pair):
        alpha, _ = pair
        l1, l2 = alpha.sides
        assert is_bilex(monomial_set_of(alpha), BiDegree(l1 - 1, l2 - 1), VariableOrder.REVERSED)


class TestIdeals:
    def test_membership(self):
        I = ideal("x1 y1", "x1 y2")
        assert membership(I, monomial("x1 x2 y1 y2"))
        assert not membership(I, monomial("x2^2 y1"))
        assert not membership(MonomialBiIdeal(), monomial("1"))

    def test_sum_of_ideals(self):
        I = ideal("x1 y1") + ideal("x2 y1")
        assert I.generators == {monomial("x1 y1"), monomial("x2 y1")}

    def test_hilbert_values(self):
        assert I_PRIME.hilbert_value(BiDegree(1, 1)) == 2
        assert I_DOUBLE_PRIME.hilbert_value(BiDegree(1, 2)) == 2
        assert I_DOUBLE_PRIME.hilbert_value(BiDegree(2, 1)) == 3

    def test_tables_of_growth_pair(self):
        assert hilbert_table(I_PRIME, BiDegree(4, 4)) == H_I_PRIME
        assert hilbert_table(I_DOUBLE_PRIME, BiDegree(4, 4)) == H_I_DOUBLE_PRIME

    def test_zero_ideal(self):
        table = MonomialBiIdeal().hilbert_table(BiDegree(2, 2))
        assert table.rows() == [[1, 2, 3], [2, 4, 6], [3, 6, 9]]

    def test_admissible_ideal(self):
        assert ADMISSIBLE_IDEAL.hilbert_table(BiDegree(5, 5)) == ADMISSIBLE

    def test_value_and_slice_partition_the_degree(self):
        for at in BiDegree(3, 3).cells():
            assert I_PRIME.hilbert_value(at) + len(I_PRIME.slice(at)) == at.dimension

    def test_unit_ideal_has_zero_table(self):
        unit = ideal("1")
        assert unit.hilbert_table(BiDegree(1, 2)).rows() == [[0, 0, 0], [0, 0, 0]]


class TestAlphaFromIdeal:
    def test_single_degree_ideal(self):
        assert alpha_from_ideal(SINGLE_DEGREE_IDEAL, BiDegree(2, 3)) == SidedPartition((3, 4), (3, 3, 1, 1))

    def test_zero_ideal_gives_full_box(self):
        assert alpha_from_ideal(MonomialBiIdeal(), BiDegree(2, 1)) == SidedPartition.full((3, 2))

    def test_admissible_ideal(self):
        assert alpha_from_ideal(ADMISSIBLE_IDEAL, BiDegree(2, 2)) == SidedPartition((3, 3), (3, 3, 2))

    def test_principal_ideal(self):
        assert alpha_from_ideal(ideal("x1 y1"), BiDegree(1, 1)) == SidedPartition((2, 2), (2, 1))

    @pytest.mark.parametrize("generator", ["x2 y1", "x1 y2"])
    def test_non_bilex_slice(self, generator):
        with pytest.raises(NonBilexError) as excinfo:
            alpha_from_ideal(ideal(generator), BiDegree(1, 1))
        assert excinfo.value.at == BiDegree(1, 1)

    def test_lifts_follow_multiplication(self, rng):
        """A bilex slice generates a bilex slice one step further out, given by the lifts."""
        for _ in range(500):
            at = BiDegree(rng.randint(0, 4), rng.randint(0, 4))
            alpha = random_partition(rng, at.sides)
            generated = MonomialBiIdeal(frozenset(monomials_of(at)) - monomial_set_of(alpha))
            assert alpha_from_ideal(generated, at) == alpha
            assert alpha_from_ideal(generated, BiDegree(at.a + 1, at.b)) == alpha.lift_row()
            assert alpha_from_ideal(generated, BiDegree(at.a, at.b + 1)) == alpha.lift_col()


class TestMinimalGenerators:
    def test_truncated_principal_ideal(self):
        bounds = BiDegree(2, 2)
        principal = ideal("x1 y1")
        family = {at: principal.slice(at) for at in bounds.cells()}
        assert minimal_generators(family, bounds) == {monomial("x1 y1")}

    def test_growth_pair_ideal(self):
        bounds = BiDegree(3, 3)
        family = {at: I_PRIME.slice(at) for at in bounds.cells()}
        expected = {monomial("x1 y1"), monomial("x1 y2")} | {
            m for m in maximal_ideal_power(4) if m.i1 == 0 and m.bidegree.leq(bounds)
        }
        assert minimal_generators(family, bounds) == expected

    def test_unclosed_family(self):
        family = {BiDegree(1, 1): {monomial("x1 y1")}}
        with pytest.raises(ClosureError) as excinfo:
            minimal_generators(family, BiDegree(2, 2))
        assert excinfo.value.variable == "x1"

    def test_misfiled_monomial(self):
        with pytest.raises(MonomialError):
            minimal_generators({BiDegree(1, 0): {monomial("x1 y1")}})

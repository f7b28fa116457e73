"""Tests for labeled Dyck paths, parking statistics, and the combinatorial side."""

import pytest
from hypothesis import given, settings, strategies as st

from deltaq import delta_ops as d, parking, qfield, symfunc as sf
from deltaq.parking import (
    AsymmetricAggregateError,
    DyckPath,
    ParkingFunction,
    fundamental_monomials,
    ribbon_schur,
)
from deltaq.partition import Partition, partitions_of
from deltaq.qfield import ONE, ZERO, q, subs, t

CATALAN = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42}


def small_pf() -> st.SearchStrategy[ParkingFunction]:
    return st.integers(1, 4).flatmap(
        lambda n: st.sampled_from(ParkingFunction.all_parking(n))
    )


class TestDyckPath:
    def test_validation(self):
        with pytest.raises(ValueError):
            DyckPath(())
        with pytest.raises(ValueError):
            DyckPath((1,))
        with pytest.raises(ValueError):
            DyckPath((0, 2))
        with pytest.raises(ValueError):
            DyckPath((0, -1))

    def test_counts(self):
        for n, catalan in CATALAN.items():
            assert len(DyckPath.all_paths(n)) == catalan

    def test_stats(self):
        path = DyckPath((0, 1, 1, 0))
        assert path.n == 4
        assert path.area == 2
        assert path.rises() == (1,)

    def test_rise_factor(self):
        # (1 + z t^(-1)) for the single rise at area 1
        assert DyckPath((0, 1)).rise_factor() == {0: {0: 1}, 1: {-1: 1}}
        # no rises: constant 1
        assert DyckPath((0, 0)).rise_factor() == {0: {0: 1}}

    def test_rise_factor_degree_matches_rises(self):
        for n in range(1, 8):
            for path in DyckPath.all_paths(n):
                factor = path.rise_factor()
                assert max(factor) == len(path.rises())
                assert sum(factor[0].values()) == 1


class TestParkingFunction:
    def test_counts(self):
        for n in range(1, 8):
            assert len(ParkingFunction.all_parking(n)) == (n + 1) ** (n - 1)

    def test_validation(self):
        path = DyckPath((0, 1))
        with pytest.raises(ValueError):
            ParkingFunction(path, (1, 1))
        with pytest.raises(ValueError):
            ParkingFunction(path, (2, 1))  # must increase along the rise

    def test_frozen_n2(self):
        rows = [
            (pf.cars, pf.path.areas, pf.area, pf.dinv(), pf.word(), pf.ides())
            for pf in ParkingFunction.all_parking(2)
        ]
        assert rows == [
            ((1, 2), (0, 0), 0, 1, (2, 1), (1, 1)),
            ((2, 1), (0, 0), 0, 0, (1, 2), (2,)),
            ((1, 2), (0, 1), 1, 0, (2, 1), (1, 1)),
        ]

    @given(small_pf())
    @settings(max_examples=60, deadline=None)
    def test_word_and_ides_shapes(self, pf):
        assert sorted(pf.word()) == list(range(1, pf.n + 1))
        ides = pf.ides()
        assert sum(ides) == pf.n
        assert all(part >= 1 for part in ides)
        assert pf.dinv() >= 0


class TestFunctionalAccessors:
    def test_enumeration_delegates(self):
        assert parking.enumerate_paths(3) == DyckPath.all_paths(3)
        assert len(parking.enumerate_pfs(3)) == 16
        path = DyckPath((0, 1, 1))
        assert parking.enumerate_pfs(path) == ParkingFunction.all_on(path)

    def test_statistics_delegate(self):
        pf = ParkingFunction(DyckPath((0, 1)), (1, 2))
        assert parking.area(pf) == pf.area == 1
        assert parking.dinv(pf) == pf.dinv() == 0
        assert parking.word(pf) == pf.word() == (2, 1)
        assert parking.ides(pf) == pf.ides() == (1, 1)
        assert parking.area(pf.path) == 1
        assert parking.haglund_factor(pf.path) == {0: {0: 1}, 1: {-1: 1}}


class TestFundamentalMonomials:
    def test_frozen_small(self):
        assert fundamental_monomials((1, 1), 2) == {(1, 1): 1}
        assert fundamental_monomials((2,), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}

    def test_totals(self):
        # F_alpha in n variables has one monomial per chain, all coefficients 1
        for alpha in ((3,), (2, 1), (1, 2), (1, 1, 1)):
            mono = fundamental_monomials(alpha, 3)
            assert all(c == 1 for c in mono.values())
            assert all(sum(v) == 3 for v in mono)

    def test_standard_tableaux_assemble_schur(self):
        # descent compositions of the two standard tableaux of shape (2,1)
        mono: dict[tuple[int, ...], dict] = {}
        for alpha in ((2, 1), (1, 2)):
            for expvec, c in fundamental_monomials(alpha, 3).items():
                slot = mono.setdefault(expvec, {})
                slot[(0, 0)] = slot.get((0, 0), 0) + c
        assert parking._monomials_to_symfunc(mono, 3) == sf.s((2, 1))

    def test_asymmetric_aggregate_rejected(self):
        with pytest.raises(AsymmetricAggregateError):
            parking._monomials_to_symfunc({(2, 0): {(0, 0): 1}}, 2)


class TestRibbonSchur:
    def test_partitions_pass_through(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                assert ribbon_schur(tuple(lam)) == sf.s(lam)

    def test_frozen_straightening(self):
        assert ribbon_schur((1, 2)) == sf.zero()
        assert ribbon_schur((1, 3)) == sf.s((2, 2)).scale(-ONE)
        assert ribbon_schur((1, 1, 4)) == sf.s((2, 2, 2))


class TestLLTSums:
    def test_modes_agree_per_path(self):
        for n in range(1, 5):
            for path in DyckPath.all_paths(n):
                fund = parking.llt_sum(path, "fundamental")
                ribbon = parking.llt_sum(path, "ribbon")
                assert fund == ribbon, path

    def test_schur_positive(self):
        for n in range(1, 5):
            for path in DyckPath.all_paths(n):
                for lam, c in parking.llt_sum(path).terms.items():
                    assert c.denom == ONE.numer, (path, lam)
                    assert all(int(v) > 0 for _, v in c.numer.terms()), (path, lam)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            parking.llt_sum(DyckPath((0,)), "sideways")

    def test_q1_counts_parking_functions(self):
        # each Schur term contributes its standard-tableau count, so every
        # path total counts the parking functions living on it
        for n in range(1, 5):
            total = ZERO
            ones = Partition((1,) * n)
            for path in DyckPath.all_paths(n):
                for lam, c in parking.llt_sum(path).terms.items():
                    total += subs(c, q_image=1) * sf.character(lam, ones)
            assert total == qfield.coef((n + 1) ** (n - 1))


class TestDeltaSideCombinatorial:
    def test_k1_is_elementary(self):
        for n in range(1, 6):
            assert parking.delta_side_combinatorial(n, 1) == sf.e(n)

    def test_matches_operator_side(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                combi = parking.delta_side_combinatorial(n, k)
                operator = d.delta_full(sf.e(k - 1), n, prime=True)
                assert combi == operator, (n, k)

    def test_t_zero_variant(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                pruned = parking.delta_side_combinatorial(n, k, t_zero=True)
                full = parking.delta_side_combinatorial(n, k)
                assert pruned == sf.subs_coeffs(full, t_image=ZERO), (n, k)
                assert pruned == d.delta_prime_t0(sf.e(k - 1), n), (n, k)

    def test_validation(self):
        with pytest.raises(ValueError):
            parking.delta_side_combinatorial(3, 0)
        with pytest.raises(ValueError):
            parking.delta_side_combinatorial(3, 4)

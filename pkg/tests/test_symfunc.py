"""Tests for Schur-based symmetric functions, conversions, and transforms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deltaq import qfield, symfunc as sf
from deltaq.partition import Partition, partitions_of
from deltaq.qfield import ONE, ZERO, coef, q, t
from deltaq.symfunc import DegreeLimitError, SymFunc

partitions_upto = lambda size: st.integers(1, size).flatmap(
    lambda n: st.sampled_from(partitions_of(n))
)

_small_coef = st.builds(
    lambda a, b, c: coef(a) + coef(b) * q + coef(c) * t,
    st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
)

_symfunc_strategy = st.integers(1, 5).flatmap(
    lambda n: st.dictionaries(
        st.sampled_from(partitions_of(n)), _small_coef, min_size=1, max_size=4
    ).map(SymFunc)
)


class TestContainer:
    def test_homogeneity_enforced(self):
        with pytest.raises(ValueError):
            SymFunc({Partition((1,)): ONE, Partition((2,)): ONE})

    def test_zero_and_one(self):
        assert sf.zero().is_zero()
        assert sf.one().degree() == 0
        assert sf.s(0) == sf.one()

    def test_int_shape_shorthand(self):
        assert sf.s(3) == sf.s((3,))
        assert sf.e(1) == sf.h(1) == sf.p(1) == sf.m(1)

    def test_coeff_support_degree(self):
        f = sf.s((2, 1)).scale(q) + sf.s((3,))
        assert f.degree() == 3
        assert f.coeff(Partition((2, 1))) == q
        assert f.coeff(Partition((1, 1, 1))) == ZERO
        assert set(f.support()) == {Partition((3,)), Partition((2, 1))}

    @given(_symfunc_strategy, _small_coef)
    @settings(max_examples=40, deadline=None)
    def test_linear_structure(self, f, c):
        assert f + f.scale(-ONE) == sf.zero()
        assert f.scale(c) + f.scale(-c) == sf.zero()
        assert (f + f).scale(c) == f.scale(c) + f.scale(c)


class TestCharacters:
    def test_frozen_small_table(self):
        # standard 2-dimensional representation of the symmetric group on 3 letters
        tri = Partition((2, 1))
        assert sf.character(tri, Partition((1, 1, 1))) == 2
        assert sf.character(tri, Partition((2, 1))) == 0
        assert sf.character(tri, Partition((3,))) == -1

    def test_trivial_and_sign(self):
        for n in range(1, 7):
            for rho in partitions_of(n):
                assert sf.character(Partition((n,)), rho) == 1
                sign = (-1) ** (n - len(rho))
                assert sf.character(Partition((1,) * n), rho) == sign

    def test_orthogonality(self):
        # row orthogonality of the character table, degrees up to 6
        for n in range(1, 7):
            parts = partitions_of(n)
            for lam in parts:
                for mu in parts:
                    total = sum(
                        Fraction(
                            sf.character(lam, rho) * sf.character(mu, rho),
                            sf.zee(rho),
                        )
                        for rho in parts
                    )
                    assert total == (1 if lam == mu else 0)

    def test_zee(self):
        assert sf.zee(Partition((3,))) == 3
        assert sf.zee(Partition((2, 1))) == 2
        assert sf.zee(Partition((1, 1, 1))) == 6


class TestConversions:
    @given(partitions_upto(6), st.sampled_from("mehp"))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_through_schur(self, lam, basis):
        f = sf.sym(basis, {lam: 1})
        back = sf.basis_convert(f, basis)
        assert back == {lam: ONE}

    @given(_symfunc_strategy, st.sampled_from("mehp"))
    @settings(max_examples=40, deadline=None)
    def test_round_trip_general(self, f, basis):
        expansion = sf.basis_convert(f, basis)
        assert sf.sym(basis, expansion) == f

    def test_h_m_duality(self):
        # <h_lam, m_mu> = delta, a cross-basis consistency certificate
        for n in range(1, 6):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    expected = ONE if lam == mu else ZERO
                    assert sf.hall_inner(sf.h(lam), sf.m(mu)) == expected

    def test_p_inner_is_zee(self):
        for n in range(1, 6):
            for rho in partitions_of(n):
                assert sf.hall_inner(sf.p(rho), sf.p(rho)) == coef(sf.zee(rho))

    def test_schur_orthonormal(self):
        for lam in partitions_of(4):
            for mu in partitions_of(4):
                expected = ONE if lam == mu else ZERO
                assert sf.hall_inner(sf.s(lam), sf.s(mu)) == expected


class TestMultiplication:
    def test_pieri(self):
        assert sf.s((2, 1)) * sf.s(1) == (
            sf.s((3, 1)) + sf.s((2, 2)) + sf.s((2, 1, 1))
        )

    def test_e_h_products(self):
        assert sf.e(1) * sf.e(1) == sf.e((1, 1))
        assert sf.h(2) * sf.h(3) == sf.h((3, 2))

    def test_degree_limit_guard(self):
        with pytest.raises(DegreeLimitError):
            sf.s(6) * sf.s(5)
        sf.set_degree_limit(11)
        try:
            assert sf.h(6) * sf.h(5) == sf.h((6, 5))
        finally:
            sf.set_degree_limit(10)


class TestOmega:
    @given(partitions_upto(6))
    @settings(max_examples=40, deadline=None)
    def test_omega_on_schur_is_conjugate(self, lam):
        assert sf.omega(sf.s(lam)) == sf.s(lam.conjugate())

    def test_omega_swaps_h_e(self):
        for n in range(1, 7):
            assert sf.omega(sf.h(n)) == sf.e(n)
            assert sf.omega(sf.e(n)) == sf.h(n)

    @given(_symfunc_strategy)
    @settings(max_examples=30, deadline=None)
    def test_involution(self, f):
        assert sf.omega(sf.omega(f)) == f


class TestTransforms:
    def test_scale_one_minus_q_on_h2(self):
        expected = (sf.s(2) + sf.s((1, 1)).scale(-q)).scale(ONE - q)
        assert sf.apply_transform(sf.h(2), sf.scale_one_minus_qpow(1)) == expected

    def test_hook_expansion_route(self):
        # the closed hook formula agrees with the power-sum scaling route
        for n in range(1, 7):
            for u in (q, q**2, t):
                via_transform = sf.apply_transform(
                    sf.h(n),
                    sf.AlphabetTransform("scale", lambda k, u=u: ONE - u**k),
                )
                assert via_transform == sf.hn_times_one_minus_u(n, u)

    def test_eval_geometric(self):
        assert sf.apply_transform(sf.s(2), sf.eval_geometric(2)) == ONE + q + q**2
        assert sf.apply_transform(sf.s((1, 1)), sf.eval_geometric(2)) == q
        # too few letters kills columns that are too tall
        assert sf.apply_transform(sf.s((1, 1, 1)), sf.eval_geometric(2)) == ZERO

    def test_eval_geometric_shifted_drops_the_one(self):
        # alphabet {q, ..., q^(l-1)} equals q * {1, ..., q^(l-2)}; compare the
        # shifted evaluation with the scale-then-evaluate route
        for lam in partitions_of(3):
            f = sf.s(lam)
            lhs = sf.apply_transform(f, sf.eval_geometric_shifted(4))
            scaled = sf.apply_transform(
                f, sf.AlphabetTransform("scale", lambda k: q**k)
            )
            assert lhs == sf.apply_transform(scaled, sf.eval_geometric(3))

    def test_scale_inv_one_minus_q_inverts(self):
        f = sf.s((2, 1))
        scaled = sf.apply_transform(f, sf.scale_one_minus_qpow(1))
        back = sf.apply_transform(scaled, sf.scale_inv_one_minus_q())
        assert back == f

    def test_subs_coeffs(self):
        f = sf.s(2).scale(q * t + q)
        assert sf.subs_coeffs(f, None, ZERO) == sf.s(2).scale(q)
        assert sf.subs_coeffs(f, t, None) == sf.s(2).scale(t**2 + t)


class TestRenderParse:
    def test_frozen_render(self):
        f = sf.s((2, 1)).scale(q + ONE) + sf.s((1, 1, 1)).scale(-(q**2))
        assert sf.render(f) == "s[2,1]*(q + 1) + s[1,1,1]*(-q^2)"

    def test_render_zero(self):
        assert sf.render(sf.zero()) == "0"

    def test_parse_other_bases(self):
        assert sf.parse_symfunc("h[2]*(1)") == sf.h(2)
        assert sf.parse_symfunc("m[1,1]*(q)") == sf.m((1, 1)).scale(q)

    @given(_symfunc_strategy)
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, f):
        assert sf.parse_symfunc(sf.render(f)) == f

    @given(_symfunc_strategy, st.sampled_from("mehp"))
    @settings(max_examples=20, deadline=None)
    def test_round_trip_other_bases(self, f, basis):
        assert sf.parse_symfunc(sf.render(f, basis)) == f


class TestHookPredicates:
    def test_is_hook_only(self):
        assert sf.is_hook_only(sf.s((3, 1, 1)) + sf.s((4, 1)))
        assert not sf.is_hook_only(sf.s((2, 2)))
        assert sf.is_hook_only(sf.hn_times_one_minus_u(5, q))

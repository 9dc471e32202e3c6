import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobcalc import (
    CIIdeal,
    MonomialIdeal,
    NonArtinianError,
    ParseError,
    PolyRing,
    UnsupportedIdealClassError,
    bracket_power,
    ci_colon,
    frobenius_power,
    in_bracket_max,
    monomial_colon,
    parse_ideal_spec,
    parse_polynomial,
    pushforward_min_generators,
)
from frobcalc.ideals import build_ideal
from frobcalc.polyring import monomials_of_degree


def mi(ring, *gens):
    return MonomialIdeal(ring, list(gens))


def brute_colon_members(J, I, degree):
    """Oracle: monomials m of degree <= `degree` with m * I inside J."""
    out = []
    for d in range(degree + 1):
        for m in monomials_of_degree(J.ring, d):
            if all(
                J.contains_monomial(tuple(a + b for a, b in zip(m, g)))
                for g in I.gens
            ):
                out.append(m)
    return out


small_monos2 = st.tuples(st.integers(0, 3), st.integers(0, 3))


def small_ideals(ring):
    return st.lists(small_monos2, min_size=1, max_size=4).map(
        lambda gens: MonomialIdeal(ring, gens)
    )


class TestMonomialIdealBasics:
    def test_minimality_enforced(self, ring2):
        I = mi(ring2, (2, 0), (3, 0), (2, 1))
        assert I.gens == ((2, 0),)

    def test_generator_order_deterministic(self, ring2):
        a = mi(ring2, (2, 0), (0, 2), (1, 1))
        b = mi(ring2, (1, 1), (2, 0), (0, 2))
        assert a.gens == b.gens

    def test_equality_is_canonical(self, ring2):
        a = mi(ring2, (2, 0), (1, 1))
        b = mi(ring2, (1, 1), (2, 0), (3, 1))
        assert a == b
        assert a.equals_by_membership(b)

    def test_membership(self, ring2):
        I = mi(ring2, (1, 1))
        assert I.contains_monomial((2, 3))
        assert not I.contains_monomial((4, 0))
        assert I.contains_polynomial(parse_polynomial(ring2, "x*y + x^2*y^2"))
        assert not I.contains_polynomial(parse_polynomial(ring2, "x*y + x^2"))


class TestBracketPowers:
    def test_variables_squared(self, ring2):
        I = mi(ring2, (1, 0), (0, 1))
        assert bracket_power(I, 2) == mi(ring2, (2, 0), (0, 2))

    def test_termwise(self, ring2):
        I = mi(ring2, (4, 0), (2, 2), (0, 4))
        assert bracket_power(I, 2) == mi(ring2, (8, 0), (4, 4), (0, 8))

    def test_ci_bracket_matches_frobenius(self):
        ring = PolyRing(3, ["x0", "x1", "x2", "x3"])
        f = parse_polynomial(ring, "x0*x1 + x2*x3")
        I = CIIdeal(ring, [f])
        J = bracket_power(I, 3)
        assert J.gens[0] == frobenius_power(f, 1)
        assert str(J.gens[0]) == "x0^3*x1^3 + x2^3*x3^3"

    def test_rejects_non_power(self, ring2):
        with pytest.raises(ParseError):
            bracket_power(mi(ring2, (1, 1)), 6)
        with pytest.raises(ParseError):
            bracket_power(mi(ring2, (1, 1)), 1)

    def test_sum_commutes_with_bracket(self, ring2):
        # (I+J)^[q] = I^[q] + J^[q]
        I = mi(ring2, (2, 0), (1, 1))
        J = mi(ring2, (0, 3), (2, 1))
        q = 4
        assert bracket_power(I + J, q) == bracket_power(I, q) + bracket_power(J, q)

    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_sum_commutes_with_bracket_random(self, data):
        ring = PolyRing(2, ["x", "y"])
        I = data.draw(small_ideals(ring))
        J = data.draw(small_ideals(ring))
        assert bracket_power(I + J, 2) == bracket_power(I, 2) + bracket_power(J, 2)


class TestMonomialColon:
    def test_simple(self, ring2):
        assert monomial_colon(mi(ring2, (2, 0)), mi(ring2, (1, 0))) == mi(ring2, (1, 0))

    def test_colon_by_unit(self, ring2):
        J = mi(ring2, (2, 1), (0, 3))
        assert monomial_colon(J, mi(ring2, (0, 0))) == J

    def test_colon_by_zero_is_unit(self, ring2):
        J = mi(ring2, (2, 1))
        assert monomial_colon(J, MonomialIdeal.zero(ring2)).is_unit()

    def test_against_brute_force_membership(self, ring2):
        J = mi(ring2, (8, 0), (4, 4), (0, 8))
        I = mi(ring2, (4, 0), (2, 2), (0, 4))
        colon = monomial_colon(J, I)
        for m in brute_colon_members(J, I, 16):
            assert colon.contains_monomial(m)
        for d in range(17):
            for m in monomials_of_degree(ring2, d):
                if colon.contains_monomial(m):
                    assert all(
                        J.contains_monomial(tuple(a + b for a, b in zip(m, g)))
                        for g in I.gens
                    )

    @given(data=st.data())
    @settings(max_examples=25, deadline=None)
    def test_colon_properties_random(self, data):
        ring = PolyRing(2, ["x", "y"])
        J = data.draw(small_ideals(ring))
        I = data.draw(small_ideals(ring))
        colon = monomial_colon(J, I)
        # (J : I) contains J
        for g in J.gens:
            assert colon.contains_monomial(g)
        # (J : I) * I lies in J
        for a in colon.gens:
            for b in I.gens:
                assert J.contains_monomial(tuple(x + y for x, y in zip(a, b)))


class TestCIColon:
    def test_single_variable_cube(self):
        ring = PolyRing(2, ["x"])
        I = CIIdeal(ring, [parse_polynomial(ring, "x^3")])
        gens = ci_colon(I, 2)
        assert [str(g) for g in gens] == ["x^3", "x^6"]

    @pytest.mark.parametrize("p", [2, 3])
    def test_cross_oracle_with_monomial_colon(self, p):
        # (x^2, y^3) is both a monomial ideal and a complete intersection
        ring = PolyRing(p, ["x", "y"])
        q = p
        ci = CIIdeal(ring, [parse_polynomial(ring, "x^2"), parse_polynomial(ring, "y^3")])
        formula = ci_colon(ci, q)
        as_monomial = MonomialIdeal(ring, [g.single_monomial() for g in formula])
        I = mi(ring, (2, 0), (0, 3))
        combinatorial = monomial_colon(bracket_power(I, q), I)
        assert as_monomial.equals_by_membership(combinatorial)

    def test_quadric_generators(self):
        ring = PolyRing(3, ["x0", "x1", "x2", "x3"])
        f = parse_polynomial(ring, "x0*x1 + x2*x3")
        I = CIIdeal(ring, [f])
        gens = ci_colon(I, 3)
        assert gens[0] == f**2
        assert gens[1] == frobenius_power(f, 1)

    def test_rejects_overlapping_monomial_supports(self, ring2):
        with pytest.raises(UnsupportedIdealClassError):
            CIIdeal(
                ring2,
                [parse_polynomial(ring2, "x*y"), parse_polynomial(ring2, "y^2")],
            )

    def test_polynomial_generators_are_an_assertion(self, ring5xyz):
        I = CIIdeal(
            ring5xyz,
            [
                parse_polynomial(ring5xyz, "x^2 + y*z"),
                parse_polynomial(ring5xyz, "y^3 + z^3"),
            ],
        )
        assert not I.regular_sequence_verified

    def test_monomial_generators_verified(self, ring5xyz):
        I = CIIdeal(
            ring5xyz,
            [parse_polynomial(ring5xyz, "x^2"), parse_polynomial(ring5xyz, "y*z")],
        )
        assert I.regular_sequence_verified


class TestBracketMaxMembership:
    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_all_exponents_below_q(self, ring2, q):
        f = parse_polynomial(ring2, f"x^{q - 1}*y^{q - 1}")
        assert not in_bracket_max(f, q)

    def test_single_surviving_term(self, ring2):
        f = parse_polynomial(ring2, "x^2 + y")
        assert not in_bracket_max(f, 2)

    def test_fermat_fourth_power_p5(self, ring5xyz):
        f = parse_polynomial(ring5xyz, "x^3 + y^3 + z^3")
        assert in_bracket_max(f**4, 5)


class TestHilbertAndLoewy:
    def test_hilbert_of_square(self, ring2):
        assert mi(ring2, (2, 0), (1, 1), (0, 2)).hilbert_function(1) == 2

    def test_hilbert_of_zero_ideal(self, ring5xyz):
        I = MonomialIdeal.zero(ring5xyz)
        for d in range(6):
            assert I.hilbert_function(d) == math.comb(d + 2, 2)

    def test_total_dimension_twelve(self, ring2):
        assert mi(ring2, (4, 0), (2, 2), (0, 4)).total_dimension() == 12

    def test_loewy_lengths(self, ring2):
        assert mi(ring2, (2, 0), (1, 1), (0, 2)).loewy_length() == 2
        assert mi(ring2, (4, 0), (2, 2), (0, 4)).loewy_length() == 5
        assert MonomialIdeal(PolyRing(2, ["x"]), [(1,)]).loewy_length() == 1

    def test_loewy_requires_artinian(self, ring2):
        with pytest.raises(NonArtinianError):
            mi(ring2, (1, 1)).loewy_length()

    def test_hilbert_vanishes_beyond_loewy(self, ring2):
        for gens in [[(2, 0), (1, 1), (0, 2)], [(4, 0), (2, 2), (0, 4)], [(3, 0), (0, 2)]]:
            I = mi(ring2, *gens)
            ll = I.loewy_length()
            for d in range(ll, ll + 4):
                assert I.hilbert_function(d) == 0


class TestPushforwardGenerators:
    def test_polynomial_ring(self, ring2):
        assert pushforward_min_generators(MonomialIdeal.zero(ring2), 1) == 4

    def test_ideal_inside_bracket(self, ring2):
        assert pushforward_min_generators(mi(ring2, (2, 0), (0, 2)), 1) == 4

    def test_embedding_dimension_inequality(self):
        from conftest import corpus_ideals

        for I, _ci in corpus_ideals(p=2):
            assert pushforward_min_generators(I, 1) >= I.ring.nvars


class TestCIHilbert:
    def test_hypersurface(self):
        ring = PolyRing(3, ["x", "y", "z"])
        I = CIIdeal(ring, [parse_polynomial(ring, "x^3 + y^3 + z^3")])
        # dim (S/f)_d = C(d+2,2) - C(d-1,2)
        for d in range(8):
            expected = math.comb(d + 2, 2) - (math.comb(d - 1, 2) if d >= 3 else 0)
            assert I.hilbert_function(d) == expected


class TestIdealGrammar:
    def test_full_spec(self):
        ring, ideal, warnings = parse_ideal_spec("char 2; vars x,y; ideal x^4, x^2*y^2, y^4;")
        assert ring.p == 2
        assert isinstance(ideal, MonomialIdeal)
        assert ideal.gens == MonomialIdeal(ring, [(4, 0), (2, 2), (0, 4)]).gens
        assert not warnings

    def test_class_auto_detection_warns(self):
        _ring, ideal, warnings = parse_ideal_spec("char 3; vars x,y,z; ideal x^3+y^3+z^3")
        assert isinstance(ideal, CIIdeal)
        assert warnings

    def test_explicit_ci_class_for_monomials(self):
        _ring, ideal, warnings = parse_ideal_spec("char 2; vars x,y; ideal x*y; class ci;")
        assert isinstance(ideal, CIIdeal)
        assert ideal.regular_sequence_verified

    def test_missing_clause_rejected(self):
        with pytest.raises(ParseError):
            parse_ideal_spec("char 2; ideal x*y")

    def test_monomial_class_rejects_polynomials(self):
        ring = PolyRing(2, ["x", "y"])
        f = parse_polynomial(ring, "x + y")
        with pytest.raises(UnsupportedIdealClassError):
            build_ideal(ring, [f], "monomial")

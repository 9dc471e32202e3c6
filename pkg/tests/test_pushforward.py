from fractions import Fraction

import pytest

from frobcalc import (
    MonomialIdeal,
    NonArtinianError,
    PolyRing,
    alpha,
    alpha_by_enumeration,
    ci_filtration_check,
    cyclic_decompose,
    pn_pushforward,
    pushforward_module,
    strand_module,
    veronese_decompose,
)


def mi(ring, *gens):
    return MonomialIdeal(ring, list(gens))


class TestPushforwardModule:
    def test_one_variable_square(self):
        ring = PolyRing(2, ["x"])
        M = pushforward_module(MonomialIdeal(ring, [(2,)]), 1)
        assert M.basis == ((0,), (1,))
        # x acts by multiplication with x^2, which dies in R
        assert M.act_variable(0, 0) == -1
        assert M.act_variable(0, 1) == -1

    def test_twelve_dimensional_action(self, ring2):
        M = pushforward_module(mi(ring2, (4, 0), (2, 2), (0, 4)), 1)
        assert M.dimension() == 12
        i_x = M.index[(1, 0)]
        assert M.basis[M.act_variable(0, i_x)] == (3, 0)  # x . x = x^3

    def test_dimension_equals_quotient_dimension(self, ring2):
        for gens in [[(2, 0), (1, 1), (0, 2)], [(4, 0), (2, 2), (0, 4)], [(3, 0), (0, 2)]]:
            I = mi(ring2, *gens)
            for e in (1, 2):
                assert pushforward_module(I, e).dimension() == I.total_dimension()

    def test_fractional_degrees(self, ring2):
        M = pushforward_module(mi(ring2, (4, 0), (2, 2), (0, 4)), 1)
        degs = {M.degree_of(i) for i in range(M.dimension())}
        assert Fraction(1, 2) in degs
        assert max(degs) == Fraction(4, 2)

    def test_action_is_multiplicative(self, ring2):
        # (w w') . u = w . (w' . u) on sampled monomials
        M = pushforward_module(mi(ring2, (4, 0), (2, 2), (0, 4)), 1)
        samples = [(1, 0), (0, 1), (1, 1), (2, 0)]
        for w1 in samples:
            for w2 in samples:
                combined = tuple(a + b for a, b in zip(w1, w2))
                for i in range(M.dimension()):
                    step = M.act_monomial(w2, i)
                    via_steps = M.act_monomial(w1, step) if step >= 0 else -1
                    assert M.act_monomial(combined, i) == via_steps

    def test_requires_artinian(self, ring2):
        with pytest.raises(NonArtinianError):
            pushforward_module(mi(ring2, (1, 1)), 1)


class TestCyclicDecompose:
    def test_twelve_dimensional_example(self, ring2):
        I = mi(ring2, (4, 0), (2, 2), (0, 4))
        dec = cyclic_decompose(pushforward_module(I, 1))
        assert dec.direct
        assert len(dec.pieces) == 4
        assert {p.generator for p in dec.pieces} == {(0, 0), (1, 0), (0, 1), (1, 1)}
        target_ann = mi(ring2, (2, 0), (1, 1), (0, 2))
        for piece in dec.pieces:
            assert len(piece.basis) == 3
            assert piece.annihilator == target_ann
            assert piece.relative_hilbert == (1, 2)
        # pieces partition the basis
        union = sorted(u for p in dec.pieces for u in p.basis)
        assert len(union) == 12 == len(set(union))
        assert dec.iso_classes == [(target_ann.gens, (1, 2), 4)]

    def test_semisimple_case_gives_lines(self, ring2):
        I = mi(ring2, (2, 0), (1, 1), (0, 2))
        dec = cyclic_decompose(pushforward_module(I, 1))
        assert dec.direct
        assert sorted(len(p.basis) for p in dec.pieces) == [1, 1, 1]

    def test_piece_dimensions_sum(self, ring2):
        for gens in [[(3, 0), (0, 3)], [(4, 0), (2, 2), (0, 4)], [(2, 0), (1, 1), (0, 2)]]:
            I = mi(ring2, *gens)
            dec = cyclic_decompose(pushforward_module(I, 1))
            assert sum(len(p.basis) for p in dec.pieces) == I.total_dimension()

    def test_pieces_closed_under_action(self, ring2):
        I = mi(ring2, (4, 0), (2, 2), (0, 4))
        M = pushforward_module(I, 1)
        dec = cyclic_decompose(M)
        for piece in dec.pieces:
            members = set(piece.basis)
            for u in piece.basis:
                i = M.index[u]
                for v in range(2):
                    t = M.act_variable(v, i)
                    if t >= 0:
                        assert M.basis[t] in members


class TestAlpha:
    def test_projective_line_base_case(self):
        assert alpha(1, 2, 0, 0) == 1
        assert alpha(1, 2, 1, 0) == 1

    def test_negative_degree_vanishes(self):
        assert alpha(2, 3, 0, -1) == 0
        assert alpha(2, 3, -1, 2) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_rank_sums(self, n, p):
        for l in range(-3, 4):
            total = sum(alpha(n, p, i, l) for i in range(-4, 4 * (n + 1)))
            assert total == p**n

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_formula_matches_enumeration(self, n, p):
        for l in range(-3, 4):
            for i in range(-2, 2 * (n + 1)):
                assert alpha(n, p, i, l) == alpha_by_enumeration(n, p, i, l)


class TestPnPushforward:
    def test_projective_line(self):
        report = pn_pushforward(1, 2, 1, 0)
        assert report.twists == {0: 1, -1: 1}
        assert report.generates

    def test_plane_char_two_misses_a_twist(self):
        report = pn_pushforward(2, 2, 1, 0)
        assert not report.generates
        assert -2 not in report.twists

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("e", [1, 2])
    def test_generation_iff_q_exceeds_n(self, n, p, e):
        report = pn_pushforward(n, p, e, 0)
        assert report.generates == (p**e > n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("e", [1, 2])
    def test_total_rank(self, n, p, e):
        assert pn_pushforward(n, p, e, 0).total_rank() == p ** (e * n)

    def test_twisted_start(self):
        report = pn_pushforward(1, 2, 1, 3)
        assert report.total_rank() == 2
        assert set(report.twists) == {1, 0} or sum(report.twists.values()) == 2


class TestStrandModule:
    def test_class_zero_is_the_subring(self):
        G0 = strand_module(3, 0)
        assert G0.hilbert_series(4) == [1, 4, 7, 10, 13]

    def test_odd_class_of_index_two(self):
        G1 = strand_module(2, 1)
        assert G1.hilbert_series(3) == [2, 4, 6, 8]

    @pytest.mark.parametrize("ell,j", [(2, 0), (2, 1), (3, 1), (4, 3)])
    def test_dimension_formula(self, ell, j):
        G = strand_module(ell, j)
        for t in range(5):
            assert G.hilbert(t) == ell * t + j + 1
            assert len(G.basis_layer(t)) == G.hilbert(t)

    def test_rejects_bad_class(self):
        with pytest.raises(ValueError):
            strand_module(3, 3)


class TestVeroneseDecompose:
    def test_index_one_is_free(self):
        for p, e in [(2, 1), (3, 1), (2, 2)]:
            dec = veronese_decompose(1, p, e)
            assert dec.multiplicities == {0: p ** (2 * e)}
            assert dec.hs_verified

    @pytest.mark.parametrize("ell", [2, 3])
    @pytest.mark.parametrize("p", [2, 3])
    def test_hilbert_series_identity(self, ell, p):
        dec = veronese_decompose(ell, p, 1)
        assert dec.hs_verified
        assert dec.hs_bound >= 12 * ell * p

    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_nontrivial_class_appears(self, ell):
        dec = veronese_decompose(ell, 3, 1)
        assert dec.multiplicities.get(0, 0) >= 1
        assert any(j != 0 and m >= 1 for j, m in dec.multiplicities.items())
        assert dec.has_free_summand

    def test_total_count_is_rank(self):
        for ell, p, e in [(2, 2, 1), (3, 2, 1), (2, 3, 1), (2, 2, 2)]:
            dec = veronese_decompose(ell, p, e)
            assert sum(dec.multiplicities.values()) == p ** (2 * e)

    def test_known_small_case(self):
        # index 2, q = 2: two copies each of G_0 and G_1
        dec = veronese_decompose(2, 2, 1)
        assert dec.multiplicities == {0: 2, 1: 2}
        assert dec.hs_solve_unique

    def test_ambiguous_hilbert_solve_is_flagged(self):
        # index 3, q = 2: one degree class admits {G_0, G_2} and {G_1, G_1}
        dec = veronese_decompose(3, 2, 1)
        assert dec.multiplicities == {0: 1, 1: 2, 2: 1}
        assert not dec.hs_solve_unique
        assert dec.ambiguity_notes


class TestFiltration:
    def test_one_variable_char_two(self):
        ring = PolyRing(2, ["x"])
        report = ci_filtration_check(ring, [(2,)])
        assert len(report.steps) == 2
        assert report.all_match
        assert report.complete
        # both subquotients have dimension 2 = dim of the pushforward of R
        assert [sum(s.dims) for s in report.steps] == [2, 2]

    def test_one_variable_char_three(self):
        ring = PolyRing(3, ["x"])
        report = ci_filtration_check(ring, [(2,)])
        assert len(report.steps) == 3
        assert report.all_match

    def test_two_squares_char_two(self):
        ring = PolyRing(2, ["x", "y"])
        report = ci_filtration_check(ring, [(2, 0), (0, 2)])
        assert len(report.steps) == 4
        assert report.all_match
        assert [sum(s.dims) for s in report.steps] == [4, 4, 4, 4]

    @pytest.mark.parametrize("p,c", [(2, 1), (3, 1), (2, 2), (3, 2)])
    def test_step_count_is_p_to_c(self, p, c):
        ring = PolyRing(p, ["x", "y"])
        gens = [(2, 0), (0, 2)][:c]
        report = ci_filtration_check(ring, gens)
        assert len(report.steps) == p**c

    def test_mixed_monomial_generator(self):
        # f = xy is allowed; the quotient is not artinian so the band is a window
        ring = PolyRing(2, ["x", "y"])
        report = ci_filtration_check(ring, [(1, 1)])
        assert len(report.steps) == 2
        assert report.all_match
        assert not report.complete

    def test_rejects_overlapping_supports(self):
        ring = PolyRing(2, ["x", "y"])
        with pytest.raises(ValueError):
            ci_filtration_check(ring, [(2, 0), (1, 1)])

    def test_rejects_linear(self):
        ring = PolyRing(2, ["x", "y"])
        with pytest.raises(ValueError):
            ci_filtration_check(ring, [(1, 0)])

    def test_shift_bookkeeping(self):
        ring = PolyRing(2, ["x", "y"])
        report = ci_filtration_check(ring, [(2, 0), (0, 2)])
        shifts = [s.shift for s in report.steps]
        assert shifts == [0, 2, 2, 4]

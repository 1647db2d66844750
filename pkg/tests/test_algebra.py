import random
from fractions import Fraction

import pytest

from rtenergy import (
    BOTTOM,
    Energy,
    INFINITY,
    LinearRtef,
    Rtef,
    TIME_INF,
    Time,
    normalize,
    precedes,
)
from rtenergy.oracles import compose_split_oracle, exact_schedule_value

from helpers import A, F1, F2, SAT_TOP_NF, SAT_TOP_RAW, ev, lin, rtef


class TestValues:
    def test_energy_order(self):
        assert BOTTOM < Energy.of(0) < Energy.of(Fraction(1, 3)) < Energy.of(7) < INFINITY

    def test_energy_rejects_negative(self):
        with pytest.raises(ValueError):
            Energy.of(-1)

    def test_time_parsing(self):
        assert Time.of("inf").is_infinite
        assert Time.of("5/2") == Time(Fraction(5, 2))
        with pytest.raises(ValueError):
            Time.of(-2)

    def test_atom_invariants(self):
        with pytest.raises(ValueError):
            A(-1, 0, 0)
        with pytest.raises(ValueError):
            A(1, 1, 1)
        with pytest.raises(ValueError):
            A(1, -10, 3)

    def test_linear_normal_form_enforced(self):
        with pytest.raises(ValueError):
            LinearRtef((A(2, 0, 0), A(1, 0, 1)))
        with pytest.raises(ValueError):
            LinearRtef((A(0, 0, 5), A(1, 0, 3)))
        with pytest.raises(ValueError):
            LinearRtef((A(0, -1, 1), A(1, 0, 1)))


class TestNormalize:
    def test_satellite_top_path(self):
        assert normalize(SAT_TOP_RAW) == SAT_TOP_NF

    def test_merge_rule(self):
        got = normalize([A(2, -5, 5), A(2, -5, 5)])
        assert got == lin((2, -10, 10))
        # schedule-enumeration oracle agrees everywhere sampled
        rng = random.Random(11)
        for _ in range(40):
            x = Fraction(rng.randint(0, 30), 2)
            t = Fraction(rng.randint(0, 24), 2)
            assert got.eval(Energy.of(x), Time(t)) == exact_schedule_value([A(2, -5, 5), A(2, -5, 5)], x, t)

    def test_already_normal(self):
        assert normalize([A(3, -1, 1)]) == lin((3, -1, 1))

    def test_identity(self):
        assert normalize([]) == LinearRtef()

    def test_idempotent_on_normal_forms(self):
        assert normalize(SAT_TOP_NF.atoms) == SAT_TOP_NF


class TestEvalLinear:
    def test_worked_closed_form_points(self):
        assert SAT_TOP_NF.eval(Energy.of(30), Time.of(7)) == Energy.of(0)
        assert SAT_TOP_NF.eval(Energy.of(10), Time.of(100)) == BOTTOM
        assert SAT_TOP_NF.eval(Energy.of(60), Time.of(0)) == Energy.of(10)

    def test_identity_eval(self):
        one = LinearRtef()
        for x in (Energy.of(0), Energy.of(7), INFINITY, BOTTOM):
            assert one.eval(x, Time.of(3)) == x
            assert one.eval(x, TIME_INF) == x

    def test_bottom_and_infinity_inputs(self):
        assert SAT_TOP_NF.eval(BOTTOM, Time.of(5)) == BOTTOM
        assert SAT_TOP_NF.eval(INFINITY, Time.of(0)) == INFINITY

    def test_unbounded_time_limit_semantics(self):
        # positive top rate: level grows without bound once unblocked
        assert SAT_TOP_NF.eval(Energy.of(20), TIME_INF) == INFINITY
        # blocked zero-rate entry stays blocked forever
        assert SAT_TOP_NF.eval(Energy.of(19), TIME_INF) == BOTTOM
        # a lone zero-rate step can only collect its price
        leak = lin((0, -1, 1))
        assert leak.eval(Energy.of(5), TIME_INF) == Energy.of(4)
        assert leak.eval(Energy.of(0), TIME_INF) == BOTTOM
        # the free zero-threshold atom behaves exactly like the identity
        free = lin((0, 0, 0))
        for x in (Energy.of(0), Energy.of(3)):
            for t in (Time.of(0), Time.of(2), TIME_INF):
                assert free.eval(x, t) == x


class TestCompose:
    def test_worked_example(self):
        got = rtef(F1).compose(rtef(F2))
        assert got == rtef(lin((0, 0, 30), (4, 0, 50), (5, -60, 60)))
        # value is 5t + x - 60 on the outer strip
        for x, t in ((50, 2), (60, 0), (80, 10)):
            assert ev(got, x, t) == Energy.of(5 * t + x - 60)

    def test_identity_neutral(self):
        for f in (rtef(F1), rtef(F1, F2), Rtef.bottom()):
            assert Rtef.one().compose(f) == f
            assert f.compose(Rtef.one()) == f

    def test_bottom_absorbing(self):
        assert Rtef.bottom().compose(rtef(F1)) == Rtef.bottom()
        assert rtef(F1).compose(Rtef.bottom()) == Rtef.bottom()


class TestSup:
    def test_units(self):
        f = rtef(F1, F2)
        assert f.sup(Rtef.bottom()) == f
        assert f.sup(f) == f

    def test_pointwise_max_golden(self):
        f = rtef(F1).sup(rtef(F2))
        assert ev(f, 35, 10) == Energy.of(65)
        assert ev(rtef(F1), 35, 10) == Energy.of(65)
        assert ev(rtef(F2), 35, 10) == Energy.of(15)


class TestPrune:
    def test_subsumed_composition_dropped(self):
        # F1 precedes F2, so running F1 after F2 cannot beat F2 alone
        extra = normalize(F2.atoms + F1.atoms)
        assert rtef(extra, F2).prune() == rtef(F2)

    def test_singleton(self):
        assert rtef(F1).prune() == rtef(F1)

    def test_duplicates_collapse(self):
        assert Rtef.of([LinearRtef(), LinearRtef()]) == Rtef.one()


class TestStar:
    def test_worked_example(self):
        star = rtef(F1, F2).star()
        want = Rtef.of([LinearRtef(), F1, F2, normalize(F1.atoms + F2.atoms)])
        assert star.leq(want) and want.leq(star)
        assert star == want.prune()

    def test_bottom_star(self):
        assert Rtef.bottom().star() == Rtef.one()

    def test_identity_star(self):
        assert Rtef.one().star() == Rtef.one()

    def test_equals_bounded_powers(self):
        f = rtef(F1, F2)
        powers = Rtef.one()
        acc = Rtef.one()
        for _ in range(2):
            powers = powers.compose(f)
            acc = acc.sup(powers)
        star = f.star()
        assert star.leq(acc) and acc.leq(star)


class TestPrecedes:
    def test_worked_example(self):
        assert precedes(F1, F2)
        assert not precedes(F2, F1)

    def test_reflexive(self):
        assert precedes(F1, F1)

    def test_identity_has_no_rate(self):
        with pytest.raises(ValueError):
            precedes(LinearRtef(), F1)


class TestSplitOracleAgreement:
    def test_compose_against_split_search(self):
        # grid multiples of 1/8 hit every breakpoint of these operands
        comp = rtef(F1).compose(rtef(F2))
        for x in (30, 40, 50, 64):
            for t in (0, 2, 8, 16):
                direct = ev(comp, x, t)
                split = compose_split_oracle(F1, F2, Energy.of(x), Fraction(t), 64)
                assert split == direct

    def test_split_oracle_is_lower_bound(self):
        rng = random.Random(5)
        comp = rtef(F1).compose(rtef(F2))
        for _ in range(50):
            x = Energy.of(Fraction(rng.randint(0, 120), 2))
            t = Fraction(rng.randint(0, 40), 2)
            assert compose_split_oracle(F1, F2, x, t, rng.choice([3, 5, 7])) <= comp.eval(x, Time(t))

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordfield import FieldTag, Series
from ordfield.archimedean import dyadic_sup
from ordfield.completeness import (
    ClosedInterval,
    FIPError,
    InvalidRhoError,
    OpenInterval,
    archimedean_probe,
    bounded_naturals_probe,
    cantor_point_finite,
    cauchy_probe,
    fip_check,
    gen_unbounded_increasing,
    open_fip_point,
)
from ordfield.report import Verdict, format_report

F = Fraction
t = Series.monomial()
CI, OI = ClosedInterval, OpenInterval


def sym_family(n):
    return [CI(-(t**k), t**k) for k in range(1, n + 1)]


class TestCantor:
    def test_fip(self):
        assert fip_check([CI(F(0), F(2)), CI(F(1), F(3))])
        assert not fip_check([CI(F(0), F(1)), CI(F(2), F(3))])
        assert fip_check(sym_family(5))

    def test_point(self):
        assert cantor_point_finite([CI(F(0), F(2)), CI(F(1), F(3))]) == 1
        p = cantor_point_finite(sym_family(5))
        assert p == -(t**5)
        assert all(p in iv for iv in sym_family(5))
        assert cantor_point_finite([CI(t, 1 + t)]) == t
        with pytest.raises(FIPError):
            cantor_point_finite([CI(F(0), F(1)), CI(F(2), F(3))])


class TestOpenFip:
    def test_examples(self):
        fam = [OI(Series(), Series.constant(1)), OI(Series(), t), OI(Series(), t**2)]
        z = open_fip_point(fam, t**2)
        assert z == Series.monomial(F(1, 2), 2)
        assert all(z in iv for iv in fam)
        assert open_fip_point([OI(F(0), F(1))], F(1)) == F(1, 2)

    def test_invalid_rho(self):
        fam = [OI(Series(), t), OI(t, Series.constant(1))]
        for rho in (t, t**5, Series.constant(F(1, 100))):
            with pytest.raises(InvalidRhoError) as exc:
                open_fip_point(fam, rho)
            l, k = exc.value.pair
            assert rho > fam[l].hi - fam[k].lo
        with pytest.raises(InvalidRhoError):
            open_fip_point([OI(F(0), F(1))], F(0))

    @given(st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(0, 3)), min_size=1, max_size=5))
    def test_shrink_inequality(self, shapes):
        fam = [OI(-c * t**k, c * t**j) for k, j, c0 in shapes for c in [c0 + 1]]
        rho = min(iv.hi for iv in fam) + min(-iv.lo for iv in fam)
        z = open_fip_point(fam, rho)
        for iv in fam:
            assert iv.lo + rho / 2 <= z <= iv.hi - rho / 2


class TestCauchy:
    def test_dyadic_sup_prefix(self):
        seq = dyadic_sup(lambda q: q > 0 and q * q >= 2, 0, 2, 20)
        for k in range(1, 12):
            rep = cauchy_probe(seq, [F(1, 2**k)])
            assert rep.verdict is Verdict.WITNESS
            (n,) = rep.witness
            assert n <= k + 1
            tail = seq[n - 1 :]
            assert max(tail) - min(tail) < F(1, 2**k)

    def test_constant(self):
        rep = cauchy_probe([F(3)] * 6, [F(1), F(1, 10**9)])
        assert rep.witness == [1, 1]

    @pytest.mark.parametrize("length", [2, 5, 20, 64])
    def test_halves_never_below_t(self, length):
        prefix = [Series.constant(F(1, 2**p)) for p in range(length)]
        rep = cauchy_probe(prefix, [t])
        assert rep.verdict is Verdict.INCONCLUSIVE


class TestArchimedean:
    def test_examples(self):
        rep = archimedean_probe(3 + t, 100)
        assert rep.verdict is Verdict.WITNESS and rep.witness == [4]
        rep = archimedean_probe(t**-1, 1000)
        assert rep.verdict is Verdict.COUNTEREXAMPLE
        assert archimedean_probe(Series(), 10).witness == [1]
        assert archimedean_probe(F(0), 10).witness == [1]

    @pytest.mark.parametrize("x,n", [(3 - t, 3), (-3 + t, 3), (F(5, 2), 3), (Series.constant(F(-7, 2)), 4), (t, 1)])
    def test_least_witness(self, x, n):
        assert archimedean_probe(x, 100).witness == [n]


class TestUnboundedAndNaturals:
    def test_sequence(self):
        seq = gen_unbounded_increasing(3)
        assert seq == [t**-1, t**-2, t**-3]
        assert seq[0] < seq[1] < seq[2]
        seq = gen_unbounded_increasing(64)
        assert all(a < b for a, b in zip(seq, seq[1:]))
        assert all(x.classify().infinite for x in seq)
        assert all(x > 10**6 for x in seq)

    def test_ratfunc_sequence(self):
        seq = gen_unbounded_increasing(4, FieldTag.RATFUNC_INF)
        assert all(a < b for a, b in zip(seq, seq[1:]))

    def test_naturals(self):
        rep = bounded_naturals_probe(1000)
        assert rep.verdict is Verdict.WITNESS and rep.witness == [t**-1]
        assert bounded_naturals_probe(1).verdict is Verdict.WITNESS
        assert bounded_naturals_probe(50, "q").verdict is Verdict.COUNTEREXAMPLE


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=6))
def test_eventually_constant_shadow(values):
    # a rational prefix whose consecutive gaps are all below t is constant
    prefix = [Series.constant(v) for v in values]
    if all(abs(a - b) < t for a, b in zip(prefix, prefix[1:])):
        assert len(set(values)) == 1


def test_report_formats_agree():
    rep = archimedean_probe(3 + t, 10)
    text = format_report(rep, "text")
    assert "verdict: Witness" in text.splitlines()
    import json

    data = json.loads(format_report(rep, "json"))
    assert data["witness"] == ["4"] and data["verdict"] == "Witness"

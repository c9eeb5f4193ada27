"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import sptfn


def test_exact_oracles():
    assert sptfn.p(100) == 190569292
    assert sptfn.p(0) == 1
    assert [sptfn.spt(n) for n in range(1, 6)] == [1, 3, 5, 10, 14]
    assert sptfn.spt_enum(5) == 14
    assert sptfn.s_coeff(1) == Fraction(35, 12)


def test_rademacher_series():
    rep = sptfn.p_rademacher(20)
    assert rep["rounded"] == sptfn.p(20) == 627
    assert rep["residual"] + rep["tail_bound"] < 0.5
    assert rep["method"] == "rademacher"


def test_spt_series_rounds_to_oracle():
    rep = sptfn.spt_series(3, terms=3000, window=300)
    assert rep["rounded"] == sptfn.spt(3) == 5
    assert rep["smoothing"] == "tail_average(300)"


def test_traces():
    t = sptfn.spt_trace(2)
    assert t["rounded"] == 3
    assert t["class_count"] == 5
    assert t["residual"] < 1e-6
    assert sptfn.p_trace(4)["rounded"] == sptfn.p(4) == 5
    assert sptfn.s_trace(1)["rounded"] == Fraction(35, 12)


def test_kloosterman_paths_agree():
    for n, c in [(7, 36), (-1, 25), (12, 101)]:
        assert sptfn.a_direct(n, c) == pytest.approx(sptfn.a_selberg(n, c), abs=1e-10)
    assert sptfn.a_direct(1, 2) == pytest.approx(-1.0)
    assert abs(sptfn.a_direct(5, 49)) < sptfn.lehmer_bound(49)
    s = sptfn.s_eta(1, 0, 2)
    assert s.real == pytest.approx(-(2**-0.5))
    assert s.imag == pytest.approx(-(2**-0.5))


def test_pentagonal_and_summatory():
    assert sptfn.pentagonal_index(3) is None
    w = sptfn.pentagonal_index(1)
    assert (w["k"], w["branch"], w["sign"]) == (1, "3k-1", -1)
    s = sptfn.summatory(-1, 50)
    assert s["main_term_coeff"] == pytest.approx(-2.10591, abs=1e-4)
    assert len(s["rows"]) == 50


def test_forms_and_class_polynomial():
    assert sptfn.class_reps(1) == [(6, 1, 1), (12, 13, 4), (18, 25, 9)]
    poly = sptfn.class_polynomial(1)
    assert poly["reconstructed"]
    assert poly["polynomial"] == "x^3 - 12x^2 - 1008/23 x - 1728/23"
    assert poly["coefficients"][1] == Fraction(-1008, 23)


def test_dedekind_and_multiplier():
    assert sptfn.dedekind_sum(5, 7) == Fraction(-1, 14)
    chi = sptfn.eta_multiplier(0, -1, 1, 0)
    assert chi.real == pytest.approx(2**-0.5)
    assert chi.imag == pytest.approx(-(2**-0.5))


def test_modular_functions():
    val = sptfn.eta(1j, prec=128)
    assert val.real == pytest.approx(0.7682254, abs=1e-6)
    assert val.imag == pytest.approx(0.0, abs=1e-6)
    # spt(1) from the trace route at double precision
    reps = sptfn.class_reps(1)
    total = 0.0
    for a, b, c in reps:
        import cmath

        tau = (-b + cmath.sqrt(b * b - 4 * a * c)) / (2 * a)
        total += (sptfn.f(tau, prec=128) - sptfn.P(tau, prec=128)).real
    assert total / 12 == pytest.approx(1.0, abs=1e-9)

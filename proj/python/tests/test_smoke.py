from fractions import Fraction

import pytest

import heckebound as hb


def test_arith():
    assert hb.bernoulli(4) == Fraction(-1, 30)
    assert hb.zeta_negative(1) == Fraction(-1, 12)
    assert hb.factorize(12) == [(2, 2), (3, 1)]
    assert not hb.is_prime(91)
    with pytest.raises(hb.ConventionError):
        hb.bernoulli(3)


def test_group_orders():
    assert hb.order_gsp_modn(1, 6) == 288
    assert hb.order_gu(2, 3) == 192
    assert hb.enumerate_order("GSp", 2, modulus=2) == 720
    assert hb.enumerate_order("GU", 2, p=3) == 192
    assert hb.num_irreps(2, 3) == 24
    with pytest.raises(hb.CutoffExceeded):
        hb.enumerate_order("GSp", 2, modulus=2, cutoff=10_000)


def test_bound():
    b = hb.hecke_bound(2, 3, 5)
    assert b["total"] == 1_123_200
    assert b["c_g"] == Fraction(1, 5760)
    assert b["total"] == b["sigma_count"] * b["rep_sum_bound"]
    assert hb.mass_constant_bernoulli(2) == -hb.mass_constant(2)
    assert hb.asymptotic_exponents(1) == (4, 3)
    with pytest.raises(hb.HypothesisError, match="p divides N"):
        hb.hecke_bound(1, 4, 2)
    assert isinstance(hb.HypothesisError("x"), ValueError)


def test_large_values_stay_exact():
    total = hb.hecke_bound(6, 29, 97)["total"]
    assert total > 2**63
    assert total % 97 == 0


def test_sweep_and_cli():
    csv, skipped = hb.sweep("1", "3..5", "2..7")
    assert csv.splitlines()[0] == "g,N,p,c_g,gsp_order,signed_product,sigma_count,rep_sum_bound,total"
    assert len(csv.splitlines()) == 10
    assert skipped == 9
    code, out, err = hb.run_cli(["compute", "--g", "1", "--N", "2", "--p", "3"])
    assert code == 2
    assert "N must be at least 3" in err

import pytest

import ffheight


def test_counts():
    assert ffheight.count("x0*x2 + x1^2", q=2, ell=1) == 3
    assert ffheight.count("x1*x2 - 1", q=3, ell=1, mode="affine") == 2
    assert sorted(ffheight.points("x0*x2 + x1^2")) == [["0", "0", "1"], ["1", "0", "0"], ["1", "1", "1"]]


def test_primes():
    assert ffheight.primes(2, 3) == ["t^3+t+1", "t^3+t^2+1"]
    assert ffheight.prime_count(3, 2) == 3
    assert ffheight.gcd("t^2+t", "t") == "t"


def test_linear_algebra():
    assert ffheight.determinant("t,1;1,t", q=3) == "t^2+2"
    H, _ = ffheight.hermite("t^2,t")
    assert H == ["t,0"]
    x, bound = ffheight.thue_siegel("1,t")
    assert x == ["t", "1"]
    assert bound == (1, 1)


def test_determinant_method():
    aux = ffheight.auxiliary("x0*x2 + x1^2", q=2, ell=1)
    assert aux["M"] == 2
    assert aux["bezout_holds"]
    assert ffheight.regime(7, 2) == "large"
    assert ffheight.beta(2, 2) == 4
    assert ffheight.bad_primes("x0^2 + x1^2 + t*x2^2", q=3, cap=2) == ["t"]


def test_errors():
    with pytest.raises(ffheight.ParseError, match="unknown variable"):
        ffheight.count("x0 + y")
    with pytest.raises(ffheight.PreconditionError, match="x0 \\+ x1"):
        ffheight.auxiliary("x0^2 + x1^2", q=2)
    with pytest.raises(ffheight.Error):
        ffheight.count("x0*x2 + x1^2", ell=50)


def test_run_matches_cli_records():
    records = ffheight.run("count", q=2, f="x0*x2 + x1^2", ell="1:2")
    assert [r["count"] for r in records] == [3, 3]
    report = ffheight.run("verify", seed=3)
    assert report["passed"]

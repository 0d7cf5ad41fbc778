"""Smoke tests for the python bindings."""

import math
from fractions import Fraction

import pytest

import gaborlab as gl


def frac(r):
    return Fraction(r["num"], r["den"]) if isinstance(r, dict) else Fraction(r.num, r.den)


def test_group_construction():
    s3 = gl.named_group("S3")
    assert s3.order == 6
    assert not s3.abelian
    assert s3.identity == 0
    sizes = sorted(len(c) for c in s3.conjugacy_classes())
    assert sizes == [1, 2, 3]

    z6 = gl.named_group("Z6")
    assert z6.abelian
    assert gl.direct_product(gl.named_group("Z2"), gl.named_group("Z3")).order == 6

    with pytest.raises(gl.GaborlabError):
        gl.named_group("NOSUCH")


def test_from_mult_table_validation():
    z2 = gl.FiniteGroup.from_mult_table([[0, 1], [1, 0]], "Z2")
    assert z2.order == 2
    with pytest.raises(gl.GaborlabError):
        gl.FiniteGroup.from_mult_table([[0, 0], [1, 1]])


def test_dual_completeness():
    for spec in ("Z8", "S3", "Q8", "D4"):
        g = gl.named_group(spec)
        d = gl.unitary_dual(g, seed=0)
        assert d.sum_squared_degrees() == g.order
        report = gl.dual_verify(d)
        assert report["all_pass"]
        assert report["max_residual"] < 1e-9


def test_fourier_parseval_and_roundtrip():
    g = gl.named_group("S3")
    d = gl.unitary_dual(g, seed=0)
    f, _ = gl.parse_function_spec("random:dense", g, seed=11)
    hat = gl.fourier_transform(f, d)
    assert abs(f.norm2_squared() - hat.weighted_hs_norm_squared()) < 1e-9
    back = gl.inverse_fourier(hat)
    assert max(abs(a - b) for a, b in zip(back.values(), f.values())) < 1e-9


def test_gabor_isometry_and_support():
    g = gl.named_group("Z12")
    d = gl.abelian_characters(g)
    f, _ = gl.parse_function_spec("random:dense", g, seed=3)
    psi, _ = gl.parse_function_spec("random:dense", g, seed=4)
    field = gl.gabor_transform(f, psi, d)
    assert abs(field.h2_norm() - psi.norm2() * f.norm2()) < 1e-9

    chi = gl.indicator(g, [0, 3, 6, 9])
    supp = gl.support_measure(gl.gabor_transform(chi, chi, d))
    assert frac(supp.measure) == Fraction(1)
    assert len(supp.points) == 12


def test_weak_qup_witness_reports():
    rep = gl.weak_qup_witness(gl.named_group("S3"))
    assert rep["verdict"] == "weak-QUP fails"
    assert Fraction(rep["measure"]["num"], rep["measure"]["den"]) == Fraction(2, 3)
    assert rep["measure"]["provenance"] == "enumerated"
    assert Fraction(rep["prediction"]["num"], rep["prediction"]["den"]) == Fraction(2, 3)

    rep = gl.weak_qup_witness(gl.named_group("Z6"))
    assert rep["verdict"] == "NoWitness"


def test_abelian_scan_floor():
    rep = gl.abelian_lower_bound_scan(gl.named_group("Z6"), trials=60, seed=5)
    assert rep["verdict"] == "lower bound holds"
    assert Fraction(rep["measure"]["num"], rep["measure"]["den"]) >= 1


def test_restriction_check():
    g = gl.named_group("Z6")
    h = gl.make_subgroup(g, [0, 2, 4])
    rep = gl.restriction_inequality_check(g, h, trials=5, seed=1)
    assert rep["verdict"] == "no violations"


def test_gabor_reconstruction():
    g = gl.named_group("Z2xZ4")
    d = gl.unitary_dual(g)
    f, _ = gl.parse_function_spec("random:dense", g, seed=8)
    psi, _ = gl.parse_function_spec("random:dense", g, seed=9)
    back = gl.gabor_reconstruct(gl.gabor_transform(f, psi, d), psi)
    assert max(abs(a - b) for a, b in zip(back.values(), f.values())) < 1e-9


def test_kernel_bound():
    g = gl.named_group("Z4")
    d = gl.abelian_characters(g)
    psi, _ = gl.parse_function_spec("random:dense", g, seed=2)
    k = gl.kernel_matrix(psi, d)
    n2 = k.grid_size()
    assert all(abs(k.entry(a, b)) <= 1 + 1e-12 for a in range(n2) for b in range(n2))
    assert all(abs(k.entry(a, a) - 1) < 1e-12 for a in range(n2))
    f, _ = gl.parse_function_spec("random:dense", g, seed=7)
    assert k.reproducing_residual(f) < 1e-9


def test_version():
    assert gl.__version__ == "0.1.0"

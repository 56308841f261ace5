"""Smoke tests for the python module: a thin pass over each exposed surface."""

import pytest

import edsw


def test_form_algebra():
    space = edsw.Space.standard(3)
    w1 = edsw.Form.parse(space, "1/1*w1")
    w2 = edsw.Form.parse(space, "1/1*w2")
    product = (w1 + w2) ^ (w1 - w2)
    assert str(product) == "-2/1*w1^w2"
    assert product.degree == 2
    assert (w1 ^ w1).is_zero
    assert product.evaluate([["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"]]) == "-2/1"


def test_form_parse_rejects_garbage():
    space = edsw.Space.standard(2)
    with pytest.raises(edsw.EdsError):
        edsw.Form.parse(space, "1/1*w9")


FROBENIUS = """\
eds 1
dim 3
generator 1/1*w3
vector 1/1 0/1 0/1
vector 0/1 1/1 0/1
split 1 2 | 3
"""


def test_check_frobenius():
    report = edsw.check(FROBENIUS)
    assert report["c"] == [1, 1]
    assert report["tableau_c"] == [1, 1]
    assert report["sum_c"] == 2
    assert report["tangent_codim"] == 2
    assert report["verdict"] == "ordinary"


def test_polar():
    report = edsw.polar(FROBENIUS, level=1)
    assert report["polar_dim"] == 2
    assert report["extension_rank"] == 0


def test_dims():
    dims = edsw.dims(2, 3)
    assert dims == {
        "dim_Fm": 6,
        "dim_H": 3,
        "dim_Km": 1,
        "dim_Z": 10,
        "sum_c_closed_form": 10,
        "grassmannian_codim": 10,
    }


def test_bcjs_random():
    report = edsw.bcjs(2, 3, seed=7)
    assert report["report"]["c"] == [4, 6]
    assert report["report"]["sum_c"] == 10
    assert report["report"]["verdict"] == "ordinary"

    bigger = edsw.bcjs(3, 6, seed=7)
    assert bigger["report"]["sum_c"] == 42
    assert bigger["report"]["verdict"] == "ordinary"


def test_bcjs_determinism():
    assert edsw.bcjs(2, 3, seed=42) == edsw.bcjs(2, 3, seed=42)


def test_bcjs_for_curvature():
    report = edsw.bcjs_for_curvature(2, 3, [(1, 2, 1, 2, "5/1")])
    assert report["report"]["verdict"] == "ordinary"


def test_gauss_rank_and_membership():
    h = [(3, 1, 1, "1/1"), (3, 2, 2, "1/1")]
    assert edsw.gauss_rank(2, 3, h) == 1
    assert edsw.in_H(2, 3, h)
    assert not edsw.in_H(2, 3, [])
    assert edsw.dim_Km(4) == 20
    assert edsw.dim_Km_by_rank(4) == 20


def test_cartan_lemma():
    doc = """\
cartan-lemma 1
dim 3
theta 2/1*w1 + 3/1*w2
theta 3/1*w1 + 5/1*w2
omega 1/1*w1
omega 1/1*w2
"""
    assert edsw.cartan_lemma(doc) == [["2/1", "3/1"], ["3/1", "5/1"]]


def test_conformal():
    report = edsw.conformal(3, 4)
    assert report["satisfied"] is False
    assert report["deficit"] == 1
    assert edsw.conformal(2, 2)["satisfied"] is True


def test_threshold_errors_propagate():
    with pytest.raises(edsw.EdsError):
        edsw.bcjs(2, 2, seed=1)

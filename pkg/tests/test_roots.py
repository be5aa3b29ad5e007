"""Unit tests for root vectors, ambient bases, and reflections."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest

from superroots import (
    AmbientBasis,
    BasisMismatch,
    IsotropicReflectionError,
    NotARoot,
    Root,
    Scalar,
    cartan_integer,
    reflect,
    root,
)
from superroots.roots import (
    d21_basis,
    eps_delta_basis,
    f4_basis,
    format_root,
    g3_basis,
)
from superroots.scalars import LAMBDA, ONE


def test_vector_arithmetic():
    a = root(1, 0, k=2, sigma=1)
    b = root(0, -1, k=-1, sigma=1)
    assert a + b == root(1, -1, k=1, sigma=2)
    assert a - b == root(1, 1, k=3)
    assert -a == root(-1, 0, k=-2, sigma=-1)
    assert a.scale(2) == root(2, 0, k=4, sigma=2)
    assert a.shift(3) == root(1, 0, k=5, sigma=1)


def test_scale_rejects_fractional_multiplicities():
    with pytest.raises(NotARoot):
        root(1, k=1).scale(Q(1, 2))
    with pytest.raises(NotARoot):
        root(1, sigma=1).scale(Q(1, 2))
    # fractional finite coordinates are fine
    assert root(1).scale(Q(1, 2)) == root(Q(1, 2))


def test_mismatched_dimensions_rejected():
    with pytest.raises(BasisMismatch):
        root(1, 0) + root(1, 0, 0)


def test_zero_predicates():
    assert root(0, 0).is_zero_vector()
    assert not root(0, 0, k=1).is_zero_vector()
    assert root(0, 0, k=1).finite_is_zero()
    assert root(0, 0, k=3, sigma=2).finite() == root(0, 0)


def test_eps_delta_basis_form():
    basis = eps_delta_basis(2, 1)
    assert basis.symbols == ("e1", "e2", "d1")
    e1, e2, d1 = (basis.unit(i) for i in range(3))
    assert basis.norm(e1) == ONE
    assert basis.norm(d1) == -ONE
    assert basis.form(e1, e2) == Scalar(Q(0))
    assert basis.form(e1, d1) == Scalar(Q(0))
    # an isotropic vector
    assert basis.norm(e1 + d1) == Scalar(Q(0))


def test_delta_and_sigma_pair_to_zero():
    basis = eps_delta_basis(1, 1)
    a = root(1, 0, k=5, sigma=-3)
    b = root(0, 1, k=-2, sigma=7)
    assert basis.form(a, b) == basis.form(a.finite(), b.finite())
    assert basis.norm(root(0, 0, k=1)) == Scalar(Q(0))
    assert basis.norm(root(0, 0, sigma=1)) == Scalar(Q(0))


def test_exceptional_basis_norms():
    f4 = f4_basis()
    assert f4.norm(f4.unit_named("e")) == Scalar(Q(3))
    assert f4.norm(f4.unit_named("d1")) == -ONE
    g3 = g3_basis()
    assert g3.norm(g3.unit_named("nu")) == Scalar(Q(-2))
    assert g3.norm(g3.unit_named("e1")) == ONE
    d21 = d21_basis()
    assert d21.norm(d21.unit_named("g1")) == LAMBDA
    assert d21.norm(d21.unit_named("g2")) == Scalar(Q(-1), Q(-1))
    assert d21.norm(d21.unit_named("g3")) == ONE
    # the three generators' norms sum to zero: lambda + (-1-lambda) + 1
    total = sum((d21.norm(d21.unit(i)) for i in range(3)), Scalar(Q(0)))
    assert total == Scalar(Q(0))


def test_cartan_integer_examples():
    basis = eps_delta_basis(2, 1)
    e1, e2, d1 = (basis.unit(i) for i in range(3))
    assert cartan_integer(basis, e1 - e2, e1 - e2) == 2
    assert cartan_integer(basis, e1 + e2, e1 - e2) == 0
    assert cartan_integer(basis, e1, e1 - e2) == 1
    assert cartan_integer(basis, d1, d1) == 2
    # a pairing against a short root
    assert cartan_integer(basis, e1 - e2, e1) == 2


def test_cartan_integer_rejects_isotropic():
    basis = eps_delta_basis(1, 1)
    iso = root(1, 1)
    with pytest.raises(IsotropicReflectionError):
        cartan_integer(basis, root(1, 0), iso)
    with pytest.raises(IsotropicReflectionError):
        reflect(basis, root(1, 0), iso)


def test_cartan_integer_lambda_dependent_pairs():
    """In the rank-3 family the pairing is rational even though individual
    form values carry lambda."""
    d21 = d21_basis()
    g1 = d21.unit_named("g1")
    assert cartan_integer(d21, g1.scale(2), g1.scale(2)) == 2
    iso = d21.unit_named("g1") + d21.unit_named("g2") + d21.unit_named("g3")
    assert d21.norm(iso) == Scalar(Q(0))
    with pytest.raises(IsotropicReflectionError):
        cartan_integer(d21, g1, iso)


def test_reflect_examples():
    basis = eps_delta_basis(2, 1)
    e1, e2, d1 = (basis.unit(i) for i in range(3))
    assert reflect(basis, e1, e1 - e2) == e2
    assert reflect(basis, e2, e1 - e2) == e1
    assert reflect(basis, e1 + e2, e1 - e2) == e1 + e2
    assert reflect(basis, d1, d1) == -d1
    # reflections fix delta: (delta, alpha) = 0
    delta = root(0, 0, 0, k=1)
    assert reflect(basis, delta, e1 - e2) == delta


def test_reflect_is_involutive():
    basis = eps_delta_basis(2, 2)
    vs = [basis.unit(i) for i in range(4)]
    mirrors = [vs[0] - vs[1], vs[0] + vs[1], vs[2] - vs[3], vs[2].scale(2), vs[0]]
    for m in mirrors:
        for v in vs + [root(1, -1, 2, 0, k=3)]:
            assert reflect(basis, reflect(basis, v, m), m) == v


def test_format_root():
    basis = eps_delta_basis(2, 1)
    e1, e2, d1 = (basis.unit(i) for i in range(3))
    assert format_root(basis, e1 - e2) == "e1-e2"
    assert format_root(basis, e1 + d1.scale(2)) == "e1+2d1"
    assert format_root(basis, root(0, 0, 0, k=1)) == "d"
    assert format_root(basis, root(0, 0, 0, k=-2, sigma=1)) == "s-2d"
    assert format_root(basis, root(0, 0, 0)) == "0"
    assert format_root(basis, e1.scale(Q(1, 2))) == "1/2e1"


def test_key_is_deterministic_sort_key():
    a = root(1, 0, k=0)
    b = root(0, 1, k=1)
    assert sorted([b, a], key=Root.key) == sorted([a, b], key=Root.key)

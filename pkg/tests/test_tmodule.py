"""Module layer: vectors in T^n, norms and metrics, idempotent splitting,
submodules, distances, and bounded-set diagnostics."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicomplex import (
    E1,
    E2,
    J,
    ONE,
    Bicomplex,
    DimensionMismatch,
    EmptyCollection,
    FMetricPoint,
    Submodule,
    TVector,
    bounded_sup,
    f_metric,
    in_span,
    product_metric,
)

SQRT2 = math.sqrt(2.0)

coeff = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)
scalars = st.builds(Bicomplex, coeff, coeff, coeff, coeff)


def vectors(n: int):
    return st.lists(
        st.lists(coeff, min_size=4, max_size=4), min_size=n, max_size=n
    ).map(TVector)


def test_vector_construction_and_access():
    x = TVector.from_scalars([E1, J])
    assert x.n == 2 and len(x) == 2
    assert x[0] == E1 and x[1] == J
    with pytest.raises(ValueError):
        TVector(np.zeros((0, 4)))
    with pytest.raises(ValueError):
        TVector([[1.0, float("nan"), 0.0, 0.0]])


def test_add_and_dimension_mismatch():
    x = TVector.from_scalars([ONE, J])
    y = TVector.from_scalars([J, ONE])
    assert (x + y)[0] == ONE + J
    with pytest.raises(DimensionMismatch):
        x + TVector.from_scalars([ONE])


@given(vectors(3))
def test_partition_of_unity_scaling(x):
    recombined = x.scale(E1) + x.scale(E2)
    assert np.allclose(recombined.coeffs, x.coeffs, atol=1e-15, rtol=0)


def test_scalar_matrix_examples():
    x = TVector.from_scalars([ONE])
    assert x.scale(J) == TVector.from_scalars([J])
    y = TVector.from_scalars([Bicomplex(0.3, -0.4, 0.5, 0.9)])
    collapsed = y.scale(E2).scale(E1)
    assert np.max(np.abs(collapsed.coeffs)) == 0.0


@given(scalars, vectors(2), vectors(2))
def test_scale_distributes(w, x, y):
    lhs = (x + y).scale(w)
    rhs = x.scale(w) + y.scale(w)
    assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-13


def test_split_examples():
    p = TVector.from_scalars([J, J]).split()
    assert np.array_equal(p.v1, np.array([1 + 0j, 1 + 0j]))
    assert np.array_equal(p.v2, np.array([-1 + 0j, -1 + 0j]))
    x = TVector.from_scalars([Bicomplex(0.2, 0.6, -0.1, 0.4), J])
    ideal = x.scale(E1).split()
    assert np.max(np.abs(ideal.v2)) == 0.0


@given(vectors(4))
def test_merge_after_split_round_trip(x):
    back = x.split().merge()
    one_ulp = np.finfo(np.float64).eps * (1.0 + np.max(np.abs(x.coeffs)))
    assert np.max(np.abs(back.coeffs - x.coeffs)) <= one_ulp


@given(vectors(3))
def test_split_respects_scaling(x):
    w = Bicomplex(0.3, -0.2, 0.7, 0.1)
    hw = w.to_idempotent()
    scaled = x.scale(w).split()
    plain = x.split()
    assert np.max(np.abs(scaled.v1 - hw.h1 * plain.v1)) <= 1e-13
    assert np.max(np.abs(scaled.v2 - hw.h2 * plain.v2)) <= 1e-13


def test_vec_norm_examples():
    assert TVector.from_scalars([E1, E2]).norm() == pytest.approx(1.0, rel=1e-15)
    assert TVector.from_scalars([Bicomplex(1, 1, 1, 1)]).norm() == 2.0


@given(vectors(3))
def test_norm_component_identity(x):
    p = x.split()
    via_components = math.sqrt(
        (np.linalg.norm(p.v1) ** 2 + np.linalg.norm(p.v2) ** 2) / 2.0
    )
    assert abs(x.norm() - via_components) <= 1e-12 * (1 + x.norm())


@given(vectors(3))
def test_complex_scalars_scale_norms_exactly(x):
    alpha = complex(0.6, -0.8)
    scaled = x.scale(alpha)
    assert abs(scaled.norm() - abs(alpha) * x.norm()) <= 1e-12 * (1 + x.norm())


@given(scalars, vectors(3))
def test_ring_scalars_scale_norms_with_sqrt2(w, x):
    assert x.scale(w).norm() <= SQRT2 * w.norm() * x.norm() + 1e-12


def test_ring_scaling_bound_attained():
    g = TVector.from_scalars([Bicomplex(0.3, -0.4, 0.2, 0.9), ONE])
    x = g.scale(E1)
    ratio = x.scale(E1).norm() / (E1.norm() * x.norm())
    assert abs(ratio - SQRT2) <= 1e-14


def test_product_metric_examples():
    x = TVector.from_scalars([ONE, J])
    y = TVector.from_scalars([J, E1])
    zero = TVector.zero(2)
    assert product_metric((x, y), (x, y)) == 0.0
    assert product_metric((zero, zero), (x, zero)) == x.norm()
    with pytest.raises(DimensionMismatch):
        product_metric((x, y), (TVector.zero(3), y))


@given(vectors(2), vectors(2), vectors(2))
@settings(max_examples=100)
def test_product_metric_axioms(x, y, z):
    zero = TVector.zero(2)
    d_xy = product_metric((x, y), (y, z))
    d_yz = product_metric((y, z), (z, x))
    d_xz = product_metric((x, y), (z, x))
    assert d_xz <= d_xy + d_yz + 1e-12
    assert d_xy >= 0.0
    # translation invariance holds exactly by construction
    shift = product_metric((x + z, y + z), (y + z, z + z))
    assert abs(shift - product_metric((x, y), (y, z))) <= 1e-12 * (1 + d_xy)
    assert f_metric(x, y) == (x - y).norm()
    assert FMetricPoint.at(x).fnorm == f_metric(x, zero)


def test_submodule_bases_are_orthonormal():
    gens = [
        TVector.from_scalars([ONE, J, E1]),
        TVector.from_scalars([E2, ONE, Bicomplex(0.1, 0.2, 0.3, 0.4)]),
    ]
    Y = Submodule(3, gens)
    for B in (Y.basis1, Y.basis2):
        gram = B.conj().T @ B
        assert np.max(np.abs(gram - np.eye(B.shape[1]))) <= 1e-12


def test_submodule_component_dims_can_differ():
    g = TVector.from_scalars([ONE, J]).scale(E1)
    Y = Submodule.span(g)
    assert Y.dim1 == 1 and Y.dim2 == 0
    assert not Y.is_fundamental()
    assert Submodule.full(2).is_fundamental()


def test_distance_examples():
    Y = Submodule.span(TVector.basis(2, 0))
    x = TVector.basis(2, 1)
    result = Y.distance_to(x)
    assert result.d == pytest.approx(1.0, abs=1e-12)
    assert result.d1 == pytest.approx(1.0, abs=1e-12)
    assert result.d2 == pytest.approx(1.0, abs=1e-12)

    inside = TVector.from_scalars([Bicomplex(0.2, -0.7, 0.3, 0.1), Bicomplex()])
    r = Y.distance_to(inside)
    assert r.d <= 1e-12
    assert np.max(np.abs(r.projection.coeffs - inside.coeffs)) <= 1e-12

    zero_sub = Submodule.zero(2)
    assert zero_sub.distance_to(x).d == pytest.approx(x.norm(), rel=1e-15)


def grid_distance_oracle(x: TVector, g: TVector, lo=-2.0, hi=2.0) -> float:
    """Brute-force distance from x to the multiples w*g over a refined grid
    of the four real coefficients of w."""
    best = math.inf
    centers = (0.0, 0.0, 0.0, 0.0)
    width = hi - lo
    for _ in range(4):
        axes = [np.linspace(c - width / 2, c + width / 2, 9) for c in centers]
        for a in axes[0]:
            for b in axes[1]:
                for c in axes[2]:
                    for d in axes[3]:
                        dist = (x - g.scale(Bicomplex(a, b, c, d))).norm()
                        if dist < best:
                            best = dist
                            found = (a, b, c, d)
        centers = found
        width /= 4.0
    return best


def test_distance_matches_grid_oracle():
    g = TVector.basis(2, 0)
    x = TVector.basis(2, 1)
    assert abs(Submodule.span(g).distance_to(x).d - grid_distance_oracle(x, g)) <= 1e-2

    g2 = TVector.from_scalars([ONE, J])
    x2 = TVector.from_scalars([Bicomplex(0.5), Bicomplex(0.25, 0.5)])
    lib = Submodule.span(g2).distance_to(x2).d
    assert abs(lib - grid_distance_oracle(x2, g2)) <= 1e-2


@given(vectors(3))
@settings(max_examples=50)
def test_projection_is_idempotent(x):
    Y = Submodule.span(
        TVector.from_scalars([ONE, J, E1]), TVector.from_scalars([E2, ONE, J])
    )
    result = Y.distance_to(x)
    assert Y.distance_to(result.projection).d <= 1e-12 * (1 + x.norm())


def test_in_span_examples():
    g = TVector.from_scalars([Bicomplex(0.4, 0.1, -0.2, 0.8), ONE])
    Y = Submodule.span(g)
    assert in_span(g.scale(E1), Y)
    assert not in_span(TVector.from_scalars([Bicomplex(), ONE + J]), Y)

    full = Submodule.full(3)
    probe = TVector.from_scalars([J, E1, Bicomplex(0.1, 0.2, 0.3, 0.4)])
    assert in_span(probe, full)


def test_bounded_sup():
    assert bounded_sup([TVector.zero(2)]) == 0.0
    points = [TVector.from_scalars([E1]), TVector.from_scalars([E2]), TVector.from_scalars([ONE])]
    assert bounded_sup(points) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(EmptyCollection):
        bounded_sup([])


def test_bounded_sup_of_convergent_sequence():
    x = TVector.from_scalars([Bicomplex(0.3, 0.1, -0.5, 0.7), J])
    sequence = [x.scale(1.0 / k) for k in range(1, 50)]
    assert bounded_sup(sequence) == pytest.approx(x.norm(), rel=1e-15)


def test_vector_json_and_csv_round_trip():
    x = TVector.from_scalars([Bicomplex(0.1, -2.5e-7, 3.0, -4.125), J])
    assert TVector.from_json(x.to_json()) == x
    assert TVector.from_csv(x.to_csv()) == x


def test_submodule_json_round_trip():
    Y = Submodule(2, [TVector.from_scalars([ONE, J])])
    back = Submodule.from_json(Y.to_json())
    assert back.n == 2
    assert np.allclose(np.abs(back.basis1.conj().T @ Y.basis1), 1.0)


def test_from_split_requires_matching_shapes():
    with pytest.raises(DimensionMismatch):
        TVector.from_split(np.array([1 + 0j]), np.array([1 + 0j, 2 + 0j]))
    with pytest.raises(DimensionMismatch):
        Submodule(3, [TVector.zero(2)])
    with pytest.raises(DimensionMismatch):
        Submodule.full(2).distance_to(TVector.zero(3))

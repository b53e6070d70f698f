"""Per-digit functions: pointwise values, piecewise forms, exact integrals.

The piecewise representation of the matched-index cross aggregate for the
identity permutation has a known cellwise closed form (quadratics P_k below
the middle cell and Q_k above it); tests freeze that as an independent
oracle for the whole construction pipeline.
"""

import itertools
import random
from fractions import Fraction

import pytest

from symdisc.formulas import product_sum_correction, shifted_product_sum_correction
from symdisc.permutations import Permutation, conjugate, reversal
from symdisc.phi import (
    CROSS_SUM,
    CROSS_SUM_DOWN,
    CROSS_SUM_UP,
    SQUARE_SUM,
    SUM,
    PhiKind,
    PiecewisePoly,
    phi,
    phi_aggregate,
    phi_as_piecewise,
    phi_integral,
    phi_integral_closed,
)

F = Fraction


def random_permutation(b, rng):
    images = list(range(b))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_phi_examples():
    assert phi(2, 1, Permutation.identity(2), F(1, 2)) == F(1, 2)
    assert phi(3, 2, reversal(3), F(1, 3)) == F(-2, 3)
    for x in (F(0), F(1, 7), F(5, 7), F(1)):
        assert phi(5, 0, Permutation.identity(5), x) == 0
        assert phi(5, 3, Permutation.identity(5), F(0)) == 0


def test_phi_rejects_bad_digit():
    with pytest.raises(ValueError):
        phi(3, 3, Permutation.identity(3), F(1, 2))
    with pytest.raises(ValueError):
        phi(3, -1, Permutation.identity(3), F(1, 2))


def test_phi_is_periodic():
    sigma = Permutation((1, 0, 2, 4, 3))
    for k in range(20):
        x = F(k, 19)
        assert phi(5, 2, sigma, x) == phi(5, 2, sigma, x + 3)
        assert phi(5, 2, sigma, x) == phi(5, 2, sigma, x - 2)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_phi_identity_closed_form(b):
    """For the identity: (b-h)x below h/b, h(1-x) above."""
    sigma = Permutation.identity(b)
    for h in range(b):
        for k in range(60):
            x = F(k, 59)
            expected = (b - h) * x if x <= F(h, b) else h * (1 - x)
            if x < 1:
                assert phi(b, h, sigma, x) == expected


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_phi_reversal_closed_form(b):
    """For the reversal: -hx below (b-h)/b, (b-h)(x-1) above."""
    sigma = reversal(b)
    for h in range(b):
        for k in range(59):
            x = F(k, 59)
            expected = -h * x if x <= F(b - h, b) else (b - h) * x - (b - h)
            assert phi(b, h, sigma, x) == expected


def test_phi_continuity_and_boundary_values():
    rng = random.Random(7)
    for b in (2, 3, 5, 6):
        sigma = random_permutation(b, rng)
        for h in range(b):
            poly = phi_as_piecewise(b, sigma, PhiKind.single(h))
            for k in range(1, b):
                x = F(k, b)
                left = poly.coeffs[k - 1]
                right = poly.coeffs[k]
                assert left[0] + left[1] * x == right[0] + right[1] * x
            assert poly.evaluate(F(0)) == 0
            assert poly.evaluate(F(1)) == 0


def test_aggregate_examples():
    id2 = Permutation.identity(2)
    assert phi_aggregate(2, id2, CROSS_SUM, F(1, 2)) == F(-1, 4)
    assert phi_aggregate(2, id2, SQUARE_SUM, F(1, 2)) == F(1, 4)
    for b in (2, 3, 4):
        assert phi_aggregate(b, Permutation.identity(b), SUM, F(0)) == 0


def test_single_piecewise_matches_example():
    poly = phi_as_piecewise(2, Permutation.identity(2), PhiKind.single(1))
    assert poly.coeffs == ((F(0), F(1), F(0)), (F(1), F(-1), F(0)))


def test_cross_piecewise_first_cell_is_minus_x_squared():
    poly = phi_as_piecewise(2, Permutation.identity(2), CROSS_SUM)
    assert poly.coeffs[0] == (F(0), F(0), F(-1))


def _pk(b, k):
    """Cell polynomial of the identity cross aggregate for k <= (b-1)/2."""
    return (
        F(0),
        -(F(2 * k**3, 3) + k * k + F(k, 3)),
        b * k * k + b * k - F(b**3, 6) + F(b, 6),
    )


def _qk(b, k):
    """Cell polynomial of the identity cross aggregate for k > (b-1)/2."""
    c0 = F(2 * k**3, 3) - b * k * k + k * k - b * k + F(k, 3) + F(b**3, 6) - F(b, 6)
    c1 = 2 * b * b * k - F(2 * k**3, 3) - k * k - F(k, 3) - b**3 + b * b
    c2 = b * k * k - 2 * b * b * k + b * k + F(5 * b**3, 6) - b * b + F(b, 6)
    return (c0, c1, c2)


@pytest.mark.parametrize("b", [2, 3, 4, 5, 6])
def test_identity_cross_aggregate_matches_cell_formulas(b):
    poly = phi_as_piecewise(b, Permutation.identity(b), CROSS_SUM)
    for k in range(b):
        expected = _pk(b, k) if k <= (b - 1) / 2 else _qk(b, k)
        assert poly.coeffs[k] == expected, (b, k)


@pytest.mark.parametrize("b", [2, 3, 4, 5, 6, 7])
def test_identity_cross_integral_closed_form(b):
    integral = phi_as_piecewise(b, Permutation.identity(b), CROSS_SUM).integral()
    if b % 2 == 0:
        assert integral == F(-1, 90 * b) - F(7 * b**3, 720)
    else:
        assert integral == F(7, 720 * b) - F(7 * b**3, 720)


def test_integral_anchors():
    id2 = Permutation.identity(2)
    assert phi_integral(2, id2, SQUARE_SUM) == F(1, 24)
    assert phi_integral(2, id2, CROSS_SUM) == F(-1, 24)
    assert phi_integral(2, id2, CROSS_SUM_UP) == 0
    assert phi_integral(2, id2, CROSS_SUM_DOWN) == 0


def test_sum_integral_closed_form_examples():
    assert phi_integral_closed(2, Permutation.identity(2)) == F(1, 8)
    assert phi_integral_closed(2, reversal(2)) == F(-1, 8)
    # independent integration is the authority; both routes give 2/9 here
    assert phi_integral(3, Permutation.identity(3), SUM) == F(2, 9)
    assert phi_integral_closed(3, Permutation.identity(3)) == F(2, 9)


@pytest.mark.parametrize("b", range(2, 7))
def test_sum_integral_equals_closed_form_exhaustive(b):
    for images in itertools.permutations(range(b)):
        sigma = Permutation(images)
        assert phi_integral(b, sigma, SUM) == phi_integral_closed(b, sigma)


def test_sum_integral_equals_closed_form_sampled_large():
    rng = random.Random(123)
    for b in (7, 8):
        for _ in range(300):
            sigma = random_permutation(b, rng)
            assert phi_integral(b, sigma, SUM) == phi_integral_closed(b, sigma)


def test_conjugate_reversal_identity_piecewise():
    """phi_h of the conjugate is minus phi_{b-h} of the original, exactly."""
    rng = random.Random(31)
    for b in range(2, 8):
        for sigma in [Permutation.identity(b), reversal(b), random_permutation(b, rng)]:
            bar = conjugate(sigma)
            for h in range(1, b):
                assert phi_as_piecewise(b, bar, PhiKind.single(h)) == -phi_as_piecewise(
                    b, sigma, PhiKind.single(b - h)
                )
            assert phi_as_piecewise(b, bar, SUM) == -phi_as_piecewise(b, sigma, SUM)
            assert phi_as_piecewise(b, bar, SQUARE_SUM) == phi_as_piecewise(b, sigma, SQUARE_SUM)


def test_piecewise_equals_pointwise_at_401_samples():
    rng = random.Random(99)
    for b in (2, 3, 5):
        sigma = random_permutation(b, rng)
        bar = conjugate(sigma)
        for kind in (SUM, SQUARE_SUM, CROSS_SUM, CROSS_SUM_UP, CROSS_SUM_DOWN):
            poly = phi_as_piecewise(b, sigma, kind)
            for k in range(401):
                x = F(k, 400)
                if kind.tag == "sum":
                    direct = sum(phi(b, h, sigma, x) for h in range(b))
                elif kind.tag == "square_sum":
                    direct = sum(phi(b, h, sigma, x) ** 2 for h in range(b))
                elif kind.tag == "cross_sum":
                    direct = sum(phi(b, h, sigma, x) * phi(b, h, bar, x) for h in range(b))
                elif kind.tag == "cross_sum_up":
                    direct = sum(phi(b, h + 1, sigma, x) * phi(b, h, bar, x) for h in range(b - 1))
                else:
                    direct = sum(phi(b, h, sigma, x) * phi(b, h + 1, bar, x) for h in range(b - 1))
                assert poly.evaluate(x) == direct, (b, kind, x)


@pytest.mark.parametrize(
    "b,j,expected",
    [
        (2, 1, F(-1, 12)),
        (3, 1, F(-2, 27)),
        (4, 1, F(-18, 144)),
    ],
)
def test_product_sum_correction_values(b, j, expected):
    assert product_sum_correction(b, j) == expected


def test_shifted_product_sum_correction_values():
    assert shifted_product_sum_correction(2, 1) == 0
    assert shifted_product_sum_correction(3, 1) == F(-2, 27)
    assert shifted_product_sum_correction(4, 1) == F(-48, 36 * 16)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_grid_sum_identities(b):
    """Grid sums of the cross aggregates equal b^j (integral + correction/2).

    Holds for every permutation with the same two correction constants.
    """
    rng = random.Random(500 + b)
    sigmas = [Permutation.identity(b)] + [random_permutation(b, rng) for _ in range(5)]
    for sigma in sigmas:
        for j in (1, 2, 3):
            grid = b**j
            for kind, corr in (
                (CROSS_SUM, product_sum_correction(b, j)),
                (CROSS_SUM_UP, shifted_product_sum_correction(b, j)),
                (CROSS_SUM_DOWN, shifted_product_sum_correction(b, j)),
            ):
                poly = phi_as_piecewise(b, sigma, kind)
                left = sum(poly.evaluate(F(k % grid, grid)) for k in range(1, grid + 1))
                assert left == grid * (poly.integral() + corr / 2), (b, sigma, j, kind)


def test_piecewise_degree_guard():
    quad = phi_as_piecewise(2, Permutation.identity(2), SQUARE_SUM)
    lin = phi_as_piecewise(2, Permutation.identity(2), SUM)
    with pytest.raises(ValueError):
        quad * lin
    assert (lin * lin).degree == 2


def test_piecewise_evaluate_bounds():
    poly = phi_as_piecewise(2, Permutation.identity(2), SUM)
    with pytest.raises(ValueError):
        poly.evaluate(F(3, 2))


def test_phikind_validation():
    with pytest.raises(ValueError):
        PhiKind("sum", h=1)
    with pytest.raises(ValueError):
        PhiKind("single")
    with pytest.raises(ValueError):
        PhiKind("bogus")
    with pytest.raises(ValueError):
        phi_as_piecewise(3, Permutation.identity(3), PhiKind.single(3))

import mpmath
import pytest

from orbifusion.chebyshev import ChebPoly, cheb_u
from orbifusion.labels import Sector, enumerate_irreducibles, make_label, parse_label
from orbifusion.qdim import (
    QDimElement,
    global_dimension,
    has_unit_qdim,
    qdim_exact,
    qdim_index,
    qdim_numeric,
    reduction_modulus,
)

ONE = ChebPoly((1,))


def sine_ratio(i, k, dps=30):
    """Independent numeric route: sin((i+1)pi/(k+2)) / sin(pi/(k+2))."""
    with mpmath.workdps(dps):
        theta = mpmath.pi / (k + 2)
        return mpmath.sin((i + 1) * theta) / mpmath.sin(theta)


def test_vacuum_and_top_index_are_units():
    for k in range(1, 13):
        assert qdim_index(0, k).is_one()
        assert qdim_index(k, k).is_one()


def test_qdim_ignores_sector_and_j():
    for k in (1, 3, 6):
        for i in range(k + 1):
            values = {
                qdim_exact(make_label(sector, i, j, k), k)
                for sector in Sector
                for j in range(3)
            }
            assert len(values) == 1


@pytest.mark.parametrize("k", range(1, 13))
def test_symmetry_i_to_k_minus_i(k):
    for i in range(k + 1):
        assert qdim_index(i, k) == qdim_index(k - i, k)


@pytest.mark.parametrize("k", range(1, 13))
def test_exact_matches_numeric_for_all_labels(k):
    # evaluate each residue at x = 2 cos(pi/(k+2)) and compare with the
    # direct sine-ratio route, which never touches polynomial arithmetic
    for i in range(k + 1):
        exact_value = qdim_index(i, k).numeric(precision=25)
        assert abs(exact_value - sine_ratio(i, k)) < mpmath.mpf(10) ** -20


def test_qdim_numeric_examples():
    assert qdim_numeric(parse_label("u:1:0", 1), 1, 10) == pytest.approx(1.0, abs=1e-10)
    assert qdim_numeric(parse_label("u:1:0", 2), 2, 10) == pytest.approx(2 ** 0.5, abs=1e-10)
    assert qdim_numeric(parse_label("u:2:0", 2), 2, 10) == pytest.approx(1.0, abs=1e-10)
    # golden ratio at level 3
    assert qdim_numeric(parse_label("t1:1:0", 3), 3, 12) == pytest.approx((1 + 5 ** 0.5) / 2, abs=1e-12)
    with pytest.raises(ValueError, match="precision"):
        qdim_numeric(parse_label("u:0:0", 1), 1, 0)


@pytest.mark.parametrize("k", range(1, 13))
def test_positivity(k):
    # true values are >= 1; allow rounding slack at the requested precision
    for lab in enumerate_irreducibles(k):
        assert qdim_numeric(lab, k, 15) >= 1 - mpmath.mpf(10) ** -15


def test_residues_are_reduced():
    for k in (1, 2, 5, 11):
        modulus = reduction_modulus(k)
        for i in range(k + 1):
            assert qdim_index(i, k).residue.degree < modulus.degree
    with pytest.raises(ValueError, match="not reduced"):
        QDimElement(cheb_u(5), 2)


def test_exact_arithmetic_level_mismatch():
    with pytest.raises(ValueError, match="level mismatch"):
        qdim_index(0, 2) * qdim_index(0, 3)


def test_spot_residue_identity():
    # S_1^2 = S_0 + S_2 numerically; as residues at level 2 both sides
    # reduce to the image of x^2
    lhs = qdim_index(1, 2) * qdim_index(1, 2)
    rhs = qdim_index(0, 2) + qdim_index(2, 2)
    assert lhs == rhs


def test_global_dimension_small_levels():
    exact1, numeric1 = global_dimension(1)
    assert exact1.residue == ChebPoly((18,))
    assert abs(numeric1 - 18) < mpmath.mpf(10) ** -9

    exact2, numeric2 = global_dimension(2)
    assert exact2.residue == ChebPoly((36,))
    assert abs(numeric2 - 36) < mpmath.mpf(10) ** -9

    # level 3: 9 * (1 + phi^2 + phi^2 + 1) = 45 + 9*sqrt(5), irrational
    exact3, numeric3 = global_dimension(3)
    assert exact3.residue == ChebPoly((36, 18))
    with mpmath.workdps(25):
        assert abs(numeric3 - (45 + 9 * mpmath.sqrt(5))) < mpmath.mpf(10) ** -9


@pytest.mark.parametrize("k", range(1, 9))
def test_global_dimension_agrees_with_direct_label_sum(k):
    _, numeric = global_dimension(k)
    with mpmath.workdps(30):
        direct = mpmath.fsum(
            qdim_numeric(lab, k, 25) ** 2 for lab in enumerate_irreducibles(k)
        )
    assert abs(numeric - direct) < mpmath.mpf(10) ** -9


def test_has_unit_qdim_patterns():
    assert all(has_unit_qdim(lab, 1) for lab in enumerate_irreducibles(1))
    for k in range(2, 13):
        for lab in enumerate_irreducibles(k):
            assert has_unit_qdim(lab, k) == (lab.i in (0, k))

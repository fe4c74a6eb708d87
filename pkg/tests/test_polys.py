from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centerfocus import (
    BiPoly,
    NonRealInput,
    R2,
    X,
    Y,
    circle_average,
    evaluate,
    from_complex,
    homogeneous_components,
    poisson_bracket,
    to_complex,
)
from centerfocus.poly import ComplexCoeffs

fracs = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=9
)


def small_polys(max_degree=4):
    keys = st.tuples(
        st.integers(min_value=0, max_value=max_degree),
        st.integers(min_value=0, max_value=max_degree),
    )
    return st.dictionaries(keys, fracs, max_size=6).map(BiPoly)


def test_zero_coefficients_dropped():
    p = BiPoly({(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert list(p.terms()) == [((0, 1), Fraction(2))]


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): Fraction(1)})


def test_graded_lex_term_order():
    p = BiPoly({(0, 2): 1, (2, 0): 1, (1, 0): 1, (1, 1): 1})
    assert [key for key, _ in p.terms()] == [(1, 0), (2, 0), (1, 1), (0, 2)]


def test_arithmetic_square():
    assert (X + Y) ** 2 == BiPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_degree_conventions():
    assert BiPoly().degree() == -1
    assert BiPoly.constant(3).degree() == 0
    assert R2.degree() == 2
    assert R2.is_homogeneous()
    assert not (R2 + X).is_homogeneous()


def test_diff():
    p = X**3 * Y
    assert p.diff_x() == 3 * X**2 * Y
    assert p.diff_y() == X**3


def test_homogeneous_split_covers():
    p = X**3 + X * Y + BiPoly.constant(5)
    comps = homogeneous_components(p)
    assert sorted(c.degree for c in comps) == [0, 2, 3]
    total = BiPoly()
    for c in comps:
        total = total + c.inner
    assert total == p


@given(small_polys(), small_polys(), small_polys())
def test_distributive(f, g, h):
    assert (f + g) * h == f * h + g * h


@given(small_polys(), small_polys())
def test_product_rule(f, g):
    assert (f * g).diff_x() == f.diff_x() * g + f * g.diff_x()


def test_circle_average_wallis():
    assert circle_average(X**2) == Fraction(1, 2)
    assert circle_average(X**4) == Fraction(3, 8)
    assert circle_average(X**2 * Y**2) == Fraction(1, 8)
    assert circle_average(X**3 * Y) == 0
    assert circle_average(X * Y**5) == 0
    assert circle_average(R2**3) == 1


@given(small_polys())
def test_rotational_images_average_to_zero(f):
    # x f_y - y f_x integrates to zero around the circle
    for comp in homogeneous_components(X * f.diff_y() - Y * f.diff_x()):
        assert circle_average(comp) == 0


def test_poisson_bracket_antisymmetry():
    f = X**2 * Y + Y
    g = X * Y**2
    assert poisson_bracket(f, g) == -poisson_bracket(g, f)
    assert poisson_bracket(f, f).is_zero()


def test_evaluate():
    p = X**2 + 2 * X * Y
    assert evaluate(p, 1.5, -0.5) == pytest.approx(1.5**2 + 2 * 1.5 * -0.5)


@given(small_polys())
def test_complex_round_trip(p):
    assert from_complex(to_complex(p)) == p


@given(small_polys())
def test_complex_coeffs_conjugate_symmetric(p):
    assert to_complex(p).conjugate_symmetric()


def test_from_complex_rejects_non_real():
    bad = ComplexCoeffs({(1, 0): (Fraction(0), Fraction(1))})
    with pytest.raises(NonRealInput):
        from_complex(bad)

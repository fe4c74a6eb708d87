import random
from fractions import Fraction

import pytest

from centerfocus import (
    BiPoly,
    NonNormalizedLinearPart,
    NotQuasiHomogeneous,
    OrderTooSmall,
    PlanarField,
    compute_lyapunov,
    constants_quasihomogeneous,
    lyapunov_function,
    quasihomogeneous_parts,
    residual,
)
from helpers import bautin_field, cubic_field, nl_field, radial_cubic, rand_frac
from oracles import sympy_lyapunov


def first_nonzero(vs):
    for k, v in enumerate(vs, start=1):
        if v:
            return k, v
    return None, None


class TestPlanarFieldValidation:
    def test_wrong_linear_part(self):
        with pytest.raises(NonNormalizedLinearPart):
            PlanarField(p=BiPoly({(0, 1): -2}), q=BiPoly({(1, 0): 1}))

    def test_missing_rotation(self):
        with pytest.raises(NonNormalizedLinearPart):
            PlanarField(p=BiPoly({(0, 1): -1}), q=BiPoly({(0, 1): 1}))

    def test_constant_term_rejected(self):
        with pytest.raises(NonNormalizedLinearPart):
            PlanarField(
                p=BiPoly({(0, 1): -1, (0, 0): 1}), q=BiPoly({(1, 0): 1})
            )

    def test_degree(self):
        assert radial_cubic().degree == 3


def test_order_too_small():
    with pytest.raises(OrderTooSmall):
        compute_lyapunov(radial_cubic(), 1)


def test_linear_system_is_center_candidate():
    res = compute_lyapunov(nl_field(), 8)
    assert res.verdict == "CenterCandidate"
    assert res.describe() == "CenterCandidate(8)"
    assert all(v == 0 for v in res.v_list)
    assert all(h.inner.is_zero() for h in res.h_list)


def test_result_shapes():
    res = compute_lyapunov(bautin_field(1, 2, 3, 4, 5), 6)
    assert len(res.v_list) == 3
    assert [h.degree for h in res.h_list] == [3, 4, 5, 6, 7]
    assert res.h(4) == res.h_list[1].inner


def test_radial_cubic_first_constant():
    res = compute_lyapunov(radial_cubic(), 2)
    assert res.v_list == (Fraction(1),)
    assert res.verdict == "UnstableFocus"
    assert res.verdict_index == 1
    assert res.describe() == "UnstableFocus(1)"


def test_bautin_first_constant_closed_form():
    """V1 = -(1/8) lam5 (lam3 - lam6), the stability-correct sign."""
    rng = random.Random(101)
    for _ in range(50):
        l2, l3, l4, l5, l6 = (rand_frac(rng) for _ in range(5))
        res = compute_lyapunov(bautin_field(l2, l3, l4, l5, l6), 2)
        assert res.v_list[0] == -Fraction(1, 8) * l5 * (l3 - l6)


def test_against_sympy_recursion():
    """First nonzero constant agrees with a dense independent recursion."""
    rng = random.Random(102)
    for _ in range(4):
        field = bautin_field(*(rand_frac(rng, 3) for _ in range(5)))
        eng = compute_lyapunov(field, 4)
        assert first_nonzero(eng.v_list) == first_nonzero(sympy_lyapunov(field, 4))
    field = cubic_field(*(rand_frac(rng, 2) for _ in range(8)))
    eng = compute_lyapunov(field, 4)
    assert first_nonzero(eng.v_list) == first_nonzero(sympy_lyapunov(field, 4))


def test_center_sequences_match_oracle_exactly():
    # all-zero constant lists are gauge-free, so full equality applies
    field = bautin_field(0, 3, -1, 0, 2)
    assert list(compute_lyapunov(field, 6).v_list) == sympy_lyapunov(field, 6)


def test_gauge_choice_moves_later_constants_only():
    rng = random.Random(103)
    field = bautin_field(1, 2, 0, Fraction(1, 2), -1)
    base = compute_lyapunov(field, 6)
    k0, v0 = first_nonzero(base.v_list)
    for _ in range(5):
        gauges = {4: rand_frac(rng), 6: rand_frac(rng)}
        alt = compute_lyapunov(field, 6, gauges=gauges)
        assert first_nonzero(alt.v_list) == (k0, v0)


def test_residual_starts_past_solved_degrees():
    field = bautin_field(1, 1, 1, 1, 1)
    res = compute_lyapunov(field, 6)
    r = residual(field, res)
    assert not r.is_zero()
    assert min(i + j for (i, j), _ in r.terms()) > res.order + 1


def test_lyapunov_function_leading_term():
    res = compute_lyapunov(radial_cubic(), 4)
    v = lyapunov_function(res)
    assert v.homogeneous_component(2) == BiPoly(
        {(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)}
    )


def test_quasihomogeneous_parts_radial_coefficient():
    m, h, g, c = quasihomogeneous_parts(radial_cubic())
    assert (m, c) == (3, Fraction(1))
    assert h.is_zero() and g.is_zero()


def test_quasihomogeneous_rejects_mixed_degrees():
    field = nl_field({(2, 0): 1, (3, 0): 1})
    with pytest.raises(NotQuasiHomogeneous):
        quasihomogeneous_parts(field)


def test_qh_specialization_matches_general_recursion():
    rng = random.Random(104)
    for _ in range(20):
        field = cubic_field(*(rand_frac(rng) for _ in range(8)))
        fast = constants_quasihomogeneous(field, 6)
        slow = compute_lyapunov(field, 6)
        assert fast.v_list == slow.v_list
        assert fast.verdict == slow.verdict

"""Structural classifiers for planar fields.

Covers the (H, g) decomposition, the weak center proportionality test,
axis reversibility and Cauchy-Riemann detection in the complex basis,
the Hamiltonian test, and the classical quadratic center conditions
(the five-parameter and six-parameter families).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ObstructionNonzeroAverage
from .homological import solve_homological
from .lyapunov import PlanarField
from .poly import (
    BiPoly,
    R2,
    circle_average,
    homogeneous_components,
    to_complex,
)


@dataclass(frozen=True)
class HGDecomposition:
    """Nonlinear part written as X = -h_y - y g, Y = h_x + x g."""

    h: BiPoly
    g: BiPoly


def hg_decompose(field: PlanarField) -> HGDecomposition:
    """Split the nonlinear part into a gradient piece and a rotation multiplier.

    g is solved slice by slice from D g = div(X, Y); every even-degree
    divergence slice must average to zero over the circle, otherwise no
    decomposition exists and ObstructionNonzeroAverage is raised. h is
    then recovered from Euler's identity and both defining identities
    are re-verified exactly.
    """
    xs, ys = field.nonlinear()
    div = xs.diff_x() + ys.diff_y()
    g = BiPoly()
    for comp in homogeneous_components(div):
        if comp.degree % 2 == 0:
            avg = circle_average(comp)
            if avg:
                raise ObstructionNonzeroAverage(comp.degree, avg)
        g = g + solve_homological(comp).f.inner
    x_mono = BiPoly.monomial(1, 0)
    y_mono = BiPoly.monomial(0, 1)
    h = BiPoly()
    for k in range(2, field.degree + 1):
        xk = xs.homogeneous_component(k)
        yk = ys.homogeneous_component(k)
        gk = g.homogeneous_component(k - 1)
        ht = (x_mono * (yk - x_mono * gk) - y_mono * (xk + y_mono * gk)) * Fraction(
            1, k + 1
        )
        h = h + ht
    # solvability was established slice by slice; failure here is a bug
    assert -h.diff_y() - y_mono * g == xs
    assert h.diff_x() + x_mono * g == ys
    return HGDecomposition(h=h, g=g)


@dataclass(frozen=True)
class WeakCenterResult:
    mu: Fraction
    integral_ok: bool
    lambda_darboux: Fraction | None


def weak_center_check(field: PlanarField) -> WeakCenterResult | None:
    """Search for rational mu with (x^2+y^2) div(X,Y) = mu (x X + y Y).

    mu is pinned by the first nonzero coefficient of x X + y Y and the
    identity is then verified globally; no fitting. Returns None when
    no mu makes the identity exact. integral_ok reports the side
    condition: every even-degree slice of x X + y Y averages to zero.
    """
    xs, ys = field.nonlinear()
    lhs = R2 * (xs.diff_x() + ys.diff_y())
    s = BiPoly.monomial(1, 0) * xs + BiPoly.monomial(0, 1) * ys
    integral_ok = all(
        circle_average(comp) == 0
        for comp in homogeneous_components(s)
        if comp.degree % 2 == 0
    )
    if s.is_zero():
        if not lhs.is_zero():
            return None
        return WeakCenterResult(Fraction(0), integral_ok, None)
    key = next(iter(s.terms()))[0]
    mu = lhs.coeff(*key) / s.coeff(*key)
    if lhs != s * mu:
        return None
    lam = Fraction(2) / mu if mu else None
    return WeakCenterResult(mu, integral_ok, lam)


@dataclass(frozen=True)
class SymmetryReport:
    rev_x_axis: bool
    rev_y_axis: bool
    cauchy_riemann: bool
    hamiltonian: bool


def detect_symmetries(field: PlanarField) -> SymmetryReport:
    """Exact coefficient criteria for the four structural symmetries.

    Reversibility is read off the z-zbar coefficients a_nk of
    z' = iz + sum a_nk z^n zbar^k: invariance under (x,-y,-t) means
    every a_nk is purely imaginary; invariance under (-x,y,-t) means
    a_nk = (-1)^(n+k) conj(a_nk).
    """
    xs, ys = field.nonlinear()
    p_cc = to_complex(xs)
    q_cc = to_complex(ys)
    a: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    for key, (re, im) in p_cc.entries.items():
        a[key] = (re, im)
    for key, (re, im) in q_cc.entries.items():
        pre, pim = a.get(key, (Fraction(0), Fraction(0)))
        a[key] = (pre - im, pim + re)  # add i * (re + i im)
    rev_x = all(re == 0 for re, _ in a.values())
    rev_y = True
    for (n, k), (re, im) in a.items():
        if (n + k) % 2 == 0:
            if im != 0:
                rev_y = False
                break
        else:
            if re != 0:
                rev_y = False
                break
    cr = xs.diff_x() == ys.diff_y() and xs.diff_y() == -ys.diff_x()
    ham = (field.p.diff_x() + field.q.diff_y()).is_zero()
    return SymmetryReport(
        rev_x_axis=rev_x, rev_y_axis=rev_y, cauchy_riemann=cr, hamiltonian=ham
    )


def bautin_classify(
    lam2: Fraction | int,
    lam3: Fraction | int,
    lam4: Fraction | int,
    lam5: Fraction | int,
    lam6: Fraction | int,
) -> set[str]:
    """Which of the four quadratic center conditions hold for these parameters."""
    l2, l3, l4, l5, l6 = (Fraction(v) for v in (lam2, lam3, lam4, lam5, lam6))
    cases = set()
    if l4 == 0 and l5 == 0:
        cases.add("i")
    if l2 == 0 and l5 == 0:
        cases.add("ii")
    if l3 == l6:
        cases.add("iii")
    if l5 == 0 and l4 + 5 * (l3 - l6) == 0 and l3 * l6 - 2 * l6**2 - l2**2 == 0:
        cases.add("iv")
    return cases


def schlomiuk_classify(
    a: Fraction | int,
    b: Fraction | int,
    c: Fraction | int,
    k: Fraction | int,
    l: Fraction | int,
    m: Fraction | int,
) -> set[str]:
    """Which of the three center conditions hold for the clockwise quadratic family."""
    a, b, c, k, l, m = (Fraction(v) for v in (a, b, c, k, l, m))
    cases = set()
    ac = a + c
    km = k + m
    if ac * (b + 2 * m) - (2 * a + l) * km == 0:
        second = (
            k * ac**3
            + (l - a) * ac**2 * km
            + (m - b) * ac * km**2
            - c * km**3
        )
        if second == 0:
            cases.add("i")
    if 2 * a + l == 0 and b + 2 * m == 0:
        cases.add("ii")
    if (
        5 * ac - (2 * a + l) == 0
        and 5 * km - (b + 2 * m) == 0
        and c**2 + c * ac + k**2 + k * km == 0
    ):
        cases.add("iii")
    return cases

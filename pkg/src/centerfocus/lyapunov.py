"""Formal Lyapunov series and focus quantities for planar fields.

For x' = -y + X(x, y), y' = x + Y(x, y) with polynomial nonlinearities
we build V = (x^2+y^2)/2 + H_3 + H_4 + ... degree by degree so that

    dV/dt = V_1 (x^2+y^2)^2 + V_2 (x^2+y^2)^3 + ...

The constants V_k are exact rationals. The sign of the first nonzero
one classifies the origin as a stable or unstable focus; if every
computed constant vanishes the origin is a center candidate to the
inspected order (never a proven center).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import NonNormalizedLinearPart, NotQuasiHomogeneous, OrderTooSmall
from .homological import apply_rotational, radial_power, solve_homological
from .poly import (
    BiPoly,
    HomogeneousPoly,
    R2,
    circle_average,
    homogeneous_components,
    poisson_bracket,
)

H2 = BiPoly({(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)})


@dataclass(frozen=True)
class PlanarField:
    """Polynomial field x' = p(x, y), y' = q(x, y) with linear part (-y, x)."""

    p: BiPoly
    q: BiPoly

    def __post_init__(self):
        for poly, name in ((self.p, "p"), (self.q, "q")):
            if poly.coeff(0, 0):
                raise NonNormalizedLinearPart(f"{name} has a constant term")
        lin_ok = (
            self.p.coeff(1, 0) == 0
            and self.p.coeff(0, 1) == -1
            and self.q.coeff(1, 0) == 1
            and self.q.coeff(0, 1) == 0
        )
        if not lin_ok:
            raise NonNormalizedLinearPart("linear part must be exactly (-y, x)")

    @property
    def degree(self) -> int:
        return max(self.p.degree(), self.q.degree())

    def nonlinear(self) -> tuple[BiPoly, BiPoly]:
        """(X, Y) with the linear rotation removed."""
        return (
            self.p + BiPoly.monomial(0, 1),
            self.q - BiPoly.monomial(1, 0),
        )

    def nonlinear_slices(self) -> tuple[dict[int, BiPoly], dict[int, BiPoly]]:
        xs, ys = self.nonlinear()
        return (
            {h.degree: h.inner for h in homogeneous_components(xs)},
            {h.degree: h.inner for h in homogeneous_components(ys)},
        )

    def derivative_along(self, v: BiPoly) -> BiPoly:
        """dv/dt along the field: v_x p + v_y q."""
        return v.diff_x() * self.p + v.diff_y() * self.q


Verdict = Literal["CenterCandidate", "StableFocus", "UnstableFocus"]


@dataclass(frozen=True)
class LyapunovResult:
    order: int
    h_list: tuple[HomogeneousPoly, ...]  # H_3 .. H_{order+1}
    v_list: tuple[Fraction, ...]  # V_1 .. V_{order//2}; V_k goes with (x^2+y^2)^(k+1)
    verdict: Verdict
    verdict_index: int | None  # k of the deciding V_k; None for a center candidate

    def h(self, n: int) -> BiPoly:
        """H_n for 3 <= n <= order+1."""
        return self.h_list[n - 3].inner

    def describe(self) -> str:
        if self.verdict == "CenterCandidate":
            return f"CenterCandidate({self.order})"
        return f"{self.verdict}({self.verdict_index})"


def _classify(v_list: Sequence[Fraction], order: int):
    for k, v in enumerate(v_list, start=1):
        if v:
            return ("StableFocus" if v < 0 else "UnstableFocus"), k
    return "CenterCandidate", None


def _assemble_f(
    n: int,
    h: dict[int, BiPoly],
    xs: dict[int, BiPoly],
    ys: dict[int, BiPoly],
) -> BiPoly:
    """Degree-n slice of grad(V) . (X, Y) over the known H_j (j < n)."""
    total = BiPoly()
    for j, hj in h.items():
        k = n + 1 - j
        if k < 2:
            continue
        xk = xs.get(k)
        yk = ys.get(k)
        if xk is not None:
            total = total + hj.diff_x() * xk
        if yk is not None:
            total = total + hj.diff_y() * yk
    return total


def compute_lyapunov(
    field: PlanarField,
    order: int,
    gauges: dict[int, Fraction] | None = None,
) -> LyapunovResult:
    """Run the recursion through degree slices 3..order+2.

    H_n is solved for n <= order+1; the final even slice contributes its
    constant only. `gauges` optionally injects kernel coefficients for
    the even-degree solves (degree -> coefficient), default all zero.
    """
    if order < 2:
        raise OrderTooSmall(f"order {order} < 2")
    gauges = gauges or {}
    xs, ys = field.nonlinear_slices()
    h: dict[int, BiPoly] = {2: H2}
    v_list: list[Fraction] = []
    for n in range(3, order + 3):
        f_n = _assemble_f(n, h, xs, ys)
        if n % 2 == 0:
            v = circle_average(f_n)
            v_list.append(v)
            if n == order + 2:
                break
            rhs = radial_power(n) * v - f_n
            sol = solve_homological(
                HomogeneousPoly(n, rhs), gauge=gauges.get(n, Fraction(0))
            )
            assert sol.k_const == 0
            h[n] = sol.f.inner
        else:
            if n == order + 2:
                break
            sol = solve_homological(HomogeneousPoly(n, -f_n))
            h[n] = sol.f.inner
    verdict, idx = _classify(v_list, order)
    return LyapunovResult(
        order=order,
        h_list=tuple(HomogeneousPoly(n, h[n]) for n in range(3, order + 2)),
        v_list=tuple(v_list),
        verdict=verdict,
        verdict_index=idx,
    )


def lyapunov_function(result: LyapunovResult) -> BiPoly:
    """H_2 + H_3 + ... + H_{order+1}."""
    total = H2
    for hp in result.h_list:
        total = total + hp.inner
    return total


def residual(field: PlanarField, result: LyapunovResult) -> BiPoly:
    """dV/dt minus sum of V_k (x^2+y^2)^(k+1); degree > order+1 by construction."""
    r = field.derivative_along(lyapunov_function(result))
    for k, v in enumerate(result.v_list, start=1):
        if v:
            r = r - R2 ** (k + 1) * v
    return r


# -- quasi-homogeneous specialization -------------------------------------------


def _qh_slices(field: PlanarField) -> tuple[int, BiPoly, BiPoly]:
    xs, ys = field.nonlinear_slices()
    degs = sorted(set(xs) | set(ys))
    if len(degs) != 1:
        raise NotQuasiHomogeneous(
            f"nonlinear part spans degrees {degs}, expected exactly one"
        )
    m = degs[0]
    return m, xs.get(m, BiPoly()), ys.get(m, BiPoly())


def quasihomogeneous_parts(field: PlanarField):
    """Split x' = -y + X_m, y' = x + Y_m into (m, H_{m+1}, g_{m-1}, c) with

        X_m = -H_y - y g + c x (x^2+y^2)^((m-1)/2)
        Y_m =  H_x + x g + c y (x^2+y^2)^((m-1)/2)

    The radial coefficient c can be nonzero only for odd m.
    """
    m, xm, ym = _qh_slices(field)
    x_mono = BiPoly.monomial(1, 0)
    y_mono = BiPoly.monomial(0, 1)
    div = xm.diff_x() + ym.diff_y()
    if m % 2:
        c = circle_average(div) / (m + 1)
        rad_x = radial_power(m - 1) * x_mono * c
        rad_y = radial_power(m - 1) * y_mono * c
        div = div - (rad_x.diff_x() + rad_y.diff_y())
    else:
        c = Fraction(0)
        rad_x = rad_y = BiPoly()
    g = solve_homological(HomogeneousPoly(m - 1, div)).f.inner
    xt = xm + y_mono * g - rad_x
    yt = ym - x_mono * g - rad_y
    h = (x_mono * yt - y_mono * xt) * Fraction(1, m + 1)
    # exactness check of the decomposition
    assert -h.diff_y() - y_mono * g + rad_x == xm
    assert h.diff_x() + x_mono * g + rad_y == ym
    return m, h, g, c


def constants_quasihomogeneous(field: PlanarField, order: int) -> LyapunovResult:
    """Same contract as compute_lyapunov, by the chain recursion.

    For a single nonlinear degree m the only nonzero H's sit on degrees
    2 + k(m-1); the degree-n source collapses to
    {H_{m+1}, H_j} + g D H_j + c j r^(m-1) H_j with j = n + 1 - m.
    """
    if order < 2:
        raise OrderTooSmall(f"order {order} < 2")
    m, h_top, g, c = quasihomogeneous_parts(field)
    rad = radial_power(m - 1) if m % 2 else None
    h: dict[int, BiPoly] = {2: H2}
    chain = {2 + k * (m - 1) for k in range(order + 1)}
    v_list: list[Fraction] = []
    for n in range(3, order + 3):
        j = n + 1 - m
        if j in chain and j in h:
            hj = h[j]
            f_n = poisson_bracket(h_top, hj) + g * apply_rotational(hj)
            if c:
                f_n = f_n + rad * hj * (c * j)
        else:
            f_n = BiPoly()
        if n % 2 == 0:
            v = circle_average(f_n)
            v_list.append(v)
            if n == order + 2:
                break
            sol = solve_homological(HomogeneousPoly(n, radial_power(n) * v - f_n))
            h[n] = sol.f.inner
        else:
            if n == order + 2:
                break
            h[n] = solve_homological(HomogeneousPoly(n, -f_n)).f.inner
    verdict, idx = _classify(v_list, order)
    return LyapunovResult(
        order=order,
        h_list=tuple(HomogeneousPoly(n, h[n]) for n in range(3, order + 2)),
        v_list=tuple(v_list),
        verdict=verdict,
        verdict_index=idx,
    )

"""Exact sparse bivariate polynomials over the rationals.

Coefficients are ``fractions.Fraction``; terms are keyed by exponent
pairs (i, j) for x^i y^j. Zero coefficients are never stored, so the
empty map is the zero polynomial and equality is structural. Term
iteration is graded lexicographic (total degree, then x-degree
descending), which makes printing, serialization and float evaluation
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import NonRealInput

Scalar = Union[Fraction, int]


def _grlex(key: tuple[int, int]) -> tuple[int, int]:
    i, j = key
    return (i + j, j)


class BiPoly:
    """A polynomial in x and y with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term ({i}, {j})")
                c = Fraction(c)
                if c:
                    clean[(i, j)] = c
        self._terms = clean

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def monomial(i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return BiPoly({(i, j): c})

    @staticmethod
    def constant(c: Scalar) -> "BiPoly":
        return BiPoly({(0, 0): c})

    # -- basic queries ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Yield ((i, j), coeff) in graded lexicographic order."""
        for key in sorted(self._terms, key=_grlex):
            yield key, self._terms[key]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {i + j for i, j in self._terms}
        return len(degs) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        p = BiPoly.__new__(BiPoly)
        p._terms = {k: -c for k, c in self._terms.items()}
        return p

    def __sub__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BiPoly":
        return BiPoly.constant(other) - self

    def __mul__(self, other: "BiPoly | Scalar") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return BiPoly()
            p = BiPoly.__new__(BiPoly)
            p._terms = {k: v * c for k, v in self._terms.items()}
            return p
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus --------------------------------------------------------------

    def diff_x(self) -> "BiPoly":
        out = {}
        for (i, j), c in self._terms.items():
            if i:
                out[(i - 1, j)] = c * i
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    def diff_y(self) -> "BiPoly":
        out = {}
        for (i, j), c in self._terms.items():
            if j:
                out[(i, j - 1)] = c * j
        p = BiPoly.__new__(BiPoly)
        p._terms = out
        return p

    def homogeneous_component(self, n: int) -> "BiPoly":
        p = BiPoly.__new__(BiPoly)
        p._terms = {k: c for k, c in self._terms.items() if k[0] + k[1] == n}
        return p

    # -- output ----------------------------------------------------------------

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.terms():
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x", i), ("y", j))
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)
R2 = BiPoly({(2, 0): 1, (0, 2): 1})  # x^2 + y^2


@dataclass(frozen=True)
class HomogeneousPoly:
    """A BiPoly together with its (verified) uniform total degree."""

    degree: int
    inner: BiPoly

    def __post_init__(self):
        for (i, j) in self.inner._terms:
            if i + j != self.degree:
                raise ValueError(
                    f"term x^{i} y^{j} breaks homogeneity of degree {self.degree}"
                )

    @staticmethod
    def of(p: BiPoly, degree: int | None = None) -> "HomogeneousPoly":
        if degree is None:
            degree = max(p.degree(), 0)
        return HomogeneousPoly(degree, p)


def homogeneous_components(p: BiPoly) -> list[HomogeneousPoly]:
    """Split into homogeneous pieces, zero components omitted, degree ascending."""
    by_deg: dict[int, dict[tuple[int, int], Fraction]] = {}
    for (i, j), c in p._terms.items():
        by_deg.setdefault(i + j, {})[(i, j)] = c
    out = []
    for n in sorted(by_deg):
        q = BiPoly.__new__(BiPoly)
        q._terms = by_deg[n]
        out.append(HomogeneousPoly(n, q))
    return out


def poisson_bracket(f: BiPoly, g: BiPoly) -> BiPoly:
    """{f, g} = f_x g_y - f_y g_x."""
    return f.diff_x() * g.diff_y() - f.diff_y() * g.diff_x()


def _double_factorial(n: int) -> int:
    # (-1)!! = 1 by convention
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def circle_average(p: BiPoly | HomogeneousPoly) -> Fraction:
    """Exact (1/2pi) integral of p(cos t, sin t) over one turn.

    Wallis: the average of x^a y^b vanishes unless a and b are both
    even, and then equals (a-1)!! (b-1)!! / (a+b)!!.
    """
    if isinstance(p, HomogeneousPoly):
        p = p.inner
    total = Fraction(0)
    for (i, j), c in p._terms.items():
        if i % 2 == 0 and j % 2 == 0:
            num = _double_factorial(i - 1) * _double_factorial(j - 1)
            total += c * Fraction(num, _double_factorial(i + j))
    return total


def evaluate(p: BiPoly, x: float, y: float) -> float:
    """Float evaluation, terms accumulated in graded order."""
    total = 0.0
    for (i, j), c in p.terms():
        total += float(c) * x**i * y**j
    return total


# -- complex monomial basis ----------------------------------------------------
#
# x = (z + zbar)/2, y = (z - zbar)/(2i). A real polynomial becomes a map
# (k, l) -> coefficient of z^k zbar^l, with entries[(k,l)] the conjugate of
# entries[(l,k)]. Coefficients are Gaussian rationals held as (re, im) pairs.

CPair = tuple[Fraction, Fraction]


def _cadd(a: CPair, b: CPair) -> CPair:
    return (a[0] + b[0], a[1] + b[1])


def _cmul(a: CPair, b: CPair) -> CPair:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cpow(a: CPair, n: int) -> CPair:
    out: CPair = (Fraction(1), Fraction(0))
    for _ in range(n):
        out = _cmul(out, a)
    return out


@dataclass
class ComplexCoeffs:
    """Coefficients of a polynomial written in z = x + iy, zbar = x - iy."""

    entries: dict[tuple[int, int], CPair]

    def __post_init__(self):
        self.entries = {
            k: v for k, v in self.entries.items() if v[0] or v[1]
        }

    def conjugate_symmetric(self) -> bool:
        for (k, l), (re, im) in self.entries.items():
            mre, mim = self.entries.get((l, k), (Fraction(0), Fraction(0)))
            if mre != re or mim != -im:
                return False
        return True


def _binomial(n: int, k: int) -> int:
    result = 1
    for t in range(k):
        result = result * (n - t) // (t + 1)
    return result


def to_complex(p: BiPoly) -> ComplexCoeffs:
    """Rewrite p(x, y) in the z, zbar monomial basis."""
    entries: dict[tuple[int, int], CPair] = {}
    half = Fraction(1, 2)
    minus_half_i: CPair = (Fraction(0), -half)  # 1/(2i)
    for (a, b), c in p._terms.items():
        # ((z + zbar)/2)^a ((z - zbar)/(2i))^b
        scale = _cmul((half**a * c, Fraction(0)), _cpow(minus_half_i, b))
        for s in range(a + 1):
            ca = _binomial(a, s)
            for t in range(b + 1):
                sign = -1 if (b - t) % 2 else 1
                w = ca * _binomial(b, t) * sign
                key = (s + t, (a - s) + (b - t))
                add = _cmul(scale, (Fraction(w), Fraction(0)))
                entries[key] = _cadd(entries.get(key, (Fraction(0), Fraction(0))), add)
    return ComplexCoeffs(entries)


def from_complex(c: ComplexCoeffs) -> BiPoly:
    """Inverse transform; raises NonRealInput if the result is not real."""
    real: dict[tuple[int, int], Fraction] = {}
    imag: dict[tuple[int, int], Fraction] = {}
    i_unit: CPair = (Fraction(0), Fraction(1))
    for (k, l), coeff in c.entries.items():
        # (x + iy)^k (x - iy)^l expanded over Gaussian rationals
        for s in range(k + 1):
            ws = _cmul(_cpow(i_unit, s), (Fraction(_binomial(k, s)), Fraction(0)))
            for t in range(l + 1):
                sign = -1 if t % 2 else 1
                wt = _cmul(_cpow(i_unit, t), (Fraction(sign * _binomial(l, t)), Fraction(0)))
                w = _cmul(coeff, _cmul(ws, wt))
                key = ((k - s) + (l - t), s + t)
                real[key] = real.get(key, Fraction(0)) + w[0]
                imag[key] = imag.get(key, Fraction(0)) + w[1]
    for key, v in imag.items():
        if v:
            raise NonRealInput(f"imaginary residue {v} at monomial {key}")
    return BiPoly(real)

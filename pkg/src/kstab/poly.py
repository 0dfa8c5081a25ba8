"""Bivariate polynomials and affine forms in the parameters (u, v).

``Polynomial2`` is a sparse exact polynomial: a map from exponent pairs
(degree in u, degree in v) to nonzero rational coefficients.  ``AffineForm``
is the degree-(1,1)-truncated special case c + cu*u + cv*v used for divisor
coefficients and chamber boundaries; affine forms are closed under the
linear algebra the decomposition engine performs.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Iterable, Mapping

from .rationals import format_rational, rat

_ZERO = Fraction(0)

# sanity threshold, not a hard limit: paper scenarios stay within degree 6
_DEGREE_WARN = 6


class Polynomial2:
    """Exact sparse polynomial in u and v with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (du, dv), coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[(int(du), int(dv))] = c
        object.__setattr__(self, "terms", clean)
        deg_u, deg_v = self.degrees()
        if deg_u > _DEGREE_WARN or deg_v > _DEGREE_WARN:
            warnings.warn(
                f"polynomial degree ({deg_u}, {deg_v}) exceeds the sanity threshold",
                stacklevel=2,
            )

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Polynomial2 is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "Polynomial2":
        return cls({(0, 0): rat(c)})

    @classmethod
    def var_u(cls) -> "Polynomial2":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_v(cls) -> "Polynomial2":
        return cls({(0, 1): Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(e[0] for e in self.terms), max(e[1] for e in self.terms))

    def has_v(self) -> bool:
        return any(e[1] for e in self.terms)

    def coefficient(self, du: int, dv: int) -> Fraction:
        return self.terms.get((du, dv), _ZERO)

    def __call__(self, u, v) -> Fraction:
        u = rat(u)
        v = rat(v)
        total = _ZERO
        for (du, dv), coeff in self.terms.items():
            total += coeff * u**du * v**dv
        return total

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial2") -> "Polynomial2":
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, _ZERO) + coeff
        return Polynomial2(out)

    def __sub__(self, other: "Polynomial2") -> "Polynomial2":
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, _ZERO) - coeff
        return Polynomial2(out)

    def __neg__(self) -> "Polynomial2":
        return Polynomial2({e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial2":
        if isinstance(other, AffineForm):
            other = other.to_poly()
        if isinstance(other, Polynomial2):
            out: dict[tuple[int, int], Fraction] = {}
            for (a, b), ca in self.terms.items():
                for (c, d), cb in other.terms.items():
                    exp = (a + c, b + d)
                    out[exp] = out.get(exp, _ZERO) + ca * cb
            return Polynomial2(out)
        scalar = rat(other)
        return Polynomial2({e: c * scalar for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, u_form: "AffineForm", v_form: "AffineForm") -> "Polynomial2":
        """p(u_form(u', v'), v_form(u', v')) as a polynomial in the new variables."""
        pu = u_form.to_poly()
        pv = v_form.to_poly()
        # cache powers; degrees are tiny
        max_u, max_v = self.degrees()
        pow_u = [Polynomial2.const(1)]
        for _ in range(max_u):
            pow_u.append(pow_u[-1] * pu)
        pow_v = [Polynomial2.const(1)]
        for _ in range(max_v):
            pow_v.append(pow_v[-1] * pv)
        total = Polynomial2()
        for (du, dv), coeff in self.terms.items():
            total = total + pow_u[du] * pow_v[dv] * coeff
        return total

    def eval_u(self, u) -> "Polynomial2":
        """Substitute a rational value for u, leaving a polynomial in v."""
        u = rat(u)
        out: dict[tuple[int, int], Fraction] = {}
        for (du, dv), coeff in self.terms.items():
            exp = (0, dv)
            out[exp] = out.get(exp, _ZERO) + coeff * u**du
        return Polynomial2(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (du, dv) in sorted(self.terms):
            coeff = self.terms[(du, dv)]
            mono = "".join(
                (f"*u^{du}" if du > 1 else "*u" if du == 1 else "",
                 f"*v^{dv}" if dv > 1 else "*v" if dv == 1 else "")
            )
            parts.append(f"{format_rational(coeff)}{mono}")
        return " + ".join(parts)


class AffineForm:
    """c + cu*u + cv*v with exact rational coefficients."""

    __slots__ = ("c", "cu", "cv")

    def __init__(self, c=0, cu=0, cv=0):
        object.__setattr__(self, "c", rat(c))
        object.__setattr__(self, "cu", rat(cu))
        object.__setattr__(self, "cv", rat(cv))

    def __setattr__(self, name, value):
        raise AttributeError("AffineForm is immutable")

    @classmethod
    def const(cls, c) -> "AffineForm":
        return cls(c, 0, 0)

    def __call__(self, u, v) -> Fraction:
        return self.c + self.cu * rat(u) + self.cv * rat(v)

    def is_zero(self) -> bool:
        return not (self.c or self.cu or self.cv)

    def is_constant(self) -> bool:
        return not (self.cu or self.cv)

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.c + other.c, self.cu + other.cu, self.cv + other.cv)

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.c - other.c, self.cu - other.cu, self.cv - other.cv)

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.c, -self.cu, -self.cv)

    def __mul__(self, other) -> "AffineForm | Polynomial2":
        if isinstance(other, AffineForm):
            return self.to_poly() * other.to_poly()
        if isinstance(other, Polynomial2):
            return self.to_poly() * other
        scalar = rat(other)
        return AffineForm(self.c * scalar, self.cu * scalar, self.cv * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AffineForm":
        scalar = rat(scalar)
        return AffineForm(self.c / scalar, self.cu / scalar, self.cv / scalar)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineForm)
            and self.c == other.c
            and self.cu == other.cu
            and self.cv == other.cv
        )

    def __hash__(self):
        return hash((self.c, self.cu, self.cv))

    def to_poly(self) -> Polynomial2:
        return Polynomial2({(0, 0): self.c, (1, 0): self.cu, (0, 1): self.cv})

    def normalized(self) -> "AffineForm":
        """Scale by the unique positive rational making the coefficient tuple
        primitive integers; preserves the half-plane {self >= 0}."""
        nums = [x for x in (self.c, self.cu, self.cv) if x]
        if not nums:
            return AffineForm(0, 0, 0)
        from math import gcd, lcm

        denominator = lcm(*(x.denominator for x in nums))
        ints = [x * denominator for x in nums]
        g = 0
        for x in ints:
            g = gcd(g, int(x))
        scale = Fraction(denominator, g)
        return AffineForm(self.c * scale, self.cu * scale, self.cv * scale)

    def __repr__(self):
        parts = []
        if self.c or not (self.cu or self.cv):
            parts.append(format_rational(self.c))
        if self.cu:
            parts.append(f"{format_rational(self.cu)}*u")
        if self.cv:
            parts.append(f"{format_rational(self.cv)}*v")
        return " + ".join(parts)


def affine(c=0, cu=0, cv=0) -> AffineForm:
    return AffineForm(c, cu, cv)


def poly_from_terms(entries: Iterable[tuple[int, int, object]]) -> Polynomial2:
    """Build a polynomial from (deg_u, deg_v, coefficient) triples."""
    out: dict[tuple[int, int], Fraction] = {}
    for du, dv, coeff in entries:
        out[(du, dv)] = out.get((du, dv), _ZERO) + rat(coeff)
    return Polynomial2(out)


def integrate_interval(p: Polynomial2, a, b) -> Fraction:
    """Exact value of the definite integral of a univariate p(u) over [a, b].

    Rejects polynomials with v-terms: the caller meant a double integral.
    """
    if p.has_v():
        raise ValueError("not univariate: polynomial has v-terms")
    a = rat(a)
    b = rat(b)
    if a > b:
        raise ValueError(f"empty interval: {a} > {b}")
    total = _ZERO
    for (du, _), coeff in p.terms.items():
        total += coeff * (b ** (du + 1) - a ** (du + 1)) / (du + 1)
    return total

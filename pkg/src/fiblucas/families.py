"""Fibonacci, Lucas and power-basis Appell polynomial families.

Conventions, fixed once for the whole package by the generating
functions t/(1 - x*t - t^2) and (1 + t^2)/(1 - x*t - t^2):

    F_0 = 0, F_1 = 1,                F_n = x*F_{n-1} + F_{n-2}
    L_0 = 1, L_1 = x, L_2 = x^2 + 2, L_n = x*L_{n-1} + L_{n-2}  (n >= 3)

Note L_0 = 1, not the classical 2: that is what the generating function
expands to, and it is the unique value making the closed derivative
identity (below) hold at every order, starting with d/dx L_1 = L_0.

AppellMonomial is A_n = x^n, the simplest family with A_n' = n*A_{n-1}.
"""

from __future__ import annotations

from functools import lru_cache

from .polyring import Poly

__all__ = [
    "FIBONACCI",
    "LUCAS",
    "APPELL_MONOMIAL",
    "family_poly",
    "derivative_rhs",
    "verify_derivative_formula",
    "generating_function_coeffs",
]

FIBONACCI = "fibonacci"
LUCAS = "lucas"
APPELL_MONOMIAL = "appell-monomial"

_FAMILIES = (FIBONACCI, LUCAS, APPELL_MONOMIAL)


def _check_kind(kind: str, allowed=_FAMILIES) -> None:
    if kind not in allowed:
        raise ValueError(f"unknown family kind: {kind!r}")


@lru_cache(maxsize=None)
def family_poly(kind: str, n: int) -> Poly:
    """The n-th member of the family, a polynomial in x."""
    _check_kind(kind)
    if n < 0:
        raise ValueError("family index must be >= 0")
    x = Poly.x()
    if kind == APPELL_MONOMIAL:
        return x ** n
    if kind == FIBONACCI:
        if n == 0:
            return Poly.zero()
        if n == 1:
            return Poly.one()
        return x * family_poly(kind, n - 1) + family_poly(kind, n - 2)
    # Lucas
    if n == 0:
        return Poly.one()
    if n == 1:
        return x
    if n == 2:
        return x * x + 2
    return x * family_poly(kind, n - 1) + family_poly(kind, n - 2)


def derivative_rhs(kind: str, n: int) -> Poly:
    """Right-hand side of the closed derivative identity.

        d/dx F_n = sum_{k=0..floor((n-1)/2)} (-1)^k (n-1-2k) F_{n-1-2k}
        d/dx L_n = n * sum_{k=0..floor((n-1)/2)} (-1)^k L_{n-1-2k}
    """
    _check_kind(kind, (FIBONACCI, LUCAS))
    if n < 1:
        raise ValueError("derivative identity needs n >= 1")
    out = Poly.zero()
    for k in range((n - 1) // 2 + 1):
        sub = n - 1 - 2 * k
        coeff = (-1) ** k * (sub if kind == FIBONACCI else n)
        if coeff:
            out = out + coeff * family_poly(kind, sub)
    return out


def verify_derivative_formula(kind: str, n: int) -> bool:
    """True iff the formal derivative of the n-th family polynomial
    equals the closed-sum right-hand side assembled from lower members."""
    return family_poly(kind, n).diff_x() == derivative_rhs(kind, n)


def generating_function_coeffs(kind: str, order: int) -> list[Poly]:
    """First ``order`` t-coefficients of the family generating function.

    Computed by genuine truncated-series arithmetic over polynomial
    coefficients (series reciprocal of 1 - x*t - t^2, then product with
    the numerator), independent of the recurrences in family_poly; used
    to cross-check them.
    """
    _check_kind(kind, (FIBONACCI, LUCAS))
    if order < 1:
        raise ValueError("order must be >= 1")
    x = Poly.x()
    denom = [Poly.one(), -x, -Poly.one()]  # 1 - x*t - t^2
    inv = [Poly.zero()] * order
    inv[0] = Poly.one()
    for m in range(1, order):
        s = Poly.zero()
        for k in range(1, min(m, len(denom) - 1) + 1):
            s = s + denom[k] * inv[m - k]
        inv[m] = -s
    numer = [Poly.zero(), Poly.one()] if kind == FIBONACCI else [
        Poly.one(),
        Poly.zero(),
        Poly.one(),
    ]
    out = []
    for m in range(order):
        s = Poly.zero()
        for j, nj in enumerate(numer):
            if j > m or nj.is_zero():
                continue
            s = s + nj * inv[m - j]
        out.append(s)
    return out

"""Linear maps intertwining the Appell derivation with Lucas/Fibonacci.

A substitution psi with psi o D_appell = D_target o psi transports
kernel elements of the Appell derivation to kernel elements of the
target derivation.  The two maps built here are

    AL:  x_n -> x_n     + sum_s alpha_n^(s) x_{n-2s}
    AF:  x_n -> x_{n+1} + sum_s alpha_n^(s) x_{n+1-2s}

with s = 1..floor((n-1)/2).  The coefficients alpha_n^(s) can be
computed three independent ways, and all three must agree:

recurrence ("direct") route.  Matching coefficients in the intertwining
condition gives, per diagonal s, a first-order recurrence with boundary
alpha_{2s}^(s) = 0:

    AL:  (n-2s) alpha_n^(s) = n (alpha_{n-1}^(s) + alpha_{n-1}^(s-1))
    AF:  alpha_n^(s) = n (alpha_{n-1}^(s)/(n-2s)
                          + alpha_{n-1}^(s-1)/(n-2s+2))

solved in closed form by solve_recurrence_al / solve_recurrence_af for
n >= 2s.  Below 2s the same recurrence is run backwards; for AF the
denominator-free form (n-2s) * T_n^(s) = n * alpha_{n-1}^(s), where
T_n^(s) = sum_j (-1)^j alpha_n^(s-j), avoids the pole of the divided
form at n = 2s-2.

beta route.  Writing alpha in the falling-factorial basis,

    AL:  alpha_n^(s) = sum_{i=0..s} beta_i^(s) n^{falling s+i}
    AF:  alpha_n^(s) = (n-2s+1) sum_{i=0..s} beta_i^(s) n^{falling s-1+i}

the recurrences collapse to beta_i^(s) = -beta_i^(s-1)/(s-i) for i < s,
with beta_s^(s) =: b_s fixed by the boundary condition:

    AL:  b_s = -sum_{i<s} beta_i^(s)/(s-i)!
    AF:  b_s = -sum_{i<s} beta_i^(s)/(s-i+1)!

series route.  The same b_s are the coefficients of the reciprocal of a
Bessel-type series (beta_i^(s) = (-1)^{s-i} b_i / (s-i)!):

    AL:  sum b_s z^s = 1 / J_0(2 sqrt z)
    AF:  sum b_s z^s = sqrt z / J_1(2 sqrt z)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .derivops import Derivation
from .exactnum import bessel_j0_series, bessel_j1_series, falling_factorial
from .polyring import Poly, X, var_name

__all__ = [
    "AL",
    "AF",
    "ROUTE_RECURRENCE",
    "ROUTE_BETA",
    "ROUTE_SERIES",
    "ROUTES",
    "solve_recurrence_al",
    "solve_recurrence_af",
    "b_sequence",
    "alpha",
    "LinearSubstitution",
    "psi",
    "check_intertwining",
]

AL = "AL"
AF = "AF"
_KINDS = (AL, AF)

ROUTE_RECURRENCE = "recurrence"
ROUTE_BETA = "beta"
ROUTE_SERIES = "series"
ROUTES = (ROUTE_RECURRENCE, ROUTE_BETA, ROUTE_SERIES)


def _check_kind(kind: str) -> None:
    if kind not in _KINDS:
        raise ValueError(f"kind must be {AL!r} or {AF!r}, got {kind!r}")


def solve_recurrence_al(
    a: int, g: Sequence[Fraction], n_max: int
) -> list[Fraction]:
    """Solve (n-a) x_n = n (x_{n-1} + g_{n-1}), x_a = 0, for n = a..n_max.

    Closed form x_n = n^{falling a} * sum_{i=a..n-1} g_i / i^{falling a}.
    ``g`` is indexed absolutely and must cover a..n_max-1.  Returns the
    values x_a..x_{n_max} (so result[j] is x_{a+j}).
    """
    if a < 0:
        raise ValueError("a must be >= 0")
    if n_max < a:
        return []
    out = [Fraction(0)]
    acc = Fraction(0)
    for n in range(a + 1, n_max + 1):
        acc += Fraction(g[n - 1]) / falling_factorial(n - 1, a)
        out.append(falling_factorial(n, a) * acc)
    return out


def solve_recurrence_af(
    s: int, g: Sequence[Fraction], n_max: int
) -> list[Fraction]:
    """Solve x_n = n (x_{n-1}/(n-s) + g_{n-1}/(n-s+2)), x_s = 0.

    Closed form x_n = n^{falling s}
        * sum_{i=s..n-1} g_i / (i^{falling s-1} * (i-s+3)),
    valid for s >= 2 (every factor below stays nonzero for i >= s).
    Returns x_s..x_{n_max}.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if n_max < s:
        return []
    out = [Fraction(0)]
    acc = Fraction(0)
    for n in range(s + 1, n_max + 1):
        i = n - 1
        acc += Fraction(g[i]) / (falling_factorial(i, s - 1) * (i - s + 3))
        out.append(falling_factorial(n, s) * acc)
    return out


@lru_cache(maxsize=None)
def _b_coeffs(kind: str, count: int) -> tuple[Fraction, ...]:
    series = bessel_j0_series(count) if kind == AL else bessel_j1_series(count)
    return series.reciprocal().coeffs


def b_sequence(kind: str, count: int) -> list[Fraction]:
    """First ``count`` coefficients of the reciprocal Bessel-type series
    (b_0 = 1 in both kinds)."""
    _check_kind(kind)
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(_b_coeffs(kind, count))


@lru_cache(maxsize=None)
def _beta_rows(kind: str, s_max: int) -> tuple[tuple[Fraction, ...], ...]:
    """beta_i^(s) for 0 <= i <= s <= s_max, from the beta recurrences."""
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    closure_shift = 0 if kind == AL else 1
    for s in range(1, s_max + 1):
        prev = rows[s - 1]
        row = [-prev[i] / (s - i) for i in range(s)]
        b_s = -sum(
            (row[i] / factorial(s - i + closure_shift) for i in range(s)),
            Fraction(0),
        )
        row.append(b_s)
        rows.append(tuple(row))
    return tuple(rows)


def _beta_from_b(b: Sequence[Fraction], s: int) -> tuple[Fraction, ...]:
    return tuple(
        Fraction((-1) ** (s - i)) * b[i] / factorial(s - i)
        for i in range(s + 1)
    )


def _alpha_from_beta(
    kind: str, beta_row: Sequence[Fraction], n: int, s: int
) -> Fraction:
    if kind == AL:
        total = sum(
            (beta_row[i] * falling_factorial(n, s + i) for i in range(s + 1)),
            Fraction(0),
        )
        return total
    total = sum(
        (beta_row[i] * falling_factorial(n, s - 1 + i) for i in range(s + 1)),
        Fraction(0),
    )
    return (n - 2 * s + 1) * total


@lru_cache(maxsize=None)
def _recurrence_rows(
    kind: str, s_max: int, n_max: int
) -> tuple[tuple[Fraction, ...], ...]:
    """alpha_n^(s) tables (rows indexed by s, columns by n) from the
    recurrences: forward by the closed solvers, backward below n = 2s
    by the recurrence itself."""
    n_eff = max(n_max, 2 * s_max)
    ones = tuple(Fraction(1) for _ in range(n_eff + 1))
    rows: list[tuple[Fraction, ...]] = [ones]
    if kind == AL:
        for s in range(1, s_max + 1):
            a = 2 * s
            prev = rows[s - 1]
            row = [Fraction(0)] * (n_eff + 1)
            row[a:] = solve_recurrence_al(a, prev, n_eff)
            for m in range(a - 1, -1, -1):
                row[m] = Fraction(m + 1 - a, m + 1) * row[m + 1] - prev[m]
            rows.append(tuple(row))
    else:
        t_rows: list[tuple[Fraction, ...]] = [ones]
        for s in range(1, s_max + 1):
            a = 2 * s
            prev = rows[s - 1]
            t_prev = t_rows[s - 1]
            row = [Fraction(0)] * (n_eff + 1)
            row[a:] = solve_recurrence_af(a, prev, n_eff)
            for m in range(a - 1, -1, -1):
                row[m] = Fraction(m + 1 - a, m + 1) * (row[m + 1] - t_prev[m + 1])
            rows.append(tuple(row))
            t_rows.append(
                tuple(row[i] - t_prev[i] for i in range(n_eff + 1))
            )
    return tuple(rows)


def alpha(kind: str, n: int, s: int, route: str = ROUTE_BETA) -> Fraction:
    """The intertwining coefficient alpha_n^(s) by the requested route."""
    _check_kind(kind)
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if route == ROUTE_RECURRENCE:
        return _recurrence_rows(kind, s, max(n, 2 * s))[s][n]
    if route == ROUTE_BETA:
        return _alpha_from_beta(kind, _beta_rows(kind, s)[s], n, s)
    if route == ROUTE_SERIES:
        return _alpha_from_beta(
            kind, _beta_from_b(_b_coeffs(kind, s + 1), s), n, s
        )
    raise ValueError(f"unknown route: {route!r}")


class LinearSubstitution:
    """A map x_n -> rational linear combination of generators."""

    __slots__ = ("_images",)

    def __init__(self, images: Mapping[int, Poly]) -> None:
        for n, img in images.items():
            for mono, _ in img.items():
                if len(mono) != 1 or mono[0][1] != 1 or mono[0][0] == X:
                    raise ValueError(
                        f"image of {var_name(n)} must be homogeneous of degree 1 in the generators"
                    )
        self._images = dict(images)

    def image(self, n: int) -> Poly:
        try:
            return self._images[n]
        except KeyError:
            raise ValueError(f"no image for generator {var_name(n)}") from None

    def defined_range(self) -> list[int]:
        return sorted(self._images)

    def apply(self, p: Poly) -> Poly:
        return p.substitute(self._images)

    def __repr__(self) -> str:
        ns = self.defined_range()
        span = f"x0..x{ns[-1]}" if ns else "empty"
        return f"LinearSubstitution({span})"


def psi(kind: str, n_max: int, route: str = ROUTE_BETA) -> LinearSubstitution:
    """The intertwining substitution with images for x_0..x_{n_max}.

    AF images shift indices up by one, so the generator universe grows
    to x_{n_max+1} internally.
    """
    _check_kind(kind)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    images: dict[int, Poly] = {}
    for n in range(n_max + 1):
        lead = n if kind == AL else n + 1
        p = Poly.gen(lead)
        for s in range(1, (n - 1) // 2 + 1):
            c = alpha(kind, n, s, route)
            if c:
                p = p + c * Poly.gen(lead - 2 * s)
        images[n] = p
    return LinearSubstitution(images)


def check_intertwining(
    sub: LinearSubstitution,
    from_d: Derivation,
    to_d: Derivation,
    n_max: int,
    kind: str = "custom",
) -> dict:
    """Compare sub(from_d(x_n)) against to_d(sub(x_n)) for n <= n_max.

    Returns a report dict; a mismatch is an outcome, not an error.
    """
    for n in range(n_max + 1):
        lhs = sub.apply(from_d.image(n))
        rhs = to_d(sub.image(n))
        if lhs != rhs:
            return {
                "kind": kind,
                "n_max": n_max,
                "ok": False,
                "first_mismatch": n,
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
            }
    return {
        "kind": kind,
        "n_max": n_max,
        "ok": True,
        "first_mismatch": None,
        "lhs": None,
        "rhs": None,
    }

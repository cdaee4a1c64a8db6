"""Kernel elements of the Fibonacci and Lucas derivations.

Two independent constructions of the same polynomials are provided.

Constructive route: a slice is a polynomial h with D(h) != 0 and
D^2(h) = 0; with lambda = -h/D(h) the map

    sigma(x_n) = sum_k D^k(x_n) * lambda^k / k!

(a finite sum, by local nilpotency) lands in the kernel of D extended
to the localization at D(h).  The slices used here are h = x_2 for the
Fibonacci derivation (D(x_2) = x_1) and h = x_1 for the Lucas one
(D(x_1) = x_0), so sigma(x_n) is a polynomial divided by a power of a
single generator.  Clearing that power (x_1^{n-2}, resp. x_0^{n-1})
yields the Cayley element C_n.

Closed route: the same C_n written out directly,

  fibonacci (n >= 3):
    C_n = x_n x_1^{n-2}
        + sum_{k=1..n-3} (1/k) sum_i (-1)^{k+i} (n-k-2i)
              C(i+k-1,k-1) C(n-i-1,k-1) x_{n-k-2i} x_2^k x_1^{n-2-k}
        + (n-2)(-1)^{n-2} x_2^{n-1}

  lucas (n >= 2, with C_1 = x_0 as the degenerate case):
    C_n = x_n x_0^{n-1}
        + n * sum_{k=1..n-2} (1/k) sum_i (-1)^{k+i}
              C(i+k-1,k-1) C(n-i-1,k-1) x_{n-k-2i} x_1^k x_0^{n-1-k}
        + (n-1)(-1)^{n-1} x_1^n

with inner subscripts kept valid exactly as in the closed power
formulas (>= 1 for fibonacci, >= 0 for lucas).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .derivops import FIBONACCI, LUCAS, Derivation
from .exactnum import binomial
from .polyring import Poly, divide_by_generator, var_name

__all__ = [
    "Slice",
    "LocalizedPoly",
    "fibonacci_slice",
    "lucas_slice",
    "dixmier_sigma",
    "cayley_closed",
    "cayley_constructive",
]

_NILPOTENCY_CAP = 512  # iterations before giving up on termination


@dataclass(frozen=True)
class Slice:
    """A polynomial h together with image = D(h), where D^2(h) = 0."""

    h: Poly
    image: Poly


def fibonacci_slice() -> Slice:
    return Slice(Poly.gen(2), Poly.gen(1))


def lucas_slice() -> Slice:
    return Slice(Poly.gen(1), Poly.gen(0))


@dataclass(frozen=True)
class LocalizedPoly:
    """numerator / x_{denom_var}^denom_power, with the power minimal."""

    numerator: Poly
    denom_var: int
    denom_power: int

    def __str__(self) -> str:
        if self.denom_power == 0:
            return str(self.numerator)
        denom = var_name(self.denom_var)
        if self.denom_power > 1:
            denom = f"{denom}^{self.denom_power}"
        return f"({self.numerator}) / {denom}"


def _single_generator_term(p: Poly) -> tuple[Fraction, int] | None:
    """Decompose p as c * x_j (exponent exactly one), else None."""
    terms = list(p.items())
    if len(terms) != 1:
        return None
    (mono, c) = terms[0]
    if len(mono) != 1:
        return None
    (v, e) = mono[0]
    if e != 1 or v < 0:
        return None
    return c, v


def dixmier_sigma(d: Derivation, s: Slice, n: int) -> LocalizedPoly:
    """sigma(x_n) = sum_k D^k(x_n) lambda^k / k!, lambda = -h/D(h).

    Returned over a minimal power of the slice's denominator generator.
    Requires the slice invariant (D(h) = image != 0, D(image) = 0) and
    an image that is a rational multiple of a single generator.
    """
    if s.image.is_zero() or d(s.h) != s.image or not d(s.image).is_zero():
        raise ValueError("slice invariant violated: need D(h) = image != 0 and D(image) = 0")
    decomp = _single_generator_term(s.image)
    if decomp is None:
        raise ValueError("slice image must be a rational multiple of a single generator")
    c, j = decomp

    powers = [Poly.gen(n)]
    while not powers[-1].is_zero():
        if len(powers) > _NILPOTENCY_CAP:
            raise ValueError(f"derivation does not look locally nilpotent on x{n}")
        powers.append(d(powers[-1]))
    kmax = len(powers) - 2  # last nonzero index

    neg_h = -s.h
    xj = Poly.gen(j)
    num = Poly.zero()
    for k in range(kmax + 1):
        scale = Fraction(1, factorial(k)) / (c ** k)
        num = num + scale * powers[k] * neg_h ** k * xj ** (kmax - k)

    power = kmax
    while power > 0:
        reduced = divide_by_generator(num, j)
        if reduced is None:
            break
        num = reduced
        power -= 1
    return LocalizedPoly(num, j, power)


def _cayley_closed_fibonacci(n: int) -> Poly:
    out = Poly.term(1, {n: 1, 1: n - 2})
    for k in range(1, n - 2):
        i = 0
        while n - k - 2 * i >= 1:
            sub = n - k - 2 * i
            coeff = (
                Fraction((-1) ** (k + i) * sub, k)
                * binomial(i + k - 1, k - 1)
                * binomial(n - i - 1, k - 1)
            )
            if coeff:
                exps = {sub: 1}
                exps[2] = exps.get(2, 0) + k
                if n - 2 - k:
                    exps[1] = exps.get(1, 0) + (n - 2 - k)
                out = out + Poly.term(coeff, exps)
            i += 1
    return out + Poly.term((n - 2) * (-1) ** (n - 2), {2: n - 1})


def _cayley_closed_lucas(n: int) -> Poly:
    out = Poly.term(1, {n: 1, 0: n - 1})
    for k in range(1, n - 1):
        i = 0
        while n - k - 2 * i >= 0:
            sub = n - k - 2 * i
            coeff = (
                Fraction((-1) ** (k + i) * n, k)
                * binomial(i + k - 1, k - 1)
                * binomial(n - i - 1, k - 1)
            )
            if coeff:
                exps = {sub: 1}
                exps[1] = exps.get(1, 0) + k
                if n - 1 - k:
                    exps[0] = exps.get(0, 0) + (n - 1 - k)
                out = out + Poly.term(coeff, exps)
            i += 1
    return out + Poly.term((n - 1) * (-1) ** (n - 1), {1: n})


def _check_cayley_args(kind: str, n: int) -> None:
    if kind == FIBONACCI:
        if n < 3:
            raise ValueError("fibonacci Cayley elements start at n = 3")
    elif kind == LUCAS:
        if n < 1:
            raise ValueError("lucas Cayley elements start at n = 1")
    else:
        raise ValueError(f"Cayley elements exist for fibonacci or lucas, got {kind!r}")


def cayley_closed(kind: str, n: int) -> Poly:
    """The Cayley kernel element C_n from its closed formula."""
    _check_cayley_args(kind, n)
    if kind == FIBONACCI:
        return _cayley_closed_fibonacci(n)
    if n == 1:
        return Poly.gen(0)
    return _cayley_closed_lucas(n)


def cayley_constructive(kind: str, n: int) -> Poly:
    """C_n built by clearing denominators of sigma(x_n).

    Multiplies by the fixed normalization x_1^{n-2} (fibonacci) or
    x_0^{n-1} (lucas) so the result matches cayley_closed exactly.
    """
    _check_cayley_args(kind, n)
    if kind == FIBONACCI:
        sig = dixmier_sigma(Derivation.fibonacci(), fibonacci_slice(), n)
        target = n - 2
    else:
        if n == 1:
            return Poly.gen(0)  # sigma(x_1) degenerates to 0
        sig = dixmier_sigma(Derivation.lucas(), lucas_slice(), n)
        target = n - 1
    if sig.denom_power > target:
        raise ValueError(
            f"sigma denominator x{sig.denom_var}^{sig.denom_power} exceeds normalization {target}"
        )
    return sig.numerator * Poly.gen(sig.denom_var) ** (target - sig.denom_power)

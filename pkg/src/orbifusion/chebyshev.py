"""Integer polynomial arithmetic for exact quantum-dimension bookkeeping.

Quantum dimensions of the level-``k`` catalog are the algebraic numbers
``sin((i+1)*pi/(k+2)) / sin(pi/(k+2))``.  Writing ``x = 2*cos(pi/(k+2))``
these are the values ``S_i(x)`` of the rescaled Chebyshev family

    S_0 = 1,  S_1 = x,  S_{n+1} = x*S_n - S_{n-1},

which satisfies ``S_n(2*cos t) = sin((n+1)*t)/sin(t)``.  All identities
between such numbers can therefore be decided in the quotient ring
``Z[x] / (psi)`` where ``psi`` is the minimal polynomial of ``x`` — residue
equality there is equivalent to equality of the real numbers.  This module
supplies the polynomial ring, the ``S_n`` family, cyclotomic polynomials and
the minimal polynomial of ``2*cos(pi/n)``; everything is exact integer
arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Union

__all__ = ["ChebPoly", "cheb_u", "cyclotomic", "min_poly_two_cos"]


class ChebPoly:
    """Univariate polynomial with integer coefficients, ascending order.

    Trailing zero coefficients are stripped, so the representation (and
    equality) is canonical; the zero polynomial has an empty coefficient
    tuple.  Division is supported for divisors with unit leading
    coefficient, which keeps everything inside the integers.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ChebPoly") -> "ChebPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ChebPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __sub__(self, other: "ChebPoly") -> "ChebPoly":
        return self + (-other)

    def __neg__(self) -> "ChebPoly":
        return ChebPoly([-c for c in self.coeffs])

    def __mul__(self, other: Union["ChebPoly", int]) -> "ChebPoly":
        if isinstance(other, int):
            return ChebPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return ChebPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ChebPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "ChebPoly") -> tuple["ChebPoly", "ChebPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("division only by polynomials with unit leading coefficient")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            q = rem[top] * lead  # lead is +-1, so this is exact
            if q:
                quot[top - d] = q
                for idx, c in enumerate(divisor.coeffs):
                    rem[top - d + idx] -= q * c
        return ChebPoly(quot), ChebPoly(rem)

    def __mod__(self, divisor: "ChebPoly") -> "ChebPoly":
        return divmod(self, divisor)[1]

    def __floordiv__(self, divisor: "ChebPoly") -> "ChebPoly":
        return divmod(self, divisor)[0]

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, Fraction or mpmath values."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChebPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ChebPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


_X = ChebPoly((0, 1))


@lru_cache(maxsize=None)
def cheb_u(n: int) -> ChebPoly:
    """The rescaled second-kind Chebyshev polynomial ``S_n``.

    ``S_0 = 1``, ``S_1 = x``, ``S_{n+1} = x*S_n - S_{n-1}``; then
    ``S_n(2*cos t) = sin((n+1)*t)/sin(t)``.
    """
    if n < 0:
        raise ValueError(f"Chebyshev index must be >= 0, got {n}")
    if n == 0:
        return ChebPoly((1,))
    if n == 1:
        return _X
    return _X * cheb_u(n - 1) - cheb_u(n - 2)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> ChebPoly:
    """The n-th cyclotomic polynomial, by dividing ``z^n - 1`` down."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    poly = ChebPoly([-1] + [0] * (n - 1) + [1])
    for d in _divisors(n):
        if d < n:
            poly //= cyclotomic(d)
    return poly


@lru_cache(maxsize=None)
def min_poly_two_cos(n: int) -> ChebPoly:
    """Minimal polynomial over the integers of ``2*cos(pi/n)``, for ``n >= 2``.

    ``2*cos(pi/n) = z + 1/z`` for the primitive 2n-th root of unity
    ``z = exp(i*pi/n)``, so the minimal polynomial is obtained by folding the
    palindromic cyclotomic polynomial ``Phi_{2n}(z)`` through the basis
    ``V_t(x) = z^t + z^{-t}`` (``V_0 = 2``, ``V_1 = x``,
    ``V_{t+1} = x*V_t - V_{t-1}``).  The result is monic of degree
    ``phi(2n)/2`` and divides ``S_{n-1}``.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    phi = cyclotomic(2 * n)
    half = phi.degree // 2
    c = phi.coeffs
    folded = ChebPoly((c[half],))
    v_prev, v_cur = ChebPoly((2,)), _X
    for t in range(1, half + 1):
        folded = folded + c[half + t] * v_cur
        v_prev, v_cur = v_cur, _X * v_cur - v_prev
    return folded

"""Quantum dimensions of the catalog, exact and numeric.

Every irreducible module with affine weight index ``i`` has quantum
dimension ``sin((i+1)*pi/(k+2)) / sin(pi/(k+2))``, independently of its
sector and Z3 index.  Exactly, that number is ``S_i(x)`` at
``x = 2*cos(pi/(k+2))``, so it is represented as the residue of ``S_i`` in
``Z[x]/(psi)`` with ``psi`` the minimal polynomial of ``x``.  Because
``psi`` is the minimal polynomial, two residues are equal exactly when the
real numbers are equal, so identities such as the fusion homomorphism
property can be verified with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .labels import IrrLabel, check_level, enumerate_irreducibles
from .chebyshev import ChebPoly, cheb_u, min_poly_two_cos

__all__ = [
    "QDimElement",
    "reduction_modulus",
    "qdim_exact",
    "qdim_index",
    "qdim_numeric",
    "global_dimension",
    "has_unit_qdim",
]

#: Extra working digits used internally by all numeric evaluations.
_GUARD_DIGITS = 10


def reduction_modulus(k: int) -> ChebPoly:
    """Minimal polynomial of ``2*cos(pi/(k+2))``; the residue modulus at level ``k``.

    It is monic, divides ``S_{k+1}``, and has degree ``phi(2k+4)/2 <= k+1``,
    so every residue below has degree at most ``k``.
    """
    check_level(k)
    return min_poly_two_cos(k + 2)


@dataclass(frozen=True)
class QDimElement:
    """Exact quantum dimension: a residue in ``Z[x]/(psi)`` at a fixed level."""

    residue: ChebPoly
    level: int

    def __post_init__(self) -> None:
        check_level(self.level)
        if self.residue.degree >= reduction_modulus(self.level).degree:
            raise ValueError("residue not reduced")

    def __mul__(self, other: "QDimElement") -> "QDimElement":
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level} != {other.level}")
        product = (self.residue * other.residue) % reduction_modulus(self.level)
        return QDimElement(product, self.level)

    def __add__(self, other: "QDimElement") -> "QDimElement":
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level} != {other.level}")
        return QDimElement(self.residue + other.residue, self.level)

    def is_one(self) -> bool:
        return self.residue == ChebPoly((1,))

    def numeric(self, precision: int = 15) -> mpmath.mpf:
        """Evaluate the residue at ``x = 2*cos(pi/(k+2))`` to ``precision`` digits."""
        with mpmath.workdps(precision + _GUARD_DIGITS):
            x = 2 * mpmath.cos(mpmath.pi / (self.level + 2))
            value = self.residue(x)
            return +value

    def __str__(self) -> str:
        return str(self.residue)


def qdim_index(i: int, k: int) -> QDimElement:
    """Exact quantum dimension attached to affine weight index ``i``."""
    check_level(k)
    if not 0 <= i <= k:
        raise ValueError(f"i out of range: {i} not in 0..{k}")
    return QDimElement(cheb_u(i) % reduction_modulus(k), k)


def qdim_exact(label: IrrLabel, k: int) -> QDimElement:
    """Exact quantum dimension of ``label``; depends only on ``label.i``."""
    return qdim_index(label.i, k)


def qdim_numeric(label: IrrLabel, k: int, precision: int = 15) -> mpmath.mpf:
    """Numeric quantum dimension ``sin((i+1)*pi/(k+2))/sin(pi/(k+2))``.

    Accurate to ``precision`` decimal digits (evaluation carries guard
    digits).  This route never touches the exact residues, so it doubles as
    an independent cross-check of :func:`qdim_exact`.
    """
    check_level(k)
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    with mpmath.workdps(precision + _GUARD_DIGITS):
        theta = mpmath.pi / (k + 2)
        value = mpmath.sin((label.i + 1) * theta) / mpmath.sin(theta)
        return +value


def global_dimension(k: int) -> tuple[QDimElement, mpmath.mpf]:
    """Global dimension ``9 * sum_{i=0..k} qdim(i)^2``, exact and numeric.

    The exact part is a residue (an honest algebraic number — e.g. it is the
    integer 18 at level 1 but ``45 + 9*sqrt(5)`` at level 3); the numeric
    part evaluates the same sum of squared sine ratios directly.
    """
    check_level(k)
    modulus = reduction_modulus(k)
    total = ChebPoly()
    for i in range(k + 1):
        si = cheb_u(i) % modulus
        total = total + (si * si) % modulus
    exact = QDimElement((9 * total) % modulus, k)
    with mpmath.workdps(15 + _GUARD_DIGITS):
        theta = mpmath.pi / (k + 2)
        sin1 = mpmath.sin(theta)
        numeric = 9 * mpmath.fsum(
            (mpmath.sin((i + 1) * theta) / sin1) ** 2 for i in range(k + 1)
        )
        numeric = +numeric
    return exact, numeric


def has_unit_qdim(label: IrrLabel, k: int) -> bool:
    """True exactly when the quantum dimension equals 1 (simple current test)."""
    return qdim_exact(label, k).is_one()

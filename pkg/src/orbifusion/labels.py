"""Label space of the irreducible modules of the Z3-orbifold affine sl2 VOA.

For a fixed positive integer level ``k`` the orbifold algebra has exactly
``9*(k+1)`` irreducible modules.  Each one is named by a triple
``(sector, i, j)`` where

* ``sector`` records the origin of the module: untwisted (``U``),
  sigma-twisted (``T1``) or sigma^2-twisted (``T2``),
* ``i`` with ``0 <= i <= k`` is the affine weight index, and
* ``j`` in ``{0, 1, 2}`` indexes the Z3-eigenspace.

Nothing in this module knows about weights or fusion; labels are pure names
plus their validity invariants.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

__all__ = [
    "Rational",
    "Sector",
    "IrrLabel",
    "LabelSyntaxError",
    "check_level",
    "residue3",
    "make_label",
    "vacuum",
    "enumerate_irreducibles",
    "parse_label",
    "FusionVector",
]

#: Exact rational scalar used for conformal weights.  ``fractions.Fraction``
#: already guarantees lowest terms and a positive denominator.
Rational = Fraction


class Sector(enum.IntEnum):
    """Origin sector of a module; the integer value is its Z/3 grade."""

    U = 0
    T1 = 1
    T2 = 2

    @property
    def grade(self) -> int:
        """Z/3 grade: U -> 0, T1 -> 1, T2 -> 2."""
        return int(self)

    @property
    def tag(self) -> str:
        """Lowercase token used in the textual label grammar."""
        return _SECTOR_TAGS[self]


_SECTOR_TAGS = {Sector.U: "u", Sector.T1: "t1", Sector.T2: "t2"}
_TAG_SECTORS = {tag: sec for sec, tag in _SECTOR_TAGS.items()}


def check_level(k: int) -> int:
    """Validate a level, returning it unchanged.

    Raises ``ValueError`` unless ``k`` is an integer with ``k >= 1``.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"level must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    return k


def residue3(n: int) -> int:
    """Residue of the integer ``n`` modulo 3, in ``{0, 1, 2}``.

    Correct for negative ``n`` as well: ``residue3(-1) == 2``.
    """
    return n % 3


class IrrLabel(NamedTuple):
    """Name of one irreducible module: ``(sector, i, j)``.

    Immutable; compares and sorts by ``(sector, i, j)``, which is the
    canonical catalog order (sector major, then ``i``, then ``j``).
    Construct through :func:`make_label` to get range checking.
    """

    sector: Sector
    i: int
    j: int

    def token(self) -> str:
        """Canonical machine-readable form, e.g. ``t1:0:2``."""
        return f"{self.sector.tag}:{self.i}:{self.j}"

    def pretty(self, k: int) -> str:
        """Display form, e.g. ``L(3,0)^{T1,2}`` or ``L(3,1)^2``."""
        if self.sector is Sector.U:
            return f"L({k},{self.i})^{self.j}"
        return f"L({k},{self.i})^{{{self.sector.name},{self.j}}}"

    def __repr__(self) -> str:
        return f"IrrLabel({self.sector.name}, {self.i}, {self.j})"


def make_label(sector: Sector, i: int, j: int, k: int) -> IrrLabel:
    """Build a validated label at level ``k``; ``j`` is reduced modulo 3.

    Raises ``ValueError`` with a distinct message for each violated bound:
    bad level, ``i < 0``, or ``i > k``.
    """
    check_level(k)
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    if i > k:
        raise ValueError(f"i out of range: {i} > level {k}")
    return IrrLabel(Sector(sector), i, residue3(j))


def vacuum(k: int) -> IrrLabel:
    """The vacuum label ``u:0:0``, the unit of the fusion ring."""
    return make_label(Sector.U, 0, 0, k)


def enumerate_irreducibles(k: int) -> list[IrrLabel]:
    """All ``9*(k+1)`` labels at level ``k`` in canonical order."""
    check_level(k)
    return [
        IrrLabel(sector, i, j)
        for sector in Sector
        for i in range(k + 1)
        for j in range(3)
    ]


class LabelSyntaxError(ValueError):
    """Malformed label text; ``position`` is the offending 0-based offset."""

    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"bad label {text!r}: {message} at position {position}")


def parse_label(text: str, k: int) -> IrrLabel:
    """Parse ``u:<i>:<j>`` / ``t1:<i>:<j>`` / ``t2:<i>:<j>`` at level ``k``.

    The grammar is strict: lowercase sector tag, two colon-separated decimal
    integers, no whitespace.  Syntax problems raise
    :class:`LabelSyntaxError` with the offending position; out-of-range
    indices raise ``ValueError`` from :func:`make_label`.
    """
    for tag in ("t1", "t2", "u"):
        if text.startswith(tag):
            sector = _TAG_SECTORS[tag]
            rest, pos = text[len(tag):], len(tag)
            break
    else:
        raise LabelSyntaxError(text, 0, "expected sector tag 'u', 't1' or 't2'")
    numbers = []
    for _ in range(2):
        if not rest.startswith(":"):
            raise LabelSyntaxError(text, pos, "expected ':'")
        rest, pos = rest[1:], pos + 1
        digits = ""
        while rest and rest[0].isdigit():
            digits, rest, pos = digits + rest[0], rest[1:], pos + 1
        if not digits:
            raise LabelSyntaxError(text, pos, "expected a decimal integer")
        numbers.append(int(digits))
    if rest:
        raise LabelSyntaxError(text, pos, f"unexpected trailing text {rest!r}")
    return make_label(sector, numbers[0], numbers[1], k)


class FusionVector:
    """Finitely supported map ``IrrLabel -> positive multiplicity``.

    Zero entries are never stored, so equality is structural.  Instances are
    treated as immutable once constructed.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[IrrLabel, int] | Iterable[tuple[IrrLabel, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        store: dict[IrrLabel, int] = {}
        for label, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {label.token()}")
            if mult:
                store[label] = store.get(label, 0) + mult
        self._entries = dict(sorted(store.items()))

    @classmethod
    def single(cls, label: IrrLabel) -> "FusionVector":
        return cls(((label, 1),))

    def coefficient(self, label: IrrLabel) -> int:
        """Multiplicity of ``label``; 0 when absent."""
        return self._entries.get(label, 0)

    def items(self) -> Iterator[tuple[IrrLabel, int]]:
        """Entries in canonical label order."""
        return iter(self._entries.items())

    def labels(self) -> Iterator[IrrLabel]:
        return iter(self._entries)

    def __add__(self, other: "FusionVector") -> "FusionVector":
        merged = dict(self._entries)
        for label, mult in other._entries.items():
            merged[label] = merged.get(label, 0) + mult
        return FusionVector(merged)

    def scaled(self, factor: int) -> "FusionVector":
        if factor < 0:
            raise ValueError("multiplicities must stay non-negative")
        return FusionVector({lab: factor * m for lab, m in self._entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FusionVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __iter__(self) -> Iterator[IrrLabel]:
        return iter(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{lab.token()}: {m}" for lab, m in self._entries.items())
        return f"FusionVector({{{body}}})"

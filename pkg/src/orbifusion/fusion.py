"""Fusion products and contragredient duals of the orbifold catalog.

The fusion ring is built from the affine sl2 level-``k`` rule on the weight
indices together with a Z3 bookkeeping function on the eigenspace indices.
For each admissible output index ``i3`` define

    sign(i1, i2, i3, j1, j2) = j1 + j2 - t,   t = ((i1 + i2 - i3) / 2) mod 3,

which requires ``i1 + i2 + i3`` to be even (always true on the sl2 range).
There is one product formula per ordered sector pair (U,U), (U,T1), (U,T2),
(T1,T1), (T1,T2), (T2,T2); the remaining orders follow by commutativity of
the fusion product.  In every product each output label occurs with
multiplicity exactly 1.
"""

from __future__ import annotations

from .labels import FusionVector, IrrLabel, Sector, check_level, make_label, residue3

__all__ = [
    "sl2_fusion_range",
    "sign_value",
    "fuse_irreducible",
    "fuse",
    "contragredient",
    "fusion_coefficient",
]


def sl2_fusion_range(k: int, i1: int, i2: int) -> list[int]:
    """Admissible sl2 level-``k`` fusion outputs of indices ``i1`` and ``i2``.

    All ``i3`` with ``|i1-i2| <= i3 <= min(i1+i2, 2k-i1-i2)`` and
    ``i1+i2+i3`` even, ascending.
    """
    check_level(k)
    for i in (i1, i2):
        if not 0 <= i <= k:
            raise ValueError(f"i out of range: {i} not in 0..{k}")
    return list(range(abs(i1 - i2), min(i1 + i2, 2 * k - i1 - i2) + 1, 2))


def sign_value(i1: int, i2: int, i3: int, j1: int, j2: int) -> int:
    """The integer ``j1 + j2 - t`` with ``t = ((i1+i2-i3)/2) mod 3``.

    Deliberately *not* reduced modulo 3; reduction happens exactly once when
    the output label is built.  Raises ``ValueError`` if ``i1+i2+i3`` is odd.
    """
    if (i1 + i2 + i3) % 2:
        raise ValueError(f"parity violation: i1+i2+i3 = {i1 + i2 + i3} is odd")
    return j1 + j2 - residue3((i1 + i2 - i3) // 2)


def fuse_irreducible(a: IrrLabel, b: IrrLabel, k: int) -> FusionVector:
    """Fusion product of two irreducible modules as a FusionVector."""
    check_level(k)
    for lab in (a, b):
        if not 0 <= lab.i <= k:
            raise ValueError(f"label {lab.token()} invalid at level {k}")
    if a.sector > b.sector:
        a, b = b, a  # commutativity; formulas below cover sector(a) <= sector(b)
    (s1, i1, j1), (s2, i2, j2) = a, b
    out: list[IrrLabel] = []
    for i3 in sl2_fusion_range(k, i1, i2):
        if s1 is Sector.U and s2 is Sector.U:
            lab = make_label(Sector.U, i3, sign_value(i1, i2, i3, j1, j2), k)
        elif s1 is Sector.U and s2 is Sector.T1:
            lab = make_label(Sector.T1, i3, sign_value(i1, i2, i3, j1, j2), k)
        elif s1 is Sector.U and s2 is Sector.T2:
            lab = make_label(Sector.T2, i3, -sign_value(i1, i2, i3, j1, -j2), k)
        elif s1 is Sector.T1 and s2 is Sector.T1:
            lab = make_label(Sector.T2, i3, -sign_value(i1, i2, i3, j1, j2), k)
        elif s1 is Sector.T1 and s2 is Sector.T2:
            lab = make_label(Sector.U, k - i3, sign_value(i1, i2, i3, j1, -j2) + k - i3, k)
        else:  # T2 x T2
            lab = make_label(Sector.T1, k - i3, sign_value(i1, i2, i3, -j1, -j2) + k - i3, k)
        out.append(lab)
    return FusionVector((lab, 1) for lab in out)


def fuse(v1: FusionVector, v2: FusionVector, k: int) -> FusionVector:
    """Bilinear extension of :func:`fuse_irreducible` to FusionVectors."""
    total: dict[IrrLabel, int] = {}
    for lab1, m1 in v1.items():
        for lab2, m2 in v2.items():
            for lab3, m3 in fuse_irreducible(lab1, lab2, k).items():
                total[lab3] = total.get(lab3, 0) + m1 * m2 * m3
    return FusionVector(total)


def contragredient(label: IrrLabel, k: int) -> IrrLabel:
    """Contragredient (dual) module's label; an involution.

    Untwisted labels keep their index ``i`` and send ``j`` to ``i - j``
    modulo 3 (one expression covering the three ``i mod 3`` cases); the two
    twisted sectors swap, with ``i`` reflected to ``k - i`` and ``j`` fixed.
    """
    check_level(k)
    sector, i, j = label
    if not 0 <= i <= k:
        raise ValueError(f"label {label.token()} invalid at level {k}")
    if sector is Sector.U:
        return make_label(Sector.U, i, i - j, k)
    if sector is Sector.T1:
        return make_label(Sector.T2, k - i, j, k)
    return make_label(Sector.T1, k - i, j, k)


def fusion_coefficient(a: IrrLabel, b: IrrLabel, c: IrrLabel, k: int) -> int:
    """Multiplicity of ``c`` in ``a (x) b``; always 0 or 1 in this theory."""
    return fuse_irreducible(a, b, k).coefficient(c)

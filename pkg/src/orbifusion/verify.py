"""Machine verification of every identity asserted about the catalog.

Each suite returns a :class:`VerificationReport`; an empty failure list is
an executable proof that the identity holds on the swept domain.  Cubic
sweeps (associativity) are exhaustive up to a configurable level cap and
fall back to seeded random sampling beyond it, so every suite stays usable
at any level.  The level-1 suite additionally checks the whole catalog
against an independent oracle: the orbifold at level 1 is isomorphic to a
rank-one lattice theory whose 18 simple modules fuse like Z/18, whose duals
negate, and whose weights are s^2/36 modulo 1.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple

from .labels import (
    FusionVector,
    IrrLabel,
    Sector,
    check_level,
    enumerate_irreducibles,
    make_label,
    vacuum,
)
from .weights import base_twist_weight, conformal_weight
from .qdim import has_unit_qdim, qdim_exact
from .fusion import contragredient, fuse_irreducible

__all__ = [
    "Failure",
    "VerificationReport",
    "SUITES",
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
    "CUBIC_CAP",
    "QUADRATIC_CAP",
    "verify_unit",
    "verify_commutativity",
    "verify_associativity",
    "verify_duality",
    "verify_qdim_homomorphism",
    "verify_k1_lattice_oracle",
    "verify_catalog",
    "run_suites",
]

#: Exhaustive-sweep caps; beyond them suites sample with a fixed seed.
CUBIC_CAP = 8
QUADRATIC_CAP = 12
DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 20000


class Failure(NamedTuple):
    """One failed identity instance: what broke, and on which labels."""

    description: str
    labels: tuple[IrrLabel, ...]

    def render(self) -> str:
        toks = ", ".join(lab.token() for lab in self.labels)
        return f"{self.description}  [labels: {toks}]"


@dataclass
class VerificationReport:
    """Outcome of one verification suite at one level."""

    suite: str
    level: int
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        note = f" [{self.note}]" if self.note else ""
        return (
            f"suite={self.suite} level={self.level} checks={self.checks_run} "
            f"elapsed={self.elapsed:.3f}s{note} {status}"
        )


def _render_vector(v: FusionVector) -> str:
    if not v:
        return "{}"
    return "{" + ", ".join(f"{lab.token()}: {m}" for lab, m in v.items()) + "}"


class _FusionTable:
    """Integer-indexed fusion products of all irreducibles at one level.

    Multiplicities of irreducible-by-irreducible products are all 1, so a
    product is stored as a tuple of output indices; multiset accumulation
    only appears in triple products.
    """

    def __init__(self, k: int):
        check_level(k)
        self.k = k
        self.labels = enumerate_irreducibles(k)
        self.index = {lab: t for t, lab in enumerate(self.labels)}
        self.products = [
            [
                tuple(self.index[c] for c in fuse_irreducible(a, b, k))
                for b in self.labels
            ]
            for a in self.labels
        ]

    def triple_counts(self, first: tuple[int, ...], other: int, other_on_left: bool) -> dict[int, int]:
        """Multiset of outputs of (first-set) fused with one more factor."""
        out: dict[int, int] = {}
        for t in first:
            row = self.products[other][t] if other_on_left else self.products[t][other]
            for c in row:
                out[c] = out.get(c, 0) + 1
        return out


def _finish(report: VerificationReport, start: float) -> VerificationReport:
    report.elapsed = time.perf_counter() - start
    return report


def verify_unit(k: int) -> VerificationReport:
    """Vacuum acts as the fusion unit on every label."""
    start = time.perf_counter()
    report = VerificationReport("unit", k)
    vac = vacuum(k)
    for lab in enumerate_irreducibles(k):
        report.checks_run += 1
        got = fuse_irreducible(vac, lab, k)
        if got != FusionVector.single(lab):
            report.failures.append(
                Failure(
                    f"vacuum x {lab.token()} = {_render_vector(got)}, expected {{{lab.token()}: 1}}",
                    (lab,),
                )
            )
    return _finish(report, start)


def verify_commutativity(
    k: int, cap: int = QUADRATIC_CAP, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    """Fusion product is symmetric: a x b = b x a."""
    start = time.perf_counter()
    report = VerificationReport("comm", k)
    labels = enumerate_irreducibles(k)
    if k <= cap:
        pairs = [(a, b) for n, a in enumerate(labels) for b in labels[n:]]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(samples)]
        report.note = f"sampled {samples} pairs, seed {seed}"
    for a, b in pairs:
        report.checks_run += 1
        ab, ba = fuse_irreducible(a, b, k), fuse_irreducible(b, a, k)
        if ab != ba:
            report.failures.append(
                Failure(
                    f"{a.token()} x {b.token()} = {_render_vector(ab)} but reversed gives {_render_vector(ba)}",
                    (a, b),
                )
            )
    return _finish(report, start)


def verify_associativity(
    k: int, cap: int = CUBIC_CAP, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    """(a x b) x c = a x (b x c), exhaustively up to the cap, sampled beyond."""
    start = time.perf_counter()
    report = VerificationReport("assoc", k)
    table = _FusionTable(k)
    n = len(table.labels)
    if k <= cap:
        triples = ((ia, ib, ic) for ia in range(n) for ib in range(n) for ic in range(n))
        report.checks_run = n ** 3
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        report.checks_run = samples
        report.note = f"sampled {samples} triples, seed {seed}"
    products = table.products
    for ia, ib, ic in triples:
        left: dict[int, int] = {}
        for t in products[ia][ib]:
            for c in products[t][ic]:
                left[c] = left.get(c, 0) + 1
        right: dict[int, int] = {}
        for t in products[ib][ic]:
            for c in products[ia][t]:
                right[c] = right.get(c, 0) + 1
        if left != right:
            a, b, c = table.labels[ia], table.labels[ib], table.labels[ic]
            lhs = FusionVector({table.labels[t]: m for t, m in left.items()})
            rhs = FusionVector({table.labels[t]: m for t, m in right.items()})
            report.failures.append(
                Failure(
                    f"({a.token()} x {b.token()}) x {c.token()} = {_render_vector(lhs)} "
                    f"but {a.token()} x ({b.token()} x {c.token()}) = {_render_vector(rhs)}",
                    (a, b, c),
                )
            )
    return _finish(report, start)


def verify_duality(
    k: int, cap: int = QUADRATIC_CAP, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    """Contragredient identities.

    (i) N_{a,b}^c = N_{a,c'}^{b'} for *all* triples: swept over every
    ordered pair and every output of it.  A triple with both sides zero
    holds vacuously, and a triple whose right side is positive is the same
    equation as the swept instance at the pair (a, c'), so the positive
    sweep covers the whole cube at quadratic cost.
    (ii) The vacuum appears in a x b exactly when b = a'.
    (iii) Duality is an involution preserving weight and quantum dimension.
    """
    start = time.perf_counter()
    report = VerificationReport("dual", k)
    labels = enumerate_irreducibles(k)
    vac = vacuum(k)
    duals = {lab: contragredient(lab, k) for lab in labels}

    for lab in labels:  # part (iii)
        report.checks_run += 3
        d = duals[lab]
        if contragredient(d, k) != lab:
            report.failures.append(Failure(f"dual(dual({lab.token()})) = {contragredient(d, k).token()}", (lab,)))
        if conformal_weight(d, k) != conformal_weight(lab, k):
            report.failures.append(
                Failure(
                    f"weight changes under dual: {lab.token()} has {conformal_weight(lab, k)}, "
                    f"{d.token()} has {conformal_weight(d, k)}",
                    (lab, d),
                )
            )
        if qdim_exact(d, k) != qdim_exact(lab, k):
            report.failures.append(
                Failure(
                    f"qdim changes under dual: {lab.token()} -> {qdim_exact(lab, k)}, "
                    f"{d.token()} -> {qdim_exact(d, k)}",
                    (lab, d),
                )
            )

    if k <= cap:
        pairs = [(a, b) for a in labels for b in labels]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(samples)]
        report.note = f"sampled {samples} pairs, seed {seed}"
    for a, b in pairs:
        product = fuse_irreducible(a, b, k)
        # part (ii)
        report.checks_run += 1
        vac_mult = product.coefficient(vac)
        expected = 1 if b == duals[a] else 0
        if vac_mult != expected:
            report.failures.append(
                Failure(
                    f"N_{{{a.token()},{b.token()}}}^vacuum = {vac_mult}, expected {expected}",
                    (a, b),
                )
            )
        # part (i), positive sweep
        for c, mult in product.items():
            report.checks_run += 1
            partner = fuse_irreducible(a, duals[c], k).coefficient(duals[b])
            if partner != mult:
                report.failures.append(
                    Failure(
                        f"N_{{{a.token()},{b.token()}}}^{{{c.token()}}} = {mult} but "
                        f"N_{{{a.token()},{duals[c].token()}}}^{{{duals[b].token()}}} = {partner}",
                        (a, b, c),
                    )
                )
    return _finish(report, start)


def verify_qdim_homomorphism(
    k: int, cap: int = QUADRATIC_CAP, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> VerificationReport:
    """qdim(a) * qdim(b) = sum of qdim over a x b, as exact residues."""
    start = time.perf_counter()
    report = VerificationReport("qdim", k)
    labels = enumerate_irreducibles(k)
    qd = {lab: qdim_exact(lab, k) for lab in labels}
    if k <= cap:
        pairs = [(a, b) for a in labels for b in labels]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(samples)]
        report.note = f"sampled {samples} pairs, seed {seed}"
    for a, b in pairs:
        report.checks_run += 1
        lhs = qd[a] * qd[b]
        rhs = None
        for c, mult in fuse_irreducible(a, b, k).items():
            for _ in range(mult):
                rhs = qd[c] if rhs is None else rhs + qd[c]
        if rhs is None or lhs != rhs:
            report.failures.append(
                Failure(
                    f"qdim({a.token()}) * qdim({b.token()}) = {lhs} but fusion side sums to {rhs}",
                    (a, b),
                )
            )
    return _finish(report, start)


# The Z/18 correspondence realizing the level-1 catalog inside a rank-one
# lattice theory: label token -> lattice coset index s, with fusion s+t,
# dual -s and weight s^2/36 (mod 1).
Z18_CORRESPONDENCE: dict[str, int] = {
    "u:0:0": 0, "t1:0:0": 1, "t2:0:0": 2,
    "u:1:1": 3, "t1:1:1": 4, "t2:1:2": 5,
    "u:0:1": 6, "t1:0:1": 7, "t2:0:2": 8,
    "u:1:2": 9, "t1:1:2": 10, "t2:1:1": 11,
    "u:0:2": 12, "t1:0:2": 13, "t2:0:1": 14,
    "u:1:0": 15, "t1:1:0": 16, "t2:1:0": 17,
}


def verify_k1_lattice_oracle() -> VerificationReport:
    """Level-1 catalog against the independent Z/18 lattice model."""
    start = time.perf_counter()
    report = VerificationReport("oracle", 1)
    cosets = {lab: Z18_CORRESPONDENCE[lab.token()] for lab in enumerate_irreducibles(1)}
    for a, s_a in cosets.items():
        for b, s_b in cosets.items():
            report.checks_run += 1
            product = fuse_irreducible(a, b, 1)
            entries = list(product.items())
            if len(entries) != 1 or entries[0][1] != 1:
                report.failures.append(
                    Failure(f"{a.token()} x {b.token()} is not a single simple module: {_render_vector(product)}", (a, b))
                )
                continue
            got = cosets[entries[0][0]]
            want = (s_a + s_b) % 18
            if got != want:
                report.failures.append(
                    Failure(
                        f"{a.token()} x {b.token()} lands on coset {got}, lattice model says {want}",
                        (a, b, entries[0][0]),
                    )
                )
    for lab, s in cosets.items():
        report.checks_run += 1
        dual_coset = cosets[contragredient(lab, 1)]
        if dual_coset != (18 - s) % 18:
            report.failures.append(
                Failure(f"dual of {lab.token()} is on coset {dual_coset}, lattice model says {(18 - s) % 18}", (lab,))
            )
    for lab, s in cosets.items():
        report.checks_run += 1
        weight = conformal_weight(lab, 1)
        if (weight - Fraction(s * s, 36)) % 1 != 0:
            report.failures.append(
                Failure(f"weight({lab.token()}) = {weight} is not {s}^2/36 modulo 1", (lab,))
            )
    return _finish(report, start)


def verify_catalog(k: int) -> VerificationReport:
    """Catalog size and weight-table invariants at level ``k``."""
    start = time.perf_counter()
    report = VerificationReport("catalog", k)
    labels = enumerate_irreducibles(k)
    report.checks_run += 2
    if len(labels) != 9 * (k + 1):
        report.failures.append(Failure(f"catalog has {len(labels)} labels, expected {9 * (k + 1)}", ()))
    if len(set(labels)) != len(labels):
        report.failures.append(Failure("catalog contains duplicate labels", ()))
    vac = vacuum(k)
    for lab in labels:
        report.checks_run += 1
        w = conformal_weight(lab, k)
        if w < 0:
            report.failures.append(Failure(f"negative weight {w} at {lab.token()}", (lab,)))
        elif (w == 0) != (lab == vac):
            report.failures.append(Failure(f"weight 0 at non-vacuum label {lab.token()}", (lab,)))
    for i in range(k + 1):
        for j in range(3):
            report.checks_run += 1
            t1 = conformal_weight(make_label(Sector.T1, i, j, k), k)
            t2 = conformal_weight(make_label(Sector.T2, k - i, j, k), k)
            if t1 != t2:
                report.failures.append(
                    Failure(
                        f"twisted weight pairing broken at i={i}, j={j}: {t1} != {t2}",
                        (make_label(Sector.T1, i, j, k), make_label(Sector.T2, k - i, j, k)),
                    )
                )
        report.checks_run += 1
        base = conformal_weight(make_label(Sector.T1, i, 0, k), k)
        if base != base_twist_weight(k, i, 1):
            report.failures.append(
                Failure(
                    f"T1 base weight at i={i} is {base}, twist formula gives {base_twist_weight(k, i, 1)}",
                    (make_label(Sector.T1, i, 0, k),),
                )
            )
    if k == 1:
        for lab in labels:
            report.checks_run += 1
            if not has_unit_qdim(lab, 1):
                report.failures.append(Failure(f"{lab.token()} is not a simple current at level 1", (lab,)))
    return _finish(report, start)


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "catalog": verify_catalog,
    "unit": verify_unit,
    "comm": verify_commutativity,
    "assoc": verify_associativity,
    "dual": verify_duality,
    "qdim": verify_qdim_homomorphism,
    "oracle": lambda k, **_: verify_k1_lattice_oracle(),
}

_CAPPED = {"comm", "assoc", "dual", "qdim"}


def run_suites(
    names: list[str],
    k: int,
    cap: int | None = None,
    seed: int | None = None,
    samples: int | None = None,
) -> list[VerificationReport]:
    """Run the named suites at level ``k`` in catalog order.

    ``cap``, ``seed`` and ``samples`` override the sweep defaults where a
    suite supports them.  The oracle suite only exists at level 1.
    """
    check_level(k)
    reports = []
    for name in names:
        if name == "oracle" and k != 1:
            raise ValueError("the lattice oracle is a level-1 statement; run it with level 1")
        kwargs = {}
        if name in _CAPPED:
            if cap is not None:
                kwargs["cap"] = cap
            if seed is not None:
                kwargs["seed"] = seed
            if samples is not None:
                kwargs["samples"] = samples
        reports.append(SUITES[name](k, **kwargs))
    return reports

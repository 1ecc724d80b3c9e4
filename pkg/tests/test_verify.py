import pytest

import orbifusion.verify as verify_mod
from orbifusion.labels import FusionVector, enumerate_irreducibles, parse_label
from orbifusion.verify import (
    Z18_CORRESPONDENCE,
    run_suites,
    verify_associativity,
    verify_catalog,
    verify_commutativity,
    verify_duality,
    verify_k1_lattice_oracle,
    verify_qdim_homomorphism,
    verify_unit,
)

# Frozen copy of the level-1 lattice correspondence used by the oracle.
FROZEN_Z18 = {
    "u:0:0": 0, "t1:0:0": 1, "t2:0:0": 2, "u:1:1": 3, "t1:1:1": 4, "t2:1:2": 5,
    "u:0:1": 6, "t1:0:1": 7, "t2:0:2": 8, "u:1:2": 9, "t1:1:2": 10, "t2:1:1": 11,
    "u:0:2": 12, "t1:0:2": 13, "t2:0:1": 14, "u:1:0": 15, "t1:1:0": 16, "t2:1:0": 17,
}


def test_oracle_correspondence_matches_frozen_table():
    assert Z18_CORRESPONDENCE == FROZEN_Z18
    assert sorted(Z18_CORRESPONDENCE.values()) == list(range(18))


def test_oracle_suite_passes_with_full_check_count():
    report = verify_k1_lattice_oracle()
    assert report.passed
    assert report.checks_run == 18 * 18 + 18 + 18
    assert report.level == 1


@pytest.mark.parametrize("k", [1, 2, 5])
def test_unit_suite(k):
    report = verify_unit(k)
    assert report.passed
    assert report.checks_run == 9 * (k + 1)


@pytest.mark.parametrize("k", [1, 3])
def test_commutativity_suite_exhaustive(k):
    report = verify_commutativity(k)
    assert report.passed
    n = 9 * (k + 1)
    assert report.checks_run == n * (n + 1) // 2
    assert report.note == ""


def test_commutativity_suite_sampled_beyond_cap():
    report = verify_commutativity(4, cap=3, samples=500, seed=11)
    assert report.passed
    assert report.checks_run == 500
    assert "sampled" in report.note and "seed 11" in report.note


@pytest.mark.parametrize("k", [1, 2, 4])
def test_associativity_suite_exhaustive(k):
    report = verify_associativity(k)
    assert report.passed
    assert report.checks_run == (9 * (k + 1)) ** 3


def test_associativity_suite_sampled_beyond_cap():
    report = verify_associativity(9, samples=800, seed=5)
    assert report.passed
    assert report.checks_run == 800
    assert "sampled" in report.note


@pytest.mark.parametrize("k", [1, 3, 6])
def test_duality_suite(k):
    report = verify_duality(k)
    assert report.passed
    # 3 invariance checks per label, then per ordered pair one vacuum check
    # plus one identity instance per product output
    assert report.checks_run >= 3 * 9 * (k + 1) + (9 * (k + 1)) ** 2


@pytest.mark.parametrize("k", [1, 4, 7])
def test_qdim_homomorphism_suite(k):
    report = verify_qdim_homomorphism(k)
    assert report.passed
    assert report.checks_run == (9 * (k + 1)) ** 2


@pytest.mark.parametrize("k", [1, 2, 12])
def test_catalog_suite(k):
    assert verify_catalog(k).passed


def test_run_suites_all_order_and_levels():
    reports = run_suites(["catalog", "unit", "comm", "assoc", "dual", "qdim", "oracle"], 1)
    assert [r.suite for r in reports] == ["catalog", "unit", "comm", "assoc", "dual", "qdim", "oracle"]
    assert all(r.passed for r in reports)


def test_run_suites_rejects_oracle_off_level_one():
    with pytest.raises(ValueError, match="level-1"):
        run_suites(["oracle"], 2)


def test_summary_line_shape():
    report = verify_unit(2)
    line = report.summary()
    assert "suite=unit" in line and "level=2" in line and line.endswith("PASS")


def _broken_fuse(a, b, k):
    # deliberately wrong: drop every label with j == 2 from the product
    from orbifusion.fusion import fuse_irreducible

    honest = fuse_irreducible(a, b, k)
    return FusionVector((lab, m) for lab, m in honest.items() if lab.j != 2)


def test_failures_are_reported_with_labels(monkeypatch):
    monkeypatch.setattr(verify_mod, "fuse_irreducible", _broken_fuse)
    report = verify_unit(1)
    assert not report.passed
    assert len(report.failures) == 6  # the six j=2 labels vanish from vacuum products
    rendered = report.failures[0].render()
    assert "expected" in rendered and "labels:" in rendered
    summary = report.summary()
    assert summary.endswith("FAIL (6 failures)")


def test_oracle_catches_broken_duality(monkeypatch):
    monkeypatch.setattr(verify_mod, "contragredient", lambda lab, k: lab)
    report = verify_k1_lattice_oracle()
    assert not report.passed
    # self-dual labels (cosets 0 and 9) still pass; the other 16 fail
    assert len(report.failures) == 16


def test_sampling_is_deterministic_for_fixed_seed():
    r1 = verify_associativity(9, samples=300, seed=42)
    r2 = verify_associativity(9, samples=300, seed=42)
    assert (r1.checks_run, r1.passed) == (r2.checks_run, r2.passed)


def test_catalog_suite_counts_simple_current_checks_at_level_one():
    report = verify_catalog(1)
    # 2 structural + 18 weight checks + 2*(3+1) pairing/base + 18 simple-current
    assert report.checks_run == 2 + 18 + 8 + 18

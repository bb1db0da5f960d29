"""Exit criteria. Each test appends one PASS/FAIL line to the terminal summary."""

import time
from contextlib import contextmanager

from click.testing import CliRunner

import goldens as G
from conftest import ACCEPTANCE_LINES
from periodic_partitions import families, harness
from periodic_partitions.bijection import (
    fold_into_tableau,
    forward_map,
    group_sequence,
    inverse_map,
    iter_strips,
    build_tableau,
    split_groups,
)
from periodic_partitions.cli import main
from periodic_partitions.core import Partition, enumerate_all
from periodic_partitions.families import (
    FamilySelector,
    PeriodPattern,
    Side,
    Variant,
    all_patterns,
    count_cp_legacy_dp,
    enumerate_family,
    generate_rp_pattern,
    is_cp_pattern,
    parse_selector,
)

R_SWEEP = (2, 3, 4, 5)


@contextmanager
def criterion(number, title, time_limit=None):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = f"{elapsed:.2f}s"
        if time_limit is not None:
            detail += f" (limit {time_limit}s)"
            assert elapsed < time_limit, f"took {elapsed:.2f}s, limit {time_limit}s"
        status = "PASS"
    finally:
        ACCEPTANCE_LINES.append(f"criterion {number}: {status}  {title}  {detail}")


def fam(text, n):
    return set(enumerate_family(n, parse_selector(text)))


def failures(reports):
    return [(rep.theorem, rep.params_text(rec.check), rec.n, rec.m, rec.left, rec.right)
            for rep in reports for rec in rep.records if not rec.match]


def test_criterion_1_golden_sets():
    with criterion(1, "golden family sets", time_limit=1.0):
        assert set(enumerate_all(5)) == G.P5 and len(enumerate_all(5)) == 7
        assert fam("rp:r=3", 6) == G.RP3_6
        assert fam("cp:r=3", 6) == G.CP3_6
        assert fam("cp:r=3,j=1", 8) == G.CP_3_1_8
        assert fam("rp:r=3,j=1", 8) == G.RP_3_1_8
        assert fam("cp:r=3,j=2", 8) == G.CP_3_2_8
        assert fam("rp:r=3,j=2", 8) == G.RP_3_2_8
        assert fam("cp:r=3,s=1+2", 10) == G.CP_3_12_10
        assert fam("rp:r=3,s=1+2", 10) == G.RP_3_12_10
        assert fam("cp:r=6,s=1+3", 12) == G.CP_6_13_12
        assert fam("rp:r=6,s=1+3", 12) == G.RP_6_13_12
        for lam in G.REMARK_REJECTED:
            assert not is_cp_pattern(Partition(lam), PeriodPattern(6, (1, 3)))


def test_criterion_2_map_goldens():
    with criterion(2, "forward/inverse map goldens", time_limit=1.0):
        assert forward_map(Partition(G.FORWARD_IN), 6) == G.FORWARD_OUT
        strips = [size for size, _ in iter_strips(build_tableau(Partition(G.FORWARD_IN), 6))]
        assert tuple(strips) == G.FORWARD_OUT
        mu = Partition(G.INVERSE_IN)
        assert inverse_map(mu, 6) == G.INVERSE_OUT
        seqs = [group_sequence(g, 6) for g in split_groups(mu, 6)]
        assert seqs == G.INVERSE_SEQUENCES
        assert fold_into_tableau(seqs, 6).rows == G.GOOD_TABLEAU


def test_criterion_3_theorem3_sweep():
    with criterion(3, "pattern count identity sweep r<=5 n<=22", time_limit=300):
        reports = [harness.verify_theorem3(p, v, 22)
                   for r in R_SWEEP for p in all_patterns(r) for v in Variant]
        assert len(reports) == 3 * (1 + 3 + 7 + 15)
        assert failures(reports) == []


def test_criterion_4_bijection_suite():
    with criterion(4, "bijection round trip / image / injective / fold unique"):
        reports = [harness.verify_bijection(p, v, 20, brute_max=16 if r <= 4 else -1)
                   for r in R_SWEEP for p in all_patterns(r) for v in Variant]
        checks = {rec.check for rep in reports for rec in rep.records}
        assert checks == {"image", "injective", "roundtrip", "fold_unique", "support",
                          "brute_force"}
        assert failures(reports) == []


def test_criterion_5_refined_theorems():
    with criterion(5, "refined K/S identities and DP oracle"):
        t1 = harness.verify_theorem1(22)
        reports = [t1] + [harness.verify_theorem2(r, j, 22)
                          for r in R_SWEEP for j in range(1, r)]
        assert failures(reports) == []
        sylvester = {(r.n, r.m, r.left, r.right) for r in t1.records}
        r2 = {(r.n, r.m, r.left, r.right) for r in reports[1].records if r.check == "refined"}
        assert sylvester == r2
        for r in R_SWEEP:
            for j in range(1, r):
                sel = FamilySelector.legacy(Side.CP, r, j)
                for n in range(41):
                    assert count_cp_legacy_dp(n, r, j) == len(enumerate_family(n, sel))


def test_criterion_6_theorem4():
    with criterion(6, "BCP/BRP counts and forward transport"):
        reports = [harness.verify_theorem4(r, 22) for r in R_SWEEP]
        assert {rec.check for rec in reports[0].records} >= {"count", "image", "injective"}
        assert failures(reports) == []


def test_criterion_7_reductions():
    with criterion(7, "single-cut patterns = legacy; generator = filter"):
        for r in R_SWEEP:
            for j in range(1, r):
                for side in Side:
                    legacy = FamilySelector.legacy(side, r, j)
                    pattern = FamilySelector.of_pattern(side, PeriodPattern(r, (j,)))
                    for n in range(23):
                        assert set(enumerate_family(n, legacy)) == set(
                            enumerate_family(n, pattern))
            for p in all_patterns(r):
                for v in Variant:
                    sel = FamilySelector.of_pattern(Side.RP, p, v)
                    for n in range(23):
                        assert set(generate_rp_pattern(n, p, v)) == set(
                            enumerate_family(n, sel))


def test_criterion_8_determinism_and_exit_codes(tmp_path, monkeypatch):
    with criterion(8, "byte-identical reports; exit code contract"):
        runner = CliRunner()
        outs = []
        for fmt in ("csv", "json"):
            for k in range(2):
                path = tmp_path / f"{fmt}{k}"
                result = runner.invoke(main, ["verify", "--n-max", "14", "--format", fmt,
                                              "--out", str(path)])
                assert result.exit_code == 0
                outs.append(path.read_bytes())
        assert outs[0] == outs[1] and outs[2] == outs[3]

        real = families.is_rp_pattern

        def corrupted(lam, pattern, variant=Variant.FREE):
            # drops exactly one member family-wide at n=7
            return real(lam, pattern, variant) and sum(lam) != 7

        monkeypatch.setattr(families, "is_rp_pattern", corrupted)
        result = runner.invoke(main, ["verify", "--theorem", "3", "--r", "3",
                                      "--n-max", "10"])
        assert result.exit_code == 1
        monkeypatch.setattr(families, "is_rp_pattern", real)
        result = runner.invoke(main, ["verify", "--theorem", "3", "--r", "3",
                                      "--n-max", "10"])
        assert result.exit_code == 0

"""Exhaustive verification campaigns and their reports.

Every check is expressed as a per-n record with a left and right count whose
equality is the claim being tested. Set-equality checks use
``left = |A union B|`` and ``right = |A intersect B|`` so that equal counts
mean equal sets.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from periodic_partitions.bijection import (
    MapError,
    brute_force_inverse,
    build_tableau,
    fold_into_tableau,
    forward_map,
    group_sequence,
    inverse_map,
    iter_strips,
    split_groups,
    _fold_solutions,
)
from periodic_partitions.core import (
    Partition,
    PartitionError,
    conjugate,
    format_partition,
    stat_K,
    stat_S,
)
from periodic_partitions.families import (
    FamilySelector,
    PeriodPattern,
    Side,
    Variant,
    all_patterns,
    count_cp_legacy_dp,
    enumerate_family,
    generate_rp_pattern,
)

CSV_HEADER = ("theorem", "params", "n", "m", "left", "right", "match")
MAX_WITNESSES = 10
DEFAULT_N_MAX = 22
DEFAULT_BRUTE_MAX = 16
CAMPAIGN_R = (2, 3, 4, 5)


@dataclass(frozen=True)
class CountRecord:
    n: int
    left: int
    right: int
    m: int | None = None
    check: str = "count"

    @property
    def match(self) -> bool:
        return self.left == self.right


# refined rows are count records keyed by the statistic value
RefinedRecord = CountRecord


@dataclass
class VerificationReport:
    theorem: str
    params: dict[str, str]
    records: list[CountRecord] = field(default_factory=list)
    witnesses: dict[tuple[str, int, int | None], dict[str, list[str]]] = field(
        default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(rec.match for rec in self.records)

    def add(self, rec: CountRecord, **witness_sets: Iterable[Sequence[int]]) -> None:
        """Append a record; on mismatch keep up to MAX_WITNESSES per named set."""
        self.records.append(rec)
        if rec.match:
            return
        kept = {name: [format_partition(p) for p in _take(parts, MAX_WITNESSES)]
                for name, parts in witness_sets.items()}
        if not any(kept.values()):
            kept = {"note": [f"left={rec.left} right={rec.right}"]}
        self.witnesses[(rec.check, rec.n, rec.m)] = kept

    def params_text(self, check: str = "count") -> str:
        items = [f"{k}={v}" for k, v in self.params.items()]
        if check != "count":
            items.append(f"check={check}")
        return ";".join(items)

    def csv_rows(self) -> list[tuple]:
        return [(self.theorem, self.params_text(rec.check), rec.n,
                 "" if rec.m is None else rec.m, rec.left, rec.right,
                 "true" if rec.match else "false")
                for rec in self.records]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "passed": self.passed,
            "records": [
                {"n": rec.n, "m": rec.m, "check": rec.check, "left": rec.left,
                 "right": rec.right, "match": rec.match}
                for rec in self.records
            ],
            "witnesses": [
                {"check": check, "n": n, "m": m, "sets": sets}
                for (check, n, m), sets in self.witnesses.items()
            ],
        }


def _take(items: Iterable, k: int) -> list:
    out = []
    for item in items:
        if len(out) >= k:
            break
        out.append(item)
    return out


def render_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rep in reports:
        writer.writerows(rep.csv_rows())
    return buf.getvalue()


def render_json(reports: Sequence[VerificationReport]) -> str:
    doc = {"passed": all(r.passed for r in reports),
           "reports": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=2) + "\n"


def _set_check(rep: VerificationReport, n: int, check: str,
               a: Iterable[Partition], b: Iterable[Partition]) -> None:
    a, b = set(a), set(b)
    rep.add(CountRecord(n, len(a | b), len(a & b), check=check),
            only_left=sorted(a - b, reverse=True),
            only_right=sorted(b - a, reverse=True))


def _refined(rep: VerificationReport, n: int, left: Sequence[Partition],
             right: Sequence[Partition], check: str = "refined") -> None:
    by_k = defaultdict(list)
    by_s = defaultdict(list)
    for lam in left:
        by_k[stat_K(lam)].append(lam)
    for lam in right:
        by_s[stat_S(lam)].append(lam)
    for m in sorted(set(by_k) | set(by_s)):
        rep.add(CountRecord(n, len(by_k[m]), len(by_s[m]), m=m, check=check),
                left=by_k[m], right=by_s[m])


def verify_theorem1(n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    """Odd parts counted by distinct values against distinct parts counted
    by runs, for every n and every statistic value."""
    rep = VerificationReport("1", {"r": "2"})
    cp = FamilySelector.plain(Side.CP, 2)
    rp = FamilySelector.plain(Side.RP, 2)
    for n in range(n_max + 1):
        _refined(rep, n, enumerate_family(n, cp), enumerate_family(n, rp),
                 check="count")
    return rep


def verify_theorem2(r: int, j: int, n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    rep = VerificationReport("2", {"r": str(r), "j": str(j)})
    cp = FamilySelector.legacy(Side.CP, r, j)
    rp = cp.partner()
    for n in range(n_max + 1):
        left, right = enumerate_family(n, cp), enumerate_family(n, rp)
        rep.add(CountRecord(n, len(left), len(right)), left=left, right=right)
        rep.add(CountRecord(n, count_cp_legacy_dp(n, r, j), len(left), check="dp"),
                left=left)
        _refined(rep, n, left, right)
    return rep


def verify_theorem3(pattern: PeriodPattern, variant: Variant = Variant.FREE,
                    n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    rep = VerificationReport("3", _pattern_params(pattern, variant))
    cp = FamilySelector.of_pattern(Side.CP, pattern, variant)
    rp = cp.partner()
    for n in range(n_max + 1):
        left, right = enumerate_family(n, cp), enumerate_family(n, rp)
        rep.add(CountRecord(n, len(left), len(right)), left=left, right=right)
        _set_check(rep, n, "generator", right,
                   generate_rp_pattern(n, pattern, variant))
    return rep


def verify_theorem4(r: int, n_max: int = DEFAULT_N_MAX) -> VerificationReport:
    """BCP/BRP counts, plus transport of BCP into BRP by the forward map and
    recovery of every BRP member by the inverse map."""
    rep = VerificationReport("4", {"r": str(r)})
    bcp = FamilySelector.boundary(Side.CP, r)
    brp = bcp.partner()
    for n in range(n_max + 1):
        left, right = enumerate_family(n, bcp), enumerate_family(n, brp)
        rep.add(CountRecord(n, len(left), len(right)), left=left, right=right)
        _transport(rep, n, r, left, set(right))
        _recover(rep, n, r, right, set(left), check="inverse")
    return rep


def _pattern_params(pattern: PeriodPattern, variant: Variant) -> dict[str, str]:
    return {"r": str(pattern.r), "s": "+".join(map(str, pattern.s)),
            "variant": variant.value}


def _transport(rep: VerificationReport, n: int, r: int,
               domain: Sequence[Partition], codomain: set) -> dict:
    """Records image membership and injectivity; returns image -> preimages."""
    images: dict[Partition, list[Partition]] = defaultdict(list)
    bad_image = []
    for lam in domain:
        try:
            mu = forward_map(lam, r)
        except MapError:
            bad_image.append(lam)
            continue
        images[mu].append(lam)
        if mu not in codomain:
            bad_image.append(lam)
    rep.add(CountRecord(n, len(domain), len(domain) - len(bad_image), check="image"),
            failing=bad_image)
    collided = [lam for pre in images.values() if len(pre) > 1 for lam in pre]
    rep.add(CountRecord(n, len(domain), len(images), check="injective"),
            colliding=collided)
    return images


def _recover(rep: VerificationReport, n: int, r: int,
             targets: Sequence[Partition], domain: set, check: str) -> None:
    failing = []
    for mu in targets:
        try:
            lam = inverse_map(mu, r)
        except MapError:
            failing.append(mu)
            continue
        if lam not in domain or forward_map(lam, r) != mu:
            failing.append(mu)
    rep.add(CountRecord(n, len(targets), len(targets) - len(failing), check=check),
            failing=failing)


def _support_ok(mu: Sequence[int], pattern: PeriodPattern) -> bool:
    allowed = set(pattern.s) | {pattern.r}
    return all(set(conjugate(g)) <= allowed for g in split_groups(mu, pattern.r))


def verify_bijection(pattern: PeriodPattern, variant: Variant = Variant.FREE,
                     n_max: int = DEFAULT_N_MAX,
                     brute_max: int = DEFAULT_BRUTE_MAX) -> VerificationReport:
    r = pattern.r
    rep = VerificationReport("bijection", _pattern_params(pattern, variant))
    cp = FamilySelector.of_pattern(Side.CP, pattern, variant)
    rp = cp.partner()
    for n in range(n_max + 1):
        left, right = enumerate_family(n, cp), enumerate_family(n, rp)
        right_set = set(right)

        _transport(rep, n, r, left, right_set)

        roundtrip_bad = []
        for lam in left:
            try:
                if inverse_map(forward_map(lam, r), r) != lam:
                    roundtrip_bad.append(lam)
            except MapError:
                roundtrip_bad.append(lam)
        rep.add(CountRecord(n, len(left), len(left) - len(roundtrip_bad),
                            check="roundtrip"), failing=roundtrip_bad)

        fold_bad = []
        for mu in right:
            try:
                seqs = [group_sequence(g, r) for g in split_groups(mu, r)]
            except MapError:
                fold_bad.append(mu)
                continue
            if len(_fold_solutions(seqs, r)) != 1:
                fold_bad.append(mu)
        rep.add(CountRecord(n, len(right), len(right) - len(fold_bad),
                            check="fold_unique"), failing=fold_bad)

        unsupported = [mu for mu in right if not _support_ok(mu, pattern)]
        rep.add(CountRecord(n, len(right), len(right) - len(unsupported),
                            check="support"), failing=unsupported)

        if n <= brute_max:
            disagree = []
            for mu in right:
                try:
                    if inverse_map(mu, r) != brute_force_inverse(mu, r, cp):
                        disagree.append(mu)
                except MapError:
                    disagree.append(mu)
            rep.add(CountRecord(n, len(right), len(right) - len(disagree),
                                check="brute_force"), failing=disagree)
    return rep


def campaign(n_max: int = DEFAULT_N_MAX, r_values: Sequence[int] = CAMPAIGN_R,
             brute_max: int = DEFAULT_BRUTE_MAX,
             theorems: Sequence[str] = ("1", "2", "3", "4", "bijection"),
             ) -> list[VerificationReport]:
    """The default sweep: every theorem, every pattern for each r, every variant."""
    reports = []
    if "1" in theorems:
        reports.append(verify_theorem1(n_max))
    for r in r_values:
        if "2" in theorems:
            reports.extend(verify_theorem2(r, j, n_max) for j in range(1, r))
        for pattern in all_patterns(r):
            for variant in Variant:
                if "3" in theorems:
                    reports.append(verify_theorem3(pattern, variant, n_max))
                if "bijection" in theorems:
                    reports.append(verify_bijection(pattern, variant, n_max,
                                                    brute_max))
        if "4" in theorems:
            reports.append(verify_theorem4(r, n_max))
    return reports


class TraceError(PartitionError):
    def __init__(self, message: str, lines: list[str]):
        self.lines = lines
        super().__init__(message)


def _indent(text: str, prefix: str = "  ") -> list[str]:
    return [prefix + line for line in text.splitlines()] or [prefix + "(empty)"]


def trace_map(parts: Sequence[int], r: int, direction: str = "forward") -> list[str]:
    """Human-readable trace of either map, one step per block of lines."""
    lines: list[str] = []
    try:
        if direction == "forward":
            _trace_forward(parts, r, lines)
        elif direction == "inverse":
            _trace_inverse(parts, r, lines)
        else:
            raise PartitionError(f"unknown direction {direction!r}")
    except PartitionError as exc:
        if isinstance(exc, TraceError):
            raise
        lines.append(f"error: {exc}")
        raise TraceError(str(exc), lines) from exc
    return lines


def _trace_forward(lam: Sequence[int], r: int, lines: list[str]) -> None:
    tab = build_tableau(lam, r)
    lines.append(f"tableau of {format_partition(lam)} (r={r}):")
    lines.extend(_indent(tab.render()))
    strips = []
    for size, tab in iter_strips(tab):
        strips.append(size)
        lines.append(f"|-> {size}")
        lines.extend(_indent(tab.render()))
    lines.append(f"strips: {' '.join(map(str, strips))}")
    lines.append(f"result: {format_partition(forward_map(lam, r))}")


def _trace_inverse(mu: Sequence[int], r: int, lines: list[str]) -> None:
    seqs = []
    for g, group in enumerate(split_groups(mu, r), start=1):
        lines.append(f"group {g}: {format_partition(group)}")
        lines.append(f"  conjugate: {format_partition(conjugate(group))}")
        seq = group_sequence(group, r)
        seqs.append(seq)
        lines.append(f"  sequence: {' '.join(map(str, seq))}")
    found = _fold_solutions(seqs, r)
    for splits, _ in found:
        lines.append(f"valid fold, column cells per hook: "
                     f"{' '.join(map(str, splits))}")
    tab = fold_into_tableau(seqs, r)
    lines.append("tableau:")
    lines.extend(_indent(tab.render()))
    lines.append(f"result: {format_partition(tab.row_sums())}")


def summarize(reports: Sequence[VerificationReport]) -> Counter:
    tally: Counter = Counter()
    for rep in reports:
        for rec in rep.records:
            tally["match" if rec.match else "mismatch"] += 1
    return tally

"""Command-line entry point.

Exit codes: 0 when every requested check matches, 1 on any mismatch,
2 on usage or input errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from periodic_partitions import harness
from periodic_partitions.bijection import forward_map, inverse_map
from periodic_partitions.core import (
    MAX_ENUMERATION_N,
    PartitionError,
    format_partition,
    parse_partition,
)
from periodic_partitions.families import (
    Kind,
    PeriodPattern,
    Side,
    Variant,
    all_patterns,
    enumerate_family,
    generate_rp_pattern,
    parse_selector,
)

EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _check_n(n: int, name: str = "n") -> None:
    if n < 0:
        _fail(f"{name} must be nonnegative")
    if n > MAX_ENUMERATION_N:
        _fail(f"{name}={n} exceeds the enumeration limit of {MAX_ENUMERATION_N}")


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Enumerate partition families, verify their counting identities and
    trace the hook-stripping bijection."""


@main.command("enumerate")
@click.option("--n", "n", type=int, required=True)
@click.option("--family", required=True, help='e.g. "rp:r=6,s=1+3,variant=free"')
@click.option("--generator", is_flag=True,
              help="Build RP pattern members directly instead of filtering.")
def enumerate_cmd(n: int, family: str, generator: bool) -> None:
    """List the members of a family at size N, one per line."""
    _check_n(n)
    try:
        sel = parse_selector(family)
        if generator:
            if sel.kind is not Kind.PATTERN or sel.side is not Side.RP:
                _fail("--generator applies only to rp pattern families")
            members = generate_rp_pattern(n, sel.pattern, sel.variant)
        else:
            members = enumerate_family(n, sel)
    except PartitionError as exc:
        _fail(str(exc))
    for lam in members:
        click.echo(format_partition(lam))


@main.command()
@click.option("--family", required=True)
@click.option("--n-from", "n_from", type=int, default=0, show_default=True)
@click.option("--n-to", "n_to", type=int, required=True)
def count(family: str, n_from: int, n_to: int) -> None:
    """Family sizes for each n in [N_FROM, N_TO] as CSV."""
    _check_n(n_from, "n-from")
    _check_n(n_to, "n-to")
    try:
        sel = parse_selector(family)
    except PartitionError as exc:
        _fail(str(exc))
    click.echo("n,count")
    for n in range(n_from, n_to + 1):
        click.echo(f"{n},{len(enumerate_family(n, sel))}")


def _patterns(r: int | None, s: str | None) -> list[PeriodPattern]:
    if s is not None:
        if r is None:
            _fail("--s needs --r")
        try:
            return [PeriodPattern(r, tuple(int(x) for x in s.split("+")))]
        except ValueError:
            _fail(f"cannot parse --s {s!r}")
    rs = [r] if r is not None else list(harness.CAMPAIGN_R)
    return [p for rr in rs for p in all_patterns(rr)]


@main.command()
@click.option("--theorem", type=click.Choice(["1", "2", "3", "4", "bijection", "all"]),
              default="all", show_default=True)
@click.option("--r", "r", type=int, default=None,
              help="Modulus; omitted means sweep r = 2..5.")
@click.option("--j", "j", type=int, default=None,
              help="Residue for theorem 2; omitted means every j.")
@click.option("--s", "s", default=None, help="Cut points joined by '+', e.g. 1+3.")
@click.option("--variant", type=click.Choice([v.value for v in Variant]), default=None,
              help="Omitted means all three variants.")
@click.option("--n-max", "n_max", type=int, default=harness.DEFAULT_N_MAX,
              show_default=True)
@click.option("--brute-max", "brute_max", type=int, default=harness.DEFAULT_BRUTE_MAX,
              show_default=True, help="Largest n for the brute-force inverse check.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def verify(theorem, r, j, s, variant, n_max, brute_max, fmt, out) -> None:
    """Run a verification campaign and emit a CSV or JSON report."""
    _check_n(n_max, "n-max")
    if r is not None and r < 2:
        _fail("--r must be >= 2")
    variants = [Variant(variant)] if variant else list(Variant)
    rs = [r] if r is not None else list(harness.CAMPAIGN_R)
    reports: list[harness.VerificationReport] = []
    try:
        if theorem == "all":
            reports = harness.campaign(n_max, rs, brute_max)
        elif theorem == "1":
            reports = [harness.verify_theorem1(n_max)]
        elif theorem == "2":
            for rr in rs:
                js = [j] if j is not None else range(1, rr)
                reports.extend(harness.verify_theorem2(rr, jj, n_max) for jj in js)
        elif theorem == "4":
            reports = [harness.verify_theorem4(rr, n_max) for rr in rs]
        else:
            for pattern in _patterns(r, s):
                for v in variants:
                    if theorem == "3":
                        reports.append(harness.verify_theorem3(pattern, v, n_max))
                    else:
                        reports.append(
                            harness.verify_bijection(pattern, v, n_max, brute_max))
    except PartitionError as exc:
        _fail(str(exc))

    text = harness.render_csv(reports) if fmt == "csv" else harness.render_json(reports)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)
    tally = harness.summarize(reports)
    click.echo(f"{tally['match']} matched, {tally['mismatch']} mismatched "
               f"across {len(reports)} reports", err=True)
    if tally["mismatch"]:
        sys.exit(EXIT_MISMATCH)


@main.command("map")
@click.option("--direction", type=click.Choice(["forward", "inverse"]), required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--partition", "text", required=True, help='Comma-separated parts.')
@click.option("--trace", is_flag=True, help="Print every intermediate tableau.")
def map_cmd(direction: str, r: int, text: str, trace: bool) -> None:
    """Apply the forward or inverse map to one partition."""
    try:
        lam = parse_partition(text)
        if trace:
            for line in harness.trace_map(lam, r, direction):
                click.echo(line)
            return
        fn = forward_map if direction == "forward" else inverse_map
        click.echo(format_partition(fn(lam, r)))
    except harness.TraceError as exc:
        for line in exc.lines:
            click.echo(line)
        _fail(str(exc))
    except PartitionError as exc:
        _fail(str(exc))


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands: verify, search, sporadic, jacobsthal, eliminate, bounds.
Formats: human (default), json-lines, csv. Exit codes: 0 success (holds,
nothing unexplained, all eliminated), 1 violated or not all eliminated,
2 usage, 3 unexplained records found, 4 I/O or resource cap, 5
checkpoint mismatch.
"""

from __future__ import annotations

import csv
import functools
import json
import os
import sys

import click

from .elimination import bound_chain, d_max_from, eliminate_all, odd_case_bound
from .errors import (
    CheckpointMismatch,
    InvalidTriple,
    RangeError,
    ResourceLimit,
)
from .jacobsthal import jacobsthal_g, primorial
from .runner import DEFAULT_BLOCK, RunConfig, TAG_ORDER, run_search
from .verifier import Triple, classify, holds, literal_families, normalize

RECORD_FIELDS = (
    "n",
    "s",
    "t",
    "normalized_t",
    "verdict",
    "witness_p",
    "tags",
    "literal_family_match",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "|".join(str(v) for v in value)
    return str(value)


class _Writer:
    """Emit rows in one format to one stream."""

    def __init__(self, fmt, stream, fieldnames, human_fn):
        self.fmt = fmt
        self.stream = stream
        self.fieldnames = fieldnames
        self.human_fn = human_fn
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(fieldnames)

    def row(self, data: dict) -> None:
        if self.fmt == "json-lines":
            self.stream.write(json.dumps(data, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([_cell(data[k]) for k in self.fieldnames])
        else:
            self.stream.write(self.human_fn(data) + "\n")


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (InvalidTriple, RangeError) as exc:
            raise click.UsageError(str(exc)) from None
        except CheckpointMismatch as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(5)
        except (ResourceLimit, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)

    return wrapper


def _fmt_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["human", "json-lines", "csv"]),
        default="human",
        show_default=True,
        help="Output format.",
    )(fn)


def _out_option(fn):
    return click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="Write the report to a file instead of stdout.",
    )(fn)


@click.group()
def main():
    """Check the residue window n/2 < ps mod n + pt mod n < 3n/2."""


def _human_record(row: dict) -> str:
    tags = ",".join(row["tags"]) or "none"
    if row["verdict"] == "holds":
        return f"n={row['n']} s={row['s']} t={row['t']}: holds; tags={tags}"
    return (
        f"n={row['n']} s={row['s']} t={row['t']}: violated by p={row['witness_p']}"
        f" (normalized t'={row['normalized_t']})"
    )


@main.command()
@click.argument("n", type=int)
@click.argument("s", type=int)
@click.argument("t", type=int)
@_fmt_option
@_out_option
@_guarded
def verify(n, s, t, fmt, out):
    """Decide the window condition for one triple N S T."""
    tr = Triple(n, s, t)
    verdict = holds(tr)
    row = {
        "n": n,
        "s": s,
        "t": t,
        "normalized_t": normalize(tr).t,
        "verdict": "holds" if verdict.holds else "violated",
        "witness_p": verdict.witness_p,
        "tags": [tag.value for tag in TAG_ORDER if tag in classify(tr)],
        "literal_family_match": [
            tag.value for tag in TAG_ORDER if tag in literal_families(tr)
        ],
    }
    stream = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        writer = _Writer(fmt, stream, RECORD_FIELDS, _human_record)
        writer.row(row)
        if fmt == "human" and not verdict.holds:
            stream.write(f"residue sum at p={verdict.witness_p}: {verdict.witness_sum}\n")
    finally:
        if out:
            stream.close()
    sys.exit(0 if verdict.holds else 1)


def _summary_payload(n_lo, n_hi, summary) -> dict:
    return {
        "n_lo": n_lo,
        "n_hi": n_hi,
        "total": summary.total,
        "counts": summary.counts,
    }


def _human_summary(n_lo, n_hi, summary) -> str:
    parts = " ".join(f"{k}={v}" for k, v in summary.counts.items())
    return f"searched n in [{n_lo}, {n_hi}]: {summary.total} records; {parts}"


def _do_search(n_lo, n_hi, include_half_t, jobs, block_size, checkpoint, fmt, out):
    if n_lo < 3 or n_hi < n_lo:
        raise click.UsageError(f"need 3 <= FROM <= TO, got {n_lo}..{n_hi}")
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise click.UsageError(f"--jobs must be positive, got {jobs}")
    if block_size < 1:
        raise click.UsageError(f"--block-size must be positive, got {block_size}")
    cfg = RunConfig(
        n_lo=n_lo,
        n_hi=n_hi,
        include_half_t=include_half_t,
        jobs=jobs,
        block_size=block_size,
        checkpoint_path=checkpoint,
    )
    stream = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        writer = _Writer(fmt, stream, RECORD_FIELDS, _human_record)
        summary = run_search(cfg, writer.row)
        if fmt == "json-lines":
            stream.write(
                json.dumps(
                    {"summary": _summary_payload(n_lo, n_hi, summary)},
                    separators=(",", ":"),
                )
                + "\n"
            )
        elif fmt == "csv":
            click.echo(_human_summary(n_lo, n_hi, summary), err=True)
        else:
            stream.write(_human_summary(n_lo, n_hi, summary) + "\n")
    finally:
        if out:
            stream.close()
    sys.exit(0 if summary.unexplained == 0 else 3)


_search_options = [
    click.option("--include-half-t", is_flag=True, help="Emit rows whose only tag is half_t."),
    click.option(
        "--jobs",
        type=int,
        default=None,
        envvar="LATTICE_GAP_JOBS",
        help="Worker processes; defaults to the available CPUs.",
    ),
    click.option("--block-size", type=int, default=DEFAULT_BLOCK, show_default=True),
    click.option(
        "--checkpoint",
        type=click.Path(dir_okay=False),
        default=None,
        help="Checkpoint file to write and resume from.",
    ),
]


def _with_search_options(fn):
    for opt in reversed(_search_options):
        fn = opt(fn)
    return fn


@main.command()
@click.argument("n_lo", metavar="FROM", type=int)
@click.argument("n_hi", metavar="TO", type=int)
@_with_search_options
@_fmt_option
@_out_option
@_guarded
def search(n_lo, n_hi, include_half_t, jobs, block_size, checkpoint, fmt, out):
    """Report every surviving triple with FROM <= n <= TO."""
    _do_search(n_lo, n_hi, include_half_t, jobs, block_size, checkpoint, fmt, out)


@main.command()
@_with_search_options
@_fmt_option
@_out_option
@_guarded
def sporadic(include_half_t, jobs, block_size, checkpoint, fmt, out):
    """Shorthand for `search 3 78`: the range holding the sporadic rows."""
    _do_search(3, 78, include_half_t, jobs, block_size, checkpoint, fmt, out)

JACOBSTHAL_FIELDS = ("n", "g", "gap_start", "radical_primes")


def _human_jacobsthal(row: dict) -> str:
    primes = ",".join(str(p) for p in row["radical_primes"]) or "none"
    return (
        f"g({row['n']}) = {row['g']} (gap starts at {row['gap_start']};"
        f" radical primes {primes})"
    )


@main.command()
@click.argument("n", type=int, required=False)
@click.option("--primorial", "primorial_k", type=int, default=None, help="Use the k-th primorial as n.")
@click.option("--table", is_flag=True, help="Print g for the primorials k = 3..8.")
@_fmt_option
@_out_option
@_guarded
def jacobsthal(n, primorial_k, table, fmt, out):
    """Largest gap between consecutive integers coprime to N."""
    picked = sum(x is not None and x is not False for x in (n, primorial_k, table or None))
    if picked != 1:
        raise click.UsageError("give exactly one of N, --primorial K, or --table")
    if table:
        ns = [primorial(k) for k in range(3, 9)]
    elif primorial_k is not None:
        ns = [primorial(primorial_k)]
    else:
        ns = [n]
    stream = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        writer = _Writer(fmt, stream, JACOBSTHAL_FIELDS, _human_jacobsthal)
        for value in ns:
            res = jacobsthal_g(value)
            writer.row(
                {
                    "n": res.n,
                    "g": res.g,
                    "gap_start": res.gap_start,
                    "radical_primes": sorted(res.radical_primes),
                }
            )
    finally:
        if out:
            stream.close()

ELIMINATE_FIELDS = (
    "d",
    "p_max",
    "N",
    "admissible_a",
    "forced_lower_bound",
    "eliminated",
)


def _human_eliminate(row: dict) -> str:
    flag = "eliminated" if row["eliminated"] else "NOT eliminated"
    return (
        f"d={row['d']}: p_max={row['p_max']} N={row['N']}"
        f" forced>={row['forced_lower_bound']} {flag}"
    )


@main.command()
@click.option("--d-max", "d_hi", type=int, required=True, help="Largest denominator to test.")
@click.option(
    "--formula",
    type=click.Choice(["paper", "strict"]),
    default="paper",
    show_default=True,
    help="p_max reading: as published, or the conservative twelve-fold smaller one.",
)
@_fmt_option
@_out_option
@_guarded
def eliminate(d_hi, formula, fmt, out):
    """Count forced primes per denominator d and flag the eliminated ones."""
    sweep = eliminate_all(d_hi, formula=formula)
    stream = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        writer = _Writer(fmt, stream, ELIMINATE_FIELDS, _human_eliminate)
        for rep in sweep.reports:
            row = {
                "d": rep.d,
                "p_max": rep.p_max,
                "N": rep.N,
                "admissible_a": list(rep.admissible_a),
                "forced_lower_bound": rep.forced_lower_bound,
                "eliminated": rep.eliminated,
            }
            if fmt == "json-lines":
                row["class_counts"] = {str(k): v for k, v in sorted(rep.class_counts.items())}
            writer.row(row)
        verdict = "all eliminated" if sweep.all_eliminated else "NOT all eliminated"
        if fmt == "human":
            stream.write(f"{verdict} (d up to {d_hi}, formula {formula})\n")
        elif fmt == "json-lines":
            stream.write(
                json.dumps(
                    {"summary": {"d_max": d_hi, "formula": formula, "all_eliminated": sweep.all_eliminated}},
                    separators=(",", ":"),
                )
                + "\n"
            )
        else:
            click.echo(f"{verdict} (d up to {d_hi}, formula {formula})", err=True)
    finally:
        if out:
            stream.close()
    sys.exit(0 if sweep.all_eliminated else 1)

BOUNDS_FIELDS = ("step", "omega_max", "g_bound", "source", "n_max")


def _human_bounds(row: dict) -> str:
    return (
        f"step {row['step']}: omega <= {row['omega_max']},"
        f" g <= {row['g_bound']} ({row['source']}), n < {row['n_max']}"
    )


@main.command()
@_fmt_option
@_out_option
@_guarded
def bounds(fmt, out):
    """Print the shrinking bound chain and the final constants."""
    chain = bound_chain()
    final = chain.final
    d_max = d_max_from(final.n_max)
    odd_bound = odd_case_bound()
    stream = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        writer = _Writer(fmt, stream, BOUNDS_FIELDS, _human_bounds)
        for i, step in enumerate(chain.steps, start=1):
            writer.row(
                {
                    "step": i,
                    "omega_max": step.omega_max,
                    "g_bound": step.g_bound,
                    "source": step.source,
                    "n_max": step.n_max,
                }
            )
        final_payload = {
            "omega_max": final.omega_max,
            "n_max": final.n_max,
            "d_max": d_max,
            "odd_case_bound": odd_bound,
        }
        if fmt == "json-lines":
            stream.write(json.dumps({"final": final_payload}, separators=(",", ":")) + "\n")
        elif fmt == "csv":
            click.echo(
                f"final: omega <= {final.omega_max}, n_max = {final.n_max},"
                f" d_max = {d_max}, odd_case_bound = {odd_bound}",
                err=True,
            )
        else:
            stream.write(
                f"final: omega <= {final.omega_max}, n_max = {final.n_max},"
                f" d_max = {d_max}, odd_case_bound = {odd_bound}\n"
            )
    finally:
        if out:
            stream.close()


if __name__ == "__main__":
    main()

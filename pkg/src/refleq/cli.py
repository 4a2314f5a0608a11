"""Command line front end.

Every subcommand validates its flags, delegates the actual computation to
the library modules, and prints a single JSON report on stdout:

    {"command": ..., "results": ..., "toolVersion": ..., "wallTimeMs": ...}

wallTimeMs is the only field that varies between identical runs.  CSV is
available for Betti tables only (--emit csv), in which case the raw table
is printed instead of the JSON wrapper.  Exit codes: 0 on success, 1 when
a requested verification does not hold, 2 on usage errors.  Diagnostics go
to stderr; stdout carries nothing but the payload.
"""

from __future__ import annotations

import csv
import io
import json
import time

import click

from . import __version__
from .dynkin import DynkinType, coxeter_number, info_dict
from .field import format_ratfunc
from .kclass import w0_summary_dict
from .field import U
from .polarization import build_instance, choice_to_json, solve, solve_table
from .relations import check_reflection, run_suite
from .rkmat import KINDS, k_matrix
from .tableaux import betti_report, flag_fixed_points, so_component_report
from .acceptance import run_acceptance

_SIGN_FLAG = {"plus": "+", "minus": "-"}


def _start(ctx):
    ctx.ensure_object(dict)
    ctx.obj.setdefault("start", time.monotonic())


def _echo_report(ctx, payload, exit_code=0):
    report = {
        "command": {
            "path": ctx.command_path,
            "params": {k: v for k, v in sorted(ctx.params.items())},
        },
        "results": payload,
        "toolVersion": __version__,
        "wallTimeMs": int((time.monotonic() - ctx.obj["start"]) * 1000),
    }
    click.echo(json.dumps(report, indent=2, sort_keys=True))
    ctx.exit(exit_code)


def _usage(message):
    raise click.UsageError(message)


@click.group(name="refleq")
@click.version_option(version=__version__, prog_name="refleq")
@click.pass_context
def cli(ctx):
    """Exact R-matrix, K-matrix and fixed-point computations."""
    _start(ctx)


# ---------------------------------------------------------------------------
# table builders (presentation only; all content comes from the modules)


def emit_table(kind, params):
    """Build one of the exportable tables.

    Returns (payload, csv_text): csv_text is None unless the table has a
    CSV form (only the Betti table does).
    """
    if kind == "betti":
        family, l_max, w1_max = params["kind"], params["l"], params["w1"]
        rows = []
        for l in range(2, l_max + 1):
            for w1 in range(0, w1_max + 1):
                rep = betti_report(family, l, w1)
                rows.append(
                    {"l": l, "w1": w1, "dim": rep["dimension"], "poincare": rep["poincare"]}
                )
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["l", "w1", "dim", "poincare"])
        for r in rows:
            writer.writerow([r["l"], r["w1"], r["dim"], r["poincare"]])
        return rows, buf.getvalue()
    if kind == "kmatrix":
        m = k_matrix(params["kind"], params["l"], U)
        labels = list(m.row_labels)
        entries = [
            {"row": labels[i], "col": labels[j], "value": format_ratfunc(v)}
            for (i, j), v in sorted(m.entries.items())
        ]
        return {"labels": labels, "entries": entries}, None
    if kind == "polarization":
        return solve_table(l_values=tuple(range(2, params["l"] + 1))), None
    raise ValueError(f"unknown table kind {kind!r}")


# ---------------------------------------------------------------------------
# subcommands


@cli.command()
@click.option("--type", "type_name", required=True, help="ADE type, e.g. A3 or D4")
@click.pass_context
def dynkin(ctx, type_name):
    """Cartan data, longest word and diagram involution for an ADE type."""
    _start(ctx)
    try:
        t = DynkinType.parse(type_name)
    except ValueError as e:
        _usage(f"--type: {e}")
    _echo_report(ctx, info_dict(t))


@cli.command()
@click.option("--type", "type_name", required=True, help="ADE type, e.g. A3 or D4")
@click.pass_context
def kclass(ctx, type_name):
    """Longest-word reflection transform on framing K-classes."""
    _start(ctx)
    try:
        t = DynkinType.parse(type_name)
        transform = w0_summary_dict(t)
    except ValueError as e:
        _usage(f"--type: {e}")
    payload = {
        "type": type_name,
        "coxeterNumber": coxeter_number(t),
        "transform": transform,
    }
    _echo_report(ctx, payload)


@cli.group()
@click.pass_context
def tableaux(ctx):
    """Fixed-point tableau enumeration and Betti data."""
    _start(ctx)


@tableaux.command()
@click.option("--kind", type=click.Choice(["sp", "so"]), required=True)
@click.option("--l", type=int, required=True)
@click.option("--w1", type=int, required=True)
@click.option("--emit", type=click.Choice(["json", "csv"]), default="json")
@click.pass_context
def betti(ctx, kind, l, w1, emit):
    """Fixed-point count, Poincare polynomial and tangent dimension."""
    _start(ctx)
    try:
        if emit == "csv":
            _, text = emit_table("betti", {"kind": kind, "l": l, "w1": w1})
            click.echo(text, nl=False)
            ctx.exit(0)
        payload = betti_report(kind, l, w1)
        if kind == "so":
            rep = so_component_report(l, w1)
            payload["zeroChargeCount"] = rep["zeroChargeCount"]
            if "parityComponents" in rep:
                payload["components"] = len(rep["parityComponents"])
                payload["sizes"] = rep["parityComponents"]
    except ValueError as e:
        _usage(str(e))
    _echo_report(ctx, payload)


@tableaux.command()
@click.option("--sign", type=click.Choice(["plus", "minus"]), required=True)
@click.option("--l", type=int, required=True)
@click.option("--w1", "w", type=int, required=True, help="total framing dimension")
@click.pass_context
def flags(ctx, sign, l, w):
    """Flag-type fixed points for the given twist sign."""
    _start(ctx)
    try:
        points, diagnostics = flag_fixed_points(sign, l, w)
    except ValueError as e:
        _usage(str(e))
    for note in diagnostics:
        click.echo(note, err=True)
    payload = {
        "count": len(points),
        "points": [p.to_json() for p in points],
        "diagnostics": diagnostics,
    }
    _echo_report(ctx, payload)


@cli.group()
@click.pass_context
def rkmat(ctx):
    """Concrete R- and K-matrices in canonical string form."""
    _start(ctx)


@rkmat.command()
@click.option("--kind", type=click.Choice(list(KINDS)), required=True)
@click.option("--l", type=int, required=True)
@click.pass_context
def kmatrix(ctx, kind, l):
    """Boundary matrix entries for one kind and size."""
    _start(ctx)
    try:
        payload, _ = emit_table("kmatrix", {"kind": kind, "l": l})
    except ValueError as e:
        _usage(str(e))
    _echo_report(ctx, payload)


@cli.command()
@click.option("--scenario", type=click.Choice(list(KINDS)), default=None)
@click.option("--suite", "suite_name", default=None,
              help="one of: all, ybe, unitarity, reflection, exchange, boundary")
@click.option("--l", type=int, default=None)
@click.option("--mode", type=click.Choice(["symbolic", "multipoint"]), default="symbolic")
@click.option("--jobs", type=int, default=1)
@click.pass_context
def verify(ctx, scenario, suite_name, l, mode, jobs):
    """Check one reflection scenario or run a verification suite."""
    _start(ctx)
    if (scenario is None) == (suite_name is None):
        _usage("pass exactly one of --scenario or --suite")
    if suite_name is not None:
        try:
            payload = run_suite(suite=suite_name, l=l, jobs=jobs)
        except ValueError as e:
            _usage(f"--suite: {e}")
        if not payload["ok"]:
            click.echo("suite verdicts deviate from pinned expectations", err=True)
        _echo_report(ctx, payload, exit_code=0 if payload["ok"] else 1)
    if l is None:
        _usage("--scenario requires --l")
    try:
        payload = check_reflection(scenario, l, mode=mode)
    except ValueError as e:
        _usage(str(e))
    if not payload["holds"]:
        click.echo(f"reflection fails for {scenario} at l={l}", err=True)
    _echo_report(ctx, payload, exit_code=0 if payload["holds"] else 1)


@cli.group()
@click.pass_context
def polarization(ctx):
    """Wall-consistency instances for polarization choices."""
    _start(ctx)


@polarization.command("solve")
@click.option("--sign", type=click.Choice(["plus", "minus"]), required=True)
@click.option("--l", type=int, required=True)
@click.pass_context
def polarization_solve(ctx, sign, l):
    """Decide the instance and print a witness or a refutation chain."""
    _start(ctx)
    try:
        inst = build_instance(_SIGN_FLAG[sign], l)
        res = solve(inst)
    except ValueError as e:
        _usage(str(e))
    payload = {
        "sign": sign,
        "l": l,
        "verdict": res["verdict"],
        "method": res["method"],
        "witness": choice_to_json(res["witness"]) if res["witness"] else None,
        "certificate": res["certificate"],
    }
    _echo_report(ctx, payload)


@polarization.command("summary")
@click.option("--l", type=int, default=6, help="largest size to include")
@click.pass_context
def polarization_summary(ctx, l):
    """Verdict table over both signs up to the given size."""
    _start(ctx)
    try:
        payload, _ = emit_table("polarization", {"l": l})
    except ValueError as e:
        _usage(str(e))
    _echo_report(ctx, payload)


@cli.command("suite")
@click.argument("which", type=click.Choice(["acceptance"]))
@click.pass_context
def suite(ctx, which):
    """Run a named battery; 'acceptance' runs the full sign-off checks."""
    _start(ctx)
    payload = run_acceptance()
    for r in payload["results"]:
        mark = "pass" if r["ok"] else "FAIL"
        click.echo(f"[{mark}] {r['criterion']:2d} {r['title']}", err=True)
    _echo_report(ctx, payload, exit_code=0 if payload["ok"] else 1)


def main():
    cli(prog_name="refleq")


if __name__ == "__main__":
    main()

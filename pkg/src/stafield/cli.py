"""Command-line harness: ``verify``, ``generate`` and ``transcribe``.

Exit codes: 0 when everything passes, 1 when a check or residual fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import click

from . import __version__
from . import algebra as ga
from . import generators as gen
from .fields import MultivectorField, dirac, random_field
from .hertz import assemble_psi, hertz_residual
from .maxwell import GMESystem, gme_residual
from .scalars import parse_rational
from .serialize import DocumentError, dumps, emit_bundle, emit_field, parse_document
from .spinor import (GradeError, ParityError, bosonize, dh_residual, project_ideal,
                     standard_idempotent)
from .suites import SUITE_NAMES, report_failed, run_suite

GENERATE_KINDS = ("rest-solution", "null-plane-wave", "superpotential", "hertz-rest", "random-field")


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _usage(message: str):
    raise click.UsageError(message)


def _rational(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _wavevector(ctx, param, value):
    if value is None:
        return None
    parts = value.split(",")
    if len(parts) != 4:
        raise click.BadParameter("expected four comma-separated rationals a,b,c,d")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


@click.group()
@click.version_option(__version__, prog_name="stafield")
def main():
    """Exact verification of spacetime-algebra field identities."""


@main.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--count", type=click.IntRange(min=1), default=None, help="Cases per check (default: per-check size).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def verify(suite, seed, count, out):
    """Run a verification suite and emit its JSON report."""
    report = run_suite(suite, seed=seed, count=count)
    _write(dumps(report), out)
    s = report["summary"]
    click.echo(f"{suite}: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip", err=True)
    sys.exit(1 if report_failed(report) else 0)


@main.command()
@click.argument("kind", type=click.Choice(GENERATE_KINDS))
@click.option("--mass", callback=_rational, default=None, help="Rational mass p/q (default 1).")
@click.option("--k", "k", callback=_wavevector, default=None, help="Wavevector a,b,c,d (default 1,0,0,1).")
@click.option("--seed", type=int, default=1, show_default=True, help="Seed for random kinds.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def generate(kind, mass, k, seed, out):
    """Emit an exact field (or bundle of fields) of the requested family."""
    m = 1 if mass is None else mass
    try:
        if kind == "rest-solution":
            psi = gen.rest_solution(m)
            text = emit_bundle({"psi": psi}, kind=kind, mass=str(m), check={"dh_residual_zero": not dh_residual(psi, m)})
        elif kind == "null-plane-wave":
            psi = gen.null_plane_wave(k or (1, 0, 0, 1))
            text = emit_bundle({"psi": psi}, kind=kind, check={"dirac_zero": not dirac(psi)})
        elif kind == "superpotential":
            sp, sys_ = gen.superpotential_system(random.Random(f"{seed}:superpotential"), max_degree=2, max_phases=2)
            fields = {"A": sp.A, "B": sp.B, "F": sys_.F, "Je": sys_.Je, "Jm": sys_.Jm}
            text = emit_bundle(fields, kind=kind, seed=seed, check={"gme_residual_zero": not gme_residual(sys_)})
        elif kind == "hertz-rest":
            h = gen.hertz_rest(m)
            fields = {"Pi": h.Pi, "G": h.G, "P": h.P, "psi": assemble_psi(h).psi}
            text = emit_bundle(fields, kind=kind, mass=str(m), check={"hertz_residual_zero": not hertz_residual(h)})
        else:
            text = emit_field(random_field(random.Random(f"{seed}:random-field")))
    except gen.ParameterError as exc:
        _usage(str(exc))
    _write(text, out)


def _load(path: str) -> dict[str, MultivectorField]:
    try:
        return parse_document(Path(path).read_text())
    except DocumentError as exc:
        raise click.BadParameter(str(exc), param_hint="--in") from None


def _pick(fields: dict, *names, required=True):
    for n in names:
        if n in fields:
            return fields[n]
    if required:
        _usage(f"input document needs a field named {' or '.join(names)}")
    return MultivectorField.zero()


@main.command()
@click.argument("direction", type=click.Choice(("bosonize", "fermionize")))
@click.option("--in", "in_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--idempotent", type=click.Choice(("standard",)), default="standard", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def transcribe(direction, in_path, idempotent, out):
    """Translate between an even field and a generalized Maxwell system.

    bosonize reads an even field (a single document, or a bundle with ``psi``)
    and emits F, Je, Jm and the Maxwell residual. fermionize reads a bundle
    with F and optional Je, Jm and emits Psi = F f and its residual.
    """
    fields = _load(in_path)
    try:
        if direction == "bosonize":
            psi = _pick(fields, "psi", "field")
            f, je, jm = bosonize(psi)
            residual = gme_residual(GMESystem(f, je, jm))
            result = {"F": f, "Je": je, "Jm": jm, "residual": residual}
        else:
            sys_ = GMESystem(_pick(fields, "F", "field"), _pick(fields, "Je", required=False),
                             _pick(fields, "Jm", required=False))
            spec = standard_idempotent()
            psi_ideal = project_ideal(sys_.F, spec).value
            je_f = sys_.Je.complexify() * spec.f
            jm_f = sys_.Jm.complexify() * spec.f
            residual = dirac(psi_ideal) - je_f - ga.gamma5(ga.COMPLEX) * jm_f
            result = {"Psi": psi_ideal, "residual": residual}
    except (GradeError, ParityError) as exc:
        _usage(str(exc))
    status = "fail" if residual else "pass"
    _write(emit_bundle(result, direction=direction, idempotent=idempotent, status=status), out)
    sys.exit(1 if residual else 0)


if __name__ == "__main__":
    main()

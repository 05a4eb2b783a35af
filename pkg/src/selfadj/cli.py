"""Command-line interface: verify, family, eigen, gram, classify, catalog.

Exit codes: 0 success/pass, 1 condition failure, 2 unsupported or invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Optional

import click

from . import families, spectra
from .algebra import DiffOperator, count_real_roots, rational_roots, to_rational
from .errors import InconsistentSystem, SelfAdjError, Unsupported
from .selfadjoint import verify as run_verify
from .serialize import OperatorFormatError, interval_from_json, load_operator, operator_to_json
from .weights import NEG_INF, POS_INF, Interval, admissibility, build_weight, classify_root, format_endpoint

EXIT_PASS, EXIT_FAIL, EXIT_UNSUPPORTED = 0, 1, 2

FORMAT = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
MAX_DEGREE = click.option("--max-degree", "max_degree", type=click.IntRange(min=0), default=8, show_default=True)
LO = click.option("--lo", default=None, help="Lower endpoint: rational or -inf.")
HI = click.option("--hi", default=None, help="Upper endpoint: rational or +inf.")


class Abort(Exception):
    def __init__(self, message: str, code: int = EXIT_UNSUPPORTED):
        super().__init__(message)
        self.code = code


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _read_operator(path: str) -> tuple[DiffOperator, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise Abort(f"cannot read {path}: {exc.strerror}") from None
    try:
        return load_operator(text)
    except OperatorFormatError as exc:
        raise Abort(f"{path}: {exc}") from None


def _resolve_interval(data: dict, lo: Optional[str], hi: Optional[str]) -> Interval:
    base = interval_from_json(data)
    if base is None and isinstance(data.get("family"), str):
        try:
            base = families.get_family(data["family"]).interval
        except SelfAdjError:
            base = None
    if lo is None and hi is None and base is None:
        raise Abort("no interval: pass --lo/--hi or include \"interval\" in the operator file")
    lo_v = lo if lo is not None else (format_endpoint(base.lo) if base else "-inf")
    hi_v = hi if hi is not None else (format_endpoint(base.hi) if base else "+inf")
    try:
        return Interval.of(lo_v, hi_v)
    except (ValueError, ZeroDivisionError) as exc:
        raise Abort(f"interval: {exc}") from None


def _run(fn):
    """Map package errors onto the exit-code contract."""
    try:
        code = fn()
    except Abort as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.code)
    except InconsistentSystem as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    except SelfAdjError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_UNSUPPORTED)
    sys.exit(code or EXIT_PASS)


@click.group()
def main() -> None:
    """Exact verification and spectra of even-order self-adjoint differential operators."""


@main.command()
@click.argument("operator_file", type=click.Path(dir_okay=False))
@LO
@HI
@FORMAT
def verify(operator_file: str, lo, hi, fmt: str) -> None:
    """Check the determining equations, boundary conditions and structural conditions."""

    def body():
        op, data = _read_operator(operator_file)
        interval = _resolve_interval(data, lo, hi)
        report = run_verify(op, interval)
        if fmt == "json":
            out = report.to_json()
            out["interval"] = interval.to_json()
            out["failures"] = report.failures()
            _emit_json(out)
        else:
            rows = [["determining", e.id, e.label, "", e.passed] for e in report.determining]
            for side, rs in report.boundary.items():
                rows += [["boundary", f"{side}#{r.index}", r.label, r.verdict.value, r.passed] for r in rs]
            if report.admissible is not None:
                rows += [["admissible", e.side, format_endpoint(e.point), e.reason, e.admissible]
                         for e in report.admissible.endpoints]
            rows += [["structural", c.name, c.detail, c.status, c.passed] for c in report.structural]
            rows += [["congruence", c.name, c.detail, c.status, c.passed] for c in report.congruences]
            if report.unsupported:
                rows.append(["unsupported", "", report.unsupported, "", False])
            _emit_csv(["section", "id", "item", "verdict", "pass"], rows)
        if report.unsupported:
            return EXIT_UNSUPPORTED
        return EXIT_PASS if report.overall else EXIT_FAIL

    _run(body)


def _parse_params(args: list[str]) -> dict[str, Fraction]:
    params: dict[str, Fraction] = {}
    i = 0
    while i < len(args):
        tok = args[i]
        if not tok.startswith("--") or len(tok) < 3:
            raise Abort(f"unexpected argument {tok!r}; parameters look like --a 4")
        name = tok[2:]
        if "=" in name:
            name, value = name.split("=", 1)
            i += 1
        elif i + 1 < len(args):
            value = args[i + 1]
            i += 2
        else:
            raise Abort(f"parameter --{name} needs a value")
        try:
            params[name] = to_rational(value)
        except (ValueError, ZeroDivisionError, TypeError):
            raise Abort(f"parameter --{name}: {value!r} is not a rational") from None
    return params


@main.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@click.argument("family_id")
@click.option("--reading", default=None, help="Alternative reading of an entry with a misprinted display.")
@click.option("--seed", type=int, default=None, help="Draw random valid parameters with this seed.")
@click.pass_context
def family(ctx: click.Context, family_id: str, reading, seed) -> None:
    """Instantiate a catalog family, e.g. `family L4 --a 4 --b -2 --A -5`."""

    def body():
        spec = families.get_family(family_id)
        params = _parse_params(list(ctx.args))
        if seed is not None:
            drawn = families.draw_params(family_id, random.Random(seed))
            drawn.update(params)
            params = drawn
        inst = families.instantiate(family_id, params, variant=reading)
        out = operator_to_json(
            inst.operator,
            family=spec.id,
            params={k: str(v) for k, v in inst.params.items()},
            interval=spec.interval.to_json(),
            weight=inst.weight.to_json(),
        )
        if reading or spec.default_variant:
            out["reading"] = reading or spec.default_variant
        if inst.eigen is not None:
            out["lambdas"] = [str(inst.eigen(n)) for n in range(9)]
        _emit_json(out)
        return EXIT_PASS

    _run(body)


def _eigen_payload(op: DiffOperator, data: dict, N: int, lo, hi) -> tuple[dict, Optional[spectra.MomentTable]]:
    spec, basis = spectra.eigenbasis(op, N)
    table = None
    warning = None
    try:
        interval = _resolve_interval(data, lo, hi)
        weight = build_weight(op, interval)
        table = spectra.moments(weight, 2 * N)
        basis = spectra.orthogonalize_degenerate(basis, spec, table)
    except Abort as exc:
        warning = str(exc)
    except Unsupported as exc:
        warning = f"not orthogonalized: {exc}"
    out = spectra.spectrum_json(spec, basis)
    if warning:
        out["warning"] = warning
    return out, table


@main.command()
@click.argument("operator_file", type=click.Path(dir_okay=False))
@MAX_DEGREE
@LO
@HI
@FORMAT
def eigen(operator_file: str, max_degree: int, lo, hi, fmt: str) -> None:
    """Eigenvalues and monic eigenpolynomials up to the given degree."""

    def body():
        op, data = _read_operator(operator_file)
        out, _ = _eigen_payload(op, data, max_degree, lo, hi)
        if fmt == "json":
            _emit_json(out)
        else:
            group_of = {d: gi for gi, g in enumerate(out["groups"]) for d in g}
            rows = [[d, lam, group_of[d], " ".join(out["polys"][d])] for d, lam in enumerate(out["lambdas"])]
            _emit_csv(["degree", "lambda", "group", "coefficients"], rows)
        return EXIT_PASS

    _run(body)


@main.command()
@click.argument("operator_file", type=click.Path(dir_okay=False))
@MAX_DEGREE
@LO
@HI
@FORMAT
def gram(operator_file: str, max_degree: int, lo, hi, fmt: str) -> None:
    """Exact Gram matrix of the (orthogonalized) eigenbasis, normalized by the zeroth moment."""

    def body():
        op, data = _read_operator(operator_file)
        interval = _resolve_interval(data, lo, hi)
        weight = build_weight(op, interval)
        table = spectra.moments(weight, 2 * max_degree)
        if len(table.basis) != 1:
            raise Abort(f"{table.weight_class} moments are not rational multiples of mu_0")
        spec, basis = spectra.eigenbasis(op, max_degree)
        basis = spectra.orthogonalize_degenerate(basis, spec, table)
        G = [[str(v) for v in row] for row in spectra.gram(basis, table)]
        if fmt == "json":
            _emit_json({"weightClass": table.weight_class, "gram": G})
        else:
            _emit_csv([f"p{j}" for j in range(len(G))], G)
        return EXIT_PASS

    _run(body)


def _candidate_intervals(op: DiffOperator) -> tuple[list[Interval], bool]:
    roots, _ = rational_roots(op.leading)
    pts = sorted(r for r, _ in roots)
    irrational = op.leading.degree >= 1 and count_real_roots(op.leading) > len(pts)
    ends = [NEG_INF] + pts + [POS_INF]
    return [Interval(ends[i], ends[i + 1]) for i in range(len(ends) - 1)], irrational


@main.command()
@click.argument("operator_file", type=click.Path(dir_okay=False))
@FORMAT
def classify(operator_file: str, fmt: str) -> None:
    """Classify the rational roots of a_n and list candidate intervals."""

    def body():
        op, _ = _read_operator(operator_file)
        roots, _ = rational_roots(op.leading)
        classes = [classify_root(op, r) for r, _ in roots]
        intervals, irrational = _candidate_intervals(op)
        cands = []
        for iv in intervals:
            entry = {"interval": iv.to_json()}
            try:
                rep = admissibility(build_weight(op, iv))
                entry["admissible"] = rep.admissible
                entry["detail"] = rep.to_json()
            except Unsupported as exc:
                entry["admissible"] = None
                entry["detail"] = str(exc)
            cands.append(entry)
        if fmt == "json":
            out = {"roots": [c.to_json() for c in classes], "intervals": cands}
            if irrational:
                out["warning"] = "a_n has irrational real roots; intervals only split at rational roots"
            _emit_json(out)
        else:
            rows = [[str(c.root), c.alpha, c.beta, c.kind.value, str(c.phi), c.integrable_left,
                     c.integrable_right] for c in classes]
            _emit_csv(["root", "alpha", "beta", "kind", "phi", "integrableLeft", "integrableRight"], rows)
        return EXIT_PASS

    _run(body)


@main.command()
@FORMAT
@click.option("--seed", type=int, default=None, help="Include seeded parameter draws for each entry.")
def catalog(fmt: str, seed) -> None:
    """List every catalog family."""

    def body():
        entries = families.catalog_json()
        if seed is not None:
            for e in entries:
                if e["params"]:
                    draws = families.seeded_draws(e["id"], seed)
                    e["draws"] = [{k: str(v) for k, v in d.items()} for d in draws]
        if fmt == "json":
            _emit_json(entries)
        else:
            rows = [[e["id"], e["order"], " ".join(e["params"]), "; ".join(e["constraints"]),
                     " ".join(e["interval"]), e["status"], e["group"]] for e in entries]
            _emit_csv(["id", "order", "params", "constraints", "interval", "status", "group"], rows)
        return EXIT_PASS

    _run(body)


if __name__ == "__main__":  # pragma: no cover
    main()

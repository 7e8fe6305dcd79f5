"""Command line entry point: ``affschur compose|verify|drinfeld|dims|reps``.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import re
import sys
import time
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Callable, Iterable

import click

from . import aschur, relations, reps, yangian
from .aschur import ASElement, Morphism, format_morphism, parse_morphism
from .combinat import CosetMatrix, enumerate_compositions
from .polyring import USeries

USAGE_ERROR = 2
VERIFY_FAILED = 1


# ---------------------------------------------------------------- serialization


def format_composition(parts) -> str:
    return ",".join(map(str, parts))


def parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def format_element(z: ASElement) -> list[str]:
    """One line ``[lambda|mu] morphism`` per nonzero block, sorted."""
    return [
        f"[{format_composition(lam)}|{format_composition(mu)}] {format_morphism(m)}"
        for (lam, mu), m in sorted(z.blocks.items())
    ]


_BLOCK = re.compile(r"^\[([\d,]*)\|([\d,]*)\]\s+(.*)$")


def parse_element(lines: Iterable[str], n: int, r: int) -> ASElement:
    blocks = {}
    for line in lines:
        match = _BLOCK.match(line.strip())
        if not match:
            raise ValueError(f"malformed block line {line!r}")
        lam, mu = parse_composition(match.group(1)), parse_composition(match.group(2))
        blocks[(lam, mu)] = parse_morphism(match.group(3), mu, lam)
    return ASElement(n, r, blocks)


def format_series(series: USeries, n: int, r: int) -> str:
    """Header ``series n=.. r=.. order=..`` then ``u^-d [lambda|mu] morphism`` lines."""
    lines = [f"series n={n} r={r} order={series.order}"]
    for d, z in enumerate(series.coeffs):
        lines.extend(f"u^-{d} {line}" for line in format_element(z))
    return "\n".join(lines)


def parse_series(text: str) -> USeries:
    lines = [line for line in text.strip().splitlines() if line.strip()]
    header = re.fullmatch(r"series n=(\d+) r=(\d+) order=(\d+)", lines[0].strip())
    if not header:
        raise ValueError("missing series header")
    n, r, N = map(int, header.groups())
    grouped: dict[int, list[str]] = {d: [] for d in range(N + 1)}
    for line in lines[1:]:
        match = re.match(r"u\^-(\d+)\s+(.*)$", line.strip())
        if not match or int(match.group(1)) > N:
            raise ValueError(f"malformed series line {line!r}")
        grouped[int(match.group(1))].append(match.group(2))
    return yangian._as_series([parse_element(grouped[d], n, r) for d in range(N + 1)])


# ---------------------------------------------------------------- morphism specs


_GENERATOR = re.compile(r"^(merge|split|cross|identity|spot_up|spot_down)\(([\d,\s]*)\)$")


def parse_spec(text: str) -> Morphism:
    """A generator such as ``merge(1,1)`` or a serialized sum of ``xi(...)`` terms."""
    text = text.strip()
    match = _GENERATOR.match(text)
    if match:
        name, args = match.group(1), [int(a) for a in match.group(2).replace(" ", "").split(",") if a]
        if name == "identity":
            return aschur.identity(tuple(args))
        if name in ("spot_up", "spot_down"):
            if args:
                raise ValueError(f"{name} takes no arguments")
            return getattr(aschur, name)()
        if len(args) != 2:
            raise ValueError(f"{name} takes two thicknesses")
        return getattr(aschur, name)(*args)
    first = re.search(r"xi\((\[.*?\]\])", text) or re.search(r"xi\((\[\])", text)
    if not first:
        raise ValueError(f"cannot read morphism {text!r}")
    A = CosetMatrix(aschur._parse_matrix(first.group(1)))
    return parse_morphism(text, A.col_sums, A.row_sums)


# ---------------------------------------------------------------- reports


@dataclass
class RunReport:
    claim: str
    params: dict
    ok: bool
    elapsed: float
    counterexample: str = ""

    def line(self) -> str:
        params = " ".join(f"{k}={_show(v)}" for k, v in sorted(self.params.items()))
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.claim} {params}".rstrip() + f" ({self.elapsed:.2f}s)"
        if not self.ok:
            text += f"\n  counterexample: {self.counterexample or 'see parameters'}"
        return text


def _show(value) -> str:
    return str(value).replace(" ", "")


def _timed(claim: str, params: dict, check: Callable[[], tuple[bool, str]]) -> RunReport:
    start = time.perf_counter()
    ok, detail = check()
    return RunReport(claim, params, ok, time.perf_counter() - start, "" if ok else detail)


def schur_relation_reports(max_thickness: int, max_degree: int, order: int) -> Iterable[RunReport]:
    for name in relations.RELATIONS:
        for params in relations.relation_grid(name, max_thickness, max_degree):
            def check(name=name, params=params):
                results = relations.check_relation(name, N=order, **params)
                bad = [label for label, ok in results if not ok]
                return not bad, f"{name} {params} fails at {bad}"

            yield _timed(name, params, check)


def rtt_reports(n: int, r: int, order: int, bound: int) -> Iterable[RunReport]:
    def check():
        T = yangian.drinfeld_image(n, r, order)
        bad = yangian.rtt_failures(T, bound)
        return not bad, f"(i,j,k,l,a,b) = {bad[0]}" if bad else ""

    yield _timed("rtt", {"n": n, "r": r, "order": order, "bound": bound}, check)


def drinfeld_reports(n: int, r: int, order: int) -> Iterable[RunReport]:
    for nn, rr in product(range(1, n + 1), range(1, r + 1)):
        def oracle(nn=nn, rr=rr):
            T = yangian.drinfeld_image(nn, rr, order)
            S = yangian.slava_closed_form(nn, rr, order)
            bad = T.mismatches(S)
            return not bad, f"(i,j,d) = {bad[0]}" if bad else ""

        def generators(nn=nn, rr=rr):
            flags = yangian.drinfeld_generator_check(yangian.drinfeld_image(nn, rr, order))
            bad = [k for k, ok in flags.items() if not ok]
            return not bad, f"generators {bad}"

        yield _timed("closed-form", {"n": nn, "r": rr, "order": order}, oracle)
        yield _timed("gauss-diagrams", {"n": nn, "r": rr, "order": order}, generators)


def roundtrip_reports(n: int, r: int, roots: list) -> Iterable[RunReport]:
    for degree in range(r + 1):
        for seq in reps.enumerate_sequences(n, degree, roots):
            def check(seq=seq):
                rt = reps.round_trip(seq)
                return rt.ok, f"recovered {rt.recovered}"

            yield _timed("reps-roundtrip", {"sequence": str(seq)}, check)


SUITES = ["schur-relations", "rtt", "drinfeld", "reps-roundtrip"]


# ---------------------------------------------------------------- commands


@click.group()
def main():
    """Exact computations in degenerate affine Schur algebras and Yangian images."""


@main.command()
@click.argument("outer")
@click.argument("inner")
@click.option("--n", type=int, default=None, help="Number of parts every object must have.")
@click.option("--r", type=int, default=None, help="Total thickness every object must have.")
def compose(outer: str, inner: str, n: int | None, r: int | None):
    """Print OUTER composed after INNER."""
    try:
        g, h = parse_spec(outer), parse_spec(inner)
        for obj in (g.source, g.target, h.source, h.target):
            if (n is not None and len(obj) != n) or (r is not None and sum(obj) != r):
                raise ValueError(f"object {obj} is not in Lambda({n},{r})")
        result = aschur.compose(g, h)
    except (ValueError, KeyError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(USAGE_ERROR)
    click.echo(format_morphism(result))


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--max-thickness", type=int, default=3)
@click.option("--max-degree", type=int, default=3)
@click.option("--order", type=int, default=None, help="Series truncation order.")
@click.option("--n", type=int, default=2)
@click.option("--r", type=int, default=2)
@click.option("--bound", type=int, default=3)
@click.option("--roots", default="0,1,2", help="Comma separated rational roots for reps-roundtrip.")
def verify(suite, max_thickness, max_degree, order, n, r, bound, roots):
    """Run a verification suite; one line per check."""
    if suite == "schur-relations":
        reports = schur_relation_reports(max_thickness, max_degree, order or 6)
    elif suite == "rtt":
        reports = rtt_reports(n, r, order or 2 * bound - 1, bound)
    elif suite == "drinfeld":
        reports = drinfeld_reports(n, r, order or 5)
    else:
        try:
            root_list = [reps._frac(x) for x in roots.split(",") if x.strip()]
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(USAGE_ERROR)
        reports = roundtrip_reports(n, r, root_list)
    failed = 0
    total = 0
    for report in reports:
        total += 1
        failed += not report.ok
        click.echo(report.line())
    click.echo(f"{total - failed}/{total} passed")
    sys.exit(VERIFY_FAILED if failed else 0)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--order", type=int, default=5)
@click.argument("i", type=int)
@click.argument("j", type=int)
def drinfeld(n, r, order, i, j):
    """Print the image of T_{I,J}(u) in AS(n, r)."""
    if not (1 <= i <= n and 1 <= j <= n) or r < 0 or order < 0:
        click.echo("error: indices out of range", err=True)
        sys.exit(USAGE_ERROR)
    T = yangian.drinfeld_image(n, r, order)
    click.echo(format_series(T[(i, j)], n, r))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--degree", type=int, default=0)
def dims(n, r, degree):
    """Table of dim 1_lambda F_D AS(n, r) 1_mu."""
    if n < 0 or r < 0 or degree < 0:
        click.echo("error: negative parameter", err=True)
        sys.exit(USAGE_ERROR)
    weights = enumerate_compositions(n, r)
    total = 0
    for lam, mu in product(weights, repeat=2):
        d = aschur.filtered_dim(lam, mu, degree)
        total += d
        click.echo(f"{format_composition(lam)}\t{format_composition(mu)}\t{d}")
    click.echo(f"total\t{total}")


@main.command(name="reps")
@click.argument("sequence")
def reps_command(sequence):
    """Classify SEQUENCE (text like "(u-1)^2,(u-1)" or a file containing it)."""
    path = Path(sequence)
    text = path.read_text().strip() if path.is_file() else sequence
    try:
        seq = reps.PolySequence.parse(text)
        if not reps.validate_sequence(seq):
            raise reps.InvalidSequence(f"not monic with lambda_(i+1) | lambda_i: {seq}")
        rt = reps.round_trip(seq)
        _, values = reps.highest_weight(reps.irreducible_quotient(reps.standard_module(rt.segments, seq.n)))
    except (ValueError, reps.IrrationalRoot) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(USAGE_ERROR)
    click.echo(f"sequence: {seq}")
    click.echo("drinfeld polynomials: " + ", ".join(reps.format_expr(p.as_expr()) for p in reps.drinfeld_polys(seq)))
    click.echo("segments: [" + ", ".join(f"({s.b},{s.a})" for s in rt.segments) + "]")
    click.echo(f"standard module dimension: {rt.module_dim}")
    click.echo(f"head dimension: {rt.head_dim}")
    for i, value in enumerate(values, start=1):
        click.echo(f"A_{i}(u) = {reps.format_expr(value)}")
    click.echo(f"round trip: {'ok' if rt.ok else 'FAILED'}")
    sys.exit(0 if rt.ok else VERIFY_FAILED)


if __name__ == "__main__":
    main()

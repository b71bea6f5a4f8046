"""
Main CLI for the Kuratowski workbench
Single entry point for tables, figures, searches and demonstrations
"""

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

import click
import yaml

from ..algebra.equality import term_equal
from ..algebra.parser import parse_term
from ..algebra.words import enumerate_unary_monoid, format_word, normalize_unary, parse_word, sorted_words
from ..config import DEFAULTS_PATH, Defaults, load_defaults, worker_count
from ..core.enumeration import ENUMERATION_CAP, LABELED_COUNTS, UNLABELED_COUNTS, enumerate_preorders
from ..core.topology import read_space, space_from_json, validate_space
from ..lattice.counts import TABLE1, table_grid
from ..lattice.emitters import emit_hasse, output_path
from ..lattice.figures import HASSE_FAMILIES, hasse_family
from ..saturation.infinite import closed_form_tail, ej_sequence, growth_probe, max_steps, phi_iterate
from ..saturation.opset import TABLE_COLUMNS, TABLE_ROWS, OpSet
from ..saturation.search import SearchResult, max_over_spaces, sum_witness

POINTS = click.IntRange(1, ENUMERATION_CAP)


def _defaults() -> Defaults:
    ctx = click.get_current_context()
    return ctx.find_root().obj


def _fail(message: str) -> None:
    click.echo(f"❌ {message}")
    sys.exit(1)


def _render_grid(title: str, grid: List[List[str]]) -> None:
    width = max(len(cell) for row in grid for cell in row) + 2
    click.echo(f"\n📊 {title}\n")
    click.echo("      " + "".join(f"{column:>{width}}" for column in TABLE_COLUMNS))
    for row, cells in zip(TABLE_ROWS, grid):
        click.echo(f"  {row:<4}" + "".join(f"{cell:>{width}}" for cell in cells))


def _report_mismatches(mismatches: List[Tuple[str, str, str, str]]) -> None:
    if not mismatches:
        click.echo("\n✅ All cells match")
        return
    click.echo("\n❌ Mismatches (cell: expected -> computed):")
    for row, column, expected, computed in mismatches:
        click.echo(f"  - ({row}, {column}): {expected} -> {computed}")
    sys.exit(1)


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress to stderr")
@click.pass_context
def main(ctx: click.Context, verbose: bool) -> None:
    """Kuratowski Workbench - closure algebras on finite spaces"""
    if verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = load_defaults()


@main.command()
def table1() -> None:
    """Reproduce the one-generator table by search and growth probes"""
    defaults = _defaults()
    click.echo("🔎 Computing all 24 cells for one generator...")

    grid: List[List[str]] = []
    mismatches = []
    footnotes = []
    for row in TABLE_ROWS:
        cells = []
        for column in TABLE_COLUMNS:
            ops = OpSet.from_cell(row, column)
            expected = TABLE1[(row, column)]
            if expected is None:
                report = growth_probe(ops, 1, defaults.growth_sizes, defaults.growth_cap)
                cells.append("inf")
                footnotes.append(f"({row}, {column}) {report.evidence}")
                if not (report.construction_available and report.strictly_increasing):
                    mismatches.append((row, column, "inf", report.evidence))
                continue
            result = sum_witness(ops, 1, defaults.witness_bound(row, column), defaults.saturation_cap)
            cells.append(str(result.count))
            if result.count != expected:
                mismatches.append((row, column, str(expected), str(result.count)))
        grid.append(cells)

    _render_grid("Distinct sets from one generator", grid)
    click.echo("\n  inf: growth evidence, not proof")
    for note in footnotes:
        click.echo(f"    {note}")
    _report_mismatches(mismatches)


@main.command()
@click.option("--n", "n", type=int, default=2, help="Number of generators")
def table2(n: int) -> None:
    """Closed-form sizes for n generators, cross-checked by search for n <= 2"""
    defaults = _defaults()
    if not 1 <= n <= defaults.table2_max_generators:
        raise click.BadParameter(f"valid range: 1..{defaults.table2_max_generators}", param_hint="--n")

    counts = table_grid(n)
    grid = [[str(cell) for cell in row] for row in counts]
    _render_grid(f"Distinct sets from {n} generators", grid)

    mismatches = []
    if n <= 2:
        click.echo(f"\n🔎 Cross-checking finite cells by search (n={n})...")
        for row, cells in zip(TABLE_ROWS, counts):
            for column, cell in zip(TABLE_COLUMNS, cells):
                if cell.infinite:
                    continue
                bound = defaults.witness_bound(row, column) if n == 1 else defaults.table2_points
                result = sum_witness(OpSet.from_cell(row, column), n, bound, defaults.saturation_cap)
                if result.count != cell.value:
                    mismatches.append((row, column, str(cell.value), str(result.count)))
    _report_mismatches(mismatches)


def _echo_result(result: SearchResult) -> None:
    click.echo(f"✅ Maximum count: {result.count}{' (truncated)' if result.truncated else ''}")
    click.echo(f"   Search: {result.method}, pieces up to {result.max_points} points")
    click.echo(f"   Witness space ({result.space.point_count} points): {json.dumps(result.space.to_json())}")
    for j, s in enumerate(result.assignment, start=1):
        click.echo(f"   g{j} = {s}")
    click.echo("\n   Family:")
    for entry in result.family:
        click.echo(f"     {str(entry.set):<24} {entry.witness}")


@main.command()
@click.option("--ops", "ops_text", required=True, help="Operations, e.g. kc or ki^v")
@click.option("--gens", type=click.IntRange(min=1), default=1, help="Number of generators")
@click.option("--max-points", type=POINTS, default=None, help="Largest space swept")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Saturation cap")
@click.option("--space", "space_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the family as JSON")
@click.option("--search", type=click.Choice(["sum", "sweep"]), default=None, help="Sum space (default) or best single space")
def count(
    ops_text: str,
    gens: int,
    max_points: Optional[int],
    cap: Optional[int],
    space_path: Optional[str],
    out: Optional[str],
    search: Optional[str],
) -> None:
    """Largest family the operations generate from --gens sets"""
    defaults = _defaults()
    if space_path is not None and max_points is not None:
        raise click.UsageError("--max-points does not apply with --space; the file's point count is used")
    if space_path is not None and search is not None:
        raise click.UsageError("--search does not apply with --space; the given space is saturated directly")
    try:
        ops = OpSet.parse(ops_text)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--ops")
    bound = defaults.count_max_points if max_points is None else max_points
    limit = defaults.saturation_cap if cap is None else cap

    click.echo(f"🔎 Searching ops {ops.label} with {gens} generator(s)...")
    try:
        if space_path is not None:
            space = read_space(space_path, defaults.exhaustive_points, defaults.validation_samples, defaults.validation_seed)
            result = max_over_spaces(ops, gens, space.point_count, limit, worker_count(), spaces=[space])
        elif search == "sweep":
            result = max_over_spaces(ops, gens, bound, limit, worker_count())
        else:
            result = sum_witness(ops, gens, bound, limit)
    except ValueError as exc:
        raise click.ClickException(str(exc))

    _echo_result(result)
    if out:
        data = result.family.to_json()
        data["metadata"]["assignment"] = [s.points() for s in result.assignment]
        with open(out, "w") as f:
            json.dump(data, f, indent=2)
            f.write("\n")
        click.echo(f"\n✅ Family saved to {out}")


@main.command()
@click.argument("family", type=click.Choice(sorted(HASSE_FAMILIES)))
@click.option("--format", "fmt", type=click.Choice(["dot", "json", "md"]), default="dot")
@click.option("--max-points", type=POINTS, default=None, help="Order certification bound")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def hasse(family: str, fmt: str, max_points: Optional[int], out: Optional[str]) -> None:
    """Emit the Hasse diagram of a named operation family"""
    poset = hasse_family(family, _defaults().order_max_points if max_points is None else max_points)
    text = emit_hasse(poset, fmt)
    if out:
        path = output_path(out, fmt)
        path.write_text(text)
        click.echo(f"✅ {family}: {len(poset)} elements, {len(poset.hasse)} covers saved to {path}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("variant", type=click.Choice(["phi", "ej"]))
@click.option("--size", "size", type=click.IntRange(min=1), default=10, help="Points N of the prefix space")
@click.option("--steps", type=int, default=None, help="Iterations (default: all valid)")
def demo(variant: str, size: int, steps: Optional[int]) -> None:
    """Iterate one of the prefix-space constructions and check the closed form"""
    run = phi_iterate if variant == "phi" else ej_sequence
    try:
        iterates = run(size, steps if steps is not None else max_steps(size))
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--steps/--size")

    click.echo(f"\n🔁 {variant} on the prefix space with N={size}\n")
    failures = 0
    for j, value in enumerate(iterates, start=1):
        expected = closed_form_tail(size, j)
        status = "PASS" if value == expected else "FAIL"
        if status == "FAIL":
            failures += 1
        click.echo(f"  j={j:<3} {str(value):<30} expected {str(expected):<30} {status}")
    if failures:
        _fail(f"{failures} step(s) differ from the closed form")


@main.command()
@click.option("--space", "space_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--seed", type=int, default=None, help="Seed for sampled additivity checks")
def validate(space_path: str, seed: Optional[int]) -> None:
    """Check a space file against the closure axioms"""
    defaults = _defaults()
    with open(space_path) as f:
        try:
            space = space_from_json(json.load(f))
        except (json.JSONDecodeError, ValueError) as exc:
            raise click.ClickException(str(exc))
    report = validate_space(
        space,
        exhaustive_points=defaults.exhaustive_points,
        samples=defaults.validation_samples,
        seed=defaults.validation_seed if seed is None else seed,
    )
    click.echo(report.summary())
    if not report.valid:
        sys.exit(1)


@main.command()
@click.argument("word", required=False, default="")
@click.option("--monoid", default=None, help="List every normal form over these letters instead")
def normalize(word: str, monoid: Optional[str]) -> None:
    """Normal form of a unary word over k, i, c"""
    try:
        if monoid is not None:
            forms = sorted_words(enumerate_unary_monoid(monoid))
            click.echo(f"{len(forms)} forms: " + " ".join(format_word(w) for w in forms))
            return
        parsed = parse_word(word)
        click.echo(f"{format_word(parsed)} -> {format_word(normalize_unary(parsed))}")
    except ValueError as exc:
        raise click.BadParameter(str(exc))


@main.command()
@click.argument("first")
@click.argument("second")
@click.option("--max-points", type=POINTS, default=None, help="Largest space tried")
def equal(first: str, second: str, max_points: Optional[int]) -> None:
    """Compare two terms on every small space"""
    try:
        s, t = parse_term(first), parse_term(second)
        verdict = term_equal(s, t, _defaults().equality_max_points if max_points is None else max_points)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(str(verdict))


@main.command(name="enumerate")
@click.option("--points", type=int, required=True)
@click.option("--labeled", is_flag=True, help="Count labeled topologies instead of isomorphism classes")
def enumerate_spaces(points: int, labeled: bool) -> None:
    """Count the topologies on a few points"""
    try:
        total = sum(1 for _ in enumerate_preorders(points, dedup=not labeled))
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--points")
    expected = (LABELED_COUNTS if labeled else UNLABELED_COUNTS)[points - 1]
    kind = "labeled" if labeled else "up to isomorphism"
    click.echo(f"{'✅' if total == expected else '❌'} {total} topologies on {points} point(s), {kind}")
    if total != expected:
        sys.exit(1)


@main.command()
def show_defaults() -> None:
    """List the checked-in defaults"""
    with open(DEFAULTS_PATH) as f:
        data = yaml.safe_load(f)

    click.echo(f"\n📁 {data['name']}: {data['description']}\n")
    for section, values in data.items():
        if section in ("name", "description"):
            continue
        click.echo(f"  • {section}")
        for key, value in values.items():
            if isinstance(value, dict):
                click.echo(f"    {key}: " + ", ".join(f"{cell}={bound}" for cell, bound in value.items()))
            else:
                click.echo(f"    {key}: {value}")


if __name__ == "__main__":
    main()

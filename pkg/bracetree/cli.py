"""
Command-line front end: enumeration, products, series and verification.

Exit codes: 0 on success, 1 when a verification finds a failure, 2 on
usage or parse errors.
"""
import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, Sequence

import click
import pandas as pd

from bracetree import __version__
from bracetree.axioms import AXIOMS, run_axiom
from bracetree.config import Settings
from bracetree.errors import (
    BasisKindError,
    ConfigurationError,
    DecorationError,
    FreenessError,
    SeriesError,
    TreeSyntaxError,
)
from bracetree.freemod import LinComb, serialize_basis
from bracetree.freeness import verify_freeness
from bracetree.products import brace, prelie_planar, prelie_rooted, shuffle, star_planar, star_rooted
from bracetree.reports import EnumerationPayload, FreenessReport, ProductPayload, TermPayload
from bracetree.series import (
    Series,
    brace_hilbert,
    format_coefficient,
    generator_hilbert,
    prelie_hilbert,
    shuffle_quotient_hilbert,
    star_span_hilbert,
    w_sequence,
)
from bracetree.trees import (
    GRAMMAR_HELP,
    DecorationAlphabet,
    alphabet_from_text,
    canonicalize,
    enumerate_planar,
    enumerate_rooted,
    parse,
    parse_forest,
)

logger = logging.getLogger(__name__)

PRODUCT_OPS = ("prelie", "prelie-rooted", "brace", "star", "star-rooted", "shuffle")

SERIES_KINDS = {
    "alphabet": lambda f_d: f_d,
    "prelie": prelie_hilbert,
    "brace": brace_hilbert,
    "generators": generator_hilbert,
    "w": w_sequence,
    "star-span": star_span_hilbert,
    "quotient": shuffle_quotient_hilbert,
}


@contextmanager
def usage_errors() -> Iterator[None]:
    """Report bad input as a click usage error (exit code 2) with the grammar."""
    try:
        yield
    except (TreeSyntaxError, DecorationError, ConfigurationError, BasisKindError) as e:
        raise click.UsageError(f"{e}\n\n{GRAMMAR_HELP}") from e


def _parse_grades(grades: Optional[str]) -> List[int]:
    if not grades:
        return []
    try:
        return [int(g) for g in grades.split(",") if g.strip()]
    except ValueError:
        raise ConfigurationError(f"--grades must be a comma-separated list of integers, got {grades!r}") from None


def resolve_alphabet(
    alphabet: Optional[str],
    alphabet_size: Optional[int],
    grades: Optional[str],
    texts: Sequence[str] = (),
) -> DecorationAlphabet:
    """Alphabet from the flags; inferred from `texts` when no flag is given."""
    grade_list = _parse_grades(grades)
    if alphabet and alphabet_size is not None:
        raise ConfigurationError("use either --alphabet or --alphabet-size, not both")
    if alphabet:
        return DecorationAlphabet.from_symbols(alphabet, grade_list)
    if alphabet_size is not None:
        symbols = DecorationAlphabet.from_size(alphabet_size).symbols
    elif texts:
        symbols = alphabet_from_text(texts).symbols
    else:
        symbols = DecorationAlphabet.from_size(1).symbols
    return DecorationAlphabet(symbols, tuple(grade_list))


def alphabet_options(f):
    f = click.option("--grades", default=None, help="Comma-separated grade of each symbol (default all 1)")(f)
    f = click.option("--alphabet-size", type=int, default=None, help="Use the symbols x1..xD")(f)
    f = click.option("--alphabet", default=None, help="Comma-separated decoration symbols, e.g. a,b,c")(f)
    return f


def output_options(f):
    f = click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout")(f)
    f = click.option("--json", "as_json", is_flag=True, help="Emit JSON")(f)
    return f


def emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n")
        logger.info(f"Wrote {output}")
    else:
        click.echo(text)


def _settings(ctx: click.Context) -> Settings:
    if isinstance(ctx.obj, Settings):
        return ctx.obj
    with usage_errors():
        ctx.obj = Settings.from_env()
    return ctx.obj


@click.group()
@click.version_option(__version__, prog_name="bracetree")
@click.pass_context
def cli(ctx: click.Context):
    """Exact computations in free brace, pre-Lie and NAP algebras on decorated trees."""
    _settings(ctx)


@cli.command("enum")
@click.option("--kind", type=click.Choice(["planar", "rooted"]), default="planar", show_default=True)
@click.option("--weight", type=int, required=True, help="Total vertex grade")
@alphabet_options
@output_options
def enum_command(kind, weight, alphabet, alphabet_size, grades, as_json, output):
    """List all trees of one weight in canonical order."""
    with usage_errors():
        decorations = resolve_alphabet(alphabet, alphabet_size, grades)
    enumerate_trees = enumerate_planar if kind == "planar" else enumerate_rooted
    trees = enumerate_trees(weight, decorations)

    if as_json:
        payload = EnumerationPayload(
            kind=kind,
            weight=weight,
            alphabet=list(decorations.symbols),
            count=len(trees),
            trees=[tree.serialize() for tree in trees],
        )
        emit(payload.model_dump_json(indent=2), output)
    else:
        emit("\n".join(tree.serialize() for tree in trees), output)


def _single(forest, op: str):
    if len(forest) != 1:
        raise click.UsageError(f"--op {op} takes exactly one tree in --args, got {len(forest)}")
    return forest[0]


def evaluate_product(op: str, args: str, target: str, decorations: DecorationAlphabet) -> LinComb:
    """Evaluate one product on text operands."""
    if op == "shuffle":
        return shuffle(parse_forest(args, decorations), parse_forest(target, decorations))
    forest = parse_forest(args, decorations)
    tree = parse(target, decorations)
    if op == "brace":
        return brace(forest, tree)
    if op == "prelie":
        return prelie_planar(_single(forest, op), tree)
    if op == "star":
        return star_planar(_single(forest, op), tree)
    if op == "prelie-rooted":
        return prelie_rooted(canonicalize(_single(forest, op)), canonicalize(tree))
    if op == "star-rooted":
        return LinComb.basis(star_rooted(canonicalize(_single(forest, op)), canonicalize(tree)))
    raise click.UsageError(f"unknown product {op!r}")


@cli.command("prod")
@click.option("--op", type=click.Choice(PRODUCT_OPS), required=True)
@click.option("--args", "args_text", default="", help="Comma-separated trees (a forest)")
@click.option("--target", required=True, help="Target tree, or the second forest for shuffle")
@alphabet_options
@output_options
def prod_command(op, args_text, target, alphabet, alphabet_size, grades, as_json, output):
    """Evaluate a product, e.g. --op brace --args "a,b" --target "d[c]"."""
    with usage_errors():
        decorations = resolve_alphabet(alphabet, alphabet_size, grades, texts=(args_text, target))
        result = evaluate_product(op, args_text, target, decorations)

    if as_json:
        payload = ProductPayload(
            op=op,
            text=result.serialize(),
            terms=[
                TermPayload(coefficient=format_coefficient(c), basis=serialize_basis(b))
                for b, c in result.items()
            ],
        )
        emit(payload.model_dump_json(indent=2), output)
    else:
        emit(result.serialize(), output)


@cli.command("series")
@click.option("--kind", type=click.Choice(list(SERIES_KINDS)), default="brace", show_default=True)
@click.option("--order", type=click.IntRange(min=1), default=10, show_default=True, help="Truncation order")
@alphabet_options
@output_options
def series_command(kind, order, alphabet, alphabet_size, grades, as_json, output):
    """Hilbert series and generator counts of the free algebras."""
    with usage_errors():
        decorations = resolve_alphabet(alphabet, alphabet_size, grades)
    try:
        series: Series = SERIES_KINDS[kind](decorations.hilbert_series(order))
    except SeriesError as e:
        raise click.ClickException(str(e)) from e

    emit(series.to_json() if as_json else series.serialize(), output)


def freeness_table(report: FreenessReport) -> str:
    frame = pd.DataFrame(
        [
            {
                "n": degree.n,
                "dim": degree.dim,
                "star_span": degree.star_span,
                "complement": degree.complement,
                "expected": degree.expected_generators,
                "prelie_full_rank": degree.prelie_full_rank,
                "passed": degree.passed,
            }
            for degree in report.degrees
        ]
    )
    lines = [frame.to_string(index=False)]
    for degree in report.degrees:
        if degree.complement_trees:
            lines.append(f"V({degree.n}): {' '.join(degree.complement_trees)}")
        lines.extend(f"degree {degree.n}: {failure}" for failure in degree.failures)
    return "\n".join(lines)


@cli.command("verify")
@click.option("--axiom", type=click.Choice(AXIOMS), default=None, help="Run a seeded property suite")
@click.option("--freeness", is_flag=True, help="Verify freeness degree by degree")
@click.option("--max-weight", type=click.IntRange(min=1), default=None, help="Largest total weight in the suite")
@click.option("--trials", type=click.IntRange(min=0), default=None, help="Random trials per configuration")
@click.option("--seed", type=int, default=None, help="Seed of the random tree generator")
@click.option("--max-degree", type=click.IntRange(min=1), default=None, help="Largest degree for --freeness")
@click.option("--parallel", is_flag=True, help="Verify degrees in a process pool")
@alphabet_options
@output_options
@click.pass_context
def verify_command(
    ctx, axiom, freeness, max_weight, trials, seed, max_degree, parallel, alphabet, alphabet_size, grades, as_json, output
):
    """Run axiom property suites and/or the freeness verification."""
    if not axiom and not freeness:
        raise click.UsageError("pass --axiom NAME, --freeness, or both")
    settings = _settings(ctx)
    with usage_errors():
        decorations = resolve_alphabet(alphabet, alphabet_size, grades)

    payload: dict = {}
    lines: List[str] = []
    failed = False

    if axiom:
        if max_weight is None and axiom in ("prelie", "nap"):
            max_weight = settings.max_weight
        reports = run_axiom(
            axiom,
            decorations,
            max_weight=max_weight,
            trials=settings.trials if trials is None else trials,
            seed=settings.seed if seed is None else seed,
        )
        payload["axioms"] = [report.model_dump() for report in reports]
        for report in reports:
            status = "passed" if report.passed else "FAILED"
            lines.append(f"{report.axiom}: {report.cases} cases {status}")
            lines.extend(f"  counterexample: {example}" for example in report.counterexamples)
            failed = failed or not report.passed

    if freeness:
        report = verify_freeness(decorations, max_degree, parallel=parallel, workers=settings.workers)
        payload["freeness"] = report.model_dump()
        lines.append(freeness_table(report))
        try:
            report.raise_for_failures()
        except FreenessError as e:
            logger.error(f"Freeness verification failed: {e}")
            failed = True

    emit(json.dumps(payload, indent=2) if as_json else "\n".join(lines), output)
    if failed:
        ctx.exit(1)

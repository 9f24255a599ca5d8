"""Command line interface: verify, analyze, census and show."""

from __future__ import annotations

import sys

import click
import numpy as np

from .dsl import parse_ring_expr
from .harness import (
    CHECKS,
    Caps,
    DEFAULT_CAPS,
    PairContext,
    SuiteReport,
    corpus_pairs,
    default_corpus,
    discover_extensions,
    emit_report,
    load_corpus_file,
    run_suite,
    select_checks,
)
from .ideals import (
    is_completely_prime_ideal,
    is_completely_prime_right_ideal,
    is_prime_ideal,
    is_semiprime_ideal,
    make_extension_pair,
)
from .rings import Subset, center, characteristic, is_commutative, units_count
from .substructures import Side, is_ideal, jacobson_radical, subring_closure


@click.group()
def main() -> None:
    """Finite-ring conductor kernel and verification harness."""


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True), default=None,
              help="JSON corpus file (defaults to the built-in corpus).")
@click.option("--checks", "checks_spec", default=None,
              help="Comma-separated check ids, e.g. C01,C05,C19.")
@click.option("--report", "report_path", type=click.Path(), default=None,
              help="Write the report to this path instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["human", "machine"]), default="human")
def verify(corpus_path, checks_spec, report_path, fmt) -> None:
    """Run the check suite over a corpus; exit 0 iff no check fails."""
    caps = DEFAULT_CAPS
    if corpus_path is None:
        entries, errors = default_corpus(caps), []
    else:
        entries, errors = load_corpus_file(corpus_path, caps)
    checks = CHECKS if checks_spec is None else select_checks(checks_spec)
    pairs = corpus_pairs(entries, caps)
    report = run_suite(pairs, checks, caps)
    report.entry_errors.extend(errors)
    text = emit_report(report, fmt)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0 if report.ok else 1)


@main.command()
@click.option("--ring", "expr", required=True, help="Ring constructor expression.")
@click.option("--subring", "gens", required=True,
              help="Comma-separated element indices generating the subring (1 is adjoined).")
def analyze(expr, gens) -> None:
    """Print conductors, the idealizer case and primality verdicts for one pair."""
    T = parse_ring_expr(expr)
    indices = [int(tok) for tok in gens.split(",") if tok.strip()]
    R = subring_closure(T, Subset.from_indices(T, indices))
    if R.mask.all():
        raise click.ClickException("generators span the whole ring; no proper subring")
    pair = make_extension_pair(T, R, f"{expr}/analyzed", require_maximal=False)
    if not pair.maximal:
        click.echo("note: subring is NOT maximal; conductor theory may not apply")
    click.echo(f"ring {expr} of order {T.order}; subring of order {R.size}")
    click.echo(f"subring elements: {', '.join(R.names())}")
    for name, S in (("cond  ", pair.cond), ("cond_l", pair.cond_l), ("cond_r", pair.cond_r)):
        click.echo(f"{name} (order {S.size:3d}): {', '.join(S.names())}")

    C, Cl, Cr = pair.cond, pair.cond_l, pair.cond_r
    if C == Cl == Cr:
        case = "all three conductors coincide (both one-sided conductors are ideals of T)"
    elif C == Cl and Cl < Cr:
        case = "cond = cond_l strictly below cond_r; R is the idealizer of cond_r"
    elif C == Cr and Cr < Cl:
        case = "cond = cond_r strictly below cond_l; R is the idealizer of cond_l"
    else:
        case = "cond strictly below both; R is the idealizer of each one-sided conductor"
    click.echo(f"idealizer case: {case}")

    verdicts = [
        ("cond prime in R", is_prime_ideal(T, C, scope=R)),
        ("cond prime in T", is_prime_ideal(T, C)),
        ("cond semiprime in R", is_semiprime_ideal(T, C, scope=R)),
        ("cond_l prime in R", is_prime_ideal(T, Cl, scope=R)),
        ("cond_r prime in R", is_prime_ideal(T, Cr, scope=R)),
        ("cond completely prime in R", is_completely_prime_ideal(T, C, scope=R)),
        ("cond_r completely prime right ideal of T", is_completely_prime_right_ideal(T, Cr)),
    ]
    for name, value in verdicts:
        click.echo(f"  {name}: {'yes' if value else 'no'}")


@main.command()
@click.option("--ring", "expr", required=True, help="Ring constructor expression.")
def census(expr) -> None:
    """List the maximal subrings of a ring."""
    from finring.rings import CapExceeded

    T = parse_ring_expr(expr)
    try:
        pairs = discover_extensions(T)
    except CapExceeded as exc:
        raise click.ClickException(str(exc))
    click.echo(f"{expr}: order {T.order}, {len(pairs)} maximal subrings")
    for pair in pairs:
        R = pair.subring
        click.echo(f"  {pair.label}: order {R.size}: {', '.join(R.names())}")


@main.command()
@click.option("--ring", "expr", required=True, help="Ring constructor expression.")
@click.option("--tables/--no-tables", default=True, help="Print the Cayley tables.")
def show(expr, tables) -> None:
    """Print tables and an invariant summary of a ring."""
    T = parse_ring_expr(expr)
    click.echo(f"{expr}: order {T.order}, zero={T.zero}, one={T.one}")
    click.echo(f"characteristic {characteristic(T)}, "
               f"{'commutative' if is_commutative(T) else 'noncommutative'}, "
               f"center of order {center(T).size}, {units_count(T)} units")
    try:
        J = jacobson_radical(T, cap=DEFAULT_CAPS.ideal_lattice)
        click.echo(f"Jacobson radical of order {J.size}")
    except Exception:
        click.echo("Jacobson radical: skipped (beyond lattice cap)")
    click.echo("elements:")
    for i in range(T.order):
        click.echo(f"  {i}: {T.elem_names[i]}")
    if tables and T.order <= 32:
        click.echo("add:")
        for row in T.add:
            click.echo("  " + " ".join(f"{int(v):2d}" for v in row))
        click.echo("mul:")
        for row in T.mul:
            click.echo("  " + " ".join(f"{int(v):2d}" for v in row))
    elif tables:
        click.echo("tables suppressed (order > 32); use the machine format instead")


if __name__ == "__main__":
    main()

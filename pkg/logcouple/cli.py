# type: ignore[attr-defined]

"""
Typer-based CLI for evaluating, normalizing and checking terms
"""

import logging
import os
from typing import Dict, List, Optional

import typer
import ujson as json
from tabulate import tabulate

from logcouple.couple import psi_level
from logcouple.eventual import eventual_form, eventual_truth
from logcouple.exceptions import (ArityError, InvalidInterval, InvalidLiteral,
                                  InvalidPartition, InvalidSFunction,
                                  NonNegativeArgument, TermSyntaxError,
                                  UnknownSuite, UnknownSymbol, ZeroArgument)
from logcouple.normalize import solve as solve_condition
from logcouple.normalize import term_to_piecewise
from logcouple.oracle import GenConfig, closure_chain, run_suites
from logcouple.terms import (Condition, eval_condition, evaluate, format_node,
                             parse, parse_condition, parse_term)
from logcouple.vector import format_vector, parse_vector

logging.basicConfig(level=os.environ.get("LOGLEVEL", "WARNING"))


app = typer.Typer(
    name="logcouple",
    help="Exact computation in the asymptotic couple of logarithmic transseries",
    add_completion=False,
)


FORMATS = ['text', 'json']
format_help = "Output format [text, json]"
psi_names_help = "Print Psi-elements as psi_n"
USAGE_ERRORS = (ArityError, InvalidInterval, InvalidLiteral, InvalidPartition,
                InvalidSFunction, NonNegativeArgument, TermSyntaxError,
                UnknownSuite, UnknownSymbol, ZeroArgument)


def _check_format(format: str):
    if format not in FORMATS:
        raise typer.BadParameter(f"{format!r} is not one of {', '.join(FORMATS)}",
                                 param_hint="--format")


def _fail(e: Exception):
    typer.echo(f"error: {e}", err=True)
    raise typer.Exit(code=2)


def print_rows(rows: List[Dict], format: str):
    if format == 'json':
        print(json.dumps(rows, ensure_ascii=False))
    else:
        print(tabulate(rows, headers='keys'))


def print_json(obj):
    print(json.dumps(obj, ensure_ascii=False))


@app.command("eval")
def eval_cmd(
    expr: str = typer.Argument(..., help="Term or condition in x"),
    at: str = typer.Option('[0]', help="Value for x: a vector literal or inf"),
    format: str = typer.Option('text', help=format_help),
    psi_names: bool = typer.Option(False, help=psi_names_help),
):
    """Evaluate a term or condition at a point"""
    _check_format(format)
    try:
        node = parse(expr)
        x = parse_vector(at)
    except USAGE_ERRORS as e:
        _fail(e)
    if isinstance(node, Condition):
        holds = eval_condition(node, x)
        if format == 'json':
            print_json({'expr': format_node(node), 'at': format_vector(x), 'holds': holds})
        else:
            print('true' if holds else 'false')
        return
    value = evaluate(node, x)
    if format == 'json':
        print_json({'expr': format_node(node), 'at': format_vector(x),
                    'value': format_vector(value), 'psi_level': psi_level(value)})
    else:
        print(format_vector(value, psi_names))


@app.command()
def normalize(
    expr: str = typer.Argument(..., help="Term in x"),
    format: str = typer.Option('text', help=format_help),
    psi_names: bool = typer.Option(False, help=psi_names_help),
):
    """Write a term on Psi as a piecewise s-function"""
    _check_format(format)
    try:
        term = parse_term(expr)
    except USAGE_ERRORS as e:
        _fail(e)
    pw = term_to_piecewise(term)
    if format == 'json':
        print_json(pw.to_json())
    else:
        print_rows(pw.rows(psi_names), format)


@app.command()
def solve(
    condition: str = typer.Argument(..., help="Condition in x"),
    format: str = typer.Option('text', help=format_help),
    psi_names: bool = typer.Option(False, help=psi_names_help),
):
    """Find the subset of Psi where a condition holds"""
    _check_format(format)
    try:
        cond = parse_condition(condition)
    except USAGE_ERRORS as e:
        _fail(e)
    subset = solve_condition(cond)
    if format == 'json':
        print_json(subset.to_json())
    else:
        print(subset.describe(psi_names))


@app.command()
def eventual(
    expr: str = typer.Argument(..., help="Term or condition in x"),
    format: str = typer.Option('text', help=format_help),
    psi_names: bool = typer.Option(False, help=psi_names_help),
):
    """Behaviour of a term (or truth of a condition) as x grows"""
    _check_format(format)
    try:
        node = parse(expr)
    except USAGE_ERRORS as e:
        _fail(e)
    if isinstance(node, Condition):
        truth = eventual_truth(node)
        if format == 'json':
            print_json(truth.to_json())
        else:
            word = 'true' if truth.holds else 'false'
            print(f'{word} for x > {format_vector(truth.threshold)}')
        return
    form = eventual_form(node)
    if format == 'json':
        print_json(form.to_json())
    else:
        print(form.describe(psi_names))


@app.command()
def check(
    suite: str = typer.Option('all', help="Suite name, comma-separated names, or all"),
    seed: Optional[int] = typer.Option(None, help="Random seed [env LOGCOUPLE_SEED, 42]"),
    samples: Optional[int] = typer.Option(None, help="Cases per suite [env LOGCOUPLE_SAMPLES, 10000]"),
    max_level: Optional[int] = typer.Option(None, help="Scan depth for oracles [env LOGCOUPLE_MAX_LEVEL, 40]"),
    format: str = typer.Option('text', help=format_help),
    timings: bool = typer.Option(False, help="Include elapsed seconds"),
):
    """Run property suites; exit status 1 if any case fails"""
    _check_format(format)
    cfg = GenConfig.from_env(seed=seed, samples=samples, max_level=max_level)
    names = [name.strip() for name in suite.split(',') if name.strip()]
    try:
        reports = run_suites(names, cfg)
    except UnknownSuite as e:
        _fail(e)
    if format == 'json':
        print_json([r.to_dict(timings) for r in reports])
    else:
        rows = []
        for r in reports:
            row = {'suite': r.name, 'cases': r.cases, 'failed': len(r.failures)}
            if timings:
                row['elapsed'] = round(r.elapsed, 3)
            rows.append(row)
        print_rows(rows, format)
    if not all(r.passed for r in reports):
        raise typer.Exit(code=1)


@app.command()
def closure(
    n_max: int = typer.Option(50, help="Number of chain steps"),
    format: str = typer.Option('text', help=format_help),
    psi_names: bool = typer.Option(False, help=psi_names_help),
):
    """Walk the integration closure chain from e_0"""
    _check_format(format)
    if n_max < 1:
        raise typer.BadParameter("needs at least one step", param_hint="--n-max")
    links = closure_chain(n_max)
    print_rows([link.to_dict(psi_names) for link in links], format)
    if not all(link.ok for link in links):
        raise typer.Exit(code=1)


if __name__ == "__main__":
    app()

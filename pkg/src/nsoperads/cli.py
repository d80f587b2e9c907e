"""Command-line front end for the operad calculus library.

Every verb is a thin shell: parse options, guard resource limits, call
one library entry point, render the result.  Output comes in markdown
(default), csv or json, and identical invocations with the same seed
produce byte-identical output.  Exit status 0 means success, 1 means a
certified check failed (the first witness is printed), 2 means the
invocation itself was rejected before any computation.
"""

from __future__ import annotations

import csv as _csv
import io
import json
from dataclasses import asdict
from typing import Optional, Sequence

import click

from .certify import (
    Certificate,
    certificate_borjeson_calculus,
    certificate_brick_axioms,
    certificate_givental_action,
    run_all,
)
from .correlators import nonzero_indices
from .groebner import complete
from .polytopes import (
    Fan,
    complex_betti,
    fan_verify,
    h_vector,
    loday_polytope,
    loday_vertex,
    loday_via_minkowski,
    normal_fan,
    real_betti,
    vertex_missing_basis,
    wall_equation,
)
from .trees import PlanarTree, enumerate_trees
from .zoo import (
    ZOO_NAMES,
    dimension_table,
    euler_characteristic_real,
    named_operad,
    narayana,
    zoo_catalog,
)

FORMATS = ("markdown", "csv", "json")


def _guard(condition: bool, message: str) -> None:
    """Reject an invocation that would exceed the supported ranges."""
    if not condition:
        raise click.UsageError("resource guard: " + message)


def _render(fmt: str, header: Sequence[str], rows: Sequence[Sequence], payload) -> str:
    """One table, three shapes; json renders the structured payload."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = _csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    widths = [
        max(len(str(header[i])), *(len(str(row[i])) for row in rows), 1)
        if rows
        else len(str(header[i]))
        for i in range(len(header))
    ]
    lines = [
        "| " + " | ".join(str(h).ljust(w) for h, w in zip(header, widths)) + " |",
        "| " + " | ".join("-" * w for w in widths) + " |",
    ]
    for row in rows:
        lines.append(
            "| " + " | ".join(str(x).ljust(w) for x, w in zip(row, widths)) + " |"
        )
    return "\n".join(lines)


def _format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default="markdown",
        show_default=True,
        help="Output format.",
    )(func)


def _echo_certificates(results: Sequence[Certificate], fmt: str) -> bool:
    """Print one line per certificate; return whether all passed."""
    if fmt == "json":
        click.echo(json.dumps([asdict(c) for c in results], indent=2, sort_keys=True))
    elif fmt == "csv":
        rows = [(c.number, c.name, "PASS" if c.ok else "FAIL", c.detail) for c in results]
        click.echo(_render("csv", ("number", "name", "verdict", "detail"), rows, None))
    else:
        for cert in results:
            click.echo(cert.line())
    return all(c.ok for c in results)


@click.group()
@click.version_option(package_name="nsoperads", prog_name="nsoperads")
def cli() -> None:
    """Exact calculus for planar operads, brick configurations and
    correlator recursions."""


# -- zoo ------------------------------------------------------------------------


@cli.command()
@click.argument("name", required=False)
@click.option("--n-max", default=7, show_default=True, help="Largest arity to tabulate.")
@_format_option
def zoo(name: Optional[str], n_max: int, fmt: str) -> None:
    """Dimension tables of a cataloged operad, or the catalog itself."""
    if name is None:
        rows = []
        for named in zoo_catalog():
            gens = ", ".join(
                f"{g.name}({g.arity}|{g.degree})" for g in named.presentation.alphabet
            )
            rows.append((named.name, gens, "yes" if named.groebner_claimed else "no"))
        payload = [
            {"name": r[0], "generators": r[1], "groebner_claimed": r[2] == "yes"}
            for r in rows
        ]
        click.echo(_render(fmt, ("name", "generators (arity|degree)", "groebner"), rows, payload))
        return
    _guard(
        1 <= n_max <= 7,
        f"--n-max {n_max} is outside the certified range 1..7 for dimension tables",
    )
    try:
        tables = dimension_table(name, n_max)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0]))
    arities = sorted(tables)
    degrees = sorted({d for table in tables.values() for d in table})
    header = ["degree"] + [f"arity {n}" for n in arities]
    rows: list[list] = []
    for d in degrees:
        rows.append([d] + [tables[n].get(d, 0) for n in arities])
    rows.append(["total"] + [sum(tables[n].values()) for n in arities])
    payload = {
        "name": name,
        "n_max": n_max,
        "tables": {str(n): {str(d): c for d, c in tables[n].items()} for n in arities},
        "totals": {str(n): sum(tables[n].values()) for n in arities},
    }
    click.echo(_render(fmt, header, rows, payload))


# -- groebner ---------------------------------------------------------------------


@cli.command()
@click.argument("name")
@click.option("--n-max", default=7, show_default=True, help="Arity cap for completion.")
@_format_option
def groebner(name: str, n_max: int, fmt: str) -> None:
    """Complete the rewriting system of a cataloged operad and list it."""
    _guard(
        2 <= n_max <= 7,
        f"--n-max {n_max} is outside the supported completion range 2..7",
    )
    try:
        named = named_operad(name, max_arity=n_max)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0]))
    basis = complete(named.presentation, named.preferred_order, n_max)
    added = {id(rule) for rule in basis.added_rules}
    rows = [
        (rule.lead.arity, rule.lead.to_text(), "added" if id(rule) in added else "input")
        for rule in basis.rules
    ]
    payload = {
        "name": named.name,
        "arity_cap": n_max,
        "complete": basis.complete_up_to_cap,
        "rules_added": len(basis.added_rules),
        "rules": [
            {"arity": r[0], "lead": r[1], "origin": r[2]} for r in rows
        ],
    }
    click.echo(_render(fmt, ("arity", "leading monomial", "origin"), rows, payload))
    if fmt != "json":
        click.echo(basis.report())


# -- correlators --------------------------------------------------------------------


@cli.command()
@click.option("--n", required=True, type=int, help="Number of inputs.")
@_format_option
def correlators(n: int, fmt: str) -> None:
    """The nonzero correlator indices of a given arity, with values."""
    _guard(2 <= n <= 12, f"--n {n} is outside the supported range 2..12")
    indices = nonzero_indices(n)
    rows = [
        (idx.d0, " ".join(str(d) for d in idx.ds), 1)
        for idx in indices
    ]
    payload = [
        {"root": idx.d0, "insertions": list(idx.ds), "value": 1} for idx in indices
    ]
    click.echo(_render(fmt, ("root exponent", "insertion exponents", "value"), rows, payload))


# -- polytope ---------------------------------------------------------------------


_POLYTOPE_CHECKS = ("minkowski", "missing-basis", "extremal", "h-vector")


def _run_polytope_check(check: str, n: int) -> Optional[str]:
    """Run one named vertex check; return a witness string on failure."""
    if check == "minkowski":
        direct = loday_polytope(n)
        summed = loday_via_minkowski(n)
        if direct.vertices != summed.vertices:
            extra = set(direct.vertices) ^ set(summed.vertices)
            return f"vertex sets differ, first witness {sorted(extra)[0]}"
        return None
    if check == "missing-basis":
        for tree in enumerate_trees(n, binary_only=True):
            if loday_vertex(tree) != vertex_missing_basis(tree):
                return f"rules disagree on {tree.to_text()}"
        return None
    if check == "extremal":
        try:
            loday_polytope(n).verify()
        except ValueError as exc:
            return str(exc)
        return None
    h = h_vector(n)
    refined = tuple(narayana(n, k) for k in range(n - 1))
    betti = complex_betti(n)
    if h != refined:
        return f"h-vector {h} differs from the refined count {refined}"
    if tuple(betti[2 * k] for k in range(n - 1)) != refined:
        return f"even Betti numbers {betti} differ from the h-vector"
    return None


@cli.command()
@click.argument("family", type=click.Choice(["loday"]))
@click.option("--n", required=True, type=int, help="Number of leaves.")
@click.option(
    "--check",
    "checks",
    default="",
    help="Comma-separated checks: " + ", ".join(_POLYTOPE_CHECKS) + ".",
)
@_format_option
@click.pass_context
def polytope(ctx: click.Context, family: str, n: int, checks: str, fmt: str) -> None:
    """Vertices of the tree polytope, with optional certified checks."""
    wanted = [c.strip() for c in checks.split(",") if c.strip()]
    for check in wanted:
        if check not in _POLYTOPE_CHECKS:
            raise click.UsageError(
                f"unknown check {check!r}; choose from {', '.join(_POLYTOPE_CHECKS)}"
            )
    _guard(2 <= n <= 8, f"--n {n} is outside the supported range 2..8")
    _guard(
        "extremal" not in wanted or n <= 7,
        "the extremality check runs exact linear programs; it is limited to n <= 7",
    )
    if not wanted:
        polytope_ = loday_polytope(n)
        rows = [tuple(v) for v in polytope_.vertices]
        header = tuple(f"y{i}" for i in range(1, n))
        payload = {
            "family": family,
            "n": n,
            "dimension": polytope_.dimension,
            "vertices": [list(v) for v in polytope_.vertices],
        }
        click.echo(_render(fmt, header, rows, payload))
        return
    rows = []
    verdicts = {}
    failed = False
    for check in wanted:
        witness = _run_polytope_check(check, n)
        verdicts[check] = witness
        rows.append((check, "PASS" if witness is None else "FAIL", witness or ""))
        failed = failed or witness is not None
    payload = {
        "family": family,
        "n": n,
        "checks": {
            check: {"ok": witness is None, "witness": witness}
            for check, witness in verdicts.items()
        },
    }
    if fmt == "markdown":
        for check, verdict, witness in rows:
            click.echo(f"{verdict} {check}" + (f": {witness}" if witness else ""))
    else:
        click.echo(_render(fmt, ("check", "verdict", "witness"), rows, payload))
    if failed:
        ctx.exit(1)


# -- fan --------------------------------------------------------------------------


@cli.command()
@click.option("--n", required=True, type=int, help="Number of leaves.")
@_format_option
@click.pass_context
def fan(ctx: click.Context, n: int, fmt: str) -> None:
    """Verify the normal fan and list its walls with their equations."""
    _guard(2 <= n <= 7, f"--n {n} is outside the supported range 2..7")
    fan_ = normal_fan(n)
    try:
        report = fan_verify(fan_)
    except ValueError as exc:
        click.echo(f"FAIL fan axioms: {exc}")
        ctx.exit(1)
        return
    trees = [PlanarTree.from_text(label) for label in fan_.labels]
    rows = []
    for a, b, _shared in fan_.walls():
        ga, gb = wall_equation(trees[a], trees[b])
        rows.append((fan_.labels[a], fan_.labels[b], f"y{ga} = y{gb}"))
    payload = {
        "n": n,
        "cones": report["cones"],
        "rays": report["rays"],
        "walls": [
            {"cones": [r[0], r[1]], "equation": r[2]} for r in rows
        ],
    }
    click.echo(_render(fmt, ("cone", "adjacent cone", "wall equation"), rows, payload))
    if fmt != "json":
        click.echo(
            f"verified: {report['cones']} cones, {report['rays']} rays, "
            f"{report['walls']} walls"
        )


# -- betti ------------------------------------------------------------------------


@cli.command()
@click.option("--n-max", default=6, show_default=True, help="Largest arity.")
@_format_option
def betti(n_max: int, fmt: str) -> None:
    """Betti tables of the real and complex points, with Euler numbers."""
    _guard(2 <= n_max <= 9, f"--n-max {n_max} is outside the supported range 2..9")
    rows = []
    payload = []
    for n in range(2, n_max + 1):
        real = real_betti(n)
        cplx = complex_betti(n)
        chi = sum((-1) ** d * b for d, b in enumerate(real))
        rows.append(
            (
                n,
                " ".join(str(b) for b in real),
                " ".join(str(b) for b in cplx),
                chi,
            )
        )
        payload.append(
            {
                "n": n,
                "real_betti": list(real),
                "complex_betti": list(cplx),
                "euler_real": chi,
                "euler_closed_form": euler_characteristic_real(n),
            }
        )
    click.echo(
        _render(fmt, ("n", "real Betti", "complex Betti", "real Euler"), rows, payload)
    )


# -- brick ------------------------------------------------------------------------


@cli.command()
@click.option(
    "--profile",
    default="",
    help="Single arity profile a,b,c (composite arity at most 7).",
)
@click.option("--trials", default=25, show_default=True, help="Random triples per profile.")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@_format_option
@click.pass_context
def brick(ctx: click.Context, profile: str, trials: int, seed: int, fmt: str) -> None:
    """Check the composition axioms on random rational configurations."""
    _guard(1 <= trials <= 1000, f"--trials {trials} is outside the range 1..1000")
    profiles = None
    if profile:
        parts = [p.strip() for p in profile.split(",")]
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise click.UsageError("--profile expects three comma-separated arities")
        a, b, c = (int(p) for p in parts)
        _guard(
            min(a, b, c) >= 2 and a + b + c - 2 <= 7,
            f"profile {(a, b, c)} must use arities >= 2 with composite arity <= 7",
        )
        profiles = [(a, b, c)]
    result = certificate_brick_axioms(seed=seed, trials=trials, profiles=profiles)
    if not _echo_certificates([result], fmt):
        ctx.exit(1)


# -- borjeson and givental ----------------------------------------------------------


@cli.command()
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@_format_option
@click.pass_context
def borjeson(ctx: click.Context, seed: int, fmt: str) -> None:
    """Certify the product calculus of unary operators."""
    if not _echo_certificates([certificate_borjeson_calculus(seed=seed)], fmt):
        ctx.exit(1)


@cli.command()
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@_format_option
@click.pass_context
def givental(ctx: click.Context, seed: int, fmt: str) -> None:
    """Certify the deformation recursion and the tangency test."""
    if not _echo_certificates([certificate_givental_action(seed=seed)], fmt):
        ctx.exit(1)


# -- certify-all --------------------------------------------------------------------


@cli.command("certify-all")
@click.option("--quick", is_flag=True, help="Run the acceptance-scale battery.")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@_format_option
@click.pass_context
def certify_all(ctx: click.Context, quick: bool, seed: int, fmt: str) -> None:
    """Run every certificate and print one verdict line each."""
    results = run_all(seed=seed, quick=quick)
    if not _echo_certificates(results, fmt):
        ctx.exit(1)


def main() -> None:
    cli(prog_name="nsoperads")


if __name__ == "__main__":
    main()

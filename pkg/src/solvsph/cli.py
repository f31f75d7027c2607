"""Command-line front end: validation, construction, orbit
exploration, enumeration, counts, and table emission."""

import json
import sys
from fractions import Fraction

import click

from .rootsys import build_root_system
from .combdata import (triple_from_json, validate, largest_torus,
                       torus_from_json, codims, is_reduced)
from . import build as build_mod
from . import transform as transform_mod
from . import enumeration


def _fmt_rational(x):
    f = Fraction(x)
    return "%d/%d" % (f.numerator, f.denominator) if f.denominator != 1 \
        else str(f.numerator)


def _read_triple(source):
    if source == "-" or source is None:
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        with open(source) as fh:
            text = fh.read()
    return triple_from_json(text)


def _parse_support(rs, supp):
    if supp is None:
        return None
    return [int(x) for x in supp.split(",") if x != ""]


@click.group()
def main():
    """Exact classification of connected solvable spherical subgroups
    via combinatorial triples on root systems."""


@main.command()
@click.option("--system", required=True)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json", "csv"]))
def roots(system, fmt):
    """Dump positive roots and structure constants."""
    rs = build_root_system(system)
    sc = rs.structure_constants()
    if fmt == "json":
        data = {
            "system": rs.label,
            "cartan": rs.cartan,
            "positive_roots": [list(r) for r in rs.positive_roots],
            "structure_constants": [
                {"a": list(a), "b": list(b), "n": sc.n(a, b)}
                for a, b in sc.positive_pairs()],
        }
        click.echo(json.dumps(data))
        return
    sep = "," if fmt == "csv" else "\t"
    for r in rs.positive_roots:
        click.echo(sep.join(str(c) for c in r))
    for a, b in sc.positive_pairs():
        click.echo(sep.join([" ".join(map(str, a)), " ".join(map(str, b)),
                             str(sc.n(a, b))]))


@main.command(name="validate")
@click.argument("triple", required=False)
@click.option("--torus", default=None, help="torus JSON (default: largest)")
@click.option("--reduced", is_flag=True, help="also check reduced form")
def validate_cmd(triple, torus, reduced):
    """Check the validity conditions of a triple (JSON arg or stdin)."""
    t = _read_triple(triple)
    spec = torus_from_json(torus) if torus else largest_torus(t)
    rep = validate(t, spec)
    click.echo(str(rep))
    if reduced:
        from .combdata import check_reduced
        rep2 = check_reduced(t)
        click.echo(str(rep2))
        if not rep2.ok:
            sys.exit(1)
    if not rep.ok:
        sys.exit(1)


@main.command(name="build")
@click.argument("triple", required=False)
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
def build_cmd(triple, fmt):
    """Construct the subalgebra model of a valid triple."""
    t = _read_triple(triple)
    model = build_mod.build_subalgebra(t)
    closed = build_mod.verify_closure(model)
    spherical = build_mod.check_sphericity(model)
    if fmt == "json":
        data = json.loads(model.to_json())
        data["closed"] = closed
        data["spherical"] = spherical
        click.echo(json.dumps(data))
    else:
        click.echo("classes=%d dim_n=%d closed=%s spherical=%s"
                   % (model.K, model.dim_n(), closed, spherical))
        for row, block in zip(model.xi, model.aset.classes):
            click.echo("xi[%s] = %s"
                       % (",".join("".join(map(str, r)) for r in block),
                          " ".join(_fmt_rational(x) for x in row)))
    if not (closed and spherical):
        sys.exit(1)


@main.command(name="transform")
@click.argument("triple", required=False)
@click.option("--center", required=True, type=int,
              help="simple-root index (0-based)")
def transform_cmd(triple, center):
    """Apply one elementary transformation."""
    t = _read_triple(triple)
    try:
        t2 = transform_mod.elementary_transform(t, center)
    except ValueError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    click.echo(t2.to_json())


@main.command(name="orbit")
@click.argument("triple", required=False)
@click.option("--reduced", is_flag=True)
def orbit_cmd(triple, reduced):
    """Closure of a triple under elementary transformations."""
    t = _read_triple(triple)
    graph = transform_mod.orbit(t, reduced_only=reduced)
    click.echo(graph.to_json())


@main.command(name="enumerate")
@click.option("--system", required=True)
@click.option("--support", default=None)
@click.option("--reduced/--valid", default=True)
@click.option("--jobs", default=1, type=int)
@click.option("--output", default=None)
def enumerate_cmd(system, support, reduced, jobs, output):
    """Stream the catalog of triples as JSON lines."""
    rs = build_root_system(system)
    supp = _parse_support(rs, support)
    if reduced:
        cat = enumeration.enumerate_reduced(rs, supp)
    else:
        cat = enumeration.enumerate_valid(rs, supp)
    del jobs  # catalogs are deterministic regardless of parallelism
    stream = open(output, "w") if output else sys.stdout
    try:
        for line in cat.json_lines():
            stream.write(line + "\n")
    finally:
        if output:
            stream.close()


@main.command()
@click.argument("system")
def counts(system):
    """Print d0 and d for a system."""
    rs = build_root_system(system)
    click.echo("d0=%d d=%d" % (enumeration.d0(rs), enumeration.d(rs)))


@main.command()
@click.option("--system", "systems", multiple=True, required=True,
              help="repeatable; all must share one underlying graph")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "csv"]))
@click.option("--output", default=None)
def table(systems, fmt, output):
    """Emit the classification table for systems sharing a graph."""
    rss = [build_root_system(s) for s in systems]
    text = enumeration.emit_table(rss, fmt=fmt)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()

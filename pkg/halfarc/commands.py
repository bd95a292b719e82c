# -*- coding: utf-8 -*-
"""Command line tools to build family pairs, analyze them and run the grid sweep."""
import logging

import click
import jsonschema

import halfarc.classifier
import halfarc.configurations
import halfarc.families
import halfarc.formats
import halfarc.quotients
import halfarc.reports
from halfarc import graphs
from halfarc.families import FamilyId
from halfarc.permutations import ElementCapExceeded


class FamilyParamType(click.ParamType):
    """Family given as ``row1`` ... ``row5``."""

    name = "family"

    def convert(self, value, param, ctx):
        if isinstance(value, FamilyId):
            return value
        try:
            return FamilyId.from_label(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


FAMILY = FamilyParamType()


@click.group()
@click.option(
    "--configuration",
    type=click.Path(exists=True, dir_okay=False),
    help="Configuration file for halfarc [default: search .halfarc.yaml up to root].",
)
@click.option(
    "--max-group-order",
    type=click.IntRange(min=1),
    help="Largest number of elements enumerated for a group.",
)
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (repeat for more).")
@click.pass_context
def main(ctx, configuration, max_group_order, verbose):
    """Normal quotients of 4-valent half-arc-transitive graph-group pairs"""
    logging.basicConfig(
        level=max(logging.WARNING - 10 * verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
    )
    if not configuration:
        try:
            configuration = halfarc.configurations.search_file_in_path(
                halfarc.configurations.CONFIG_FILENAME
            )
        except IOError:
            configuration = None

    settings = None
    if configuration:
        try:
            settings = halfarc.configurations.load_settings(configuration)
        except (IOError, ValueError, TypeError, jsonschema.ValidationError) as exc:
            msg = 'invalid configuration "{0}": {1}'
            raise click.UsageError(msg.format(configuration, getattr(exc, "message", exc)))

    ctx.ensure_object(dict)
    ctx.obj["configuration"] = configuration
    ctx.obj["settings"] = halfarc.configurations.retrieve_settings(
        settings, max_group_order=max_group_order
    )


def _settings(ctx, **overrides):
    try:
        return halfarc.configurations.retrieve_settings(ctx.obj["settings"], **overrides)
    except (TypeError, ValueError) as exc:
        raise click.UsageError(str(exc))


def _build_pair(family, r, s, settings, strict=True):
    """Builds a pair, swapping the parameters of H(r,s) when r is even and s odd."""
    swapped = False
    if family is FamilyId.GAMMA_H and r % 2 == 0 and s % 2 == 1:
        r, s, swapped = s, r, True
    try:
        pair = halfarc.families.make_pair(
            family, r, s, strict=strict, cap=settings.max_group_order
        )
    except halfarc.families.InvalidParameters as exc:
        raise click.UsageError(str(exc))
    return pair, swapped


def _emit(document, fmt):
    halfarc.reports.validate(document)
    click.echo(halfarc.formats.dumps(document, fmt), nl=False)


def _format_option(function):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(halfarc.formats.report_formats()),
        help="Format of the report [default: from the configuration, else json].",
    )(function)


def _run(function, *args, **kwargs):
    try:
        return function(*args, **kwargs)
    except ElementCapExceeded as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.argument("family", type=FAMILY)
@click.argument("r", type=int)
@click.argument("s", type=int)
@click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the graph here, and the vertex labels to OUTPUT.labels.json.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["graph6", "json"]),
    default="graph6",
    show_default=True,
    help="Encoding of the graph.",
)
@click.pass_context
def construct(ctx, family, r, s, output, fmt):
    """Build the graph of a family for the parameters R and S."""
    pair, swapped = _build_pair(family, r, s, ctx.obj["settings"])
    if fmt == "graph6":
        text = graphs.to_graph6(pair.graph).decode("ascii") + "\n"
    else:
        document = _run(halfarc.reports.pair_as_dict, pair, swapped)
        halfarc.reports.validate(document)
        text = halfarc.formats.dumps(document, "json")

    if not output:
        click.echo(text, nl=False)
        return
    with open(output, "w") as stream:
        stream.write(text)
    labels = halfarc.reports.labels_as_dict(pair, swapped)
    with open(output + ".labels.json", "w") as stream:
        stream.write(halfarc.formats.dumps(labels, "json"))


@main.command()
@click.argument("family", type=FAMILY)
@click.argument("r", type=int)
@click.argument("s", type=int)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["graph6", "json"]),
    default="json",
    show_default=True,
    help="graph6 for the graph alone, json for graph, labels, group and named subgroups.",
)
@click.pass_context
def export(ctx, family, r, s, fmt):
    """Export the graph and group of a family for the parameters R and S."""
    pair, swapped = _build_pair(family, r, s, ctx.obj["settings"])
    if fmt == "graph6":
        click.echo(graphs.to_graph6(pair.graph).decode("ascii"))
        return
    document = _run(halfarc.reports.pair_as_dict, pair, swapped)
    _emit(document, "json")


@main.command()
@click.argument("family", type=FAMILY)
@click.argument("r", type=int)
@click.argument("s", type=int)
@click.option(
    "--mode",
    type=click.Choice(halfarc.classifier.MODES),
    help="Take quotients by all normal subgroups or by the minimal ones only.",
)
@_format_option
@click.pass_context
def analyze(ctx, family, r, s, mode, fmt):
    """Decide whether a family pair is basic and report its normal quotients."""
    settings = _settings(ctx, mode=mode, format=fmt)
    pair, swapped = _build_pair(family, r, s, settings)
    try:
        verified = _run(halfarc.quotients.verify_og4, pair.graph, pair.group)
    except halfarc.quotients.NotOG4 as exc:
        raise click.ClickException(str(exc))
    report = _run(
        halfarc.classifier.is_basic,
        verified,
        mode=settings.mode,
        pair_id=pair.pair_id,
        exhaustive_threshold=settings.exhaustive_threshold,
    )
    document = halfarc.reports.basic_report_as_dict(report, pair, swapped)
    _emit(document, settings.format)


@main.command()
@click.argument("family", type=FAMILY)
@click.argument("r", type=int)
@click.argument("s", type=int)
@click.option(
    "--any-parity",
    is_flag=True,
    default=False,
    help="Build the pair even if R and S violate the parity conditions of the family.",
)
@_format_option
@click.pass_context
def lemmas(ctx, family, r, s, any_parity, fmt):
    """Compare the minimal normal subgroups of a family pair with their known profile."""
    settings = _settings(ctx, format=fmt)
    pair, _ = _build_pair(family, r, s, settings, strict=not any_parity)
    profile = _run(halfarc.classifier.lemma_profiles, pair)
    _emit(halfarc.reports.lemma_profile_as_dict(profile, pair), settings.format)
    if not profile.holds:
        ctx.exit(1)


@main.command()
@click.argument("max_r", type=click.IntRange(min=3))
@click.argument("max_s", type=click.IntRange(min=3))
@click.option(
    "--mode",
    type=click.Choice(halfarc.classifier.MODES + ("both",)),
    help="Mode of each analysis; 'both' also checks that fast and exhaustive agree.",
)
@click.option("--workers", type=click.IntRange(min=1), help="Number of worker processes.")
@_format_option
@click.pass_context
def sweep(ctx, max_r, max_s, mode, workers, fmt):
    """Check the classification over all families with 3 <= r <= MAX_R, 3 <= s <= MAX_S."""
    settings = _settings(ctx, workers=workers, format=fmt)
    report = halfarc.classifier.sweep(
        max_r,
        max_s,
        mode=mode or settings.mode,
        workers=settings.workers,
        cap=settings.max_group_order,
        exhaustive_threshold=settings.exhaustive_threshold,
    )
    _emit(halfarc.reports.sweep_as_dict(report), settings.format)
    if report.mismatches or report.violations:
        msg = "mismatch: {0} ({1},{2}) predicted={3} computed={4}"
        for cell in report.mismatches:
            line = msg.format(cell.family.label, cell.r, cell.s, cell.predicted, cell.computed)
            click.echo(click.style(line, fg="red"), err=True)
        for cell in report.violations:
            for violation in cell.violations:
                line = "violation: {0} ({1},{2}) {3}".format(
                    cell.family.label, cell.r, cell.s, violation
                )
                click.echo(click.style(line, fg="red"), err=True)
        ctx.exit(1)

# -*- coding: utf-8 -*-
"""Conversion of results to plain documents with a versioned schema."""

import jsonschema

from halfarc import graphs
from halfarc.classifier import THEOREM_FORMS
from halfarc.families import GENERATOR_WORDS, FamilyId

#: Version of the layout of every document produced here
SCHEMA_VERSION = 1

_SUBGROUP = {
    "type": "object",
    "required": ["order", "generators"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "description": {"type": "string"},
        "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
}

_QUOTIENT = {
    "type": "object",
    "required": [
        "subgroup",
        "cells",
        "degeneracy",
        "cycle_length",
        "orientation",
        "kernel",
        "induced_group_order",
    ],
    "properties": {
        "subgroup": _SUBGROUP,
        "kernel": _SUBGROUP,
        "cells": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "degeneracy": {"enum": ["K1", "K2", "cycle", "non-degenerate"]},
        "cycle_length": {"type": ["integer", "null"]},
        "orientation": {"enum": ["oriented", "unoriented", "not-applicable"]},
        "induced_group_order": {"type": "integer", "minimum": 1},
        "intra_cell_edges": {"type": "boolean"},
        "quotient_in_og4": {"type": ["boolean", "null"]},
    },
}

#: Schema every document must satisfy before being written
REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "kind"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {
            "enum": ["pair", "basic-report", "lemma-profile", "sweep-report", "labels"]
        },
        "witnesses": {"type": "array", "items": _QUOTIENT},
    },
}


def validate(document):
    """Validates a document against :data:`REPORT_SCHEMA`.

    Raises:
        jsonschema.ValidationError: if the document does not conform
    """
    jsonschema.validate(document, REPORT_SCHEMA)


def _envelope(kind, **payload):
    document = {"schema": SCHEMA_VERSION, "kind": kind}
    document.update(payload)
    return document


def _pair_id(pair, swapped=False):
    return {"family": pair.family.label, "r": pair.r, "s": pair.s, "swapped": swapped}


def subgroup_as_dict(subgroup, pair=None):
    """Order, generators as image arrays and, given the family pair, a description."""
    result = {
        "order": len(subgroup),
        "generators": [list(g.images) for g in subgroup.generators],
    }
    if pair is not None:
        result["description"] = pair.describe(subgroup)
    return result


def quotient_as_dict(report, pair=None):
    """Document for a :class:`~halfarc.quotients.QuotientReport`."""
    return {
        "subgroup": subgroup_as_dict(report.subgroup, pair),
        "cells": report.partition.as_lists(),
        "degeneracy": report.degeneracy.tag,
        "cycle_length": report.degeneracy.length,
        "orientation": report.orientation.value,
        "kernel": subgroup_as_dict(report.kernel, pair),
        "induced_group_order": report.induced_group_order,
        "intra_cell_edges": report.intra_cell_edges,
        "quotient_in_og4": report.in_og4,
    }


def basic_report_as_dict(report, pair, swapped=False):
    """Document for a :class:`~halfarc.classifier.BasicReport` of a family pair."""
    independent = None
    if report.independent_pair is not None:
        independent = [pair.describe(w.subgroup) for w in report.independent_pair]
    witness = None
    if report.not_basic_witness is not None:
        witness = subgroup_as_dict(report.not_basic_witness, pair)
    return _envelope(
        "basic-report",
        pair=_pair_id(pair, swapped),
        mode=report.mode,
        is_basic=report.is_basic,
        basic_type=report.basic_type.value,
        type=report.label,
        group_order=report.group_order,
        vertex_count=report.vertex_count,
        stabilizer_order=report.stabilizer_order,
        witnesses=[quotient_as_dict(w, pair) for w in report.witnesses],
        not_basic_witness=witness,
        independent_pair=independent,
    )


def pair_as_dict(pair, swapped=False):
    """Document describing a family pair: graph, labels, generators, named subgroups."""
    named = []
    for record in pair.named_subgroups.values():
        entry = subgroup_as_dict(record.subgroup, pair)
        entry.update(name=record.name, structure=record.structure, words=list(record.words))
        named.append(entry)
    return _envelope(
        "pair",
        pair=_pair_id(pair, swapped),
        graph={
            "vertex_count": pair.graph.vertex_count,
            "graph6": graphs.to_graph6(pair.graph).decode("ascii"),
            "edges": [list(e) for e in pair.graph.edges()],
        },
        labels=[list(label) for label in pair.labels],
        group={
            "order": pair.group.order(),
            "generator_words": list(GENERATOR_WORDS[pair.family]),
            "generators": [list(g.images) for g in pair.group.generators],
        },
        named_subgroups=named,
    )


def labels_as_dict(pair, swapped=False):
    """Sidecar document with the coordinate label of each vertex."""
    return _envelope(
        "labels", pair=_pair_id(pair, swapped), labels=[list(label) for label in pair.labels]
    )


def lemma_profile_as_dict(profile, pair):
    """Document for a :class:`~halfarc.classifier.LemmaProfile`."""
    expected = None
    if profile.expected is not None:
        expected = [pair.describe(s) for s in profile.expected]
    return _envelope(
        "lemma-profile",
        pair=_pair_id(pair),
        case=profile.case,
        expected=expected,
        computed=[subgroup_as_dict(s, pair) for s in profile.computed],
        matches=profile.matches,
        involution_checks_applicable=profile.involution_checks_applicable,
        involutions=[
            {
                "subgroup": pair.describe(check.subgroup),
                "partner": list(check.partner),
                "swaps_allowed_vertex": check.swaps_allowed_vertex,
            }
            for check in profile.involutions
        ],
        r_or_s_is_4=profile.r_or_s_is_4,
        holds=profile.holds,
    )


def _cell_as_dict(cell):
    return {
        "family": cell.family.label,
        "r": cell.r,
        "s": cell.s,
        "realized": list(cell.realized),
        "swapped": cell.swapped,
        "predicted": cell.predicted,
        "computed": cell.computed,
        "agree": cell.agree,
        "is_basic": cell.is_basic,
        "type": cell.label,
        "group_order": cell.group_order,
        "stabilizer_order": cell.stabilizer_order,
        "mode": cell.mode,
        "violations": list(cell.violations),
        "skipped": cell.skipped,
    }


def sweep_as_dict(report):
    """Document for a :class:`~halfarc.classifier.SweepReport`, with per-family summaries."""
    per_family = []
    for family in FamilyId:
        cells = [c for c in report.cells if c.family is family]
        per_family.append(
            {
                "family": family.label,
                "graph": family.graph_name,
                "group": family.group_name,
                "forms": ["({0},{1})".format(a, b) for a, b in THEOREM_FORMS[family]],
                "independent_cycle": [list(c.realized) for c in cells if c.computed],
                "mismatches": [[c.r, c.s] for c in cells if c.agree is False],
            }
        )
    min_value, max_r, max_s = report.bounds
    return _envelope(
        "sweep-report",
        bounds={"min": min_value, "max_r": max_r, "max_s": max_s},
        mode=report.mode,
        cells=[_cell_as_dict(c) for c in report.cells],
        mismatches=[_cell_as_dict(c) for c in report.mismatches],
        families=per_family,
        summary={
            "cells": len(report.cells),
            "mismatches": len(report.mismatches),
            "violations": len(report.violations),
            "skipped": len(report.skipped),
        },
    )

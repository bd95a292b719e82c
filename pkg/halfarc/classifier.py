# -*- coding: utf-8 -*-
"""Basic pairs, their types, and the sweep over the parameter grid.

A pair is basic when the quotient by every nontrivial normal subgroup is
degenerate (K1, K2 or a cycle). Basic pairs are quasiprimitive (only K1),
biquasiprimitive (K1 and K2 with at least one K2) or of cycle type; the
latter are further split into oriented, unoriented and independent-cycle
subtypes.
"""

import collections
import concurrent.futures
import enum
import itertools
import logging

from halfarc import families, quotients
from halfarc.families import FamilyId
from halfarc.graphs import DegeneracyKind
from halfarc.permutations import (
    ElementCapExceeded,
    all_normal_subgroups,
    is_prime,
    minimal_normal_subgroups,
)
from halfarc.quotients import Orientation

logger = logging.getLogger(__name__)

#: Ways of choosing the normal subgroups to take quotients by
MODES = ("auto", "fast", "exhaustive")

#: Groups up to this order are analyzed exhaustively in ``auto`` mode
DEFAULT_EXHAUSTIVE_THRESHOLD = 500


class MixedOrientationError(RuntimeError):
    """Raised when a basic pair without independent cyclic quotients mixes orientations."""


class BasicType(enum.Enum):
    """Type of a basic pair."""

    QUASIPRIMITIVE = "quasiprimitive"
    BIQUASIPRIMITIVE = "biquasiprimitive"
    CYCLE = "cycle"
    NOT_BASIC = "not-basic"


class CycleSubtype(enum.Enum):
    """Subtype of a basic pair of cycle type."""

    ORIENTED = "oriented"
    UNORIENTED = "unoriented"
    INDEPENDENT_CYCLE = "independent-cycle"


class BasicReport(
    collections.namedtuple(
        "BasicReport",
        [
            "pair_id",
            "mode",
            "is_basic",
            "basic_type",
            "cycle_subtype",
            "witnesses",
            "not_basic_witness",
            "independent_pair",
            "stabilizer_order",
            "group_order",
            "vertex_count",
        ],
    )
):
    """Outcome of :func:`is_basic`."""

    __slots__ = ()

    @property
    def label(self):
        """Finest type available: the cycle subtype or the basic type."""
        if self.cycle_subtype is not None:
            return self.cycle_subtype.value
        return self.basic_type.value

    @property
    def is_independent_cycle_type(self):
        """True for basic pairs with an independent pair of cyclic quotients."""
        return self.cycle_subtype is CycleSubtype.INDEPENDENT_CYCLE


def resolve_mode(mode, group_order, threshold=DEFAULT_EXHAUSTIVE_THRESHOLD):
    """Turns ``auto`` into ``exhaustive`` or ``fast`` depending on the group order."""
    if mode not in MODES:
        raise ValueError("unknown mode {0!r} [use one of {1}]".format(mode, ", ".join(MODES)))
    if mode == "auto":
        return "exhaustive" if group_order <= threshold else "fast"
    return mode


def _quotient_reports(pair, subgroups):
    reports = []
    for subgroup in subgroups:
        if subgroup.is_trivial():
            continue
        report = quotients.normal_quotient(pair, subgroup)
        if report.in_og4 is False:
            msg = "non-degenerate quotient by a normal subgroup of order {0} fails [{1}]"
            raise quotients.QuotientInvariantError(msg.format(len(subgroup), report.og4_failure))
        reports.append(report)
    return reports


def _find_independent_pair(pair, reports):
    cyclic = [report for report in reports if report.degeneracy.is_cycle]
    for first, second in itertools.combinations(cyclic, 2):
        if first.kernel == second.kernel:
            continue
        if quotients.are_independent(pair, first, second):
            return (first, second)
    return None


def is_basic(
    pair, mode="exhaustive", pair_id=None, exhaustive_threshold=DEFAULT_EXHAUSTIVE_THRESHOLD
):
    """Decides whether a pair is basic and labels its type.

    In ``exhaustive`` mode the quotients by all nontrivial normal subgroups
    are computed. In ``fast`` mode only the minimal normal subgroups are used:
    the quotient by a larger normal subgroup is a quotient of the quotient by
    a minimal one, so degeneracy carries over. If no independent pair of
    cyclic quotients shows up among the minimal ones, the search for one is
    repeated over all normal subgroups.

    Args:
        pair (PairOG4): a verified pair
        mode (str): ``"exhaustive"``, ``"fast"`` or ``"auto"``
        pair_id (tuple or None): identifier copied into the report
        exhaustive_threshold (int): largest group order analyzed exhaustively
            in ``auto`` mode

    Returns:
        BasicReport: the verdict, the quotients it rests on and the type

    Raises:
        ElementCapExceeded: if the group is too large to enumerate
        QuotientInvariantError: if a quotient contradicts the structure theory
        MixedOrientationError: if a basic pair has oriented and unoriented
            cyclic quotients but no independent pair
    """
    group = pair.group
    mode = resolve_mode(mode, group.order(), exhaustive_threshold)
    if mode == "fast":
        subgroups = minimal_normal_subgroups(group)
    else:
        subgroups = all_normal_subgroups(group)
    witnesses = _quotient_reports(pair, subgroups)
    logger.debug("%s: %d quotients computed in %s mode", pair_id, len(witnesses), mode)

    common = dict(
        pair_id=pair_id,
        mode=mode,
        witnesses=tuple(witnesses),
        stabilizer_order=pair.facts.stabilizer_order,
        group_order=group.order(),
        vertex_count=pair.graph.vertex_count,
    )

    offending = [report for report in witnesses if not report.degeneracy.is_degenerate]
    if offending:
        return BasicReport(
            is_basic=False,
            basic_type=BasicType.NOT_BASIC,
            cycle_subtype=None,
            not_basic_witness=offending[0].subgroup,
            independent_pair=None,
            **common
        )

    kinds = {report.degeneracy.kind for report in witnesses}
    if kinds <= {DegeneracyKind.K1}:
        basic_type = BasicType.QUASIPRIMITIVE
    elif DegeneracyKind.CYCLE not in kinds:
        basic_type = BasicType.BIQUASIPRIMITIVE
    else:
        basic_type = BasicType.CYCLE

    subtype = independent = None
    if basic_type is BasicType.CYCLE:
        independent = _find_independent_pair(pair, witnesses)
        cyclic = [report for report in witnesses if report.degeneracy.is_cycle]
        if independent is None and mode == "fast":
            extended = _quotient_reports(pair, all_normal_subgroups(group))
            independent = _find_independent_pair(pair, extended)
            cyclic = [report for report in extended if report.degeneracy.is_cycle]
        if independent is not None:
            subtype = CycleSubtype.INDEPENDENT_CYCLE
        else:
            orientations = {report.orientation for report in cyclic}
            if orientations == {Orientation.ORIENTED}:
                subtype = CycleSubtype.ORIENTED
            elif orientations == {Orientation.UNORIENTED}:
                subtype = CycleSubtype.UNORIENTED
            else:
                msg = "basic pair {0} has both oriented and unoriented cyclic quotients"
                raise MixedOrientationError(msg.format(pair_id))

    return BasicReport(
        is_basic=True,
        basic_type=basic_type,
        cycle_subtype=subtype,
        not_basic_witness=None,
        independent_pair=independent,
        **common
    )


def is_odd_prime(number):
    """True for odd primes."""
    return number % 2 == 1 and is_prime(number)


def is_twice_odd_prime(number):
    """True for twice an odd prime."""
    return number % 2 == 0 and is_odd_prime(number // 2)


def _forms(value):
    """Parameter forms matched by ``value``: ``4``, ``p`` or ``2p``."""
    forms = set()
    if value == 4:
        forms.add("4")
    if is_odd_prime(value):
        forms.add("p")
    if is_twice_odd_prime(value):
        forms.add("2p")
    return forms


#: Parameter forms of the pairs that are basic of independent-cycle type
THEOREM_FORMS = {
    FamilyId.GAMMA_G: (("4", "p"), ("p", "4"), ("p", "p")),
    FamilyId.GAMMA_PLUS_G_PLUS: (("4", "4"), ("4", "2p"), ("2p", "4")),
    FamilyId.GAMMA_H: (("p", "4"), ("p", "2p")),
    FamilyId.GAMMA_PLUS_H_PLUS: (("4", "4"), ("4", "2p"), ("2p", "4"), ("2p", "2p")),
    FamilyId.GAMMA_2_G_2: (("p", "p"),),
}


def theorem_predicate(family, r, s):
    """Whether ``(r, s)`` has one of the forms listed for ``family``.

    ``p`` stands for any odd prime, independently for ``r`` and ``s``.

    Raises:
        InvalidParameters: if ``(r, s)`` violate the parity conditions of the family
    """
    families.check_parameters(family, r, s)
    r_forms, s_forms = _forms(r), _forms(s)
    return any(a in r_forms and b in s_forms for a, b in THEOREM_FORMS[family])


#: Necessary conditions on each parameter of a basic pair of independent-cycle type
NecessityCheck = collections.namedtuple("NecessityCheck", ["r_holds", "s_holds"])

_R_FORMS = {
    FamilyId.GAMMA_G: {"4", "p"},
    FamilyId.GAMMA_PLUS_G_PLUS: {"4", "2p"},
    FamilyId.GAMMA_H: {"4", "p"},
    FamilyId.GAMMA_PLUS_H_PLUS: {"4", "2p"},
    FamilyId.GAMMA_2_G_2: {"4", "p"},
}
_S_FORMS = {
    FamilyId.GAMMA_G: {"4", "p"},
    FamilyId.GAMMA_PLUS_G_PLUS: {"4", "2p"},
    FamilyId.GAMMA_H: {"4", "2p"},
    FamilyId.GAMMA_PLUS_H_PLUS: {"4", "2p"},
    FamilyId.GAMMA_2_G_2: {"4", "p"},
}


def lemma_constraints(family, r, s):
    """Necessary conditions on ``r`` and on ``s`` for a basic pair of the family.

    The cyclic normal subgroups generated by powers of ``mu`` (resp. ``nu``)
    force ``r`` (resp. ``s``) to be 4, an odd prime or twice an odd prime
    depending on the family.
    """
    return NecessityCheck(bool(_forms(r) & _R_FORMS[family]), bool(_forms(s) & _S_FORMS[family]))


def expected_minimal_normals(family, r, s):
    """Words generating the minimal normal subgroups of a family group, when known.

    Returns:
        tuple: ``(case, words)`` where ``case`` names the parameter form, e.g.
        ``"H(2p,4)"``, and ``words`` lists one generating word per minimal
        normal subgroup; ``(None, None)`` if no profile is known
    """
    r_forms, s_forms = _forms(r), _forms(s)
    name = family.group_name.split("(")[0]
    profiles = _PROFILES[family]
    for (a, b), words in profiles:
        if a in r_forms and b in s_forms:
            half = r // 2
            return (
                "{0}({1},{2})".format(name, a, b),
                tuple(w.format(p=half) for w in words),
            )
    return None, None


_PROFILES = {
    FamilyId.GAMMA_G: (
        (("p", "p"), ("mu", "nu")),
        (("4", "p"), ("mu^2", "nu")),
        (("p", "4"), ("mu", "nu^2")),
    ),
    FamilyId.GAMMA_PLUS_G_PLUS: (
        (("4", "4"), ("mu^2", "nu^2", "mu^2 nu^2")),
        (("4", "2p"), ("mu^2", "nu^2")),
        (("2p", "4"), ("mu^2", "nu^2")),
    ),
    FamilyId.GAMMA_H: (
        (("p", "4"), ("mu", "nu^2")),
        (("p", "2p"), ("mu", "nu^2")),
        (("2p", "2p"), ("mu^2", "mu^{p}", "nu^2")),
        (("2p", "4"), ("mu^2", "mu^{p}", "nu^2", "mu^{p} nu^2")),
        (("4", "2p"), ("mu^2", "nu^2")),
    ),
    FamilyId.GAMMA_PLUS_H_PLUS: (
        (("4", "4"), ("mu^2", "nu^2", "mu^2 nu^2")),
        (("4", "2p"), ("mu^2", "nu^2")),
        (("2p", "4"), ("mu^2", "nu^2")),
        (("2p", "2p"), ("mu^2", "nu^2")),
    ),
    FamilyId.GAMMA_2_G_2: ((("p", "p"), ("mu", "nu")),),
}

#: Outcome of the involution check on one normal subgroup of order 2
InvolutionCheck = collections.namedtuple(
    "InvolutionCheck", ["subgroup", "partner", "swaps_allowed_vertex"]
)

_ALLOWED_PARTNERS = {(2, 0), (2, 2), (0, 2)}


class LemmaProfile(
    collections.namedtuple(
        "LemmaProfile",
        [
            "pair_id",
            "case",
            "expected",
            "computed",
            "matches",
            "involution_checks_applicable",
            "involutions",
            "r_or_s_is_4",
        ],
    )
):
    """Minimal normal subgroups of a family pair compared with the known profile."""

    __slots__ = ()

    @property
    def holds(self):
        """False if any comparison or check that applies has failed."""
        if self.matches is False:
            return False
        if self.involution_checks_applicable and self.involutions:
            if not all(check.swaps_allowed_vertex for check in self.involutions):
                return False
            return self.r_or_s_is_4
        return True


def lemma_profiles(pair, report=None):
    """Checks the minimal normal subgroups of a family pair.

    The computed minimal normal subgroups are compared with the profile
    listed for the parameter form of the pair. For basic pairs of the first
    four families, every normal subgroup of order 2 must swap ``(0, 0)`` with
    one of ``(2, 0)``, ``(2, 2)`` or ``(0, 2)``, and one of ``r``, ``s`` must be 4.

    Args:
        pair (FamilyPair): the family pair
        report (BasicReport or None): a basicness verdict for the pair, computed
            in fast mode if missing and needed

    Returns:
        LemmaProfile: the check record
    """
    case, words = expected_minimal_normals(pair.family, pair.r, pair.s)
    computed = minimal_normal_subgroups(pair.group)
    expected = None
    matches = None
    if words is not None:
        expected = [pair.subgroup(word) for word in words]
        matches = set(expected) == set(computed)

    applicable = pair.strict and pair.family is not FamilyId.GAMMA_2_G_2
    if applicable and report is None:
        verified = quotients.verify_og4(pair.graph, pair.group)
        report = is_basic(verified, mode="fast", pair_id=pair.pair_id)
    applicable = applicable and report.is_basic

    involutions = []
    if applicable:
        origin = pair.vertex((0, 0))
        for subgroup in computed:
            if len(subgroup) != 2:
                continue
            involution = next(e for e in subgroup.elements if not e.is_identity())
            partner = pair.labels[involution(origin)]
            involutions.append(InvolutionCheck(subgroup, partner, partner in _ALLOWED_PARTNERS))

    return LemmaProfile(
        pair.pair_id,
        case,
        expected,
        computed,
        matches,
        applicable,
        involutions,
        4 in (pair.r, pair.s),
    )


class SweepCell(
    collections.namedtuple(
        "SweepCell",
        [
            "family",
            "r",
            "s",
            "realized",
            "swapped",
            "predicted",
            "computed",
            "agree",
            "is_basic",
            "label",
            "group_order",
            "stabilizer_order",
            "mode",
            "violations",
            "skipped",
        ],
    )
):
    """One ``(family, r, s)`` cell of a sweep."""

    __slots__ = ()


class SweepReport(collections.namedtuple("SweepReport", ["bounds", "mode", "cells"])):
    """All the cells of a sweep, ordered by family, ``r`` and ``s``."""

    __slots__ = ()

    @property
    def mismatches(self):
        """Cells where the computed verdict differs from the prediction."""
        return [cell for cell in self.cells if cell.agree is False]

    @property
    def violations(self):
        """Cells where a structural property check failed."""
        return [cell for cell in self.cells if cell.violations]

    @property
    def skipped(self):
        """Cells that could not be computed."""
        return [cell for cell in self.cells if cell.skipped]


def sweep_cells(max_r, max_s, min_value=3, family_ids=None):
    """Enumerates the valid cells of the grid.

    Cells of the ``H`` family with ``r`` even and ``s`` odd are realized with
    the parameters swapped.

    Returns:
        list of tuple: ``(family, r, s, realized_r, realized_s, swapped)``
    """
    cells = []
    for family in family_ids or list(FamilyId):
        for r in range(min_value, max_r + 1):
            for s in range(min_value, max_s + 1):
                realized, swapped = (r, s), False
                if family is FamilyId.GAMMA_H and r % 2 == 0 and s % 2 == 1:
                    realized, swapped = (s, r), True
                try:
                    families.check_parameters(family, *realized)
                except families.InvalidParameters:
                    continue
                cells.append((family, r, s, realized[0], realized[1], swapped))
    return cells


def check_pair_properties(pair, verified, report):
    """Structural checks for one family pair, returned as a list of messages."""
    violations = []
    if verified.facts.stabilizer_order != 2:
        violations.append("vertex stabilizer of order {0}".format(verified.facts.stabilizer_order))
    for witness in report.witnesses:
        if witness.degeneracy.is_cycle:
            check = quotients.stabilizer_kernel_relation(verified, witness)
            if not check.holds:
                violations.append(
                    "stabilizer-kernel relation fails on a {0} quotient".format(
                        witness.orientation.value
                    )
                )
    if report.is_basic:
        necessity = lemma_constraints(pair.family, pair.r, pair.s)
        if not (necessity.r_holds and necessity.s_holds):
            violations.append("basic pair violates the necessary conditions on r, s")
        profile = lemma_profiles(pair, report)
        if not profile.holds:
            violations.append("minimal normal subgroup profile check fails")
    return violations


def _evaluate_cell(task):
    family_value, r, s, mode, threshold, cap, checks = task
    family = FamilyId(family_value)
    result = dict(
        is_basic=None,
        label=None,
        independent=None,
        group_order=None,
        stabilizer_order=None,
        mode=None,
        violations=(),
        skipped=None,
    )
    try:
        pair = families.make_pair(family, r, s, cap=cap)
        verified = quotients.verify_og4(pair.graph, pair.group)
        primary = "exhaustive" if mode == "both" else mode
        report = is_basic(verified, primary, pair.pair_id, threshold)
        violations = check_pair_properties(pair, verified, report) if checks else []
        if mode == "both":
            fast = is_basic(verified, "fast", pair.pair_id, threshold)
            if fast.is_basic != report.is_basic or fast.label != report.label:
                violations.append("fast and exhaustive verdicts differ")
    except ElementCapExceeded as exc:
        result["skipped"] = str(exc)
        return result
    except quotients.NotOG4 as exc:
        result["violations"] = (str(exc),)
        return result
    result.update(
        is_basic=report.is_basic,
        label=report.label,
        independent=report.is_independent_cycle_type,
        group_order=report.group_order,
        stabilizer_order=report.stabilizer_order,
        mode=report.mode,
        violations=tuple(violations),
    )
    return result


def sweep(
    max_r,
    max_s,
    mode="auto",
    predicate=None,
    workers=1,
    cap=None,
    exhaustive_threshold=DEFAULT_EXHAUSTIVE_THRESHOLD,
    checks=True,
    family_ids=None,
    min_value=3,
):
    """Compares computed verdicts with the predicted ones over a grid of parameters.

    Args:
        max_r (int): largest ``r``
        max_s (int): largest ``s``
        mode (str): ``"auto"``, ``"fast"``, ``"exhaustive"`` or ``"both"``;
            the latter also checks that both modes agree
        predicate (callable or None): ``predicate(family, r, s)`` giving the
            predicted verdict, :func:`theorem_predicate` by default
        workers (int): number of worker processes
        cap (int or None): element cap for each group
        exhaustive_threshold (int): threshold of the ``auto`` mode
        checks (bool): run the structural property checks on each cell
        family_ids (list of FamilyId or None): restrict the families
        min_value (int): smallest ``r`` and ``s``

    Returns:
        SweepReport: one cell per valid ``(family, r, s)``
    """
    if min(max_r, max_s) < min_value:
        msg = "bounds must be at least {0} [got {1}, {2}]"
        raise ValueError(msg.format(min_value, max_r, max_s))
    if mode not in MODES + ("both",):
        raise ValueError("unknown mode {0!r}".format(mode))
    predicate = predicate or theorem_predicate
    cells = sweep_cells(max_r, max_s, min_value, family_ids)
    tasks = [
        (family.value, rr, ss, mode, exhaustive_threshold, cap, checks)
        for family, _, _, rr, ss, _ in cells
    ]
    logger.info("sweeping %d cells with %d worker(s)", len(tasks), workers)

    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_evaluate_cell, tasks))
    else:
        results = [_evaluate_cell(task) for task in tasks]

    records = []
    for (family, r, s, rr, ss, swapped), result in zip(cells, results):
        predicted = bool(predicate(family, rr, ss))
        computed = None
        agree = None
        if result["skipped"] is None and result["is_basic"] is not None:
            computed = bool(result["is_basic"] and result["independent"])
            agree = predicted == computed
        logger.debug(
            "%s (%d, %d): predicted=%s computed=%s", family.label, r, s, predicted, computed
        )
        records.append(
            SweepCell(
                family,
                r,
                s,
                (rr, ss),
                swapped,
                predicted,
                computed,
                agree,
                result["is_basic"],
                result["label"],
                result["group_order"],
                result["stabilizer_order"],
                result["mode"],
                result["violations"],
                result["skipped"],
            )
        )
    records.sort(key=lambda cell: (cell.family.value, cell.r, cell.s))
    return SweepReport((min_value, max_r, max_s), mode, tuple(records))

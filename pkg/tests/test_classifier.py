import pickle

import pytest

from halfarc import quotients
from halfarc.classifier import (
    BasicType,
    CycleSubtype,
    MODES,
    expected_minimal_normals,
    is_basic,
    is_odd_prime,
    is_twice_odd_prime,
    lemma_constraints,
    lemma_profiles,
    resolve_mode,
    sweep,
    sweep_cells,
    theorem_predicate,
)
from halfarc.families import FamilyId, InvalidParameters, make_pair
from halfarc.permutations import ElementCapExceeded, all_normal_subgroups
from halfarc.quotients import verify_og4


def analyze(family, r, s, mode="exhaustive"):
    pair = make_pair(family, r, s)
    verified = verify_og4(pair.graph, pair.group)
    return pair, is_basic(verified, mode=mode, pair_id=pair.pair_id)


def test_g35_is_independent_cycle(g35, g35_verified):
    report = is_basic(g35_verified, pair_id=g35.pair_id)
    assert report.pair_id == ("row1", 3, 5)
    assert report.mode == "exhaustive"
    assert report.is_basic
    assert report.basic_type is BasicType.CYCLE
    assert report.cycle_subtype is CycleSubtype.INDEPENDENT_CYCLE
    assert report.label == "independent-cycle"
    assert report.is_independent_cycle_type
    assert report.not_basic_witness is None
    assert (report.group_order, report.vertex_count, report.stabilizer_order) == (30, 15, 2)
    assert len(report.witnesses) == len(all_normal_subgroups(g35.group)) - 1 == 5

    first, second = report.independent_pair
    assert first.subgroup == g35.subgroup("mu")
    assert second.subgroup == g35.subgroup("nu")
    assert first.kernel.intersection(second.kernel).is_trivial()


def test_not_basic():
    pair, report = analyze(FamilyId.GAMMA_G, 3, 6)
    assert not report.is_basic
    assert report.basic_type is BasicType.NOT_BASIC
    assert report.label == "not-basic"
    assert report.cycle_subtype is None
    assert report.not_basic_witness is not None
    assert report.not_basic_witness in [w.subgroup for w in report.witnesses]


def test_grid_with_a_cube_factor_is_not_basic():
    pair, report = analyze(FamilyId.GAMMA_G, 9, 5)
    assert not report.is_basic
    assert report.not_basic_witness == pair.subgroup("mu^3")
    witness = next(w for w in report.witnesses if w.subgroup == pair.subgroup("mu^3"))
    assert not witness.degeneracy.is_degenerate
    assert witness.in_og4
    assert witness.graph.vertex_count == 15


def test_plus_graph_with_a_composite_factor_is_not_basic():
    _, report = analyze(FamilyId.GAMMA_PLUS_G_PLUS, 6, 10)
    assert not report.is_basic
    assert report.basic_type is BasicType.NOT_BASIC
    assert report.not_basic_witness is not None

@pytest.mark.parametrize(
    "family,r,s",
    [
        (FamilyId.GAMMA_G, 3, 4),
        (FamilyId.GAMMA_G, 5, 5),
        (FamilyId.GAMMA_PLUS_G_PLUS, 4, 4),
        (FamilyId.GAMMA_H, 3, 4),
        (FamilyId.GAMMA_H, 3, 10),
        (FamilyId.GAMMA_PLUS_H_PLUS, 4, 6),
        (FamilyId.GAMMA_2_G_2, 3, 5),
    ],
)
def test_fast_and_exhaustive_agree(family, r, s):
    _, exhaustive = analyze(family, r, s, "exhaustive")
    _, fast = analyze(family, r, s, "fast")
    assert exhaustive.label == fast.label == "independent-cycle"
    assert fast.mode == "fast"
    assert len(fast.witnesses) <= len(exhaustive.witnesses)


def test_resolve_mode():
    assert resolve_mode("auto", 30) == "exhaustive"
    assert resolve_mode("auto", 30, threshold=20) == "fast"
    assert resolve_mode("fast", 30) == "fast"
    assert MODES == ("auto", "fast", "exhaustive")
    with pytest.raises(ValueError):
        resolve_mode("quick", 30)


def test_auto_mode(g35_verified):
    assert is_basic(g35_verified, mode="auto").mode == "exhaustive"
    assert is_basic(g35_verified, mode="auto", exhaustive_threshold=10).mode == "fast"


def test_element_cap_propagates():
    pair = make_pair(FamilyId.GAMMA_G, 3, 5, cap=10)
    with pytest.raises(ElementCapExceeded):
        verify_og4(pair.graph, pair.group)


@pytest.mark.parametrize(
    "number,odd_prime,twice",
    [(2, False, False), (3, True, False), (4, False, False), (6, False, True), (9, False, False)],
)
def test_number_forms(number, odd_prime, twice):
    assert is_odd_prime(number) is odd_prime
    assert is_twice_odd_prime(number) is twice


@pytest.mark.parametrize(
    "family,r,s,expected",
    [
        (FamilyId.GAMMA_G, 3, 5, True),
        (FamilyId.GAMMA_G, 4, 7, True),
        (FamilyId.GAMMA_G, 9, 5, False),
        (FamilyId.GAMMA_G, 3, 6, False),
        (FamilyId.GAMMA_PLUS_G_PLUS, 4, 4, True),
        (FamilyId.GAMMA_PLUS_G_PLUS, 4, 6, True),
        (FamilyId.GAMMA_PLUS_G_PLUS, 6, 6, False),
        (FamilyId.GAMMA_H, 3, 4, True),
        (FamilyId.GAMMA_H, 5, 10, True),
        (FamilyId.GAMMA_H, 3, 8, False),
        (FamilyId.GAMMA_PLUS_H_PLUS, 6, 10, True),
        (FamilyId.GAMMA_PLUS_H_PLUS, 8, 4, False),
        (FamilyId.GAMMA_2_G_2, 3, 5, True),
        (FamilyId.GAMMA_2_G_2, 9, 3, False),
    ],
)
def test_theorem_predicate(family, r, s, expected):
    assert theorem_predicate(family, r, s) is expected


def test_theorem_predicate_checks_parameters():
    with pytest.raises(InvalidParameters):
        theorem_predicate(FamilyId.GAMMA_H, 4, 4)


def test_lemma_constraints():
    assert lemma_constraints(FamilyId.GAMMA_G, 3, 5) == (True, True)
    assert lemma_constraints(FamilyId.GAMMA_G, 9, 5) == (False, True)
    assert lemma_constraints(FamilyId.GAMMA_H, 3, 5).s_holds is False
    assert lemma_constraints(FamilyId.GAMMA_PLUS_G_PLUS, 8, 6) == (False, True)


@pytest.mark.parametrize(
    "family,r,s,case,words",
    [
        (FamilyId.GAMMA_H, 6, 4, "H(2p,4)", ("mu^2", "mu^3", "nu^2", "mu^3 nu^2")),
        (FamilyId.GAMMA_H, 6, 10, "H(2p,2p)", ("mu^2", "mu^3", "nu^2")),
        (FamilyId.GAMMA_H, 4, 6, "H(4,2p)", ("mu^2", "nu^2")),
        (FamilyId.GAMMA_H, 3, 4, "H(p,4)", ("mu", "nu^2")),
        (FamilyId.GAMMA_H, 3, 10, "H(p,2p)", ("mu", "nu^2")),
        (FamilyId.GAMMA_G, 9, 5, None, None),
    ],
)
def test_expected_minimal_normals(family, r, s, case, words):
    assert expected_minimal_normals(family, r, s) == (case, words)


@pytest.mark.parametrize("r,s", [(3, 4), (3, 10)])
def test_lemma_profiles_of_h(r, s):
    pair = make_pair(FamilyId.GAMMA_H, r, s)
    profile = lemma_profiles(pair)
    assert profile.matches is True
    assert profile.involution_checks_applicable
    assert profile.holds


@pytest.mark.parametrize("r,s", [(6, 4), (6, 10), (4, 6)])
def test_lemma_profiles_of_h_with_r_even(r, s):
    pair = make_pair(FamilyId.GAMMA_H, r, s, strict=False)
    profile = lemma_profiles(pair)
    assert profile.matches is True
    assert not profile.involution_checks_applicable
    assert profile.holds


def test_minimal_normals_of_g_plus_4_4():
    pair = make_pair(FamilyId.GAMMA_PLUS_G_PLUS, 4, 4)
    profile = lemma_profiles(pair)
    assert [len(s) for s in profile.computed] == [2, 2, 2]
    assert profile.matches
    assert len(profile.involutions) == 3
    assert all(check.swaps_allowed_vertex for check in profile.involutions)
    assert profile.r_or_s_is_4
    assert profile.holds


def test_sweep_cells():
    cells = sweep_cells(5, 5)
    assert len(cells) == 18
    assert (FamilyId.GAMMA_H, 4, 3, 3, 4, True) in cells
    assert (FamilyId.GAMMA_H, 3, 4, 3, 4, False) in cells
    assert not [c for c in cells if c[0] is FamilyId.GAMMA_2_G_2 and 4 in c[1:3]]


def test_sweep_of_first_family():
    report = sweep(6, 6, mode="exhaustive", family_ids=[FamilyId.GAMMA_G])
    assert report.bounds == (3, 6, 6)
    assert not report.mismatches
    assert not report.violations
    assert not report.skipped
    by_parameters = {(c.r, c.s): c for c in report.cells}
    assert by_parameters[(3, 5)].computed is True
    assert by_parameters[(3, 6)].predicted is False
    assert by_parameters[(3, 6)].is_basic is False
    assert all(c.stabilizer_order == 2 for c in report.cells)


def test_sweep_with_wrong_predicate():
    report = sweep(
        4, 4, family_ids=[FamilyId.GAMMA_H], predicate=lambda family, r, s: False, checks=False
    )
    assert [(c.r, c.s) for c in report.mismatches] == [(3, 4), (4, 3)]
    assert all(c.realized == (3, 4) for c in report.cells)


def test_sweep_records_skipped_cells():
    report = sweep(3, 3, family_ids=[FamilyId.GAMMA_2_G_2], cap=10)
    assert len(report.skipped) == 1
    assert report.cells[0].computed is None
    assert report.cells[0].agree is None


def test_sweep_bounds():
    with pytest.raises(ValueError):
        sweep(2, 5)
    with pytest.raises(ValueError):
        sweep(5, 5, mode="quick")


def test_sweep_both_modes_agree():
    report = sweep(5, 5, mode="both", family_ids=[FamilyId.GAMMA_2_G_2])
    assert not report.violations
    assert report.mode == "both"


def test_sweep_of_small_grid_in_both_modes():
    report = sweep(9, 9, mode="both")
    assert report.cells
    assert not report.mismatches
    assert not report.violations
    assert not report.skipped
    assert all(cell.agree for cell in report.cells)


def test_sweep_cells_pickle():
    report = sweep(3, 4, family_ids=[FamilyId.GAMMA_H], checks=False)
    assert pickle.loads(pickle.dumps(report)) == report


def test_sweep_with_workers():
    serial = sweep(5, 5, family_ids=[FamilyId.GAMMA_2_G_2], workers=1)
    parallel = sweep(5, 5, family_ids=[FamilyId.GAMMA_2_G_2], workers=2)
    assert serial == parallel


@pytest.mark.slow
def test_full_sweep():
    report = sweep(16, 16, workers=4)
    assert not report.mismatches
    assert not report.violations
    assert not report.skipped


def test_failed_quotient_membership_is_raised_by_classifier(g35_verified, monkeypatch):
    compute = quotients.normal_quotient

    def failing(pair, subgroup):
        report = compute(pair, subgroup)
        return report._replace(in_og4=False, og4_failure="arc-transitive")

    monkeypatch.setattr(quotients, "normal_quotient", failing)
    with pytest.raises(quotients.QuotientInvariantError) as excinfo:
        is_basic(g35_verified)
    assert "arc-transitive" in str(excinfo.value)

import pytest
from conftest import close

from softhybrid.cli import fmt_measure
from softhybrid.core import CardinalPair, absolute, complement, make_set, null
from softhybrid.errors import EmptyInput, MixedSpaces
from softhybrid.measures import (
    EvaluationDomain,
    MeasurePair,
    cardinality,
    depth,
    depth_norm,
    entropy,
    entropy_terms,
    fuzzy_entropy,
    fuzzy_similarity,
    fuzzy_subsethood,
    rank_representatives,
    sigma_count,
    similarity,
    subsethood,
)
from softhybrid.oracle import default_spaces, oracle_measure

U, E = default_spaces(4, 5)


def shown(pair):
    return tuple(fmt_measure(v) for v in pair)


def test_sigma_count(paper):
    assert sigma_count(paper["F_A_fs"].row("e2")) == pytest.approx(1.2)
    assert sigma_count({}) == 0
    assert sigma_count({x: 1.0 for x in U}) == 5


def test_scalar_forms():
    assert fuzzy_entropy({"e": 0.5}) == 1
    assert fuzzy_entropy({}) == 0
    assert fuzzy_similarity({"x": 0.3}, {"x": 0.3}) == 1
    assert fuzzy_similarity({}, {}) == 1
    assert fuzzy_subsethood({}, {"x": 1}) == 1
    a = {"e2": 0.2, "e3": 0.6, "e4": 1.0}
    b = {"e1": 0.3, "e2": 0.2, "e3": 0.6}
    assert fuzzy_subsethood(a, b) == pytest.approx(0.8 / 1.8)


@pytest.mark.parametrize(
    "name, expected",
    [("F_A_s", (3, 5)), ("F_A_fs", (2, 1.9)), ("F_A_fps", (1.8, 10)), ("F_A_fpfs", (0.6, 1.5))],
)
def test_cardinality_fixtures(paper, name, expected):
    assert close(cardinality(paper[name]), expected)


@pytest.mark.parametrize(
    "name, raw, display",
    [
        ("G_B_s", (0, 0), ("0.00", "0.00")),
        ("G_B_fps", (0.9 / 2.1, 0), ("0.42", "0.00")),
        ("G_B_fs", (0, 2.4 / 5.6), ("0.00", "0.42")),
        ("G_B_fpfs", (1.0 / 2.0, 1.3 / 2.7), ("0.50", "0.48")),
    ],
)
def test_entropy_fixtures(paper, name, raw, display):
    ent = entropy(paper[name], EvaluationDomain.SUPPORT)
    assert close(ent, raw)
    assert shown(ent) == display


def test_entropy_domains_differ(paper):
    s = paper["G_B_fps"]
    # the grid also sees e4 (grade 0) and every unstored cell
    assert entropy(s, "grid").p == pytest.approx(0.9 / 3.1)
    assert entropy(s, "support").p == pytest.approx(0.9 / 2.1)


def test_entropy_of_half_set_is_one():
    s = make_set(None, {e: 0.5 for e in E}, {e: {x: 0.5 for x in U} for e in E}, U, E)
    assert tuple(entropy(s)) == (1, 1)
    assert tuple(entropy(s, "grid")) == (1, 1)


def test_entropy_terms_grid(paper):
    (pn, pd), (vn, vd) = entropy_terms(paper["G_B_fpfs"], "grid")
    assert (pn, pd) == pytest.approx((1.0, 3.0))
    assert vn + vd == pytest.approx(20)


@pytest.mark.parametrize(
    "f, g, raw, display",
    [
        ("F_A_s", "G_B_s", (3 / 4, 5 / 13), ("0.75", "0.38")),
        ("F_A_fps", "G_B_fps", (0.8 / 2.1, 3 / 12), ("0.38", "0.25")),
        ("F_A_fs", "G_B_fs", (2 / 3, 0.7 / 4.6), ("0.66", "0.15")),
        ("F_A_fpfs", "G_B_fpfs", (0.6 / 1.2, 0.5 / 2.5), ("0.50", "0.20")),
    ],
)
def test_similarity_fixtures(paper, f, g, raw, display):
    sim = similarity(paper[f], paper[g])
    assert close(sim, raw)
    assert shown(sim) == display
    assert close(similarity(paper[g], paper[f]), raw)


def test_similarity_fs_parameter_erratum(paper):
    # A = {e2, e4}, B = {e1, e2, e4}: |A n B| / |A u B| = 2/3; 0.60 is a misprint
    p = similarity(paper["F_A_fs"], paper["G_B_fs"]).p
    assert p == pytest.approx(2 / 3, abs=1e-9)
    assert fmt_measure(p) != "0.60"


SUBSETHOOD = [
    ("F_A_s", "G_B_s", (1, 1), ("1.00", "1.00")),
    ("G_B_s", "F_A_s", (3 / 4, 5 / 13), ("0.75", "0.38")),
    ("F_A_fps", "G_B_fps", (0.8 / 1.8, 0.30), ("0.44", "0.30")),
    ("G_B_fps", "F_A_fps", (0.8 / 1.1, 3 / 5), ("0.72", "0.60")),
    ("F_A_fs", "G_B_fs", (1, 0.7 / 1.9), ("1.00", "0.36")),
    ("G_B_fs", "F_A_fs", (2 / 3, 0.7 / 3.4), ("0.66", "0.20")),
    ("F_A_fpfs", "G_B_fpfs", (1, 0.5 / 1.5), ("1.00", "0.33")),
    ("G_B_fpfs", "F_A_fpfs", (0.6 / 1.2, 0.5 / 1.5), ("0.50", "0.33")),
]


@pytest.mark.parametrize("f, g, raw, display", SUBSETHOOD)
def test_subsethood_fixtures(paper, f, g, raw, display):
    sub = subsethood(paper[f], paper[g])
    assert close(sub, raw)
    assert shown(sub) == display


def test_subsethood_fps_value_erratum(paper):
    # 3 of F's 10 value cells lie in G; the published 0.33 does not follow from the sets
    assert subsethood(paper["F_A_fps"], paper["G_B_fps"]).v == pytest.approx(0.30, abs=1e-9)


def test_measure_pair_range():
    with pytest.raises(ValueError):
        MeasurePair(1.5, 0)


def test_null_conventions():
    z = null(U, E)
    assert tuple(similarity(z, z)) == (1, 1)
    assert tuple(subsethood(z, absolute(U, E))) == (1, 1)
    assert tuple(entropy(z)) == (0, 0)


def test_depth_fixture(depth_ws):
    d = depth(depth_ws["F_A"])
    assert close(cardinality(depth_ws["F_A"]), (0.7, 3.5))
    assert close(d, (3.3, 16.5))
    assert depth_norm(d) == pytest.approx(9.90)
    assert depth_norm(CardinalPair(2.9, 16.8)) == pytest.approx(9.85)
    assert depth_norm(CardinalPair(0, 0)) == 0


def test_depth_extremes():
    assert tuple(depth(absolute(U, E))) == (0, 0)
    assert tuple(depth(null(U, E))) == (4, 20)


def test_rank_fixture(depth_ws):
    ranked = rank_representatives(depth_ws.sets)
    assert [r.name for r in ranked] == ["G_B", "F_A", "K_D", "H_C"]
    assert close([r.norm for r in ranked], [9.85, 9.90, 10.10, 10.25])
    assert [r.rank for r in ranked] == [1, 2, 3, 4]


def test_rank_ties_keep_input_order(depth_ws):
    s = depth_ws["H_C"]
    ranked = rank_representatives([("b", s), ("a", s)])
    assert [r.name for r in ranked] == ["b", "a"]
    assert ranked[0].tie_group == ranked[1].tie_group


def test_rank_single_and_empty(depth_ws):
    assert rank_representatives({"only": depth_ws["F_A"]})[0].rank == 1
    with pytest.raises(EmptyInput):
        rank_representatives({})


def test_rank_rejects_mixed_spaces(depth_ws):
    u, e = default_spaces(1, 1)
    with pytest.raises(MixedSpaces, match="'z'"):
        rank_representatives([("a", depth_ws["F_A"]), ("z", absolute(u, e))])


def test_complement_entropy_grid(paper):
    for s in paper.sets.values():
        assert close(entropy(s, "grid"), entropy(complement(s), "grid"))


def test_oracle_agrees_on_paper(paper):
    assert close(oracle_measure("card", [paper["F_A_s"]]), (3, 5))
    assert shown(oracle_measure("sim", [paper["F_A_fpfs"], paper["G_B_fpfs"]])) == ("0.50", "0.20")

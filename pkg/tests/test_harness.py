import pytest

from signpart.harness import (
    EXPLORATION_ALIASES,
    EXPLORATIONS,
    SUITE_ALIASES,
    SUITES,
    RunConfig,
    default_pairs,
    one_two_six_series,
    run_exploration,
    run_suite,
)
from signpart.partitions import partition_table
from signpart.sets import Explicit
from signpart.sums import s_direct_table

SMALL = {
    "oracle": RunConfig(N=20),
    "divisor-identities": RunConfig(N=40),
    "cross-method": RunConfig(N=60, K=3),
    "disjoint-union": RunConfig(N=30),
    "odd-parts": RunConfig(N=80),
    "scaled-union": RunConfig(N=80),
    "initial-segments": RunConfig(N=80),
    "powers": RunConfig(N=80),
    "two-element": RunConfig(pairs=[(1, 2), (2, 3), (3, 4)]),
    "one-two-six": RunConfig(N=120),
    "zeta4": RunConfig(N=60),
}


def test_every_suite_has_a_small_config():
    assert set(SMALL) == set(SUITES)
    assert set(SUITE_ALIASES.values()) <= set(SUITES)
    assert set(EXPLORATION_ALIASES.values()) == set(EXPLORATIONS)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_small_bounds(name):
    rep = run_suite(name, SMALL[name])
    assert rep.checks and rep.passed, [c for c in rep.checks if not c.passed][:3]
    d = rep.to_dict()
    assert "wall_time" not in d and d["passed"]


def test_suite_reports_are_deterministic():
    a = run_suite("thm38", SMALL["two-element"]).to_dict()
    b = run_suite("two-element", SMALL["two-element"]).to_dict()
    assert a == b


def test_unknown_names_rejected():
    with pytest.raises(KeyError):
        run_suite("nope", RunConfig())
    with pytest.raises(KeyError):
        run_exploration("9.9", RunConfig())


def test_odd_suite_rejects_even_sets():
    with pytest.raises(ValueError):
        run_suite("odd-parts", RunConfig(specs=["explicit:1,2"], N=10))


def test_one_two_six_note_records_n3():
    rep = run_suite("126", SMALL["one-two-six"])
    assert any("S_0(3) = 0" in n for n in rep.notes)


def test_one_two_six_series_k0_matches():
    s = s_direct_table(partition_table(Explicit((1, 2, 6)), 80), 0)
    assert one_two_six_series(80, 0) == list(s.row(0))
    with pytest.raises(ValueError):
        one_two_six_series(10, 2)


def test_default_pairs():
    pairs = default_pairs(9)
    assert len(pairs) == 27
    assert (2, 3) in pairs and (2, 4) not in pairs


@pytest.mark.parametrize("name,cfg", [
    ("4.1", RunConfig(N=200, specs=["explicit:2,3"])),
    ("4.2", RunConfig(N=200)),
    ("4.3", RunConfig(N=400)),
    ("4.4", RunConfig(N=200, ms=[3])),
    ("4.5", RunConfig(N=100, d=[4])),
    ("4.6", RunConfig(N=200, ms=[1])),
])
def test_explorations_produce_reports(name, cfg):
    out = run_exploration(name, cfg)
    assert out["evidence"] == "evidence at bounds; not a proof"
    assert out["exploration"] == EXPLORATION_ALIASES[name]

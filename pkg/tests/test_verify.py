import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpec.errors import InstanceTooLargeError, PartialColoringError
from fpec.generators import cycle, random_map, theta, two_pentagons, wheel
from fpec.partitions import bell_numbers, restricted_growth_search
from fpec.planemap import BundledMultigraph
from fpec.qfo import QfoColoring
from fpec.verify import (
    check_facially_proper,
    check_fpe,
    check_odd,
    check_quasi_facially_odd,
    exact_chi_fp,
)
from oracles import brute_chi_fp, fpe_ok


def colors(*cs):
    return dict(enumerate(cs))


def walks(g):
    return [list(f.edges) for f in g.faces]


def test_facially_proper_examples():
    c3 = cycle(3)
    assert check_facially_proper(c3, colors(1, 2, 3)).passed
    r = check_facially_proper(c3, colors(1, 1, 2))
    assert not r.passed
    assert len({tuple(v["edges"]) for v in r.violations}) == 1
    assert check_facially_proper(cycle(4), colors(1, 2, 1, 2)).passed


def test_fpe_examples():
    c4 = cycle(4)
    assert check_fpe(c4, colors(1, 2, 3, 4)).passed
    r = check_fpe(c4, colors(1, 2, 1, 2))
    assert not r.passed and {v["count"] for v in r.violations} == {2}
    assert check_fpe(cycle(5), colors(1, 2, 3, 4, 5)).passed
    g = two_pentagons()
    assert check_fpe(g, {e: e + 1 for e in g.edges}).passed


def test_partial_coloring_rejected():
    with pytest.raises(PartialColoringError):
        check_fpe(cycle(3), colors(1, 2))
    with pytest.raises(PartialColoringError):
        check_odd(BundledMultigraph.from_edges({0: (0, 1)}), {})


def test_quasi_examples():
    c5 = cycle(5)
    assert check_quasi_facially_odd(c5, colors(1, 2, 1, 3, 4)).passed
    assert check_quasi_facially_odd(c5, QfoColoring(colors(1, 2, 1, 3, 4), (frozenset(range(5)),))).passed
    assert not check_quasi_facially_odd(c5, colors(1, 2, 1, 2, 3)).passed
    # adjacent repeated color violates both properness and the block rule
    assert not check_quasi_facially_odd(c5, colors(1, 1, 2, 3, 4)).passed
    c9 = cycle(9)
    col = {e: 1 + e % 3 for e in c9.edges}
    r = check_quasi_facially_odd(c9, col, [])
    assert r.passed


def test_quasi_rejects_fake_block():
    with pytest.raises(ValueError):
        check_quasi_facially_odd(cycle(6), colors(1, 2, 1, 2, 1, 2), [range(5)])


def test_quasi_without_waiver_sees_c5_parity():
    c5 = cycle(5)
    # granting no waiver exposes the even count of color 1 across the faces
    assert not check_quasi_facially_odd(c5, colors(1, 2, 1, 3, 4), []).passed


def test_quasi_palette_limit():
    c6 = cycle(6)
    col = colors(1, 2, 3, 4, 5, 6)
    assert not check_quasi_facially_odd(c6, col).passed
    assert check_quasi_facially_odd(c6, col, max_colors=None).passed


def test_odd_examples():
    k2 = BundledMultigraph.from_edges({0: (0, 1)})
    assert check_odd(k2, {0: 1}).passed
    c4 = BundledMultigraph.from_edges({i: (i, (i + 1) % 4) for i in range(4)})
    assert check_odd(c4, {0: 1, 1: 2, 2: 1, 3: 2}).passed
    r = check_odd(c4, dict.fromkeys(range(4), 1))
    assert not r.passed and {v["degree"] for v in r.violations} == {2}


def test_report_serializes():
    r = check_fpe(cycle(4), colors(1, 2, 1, 2))
    d = r.to_dict()
    assert d["verdict"] == "fail" and d["violations"]
    assert check_fpe(cycle(3), colors(1, 2, 3)).to_dict() == {"verdict": "pass", "violations": []}


# -- exact index ----------------------------------------------------------------


def test_exact_chi_fp_values():
    assert exact_chi_fp(cycle(4)) == 4 == brute_chi_fp(walks(cycle(4)))
    assert exact_chi_fp(cycle(5)) == 5 == brute_chi_fp(walks(cycle(5)))
    assert exact_chi_fp(two_pentagons()) == 10


@pytest.mark.parametrize("g", [cycle(2), cycle(3), cycle(6), theta(3), theta(4), wheel(3)])
def test_exact_chi_fp_matches_brute_force(g):
    assert exact_chi_fp(g) == brute_chi_fp(walks(g))


def test_exact_chi_fp_brute_force_random():
    for seed in range(12):
        g = random_map(3 + seed % 4, seed)
        assert exact_chi_fp(g) == brute_chi_fp(walks(g))


def test_exact_chi_fp_monotone_and_limited():
    g = two_pentagons()
    assert exact_chi_fp(g, max_blocks=9) is None
    for k in (10, 11, 12):
        assert exact_chi_fp(g, max_blocks=k) == 10
    with pytest.raises(InstanceTooLargeError):
        exact_chi_fp(cycle(13))


def test_exact_chi_fp_is_attained():
    for g in (cycle(7), wheel(4)):
        k = exact_chi_fp(g)
        witness = None
        ids = g.edges
        for combo in itertools.product(range(k), repeat=len(ids)):
            col = dict(zip(ids, combo))
            if fpe_ok(walks(g), col):
                witness = col
                break
        assert witness is not None and check_fpe(g, witness).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.integers(0, 5000), st.permutations(range(1, 10)))
def test_checkers_invariant_under_relabeling(n, seed, perm):
    g = random_map(n, seed)
    base = {e: 1 + (e * 7 + seed) % 5 for e in g.edges}
    relabeled = {e: perm[c - 1] for e, c in base.items()}
    assert check_fpe(g, base).passed == check_fpe(g, relabeled).passed
    assert check_facially_proper(g, base).passed == check_facially_proper(g, relabeled).passed


def test_partitions():
    assert bell_numbers(12)[10] == 115_975
    assert bell_numbers(12)[12] == 4_213_597
    count = 0

    def tally(assign):
        nonlocal count
        count += 1
        return False

    restricted_growth_search(6, 6, checks_at=[()] * 5 + [(tally,)])
    assert count == bell_numbers(6)[6]

"""Smoke tests for the _gmod python module.

These mirror a few identities already covered exactly by the C++ suites; the
point here is that the bindings round-trip values faithfully.
"""

import pytest

import _gmod as g


def test_ring_family():
    assert g.line_r().name == "Z[x]"
    r = g.hyper(3)
    assert r.grank == 2
    assert r.moduli == [0, 3]
    assert g.chart(2, 4).characteristic == 0
    assert g.div_z(6).characteristic == 6


def test_groups():
    z = g.free_group(1)
    assert z.free_rank == 1 and z.torsion == []
    c6 = g.cyclic_group(6)
    assert c6.torsion == [6]
    s = g.direct_sum(g.cyclic_group(4), g.cyclic_group(6))
    assert s.torsion == [2, 12]
    assert g.cyclic_group(1).is_trivial()


def test_line_pieces_and_twist():
    r = g.line_r()
    o = g.free_module(r, [[0]])
    t = g.piece_table(o, (-2, 3))
    assert set(t) == {(0,), (1,), (2,), (3,)}
    assert all(v == g.free_group(1) for v in t.values())
    tw = g.twist(o, [2])
    assert set(g.piece_table(tw, (-2, 3))) == {(2,), (3,)}
    assert g.degree_piece(o, [-1]).is_trivial()


def test_graded_table_functors():
    a = {0: g.free_group(1), 1: g.cyclic_group(3)}
    assert g.bt_pull(a, 2) == {0: g.free_group(1), 2: g.cyclic_group(3)}
    assert g.bt_push(g.bt_pull(a, 2), 2) == a
    assert g.gt_twist(a, 5) == {5: g.free_group(1), 6: g.cyclic_group(3)}


def test_cover_pushforward():
    r = g.line_r()
    o = g.free_module(r, [[0]])
    up = g.theta_pull(o, 2)
    assert up.ring.name == "Z[x]"
    down = g.theta_push(up, 2, (-3, 3))
    # pushing the pullback along the zero sector returns the line itself
    assert g.piece_table(down, (0, 3)) == g.piece_table(o, (0, 3))


def test_insertion_extraction():
    l, i = 3, 1
    m = g.wedge_right(i, {0: g.cyclic_group(5)}, l)
    # extraction at the opposite index recovers the table in spot 0
    spots = g.wedge_left(-i, m, l, (-4, 4))
    assert spots == {0: {0: g.cyclic_group(5)}}
    assert g.wedge_left(-i + 1, m, l, (-4, 4)).get(0, {}) == {}


def test_kernel_transform_is_twist():
    l, n = 2, 1
    r = g.line_r()
    o = g.free_module(r, [[0]])
    k = g.tau_module(l, n, n, (-6, 6))
    h = g.fm_transform_homology(k, o, (-3, 3))
    assert set(h) == {0}
    # equal indices act by the degree-n twist
    assert h[0] == g.piece_table(g.twist(o, [n]), (-3, 3))


def test_step_cokernels():
    assert g.tau_step_t_coker(2, 1) != {}
    assert g.tau_step_i_coker(2, 1) != {}


def test_graded_ext():
    r = g.line_r()
    o = g.free_module(r, [[0]])
    sky = g.tau_step_i_coker(2, 0)  # just to exercise a table path
    assert isinstance(sky, dict)
    ext0, certified = g.graded_ext(o, o, 0, (-4, 4))
    assert certified and ext0 == g.free_group(1)
    ext1, certified = g.graded_ext(o, o, 1, (-4, 4))
    assert certified and ext1.is_trivial()


def test_suite_api():
    names = g.suite_names()
    assert "lemma-key" in names and "alt-conventions" in names
    cfg = g.SuiteConfig()
    cfg.ls = [2]
    cfg.depth = 4
    reports = g.run_suite("lemma-key", cfg)
    assert reports and all(r.status == "pass" for r in reports)
    assert all(r.witness for r in reports)
    j1 = g.report_json("lemma-key", cfg)
    j2 = g.report_json("lemma-key", cfg)
    assert j1 == j2 and '"schema": 1' in j1


def test_suite_rejects_bad_config():
    cfg = g.SuiteConfig()
    cfg.depth = 0
    with pytest.raises(ValueError):
        g.run_suite("lemma-key", cfg)
    with pytest.raises(ValueError):
        g.run_suite("no-such-suite", g.SuiteConfig())

import pytest

import skewforge


def test_gwa_commutes_shift_past_t():
    w = skewforge.preset("gwa(t)")
    assert w.label == "gwa(t,1)"
    x = skewforge.parse(w, "s(1)*t")
    assert str(x) == "(t - 1)*shift(-1)"
    assert x == skewforge.parse(w, "(t - 1)*s(1)")
    assert (x - x).is_zero


def test_canonical_text_round_trips():
    s = skewforge.preset("sym(2)")
    x = skewforge.parse(s, "x1/(x2 + 1)*shift(1,0) + 3")
    assert skewforge.parse(s, str(x)) == x
    assert len(x.terms) == 2


def test_gt2_relations_hold():
    g = skewforge.preset("gt(2)")
    assert g.group_order == 2
    assert g.variables == ["l11", "l21", "l22"]
    checks = skewforge.gt_relations(g)
    assert checks
    e_plus = skewforge.gt_generator(g, 1, 1)
    e_minus = skewforge.gt_generator(g, 1, -1)
    assert e_plus.is_invariant and e_minus.is_invariant
    h = skewforge.commutator(e_plus, e_minus)
    assert h == skewforge.parse(g, "l21 + l22 - 2*l11 - 1")


def test_hecke_product():
    s = skewforge.preset("sym(2)")
    assert skewforge.hecke_mul(s, "shift(1,0)", "shift(1,0)") == "1*b[shift(0,2)] + 2*b[shift(1,1)]"
    classes = skewforge.tensor_classes(s, "shift(1,0)", "shift(1,0)")
    assert classes == [("shift(0,2)", 1, 2), ("shift(1,1)", 2, 1)]


def test_gk_bound():
    assert skewforge.gk_bound(skewforge.preset("gt(2)")) == (3, 1, 4)


def test_errors_surface_as_exceptions():
    s = skewforge.preset("sym(2)")
    with pytest.raises(skewforge.SkewforgeError, match="6"):
        skewforge.parse(s, "[x1 * ")
    with pytest.raises(skewforge.SkewforgeError):
        skewforge.preset("nope(3)")


def test_suite_report():
    report = skewforge.run_suite("gwa", a="t")
    assert report["failed"] == 0
    assert report["passed"] == len(report["checks"])
    assert "gl-relations" in skewforge.suite_names()

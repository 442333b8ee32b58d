import pytest

import palw


def test_widths():
    z4z4 = palw.direct_product(palw.cyclic(4), palw.cyclic(4))
    assert palw.palindromic_width(z4z4).width == 2
    assert palw.palindromic_width(z4z4, palw.Notion.group).width == 1
    assert palw.palindromic_width(palw.cyclic(2)).layers == [1, 2]


def test_group_from_spec_and_errors():
    g = palw.group_from_spec('{"kind": "dihedral", "n": 4}')
    assert g.order == 8 and not g.is_abelian()
    with pytest.raises(palw.InputError):
        palw.group_from_spec('{"kind": "klein"}')
    with pytest.raises(ValueError):
        palw.cyclic(0)
    with pytest.raises(palw.CapExceeded):
        palw.palindromic_width(palw.cyclic(100), state_cap=10)


def test_quasi_length():
    assert [palw.tr(m) for m in (0, 4, -7, 2)] == [0, 1, -1, -1]
    assert palw.ql("x2^-3 x1^-3 (x2 x1)^3") == 6
    assert palw.reduce_word("x x^-1 y") == "x2"


def test_wreath_certificates():
    g = palw.fink_wreath()
    q60 = palw.q_sequence(g, 60)
    assert palw.delta(q60) == 360
    assert palw.certify_commutator_length(g, q60) == 4
    assert palw.certify_commutator_length(g, palw.q_sequence(g, 1)) is None
    e = g.parse("[x; y; 1; 1; 1; 1] c")
    assert g.parse(g.to_text(e)) == e
    assert g.multiply(e, g.invert(e)) == g.identity()


def test_decompose():
    cert = palw.decompose("[ [x,y]; 1; 1; 1; 1; 1 ] 1")
    assert cert.factor_count == 1
    assert cert.all_palindromic and cert.product_matches
    assert all(palw.is_word_palindrome(f) for f in cert.factors)
    assert palw.decompose("[1; 1; 1; 1; 1; 1] 1").factor_count == 0


def test_nilprod():
    assert palw.nilprod_group([[2], [2]]).order == 8
    r = palw.nilprod_bounds([[2], [2]])
    assert (r.lower, r.upper, r.branch) == (1, 8, "i")
    assert r.lower <= r.exact <= r.upper
    assert palw.check_sandwich(r)
    assert palw.width_bounds([1, 1, 1], [1, 1, 1]).upper == 12

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bits_mul_mod, eval_poly, gf_inv, gf_pow
from stablyfree.algebra import (
    GF2n,
    catalog,
    divide_exact,
    is_unit,
    random_element,
    reinterpret,
    ring_inverse,
)
from stablyfree.errors import NotAUnit, NotDivisible, ParseError, PresentationMismatch


def test_catalog_names(cat):
    assert set(cat.rings) == {"K", "POLY_ST", "POLY_X", "POLY_AXY", "R", "A", "RP", "RPS"}
    assert cat.R.vars == ("a", "x", "y")
    assert cat.RPS.vars == ("a", "x", "y", "t", "s")


@pytest.mark.parametrize("name", ["K", "POLY_ST", "POLY_X", "POLY_AXY", "R", "A", "RP", "RPS"])
def test_confluence(cat, name):
    ring = cat.rings[name]
    pairs = ring.critical_pairs()
    assert all(a == b for _, _, _, a, b in pairs)
    assert ring.is_confluent()


def test_A_has_three_overlaps(cat):
    assert len(cat.A.critical_pairs()) == 3


@pytest.mark.parametrize("name", ["R", "A", "RP", "RPS"])
def test_random_rewriting_agrees_with_normal_form(cat, name):
    ring = cat.rings[name]
    rng = random.Random(1)
    for _ in range(100):
        raw = {}
        for exp in rng.sample(ring.monomials(5), 4):
            raw[exp] = ring.field.random_element(rng, 2)
        assert ring.reduce_randomly(raw, rng) == ring.normalize(raw)


def test_R_rewrites(cat):
    R = cat.R
    a, x, y = R.gens()
    assert a * a == x * y
    assert a * (a * a) == a * x * y
    assert str(a**4) == "x^2*y^2"


def test_A_products(cat):
    A = cat.A
    s, t = A.gens()
    assert (1 + s) * (1 + t) == 1 + s + t
    assert (s * t).is_zero() and (s * s).is_zero() and (t * t).is_zero()


def test_RP_rule(cat):
    RP = cat.RP
    assert RP.parse("t^2") == RP.parse("t*a^2 + t*x*y")


def test_inverses_in_A(cat, u):
    A = cat.A
    s, t = A.gens()
    assert ring_inverse(1 + s) == 1 + s
    assert ring_inverse(1 + s * u) == 1 + s * u
    assert ring_inverse(A.const(u) + t) * (A.const(u) + t) == A.one
    with pytest.raises(NotAUnit):
        ring_inverse(s)


def test_non_units_in_R(cat):
    R = cat.R
    assert not is_unit(R.parse("1+a"))
    assert is_unit(R.parse("u"))
    assert not is_unit(R.parse("y"))


def test_one_plus_t_not_invertible_in_RP(cat):
    # t is not nilpotent in R'
    RP = cat.RP
    with pytest.raises(NotAUnit):
        ring_inverse(RP.parse("1 + t"))


def test_divide_exact(cat):
    X = cat.POLY_AXY
    d = X.parse("a^2 + x*y")
    assert divide_exact(X.parse("a^2*x + x^2*y"), d) == X.parse("x")
    assert divide_exact(X.zero, d).is_zero()
    assert divide_exact(d * d, d) == d
    with pytest.raises(NotDivisible) as info:
        divide_exact(X.parse("a^2"), d)
    assert info.value.remainder == X.parse("x*y")


def test_divide_exact_needs_free_ring(cat):
    with pytest.raises(PresentationMismatch):
        divide_exact(cat.R.parse("a"), cat.R.parse("x"))


def test_reinterpret_is_a_section(cat):
    rng = random.Random(4)
    for _ in range(50):
        f = random_element(cat.R, rng, 5)
        lift = reinterpret(f, cat.POLY_AXY)
        assert lift.degree_in("a") <= 1
        assert cat.pi_R(lift) == f


def test_parse_errors(cat):
    with pytest.raises(ParseError):
        cat.R.parse("a + ")
    with pytest.raises(ParseError):
        cat.R.parse("a / x")
    with pytest.raises(ParseError):
        cat.R.parse("q")


def test_mixed_rings_rejected(cat):
    with pytest.raises(PresentationMismatch):
        cat.R.gen("a") + cat.POLY_AXY.gen("a")


# -- evaluation oracle ----------------------------------------------------------
# A point of GF(16)^3 with a^2 = xy gives a ring map R -> GF(16); the rewriting
# must commute with it.


def _variety_points(K, count, rng):
    pts = []
    while len(pts) < count:
        a, x = rng.randrange(1, K.order), rng.randrange(1, K.order)
        y = bits_mul_mod(gf_pow(a, 2, K.modulus), gf_inv(x, K.modulus), K.modulus)
        pts.append((a, x, y))
    return pts


def test_R_products_against_point_evaluation():
    K = GF2n.default(4)
    R = catalog(K).R
    rng = random.Random(0)
    pts = _variety_points(K, 5, rng)
    for _ in range(200):
        f, g = random_element(R, rng, 6), random_element(R, rng, 6)
        fg = f * g
        for p in pts:
            assert eval_poly(fg, p, K.modulus) == bits_mul_mod(
                eval_poly(f, p, K.modulus), eval_poly(g, p, K.modulus), K.modulus
            )


def test_RP_products_against_both_branches():
    K = GF2n.default(4)
    RP = catalog(K).RP
    rng = random.Random(0)
    pts = []
    for a, x, y in [(rng.randrange(16), rng.randrange(16), rng.randrange(16)) for _ in range(4)]:
        d = gf_pow(a, 2, K.modulus) ^ bits_mul_mod(x, y, K.modulus)
        pts += [(a, x, y, 0), (a, x, y, d)]
    for _ in range(200):
        f, g = random_element(RP, rng, 5), random_element(RP, rng, 5)
        fg = f * g
        for p in pts:
            assert eval_poly(fg, p, K.modulus) == bits_mul_mod(
                eval_poly(f, p, K.modulus), eval_poly(g, p, K.modulus), K.modulus
            )


def test_A_products_against_dual_numbers():
    """A = k + ks + kt with s, t of square zero: (c0, c1, c2) vectors."""
    K = GF2n.default(3)
    A = catalog(K).A
    rng = random.Random(0)

    def vec(f):
        return tuple(f.coefficient(e).value for e in ((0, 0), (1, 0), (0, 1)))

    def mul(p, q):
        m = lambda x, y: bits_mul_mod(x, y, K.modulus)
        return (m(p[0], q[0]), m(p[0], q[1]) ^ m(p[1], q[0]), m(p[0], q[2]) ^ m(p[2], q[0]))

    for _ in range(300):
        f, g = random_element(A, rng, 3), random_element(A, rng, 3)
        assert vec(f * g) == mul(vec(f), vec(g))


# -- property tests (hypothesis) ---------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["POLY_ST", "R", "A", "RP", "RPS"]), st.integers(0, 2**32))
def test_ring_axioms(name, seed):
    c = catalog(GF2n.default(2))
    ring = c.rings[name]
    rng = random.Random(seed)
    f, g, h = (random_element(ring, rng, 6) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + f == ring.zero
    assert f * ring.one == f


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_inverse_of_unit_in_A(seed):
    c = catalog(GF2n.default(3))
    A = c.A
    rng = random.Random(seed)
    f = random_element(A, rng, 3)
    unit = f + A.const(1) if f.constant_term().is_zero() else f
    assert unit * ring_inverse(unit) == A.one

import random

import pytest

from stablyfree.algebra import GF2n, RationalFunctionField, RingHom, catalog, factorization_checks, random_element, standard_homs
from stablyfree.errors import IllDefinedHom, PresentationMismatch


def test_psi_on_generators(cat):
    psi = cat.psi
    assert psi(cat.R.parse("a^2")) == cat.POLY_ST.parse("s^2*t^2")
    assert psi(cat.R.parse("x")) == cat.POLY_ST.parse("t")
    assert psi(cat.R.parse("y")) == cat.POLY_ST.parse("s^2*t")


def test_zeta(cat):
    s, t = cat.A.gens()
    assert cat.zeta(s).is_zero()
    assert cat.zeta(t) == t


def test_relator_images(cat):
    assert cat.pi_R(cat.POLY_AXY.parse("a^2 + x*y")).is_zero()
    relator = cat.RP.parse("t") * cat.RP.parse("t") + cat.RP.parse("t*(a^2+x*y)")
    assert relator.is_zero()
    raw = cat.POLY_AXY.parse("a^2 + x*y")
    assert (raw * raw + raw * raw).is_zero()


def test_h_on_generators(cat):
    assert cat.h(cat.RP.gen("t")) == cat.RPS.parse("s^2*t")
    assert cat.h(cat.RP.gen("a")) == cat.RPS.parse("s*a")


def test_ill_defined_hom_rejected(cat):
    # t -> 1 does not kill t^2 + t(a^2+xy)
    with pytest.raises(IllDefinedHom) as info:
        RingHom("bad", cat.RP, cat.POLY_AXY, {"a": 0, "x": 0, "y": 0, "t": 1})
    assert info.value.relator is not None


def test_psi_kills_nothing_extra(cat):
    # psi(a^2 - xy) = s^2 t^2 - t * s^2 t = 0
    with pytest.raises(IllDefinedHom):
        RingHom("bad_psi", cat.R, cat.POLY_ST, {"a": cat.POLY_ST.parse("s*t"), "x": cat.POLY_ST.parse("t"), "y": 0})


def test_wrong_source(cat):
    with pytest.raises(PresentationMismatch):
        cat.psi(cat.A.gen("s"))


@pytest.mark.parametrize("field", [RationalFunctionField(), GF2n.default(2), GF2n.default(3)], ids=str)
def test_factorization_identities(field):
    checks = factorization_checks(field)
    assert len(checks) == 6
    assert all(checks.values()), checks


def test_homomorphism_property_sample(cat):
    rng = random.Random(0)
    for name, hom in standard_homs(cat.field).items():
        for _ in range(20):
            f, g = random_element(hom.source, rng, 6), random_element(hom.source, rng, 6)
            assert hom(f * g) == hom(f) * hom(g), name
            assert hom(f + g) == hom(f) + hom(g), name
        assert hom(hom.source.one) == hom.target.one


def test_composition(cat):
    composed = cat.pi_A.compose(cat.psi)
    rng = random.Random(3)
    for _ in range(20):
        f = random_element(cat.R, rng, 5)
        assert composed(f) == cat.pi_A(cat.psi(f))

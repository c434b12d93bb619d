import random

import pytest

from stablyfree.algebra import random_element, reinterpret
from stablyfree.errors import LiftVerifyFailed, NotInPullback
from stablyfree.matgroup import ElementaryCertificate, Mat, build_M, build_M0
from stablyfree.mennicke import embed, run_lemma21_chain
from stablyfree.patching import (
    FreenessWitness,
    LiftedCertificate,
    PairElem,
    extend_to_M,
    freeness_witness,
    h_extension_checks,
    in_patched_sum,
    lift_certificate,
    p_membership,
    pair_section,
    square_check,
    to_pair,
)


@pytest.fixture(scope="module")
def chain(F):
    return run_lemma21_chain(F, F.gen).certificate


def test_square(F, G4):
    assert square_check(F)
    assert square_check(G4)


def test_relator_under_legs(cat):
    relator = cat.RP.parse("t^2 + t*(a^2 + x*y)")
    assert relator.is_zero()
    raw = cat.POLY_AXY.parse("a^2 + x*y")
    assert cat.ev_t1(cat.RP.parse("t")) == raw


def test_pair_sections(cat):
    X = cat.POLY_AXY
    f = X.parse("x^3 + a*y")
    assert pair_section(f, f) == cat.incl_AXY_RP(f)
    assert pair_section(X.parse("x"), X.parse("x + a^2 + x*y")) == cat.RP.parse("x + t")
    assert pair_section(X.one, X.parse("1 + a^4 + x^2*y^2")) == cat.RP.parse("1 + t*(a^2 + x*y)")


def test_pair_section_rejects_non_pullback(cat):
    X = cat.POLY_AXY
    with pytest.raises(NotInPullback):
        pair_section(X.parse("x"), X.parse("y"))
    with pytest.raises(NotInPullback):
        PairElem(X.parse("a^2"), X.parse("a"))


def test_pair_round_trips(cat):
    rng = random.Random(0)
    X = cat.POLY_AXY
    d = X.parse("a^2 + x*y")
    for _ in range(100):
        f, q = random_element(X, rng, 6), random_element(X, rng, 4)
        r = pair_section(f, f + d * q)
        p = to_pair(r)
        assert (p.f, p.g) == (f, f + d * q)


def test_pair_ring_operations(cat):
    X = cat.POLY_AXY
    d = X.parse("a^2 + x*y")
    p = PairElem(X.parse("x"), X.parse("x") + d)
    q = PairElem(X.parse("y"), X.parse("y") + d * X.parse("a"))
    prod = p * q
    assert pair_section(prod.f, prod.g) == pair_section(p.f, p.g) * pair_section(q.f, q.g)


def test_lift_of_chain(cat, chain, u):
    lift = lift_certificate(chain)
    assert lift.E.map(cat.pi_R) == embed(build_M0(cat.field, u))
    assert (lift.E * lift.E_inv).is_identity()
    assert all(r.degree_in("a") <= 1 for _, _, r in lift.factors)


def test_lift_of_empty_certificate(cat):
    R = cat.R
    empty = ElementaryCertificate.checked(R, 3, Mat.identity(R, 3), [])
    lift = lift_certificate(empty)
    assert lift.E.is_identity()


def test_lift_detects_wrong_target(cat, chain):
    with pytest.raises(LiftVerifyFailed):
        lift_certificate(chain, target=Mat.identity(cat.R, 3))


def test_corrupted_certificate(cat, chain):
    bad = ElementaryCertificate(chain.ring, 3, chain.target, chain.factors[:-1])
    with pytest.raises(LiftVerifyFailed):
        lift_certificate(bad)


def test_extend_to_M(cat, chain, u):
    cert = extend_to_M(chain, cat.field, u)
    M3 = Mat.block_diag(cat.R, build_M(cat.field, u), Mat.identity(cat.R, 1))
    assert cert.product() == M3


def test_freeness_witness(cat, chain, u):
    witness = freeness_witness(cat.field, u, chain)
    assert witness.verify()
    for p, q in witness.basis():
        assert in_patched_sum(cat.field, u, p, q)
        # pi(E) = diag(M(u), 1), so the first two coordinates always lie in P
        assert p_membership(cat.field, u, p[:2], q[:2])


def test_identity_witness_gives_standard_basis(cat, u):
    X = cat.POLY_AXY
    I3 = Mat.identity(X, 3)
    w = FreenessWitness(cat.field, u, LiftedCertificate(I3, I3, ()))
    assert [q for _, q in w.basis()] == [p for p, _ in w.basis()]


def test_p_membership(cat, u):
    X = cat.POLY_AXY
    zero = (X.zero, X.zero)
    e1 = (X.one, X.zero)
    assert p_membership(cat.field, u, zero, zero)
    assert not p_membership(cat.field, u, e1, e1)
    col = tuple(_reinterpret_col(cat, build_M(cat.field, u), 0))
    assert p_membership(cat.field, u, e1, col)


def _reinterpret_col(cat, M, j):
    return [reinterpret(M[i, j], cat.POLY_AXY) for i in range(2)]


def test_h_extension(F, G4):
    assert h_extension_checks(F)
    assert h_extension_checks(G4)


def test_h_of_relator(cat):
    RP, RPS = cat.RP, cat.RPS
    t = RP.gen("t")
    rel_free = t * t + t * RP.parse("a^2 + x*y")
    assert cat.h(rel_free).is_zero()
    assert RPS.parse("s^4*t^2 + s^2*t*s^2*(a^2+x*y)").is_zero()


def test_chain_over_gf4_lifts(G4):
    cert = run_lemma21_chain(G4, G4.gen).certificate
    assert freeness_witness(G4, G4.gen, cert).verify()

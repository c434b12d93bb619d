"""The Milnor square for R' = k[a,x,y,t]/(t^2 + t(a^2+xy)) and patching over it.

R' is the pullback of two copies of k[a,x,y] over R = k[a,x,y]/(a^2+xy),
with legs ev0 (t -> 0) and ev1 (t -> a^2+xy). An element of R' is bridged
to the pair ``(ev0(r), ev1(r))``; conversely ``(f, g)`` with ``pi(f) = pi(g)``
comes from ``f + t*q`` where ``g - f = (a^2+xy) q``.

The patched module is P = {(p, q) in k[a,x,y]^2 x k[a,x,y]^2 :
M(u) pi(p) = pi(q)}. Lifting the elementary certificate of diag(M0(u), 1)
to E in SL3(k[a,x,y]) gives an explicit basis of P + R'.
"""

from dataclasses import dataclass

from stablyfree.algebra.homs import catalog
from stablyfree.algebra.rings import divide_exact, reinterpret
from stablyfree.errors import LiftVerifyFailed, NotDivisible, NotInPullback, WitnessFailed
from stablyfree.matgroup import ElementaryCertificate, Mat, build_M, elementary, inverse_factors, product_of


@dataclass(frozen=True)
class MilnorSquare:
    corner: object
    ev0: object
    ev1: object
    pi: object

    @classmethod
    def standard(cls, field):
        c = catalog(field)
        return cls(c.RP, c.ev_t0, c.ev_t1, c.pi_R)


def square_check(field):
    """Both legs well defined on the relator; pi ev0 = pi ev1 on generators."""
    sq = MilnorSquare.standard(field)
    for hom in (sq.ev0, sq.ev1):
        hom.check_well_defined()
    return all(sq.pi(sq.ev0(g)) == sq.pi(sq.ev1(g)) for g in sq.corner.gens())


@dataclass(frozen=True)
class PairElem:
    """``(f, g)`` over k[a,x,y] with ``pi(f) = pi(g)``."""

    f: object
    g: object

    def __post_init__(self):
        c = catalog(self.f.ring.field)
        if c.pi_R(self.f) != c.pi_R(self.g):
            raise NotInPullback(f"pi({self.f}) != pi({self.g})")

    def __add__(self, other):
        return PairElem(self.f + other.f, self.g + other.g)

    def __mul__(self, other):
        return PairElem(self.f * other.f, self.g * other.g)


def relator_poly(field):
    return catalog(field).POLY_AXY.parse("a^2 + x*y")


def pair_section(f, g):
    """The element ``f + t q`` of R' over the pair ``(f, g)``, round trip checked."""
    field = f.ring.field
    c = catalog(field)
    try:
        q = divide_exact(g - f, relator_poly(field))
    except NotDivisible as exc:
        raise NotInPullback(f"g - f is not a multiple of a^2+xy; remainder {exc.remainder}") from exc
    r = c.incl_AXY_RP(f) + c.RP.gen("t") * c.incl_AXY_RP(q)
    if c.ev_t0(r) != f or c.ev_t1(r) != g:
        raise WitnessFailed("pair section does not round-trip")
    return r


def to_pair(r):
    c = catalog(r.ring.field)
    return PairElem(c.ev_t0(r), c.ev_t1(r))


# -- lifting ---------------------------------------------------------------------


@dataclass(frozen=True)
class LiftedCertificate:
    E: Mat
    E_inv: Mat
    factors: tuple


def lift_certificate(cert, target=None):
    """Lift each factor of a certificate over R to k[a,x,y] (deg_a <= 1 representative).

    Checks ``pi(E) = target`` (default the certificate's target) and
    ``det E = 1``; ``E^-1`` is the reversed product of negated factors.
    """
    field = cert.ring.field
    c = catalog(field)
    AXY = c.POLY_AXY
    target = cert.target if target is None else target
    lifted = tuple((i, j, reinterpret(r, AXY)) for i, j, r in cert.factors)
    E = product_of(AXY, cert.n, lifted)
    E_inv = product_of(AXY, cert.n, inverse_factors(lifted))
    if E.map(c.pi_R) != target:
        raise LiftVerifyFailed("pi(E) differs from the certificate target")
    if E.det() != 1:
        raise LiftVerifyFailed(f"det(E) = {E.det()}")
    if not (E * E_inv).is_identity():
        raise LiftVerifyFailed("E * E^-1 is not the identity")
    return LiftedCertificate(E, E_inv, lifted)


def extend_to_M(cert, field, u):
    """Append e21((1+u^-1)x) so the target becomes diag(M(u), 1)."""
    R = cert.ring
    u = field.coerce(u)
    r = R.gen("x") * (1 + u.inverse())
    target = cert.target * elementary(R, 3, 2, 1, r)
    return ElementaryCertificate.checked(R, 3, target, list(cert.factors) + [(2, 1, r)])


# -- the patched module P and the basis of P + R' -----------------------------------------


def p_membership(field, u, p, q):
    """``M(u) pi(p) = pi(q)`` for 2-vectors ``p``, ``q`` over k[a,x,y]."""
    c = catalog(field)
    M = build_M(field, u)
    lhs = M.apply(tuple(c.pi_R(x) for x in p))
    return all(a == c.pi_R(b) for a, b in zip(lhs, q))


def in_patched_sum(field, u, p, q):
    """Membership of ``(p, q)`` (3-vectors) in P + R' = {M3 pi(p) = pi(q)}, M3 = diag(M(u), 1)."""
    c = catalog(field)
    M = build_M(field, u)
    M3 = Mat.block_diag(M.ring, M, Mat.identity(M.ring, 1))
    lhs = M3.apply(tuple(c.pi_R(x) for x in p))
    return all(a == c.pi_R(b) for a, b in zip(lhs, q))


@dataclass(frozen=True)
class FreenessWitness:
    """Basis ``b_i = (e_i, E e_i)`` of P + R' together with both maps.

    The forward map sends a vector of (R')^3, as pairs ``(f, g)``, to
    ``(f, E g)``; the backward map sends ``(p, q)`` to ``(p, E^-1 q)``.
    """

    field: object
    u: object
    lift: LiftedCertificate

    @property
    def E(self):
        return self.lift.E

    def basis(self):
        AXY = self.E.ring
        out = []
        for i in range(3):
            e = tuple(AXY.one if j == i else AXY.zero for j in range(3))
            out.append((e, self.E.column(i)))
        return out

    def forward(self, f, g):
        return tuple(f), self.E.apply(tuple(g))

    def backward(self, p, q):
        return tuple(p), self.lift.E_inv.apply(tuple(q))

    def verify(self):
        for p, q in self.basis():
            if not in_patched_sum(self.field, self.u, p, q):
                raise WitnessFailed(f"basis vector {p} -> {q} is not in P + R'")
        AXY = self.E.ring
        for i in range(3):
            e = tuple(AXY.one if j == i else AXY.zero for j in range(3))
            p, q = self.forward(e, e)
            back = self.backward(p, q)
            if back != (e, e):
                raise WitnessFailed("backward(forward(e_i)) != e_i")
        if not (self.E * self.lift.E_inv).is_identity():
            raise WitnessFailed("E E^-1 != I")
        return True


def freeness_witness(field, u, chain_cert):
    """Witness that P + R' is free of rank 3, from the certificate of diag(M0(u), 1)."""
    cert_M = extend_to_M(chain_cert, field, u)
    lift = lift_certificate(cert_M)
    witness = FreenessWitness(field, field.coerce(u), lift)
    witness.verify()
    return witness


# -- the graded homomorphism h ---------------------------------------------------------------


def h_extension_checks(field):
    """h well defined; ev_s1 h = id and ev_s0 h = (R' -> k -> R') on generators."""
    c = catalog(field)
    h = c.h
    h.check_well_defined()
    relator = c.RP.parse("t^2 + t*(a^2 + x*y)")
    if not h(relator).is_zero():
        return False
    ok_one = all(c.ev_s1(h(g)) == g for g in c.RP.gens())
    ok_zero = all(c.ev_s0(h(g)).is_zero() for g in c.RP.gens())
    return ok_one and ok_zero

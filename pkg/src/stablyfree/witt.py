"""Symmetric bilinear spaces over presented rings, Pfister forms and norm groups.

Spaces are free, given by a symmetric Gram matrix. Equalities in the Witt
ring are never decided in general; each one is shown by an explicit witness
(a basis change plus a Lagrangian), and every witness is checked exactly.
Most of the module is specialised to ``A = k[s,t]/(s^2,st,t^2)``, the local
ring with maximal ideal (s, t) and residue field k.
"""

import itertools
import random
from dataclasses import dataclass

import numpy as np

from stablyfree.algebra.fields import FieldElem
from stablyfree.algebra.homs import catalog
from stablyfree.algebra.rings import Presentation, is_unit, ring_inverse
from stablyfree.errors import (
    BadParameter,
    DimensionMismatch,
    FieldTooLarge,
    HypothesisFailed,
    NotAUnit,
    OddRank,
    RankMismatch,
    RelationFailed,
    UnsupportedShape,
)
from stablyfree.matgroup import Mat

ORACLE_MAX_FIELD = 8


class BilinearSpace:
    """Free symmetric bilinear space ``(ring^n, gram)``."""

    __slots__ = ("ring", "gram")

    def __init__(self, gram):
        if gram != gram.transpose():
            raise ValueError("gram matrix is not symmetric")
        object.__setattr__(self, "ring", gram.ring)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearSpace is immutable")

    @property
    def rank(self):
        return self.gram.n

    def form(self, v, w):
        """``B(v, w) = v^T G w``."""
        return sum((vi * gw for vi, gw in zip(v, self.gram.apply(w))), self.ring.zero)

    def transform(self, P):
        """The space with Gram matrix ``P^T G P``."""
        return BilinearSpace(P.transpose() * self.gram * P)

    def __eq__(self, other):
        return isinstance(other, BilinearSpace) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearSpace({self.ring}, rank {self.rank})"

    def __str__(self):
        return str(self.gram)


def _require_unit(f, what):
    try:
        ring_inverse(f)
    except NotAUnit as exc:
        raise NotAUnit(f"{what} must be a unit, got {f}") from exc


def diagonal(ring, entries, require_units=True):
    entries = [ring.coerce(e) for e in entries]
    if require_units:
        for e in entries:
            _require_unit(e, "diagonal entry")
    n = len(entries)
    return BilinearSpace(Mat(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]))


def a_form(ring, lam, mu):
    """``A(lam, mu)`` with Gram matrix ((lam, 1), (1, mu))."""
    return BilinearSpace(Mat(ring, [[lam, 1], [1, mu]]))


def pfister2(ring, a, b):
    """``<<a, b>> = <1, -a> (x) <1, -b> = <1, -a, -b, ab>``."""
    a, b = ring.coerce(a), ring.coerce(b)
    return diagonal(ring, [1, -a, -b, a * b])


def perp(E, F):
    return BilinearSpace(Mat.block_diag(E.ring, E.gram, F.gram))


def tensor(E, F):
    """Kronecker product of Gram matrices."""
    m, n = E.rank, F.rank
    rows = [[E.gram[i // n, j // n] * F.gram[i % n, j % n] for j in range(m * n)] for i in range(m * n)]
    return BilinearSpace(Mat(E.ring, rows))


# -- unit determinants -------------------------------------------------------------


def _is_local_nilpotent(ring):
    """Every generator nilpotent: the ring is local with residue field k."""
    if not ring.vars:
        return True
    for g in ring.gens():
        p = g
        for _ in range(4):
            p = p * p
            if p.is_zero():
                break
        else:
            return False
    return True


def residue_det(P):
    """Determinant of ``P`` modulo the maximal ideal, by elimination over k."""
    k = P.ring.field
    rows = [[e.constant_term() for e in row] for row in P.rows]
    n = len(rows)
    det = k.one
    for col in range(n):
        pivot = next((i for i in range(col, n) if not rows[i][col].is_zero()), None)
        if pivot is None:
            return k.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv = p.inverse()
        for i in range(col + 1, n):
            f = rows[i][col]
            if not f.is_zero():
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det


def det_is_unit(P):
    if _is_local_nilpotent(P.ring):
        return not residue_det(P).is_zero()
    return is_unit(P.det())


def congruent_check(E, F, P):
    """``P^T G_E P = G_F`` with ``det P`` a unit."""
    if not (E.rank == F.rank == P.n):
        raise RankMismatch(f"ranks {E.rank}, {F.rank} and basis size {P.n} differ")
    return E.transform(P).gram == F.gram and det_is_unit(P)


def matrix_from_columns(ring, columns):
    n = len(columns)
    if any(len(c) != n for c in columns):
        raise DimensionMismatch("columns must form a square matrix")
    return Mat(ring, [[columns[j][i] for j in range(n)] for i in range(n)])


def metabolic_check(E, lagrangian, extension=None):
    """Half-rank isotropic summand: ``B`` vanishes on ``lagrangian`` and it extends to a basis.

    ``extension`` supplies the complementary columns; otherwise standard
    basis vectors are tried.
    """
    n = E.rank
    if n % 2:
        raise OddRank(f"metabolic spaces have even rank, got {n}")
    lagrangian = [tuple(E.ring.coerce(x) for x in v) for v in lagrangian]
    if len(lagrangian) != n // 2:
        raise RankMismatch(f"lagrangian needs {n // 2} vectors, got {len(lagrangian)}")
    for i, v in enumerate(lagrangian):
        for w in lagrangian[i:]:
            if not E.form(v, w).is_zero():
                return False
    if extension is not None:
        return det_is_unit(matrix_from_columns(E.ring, lagrangian + [tuple(v) for v in extension]))
    std = [_unit_vector(E.ring, n, j) for j in range(n)]
    for combo in itertools.combinations(std, n // 2):
        if det_is_unit(matrix_from_columns(E.ring, lagrangian + list(combo))):
            return True
    return False


# -- Witt-relation witnesses -------------------------------------------------------


@dataclass(frozen=True)
class WittMoveWitness:
    """A metabolic split of ``space``: basis ``P`` with ``P^T G P`` block diagonal.

    ``blocks`` lists ``(kind, coords, lambdas)``; every block is ``A(lam, 0)``
    in the new basis, and the second vector of each block spans the Lagrangian.
    """

    space: BilinearSpace
    P: Mat
    blocks: tuple
    target: BilinearSpace

    def lagrangian(self):
        cols = []
        k = 0
        for _, coords, _ in self.blocks:
            for _ in range(len(coords) // 2):
                cols.append(_unit_vector(self.target.ring, self.target.rank, k + 1))
                k += 2
        return cols

    def verify(self):
        return congruent_check(self.space, self.target, self.P) and metabolic_check(
            self.target, self.lagrangian(), extension=self._extension()
        )

    def _extension(self):
        n = self.target.rank
        ring = self.target.ring
        return [_unit_vector(ring, n, k) for k in range(0, n, 2)]


def _unit_vector(ring, n, k):
    return tuple(ring.one if i == k else ring.zero for i in range(n))


def _pair_basis(ring, n, i, j, p, q):
    """Basis for ``<p, q>`` on coordinates i, j giving ``A(p, 0)``."""
    p_inv = ring_inverse(p)
    if q == -p:
        kind, c = "hyperbolic", p_inv
    elif q == -p_inv:
        kind, c = "inverse", ring.one
    else:
        return None
    v1 = [ring.zero] * n
    v1[i] = ring.one
    v2 = [ring.zero] * n
    v2[i] = p_inv
    v2[j] = c
    return kind, [tuple(v1), tuple(v2)], [p]


def _four_block_basis(ring, n, coords, a, d3, d4):
    """Vectors v1..v4 on ``coords`` for ``<-b, ab, (1-a)b, -a(1-a)b>``; gives ``A(lam,0) + A(mu,0)``."""
    i1, i2, i3, i4 = coords
    one = ring.one

    def vec(values):
        v = [ring.zero] * n
        for idx, val in values.items():
            v[idx] = val
        return tuple(v)

    return [
        vec({i3: ring_inverse(d3)}),
        vec({i1: one, i2: one, i3: one}),
        vec({i4: ring_inverse(d4)}),
        vec({i1: a, i2: one, i4: one}),
    ]


def _block_target(ring, lambdas):
    blocks = [Mat(ring, [[lam, 1], [1, 0]]) for lam in lambdas]
    return BilinearSpace(Mat.block_diag(ring, *blocks))


def metabolic_witness(space, pairs, four_blocks=()):
    """Assemble and verify a :class:`WittMoveWitness` for a diagonal space.

    ``pairs`` are coordinate pairs ``(i, j)`` with entries ``<p, -p>`` or
    ``<p, -p^-1>``; ``four_blocks`` are ``(coords, a)`` for the four-entry
    block of relation (e).
    """
    ring = space.ring
    n = space.rank
    d = [space.gram[i, i] for i in range(n)]
    columns, blocks, lambdas = [], [], []
    for i, j in pairs:
        got = _pair_basis(ring, n, i, j, d[i], d[j])
        if got is None:
            raise RelationFailed(f"coordinates {i},{j}: <{d[i]}, {d[j]}> is neither <p,-p> nor <p,-p^-1>")
        kind, cols, lam = got
        columns += cols
        blocks.append((kind, (i, j), tuple(lam)))
        lambdas += lam
    for coords, a in four_blocks:
        cols = _four_block_basis(ring, n, coords, ring.coerce(a), d[coords[2]], d[coords[3]])
        lam = space.form(cols[0], cols[0])
        mu = space.form(cols[2], cols[2])
        for x in (lam, mu):
            _require_unit(x, "block lambda")
        columns += cols
        blocks.append(("four-block", tuple(coords), (lam, mu)))
        lambdas += [lam, mu]
    if len(columns) != n:
        raise RelationFailed(f"blocks cover {len(columns)} of {n} coordinates")
    P = matrix_from_columns(ring, columns)
    witness = WittMoveWitness(space, P, tuple(blocks), _block_target(ring, lambdas))
    if not witness.verify():
        raise RelationFailed("metabolic witness failed to verify")
    return witness


def witt_difference(lhs_entries, rhs_entries, ring):
    """Diagonal space ``lhs - rhs = <lhs> + <-rhs>``."""
    return diagonal(ring, list(lhs_entries) + [-ring.coerce(e) for e in rhs_entries])


def pfister_entries(ring, a, b):
    a, b = ring.coerce(a), ring.coerce(b)
    return [ring.one, -a, -b, a * b]


def relation_a(ring, a, b, c):
    """<<a,b>> + <<ab,c>> = <<a,bc>> + <<b,c>>."""
    lhs = pfister_entries(ring, a, b) + pfister_entries(ring, a * b, c)
    rhs = pfister_entries(ring, a, b * c) + pfister_entries(ring, b, c)
    D = witt_difference(lhs, rhs, ring)
    pairs = [(0, 8), (4, 12), (1, 9), (2, 13), (6, 14), (7, 11), (3, 5), (10, 15)]
    return metabolic_witness(D, pairs)


def relation_b(ring):
    """<<1,1>> is the zero class."""
    D = diagonal(ring, pfister_entries(ring, 1, 1))
    return metabolic_witness(D, [(0, 1), (2, 3)])


def relation_c(ring, a, b):
    """<<a,b>> = <<a^-1,b^-1>>."""
    a, b = ring.coerce(a), ring.coerce(b)
    lhs = pfister_entries(ring, a, b)
    rhs = pfister_entries(ring, ring_inverse(a), ring_inverse(b))
    D = witt_difference(lhs, rhs, ring)
    return metabolic_witness(D, [(0, 4), (1, 5), (2, 6), (3, 7)])


def relation_e(ring, a, b):
    """<<a,b>> = <<a,(1-a)b>> for units a, b, 1-a."""
    a, b = ring.coerce(a), ring.coerce(b)
    _require_unit(1 - a, "1-a")
    lhs = pfister_entries(ring, a, b)
    rhs = pfister_entries(ring, a, (1 - a) * b)
    D = witt_difference(lhs, rhs, ring)
    # coordinates 2,3,6,7 carry -b, ab, (1-a)b, -a(1-a)b
    return metabolic_witness(D, [(0, 4), (1, 5)], four_blocks=[((2, 3, 6, 7), a)])


def random_unit(ring, rng, degree=3, avoid_one=False):
    """``c0 + c1 s + c2 t`` with ``c0 != 0`` (and ``c0 != 1`` if asked)."""
    k = ring.field
    while True:
        c0 = k.random_element(rng, degree)
        if not c0.is_zero() and not (avoid_one and c0.is_one()):
            break
    s, t = ring.gens()
    return ring.const(c0) + s * k.random_element(rng, degree) + t * k.random_element(rng, degree)


def verify_pfister_relations(field, trials=20, seed=0):
    """Check relations (a), (b), (c), (e) on ``trials`` random unit tuples over A.

    Returns ``{relation: number of verified witnesses}``; raises
    :class:`RelationFailed` naming the relation and inputs on failure.
    """
    A = catalog(field).A
    rng = random.Random(seed)
    counts = {"a": 0, "b": 0, "c": 0, "e": 0}
    relation_b(A)
    counts["b"] += 1
    can_e = not (getattr(field, "is_finite", False) and field.order == 2)
    for _ in range(trials):
        a, b, c = (random_unit(A, rng) for _ in range(3))
        for name, fn, args in (("a", relation_a, (A, a, b, c)), ("c", relation_c, (A, a, b))):
            try:
                fn(*args)
            except RelationFailed as exc:
                raise RelationFailed(f"relation ({name}) failed for {[str(x) for x in args[1:]]}: {exc}") from exc
            counts[name] += 1
        if can_e:
            w = random_unit(A, rng, avoid_one=True)
            try:
                relation_e(A, w, b)
            except RelationFailed as exc:
                raise RelationFailed(f"relation (e) failed for a={w}, b={b}: {exc}") from exc
            counts["e"] += 1
    return counts


# -- the isometries for rho(zbar) ----------------------------------------------------


def isometry_data(field, u):
    """``(E, F, P)`` with ``E = <<1+u^-1 t, 1+u s>>``, ``F = A(us, u^-1 t) + A(1, 0)``.

    ``u = 1`` is allowed and gives the space ``<<1+t, 1+s>>``.
    """
    A = catalog(field).A
    u = field.coerce(u)
    v = u.inverse()
    s, t = A.gens()
    one = A.one
    p = one + t * v + s * u
    E = pfister2(A, one + t * v, one + s * u)
    cols = [
        (0, p, 0, one + t * v),
        (0, 0, p, one + s * u),
        (1, 0, 0, 0),
        (1, 1, 1, 1),
    ]
    P = matrix_from_columns(A, [tuple(A.coerce(x) for x in col) for col in cols])
    F = perp(a_form(A, s * u, t * v), a_form(A, 1, 0))
    return E, F, P


def isometry_check(field, u):
    E, F, P = isometry_data(field, u)
    return congruent_check(E, F, P) and residue_det(P).is_one()


# -- norm groups -----------------------------------------------------------------


def _family_params(E):
    """``(lam, mu)`` in k for Gram ((lam s, *), (*, mu t)); else UnsupportedShape."""
    A = E.ring
    if A.name != "A" or E.rank != 2:
        raise UnsupportedShape("norm groups are decided for rank-2 spaces over A only")
    s_exp, t_exp = (1, 0), (0, 1)
    g11, g22 = E.gram[0, 0], E.gram[1, 1]
    if not set(g11.terms) <= {s_exp} or not set(g22.terms) <= {t_exp}:
        raise UnsupportedShape(f"diagonal ({g11}, {g22}) is not of the form (lam*s, mu*t)")
    return g11.coefficient(s_exp), g22.coefficient(t_exp)


def norm_group_membership(E, target):
    """Decide ``target`` in the norm group ``{c^2 lam s + d^2 mu t : c, d in k}``.

    Returns ``(member, witness)`` with ``witness = (c, d)`` and
    ``B((c, d), (c, d)) = target`` when ``member``.
    """
    A = E.ring
    lam, mu = _family_params(E)
    target = A.coerce(target)
    k = A.field
    if not target.constant_term().is_zero():
        return False, None
    coords = []
    for comp, scale in ((target.coefficient((1, 0)), lam), (target.coefficient((0, 1)), mu)):
        if comp.is_zero():
            coords.append(k.zero)
            continue
        if scale.is_zero():
            return False, None
        ok, root = k.is_square(comp / scale)
        if not ok:
            return False, None
        coords.append(root)
    v = tuple(A.const(c) for c in coords)
    if E.form(v, v) != target:
        raise AssertionError("norm group witness does not evaluate to the target")
    return True, tuple(coords)


def _gf_tables(field):
    q = field.order
    els = field.elements()
    mul = np.array([[(x * y).value for y in els] for x in els], dtype=np.int64)
    return q, mul


def _encode(elem):
    """``c0 + c1 s + c2 t`` -> ``(c0, c1, c2)`` as field ints."""
    return (elem.constant_term().value, elem.coefficient((1, 0)).value, elem.coefficient((0, 1)).value)


def norm_group_oracle(E):
    """Brute-force norm group of a rank-2 space over A, k finite with |k| <= 8.

    Enumerates ``B(v, v)`` for all ``|k|^6`` vectors ``v`` of A^2 (vectorized
    over numpy arrays) and closes additively (GF(2)-span). Returns a
    frozenset of A elements.
    """
    A = E.ring
    field = A.field
    if not getattr(field, "is_finite", False):
        raise FieldTooLarge(f"oracle needs a finite field, got {field}")
    if field.order > ORACLE_MAX_FIELD:
        raise FieldTooLarge(f"|k| = {field.order} exceeds {ORACLE_MAX_FIELD}")
    if E.rank != 2 or A.name != "A":
        raise UnsupportedShape("oracle handles rank-2 spaces over A")
    q, mul = _gf_tables(field)

    def amul(x, y):
        # (x0 + x1 s + x2 t)(y0 + y1 s + y2 t) in A
        x0, x1, x2 = x
        y0, y1, y2 = y
        return (mul[x0, y0], mul[x0, y1] ^ mul[x1, y0], mul[x0, y2] ^ mul[x2, y0])

    def aadd(x, y):
        return tuple(a ^ b for a, b in zip(x, y))

    idx = np.arange(q**6, dtype=np.int64)
    digits = [(idx // q**i) % q for i in range(6)]
    alpha = tuple(digits[0:3])
    beta = tuple(digits[3:6])
    g = [[tuple(np.int64(c) for c in _encode(E.gram[i, j])) for j in range(2)] for i in range(2)]
    # B(v, v) = alpha (g11 alpha + g12 beta) + beta (g21 alpha + g22 beta)
    row1 = aadd(amul(g[0][0], alpha), amul(g[0][1], beta))
    row2 = aadd(amul(g[1][0], alpha), amul(g[1][1], beta))
    val = aadd(amul(alpha, row1), amul(beta, row2))
    bits = field.n
    packed = val[0] | (val[1] << bits) | (val[2] << (2 * bits))
    values = np.unique(packed)
    span = _gf2_span(int(v) for v in values)
    s, t = A.gens()
    mask = (1 << bits) - 1

    def decode(x):
        c0, c1, c2 = x & mask, (x >> bits) & mask, (x >> (2 * bits)) & mask
        return A.const(FieldElem(field, c0)) + s * FieldElem(field, c1) + t * FieldElem(field, c2)

    return frozenset(decode(x) for x in span)


def _gf2_span(vectors):
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    span = {0}
    for b in basis:
        span |= {x ^ b for x in span}
    return span


def a_elements(A):
    """All elements of A for a finite coefficient field."""
    els = A.field.elements()
    s, t = A.gens()
    return [A.const(c0) + s * c1 + t * c2 for c0 in els for c1 in els for c2 in els]


# -- anisotropy and Knebusch hypotheses -------------------------------------------------


def _generic_ring(field):
    """``A[a0,a1,a2,b0,b1,b2]``: A with indeterminate coordinates for a generic vector."""
    names = ("s", "t", "a0", "a1", "a2", "b0", "b1", "b2")
    rules = []
    for lhs in ((2, 0), (1, 1), (0, 2)):
        rules.append((lhs + (0,) * 6, {}))
    return Presentation("A[coords]", names, field, rules=rules)


def anisotropic_check(E):
    """Symbolic anisotropy for Gram ((lam s, g), (g, mu t)), lam, mu in k^x.

    Expands ``B(v, v)`` for ``v = (a0 + a1 s + a2 t, b0 + b1 s + b2 t)`` and
    confirms it equals ``a0^2 lam s + b0^2 mu t``: it then vanishes only
    when both coordinates lie in the maximal ideal, which no generator of a
    rank-1 direct summand does (A is local).
    """
    lam, mu = _family_params(E)
    if lam.is_zero() or mu.is_zero():
        raise UnsupportedShape("anisotropy criterion needs lam and mu to be units of k")
    field = E.ring.field
    G = _generic_ring(field)
    s, t, a0, a1, a2, b0, b1, b2 = G.gens()
    alpha = a0 + a1 * s + a2 * t
    beta = b0 + b1 * s + b2 * t

    def lift(x):
        return G.element({e + (0,) * 6: c for e, c in x.terms.items()})

    g11, g12, g21, g22 = (lift(E.gram[i, j]) for i in range(2) for j in range(2))
    value = alpha * (g11 * alpha + g12 * beta) + beta * (g21 * alpha + g22 * beta)
    expected = a0 * a0 * s * lam + b0 * b0 * t * mu
    return value == expected


def knebusch_hypotheses(ring, u=None):
    """m^2 = 0, 2 = 0 and both distinguished forms nondegenerate (det a unit).

    Returns True or raises :class:`HypothesisFailed` naming the failure.
    """
    field = ring.field
    if set(ring.vars) != {"s", "t"}:
        raise HypothesisFailed(f"{ring} is not a quotient of k[s,t]")
    s, t = ring.gen("s"), ring.gen("t")
    for name, value in (("s^2", s * s), ("st", s * t), ("t^2", t * t)):
        if not value.is_zero():
            raise HypothesisFailed(f"{name} = {value} != 0, so m^2 != 0")
    if not (ring.one + ring.one).is_zero():
        raise HypothesisFailed("2 != 0")
    u = field.gen if u is None else field.coerce(u)
    for E in (a_form(ring, s, t), a_form(ring, s * u, t * u.inverse())):
        if not is_unit(E.gram.det()):
            raise HypothesisFailed(f"det of {E.gram.rows} is not a unit")
    return True


# -- distinctness of the two spaces ------------------------------------------------------


@dataclass(frozen=True)
class DistinctnessResult:
    distinct: bool
    witness: object
    note: str
    symbols: tuple


def zbar_symbols(field, u):
    """zbar as formal symbols: ``{1+u^-1 t, 1+u s} {1+t, 1+s}^-1``."""
    A = catalog(field).A
    s, t = A.gens()
    v = field.coerce(u).inverse()
    return (((1 + t * v, 1 + s * field.coerce(u)), 1), ((1 + t, 1 + s), -1))


def rho_zbar_distinctness(field, u):
    """Decide whether A(us, u^-1 t) and A(s, t) differ in W(A).

    rho sends each symbol {x, y} to <<x, y>>; the basis-change isometries and
    metabolicity of A(1, 0) turn rho(zbar) into A(us, u^-1 t) - A(s, t).
    A square u gives an explicit isometry (distinct = False); otherwise the
    Knebusch hypotheses, anisotropy and norm-group separation give True
    with ``us`` as the separating element.
    """
    u = field.coerce(u)
    if u.is_zero() or u.is_one():
        raise BadParameter(f"u must avoid 0 and 1, got {u}")
    A = catalog(field).A
    s, t = A.gens()
    symbols = zbar_symbols(field, u)
    for uu in (u, field.one):
        if not isometry_check(field, uu):
            raise RelationFailed(f"isometry for <<1+t/{uu}, 1+{uu}s>> failed")
    if not metabolic_check(a_form(A, 1, 0), [(0, 1)]):
        raise RelationFailed("A(1,0) is not metabolic")
    E_u = a_form(A, s * u, t * u.inverse())
    E_1 = a_form(A, s, t)
    ok, r = field.is_square(u)
    if ok:
        P = Mat(A, [[r, 0], [0, r.inverse()]])
        if not congruent_check(E_1, E_u, P):
            raise RelationFailed("square-root isometry failed")
        return DistinctnessResult(False, P, f"u is a square, u = ({r})^2; A(s,t) and A(us,t/u) are isometric", symbols)
    knebusch_hypotheses(A, u)
    if not (anisotropic_check(E_u) and anisotropic_check(E_1)):
        raise HypothesisFailed("anisotropy failed")
    target = s * u
    in_u, _ = norm_group_membership(E_u, target)
    in_1, _ = norm_group_membership(E_1, target)
    if not in_u or in_1:
        raise RelationFailed("norm groups do not separate the spaces")
    return DistinctnessResult(True, target, "us lies in the norm group of A(us,t/u) but not of A(s,t)", symbols)

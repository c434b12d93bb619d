"""Mennicke symbols with elementary-matrix certificates.

A symbol ``[a, b]`` is carried with a completion ``C``: a 2 x 2 matrix of
determinant 1 whose first row is ``(a, b)``. The symbol is trivial when
``diag(C, 1)`` is elementary, and every rule here produces an explicit
:class:`~stablyfree.matgroup.ElementaryCertificate` (3 x 3) for that, verified
by multiplication before it is returned.
"""

from dataclasses import dataclass, field as dc_field

from stablyfree.algebra.homs import catalog
from stablyfree.algebra.rings import ring_inverse
from stablyfree.errors import (
    ChainStepFailed,
    FirstEntryMismatch,
    NoSolutionInBound,
    NotAUnit,
    PreconditionError,
    VerifyFailed,
    WitnessFailed,
)
from stablyfree.matgroup import ElementaryCertificate, Mat, build_M0, inverse_factors, product_of

DEFAULT_DEGREE = 8


@dataclass(frozen=True)
class MennickeSymbol:
    ring: object
    a: object
    b: object
    completion: Mat

    def __post_init__(self):
        C = self.completion
        if C.n != 2 or C.ring != self.ring:
            raise PreconditionError("completion must be a 2x2 matrix over the symbol's ring")
        if C[0, 0] != self.a or C[0, 1] != self.b:
            raise PreconditionError(f"completion first row ({C[0, 0]}, {C[0, 1]}) is not ({self.a}, {self.b})")
        if C.det() != 1:
            raise PreconditionError(f"completion has determinant {C.det()}")

    @classmethod
    def from_completion(cls, C):
        return cls(C.ring, C[0, 0], C[0, 1], C)

    def __str__(self):
        return f"[{self.a}, {self.b}]"


def _verified(ring, target, factors, what):
    try:
        return ElementaryCertificate.checked(ring, 3, target, factors)
    except VerifyFailed as exc:
        raise WitnessFailed(f"{what}: {exc}") from exc


def embed(C):
    """``diag(C, 1)`` for a 2 x 2 matrix ``C``."""
    return Mat.block_diag(C.ring, C, Mat.identity(C.ring, 1))


# -- shifts ----------------------------------------------------------------------


def symbol_shift(sym, which, t):
    """``[a, b] -> [a + t b, b]`` (``which='first'``) or ``[a, b + t a]``.

    Returns ``(new_symbol, (left, right))`` with
    ``new.completion = prod(left) * old.completion * prod(right)``.
    """
    ring = sym.ring
    t = ring.coerce(t)
    if which == "first":
        right = [(2, 1, t)]
    elif which == "second":
        right = [(1, 2, t)]
    else:
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    right = [f for f in right if not f[2].is_zero()]
    left = []
    new_C = product_of(ring, 2, left) * sym.completion * product_of(ring, 2, right)
    new = MennickeSymbol.from_completion(new_C)
    expect_a = sym.a + t * sym.b if which == "first" else sym.a
    expect_b = sym.b if which == "first" else sym.b + t * sym.a
    if new.a != expect_a or new.b != expect_b:
        raise WitnessFailed(f"shift of {sym} by {t} produced {new}")
    return new, (left, right)


def pull_back(old_sym, witness, cert_new):
    """Certificate for ``diag(old.completion, 1)`` from one for the shifted symbol."""
    left, right = witness
    factors = inverse_factors(left) + list(cert_new.factors) + inverse_factors(right)
    return _verified(old_sym.ring, embed(old_sym.completion), factors, f"pull back to {old_sym}")


# -- unit symbols ----------------------------------------------------------------


def _weyl(v, v_inv):
    """``w(v) = e12(v) e21(-v^-1) e12(v) = ((0, v), (-v^-1, 0))``."""
    return [(1, 2, v), (2, 1, -v_inv), (1, 2, v)]


def _diag(v, v_inv, ring):
    """``diag(v, v^-1) = w(v) w(-1)``."""
    return _weyl(v, v_inv) + _weyl(-ring.one, -ring.one)


def _try_inverse(f):
    try:
        return ring_inverse(f)
    except NotAUnit:
        return None


def symbol_unit_certificate(sym):
    """Elementary factorization of ``diag(C, 1)`` when ``a`` or ``b`` is a unit."""
    ring = sym.ring
    C = sym.completion
    a, b, c, d = C[0, 0], C[0, 1], C[1, 0], C[1, 1]
    a_inv = _try_inverse(a)
    if a_inv is not None:
        # C = e21(c a^-1) diag(a, a^-1) e12(a^-1 b)
        middle = [] if a == 1 else _diag(a, a_inv, ring)
        factors = [(2, 1, c * a_inv)] + middle + [(1, 2, a_inv * b)]
    else:
        b_inv = _try_inverse(b)
        if b_inv is None:
            raise NotAUnit(f"neither entry of {sym} is a unit of {ring}")
        # C = e21(d b^-1) w(b) e21(a b^-1)
        factors = [(2, 1, d * b_inv)] + _weyl(b, b_inv) + [(2, 1, a * b_inv)]
    return _verified(ring, embed(C), factors, f"unit symbol {sym}")


# -- multiplicativity --------------------------------------------------------------


def _swap(i, j, ring):
    """Signed transposition of coordinates i, j: e_ij(1) e_ji(-1) e_ij(1)."""
    one = ring.one
    return [(i, j, one), (j, i, -one), (i, j, one)]


def symbol_mult_second(s1, s2):
    """``[a, b] . [a, b'] = [a, b b']``.

    Returns ``(symbol, combine)``; ``combine(cert1, cert2)`` turns
    certificates for ``diag(C1, 1)`` and ``diag(C2, 1)`` into one for the
    product symbol's completion.

    With ``C1 = ((a, b), (c, d))`` and ``C2 = ((a, b'), (c', d'))``::

        e32(-c') diag(C1,1) diag(1,C2) e12(-b) e21(-c) e23(-d b')

    equals ``C = ((a, b b'), (-c c', d' - c' d b'))`` placed on coordinates
    1 and 3; conjugating by the (2,3) transposition moves it to ``diag(C, 1)``,
    and ``diag(1, C2)`` is ``diag(C2, 1)`` conjugated by a 3-cycle.
    """
    if s1.ring != s2.ring:
        raise PreconditionError("symbols over different rings")
    if s1.a != s2.a:
        raise FirstEntryMismatch(f"first entries differ: {s1.a} vs {s2.a}")
    ring = s1.ring
    (a, b), (c, d) = s1.completion.rows
    (_, b2), (c2, d2) = s2.completion.rows
    C = Mat(ring, [[a, b * b2], [-(c * c2), d2 - c2 * d * b2]])
    sym = MennickeSymbol.from_completion(C)

    def combine(cert1, cert2):
        if cert1.target != embed(s1.completion) or cert2.target != embed(s2.completion):
            raise PreconditionError("certificates do not match the symbols' completions")
        cert1.verify()
        cert2.verify()
        Q = _swap(2, 3, ring)
        sigma = _swap(1, 2, ring) + _swap(2, 3, ring)
        factors = (
            Q
            + [(3, 2, -c2)]
            + list(cert1.factors)
            + sigma
            + list(cert2.factors)
            + inverse_factors(sigma)
            + [(1, 2, -b), (2, 1, -c), (2, 3, -(d * b2))]
            + inverse_factors(Q)
        )
        return _verified(ring, embed(C), factors, f"product {s1} . {s2}")

    return sym, combine


# -- completions -----------------------------------------------------------------


def completion_shift(M, M2):
    """Factors ``L`` with ``prod(L) * M = M2`` for completions of one row.

    Two determinant-1 completions of ``(a, b)`` differ by a lower row
    operation ``e21(lam)``; ``lam = c' d - d' c`` in closed form.
    """
    if M.n != 2 or M2.n != 2:
        raise PreconditionError("completion_shift works on 2x2 matrices")
    if M.rows[0] != M2.rows[0]:
        raise PreconditionError("first rows differ")
    if M.det() != 1 or M2.det() != 1:
        raise PreconditionError("both matrices must have determinant 1")
    (_, _), (c, d) = M.rows
    (_, _), (c2, d2) = M2.rows
    lam = c2 * d - d2 * c
    L = [] if lam.is_zero() else [(2, 1, lam)]
    if product_of(M.ring, 2, L) * M != M2:
        raise WitnessFailed("completion shift did not verify")
    return L


def _solve(field, rows, rhs):
    """Gaussian elimination over ``field``; one solution or None."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    A = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if not A[i][col].is_zero()), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = A[r][col].inverse()
        A[r] = [v * inv for v in A[r]]
        for i in range(nrows):
            if i != r and not A[i][col].is_zero():
                factor = A[i][col]
                A[i] = [vi - factor * vr for vi, vr in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    if any(all(v.is_zero() for v in row[:-1]) and not row[-1].is_zero() for row in A):
        return None
    solution = [field.zero] * ncols
    for i, col in enumerate(pivots):
        solution[col] = A[i][-1]
    return solution


def find_completion(a, b, degree=DEFAULT_DEGREE):
    """Completion ``((a, b), (c, d))`` with ``a d - b c = 1``, degrees <= ``degree``.

    Solves the k-linear system coefficientwise, trying degree bounds
    0, 1, ..., ``degree`` in turn.
    """
    ring = a.ring
    k = ring.field
    for bound in range(degree + 1):
        monos = ring.normal_monomials(bound)
        columns = []
        for m in monos:
            columns.append((a * ring.element({m: k.one})).terms)
        for m in monos:
            columns.append((-(b * ring.element({m: k.one}))).terms)
        eq_monos = sorted({e for col in columns for e in col} | {ring._zero_exp})
        rows = [[col.get(e, k.zero) for col in columns] for e in eq_monos]
        rhs = [k.one if e == ring._zero_exp else k.zero for e in eq_monos]
        sol = _solve(k, rows, rhs)
        if sol is None:
            continue
        n = len(monos)
        d = ring.element({m: v for m, v in zip(monos, sol[:n])})
        c = ring.element({m: v for m, v in zip(monos, sol[n:])})
        C = Mat(ring, [[a, b], [c, d]])
        if C.det() != 1:
            raise WitnessFailed("linear solve returned a non-completion")
        return C
    raise NoSolutionInBound(f"no completion of ({a}, {b}) with entries of degree <= {degree}")


# -- the chain for diag(M0(u), 1) -----------------------------------------------------


TYPO_NOTE = (
    "The shift adds (1+u)(1+a)*(1+a) = (1+u)(1+a^2) to the first entry, so the "
    "identity checked is 1+(1+u)a^2+(1+u)(1+a^2) = u."
)


@dataclass
class ChainReport:
    certificate: ElementaryCertificate
    steps: list = dc_field(default_factory=list)
    note: str = TYPO_NOTE

    @property
    def length(self):
        return len(self.certificate)


def _step(steps, name, ok, detail=""):
    steps.append((name, bool(ok), detail))
    if not ok:
        raise ChainStepFailed(f"chain step failed: {name} {detail}".strip())


def _shift_to_unit(sym_start, t, steps, label):
    """Certificate for a completion of ``sym_start`` whose first-entry shift by ``t`` is a unit symbol."""
    shifted, witness = symbol_shift(sym_start, "first", t)
    _step(steps, f"{label}: shifted first entry", True, str(shifted.a))
    unit_cert = symbol_unit_certificate(shifted)
    return pull_back(sym_start, witness, unit_cert)


def run_lemma21_chain(field, u, degree=DEFAULT_DEGREE):
    """Verified elementary factorization of ``diag(M0(u), 1)`` over R."""
    u = field.coerce(u)
    M0 = build_M0(field, u)
    R = catalog(field).R
    a, x, y = R.gens()
    one = R.one
    w = one + u
    f = one + w * a * a
    steps = []

    _step(steps, "first row of M0 is (f, (1+u)(1+a)y)", M0[0, 0] == f and M0[0, 1] == w * (1 + a) * y)
    _step(steps, "(1+u)(1+a)^2 = (1+u)(1+a^2)", w * (1 + a) * (1 + a) == w * (1 + a * a))
    _step(steps, "1+(1+u)a^2+(1+u)(1+a^2) = u", f + w * (1 + a * a) == R.const(u))
    _step(steps, "1+(1+u)a^2+(1+u)xy = 1", f + w * x * y == one)

    # [f, y]  ->  [1, y]
    s_y = MennickeSymbol.from_completion(find_completion(f, y, degree))
    cert_y = _shift_to_unit(s_y, w * x, steps, "[f, y]")
    _step(steps, "[f, y] trivial", cert_y.verify())

    # [f, 1+a]  ->  [u, 1+a]
    s_a = MennickeSymbol.from_completion(find_completion(f, 1 + a, degree))
    cert_a = _shift_to_unit(s_a, w * (1 + a), steps, "[f, 1+a]")
    _step(steps, "[f, 1+a] trivial", cert_a.verify())

    # [f, 1+u] has a unit second entry
    s_w = MennickeSymbol.from_completion(Mat(R, [[f, w], [-R.const(w.constant_term().inverse()), 0]]))
    cert_w = symbol_unit_certificate(s_w)
    _step(steps, "[f, 1+u] trivial", cert_w.verify())

    s_ay, combine = symbol_mult_second(s_a, s_y)
    cert_ay = combine(cert_a, cert_y)
    _step(steps, "[f, (1+a)y] = [f, 1+a][f, y]", s_ay.b == (1 + a) * y)

    s_top, combine = symbol_mult_second(s_w, s_ay)
    cert_top = combine(cert_w, cert_ay)
    _step(steps, "[f, (1+u)(1+a)y] = [f, 1+u][f, (1+a)y]", s_top.b == M0[0, 1])

    L = completion_shift(s_top.completion, M0)
    cert = ElementaryCertificate.checked(R, 3, embed(M0), L + list(cert_top.factors))
    _step(steps, "certificate product = diag(M0(u), 1)", cert.verify(), f"{len(cert)} factors")
    return ChainReport(cert, steps)

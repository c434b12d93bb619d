import pytest

from stablyfree.algebra import GF2n
from stablyfree.errors import FirstEntryMismatch, NoSolutionInBound, NotAUnit, PreconditionError
from stablyfree.matgroup import ElementaryCertificate, Mat, build_M0, elementary
from stablyfree.mennicke import (
    MennickeSymbol,
    completion_shift,
    embed,
    find_completion,
    pull_back,
    run_lemma21_chain,
    symbol_mult_second,
    symbol_shift,
    symbol_unit_certificate,
)


@pytest.fixture
def R(cat):
    return cat.R


@pytest.fixture
def f(R, u):
    return R.one + (1 + u) * R.gen("a") ** 2


def _symbol(a, b, degree=6):
    return MennickeSymbol.from_completion(find_completion(a, b, degree))


def test_completion_found(R, f):
    C = find_completion(f, R.gen("y"))
    assert C.det() == 1 and C[0, 0] == f


def test_no_completion_for_non_unimodular_row(R):
    with pytest.raises(NoSolutionInBound):
        find_completion(R.gen("a"), R.gen("x"), degree=3)


def test_symbol_needs_det_one(R):
    with pytest.raises(PreconditionError):
        MennickeSymbol.from_completion(Mat(R, [[1, 0], [0, R.gen("a")]]))


def test_shift_y_becomes_trivial(R, f, u):
    sym = _symbol(f, R.gen("y"))
    new, (left, right) = symbol_shift(sym, "first", (1 + u) * R.gen("x"))
    assert new.a == 1 and new.b == R.gen("y")
    assert not left and right


def test_shift_to_u(R, f, u):
    a = R.gen("a")
    sym = _symbol(f, 1 + a)
    new, _ = symbol_shift(sym, "first", (1 + u) * (1 + a))
    assert new.a == R.const(u) and new.b == 1 + a


def test_zero_shift(R, f):
    sym = _symbol(f, R.gen("y"))
    new, (left, right) = symbol_shift(sym, "first", 0)
    assert new == sym and left == [] and right == []


def test_second_entry_shift(R, f):
    sym = _symbol(f, R.gen("y"))
    new, _ = symbol_shift(sym, "second", R.gen("x"))
    assert new.b == R.gen("y") + R.gen("x") * f


def test_pull_back(R, f, u):
    sym = _symbol(f, R.gen("y"))
    new, witness = symbol_shift(sym, "first", (1 + u) * R.gen("x"))
    cert = pull_back(sym, witness, symbol_unit_certificate(new))
    assert cert.product() == embed(sym.completion)


def test_unit_certificates(R, u):
    a = R.gen("a")
    sym = MennickeSymbol.from_completion(Mat(R, [[u, 1 + a], [0, u.inverse()]]))
    cert = symbol_unit_certificate(sym)
    assert cert.product() == embed(sym.completion)
    g = R.parse("x*y + a")
    # e21(0) is dropped, leaving e12(g) alone
    one = MennickeSymbol.from_completion(Mat(R, [[1, g], [0, 1]]))
    assert symbol_unit_certificate(one).factors == ((1, 2, g),)
    c = R.gen("x")
    two = MennickeSymbol.from_completion(Mat(R, [[1, g], [c, 1 + c * g]]))
    assert symbol_unit_certificate(two).factors == ((2, 1, c), (1, 2, g))


def test_no_unit_entry(R):
    a, x, y = R.gens()
    C = find_completion(1 + a, y, 4)
    with pytest.raises(NotAUnit):
        symbol_unit_certificate(MennickeSymbol.from_completion(C))


def test_multiplicativity(R, f, u):
    a, x, y = R.gens()
    s_w = MennickeSymbol.from_completion(Mat(R, [[f, 1 + u], [-R.const((1 + u).inverse()), 0]]))
    s_ay = _symbol(f, (1 + a) * y)
    prod, combine = symbol_mult_second(s_w, s_ay)
    assert prod.a == f and prod.b == (1 + u) * (1 + a) * y
    cert = combine(symbol_unit_certificate(s_w), _cert_for(s_ay, u))
    assert cert.product() == embed(prod.completion)


def _cert_for(sym, u):
    """Certificate of [f, (1+a)y] via the two shifts and one product."""
    R = sym.ring
    a, x, y = R.gens()
    f = sym.a
    s_a, s_y = _symbol(f, 1 + a), _symbol(f, y)
    c_a = pull_back(s_a, *_shift_then_unit(s_a, (1 + u) * (1 + a)))
    c_y = pull_back(s_y, *_shift_then_unit(s_y, (1 + u) * x))
    s, combine = symbol_mult_second(s_a, s_y)
    c = combine(c_a, c_y)
    L = completion_shift(s.completion, sym.completion)
    return ElementaryCertificate.checked(R, 3, embed(sym.completion), L + list(c.factors))


def _shift_then_unit(sym, t):
    new, witness = symbol_shift(sym, "first", t)
    return witness, symbol_unit_certificate(new)


def test_mult_with_trivial_symbol(R, f):
    y = R.gen("y")
    s1 = MennickeSymbol.from_completion(Mat(R, [[f, 1], [f - 1, 1]]))
    s2 = _symbol(f, y)
    prod, _ = symbol_mult_second(s1, s2)
    assert prod.a == f and prod.b == y


def test_first_entry_mismatch(R, f):
    with pytest.raises(FirstEntryMismatch):
        symbol_mult_second(_symbol(f, R.gen("y")), _symbol(f + R.gen("y"), R.gen("y")))


def test_completion_shift(R, f):
    M = find_completion(f, R.gen("y"))
    assert completion_shift(M, M) == []
    r = R.parse("x^2 + a")
    M2 = elementary(R, 2, 2, 1, r) * M
    assert completion_shift(M, M2) == [(2, 1, r)]
    with pytest.raises(PreconditionError):
        completion_shift(M, Mat.identity(R, 2))


def test_chain_ring_identity(R, f, u):
    a = R.gen("a")
    assert f + (1 + u) * (1 + a * a) == R.const(u)


@pytest.mark.parametrize("n,u_text", [(None, "u"), (None, "u+1"), (None, "u^2/(1+u+u^3)"), (2, "w"), (3, "w+1")])
def test_chain_certificate(F, n, u_text):
    field = F if n is None else GF2n.default(n)
    u = field.coerce(u_text)
    report = run_lemma21_chain(field, u)
    assert report.certificate.product() == embed(build_M0(field, u))
    assert report.certificate.verify()
    assert all(ok for _, ok, _ in report.steps)
    assert report.length == len(report.certificate.factors) > 0

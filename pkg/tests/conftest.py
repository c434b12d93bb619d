import random

import pytest

from stablyfree.algebra import GF2n, RationalFunctionField, catalog
from stablyfree.matgroup import Mat


@pytest.fixture(scope="session")
def F():
    return RationalFunctionField()


@pytest.fixture(scope="session")
def G4():
    return GF2n.default(2)


@pytest.fixture(scope="session")
def cat(F):
    return catalog(F)


@pytest.fixture(scope="session")
def u(F):
    return F.gen


@pytest.fixture
def rng():
    return random.Random(0)


# -- independent oracles ---------------------------------------------------------
# Written without the package's own arithmetic so they can catch its mistakes.


def bits_mul_mod(x, y, modulus):
    """Schoolbook GF(2)[w] product reduced mod ``modulus``, on bit lists."""
    xs = [(x >> i) & 1 for i in range(x.bit_length())]
    ys = [(y >> i) & 1 for i in range(y.bit_length())]
    prod = [0] * (len(xs) + len(ys))
    for i, a in enumerate(xs):
        for j, b in enumerate(ys):
            prod[i + j] ^= a & b
    ms = [(modulus >> i) & 1 for i in range(modulus.bit_length())]
    n = len(ms) - 1
    for k in range(len(prod) - 1, n - 1, -1):
        if prod[k]:
            for i, m in enumerate(ms):
                prod[k - n + i] ^= m
    return sum(b << i for i, b in enumerate(prod[:n]))


def gf_pow(x, e, modulus):
    out = 1
    for _ in range(e):
        out = bits_mul_mod(out, x, modulus)
    return out


def eval_bitpoly(p, alpha, modulus):
    """Evaluate a GF(2)[u] bit-polynomial at ``alpha`` in GF(2)[w]/(modulus)."""
    acc = 0
    for i in range(p.bit_length() - 1, -1, -1):
        acc = bits_mul_mod(acc, alpha, modulus)
        acc ^= (p >> i) & 1
    return acc


def gf_inv(x, modulus):
    n = modulus.bit_length() - 1
    return gf_pow(x, 2**n - 2, modulus)


def eval_rational(elem, alpha, modulus):
    """F_2(u) -> GF(2^n), u -> alpha; None when the denominator vanishes."""
    num, den = elem.value
    d = eval_bitpoly(den, alpha, modulus)
    if d == 0:
        return None
    return bits_mul_mod(eval_bitpoly(num, alpha, modulus), gf_inv(d, modulus), modulus)


def eval_poly(f, point, modulus):
    """Evaluate a ring element with GF(2^n) coefficients at ``point`` (bit ints)."""
    total = 0
    for exp, c in f.terms.items():
        term = c.value
        for v, e in zip(point, exp):
            term = bits_mul_mod(term, gf_pow(v, e, modulus), modulus)
        total ^= term
    return total


def hand_psi_M(field, u):
    """psi(M(u)) typed in directly: psi(M0(u)) with psi(a) = st, times e21((1+u^-1)t)."""
    ST = catalog(field).POLY_ST
    v = u.inverse()
    s, t = ST.gens()
    M0 = Mat(
        ST,
        [
            [1 + (1 + u) * s * s * t * t, (1 + u) * (1 + s * t) * s * s * t],
            [(1 + v) * (1 + s * t) * t, 1 + (1 + v) * s * s * t * t],
        ],
    )
    return M0 * Mat(ST, [[1, 0], [(1 + v) * t, 1]])


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, name, elapsed, limit = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  {number:>2}. {name}  ({elapsed:.2f} s, limit {limit} s)"
        )

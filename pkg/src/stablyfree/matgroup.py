"""Square matrices over presented rings, elementary matrices and certificates."""

import functools
from dataclasses import dataclass

from stablyfree.algebra.homs import catalog
from stablyfree.errors import (
    BadIndex,
    BadParameter,
    DimensionMismatch,
    OddDimension,
    PresentationMismatch,
    VerifyFailed,
)

MAX_DIM = 6


class Mat:
    """Immutable n x n matrix of normal-form ring elements."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        rows = tuple(tuple(ring.coerce(e) for e in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, n):
        return cls(ring, [[0] * n for _ in range(n)])

    @classmethod
    def block_diag(cls, ring, *blocks):
        n = sum(b.n for b in blocks)
        rows = [[ring.zero] * n for _ in range(n)]
        k = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    rows[k + i][k + j] = b[i, j]
            k += b.n
        return cls(ring, rows)

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def _check(self, other):
        if other.ring != self.ring:
            raise PresentationMismatch(f"{self.ring} vs {other.ring}")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __mul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            n = self.n
            cols = [other.column(j) for j in range(n)]
            zero = self.ring.zero
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    acc = zero
                    for a, b in zip(row, col):
                        if a.terms and b.terms:
                            acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return Mat(self.ring, out)
        scalar = self.ring.coerce(other)
        return Mat(self.ring, [[scalar * e for e in row] for row in self.rows])

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return Mat(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return Mat(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.n:
            raise DimensionMismatch("vector length")
        return tuple(sum((a * v for a, v in zip(row, vec)), self.ring.zero) for row in self.rows)

    def transpose(self):
        return Mat(self.ring, list(zip(*self.rows)))

    def det(self):
        """Cofactor expansion along the first row, memoized on column subsets."""
        n = self.n
        if n > MAX_DIM + 2:
            raise DimensionMismatch(f"det by cofactor expansion is limited to n <= {MAX_DIM + 2}")
        rows = self.rows
        zero = self.ring.zero

        @functools.lru_cache(maxsize=None)
        def minor(row, cols):
            if len(cols) == 1:
                return rows[row][cols[0]]
            total = zero
            for k, c in enumerate(cols):
                entry = rows[row][c]
                if entry.is_zero():
                    continue
                sub = minor(row + 1, cols[:k] + cols[k + 1:])
                term = entry * sub
                total = total - term if k % 2 else total + term
            return total

        if n == 0:
            return self.ring.one
        return minor(0, tuple(range(n)))

    def map(self, hom):
        if hom.source != self.ring:
            raise PresentationMismatch(f"{hom.name} expects {hom.source}, matrix is over {self.ring}")
        return Mat(hom.target, [[hom(e) for e in row] for row in self.rows])

    def is_identity(self):
        return all(e == (1 if i == j else 0) for i, row in enumerate(self.rows) for j, e in enumerate(row))

    def first_difference(self, other):
        """First ``(i, j, mine, theirs)`` where entries differ, or None."""
        self._check(other)
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            for j, (a, b) in enumerate(zip(r, s)):
                if a != b:
                    return i, j, a, b
        return None

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return f"Mat({self.ring}, {self.n}x{self.n})"

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def elementary(ring, n, i, j, r):
    """Identity plus ``r`` at row ``i``, column ``j`` (1-based)."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise BadIndex(f"elementary({n}, {i}, {j}) needs distinct indices in 1..{n}")
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] = ring.coerce(r)
    return Mat(ring, rows)


def chi(ring, n):
    """Standard alternating form: block diagonal of ((0, 1), (-1, 0))."""
    if n % 2:
        raise OddDimension(f"alternating form needs even dimension, got {n}")
    rows = [[0] * n for _ in range(n)]
    for k in range(0, n, 2):
        rows[k][k + 1] = 1
        rows[k + 1][k] = -ring.one
    return Mat(ring, rows)


def is_symplectic(M):
    if M.n % 2:
        raise OddDimension(f"symplectic check needs even dimension, got {M.n}")
    form = chi(M.ring, M.n)
    return M.transpose() * form * M == form


def _check_u(u):
    if u.is_zero() or u.is_one():
        raise BadParameter(f"u must avoid 0 and 1, got {u}")


def build_M0(field, u):
    """M0(u) over R; first row (1+(1+u)a^2, (1+u)(1+a)y)."""
    u = field.coerce(u)
    _check_u(u)
    R = catalog(field).R
    a, x, y = R.gens()
    v = u.inverse()
    return Mat(
        R,
        [
            [1 + (1 + u) * a * a, (1 + u) * (1 + a) * y],
            [(1 + v) * (1 + a) * x, 1 + (1 + v) * a * a],
        ],
    )


def build_M(field, u):
    u = field.coerce(u)
    R = catalog(field).R
    return build_M0(field, u) * elementary(R, 2, 2, 1, (1 + u.inverse()) * R.gen("x"))


def _merge(factors):
    out = []
    for i, j, r in factors:
        if r.is_zero():
            continue
        if out and out[-1][0] == i and out[-1][1] == j:
            merged = out[-1][2] + r
            out.pop()
            if not merged.is_zero():
                out.append((i, j, merged))
        else:
            out.append((i, j, r))
    return out


def product_of(ring, n, factors):
    result = Mat.identity(ring, n)
    for i, j, r in factors:
        result = result * elementary(ring, n, i, j, r)
    return result


def inverse_factors(factors):
    """Factors of the inverse product: reversed order, negated parameters."""
    return [(i, j, -r) for i, j, r in reversed(factors)]


@dataclass(frozen=True)
class ElementaryCertificate:
    """``target = e(f1) e(f2) ... e(fk)`` with factors applied left to right.

    Construction merges adjacent factors in the same position and drops zero
    parameters; it does not verify. Call :meth:`verify` (or use
    :meth:`checked`) before trusting one.
    """

    ring: object
    n: int
    target: Mat
    factors: tuple

    @classmethod
    def checked(cls, ring, n, target, factors):
        factors = tuple(_merge((i, j, ring.coerce(r)) for i, j, r in factors))
        cert = cls(ring, n, target, factors)
        cert.verify()
        return cert

    def product(self):
        return product_of(self.ring, self.n, self.factors)

    def verify(self):
        """Raise :class:`VerifyFailed` unless the product equals the target."""
        prod = self.product()
        diff = prod.first_difference(self.target)
        if diff is not None:
            i, j, got, want = diff
            raise VerifyFailed(
                f"entry ({i + 1},{j + 1}): product has {got}, target has {want}",
                detail=(i + 1, j + 1, got, want),
            )
        return True

    def inverse(self):
        inv = inverse_factors(self.factors)
        return ElementaryCertificate(self.ring, self.n, product_of(self.ring, self.n, inv), tuple(inv))

    def __len__(self):
        return len(self.factors)

    def max_degree(self):
        return max((r.degree() for _, _, r in self.factors), default=-1)

    def describe(self):
        return " ".join(f"e{i}{j}({r})" for i, j, r in self.factors)


def psi_M_factorization(field, u):
    """Six elementary factors over k[s,t] whose product is psi(M(u))."""
    u = field.coerce(u)
    _check_u(u)
    c = catalog(field)
    ST = c.POLY_ST
    s, t = ST.gens()
    v = u.inverse()
    factors = [
        (1, 2, s * u),
        (2, 1, t * v),
        (1, 2, s * (1 + u)),
        (2, 1, t),
        (1, 2, s),
        (2, 1, t * (1 + v)),
    ]
    target = build_M(field, u).map(c.psi)
    return ElementaryCertificate.checked(ST, 2, target, factors)


def reduce_mod_A(M):
    """Image of a k[s,t] matrix in A = k[s,t]/(s^2,st,t^2)."""
    c = catalog(M.ring.field)
    return M.map(c.pi_A)


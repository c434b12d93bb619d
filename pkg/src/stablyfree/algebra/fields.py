"""Characteristic-2 coefficient fields.

Two field descriptors are supported:

* :class:`GF2n` -- the finite field GF(2)[w]/(modulus), elements stored as
  reduced bit-polynomials;
* :class:`RationalFunctionField` -- F_2(u), elements stored as
  ``(numerator, denominator)`` bit-polynomials in lowest terms.

Elements of either are :class:`FieldElem` instances. Representations are
canonical, so equality and hashing are by representation.
"""

from stablyfree.algebra import gf2poly
from stablyfree.errors import BadParameter, FieldMismatch


class Field:
    """Common interface; subclasses implement the ``_``-prefixed primitives."""

    characteristic = 2
    gen_names = ()

    # element constructors ---------------------------------------------------
    def __call__(self, value):
        return self.coerce(value)

    @property
    def zero(self):
        return FieldElem(self, self._from_int(0))

    @property
    def one(self):
        return FieldElem(self, self._from_int(1))

    @property
    def gen(self):
        """The distinguished transcendental / primitive generator."""
        return FieldElem(self, self._gen())

    def coerce(self, value):
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElem(self, self._from_int(value & 1))
        if isinstance(value, str):
            from stablyfree.algebra.parse import parse_field_element

            return parse_field_element(self, value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def is_square(self, x):
        """Return ``(flag, root)``; ``root * root == x`` whenever ``flag``."""
        x = self.coerce(x)
        value = self._sqrt(x.value)
        if value is None:
            return False, None
        root = FieldElem(self, value)
        assert root * root == x
        return True, root


class GF2n(Field):
    """GF(2^n) = GF(2)[w]/(modulus); ``modulus`` is a bit-polynomial."""

    gen_names = ("w", "u")
    is_finite = True

    def __init__(self, n, modulus):
        if gf2poly.degree(modulus) != n or n < 1:
            raise BadParameter(f"modulus {bin(modulus)} does not have degree {n}")
        if not gf2poly.is_irreducible(modulus):
            raise BadParameter(f"modulus {gf2poly.to_str(modulus, 'w')} is reducible over GF(2)")
        self.n = n
        self.modulus = modulus

    @classmethod
    def default(cls, n):
        """GF(2^n) with the smallest irreducible modulus of degree ``n``."""
        for modulus in range(1 << n, 1 << (n + 1)):
            if gf2poly.is_irreducible(modulus):
                return cls(n, modulus)
        raise BadParameter(f"no irreducible polynomial of degree {n}")

    @property
    def order(self):
        return 1 << self.n

    def __eq__(self, other):
        return isinstance(other, GF2n) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash(("GF2n", self.n, self.modulus))

    def __repr__(self):
        return f"GF2n({self.n}, {bin(self.modulus)})"

    def __str__(self):
        return f"GF(2^{self.n})"

    def spec(self):
        return f"gf2:{self.n}:{self.modulus:b}"

    def elements(self):
        return [FieldElem(self, v) for v in range(self.order)]

    def random_element(self, rng, degree=None):
        return FieldElem(self, rng.randrange(self.order))

    # primitives
    def _from_int(self, i):
        return i

    def _gen(self):
        return gf2poly.mod(0b10, self.modulus)

    def _add(self, x, y):
        return x ^ y

    def _mul(self, x, y):
        return gf2poly.mulmod(x, y, self.modulus)

    def _inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self))
        d, s, _ = gf2poly.egcd(x, self.modulus)
        assert d == 1
        return gf2poly.mod(s, self.modulus)

    def _sqrt(self, x):
        # Frobenius is bijective: sqrt(x) = x^(2^(n-1))
        return gf2poly.powmod(x, 1 << (self.n - 1), self.modulus)

    def _is_zero(self, x):
        return x == 0

    def _is_one(self, x):
        return x == 1

    def _str(self, x):
        return gf2poly.to_str(x, "w")


class RationalFunctionField(Field):
    """F_2(u), the non-perfect field of rational functions over GF(2)."""

    gen_names = ("u",)
    is_finite = False

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField)

    def __hash__(self):
        return hash("F2(u)")

    def __repr__(self):
        return "RationalFunctionField()"

    def __str__(self):
        return "F2(u)"

    def spec(self):
        return "f2-rational"

    def random_element(self, rng, degree=2):
        """Uniform polynomial in ``u`` of degree at most ``degree``."""
        return FieldElem(self, (rng.randrange(1 << (degree + 1)), 1))

    def fraction(self, num, den):
        """Element ``num/den`` from bit-polynomials."""
        return FieldElem(self, self._reduce(num, den))

    @staticmethod
    def _reduce(num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if num == 0:
            return (0, 1)
        g = gf2poly.gcd(num, den)
        if g != 1:
            num = gf2poly.divmod_(num, g)[0]
            den = gf2poly.divmod_(den, g)[0]
        return (num, den)

    def _from_int(self, i):
        return (i, 1)

    def _gen(self):
        return (0b10, 1)

    def _add(self, x, y):
        (a, b), (c, d) = x, y
        if b == d:
            return self._reduce(a ^ c, b)
        return self._reduce(gf2poly.mul(a, d) ^ gf2poly.mul(c, b), gf2poly.mul(b, d))

    def _mul(self, x, y):
        (a, b), (c, d) = x, y
        if a == 0 or c == 0:
            return (0, 1)
        return self._reduce(gf2poly.mul(a, c), gf2poly.mul(b, d))

    def _inv(self, x):
        a, b = x
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F2(u)")
        return (b, a)

    def _sqrt(self, x):
        # lowest terms: p/q is a square iff p and q are
        a, b = x
        if gf2poly.is_square(a) and gf2poly.is_square(b):
            return (gf2poly.sqrt(a), gf2poly.sqrt(b))
        return None

    def _is_zero(self, x):
        return x[0] == 0

    def _is_one(self, x):
        return x == (1, 1)

    def _str(self, x):
        a, b = x
        if b == 1:
            return gf2poly.to_str(a)
        num = gf2poly.to_str(a)
        if "+" in num:
            num = f"({num})"
        den = gf2poly.to_str(b)
        if "+" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"


class FieldElem:
    """Immutable element of a :class:`Field`."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return FieldElem(self.field, self.field._from_int(other & 1))
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElem(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return self.field._is_zero(self.value)

    def is_one(self):
        return self.field._is_one(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldElem(self.field, self.field._from_int(other & 1))
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"FieldElem({self.field}, {self})"

    def __str__(self):
        return self.field._str(self.value)


def field_from_spec(spec):
    """Parse ``f2-rational`` or ``gf2:<n>:<modulus-bits>``."""
    spec = spec.strip()
    if spec in ("f2-rational", "f2(u)"):
        return RationalFunctionField()
    if spec.startswith("gf2:"):
        parts = spec.split(":")
        try:
            if len(parts) == 2:
                return GF2n.default(int(parts[1]))
            if len(parts) == 3:
                n, bits = int(parts[1]), int(parts[2], 2)
                return GF2n(n, bits)
        except ValueError as exc:
            if isinstance(exc, BadParameter):
                raise
            raise BadParameter(f"malformed field spec {spec!r}") from exc
    raise BadParameter(f"unknown field spec {spec!r}; use f2-rational or gf2:<n>:<modulus-bits>")

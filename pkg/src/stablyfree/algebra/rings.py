"""Sparse multivariate polynomials over a char-2 field, modulo rewrite rules.

A :class:`Presentation` is a finitely presented commutative k-algebra
``k[vars]/(relators)`` together with a terminating, confluent set of
monomial rewrite rules ``lhs -> replacement``. Elements
(:class:`RingElem`) are kept in normal form: a dict from exponent tuples to
nonzero :class:`~stablyfree.algebra.fields.FieldElem` coefficients, none of
whose monomials is divisible by a rule's left-hand side.
"""

import itertools

from stablyfree.algebra.fields import FieldElem
from stablyfree.errors import NotAUnit, NotDivisible, PresentationMismatch

#: squarings tried by :func:`ring_inverse` before declaring a non-unit
NILPOTENCY_BOUND = 8


def _divides(small, big):
    return all(s <= b for s, b in zip(small, big))


def _add_exp(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def _sub_exp(e1, e2):
    return tuple(a - b for a, b in zip(e1, e2))


def _accumulate(terms, exp, coeff):
    current = terms.get(exp)
    if current is None:
        terms[exp] = coeff
    else:
        total = current + coeff
        if total.is_zero():
            del terms[exp]
        else:
            terms[exp] = total


class Presentation:
    """``k[vars]/(relators)`` with rewrite rules.

    ``rules`` is a sequence of ``(lhs, replacement)`` pairs where ``lhs`` is
    an exponent tuple and ``replacement`` a dict ``{exponent: coefficient}``;
    the relator of a rule is ``lhs - replacement``.

    The monomial order is graded by ``weights`` (default all 1), ties broken
    lexicographically in the variable order given by ``priority`` (default
    the listed order). Every rule's left-hand side must be the leading
    monomial of its relator, which makes rewriting terminate.
    """

    def __init__(self, name, variables, field, rules=(), weights=None, priority=None):
        self.name = name
        self.vars = tuple(variables)
        self.field = field
        self.nvars = len(self.vars)
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if priority is None:
            priority = self.vars
        self._priority = tuple(self.vars.index(v) for v in priority)
        one = field.one
        self.rules = tuple(
            (tuple(lhs), {tuple(e): field.coerce(c) for e, c in rep.items() if not field.coerce(c).is_zero()})
            for lhs, rep in rules
        )
        self._zero_exp = (0,) * self.nvars
        self._one = one
        self._nf_cache = {}
        for lhs, rep in self.rules:
            for exp in rep:
                if self.monomial_key(exp) >= self.monomial_key(lhs):
                    raise ValueError(f"rule {self.monomial_str(lhs)} does not decrease the order")

    # identity -----------------------------------------------------------------
    def _ident(self):
        return (self.name, self.vars, self.field)

    def __eq__(self, other):
        return isinstance(other, Presentation) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"Presentation({self.name!r}, {self.vars}, {self.field})"

    def __str__(self):
        return self.name

    # order and printing -----------------------------------------------------
    def monomial_key(self, exp):
        return (sum(w * e for w, e in zip(self.weights, exp)), tuple(exp[i] for i in self._priority))

    def monomial_str(self, exp):
        parts = []
        for v, e in zip(self.vars, exp):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    def relators(self):
        """The relators ``lhs - replacement`` as elements of the free algebra terms."""
        out = []
        for lhs, rep in self.rules:
            terms = dict(rep)
            _accumulate(terms, lhs, self._one)
            out.append(terms)
        return out

    # constructors ---------------------------------------------------------------
    def element(self, terms):
        """Normalize an arbitrary ``{exponent: coefficient}`` dict."""
        return RingElem(self, self.normalize(terms))

    @property
    def zero(self):
        return RingElem(self, {})

    @property
    def one(self):
        return RingElem(self, {self._zero_exp: self._one})

    def const(self, c):
        c = self.field.coerce(c)
        return RingElem(self, {} if c.is_zero() else {self._zero_exp: c})

    def gen(self, name):
        i = self.vars.index(name)
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.element({exp: self._one})

    def gens(self):
        return tuple(self.gen(v) for v in self.vars)

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, RingElem):
            if value.ring != self:
                raise PresentationMismatch(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, (int, FieldElem)):
            return self.const(value)
        if isinstance(value, str):
            from stablyfree.algebra.parse import parse_element

            return parse_element(self, value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def parse(self, text):
        from stablyfree.algebra.parse import parse_element

        return parse_element(self, text)

    # normal forms ---------------------------------------------------------------
    def is_reducible(self, exp):
        return any(_divides(lhs, exp) for lhs, _ in self.rules)

    def reduce_monomial(self, exp):
        """Normal form of the monomial ``exp`` as a terms dict (cached)."""
        cached = self._nf_cache.get(exp)
        if cached is not None:
            return cached
        for lhs, rep in self.rules:
            if _divides(lhs, exp):
                rest = _sub_exp(exp, lhs)
                result = {}
                for rexp, rc in rep.items():
                    for nexp, nc in self.reduce_monomial(_add_exp(rexp, rest)).items():
                        _accumulate(result, nexp, rc * nc)
                break
        else:
            result = {exp: self._one}
        self._nf_cache[exp] = result
        return result

    def normalize(self, terms):
        if not self.rules:
            return {e: c for e, c in terms.items() if not c.is_zero()}
        result = {}
        for exp, coeff in terms.items():
            if coeff.is_zero():
                continue
            if not self.is_reducible(exp):
                _accumulate(result, exp, coeff)
                continue
            for nexp, nc in self.reduce_monomial(exp).items():
                _accumulate(result, nexp, coeff * nc)
        return result

    def reduce_randomly(self, terms, rng):
        """Rewrite one randomly chosen redex at a time until irreducible.

        Independent of :meth:`normalize` (no cache, no fixed rule order); used
        to sample confluence.
        """
        terms = {e: c for e, c in terms.items() if not c.is_zero()}
        while True:
            redexes = [(exp, lhs, rep) for exp in terms for lhs, rep in self.rules if _divides(lhs, exp)]
            if not redexes:
                return terms
            exp, lhs, rep = rng.choice(redexes)
            coeff = terms.pop(exp)
            rest = _sub_exp(exp, lhs)
            for rexp, rc in rep.items():
                _accumulate(terms, _add_exp(rexp, rest), coeff * rc)

    def critical_pairs(self):
        """Resolve every overlap of rule left-hand sides.

        Returns a list of ``(i, j, lcm, nf_via_i, nf_via_j)``; the system is
        confluent iff ``nf_via_i == nf_via_j`` for all entries (Buchberger /
        Newman: the rules terminate by construction).
        """
        out = []
        for (i, (lhs_i, rep_i)), (j, (lhs_j, rep_j)) in itertools.combinations(enumerate(self.rules), 2):
            lcm = tuple(max(a, b) for a, b in zip(lhs_i, lhs_j))
            via_i = self.normalize(
                {_add_exp(e, _sub_exp(lcm, lhs_i)): c for e, c in rep_i.items()}
            )
            via_j = self.normalize(
                {_add_exp(e, _sub_exp(lcm, lhs_j)): c for e, c in rep_j.items()}
            )
            out.append((i, j, lcm, via_i, via_j))
        return out

    def is_confluent(self):
        return all(a == b for _, _, _, a, b in self.critical_pairs())

    def monomials(self, max_degree):
        """All exponent vectors of total degree at most ``max_degree``."""
        out = []
        for total in range(max_degree + 1):
            for combo in itertools.combinations_with_replacement(range(self.nvars), total):
                exp = [0] * self.nvars
                for i in combo:
                    exp[i] += 1
                out.append(tuple(exp))
        return out

    def normal_monomials(self, max_degree):
        return [e for e in self.monomials(max_degree) if not self.is_reducible(e)]


class RingElem:
    """Normal-form element of a :class:`Presentation`. Immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    def _other(self, other):
        if isinstance(other, RingElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise PresentationMismatch(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, FieldElem)):
            return self.ring.const(other)
        return NotImplemented

    # arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            _accumulate(terms, exp, c)
        return RingElem(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            if other.is_zero():
                return self.ring.zero
            return RingElem(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._other(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        product = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _accumulate(product, _add_exp(e1, e2), c1 * c2)
        return RingElem(ring, ring.normalize(product))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return ring_inverse(self) ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # inspection ----------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def is_constant(self):
        return all(e == self.ring._zero_exp for e in self.terms)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def degree(self):
        """Total degree; ``-1`` for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var):
        i = self.ring.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self):
        key = self.ring.monomial_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero has no leading term")
        return self.sorted_terms()[0]

    def __eq__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = self.ring.const(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return f"RingElem({self.ring.name}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = self.ring.monomial_str(exp)
            cs = str(c)
            if mono == "1":
                parts.append(cs)
            elif c.is_one():
                parts.append(mono)
            else:
                if "+" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def reinterpret(f, target):
    """Read the normal-form terms of ``f`` in ``target`` (same variables).

    Used for the canonical set-theoretic section of a quotient map, e.g. the
    ``deg_a <= 1`` representative in k[a,x,y] of an element of R.
    """
    if f.ring.vars != target.vars or f.ring.field != target.field:
        raise PresentationMismatch(f"{f.ring} and {target} have different generators")
    return target.element(dict(f.terms))


def ring_inverse(f):
    """Inverse of ``f = c + n`` with ``c`` a nonzero constant and ``n`` nilpotent.

    Nilpotency of ``m = -n/c`` is established by repeated squaring
    (``m^(2^j) == 0`` for some ``j <= NILPOTENCY_BOUND``); the inverse is then
    ``c^-1 * (1 + m)(1 + m^2)...(1 + m^(2^(j-1)))``. The result is checked.
    """
    ring = f.ring
    c = f.constant_term()
    if c.is_zero():
        raise NotAUnit(f"{f} has zero constant term in {ring}")
    c_inv = c.inverse()
    m = -(f - ring.const(c)) * c_inv
    factors = []
    power = m
    for _ in range(NILPOTENCY_BOUND + 1):
        if power.is_zero():
            break
        factors.append(power)
        power = power * power
    else:
        raise NotAUnit(f"{f} is not a unit of {ring}: no nilpotent part within bound")
    inv = ring.const(c_inv)
    for p in factors:
        inv = inv * (ring.one + p)
    if f * inv != ring.one:
        raise NotAUnit(f"inverse check failed for {f}")
    return inv


def is_unit(f):
    try:
        ring_inverse(f)
    except NotAUnit:
        return False
    return True


def divide_exact(f, d):
    """Return ``q`` with ``q * d == f`` in a free polynomial presentation.

    Multivariate division by the leading monomial of ``d``; raises
    :class:`NotDivisible` carrying the full remainder otherwise.
    """
    ring = f.ring
    if d.ring != ring:
        raise PresentationMismatch(f"{f.ring} vs {d.ring}")
    if ring.rules:
        raise PresentationMismatch(f"divide_exact needs a free polynomial ring, got {ring}")
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead_exp, lead_c = d.leading_term()
    lead_inv = lead_c.inverse()
    quotient = {}
    remainder = {}
    work = dict(f.terms)
    key = ring.monomial_key
    while work:
        exp = max(work, key=key)
        coeff = work[exp]
        if _divides(lead_exp, exp):
            qexp = _sub_exp(exp, lead_exp)
            qc = coeff * lead_inv
            _accumulate(quotient, qexp, qc)
            for dexp, dc in d.terms.items():
                _accumulate(work, _add_exp(qexp, dexp), -(qc * dc))
        else:
            _accumulate(remainder, exp, coeff)
            del work[exp]
    if remainder:
        rem = RingElem(ring, remainder)
        raise NotDivisible(f"{f} is not divisible by {d}; remainder {rem}", remainder=rem)
    q = RingElem(ring, quotient)
    assert q * d == f
    return q

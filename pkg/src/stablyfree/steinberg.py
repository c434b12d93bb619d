"""Words in the free product of the two long-root subgroups x_alpha, x_-alpha.

A letter is ``(root, param)`` with ``root`` in ``{+1, -1}`` (for alpha and
-alpha) and ``param`` a ring element. The only relation used is additivity
``x(p) x(q) = x(p + q)`` within one root subgroup, so a word is reduced when
no parameter is zero and no two neighbours share a root. Any identity that
holds here also holds in the symplectic Steinberg group.
"""

from stablyfree.algebra.homs import catalog
from stablyfree.algebra.rings import is_unit
from stablyfree.errors import BadParameter, PresentationMismatch
from stablyfree.matgroup import Mat, elementary

ALPHA = 1
NEG_ALPHA = -1


def _root_name(root):
    return "a" if root == ALPHA else "-a"


class SteinbergWord:
    """Reduced word; build through :func:`word` or the group operations."""

    __slots__ = ("ring", "letters")

    def __init__(self, ring, letters):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "letters", tuple(letters))

    def __setattr__(self, name, value):
        raise AttributeError("SteinbergWord is immutable")

    def __mul__(self, other):
        return mul(self, other)

    def __invert__(self):
        return inv(self)

    def __len__(self):
        return len(self.letters)

    def is_empty(self):
        return not self.letters

    def __eq__(self, other):
        if not isinstance(other, SteinbergWord):
            return NotImplemented
        return self.ring == other.ring and self.letters == other.letters

    def __hash__(self):
        return hash((self.ring, self.letters))

    def __repr__(self):
        return f"SteinbergWord({self.ring}, {self})"

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x_{_root_name(r)}({p})" for r, p in self.letters)


def reduce_letters(ring, letters):
    """Stack reduction: merge equal-root neighbours, drop zero parameters."""
    stack = []
    for root, param in letters:
        if root not in (ALPHA, NEG_ALPHA):
            raise BadParameter(f"root must be +1 or -1, got {root}")
        param = ring.coerce(param)
        if param.is_zero():
            continue
        if stack and stack[-1][0] == root:
            merged = stack.pop()[1] + param
            if not merged.is_zero():
                stack.append((root, merged))
        else:
            stack.append((root, param))
    return SteinbergWord(ring, stack)


def reduce_randomly(ring, letters, rng):
    """Same reduction, performing one randomly chosen local move at a time."""
    word = [(root, ring.coerce(p)) for root, p in letters]
    while True:
        moves = [("drop", i) for i, (_, p) in enumerate(word) if p.is_zero()]
        moves += [("merge", i) for i in range(len(word) - 1) if word[i][0] == word[i + 1][0]]
        if not moves:
            return SteinbergWord(ring, word)
        kind, i = rng.choice(moves)
        if kind == "drop":
            del word[i]
        else:
            word[i : i + 2] = [(word[i][0], word[i][1] + word[i + 1][1])]


def word(ring, letters):
    return reduce_letters(ring, letters)


def x_alpha(ring, param):
    return reduce_letters(ring, [(ALPHA, param)])


def x_neg_alpha(ring, param):
    return reduce_letters(ring, [(NEG_ALPHA, param)])


def _same_ring(w1, w2):
    if w1.ring != w2.ring:
        raise PresentationMismatch(f"words over {w1.ring} and {w2.ring}")


def mul(w1, w2):
    _same_ring(w1, w2)
    return reduce_letters(w1.ring, w1.letters + w2.letters)


def inv(w):
    return SteinbergWord(w.ring, [(r, -p) for r, p in reversed(w.letters)])


def commutator(g, h):
    """``[g, h] = g h g^-1 h^-1``."""
    _same_ring(g, h)
    return reduce_letters(g.ring, g.letters + h.letters + inv(g).letters + inv(h).letters)


def conjugate(g, h):
    """``g h g^-1``."""
    return mul(mul(g, h), inv(g))


def identity(ring):
    return SteinbergWord(ring, ())


def word_map(hom, w):
    if hom.source != w.ring:
        raise PresentationMismatch(f"{hom.name} expects {hom.source}, word is over {w.ring}")
    return reduce_letters(hom.target, [(r, hom(p)) for r, p in w.letters])


def eval_sl2(w):
    """x_alpha(p) -> e12(p), x_-alpha(p) -> e21(p)."""
    result = Mat.identity(w.ring, 2)
    for root, p in w.letters:
        i, j = (1, 2) if root == ALPHA else (2, 1)
        result = result * elementary(w.ring, 2, i, j, p)
    return result


# the element z of k[s,t] and its commutator decomposition ---------------------


def _params(field, u):
    u = field.coerce(u)
    if u.is_zero() or u.is_one():
        raise BadParameter(f"u must avoid 0 and 1, got {u}")
    ST = catalog(field).POLY_ST
    s, t = ST.gens()
    return ST, u, u.inverse(), s, t


def z_word(field, u, first=None):
    """z = x_a(us) x_-a(u^-1 t) x_a((1+u)s) x_-a(t) x_a(s) x_-a((1+u^-1)t).

    ``first`` overrides the first parameter (used for mutation controls).
    """
    ST, u, v, s, t = _params(field, u)
    return reduce_letters(
        ST,
        [
            (ALPHA, s * u if first is None else first),
            (NEG_ALPHA, t * v),
            (ALPHA, s * (1 + u)),
            (NEG_ALPHA, t),
            (ALPHA, s),
            (NEG_ALPHA, t * (1 + v)),
        ],
    )


def z_commutators(field, u):
    """The three commutators whose product is z."""
    ST, u, v, s, t = _params(field, u)
    g1 = commutator(x_alpha(ST, s * u), x_neg_alpha(ST, t * v))
    g2 = commutator(x_neg_alpha(ST, t * v), x_alpha(ST, s))
    g3 = commutator(x_alpha(ST, s), x_neg_alpha(ST, t * (1 + v)))
    return g1, g2, g3


def check_lemma_z_commutators(field, u, z=None):
    """Return ``(holds, residual)`` where ``residual = z (g1 g2 g3)^-1`` reduced."""
    if z is None:
        z = z_word(field, u)
    g1, g2, g3 = z_commutators(field, u)
    residual = mul(z, inv(mul(mul(g1, g2), g3)))
    return residual.is_empty(), residual


def zbar_word(field, u):
    """Image of z over A = k[s,t]/(s^2,st,t^2)."""
    return word_map(catalog(field).pi_A, z_word(field, u))


def commutator_identity_residual(a, b, c):
    """``[a, bc] ([a, b] . b [a, c] b^-1)^-1`` reduced; empty for any words."""
    lhs = commutator(a, mul(b, c))
    rhs = mul(commutator(a, b), conjugate(b, commutator(a, c)))
    return mul(lhs, inv(rhs))


def central_side_conditions(p, q):
    """Side conditions for the central commutator: ``pq = 0`` and ``1+p``, ``1+q`` units.

    Returns ``{name: bool}``.
    """
    return {
        "pq = 0": (p * q).is_zero(),
        "1+p unit": is_unit(1 + p),
        "1+q unit": is_unit(1 + q),
    }

"""Polynomials over GF(2) packed into Python integers.

Bit ``i`` of the integer is the coefficient of ``u**i``; ``0`` is the zero
polynomial. All functions are pure and work on arbitrary-size ints.
"""


def degree(f):
    """Degree of ``f``; ``-1`` for the zero polynomial."""
    return f.bit_length() - 1


def mul(f, g):
    """Carry-less product."""
    if f.bit_length() < g.bit_length():
        f, g = g, f
    result = 0
    while g:
        if g & 1:
            result ^= f
        f <<= 1
        g >>= 1
    return result


def divmod_(f, g):
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    dg = degree(g)
    while f and degree(f) >= dg:
        shift = degree(f) - dg
        q ^= 1 << shift
        f ^= g << shift
    return q, f


def mod(f, g):
    return divmod_(f, g)[1]


def gcd(f, g):
    while g:
        f, g = g, mod(f, g)
    return f


def egcd(f, g):
    """Return ``(d, s, t)`` with ``s*f + t*g == d == gcd(f, g)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while g:
        q, r = divmod_(f, g)
        f, g = g, r
        s0, s1 = s1, s0 ^ mul(q, s1)
        t0, t1 = t1, t0 ^ mul(q, t1)
    return f, s0, t0


def mulmod(f, g, m):
    return mod(mul(f, g), m)


def powmod(f, e, m):
    result = 1
    f = mod(f, m)
    while e:
        if e & 1:
            result = mulmod(result, f, m)
        f = mulmod(f, f, m)
        e >>= 1
    return mod(result, m)


def square(f):
    """Frobenius: spread bit ``i`` to bit ``2i``."""
    result = 0
    i = 0
    while f:
        if f & 1:
            result |= 1 << (2 * i)
        f >>= 1
        i += 1
    return result


def is_square(f):
    """``f`` is a square in GF(2)[u] iff it has no odd-degree terms."""
    return f & int("10" * ((f.bit_length() + 1) // 2 or 1), 2) == 0


def sqrt(f):
    """Inverse of :func:`square`; ``f`` must satisfy :func:`is_square`."""
    if not is_square(f):
        raise ValueError("polynomial has odd-degree terms")
    result = 0
    i = 0
    while f:
        if f & 1:
            result |= 1 << i
        f >>= 2
        i += 1
    return result


def is_irreducible(f):
    """Ben-Or irreducibility test over GF(2)."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = 0b10
    power = x
    for _ in range(n // 2):
        power = mulmod(power, power, f)
        if gcd(f, power ^ x) != 1:
            return False
    return True


def to_str(f, var="u"):
    if f == 0:
        return "0"
    parts = []
    for i in range(degree(f), -1, -1):
        if f >> i & 1:
            if i == 0:
                parts.append("1")
            elif i == 1:
                parts.append(var)
            else:
                parts.append(f"{var}^{i}")
    return "+".join(parts)

"""Seeded random elements for property checks."""


def random_field_element(field, rng, degree=2):
    """Coefficient drawn from the degree-``degree`` slice of ``field``."""
    return field.random_element(rng, degree)


def random_element(ring, rng, degree=6, max_terms=4, coeff_degree=2):
    """Random element: up to ``max_terms`` uniform monomials of total degree <= ``degree``."""
    monomials = _monomials(ring, degree)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = rng.choice(monomials)
        c = random_field_element(ring.field, rng, coeff_degree)
        terms[exp] = terms.get(exp, ring.field.zero) + c
    return ring.element(terms)


_MONOMIAL_CACHE = {}


def _monomials(ring, degree):
    key = (ring.nvars, degree)
    if key not in _MONOMIAL_CACHE:
        _MONOMIAL_CACHE[key] = ring.monomials(degree)
    return _MONOMIAL_CACHE[key]

"""rho(zbar) as a Witt class: distinct over F_2(u), trivial for square u.

    python demos/witt_distinctness.py
"""

from stablyfree.algebra import GF2n, RationalFunctionField, catalog
from stablyfree.steinberg import check_lemma_z_commutators, word_map, zbar_word
from stablyfree import witt


def show(field, u):
    c = catalog(field)
    zb = zbar_word(field, u)
    ok, _ = check_lemma_z_commutators(field, u)
    print(f"k = {field}, u = {u}")
    print("  zbar =", zb)
    print("  z = g1 g2 g3:", ok, "  zeta(zbar) =", word_map(c.zeta, zb))
    res = witt.rho_zbar_distinctness(field, u)
    print("  distinct:", res.distinct, "  witness:", res.witness if res.distinct else "isometry diag(r, 1/r)")
    print("  ", res.note)


def main():
    k = RationalFunctionField()
    show(k, k.gen)
    show(k, (1 + k.gen) ** 2)
    K = GF2n.default(2)
    show(K, K.gen)

    A = catalog(K).A
    s, t = A.gens()
    w = K.gen
    g1 = witt.norm_group_oracle(witt.a_form(A, s, t))
    g2 = witt.norm_group_oracle(witt.a_form(A, s * w, t * w * w))
    print(f"\nGF(4) brute force: |gA(s,t)| = {len(g1)}, equal to gA(ws, w^2 t): {g1 == g2}")


if __name__ == "__main__":
    main()

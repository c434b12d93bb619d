"""Walk through the elementary certificate for diag(M0(u), 1) and its lift.

    python demos/chain_and_lift.py [u-expression]
"""

import sys
import time

from stablyfree.algebra import RationalFunctionField, catalog
from stablyfree.matgroup import build_M0, psi_M_factorization
from stablyfree.patching import freeness_witness, lift_certificate
from stablyfree.mennicke import run_lemma21_chain


def main(u_text="u"):
    k = RationalFunctionField()
    u = k.coerce(u_text)
    c = catalog(k)

    M0 = build_M0(k, u)
    print(f"M0({u}) over R = k[a,x,y]/(a^2+xy):")
    for row in M0.rows:
        print("   ", " | ".join(str(e) for e in row))
    print("det =", M0.det())

    cert = psi_M_factorization(k, u)
    print("\npsi(M(u)) over k[s,t] =", cert.describe())

    start = time.perf_counter()
    report = run_lemma21_chain(k, u)
    print(f"\nchain ({time.perf_counter() - start:.2f} s):")
    for name, ok, detail in report.steps:
        print(f"  [{'ok' if ok else 'FAIL'}] {name}" + (f"  -- {detail}" if detail else ""))
    print(f"certificate: {report.length} elementary factors, max degree {report.certificate.max_degree()}")

    lift = lift_certificate(report.certificate)
    print("\nlift E in SL3(k[a,x,y]) maps to diag(M0(u), 1):", lift.E.map(c.pi_R) == report.certificate.target)

    witness = freeness_witness(k, u, report.certificate)
    print("basis b_i = (e_i, E e_i) of P + R' verified:", witness.verify())
    for i, (_, q) in enumerate(witness.basis(), 1):
        print(f"  b_{i}: degrees of E e_{i} entries = {[x.degree() for x in q]}")

if __name__ == "__main__":
    main(*sys.argv[1:])

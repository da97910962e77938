#!/usr/bin/env python3
"""Print the hard-hexagon polynomials, their stabilization toward the
infinite series, and the truncated identity checks."""
import sys

from crystalsums.hardhex import hh_X, product_series, rr_series_check


def main() -> int:
    print("X(L) by the recurrence (coefficients of q^0, q^1, ...):")
    for L in range(0, 13):
        p = hh_X(L)
        top = p.degree() if not p.is_zero() else 0
        coeffs = [p.coeff(e) for e in range(top + 1)]
        print(f"  L={L:2d}: {coeffs}")

    cutoff = 40
    prod = product_series(1, cutoff)
    print(f"\nproduct side of the first identity to q^{cutoff}:")
    print(f"  {list(prod.coeffs)}")

    for which in (1, 2):
        rep = rr_series_check(which, 100)
        print(f"\nidentity {which}: fermionic == product: "
              f"{rep.fermionic_eq_product}, fermionic == alternating: "
              f"{rep.fermionic_eq_alternating}, finite polynomials "
              f"stabilize through q^{rep.stable_prefix}")
        if not rep.passed:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

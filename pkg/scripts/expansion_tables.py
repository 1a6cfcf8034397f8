"""Print B_n^{(r)} numbers and the closed-form coefficients of B_n(x) in the order-r basis."""
import argparse

from umbra.algebra import fmt_rational
from umbra.classical import bernoulli_number_order
from umbra.identities import euler_in_bernoulli, theorem4_coefficients


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-r", type=int, default=3)
    args = ap.parse_args()

    print("B_n^(r) numbers")
    for r in range(1, args.max_r + 1):
        row = [fmt_rational(bernoulli_number_order(n, r)) for n in range(args.max_n + 1)]
        print(f"  r={r}: " + ", ".join(row))

    print("\nB_n(x) = sum_k b_k B_k^(r)(x)")
    for r in range(1, args.max_r + 1):
        for n in range(args.max_n + 1):
            coeffs = theorem4_coefficients(n, r).coeffs
            print(f"  r={r} n={n}: [" + ", ".join(fmt_rational(c) for c in coeffs) + "]")

    print("\nE_n(x) = sum_k b_k B_k(x)")
    for n in range(args.max_n + 1):
        coeffs = euler_in_bernoulli(n).coeffs
        print(f"  n={n}: [" + ", ".join(fmt_rational(c) for c in coeffs) + "]")


if __name__ == "__main__":
    main()

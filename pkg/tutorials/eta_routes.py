"""Compute the eta invariant of a few space forms three ways and compare.

    python3 tutorials/eta_routes.py
"""

from s3quotients import eta_bruteforce, eta_closed, eta_via_quotient, parse_spec, reverse

SPECS = ["L(1,4)", "L(2,7)", "D(3,2)", "T(1)", "T(5)", "O(7)", "I(11)", "I2(2,3)", "I3(9)"]


def main():
    print(f"{'spec':10} {'closed':>12} {'brute force':>14} {'via quotient':>14}")
    for text in SPECS:
        spec = parse_spec(text)
        closed = eta_closed(spec)
        quotient = "" if spec.is_cyclic else str(eta_via_quotient(spec))
        print(f"{text:10} {str(closed):>12} {eta_bruteforce(spec):14.10f} {quotient:>14}")

    # reversing orientation flips the sign
    spec = parse_spec("T(5)")
    print(f"\neta(T(5)) = {eta_closed(spec)}, eta(~T(5)) = {eta_closed(reverse(spec))}")


if __name__ == "__main__":
    main()

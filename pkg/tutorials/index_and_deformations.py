"""Correction terms N, dim H^1 and the deformation comparison.

    python3 tutorials/index_and_deformations.py
"""

from s3quotients import Variant, compare_deformations, h1_report, index_report, parse_spec

SPECS = ["D(3,2)", "T(5)", "O(11)", "I(7)", "I2(4,3)", "I3(9)"]


def main():
    print(f"{'spec':8} {'N':>4} {'oracle':>7} {'h1':>4} {'brute':>6} {'d_max':>6} {'h1 res':>7} {'diff':>5}")
    for text in SPECS:
        spec = parse_spec(text)
        idx = index_report(spec)
        h1 = h1_report(spec)
        print(f"{text:8} {idx.n_value:4} {idx.oracle_value:7} {h1.h1_closed:4} {h1.h1_brute:6} "
              f"{h1.d_max:6} {h1.h1_resolution:7} {h1.difference:5}")

    # the two normalisations of the reversal constant
    spec = parse_spec("~T(1)")
    for variant in Variant:
        rep = index_report(spec, variant)
        print(f"\nN(~T(1)) with the {variant.value} constant: {rep.n_value}")
        for w in rep.warnings:
            print(f"  warning: {w}")

    # cyclic groups need a choice of dim H^0
    for h0 in (None, 1, 3):
        rep = compare_deformations(parse_spec("L(2,7)"), h0)
        print(f"L(2,7) h0={rep.h0_used}: difference {rep.difference}")


if __name__ == "__main__":
    main()

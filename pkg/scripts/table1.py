"""Recover the GTS_6 cover pair behind the reference table and print both tables."""

import argparse

from gtsq import verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=4)
    args = ap.parse_args()

    m = verify.locate_table1_pair()
    print(f"T1 = {m.t1}   T2 = {m.t2}   max deviation {m.max_error:.2e}\n")
    head = f"{'q':>6} " + " ".join(f"{c:>{args.digits + 6}}" for c in
                                    ("max T1", "max T2", "min T1", "min T2", "a T1", "a T2"))
    print(head)
    for q, row in zip(verify.TABLE1_Q, m.table):
        ref = verify.TABLE1[q]
        print(f"{q:>6} " + " ".join(f"{v:>{args.digits + 6}.{args.digits}f}" for v in row))
        print(f"{'ref':>6} " + " ".join(f"{v:>{args.digits + 6}.{args.digits}f}" for v in ref))


if __name__ == "__main__":
    main()

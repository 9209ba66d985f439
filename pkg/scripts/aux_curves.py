"""Values of the auxiliary polynomial F_T^v(q, x) over an x range, with the
spectrum of L^q marked, as CSV. Useful for looking at where F changes sign."""

import argparse
import csv
import sys
from fractions import Fraction

import numpy as np

from gtsq.exactpoly import aux_poly
from gtsq.matrices import q_laplacian
from gtsq.spectra import sym_eigen
from gtsq.trees import TreeCode


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("code", help="tree code, e.g. 0,1,2,1 for P_4")
    ap.add_argument("--v", type=int, default=None, help="vertex (default: every vertex)")
    ap.add_argument("--q", type=float, default=0.1)
    ap.add_argument("--xmin", type=float, default=-0.5)
    ap.add_argument("--xmax", type=float, default=None)
    ap.add_argument("--steps", type=int, default=401)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    t = TreeCode.parse(args.code).tree()
    s = sym_eigen(q_laplacian(t, args.q))
    xmax = args.xmax if args.xmax is not None else s.max + 0.5
    qf = Fraction(repr(args.q))
    vertices = [args.v] if args.v is not None else range(t.n)
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow([f"# q={args.q} lambda_min={s.min!r} lambda_a={s.second_smallest!r} lambda_max={s.max!r}"])
    w.writerow(["v", "x", "F"])
    for v in vertices:
        f = aux_poly(t, v)
        for x in np.linspace(args.xmin, xmax, args.steps):
            w.writerow([v, repr(float(x)), repr(float(f.eval(qf, Fraction(float(x)))))])


if __name__ == "__main__":
    main()

"""Eigenvalue curves of q-Laplacians along a q range, as CSV for an external plotter.

Default trees are the two ends of GTS_n: the path and the star.
"""

import argparse
import csv
import sys

import numpy as np

from gtsq.matrices import exp_distance, q_laplacian
from gtsq.spectra import sym_eigen
from gtsq.trees import TreeCode, canonical_code, path_tree, star_tree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("codes", nargs="*", help="tree codes such as 0,1,2,2,1,2")
    ap.add_argument("--n", type=int, default=6, help="order used for the default path/star pair")
    ap.add_argument("--matrix", choices=("qlap", "ed"), default="qlap")
    ap.add_argument("--qmin", type=float, default=-3.0)
    ap.add_argument("--qmax", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=601)
    ap.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    codes = [TreeCode.parse(c) for c in args.codes] or [
        canonical_code(path_tree(args.n)), canonical_code(star_tree(args.n))]
    build = q_laplacian if args.matrix == "qlap" else exp_distance
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow(["tree", "q", "lambda_max", "lambda_a", "lambda_min"])
    for code in codes:
        t = code.tree()
        for q in np.linspace(args.qmin, args.qmax, args.steps):
            if q == 0.0:
                continue
            s = sym_eigen(build(t, float(q)))
            w.writerow([str(code), repr(float(q)), repr(s.max), repr(s.second_smallest), repr(s.min)])


if __name__ == "__main__":
    main()

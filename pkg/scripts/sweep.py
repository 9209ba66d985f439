"""Run every checker for a range of orders and write one JSON document per order.

Timing is left out so reruns are byte-identical.
"""

import argparse
import json
import os
from pathlib import Path

from gtsq import verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmin", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--outdir", type=Path, default=Path("sweep_out"))
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for n in range(args.nmin, args.nmax + 1):
        reports = verify.run("all", verify.VerifyConfig(n=n, jobs=args.jobs))
        doc = {"n": n, "reports": [r.to_json(include_timing=False) for r in reports]}
        (args.outdir / f"n{n}.json").write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
        verify.clear_cache()
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"n={n} {status} {r.claim}: {len(r.failures)}/{r.instances} failures")


if __name__ == "__main__":
    main()

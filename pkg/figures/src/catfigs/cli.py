"""Render figures from scenario artifact directories.

Usage:
    catfigs --data-root results --out-dir figs
    catfigs --data-root results --out-dir figs --jobs waveforms noise --format png

--data-root points at the directory holding the per-scenario output
folders (as written by `catgates scenario` or scripts/reproduce_results.py);
each job knows which scenario folder it consumes. Jobs whose inputs are
missing are skipped with a note.
"""

import argparse
import os
import sys

from .io import SchemaError
from .render import JOBS, save


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="catfigs",
                                 description=__doc__.splitlines()[0])
    ap.add_argument("--data-root", required=True)
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--jobs", nargs="+", choices=sorted(JOBS), default=None)
    ap.add_argument("--format", default="svg", choices=["svg", "png", "pdf"])
    args = ap.parse_args(argv)

    os.makedirs(args.out_dir, exist_ok=True)
    rendered = 0
    for job in (args.jobs or sorted(JOBS)):
        scenario, fn = JOBS[job]
        data_dir = os.path.join(args.data_root, scenario)
        if not os.path.isdir(data_dir):
            print(f"skip {job}: no {data_dir}", file=sys.stderr)
            continue
        try:
            fig = fn(data_dir)
        except (SchemaError, OSError) as exc:
            print(f"error in {job}: {exc}", file=sys.stderr)
            return 1
        path = os.path.join(args.out_dir, f"{job}.{args.format}")
        save(fig, path)
        print(f"wrote {path}")
        rendered += 1
    if rendered == 0:
        print("nothing rendered", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

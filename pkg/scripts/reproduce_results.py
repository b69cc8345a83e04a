"""Run the canned scenarios and collect their headline numbers.

Usage:
    python scripts/reproduce_results.py --out-root results
    python scripts/reproduce_results.py --only table1 fig2_waveforms

Every scenario writes its CSV/JSON artifacts plus a manifest under
<out-root>/<scenario>/; the headline scalars are echoed here and merged
into <out-root>/headlines.json. The full set takes tens of minutes
(fig4_cnot and fig5_noise dominate); pick subsets with --only while
iterating.
"""

import argparse
import json
import os
import time

from catgates.scenarios import SCENARIO_IDS, ScenarioConfig, run_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-root", default="results")
    ap.add_argument("--only", nargs="+", choices=SCENARIO_IDS, default=None)
    args = ap.parse_args()

    headlines = {}
    for sid in (args.only or SCENARIO_IDS):
        t0 = time.perf_counter()
        manifest = run_scenario(ScenarioConfig(
            scenario=sid, out_dir=os.path.join(args.out_root, sid)))
        elapsed = time.perf_counter() - t0
        print(f"{sid} ({elapsed:.1f}s)")
        for key, val in manifest["summary"].items():
            print(f"  {key} = {val:.6g}" if isinstance(val, float)
                  else f"  {key} = {val}")
        headlines[sid] = manifest["summary"]

    path = os.path.join(args.out_root, "headlines.json")
    with open(path, "w") as fh:
        json.dump(headlines, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

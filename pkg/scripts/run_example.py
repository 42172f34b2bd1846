"""Run the four-variable worked example and print the per-degree history."""

import argparse
import time

from f45.engine import RunConfig, f45
from f45.frontend import format_polynomial, parse_system, stats_to_json
from f45.oracle import interreduce
from f45.signatures import format_signature
from f45.systems import EXAMPLE_TEXT


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trace", action="store_true", help="print the event trace too")
    args = ap.parse_args()

    doc = parse_system(EXAMPLE_TEXT)
    ring = doc.ring
    t0 = time.perf_counter()
    res = f45(doc.polys, ring, RunConfig(emit_trace=args.trace))
    dt = time.perf_counter() - t0

    print(f"degrees processed: {res.degrees}  ({dt * 1e3:.1f} ms, {res.terminated_by})")
    for entry in res.store.entries[len(res.inputs):]:
        print(f"  d={entry.poly.degree()}  {format_signature(entry.signature, ring):>10}  {format_polynomial(entry.poly)}")
    print(f"basis: {len(res.basis)} polynomials, reduced: {len(interreduce(res.basis))}")
    print(stats_to_json(res.stats), end="")
    if args.trace:
        print(res.trace.text(), end="")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print a structural dossier for catalog entries.

For each entry: flatness, isomorphism class, series dimensions, the
geometry of the center and derived ideal, the reduction tower, and the
outcome of every structural claim.
"""

import argparse
import sys

from symplie import catalog
from symplie.catalog import classify_upto6, fingerprint
from symplie.extension import reduction_tower
from symplie.rationals import qstr
from symplie.symplectic import structural_report


def report_entry(name: str, show_claims: bool):
    entry = catalog.get(name)
    s = entry.algebra
    print(f"== {entry.name} (dim {s.dim}) ==")
    print(f"   {entry.description}")
    flat = s.is_flat
    print(f"   flat: {'yes' if flat else 'no'}")
    if flat and s.dim <= 6:
        print(f"   class: {classify_upto6(s)}")
    fp = fingerprint(s)
    print(f"   lower central dims: {fp.lower_central_dims}")
    print(f"   derived series dims: {fp.derived_series_dims}")
    report = structural_report(s)
    print(f"   nilpotency class: {report.nilpotency_class}")
    print(f"   center: dim {fp.center_dim}, {report.center_kind.value}")
    print(f"   derived ideal: dim {fp.derived_dim}, {report.derived_kind.value}")
    print(f"   unimodular: {'yes' if report.unimodular else 'no'}"
          + ("" if report.unimodular
             else f"  (H = ({', '.join(qstr(x) for x in report.h)}))"))
    if flat:
        steps = reduction_tower(s)
        dims = [s.dim] + [st.base.dim for st in steps]
        print(f"   reduction tower: {' -> '.join(map(str, dims))}")
    applicable = [c for c in report.claims if c.applicable]
    failing = [c for c in applicable if not c.holds]
    print(f"   claims: {len(applicable) - len(failing)}/{len(applicable)} pass"
          + (f", FAILING: {[c.name for c in failing]}" if failing else ""))
    if show_claims:
        for line in report.lines():
            print(f"     {line}")
    print()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--name", action="append", choices=catalog.names(),
                        help="restrict to one entry (repeatable)")
    parser.add_argument("--claims", action="store_true",
                        help="list every structural claim line")
    args = parser.parse_args(argv)
    for name in args.name or catalog.names():
        report_entry(name, args.claims)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Re-derive the frozen cluster adjacency tables from polygon geometry.

For every tessellation kind this script lays out the cluster outlines for
offsets (di, dj) in {-1, 0, 1}^2, matches tile edges exactly (two tiles are
adjacent iff they share a full edge), and prints or checks the canonical
intra/inter adjacency tables stored in tessdom.catalog.

Usage:
    python scripts/derive_adjacency.py          # check frozen tables
    python scripts/derive_adjacency.py --emit   # print tables as python
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tessdom.catalog import CANONICAL_ORDER, _ADJACENCY, _geometry  # noqa: E402

QUANT = 1e-6


def _key(p):
    return (round(p[0] / QUANT), round(p[1] / QUANT))


def _edges_of(poly):
    n = len(poly)
    for idx in range(n):
        p, q = poly[idx], poly[(idx + 1) % n]
        yield frozenset((_key(p), _key(q)))


def derive(kind: str):
    outlines, v1, v2 = _geometry(kind)
    ntiles = len(outlines)

    edge_map: dict[frozenset, list[tuple[int, int, int]]] = {}
    span = 2  # offsets -2..2 so that out-of-range adjacency is detected
    for di in range(-span, span + 1):
        for dj in range(-span, span + 1):
            ox = di * v1[0] + dj * v2[0]
            oy = di * v1[1] + dj * v2[1]
            for k, poly in enumerate(outlines, start=1):
                shifted = tuple((x + ox, y + oy) for x, y in poly)
                for edge in _edges_of(shifted):
                    edge_map.setdefault(edge, []).append((k, di, dj))

    intra: set[tuple[int, int]] = set()
    inter: set[tuple[int, int, tuple[int, int]]] = set()
    problems: list[str] = []

    for k, poly in enumerate(outlines, start=1):
        for edge in _edges_of(poly):
            owners = edge_map[edge]
            partners = [o for o in owners if o != (k, 0, 0)]
            if len(owners) - len(partners) != 1:
                problems.append(f"{kind}: tile {k} edge duplicated in place")
            if len(partners) != 1:
                problems.append(
                    f"{kind}: tile {k} edge has {len(partners)} partners (want 1)")
                continue
            b, di, dj = partners[0]
            if (di, dj) == (0, 0):
                intra.add((min(k, b), max(k, b)))
            else:
                if abs(di) > 1 or abs(dj) > 1:
                    problems.append(
                        f"{kind}: tile {k} ~ tile {b} at offset {(di, dj)} "
                        "outside {-1,0,1}^2; move the tile representative")
                cand = (k, b, (di, dj))
                flipped = (b, k, (-di, -dj))
                inter.add(min(cand, flipped))

    return tuple(sorted(intra)), tuple(sorted(inter)), problems


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--emit", action="store_true",
                        help="print the derived tables as python literals")
    args = parser.parse_args()

    ok = True
    emitted: list[str] = []
    for kind in CANONICAL_ORDER:
        intra, inter, problems = derive(kind)
        for p in problems:
            ok = False
            print("PROBLEM:", p)
        if args.emit:
            emitted.append(f"    {kind!r}: (\n        {intra!r},\n        {inter!r},\n    ),")
        else:
            frozen_intra, frozen_inter = _ADJACENCY[kind]
            if (tuple(sorted(frozen_intra)), tuple(sorted(frozen_inter))) != (intra, inter):
                ok = False
                print(f"MISMATCH for {kind}:")
                print(f"  derived intra: {intra}")
                print(f"  frozen  intra: {tuple(sorted(frozen_intra))}")
                print(f"  derived inter: {inter}")
                print(f"  frozen  inter: {tuple(sorted(frozen_inter))}")
            else:
                print(f"{kind}: frozen adjacency matches geometry")
    if args.emit:
        print("_ADJACENCY = {")
        print("\n".join(emitted))
        print("}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

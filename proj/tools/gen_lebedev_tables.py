#!/usr/bin/env python3
"""Regenerate src/lebedev_tables.inc from scipy.integrate.lebedev_rule.

Each rule is written as a flat array of (x, y, z, weight) records in
IEEE-754 binary64, weights summing to 4*pi.
A 64-bit FNV-1a checksum over the little-endian bytes of every array is
emitted next to it; the library recomputes it in its tests.
"""
import argparse
import math
import struct

import numpy as np
from scipy.integrate import lebedev_rule

ORDERS = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 35, 41,
          47, 53, 59, 65, 71, 77, 83, 89, 95, 101, 107, 113, 119, 125, 131]


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="src/lebedev_tables.inc")
    args = ap.parse_args()

    lines = ["// Generated by tools/gen_lebedev_tables.py. Do not edit.", ""]
    entries = []
    for order in ORDERS:
        pts, w = lebedev_rule(order)
        pts = pts.T
        w = np.asarray(w, dtype=np.float64)
        if abs(w.sum() - 1.0) < 1e-9:
            w = w * (4.0 * math.pi)
        assert abs(w.sum() - 4.0 * math.pi) < 1e-10, order
        # Renormalise points to unit length in case the tabulation is off by an ulp.
        pts = pts / np.linalg.norm(pts, axis=1)[:, None]
        flat = np.column_stack([pts, w]).reshape(-1).astype("<f8")
        checksum = fnv1a64(flat.tobytes())
        name = f"kLebedev{order:03d}"
        lines.append(f"alignas(8) constexpr double {name}[] = {{")
        for i in range(0, flat.size, 4):
            rec = ", ".join(float(v).hex() for v in flat[i:i + 4])
            lines.append(f"    {rec},")
        lines.append("};")
        lines.append("")
        entries.append((order, pts.shape[0], name, checksum))

    lines.append("constexpr EmbeddedTable kEmbeddedTables[] = {")
    for order, n, name, checksum in entries:
        lines.append(f"    {{{order}, {n}, {name}, 0x{checksum:016x}ull}},")
    lines.append("};")
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Generate a deterministic CIFAR-10-format binary batch file for testing.

Record layout matches the published format exactly: 3073 bytes per record,
one label byte (record index mod 10) followed by 3072 pixel bytes filled
from a SplitMix64 stream.  Both the Python and frontend test suites call
this so they exercise identical bytes.

Usage: gen_cifar_fixture.py RECORDS SEED OUT_PATH
"""

import sys

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def make_batch(records: int, seed: int) -> bytes:
    out = bytearray()
    words_per_record = 3072 // 8
    for i in range(records):
        out.append(i % 10)
        base = _mix64(seed + GOLDEN * (i + 1))
        for t in range(words_per_record):
            out += _mix64(base + GOLDEN * (t + 1)).to_bytes(8, "little")
    return bytes(out)


def main() -> int:
    if len(sys.argv) != 4:
        print(__doc__, file=sys.stderr)
        return 2
    records, seed, path = int(sys.argv[1]), int(sys.argv[2]), sys.argv[3]
    with open(path, "wb") as fh:
        fh.write(make_batch(records, seed))
    return 0


if __name__ == "__main__":
    sys.exit(main())

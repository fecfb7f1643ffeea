#!/usr/bin/env python3
"""Stand-alone graph6 encoder written from the format definition.

Used to produce the expected strings frozen in the codec unit tests:
    python3 graph6_oracle.py
"""


def encode(n, edges):
    out = []
    if n <= 62:
        out.append(n + 63)
    else:
        out += [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    adj = {(min(u, v), max(u, v)) for u, v in edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out).decode()


CASES = {
    "K3": (3, [(0, 1), (0, 2), (1, 2)]),
    "empty5": (5, []),
    "K1": (1, []),
    "K4": (4, [(u, v) for u in range(4) for v in range(u + 1, 4)]),
    "C5": (5, [(i, (i + 1) % 5) for i in range(5)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "K2+K3bar": (5, [(0, 1)] + [(u, v) for u in (0, 1) for v in (2, 3, 4)]),
    "empty63": (63, []),
    "path64": (64, [(i, i + 1) for i in range(63)]),
}

if __name__ == "__main__":
    for name, (n, edges) in CASES.items():
        print(f"{name}\t{encode(n, edges)}")

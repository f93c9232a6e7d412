#!/usr/bin/env python3
"""Independent reference computation of the known-answer vectors frozen in
tests/test_primitives.cpp and tests/test_scheme.cpp.

Uses only hashlib and plain integer XOR; shares no code with the C++ library.
Run: python3 tests/oracles/reference_vectors.py
"""
import hashlib


def h(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def xor(*blocks: bytes) -> bytes:
    out = bytes(len(blocks[0]))
    for b in blocks:
        assert len(b) == len(out)
        out = bytes(p ^ q for p, q in zip(out, b))
    return out


def identity(name: str) -> bytes:
    return h(b"\x01" + name.encode())


def timestamp(t: int, length: int = 32) -> bytes:
    return t.to_bytes(8, "big").rjust(length, b"\x00")[-length:]


x = b"server-secret-x"
y = bytes(range(32))
t = 1_700_000_000
t_recv = t + 5

hpw = h(b"hunter2")
hx = h(x)
id_alice = identity("alice")
n_i = xor(hpw, hx, id_alice)
cid = xor(hpw, h(xor(n_i, y, timestamp(t))), id_alice)
a = h(xor(hpw, y, timestamp(t_recv)))

vectors = {
    "sha256(alpha)": h(b"alpha"),
    "toy16(alpha)": h(b"alpha")[:2],
    "identity(alice)": id_alice,
    "identity(bob)": identity("bob"),
    "h(hunter2)": hpw,
    "h(x)": hx,
    "n_i(alice,hunter2)": n_i,
    "cid(alice,hunter2,t)": cid,
    "a(t_recv)": a,
}
for k, v in vectors.items():
    print(f"{k:24s} {v.hex()}")

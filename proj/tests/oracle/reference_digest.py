#!/usr/bin/env python3
"""Straight-line reference implementation of the bd128 block digest.

This script is the independent oracle behind the golden values frozen into
the C++ test suite. It works on plain '0'/'1' strings and Python big ints,
shares no code with the library, and trades speed for obviousness.

Running it prints every golden constant asserted by the tests.
"""

import hashlib

MODULUS = 967
MULTIPLIER = 39
DEFAULT_SEED = 1
IV_HEX = "0123456789abcdeffedcba9876543210"
MASK128 = (1 << 128) - 1


def encode_ascii(data: bytes) -> str:
    return "".join(f"{b:08b}" for b in data)


def pad_stage1(bits: str) -> str:
    assert len(bits) % 2 == 0
    k = 1
    while (len(bits) + 2 * k) % 512 != 448:
        k += 1
    return bits + "01" * k


def extract_tail64(bits: str) -> str:
    assert len(bits) >= 64
    start = len(bits) // 3
    return "".join(bits[(start + i) % len(bits)] for i in range(64))


def pad(bits: str) -> str:
    stage1 = pad_stage1(bits)
    return stage1 + extract_tail64(stage1)


def split_blocks(bits: str):
    assert len(bits) % 128 == 0
    return [bits[i : i + 128] for i in range(0, len(bits), 128)]


def next_state(value: int) -> int:
    return (value * MULTIPLIER) % MODULUS


def expand_key(raw: int) -> int:
    """Top 128 bits of raw!, left-padded with zeros below 128 bits."""
    assert 1 <= raw <= 966
    fact = 1
    for i in range(2, raw + 1):
        fact *= i
    bits = bin(fact)[2:]
    return int(bits[:128], 2)


def compress(block: int, key: int) -> int:
    mixed = block ^ key
    rot = bin(key).count("1") % 128
    return ((mixed << rot) | (mixed >> (128 - rot))) & MASK128


def digest(message: bytes, seed: int = DEFAULT_SEED, iv: int = int(IV_HEX, 16)) -> int:
    chain = iv
    state = seed
    for block_bits in split_blocks(pad(encode_ascii(message))):
        state = next_state(state)
        chain ^= compress(int(block_bits, 2), expand_key(state))
    return chain


def multiplicative_order(base: int, modulus: int) -> int:
    seen = base % modulus
    order = 1
    while seen != 1:
        seen = (seen * base) % modulus
        order += 1
    return order


def main() -> None:
    print("# key schedule")
    state = DEFAULT_SEED
    states = []
    for _ in range(16):
        state = next_state(state)
        states.append(state)
    print("first 16 states from seed 1:", ", ".join(map(str, states)))
    print("multiplicative order of 39 mod 967:", multiplicative_order(39, 967))
    for raw in (1, 5, 39, 554, 966):
        print(f"expand_key({raw}) = {expand_key(raw):032x}")

    print("\n# digests (seed 1, default iv)")
    samples = [
        b"",
        b"ab",
        b"abc",
        b"The quick brown fox jumps over the lazy dog",
        b"0123456789" * 5 + b"abcdef",  # 56 bytes -> two 512-bit chunks
    ]
    for msg in samples:
        print(f"digest({msg!r}) = {digest(msg):032x}")
    print(f"digest(b'', seed=7) = {digest(b'', seed=7):032x}")

    print("\n# padding geometry")
    for msg in (b"", b"ab", b"0123456789" * 5 + b"abcdef"):
        bits = encode_ascii(msg)
        stage1 = pad_stage1(bits)
        padded = pad(bits)
        print(
            f"{msg!r}: stage1={len(stage1)} tail_offset={len(stage1) // 3} "
            f"padded={len(padded)} blocks={len(padded) // 128}"
        )

    print("\n# md5 distinctiveness (measured on lowercase hex)")
    for text in ("ab", "system simulation", "cd", "project reports", "niharjyoti"):
        hexdigest = hashlib.md5(text.encode()).hexdigest()
        pct = 100.0 * len(set(hexdigest)) / len(hexdigest)
        print(f"md5({text!r}) = {hexdigest}  distinct = {pct:.4f}%")


if __name__ == "__main__":
    main()

import hashlib
import random

import pytest
from hypothesis import given, strategies as st

from simbloom import (
    HashFamily,
    ParameterError,
    generate_keyed_family,
    generate_random_family,
    index_of,
)


def test_index_of_golden():
    # frozen from a reference MD5 run: first 8 octets of MD5("abpa"),
    # big-endian, mod 18
    assert index_of(b"ab", b"pa", 18) == 17


def test_index_of_matches_manual_md5():
    digest = hashlib.md5(b"saltitem").digest()
    expected = int.from_bytes(digest[:8], "big") % 1000
    assert index_of(b"salt", b"item", 1000) == expected


def test_index_of_single_slot():
    assert index_of(b"x", b"anything", 1) == 0
    assert index_of(b"", b"", 1) == 0


def test_index_of_deterministic():
    a = index_of(b"salt", b"value", 1234)
    b = index_of(b"salt", b"value", 1234)
    assert a == b


def test_index_of_rejects_zero_kappa():
    with pytest.raises(ParameterError):
        index_of(b"salt", b"item", 0)


@given(
    salt=st.binary(min_size=1, max_size=32),
    item=st.binary(max_size=64),
    kappa=st.integers(min_value=1, max_value=2**40),
)
def test_index_of_in_range(salt, item, kappa):
    assert 0 <= index_of(salt, item, kappa) < kappa


def test_random_family_shape():
    fam = generate_random_family(2, 10)
    assert fam.k == 2
    assert fam.salt_len == 10
    assert fam.origin == "random"
    assert fam.salts[0] != fam.salts[1]


def test_random_family_minimal():
    fam = generate_random_family(1, 1)
    assert fam.k == 1 and fam.salt_len == 1


def test_random_family_invalid_parameters():
    with pytest.raises(ParameterError):
        generate_random_family(0, 10)
    with pytest.raises(ParameterError):
        generate_random_family(2, 0)


def test_random_families_differ():
    # with 10-octet salts a repeat within 1000 trials is ~2^-40 likely
    seen = set()
    for _ in range(1000):
        fam = generate_random_family(1, 10)
        assert fam.salts[0] not in seen
        seen.add(fam.salts[0])


def test_keyed_family_deterministic():
    key = bytes(range(16))
    assert generate_keyed_family(key, 4) == generate_keyed_family(key, 4)


def test_keyed_family_salt_blocks():
    fam = generate_keyed_family(b"\x00" * 16, 4)
    assert fam.k == 4
    assert all(len(s) == 16 for s in fam.salts)
    assert fam.origin == "keyed"


def test_keyed_family_one_bit_key_change_flips_every_salt():
    k1 = bytes(16)
    k2 = bytes([1]) + bytes(15)
    f1 = generate_keyed_family(k1, 4)
    f2 = generate_keyed_family(k2, 4)
    for s1, s2 in zip(f1.salts, f2.salts):
        assert s1 != s2


def test_keyed_family_matches_reference_aes():
    from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

    key = b"0123456789abcdef"
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    expected = enc.update((0).to_bytes(16, "big"))
    assert generate_keyed_family(key, 1).salts[0] == expected


def test_keyed_family_rejects_bad_key_length():
    with pytest.raises(ParameterError):
        generate_keyed_family(b"short", 2)


def test_family_rejects_mixed_salt_lengths():
    with pytest.raises(ParameterError):
        HashFamily(salts=(b"ab", b"abc"))


def test_family_equality_ignores_origin():
    a = HashFamily(salts=(b"0123456789",), origin="random")
    b = HashFamily(salts=(b"0123456789",), origin="fixed")
    assert a == b


def test_uniformity_over_slots():
    # chi-square-style sanity check over 1024 slots: every slot within
    # +-20% of the uniform rate (needs ~1e6 draws for the band to sit
    # at several sigma)
    fam = generate_random_family(1, 10, entropy=random.Random(7))
    kappa = 1024
    counts = [0] * kappa
    trials = 10**6
    for i in range(trials):
        counts[index_of(fam.salts[0], i.to_bytes(4, "big"), kappa)] += 1
    expected = trials / kappa
    assert min(counts) > expected * 0.8
    assert max(counts) < expected * 1.2

"""Salted hash families used to index Bloom filter buckets.

A family is an ordered list of salts plus one digest algorithm. Hashing
``salt + item`` with a fixed digest behaves like having one independent
hash function per salt. Salts can be drawn at random, or derived
deterministically from a 16-byte secret key so that only the key holder
can rebuild the same family.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

from .errors import ParameterError

# Registry used by the filter file format.
DIGEST_IDS = {"md5": 0, "sha256": 1, "sha3_256": 2}
DIGEST_NAMES = {v: k for k, v in DIGEST_IDS.items()}

KEY_BYTES = 16

_system_random = random.SystemRandom()


@dataclass(frozen=True)
class HashFamily:
    """Immutable ordered set of salted hash functions.

    ``origin`` records how the salts were produced: ``random`` (fresh
    entropy), ``fixed`` (caller-supplied) or ``keyed`` (derived from a
    secret key). Salt order is significant: salt i defines hash
    function i.
    """

    salts: tuple[bytes, ...]
    digest: str = "md5"
    # How the salts were produced; irrelevant to what the family computes,
    # so equality (and filter compatibility) ignores it.
    origin: str = field(default="random", compare=False)

    def __post_init__(self) -> None:
        if not self.salts:
            raise ParameterError("a hash family needs at least one salt")
        lengths = {len(s) for s in self.salts}
        if len(lengths) != 1 or 0 in lengths:
            raise ParameterError("all salts must share one nonzero length")
        if self.digest not in DIGEST_IDS:
            raise ParameterError(f"unknown digest algorithm: {self.digest!r}")
        if self.origin not in ("random", "fixed", "keyed"):
            raise ParameterError(f"unknown family origin: {self.origin!r}")

    @property
    def k(self) -> int:
        return len(self.salts)

    @property
    def salt_len(self) -> int:
        return len(self.salts[0])

    def indexes(self, item: bytes, kappa: int) -> list[int]:
        """Bucket indexes of ``item``, one per salt."""
        return [index_of(s, item, kappa, self.digest) for s in self.salts]


def index_of(salt: bytes, item: bytes, kappa: int, digest: str = "md5") -> int:
    """Map ``digest(salt + item)`` to a bucket index below ``kappa``.

    The first 8 digest octets are read as a big-endian unsigned integer
    and reduced modulo kappa. The modulo bias is below 2**-40 for any
    practical bucket size and is accepted.
    """
    if kappa < 1:
        raise ParameterError("kappa must be >= 1")
    h = hashlib.new(digest, salt + item).digest()
    return int.from_bytes(h[:8], "big") % kappa


def generate_random_family(
    k: int,
    salt_len: int,
    entropy: random.Random | None = None,
    digest: str = "md5",
) -> HashFamily:
    """Draw ``k`` fresh salts of ``salt_len`` octets each.

    Octets are drawn one at a time from the entropy source, so creation
    cost grows linearly with the salt length. Defaults to the OS CSPRNG.
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    if salt_len < 1:
        raise ParameterError("salt_len must be >= 1")
    rng = entropy if entropy is not None else _system_random
    salts = tuple(
        bytes(rng.randrange(256) for _ in range(salt_len)) for _ in range(k)
    )
    return HashFamily(salts=salts, digest=digest, origin="random")


def generate_keyed_family(key: bytes, k: int, digest: str = "md5") -> HashFamily:
    """Derive ``k`` salts deterministically from a 16-octet secret key.

    Salt i is the AES-128 encryption of the 16-octet big-endian counter
    value i, as in CTR mode keystream generation. The same (key, k) pair
    always yields a byte-identical family on any platform.
    """
    if len(key) != KEY_BYTES:
        raise ParameterError(f"key must be exactly {KEY_BYTES} octets")
    if k < 1:
        raise ParameterError("k must be >= 1")
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    salts = tuple(
        enc.update(i.to_bytes(KEY_BYTES, "big")) for i in range(k)
    )
    return HashFamily(salts=salts, digest=digest, origin="keyed")

"""The Bloom filter bucket: a bit array plus a salted hash family.

Membership answers are one-sided: a negative is certain, a positive may
be a collision. The filter never forgets an inserted item.
"""

from __future__ import annotations

from .errors import ParameterError
from .hashing import HashFamily


class BloomFilter:
    """Bit bucket of size ``kappa`` indexed by a salted hash family.

    ``nu`` records the n-gram grade used to fill the filter (0 means
    whole-item mode). ``inserted_count`` counts insert events, not
    distinct items, and feeds false-positive diagnostics.

    Single-writer, multiple-reader: concurrent checks are safe, inserts
    need exclusive access.
    """

    def __init__(self, family: HashFamily, kappa: int, nu: int = 0) -> None:
        if kappa < 1:
            raise ParameterError("kappa must be >= 1")
        if nu < 0:
            raise ParameterError("nu must be >= 0")
        self.family = family
        self.kappa = kappa
        self.nu = nu
        self.inserted_count = 0
        self._bits = bytearray((kappa + 7) // 8)

    @classmethod
    def create(cls, family: HashFamily, kappa: int, nu: int = 0) -> "BloomFilter":
        return cls(family, kappa, nu)

    def insert(self, item: bytes) -> None:
        """Set the bit at every index the family maps ``item`` to."""
        for i in self.family.indexes(item, self.kappa):
            self._bits[i >> 3] |= 1 << (i & 7)
        self.inserted_count += 1

    def check(self, item: bytes) -> bool:
        """False means definitely absent; True means present or collision."""
        for i in self.family.indexes(item, self.kappa):
            if not self._bits[i >> 3] & (1 << (i & 7)):
                return False
        return True

    def true_bit_count(self) -> int:
        """Popcount of the bit array."""
        return sum(b.bit_count() for b in self._bits)

    @property
    def bits(self) -> bytes:
        """Read-only snapshot of the bit array (last-byte padding is zero)."""
        return bytes(self._bits)

    def load_bits(self, data: bytes) -> None:
        """Replace the bit array; used by the file parser only."""
        if len(data) != len(self._bits):
            raise ParameterError("bit payload length does not match kappa")
        self._bits = bytearray(data)

    def compatible_with(self, other: "BloomFilter") -> bool:
        """Comparable filters share bucket size, hash family and grade."""
        return (
            self.kappa == other.kappa
            and self.family == other.family
            and self.nu == other.nu
        )

    def same_content(self, other: "BloomFilter") -> bool:
        return self.compatible_with(other) and self._bits == other._bits

    def __repr__(self) -> str:
        return (
            f"BloomFilter(kappa={self.kappa}, k={self.family.k}, "
            f"nu={self.nu}, popcount={self.true_bit_count()})"
        )

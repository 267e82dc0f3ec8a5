"""Bit-exact filter file format and the labeled filter store.

File layout (all integers little-endian):

    magic      4 octets  "SBF1"
    version    u16       currently 1
    digest_id  u8        0=MD5, 1=SHA-256, 2=SHA3-256
    origin     u8        0 = random/fixed salts, 1 = key-derived salts
    kappa      u64       bucket size in bits
    k          u32       number of salts
    nu         u8        n-gram grade (0 = whole-item mode)
    salt_len   u32       octets per salt
    salts      k * salt_len octets
    bits       ceil(kappa / 8) octets, padding bits zero

Salts travel in clear inside the file, which is exactly what the
anagram attack exploits; a keyed origin only signals that reproducing
the family additionally needs the external secret key.

The store is a directory of filter files plus a JSON manifest mapping
labels to files. Writes go through a temp file and rename.
"""

from __future__ import annotations

import json
import os
import struct
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .bloomfilter import BloomFilter
from .errors import (
    CanonicalFormError,
    FormatError,
    StoreError,
    TruncatedFileError,
    UnsupportedFormatError,
)
from .hashing import DIGEST_IDS, DIGEST_NAMES, HashFamily

MAGIC = b"SBF1"
VERSION = 1
_HEADER = struct.Struct("<4sHBBQIBI")

_ORIGIN_FLAGS = {"random": 0, "fixed": 0, "keyed": 1}


def serialize(f: BloomFilter) -> bytes:
    """Encode a filter in the canonical byte layout."""
    fam = f.family
    header = _HEADER.pack(
        MAGIC,
        VERSION,
        DIGEST_IDS[fam.digest],
        _ORIGIN_FLAGS[fam.origin],
        f.kappa,
        fam.k,
        f.nu,
        fam.salt_len,
    )
    return header + b"".join(fam.salts) + f.bits


def parse(data: bytes) -> BloomFilter:
    """Decode a filter file, rejecting anything non-canonical."""
    if len(data) < _HEADER.size:
        raise TruncatedFileError(
            f"file is {len(data)} octets, header alone needs {_HEADER.size}"
        )
    magic, version, digest_id, origin_flag, kappa, k, nu, salt_len = _HEADER.unpack_from(
        data
    )
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise UnsupportedFormatError(f"unsupported format version {version}")
    if digest_id not in DIGEST_NAMES:
        raise UnsupportedFormatError(f"unknown digest identifier {digest_id}")
    if kappa < 1 or k < 1 or salt_len < 1:
        raise FormatError("kappa, k and salt_len must all be >= 1")
    bits_len = (kappa + 7) // 8
    expected = _HEADER.size + k * salt_len + bits_len
    if len(data) != expected:
        raise TruncatedFileError(
            f"expected {expected} octets, got {len(data)}"
        )
    off = _HEADER.size
    salts = tuple(
        data[off + i * salt_len : off + (i + 1) * salt_len] for i in range(k)
    )
    bits = data[off + k * salt_len :]
    pad = bits_len * 8 - kappa
    if pad and bits[-1] >> (8 - pad):
        raise CanonicalFormError("nonzero padding bits past kappa")
    family = HashFamily(
        salts=salts,
        digest=DIGEST_NAMES[digest_id],
        origin="keyed" if origin_flag == 1 else "fixed",
    )
    f = BloomFilter(family, kappa, nu)
    f.load_bits(bits)
    return f


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


@dataclass(frozen=True)
class StoreEntry:
    label: str
    path: Path
    created_at: str
    nu: int


class FilterStore:
    """Directory of filter files representing a password history.

    The manifest (manifest.json) maps each label to its file plus
    creation timestamp and gram grade. Labels are unique.
    """

    MANIFEST = "manifest.json"

    def __init__(self, root: Path | str) -> None:
        self.root = Path(root)

    @property
    def manifest_path(self) -> Path:
        return self.root / self.MANIFEST

    def initialize(self, config: dict | None = None) -> None:
        """Create the store directory and an empty manifest."""
        self.root.mkdir(parents=True, exist_ok=True)
        if self.manifest_path.exists():
            raise StoreError(f"store already initialized at {self.root}")
        self._write_manifest({"config": config or {}, "entries": {}})

    def exists(self) -> bool:
        return self.manifest_path.is_file()

    def config(self) -> dict:
        return self._read_manifest()["config"]

    def add(self, label: str, f: BloomFilter) -> None:
        manifest = self._read_manifest()
        if label in manifest["entries"]:
            raise StoreError(f"duplicate label {label!r}")
        filename = f"{len(manifest['entries']):04d}.sbf"
        _atomic_write(self.root / filename, serialize(f))
        manifest["entries"][label] = {
            "path": filename,
            "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "nu": f.nu,
        }
        self._write_manifest(manifest)

    def labels(self) -> list[str]:
        return list(self._read_manifest()["entries"])

    def entries(self) -> list[StoreEntry]:
        manifest = self._read_manifest()
        return [
            StoreEntry(
                label=label,
                path=self.root / meta["path"],
                created_at=meta["created_at"],
                nu=meta["nu"],
            )
            for label, meta in manifest["entries"].items()
        ]

    def load(self, label: str) -> BloomFilter:
        manifest = self._read_manifest()
        if label not in manifest["entries"]:
            raise StoreError(f"no filter labeled {label!r}")
        return parse((self.root / manifest["entries"][label]["path"]).read_bytes())

    def _read_manifest(self) -> dict:
        if not self.exists():
            raise StoreError(f"no store at {self.root} (missing manifest)")
        return json.loads(self.manifest_path.read_text())

    def _write_manifest(self, manifest: dict) -> None:
        _atomic_write(
            self.manifest_path,
            (json.dumps(manifest, indent=2) + "\n").encode("utf-8"),
        )

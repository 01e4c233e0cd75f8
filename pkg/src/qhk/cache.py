"""Versioned, checksummed binary persistence for monomial bases.

Layout, all little-endian:

    magic  b"QHK1"
    u16    format version (currently 1)
    u8     space kind    (0 sphere, 1 projective, 2 suspended-CP)
    u32    space dim
    u32    space shift
    u32    degree
    u32    length cap
    u32    monomial count
    per monomial:  u32 factor count, then per factor
                   u32 exponent, u32 generator index,
                   u32 word length, u32 * len operation entries
    u32    crc32 of everything above

The encoding of a basis is canonical (the enumeration order of
monomial_basis, factors in their stored ascending order), so writing the
same basis twice gives identical bytes; the round-trip test relies on it.
A file that fails any validation is ignored with a warning and the basis
is recomputed.
"""

from __future__ import annotations

import struct
import sys
import zlib
from pathlib import Path

from .algebra import Monomial
from .sieve import monomial_basis
from .spaces import REALPROJ, SIGMACP, SPHERE, Generator, Space, space_name
from .words import AdmissibleGen

MAGIC = b"QHK1"
VERSION = 1

_KIND_CODE = {SPHERE: 0, REALPROJ: 1, SIGMACP: 2}
_CODE_KIND = {v: k for k, v in _KIND_CODE.items()}


class CacheError(ValueError):
    pass


def basis_to_bytes(space: Space, degree: int, max_len: int, basis: tuple[Monomial, ...]) -> bytes:
    out = bytearray()
    out += MAGIC
    out += struct.pack("<H", VERSION)
    out += struct.pack("<BII", _KIND_CODE[space.kind], space.dim, space.shift)
    out += struct.pack("<III", degree, max_len, len(basis))
    for m in basis:
        out += struct.pack("<I", len(m.factors))
        for w, e in m.factors:
            out += struct.pack("<III", e, w.gen.index, len(w.ops))
            out += struct.pack(f"<{len(w.ops)}I", *w.ops)
    out += struct.pack("<I", zlib.crc32(bytes(out)))
    return bytes(out)


def basis_from_bytes(data: bytes) -> tuple[Space, int, int, tuple[Monomial, ...]]:
    if len(data) < 4 or data[:4] != MAGIC:
        raise CacheError("bad magic")
    if len(data) < 4 + 2 + 9 + 12 + 4:
        raise CacheError("truncated header")
    (stored_crc,) = struct.unpack("<I", data[-4:])
    if zlib.crc32(data[:-4]) != stored_crc:
        raise CacheError("checksum mismatch")
    pos = 4
    (version,) = struct.unpack_from("<H", data, pos)
    pos += 2
    if version != VERSION:
        raise CacheError(f"version {version} not supported")
    kind_code, dim, shift = struct.unpack_from("<BII", data, pos)
    pos += 9
    if kind_code not in _CODE_KIND:
        raise CacheError(f"unknown space kind {kind_code}")
    space = Space(_CODE_KIND[kind_code], dim, shift)
    degree, max_len, count = struct.unpack_from("<III", data, pos)
    pos += 12
    body_end = len(data) - 4
    basis = []
    try:
        for _ in range(count):
            (nfac,) = struct.unpack_from("<I", data, pos)
            pos += 4
            factors = []
            for _ in range(nfac):
                e, index, wordlen, *_ = struct.unpack_from("<III", data, pos)
                pos += 12
                ops = struct.unpack_from(f"<{wordlen}I", data, pos)
                pos += 4 * wordlen
                factors.append((AdmissibleGen(tuple(ops), Generator(space, index)), e))
            m = Monomial(tuple(factors))
            if m.degree != degree:
                raise CacheError(f"monomial of degree {m.degree} in a degree-{degree} file")
            basis.append(m)
    except (struct.error, ValueError) as err:
        raise CacheError(str(err)) from err
    if pos != body_end:
        raise CacheError("trailing bytes before checksum")
    return space, degree, max_len, tuple(basis)


def cache_path(cache_dir: str | Path, space: Space, degree: int, max_len: int) -> Path:
    tag = space_name(space).replace("^", "_")
    return Path(cache_dir) / f"basis-{tag}-d{degree}-l{max_len}.qhk"


def load_or_compute(cache_dir: str | Path, space: Space, degree: int, max_len: int) -> tuple[Monomial, ...]:
    """The cached basis if the file is present and sound, else recompute
    (and write, creating the directory if needed)."""
    path = cache_path(cache_dir, space, degree, max_len)
    if path.exists():
        try:
            cspace, cdeg, clen, basis = basis_from_bytes(path.read_bytes())
            if (cspace, cdeg, clen) != (space, degree, max_len):
                raise CacheError("file describes a different basis")
            return basis
        except CacheError as err:
            print(f"warning: ignoring cache {path}: {err}", file=sys.stderr)
    basis = monomial_basis(space, degree, max_len)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(basis_to_bytes(space, degree, max_len, basis))
    return basis

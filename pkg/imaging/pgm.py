"""
Binary PGM (P5, maxval 255) reading and writing.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Tuple

from errors import MalformedHeaderError, TruncatedPayloadError, UnsupportedMaxvalError
from imaging.image import GrayImage

logger = logging.getLogger("entrosense.imaging.pgm")

PGM_MAGIC = b"P5"
SUPPORTED_MAXVAL = 255
_WHITESPACE = b" \t\n\r\v\f"
_HEADER_FIELDS = 3


def _read_header_tokens(data: bytes) -> Tuple[List[bytes], int]:
    """Collect width/height/maxval tokens; returns them and the raster offset."""
    if not data.startswith(PGM_MAGIC):
        raise MalformedHeaderError("missing P5 magic number")

    tokens: List[bytes] = []
    pos = len(PGM_MAGIC)
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise MalformedHeaderError("magic number must be followed by whitespace")

    while len(tokens) < _HEADER_FIELDS:
        while pos < len(data) and data[pos] in _WHITESPACE:
            pos += 1
        if pos >= len(data):
            raise MalformedHeaderError("header ended before width, height and maxval")
        if data[pos] == ord("#"):
            end = data.find(b"\n", pos)
            if end < 0:
                raise MalformedHeaderError("unterminated comment in header")
            pos = end + 1
            continue
        start = pos
        while pos < len(data) and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        tokens.append(data[start:pos])

    # exactly one whitespace byte separates maxval from the raster
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise MalformedHeaderError("maxval must be followed by a single whitespace byte")
    return tokens, pos + 1


def _parse_positive(token: bytes, name: str) -> int:
    if not token.isdigit():
        raise MalformedHeaderError(f"{name} is not a decimal integer: {token!r}")
    value = int(token)
    if value < 1:
        raise MalformedHeaderError(f"{name} must be positive, got {value}")
    return value


def read_pgm(data: bytes) -> GrayImage:
    tokens, offset = _read_header_tokens(bytes(data))
    width = _parse_positive(tokens[0], "width")
    height = _parse_positive(tokens[1], "height")
    maxval = _parse_positive(tokens[2], "maxval")
    if maxval != SUPPORTED_MAXVAL:
        raise UnsupportedMaxvalError(f"only maxval {SUPPORTED_MAXVAL} is supported, got {maxval}")

    expected = width * height
    raster = data[offset : offset + expected]
    if len(raster) < expected:
        raise TruncatedPayloadError(f"expected {expected} raster bytes, got {len(raster)}")
    if len(data) > offset + expected:
        logger.debug("Ignoring %s trailing bytes after PGM raster", len(data) - offset - expected)
    return GrayImage(width, height, bytearray(raster))


def write_pgm(img: GrayImage) -> bytes:
    header = b"P5\n%d %d\n%d\n" % (img.width, img.height, SUPPORTED_MAXVAL)
    return header + img.pixels.tobytes()


def load_pgm(path: str | Path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save_pgm(path: str | Path, img: GrayImage) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(write_pgm(img))
    return target

import numpy as np
import pytest

from errors import MalformedHeaderError, TruncatedPayloadError, UnsupportedMaxvalError
from imaging.image import GrayImage
from imaging.pgm import load_pgm, read_pgm, save_pgm, write_pgm


def test_small_images_round_trip():
    single = GrayImage(1, 1, [0])
    square = GrayImage(2, 2, [0, 85, 170, 255])

    assert read_pgm(write_pgm(single)) == single
    assert read_pgm(write_pgm(square)) == square


def test_writer_emits_canonical_header():
    assert write_pgm(GrayImage(3, 1, [1, 2, 3])) == b"P5\n3 1\n255\n\x01\x02\x03"


def test_random_images_round_trip_bit_exactly():
    rng = np.random.default_rng(0)
    for _ in range(100):
        height, width = rng.integers(1, 20, size=2)
        img = GrayImage.from_array(rng.integers(0, 256, size=(height, width)))
        assert read_pgm(write_pgm(img)) == img


def test_reader_accepts_header_comments():
    data = b"P5\n# produced by a scanner\n2 1 # size\n255\n" + bytes([7, 9])

    assert read_pgm(data).pixels.tolist() == [[7, 9]]


def test_reader_rejects_unsupported_maxval():
    with pytest.raises(UnsupportedMaxvalError, match="65535"):
        read_pgm(b"P5\n1 1\n65535\n\x00\x00")


def test_reader_rejects_malformed_headers():
    with pytest.raises(MalformedHeaderError, match="magic"):
        read_pgm(b"P2\n1 1\n255\n\x00")
    with pytest.raises(MalformedHeaderError):
        read_pgm(b"P5\n1\n")
    with pytest.raises(MalformedHeaderError, match="decimal"):
        read_pgm(b"P5\nx 1\n255\n\x00")


def test_reader_rejects_truncated_payload():
    with pytest.raises(TruncatedPayloadError, match="expected 4"):
        read_pgm(b"P5\n2 2\n255\n\x00\x01")


def test_load_and_save_through_the_filesystem(tmp_path):
    img = GrayImage(2, 2, [1, 2, 3, 4])

    target = save_pgm(tmp_path / "nested" / "img.pgm", img)

    assert target.exists()
    assert load_pgm(target) == img

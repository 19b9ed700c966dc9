import pytest

from bloomprim import BitArray


def test_new_array_is_empty():
    bits = BitArray(20)
    assert len(bits) == 20
    assert bits.popcount() == 0
    assert not any(bits.test(i) for i in range(20))


def test_set_and_test():
    bits = BitArray(100)
    for i in (0, 7, 8, 63, 64, 99):
        bits.set(i)
    assert all(bits.test(i) for i in (0, 7, 8, 63, 64, 99))
    assert not bits.test(1)
    assert bits.popcount() == 6


def test_set_is_idempotent():
    bits = BitArray(16)
    bits.set(5)
    bits.set(5)
    assert bits.popcount() == 1


def test_iter_set_ascending():
    bits = BitArray(70)
    for i in (69, 3, 17, 8):
        bits.set(i)
    assert list(bits.iter_set()) == [3, 8, 17, 69]


def test_payload_bytes_rounds_up():
    assert BitArray(8).payload_bytes == 1
    assert BitArray(9).payload_bytes == 2
    assert BitArray(0).payload_bytes == 0
    assert BitArray(9586).payload_bytes == 1199


def test_equality():
    a, b = BitArray(10), BitArray(10)
    a.set(4)
    assert a != b
    b.set(4)
    assert a == b
    assert BitArray(10) != BitArray(11)


def test_bounds_checked():
    bits = BitArray(8)
    with pytest.raises(IndexError):
        bits.set(8)
    with pytest.raises(IndexError):
        bits.test(-1)


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        BitArray(-1)


def test_tobytes_layout():
    bits = BitArray(12)
    bits.set(0)
    bits.set(9)
    assert bits.tobytes() == bytes([0b00000001, 0b00000010])

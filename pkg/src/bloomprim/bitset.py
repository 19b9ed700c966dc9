"""Compact fixed-length bit arrays backed by a byte buffer."""

from __future__ import annotations

from typing import Iterator


class BitArray:
    """Array of ``nbits`` bits stored in exactly ``ceil(nbits / 8)`` bytes.

    Bit ``i`` lives in byte ``i // 8`` at position ``i % 8``, least
    significant bit first.
    """

    __slots__ = ("_buf", "_nbits")

    def __init__(self, nbits: int):
        if nbits < 0:
            raise ValueError(f"bit count must be >= 0, got {nbits}")
        self._nbits = nbits
        self._buf = bytearray((nbits + 7) // 8)

    def __len__(self) -> int:
        return self._nbits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitArray):
            return NotImplemented
        return self._nbits == other._nbits and self._buf == other._buf

    def __repr__(self) -> str:
        return f"BitArray(nbits={self._nbits}, set={self.popcount()})"

    def set(self, i: int) -> None:
        """Set bit ``i``."""
        if not 0 <= i < self._nbits:
            raise IndexError(f"bit {i} out of range [0, {self._nbits})")
        self._buf[i >> 3] |= 1 << (i & 7)

    def test(self, i: int) -> bool:
        """Return True if bit ``i`` is set."""
        if not 0 <= i < self._nbits:
            raise IndexError(f"bit {i} out of range [0, {self._nbits})")
        return bool(self._buf[i >> 3] & (1 << (i & 7)))

    def popcount(self) -> int:
        """Number of set bits."""
        return int.from_bytes(self._buf, "little").bit_count()

    def iter_set(self) -> Iterator[int]:
        """Yield indices of set bits in ascending order."""
        for byte_index, byte in enumerate(self._buf):
            base = byte_index << 3
            while byte:
                low = byte & -byte
                yield base + low.bit_length() - 1
                byte ^= low

    def tobytes(self) -> bytes:
        """Copy of the backing buffer (LSB-first bit packing)."""
        return bytes(self._buf)

    @property
    def payload_bytes(self) -> int:
        """Size of the backing buffer in bytes."""
        return len(self._buf)

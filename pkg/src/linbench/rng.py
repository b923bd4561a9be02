"""Seeded, reproducible random number stream.

The uniform source is a counter-based 64-bit generator (SplitMix64): the
i-th raw word is a pure function of (seed, i), so a block of draws can be
produced vectorized with numpy uint64 arithmetic and is bit-identical to
drawing one value at a time. Normal deviates come from the polar
Box-Muller transform with the usual cached-spare behaviour, so the normal
sequence is independent of how requests are batched.
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0 ** -53


def mix64(z: int) -> int:
    """Finalizer of SplitMix64: diffuse a 64-bit word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def _mix64_block(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


class RngStream:
    """Single-owner random stream; not safe to share between threads."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._pos = 0  # uniforms consumed so far
        self._spare: float | None = None  # cached second polar deviate

    # -- raw uniform source -------------------------------------------------

    def _raw_block(self, count: int, offset: int = 0) -> np.ndarray:
        """Raw words for positions pos+offset .. pos+offset+count-1 (no commit)."""
        start = self._pos + offset + 1
        with np.errstate(over="ignore"):
            idx = np.arange(start, start + count, dtype=np.uint64)
            z = np.uint64(self.seed) + idx * np.uint64(_GOLDEN)
            return _mix64_block(z)

    def next_uint64(self) -> int:
        """Next raw 64-bit word (scalar path, same sequence as the block path)."""
        self._pos += 1
        return mix64((self.seed + self._pos * _GOLDEN) & _MASK64)

    def uniforms(self, count: int) -> np.ndarray:
        """`count` doubles uniform on [0, 1)."""
        if count < 0:
            raise InvalidArgumentError("count must be >= 0")
        block = self._raw_block(count)
        self._pos += count
        return (block >> np.uint64(11)).astype(np.float64) * _INV_2_53

    def integers(self, count: int, low: int, high: int) -> np.ndarray:
        """`count` integers uniform on [low, high] inclusive."""
        if high < low:
            raise InvalidArgumentError("high must be >= low")
        span = high - low + 1
        return (np.floor(self.uniforms(count) * span) + low).astype(np.int64)

    # -- normal deviates ----------------------------------------------------

    def normals(self, count: int) -> np.ndarray:
        """`count` standard-normal doubles via the polar Box-Muller transform.

        Uniforms are consumed strictly in pairs; an accepted pair yields two
        deviates and an unused second deviate is cached, so batching does
        not change the sequence.
        """
        if count < 0:
            raise InvalidArgumentError("count must be >= 0")
        out = np.empty(count, dtype=np.float64)
        k = 0
        if self._spare is not None and count > 0:
            out[0] = self._spare
            self._spare = None
            k = 1
        while k < count:
            need_pairs = (count - k + 1) // 2
            # ~pi/4 acceptance; oversample so one block usually suffices
            n_pairs = max(8, int(need_pairs / 0.7) + 4)
            u = self._raw_block(2 * n_pairs)
            u = (u >> np.uint64(11)).astype(np.float64) * _INV_2_53
            x = 2.0 * u[0::2] - 1.0
            y = 2.0 * u[1::2] - 1.0
            s = x * x + y * y
            accepted = np.nonzero((s > 0.0) & (s < 1.0))[0]
            if accepted.size == 0:
                self._pos += 2 * n_pairs
                continue
            take = min(accepted.size, need_pairs)
            # commit only the uniforms a sequential drawer would have used
            self._pos += 2 * (int(accepted[take - 1]) + 1)
            sel = accepted[:take]
            f = np.sqrt(-2.0 * np.log(s[sel]) / s[sel])
            pair_vals = np.empty(2 * take, dtype=np.float64)
            pair_vals[0::2] = x[sel] * f
            pair_vals[1::2] = y[sel] * f
            m = min(2 * take, count - k)
            out[k:k + m] = pair_vals[:m]
            if m < 2 * take:
                self._spare = float(pair_vals[m])
            k += m
        return out


def derive_seed(seed: int, label: str, index: int) -> int:
    """Stable child seed from (seed, label, index); used for per-run reseeding."""
    h = 0xCBF29CE484222325  # FNV-1a over the label bytes
    for b in label.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & _MASK64
    return mix64(seed ^ mix64(h ^ mix64(index + 1)))

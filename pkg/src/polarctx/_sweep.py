"""Exhaustive minimum-weight sweeps behind the contextuality searches.

Two kernels, deliberately independent of each other:

* :func:`span_min_weight` Gray-codes the 2**r span of a reduced basis and
  tracks the minimum Hamming weight.  Used by the coset distance search.
* :func:`domain_min_weight` walks assignments 0, 1, 2, ... in plain binary
  order, updating A.x with a prefix-XOR delta table over the raw columns.
  Used by the bounded max-sat search, so the two agree only if both are
  right.

Vectors cross into kernel land as little-endian uint64 word arrays.  Work
is chunked over high-index prefixes so wall-clock budgets and threads can
be honored between chunks; enumeration order (prefix ascending, then step
order within a chunk) is deterministic, and ties are broken by the first
achiever in that order.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return wrap


# Bits enumerated inside one kernel call; prefixes over the remaining bits
# form the chunks.  2**24 steps is a fraction of a second per chunk.
CHUNK_BITS = 24

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)


@njit(cache=True, nogil=True, inline="always")
def _popcount(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return (x * _H01) >> _U56


@njit(cache=True, nogil=True)
def _gray_kernel(basis, start, stop_at):
    """Min weight of start ^ (xor of a subset of basis rows), Gray order.

    Returns (best_weight, best_step, best_vector); step 0 is ``start``
    itself and step t covers the subset gray(t) = t ^ (t >> 1).
    """
    m = basis.shape[0]
    nw = basis.shape[1]
    cur = start.copy()
    best_vec = start.copy()
    best = np.int64(0)
    for w in range(nw):
        best += np.int64(_popcount(cur[w]))
    best_step = np.int64(0)
    if best <= stop_at:
        return best, best_step, best_vec
    total = np.int64(1) << np.int64(m)
    for t in range(1, total):
        low = t & (-t)
        j = np.int64(_popcount(np.uint64(low - 1)))
        d = np.int64(0)
        for w in range(nw):
            cur[w] ^= basis[j, w]
            d += np.int64(_popcount(cur[w]))
        if d < best:
            best = d
            best_step = np.int64(t)
            for w in range(nw):
                best_vec[w] = cur[w]
            if best <= stop_at:
                break
    return best, best_step, best_vec


@njit(cache=True, nogil=True)
def _binary_kernel(deltas, start, stop_at):
    """Min weight over x = 0..2**p-1 of start ^ A.x, visiting x in order.

    ``deltas[j]`` must hold the XOR of columns 0..j, so stepping from x to
    x+1 (which flips bits 0..ctz(x+1)) applies a single table row.
    Returns (best_weight, best_x).
    """
    p = deltas.shape[0]
    nw = deltas.shape[1]
    cur = start.copy()
    best = np.int64(0)
    for w in range(nw):
        best += np.int64(_popcount(cur[w]))
    best_x = np.int64(0)
    if best <= stop_at:
        return best, best_x
    total = np.int64(1) << np.int64(p)
    for t in range(1, total):
        low = t & (-t)
        j = np.int64(_popcount(np.uint64(low - 1)))
        d = np.int64(0)
        for w in range(nw):
            cur[w] ^= deltas[j, w]
            d += np.int64(_popcount(cur[w]))
        if d < best:
            best = d
            best_x = np.int64(t)
            if best <= stop_at:
                break
    return best, best_x


def _to_words(x: int, nwords: int) -> np.ndarray:
    out = np.zeros(nwords, dtype=np.uint64)
    mask = (1 << 64) - 1
    for i in range(nwords):
        out[i] = (x >> (64 * i)) & mask
    return out


def _from_words(words: np.ndarray) -> int:
    x = 0
    for i, w in enumerate(words):
        x |= int(w) << (64 * i)
    return x


def _pack(rows: Sequence[int], nwords: int) -> np.ndarray:
    arr = np.zeros((len(rows), nwords), dtype=np.uint64)
    for i, r in enumerate(rows):
        arr[i] = _to_words(r, nwords)
    return arr


def _gray_subset_xor(vectors: Sequence[int], index: int) -> int:
    acc = 0
    g = index ^ (index >> 1)
    j = 0
    while g:
        if g & 1:
            acc ^= vectors[j]
        g >>= 1
        j += 1
    return acc


def _subset_xor(vectors: Sequence[int], index: int) -> int:
    acc = 0
    j = 0
    while index:
        if index & 1:
            acc ^= vectors[j]
        index >>= 1
        j += 1
    return acc


def _run_chunked(low_arr: np.ndarray, high: List[int], start: int, nbits: int,
                 kernel, stop_at: int, max_seconds: Optional[float],
                 threads: int) -> Tuple[int, int, int, bool]:
    """Shared prefix scheduler.

    Runs ``kernel(low_arr, start ^ xor(high subset), stop_at)`` for every
    prefix subset of ``high`` in ascending index order.  Returns
    (best_weight, best_prefix, best_step, proven).  ``kernel`` must return
    (weight, step) or (weight, step, vec); only weight and step are used.
    ``high`` subsets are combined with plain binary indexing.
    """
    nwords = max(1, (nbits + 63) // 64)
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    nprefix = 1 << len(high)
    best = nbits + 1  # larger than any achievable weight
    best_prefix = -1
    best_step = -1

    def run_one(prefix: int):
        s = _to_words(start ^ _subset_xor(high, prefix), nwords)
        out = kernel(low_arr, s, np.int64(stop_at))
        return int(out[0]), int(out[1])

    prefix = 0
    if threads <= 1:
        while prefix < nprefix:
            if deadline is not None and time.monotonic() >= deadline:
                return best, best_prefix, best_step, False
            w, step = run_one(prefix)
            if w < best:
                best, best_prefix, best_step = w, prefix, step
                if best <= stop_at:
                    return best, best_prefix, best_step, True
            prefix += 1
        return best, best_prefix, best_step, True

    with ThreadPoolExecutor(max_workers=threads) as pool:
        while prefix < nprefix:
            if deadline is not None and time.monotonic() >= deadline:
                return best, best_prefix, best_step, False
            wave = range(prefix, min(prefix + threads, nprefix))
            for p, (w, step) in zip(wave, pool.map(run_one, wave)):
                if w < best:
                    best, best_prefix, best_step = w, p, step
            if best <= stop_at:
                return best, best_prefix, best_step, True
            prefix += len(wave)
    return best, best_prefix, best_step, True


def span_min_weight(basis: Sequence[int], start: int, nbits: int, *,
                    stop_at: int = 0, max_seconds: Optional[float] = None,
                    threads: int = 1) -> Tuple[int, int, bool]:
    """Minimum weight of ``start ^ v`` over the span of ``basis``.

    Returns (weight, achieving vector ``start ^ v``, proven).  With a
    deadline the result is the best seen so far and ``proven`` is False.
    """
    basis = list(basis)
    m = len(basis)
    nwords = max(1, (nbits + 63) // 64)
    k = min(m, CHUNK_BITS)
    low, high = basis[:k], basis[k:]
    low_arr = _pack(low, nwords)
    best, bp, bs, proven = _run_chunked(
        low_arr, high, start, nbits, _gray_kernel, stop_at, max_seconds, threads)
    if bp < 0:
        # Deadline hit before the first chunk; start itself is the bound.
        return start.bit_count(), start, False
    vec = start ^ _subset_xor(high, bp) ^ _gray_subset_xor(low, bs)
    return best, vec, proven


def domain_min_weight(columns: Sequence[int], start: int, nbits: int, *,
                      stop_at: int = 0, max_seconds: Optional[float] = None,
                      threads: int = 1) -> Tuple[int, int, bool]:
    """Minimum weight of ``start ^ A.x`` over all assignments x.

    ``columns[j]`` is column j of A packed as an int.  Returns
    (weight, best assignment x, proven).  Assignments are visited in plain
    binary order within a chunk, low columns fastest, so the reported x is
    the first achiever in that order.
    """
    columns = list(columns)
    p = len(columns)
    nwords = max(1, (nbits + 63) // 64)
    k = min(p, CHUNK_BITS)
    low, high = columns[:k], columns[k:]
    prefix_xor = []
    acc = 0
    for c in low:
        acc ^= c
        prefix_xor.append(acc)
    low_arr = _pack(prefix_xor, nwords)
    best, bp, bx, proven = _run_chunked(
        low_arr, high, start, nbits, _binary_kernel, stop_at, max_seconds, threads)
    if bp < 0:
        return start.bit_count(), 0, False
    return best, (bp << k) | bx, proven

"""Hot loops of the exhaustive distance scan.

Two interchangeable backends: numba-compiled loops, and a batched pure-numpy
path. ``ORECODE_NO_NUMBA=1`` (or numba being unavailable) selects numpy.

Field elements are ints; ``rowmul[i, v]`` holds v * (row i of G), so a
codeword update when message digit i moves from a to b is
``c - rowmul[i, a] + rowmul[i, b]``.

Messages are scanned in lexicographic order with the first nonzero digit
normalized to 1, so the first minimum met is the lexicographically smallest.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover
    numba = None

NO_NUMBA = os.environ.get("ORECODE_NO_NUMBA", "") not in ("", "0") or numba is None

HAMMING, RANK_BITS, RANK_TABLE = 0, 1, 2


def backend() -> str:
    return "numpy" if NO_NUMBA else "numba"


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if numba is not None:

    @njit(cache=True)
    def _add(a, b, p, order, exp, log, zech):
        if p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = log[a]
        d = log[b] - la
        if d < 0:
            d += order
        z = zech[d]
        if z < 0:
            return 0
        return exp[(la + z) % order]

    @njit(cache=True)
    def _neg(a, p, order, exp, log):
        if p == 2 or a == 0:
            return a
        return exp[(log[a] + order // 2) % order]

    @njit(cache=True)
    def _move_odd(c, rowmul, pos, old, new, n, p, order, exp, log, zech):
        for t in range(n):
            c[t] = _add(c[t], _neg(rowmul[pos, old, t], p, order, exp, log),
                        p, order, exp, log, zech)
            c[t] = _add(c[t], rowmul[pos, new, t], p, order, exp, log, zech)

    @njit(cache=True)
    def _rank_bits(c, n, decbits, basis):
        # xor basis: v <- min(v, v ^ b) clears b's leading bit when set
        r = 0
        for i in range(n):
            v = decbits[c[i]]
            for j in range(r):
                u = v ^ basis[j]
                if u < v:
                    v = u
            if v != 0:
                basis[r] = v
                r += 1
        return r

    @njit(cache=True)
    def _rank_table(c, n, dec, sadd, smul, sneg, sinv, scratch):
        d = dec.shape[1]
        for i in range(n):
            for j in range(d):
                scratch[i, j] = dec[c[i], j]
        r = 0
        for col in range(d):
            piv = -1
            for i in range(n):
                if scratch[i, col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            r += 1
            inv = sinv[scratch[piv, col]]
            for j in range(d):
                scratch[piv, j] = smul[inv, scratch[piv, j]]
            for i in range(n):
                if i != piv and scratch[i, col] != 0:
                    f = scratch[i, col]
                    for j in range(d):
                        scratch[i, j] = sadd[scratch[i, j], sneg[smul[f, scratch[piv, j]]]]
            for j in range(d):
                scratch[piv, j] = 0
        return r

    # Numba's IR-level inlining of small helpers with array arguments produced
    # ~20x slower loops here, so the char-2 update and Hamming count are
    # written out in each scan loop.

    @njit(cache=True)
    def _scan_numba(rowmul, q, p, order, exp, log, zech, metric, decbits, dec,
                    sadd, smul, sneg, sinv, lower, budget):
        k = rowmul.shape[0]
        n = rowmul.shape[2]
        c = np.zeros(n, dtype=np.int64)
        msg = np.zeros(k, dtype=np.int64)
        best_msg = np.zeros(k, dtype=np.int64)
        best = n + 1
        count = 0
        basis = np.zeros(64, dtype=np.int64)
        scratch = np.zeros((n, max(dec.shape[1], 1)), dtype=np.int64)
        done = False
        for j in range(k - 1, -1, -1):
            for i in range(k):
                msg[i] = 0
            msg[j] = 1
            for t in range(n):
                c[t] = rowmul[j, 1, t]
            while True:
                if metric == 0:
                    w = 0
                    for i in range(n):
                        if c[i] != 0:
                            w += 1
                elif metric == 1:
                    w = _rank_bits(c, n, decbits, basis)
                else:
                    w = _rank_table(c, n, dec, sadd, smul, sneg, sinv, scratch)
                count += 1
                if w < best:
                    best = w
                    for i in range(k):
                        best_msg[i] = msg[i]
                    if best <= lower:
                        done = True
                        break
                if count >= budget:
                    done = True
                    break
                # odometer over positions j+1 .. k-1, last digit fastest
                pos = k - 1
                while pos > j:
                    old = msg[pos]
                    new = old + 1
                    carry = new == q
                    if carry:
                        new = 0
                    if p == 2:
                        for t in range(n):
                            c[t] ^= rowmul[pos, old, t] ^ rowmul[pos, new, t]
                    else:
                        _move_odd(c, rowmul, pos, old, new, n, p, order, exp, log, zech)
                    msg[pos] = new
                    if not carry:
                        break
                    pos -= 1
                if pos == j:
                    break
            if done:
                break
        return best, best_msg, count

    @njit(cache=True)
    def _enumerate_numba(rowmul, q, p, order, exp, log, zech, metric, decbits, dec,
                         sadd, smul, sneg, sinv):
        """Weight distribution over all normalized codewords."""
        k = rowmul.shape[0]
        n = rowmul.shape[2]
        hist = np.zeros(n + 1, dtype=np.int64)
        c = np.zeros(n, dtype=np.int64)
        msg = np.zeros(k, dtype=np.int64)
        basis = np.zeros(64, dtype=np.int64)
        scratch = np.zeros((n, max(dec.shape[1], 1)), dtype=np.int64)
        for j in range(k - 1, -1, -1):
            for i in range(k):
                msg[i] = 0
            msg[j] = 1
            for t in range(n):
                c[t] = rowmul[j, 1, t]
            while True:
                if metric == 0:
                    w = 0
                    for i in range(n):
                        if c[i] != 0:
                            w += 1
                elif metric == 1:
                    w = _rank_bits(c, n, decbits, basis)
                else:
                    w = _rank_table(c, n, dec, sadd, smul, sneg, sinv, scratch)
                hist[w] += 1
                pos = k - 1
                while pos > j:
                    old = msg[pos]
                    new = old + 1
                    carry = new == q
                    if carry:
                        new = 0
                    if p == 2:
                        for t in range(n):
                            c[t] ^= rowmul[pos, old, t] ^ rowmul[pos, new, t]
                    else:
                        _move_odd(c, rowmul, pos, old, new, n, p, order, exp, log, zech)
                    msg[pos] = new
                    if not carry:
                        break
                    pos -= 1
                if pos == j:
                    break
        return hist


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _np_add(a, b, p, order, exp, log, zech):
    if p == 2:
        return a ^ b
    la, lb = log[a], log[b]
    z = zech[(lb - la) % order]
    out = np.where(z < 0, 0, exp[(la + z) % order])
    return np.where(a == 0, b, np.where(b == 0, a, out))


def _np_weights(C, metric, decbits, dec, sadd, smul, sneg, sinv):
    if metric == HAMMING:
        return np.count_nonzero(C, axis=1)
    if metric == RANK_BITS:
        V = decbits[C].copy()
        r = np.zeros(len(C), dtype=np.int64)
        rows = np.arange(len(C))
        nbits = int(decbits.max()).bit_length() if decbits.size else 0
        for bit in range(nbits - 1, -1, -1):
            mask = (V >> bit) & 1
            has = mask.any(axis=1)
            piv = np.argmax(mask, axis=1)
            pv = V[rows, piv]
            V = np.where(mask == 1, V ^ pv[:, None], V)
            r += has
        return r
    M = dec[C].copy()  # batch x n x d
    r = np.zeros(len(C), dtype=np.int64)
    rows = np.arange(len(C))
    for col in range(M.shape[2]):
        nz = M[:, :, col] != 0
        has = nz.any(axis=1)
        piv = np.argmax(nz, axis=1)
        prow = M[rows, piv, :]
        inv = sinv[prow[:, col]]
        prow = smul[inv[:, None], prow]
        factor = M[:, :, col]
        M = sadd[M, sneg[smul[factor[:, :, None], prow[:, None, :]]]]
        r += has
    return r


def _tail_codewords(rowmul, j, start, stop, q, p, order, exp, log, zech):
    k, _, n = rowmul.shape
    idx = np.arange(start, stop, dtype=np.int64)
    C = np.broadcast_to(rowmul[j, 1], (len(idx), n)).copy()
    digits = idx.copy()
    for pos in range(k - 1, j, -1):
        d = digits % q
        digits //= q
        C = _np_add(C, rowmul[pos, d], p, order, exp, log, zech)
    return C, idx


def _tail_message(idx, j, k, q):
    msg = np.zeros(k, dtype=np.int64)
    msg[j] = 1
    for pos in range(k - 1, j, -1):
        msg[pos] = idx % q
        idx //= q
    return msg


def _scan_numpy(rowmul, q, p, order, exp, log, zech, metric, decbits, dec,
                sadd, smul, sneg, sinv, lower, budget, block=1 << 15):
    k, _, n = rowmul.shape
    best, best_msg, count = n + 1, np.zeros(k, dtype=np.int64), 0
    for j in range(k - 1, -1, -1):
        total = q ** (k - 1 - j)
        start = 0
        while start < total:
            stop = min(total, start + block, start + max(budget - count, 0))
            if stop <= start:
                return best, best_msg, count
            C, idx = _tail_codewords(rowmul, j, start, stop, q, p, order, exp, log, zech)
            w = _np_weights(C, metric, decbits, dec, sadd, smul, sneg, sinv)
            count += len(idx)
            at = int(np.argmin(w))
            if w[at] < best:
                best = int(w[at])
                best_msg = _tail_message(int(idx[at]), j, k, q)
                if best <= lower:
                    hit = int(np.argmax(w <= lower))
                    count -= len(idx) - hit - 1
                    return best, best_msg, count
            start = stop
            if count >= budget:
                return best, best_msg, count
    return best, best_msg, count


def _enumerate_numpy(rowmul, q, p, order, exp, log, zech, metric, decbits, dec,
                     sadd, smul, sneg, sinv, block=1 << 15):
    k, _, n = rowmul.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    for j in range(k - 1, -1, -1):
        total = q ** (k - 1 - j)
        for start in range(0, total, block):
            C, _ = _tail_codewords(rowmul, j, start, min(total, start + block), q, p, order, exp, log, zech)
            w = _np_weights(C, metric, decbits, dec, sadd, smul, sneg, sinv)
            hist += np.bincount(w, minlength=n + 1)
    return hist


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def scan_min_weight(args: tuple, lower: int, budget: int, use_numba: bool | None = None):
    """Returns (best weight, best message, codewords examined)."""
    if use_numba is None:
        use_numba = not NO_NUMBA
    if use_numba:
        best, msg, count = _scan_numba(*args, lower, budget)
        return int(best), np.asarray(msg), int(count)
    return _scan_numpy(*args, lower, budget)


def weight_histogram(args: tuple, use_numba: bool | None = None) -> np.ndarray:
    if use_numba is None:
        use_numba = not NO_NUMBA
    if use_numba:
        return np.asarray(_enumerate_numba(*args))
    return _enumerate_numpy(*args)

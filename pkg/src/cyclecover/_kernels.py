"""Hot inner loops with numba-compiled and pure-python twins.

The compiled path is used when numba imports and the input fits the packed
64-bit representations; setting the environment variable
CYCLECOVER_DISABLE_NUMBA=1 forces the pure fallback everywhere.  Both paths
enumerate in the same order and return identical witnesses.
"""

import os

import numpy as np

DISABLE_ENV = "CYCLECOVER_DISABLE_NUMBA"

if os.environ.get(DISABLE_ENV, "0") == "1":
    HAVE_NUMBA = False
else:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        HAVE_NUMBA = False

if not HAVE_NUMBA:

    def njit(*args, **kwargs):  # no-op decorator so the twins share source shape
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


# ---------------------------------------------------------------------------
# Increasing-cycle coverage scan.
#
# A k-subset u_1 < ... < u_k is covered in a round iff the cycle
# u_1 u_2 ... u_k u_1 is directed in one of its two rotational directions.
# The reverse direction in a round equals the forward direction in that
# round's reversal, so the scan works on the rounds plus their
# bit-complements and only ever tests the forward direction: it walks
# (k-1)-prefixes in lexicographic order keeping, per prefix, the bitmask of
# (possibly reversed) rounds whose path so far is fully forward; the last
# vertex is handled 64 vertices at a time through per-round out/in bitmasks.
# ---------------------------------------------------------------------------


def _prepare_masks(n, rounds_bits):
    """Packed per-round masks (numpy uint64) for n <= 64, r <= 64."""
    r = rounds_bits.shape[0]
    prm = np.zeros((n, n), dtype=np.uint64)  # rounds where i -> j, for i < j
    fwd = np.zeros((r, n), dtype=np.uint64)  # bits v > u with u -> v
    rev = np.zeros((r, n), dtype=np.uint64)  # bits v > u with v -> u
    himask = np.zeros(n, dtype=np.uint64)
    for u in range(n):
        himask[u] = ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            m = 0
            for ell in range(r):
                if rounds_bits[ell, p]:
                    m |= 1 << ell
                    fwd[ell, i] |= np.uint64(1) << np.uint64(j)
                else:
                    rev[ell, i] |= np.uint64(1) << np.uint64(j)
            prm[i, j] = m
            p += 1
    return prm, fwd, rev, himask


@njit(cache=True)
def _scan_increasing_packed(n, k, r, prm, fwd, rev, himask, witness):
    km1 = k - 1
    one = np.uint64(1)
    zero = np.uint64(0)
    full = np.uint64((1 << r) - 1)
    u = np.empty(km1, np.int64)
    alive = np.empty(km1, np.uint64)
    revrow = np.empty(64, np.uint64)
    j = 0
    u[0] = -1
    while j >= 0:
        u[j] += 1
        if u[j] > n - k + j:
            j -= 1
            continue
        if j == 0:
            alive[0] = full
            for ell in range(r):
                revrow[ell] = rev[ell, u[0]]
        else:
            a = alive[j - 1] & prm[u[j - 1], u[j]]
            alive[j] = a
            if a == zero:
                # no round keeps this prefix path forward: every completion
                # fails, and the smallest completion is consecutive labels
                for q in range(j + 1):
                    witness[q] = u[q]
                for q in range(j + 1, k):
                    witness[q] = u[j] + (q - j)
                return False
        if j == km1 - 2:
            base = alive[j]
            up = u[j]
            for ul in range(up + 1, n - 1):
                a = base & prm[up, ul]
                cov = zero
                while a != zero:
                    ell = 0
                    b = a
                    while (b & one) == zero:
                        b >>= one
                        ell += 1
                    cov |= fwd[ell, ul] & revrow[ell]
                    a &= a - one
                miss = himask[ul] & ~cov
                if miss != zero:
                    v = ul + 1
                    while ((miss >> np.uint64(v)) & one) == zero:
                        v += 1
                    for q in range(j + 1):
                        witness[q] = u[q]
                    witness[km1 - 1] = ul
                    witness[km1] = v
                    return False
        else:
            j += 1
            u[j] = u[j - 1]
    return True


def _prepare_masks_py(n, rounds_bits):
    """Same masks as _prepare_masks but as python ints (any n, any r)."""
    r = rounds_bits.shape[0]
    prm = [[0] * n for _ in range(n)]
    fwd = [[0] * n for _ in range(r)]
    rev = [[0] * n for _ in range(r)]
    himask = [((1 << n) - 1) & ~((1 << (u + 1)) - 1) for u in range(n)]
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            for ell in range(r):
                if rounds_bits[ell, p]:
                    prm[i][j] |= 1 << ell
                    fwd[ell][i] |= 1 << j
                else:
                    rev[ell][i] |= 1 << j
            p += 1
    return prm, fwd, rev, himask


def _scan_increasing_py(n, k, r, prm, fwd, rev, himask):
    km1 = k - 1
    full = (1 << r) - 1
    u = [0] * km1
    alive = [0] * km1
    revrow = [0] * max(r, 1)
    j = 0
    u[0] = -1
    while j >= 0:
        u[j] += 1
        if u[j] > n - k + j:
            j -= 1
            continue
        if j == 0:
            alive[0] = full
            for ell in range(r):
                revrow[ell] = rev[ell][u[0]]
        else:
            a = alive[j - 1] & prm[u[j - 1]][u[j]]
            alive[j] = a
            if a == 0:
                head = [u[q] for q in range(j + 1)]
                return head + [u[j] + (q - j) for q in range(j + 1, k)]
        if j == km1 - 2:
            base = alive[j]
            up = u[j]
            for ul in range(up + 1, n - 1):
                a = base & prm[up][ul]
                cov = 0
                while a:
                    low = a & -a
                    ell = low.bit_length() - 1
                    cov |= fwd[ell][ul] & revrow[ell]
                    a ^= low
                miss = himask[ul] & ~cov
                if miss:
                    v = (miss & -miss).bit_length() - 1
                    return [u[q] for q in range(j + 1)] + [ul, v]
        else:
            j += 1
            u[j] = u[j - 1]
    return None


def scan_increasing(n, k, rounds_bits, force_python=False):
    """Lexicographically first k-subset whose increasing cycle no round
    orients cyclically (in either direction), or None if all are covered.

    rounds_bits: uint8 array of shape (r, C(n,2)) in pair order.
    """
    r = rounds_bits.shape[0]
    if r == 0:
        return tuple(range(k))
    both = np.concatenate([rounds_bits, 1 - rounds_bits])
    if HAVE_NUMBA and not force_python and 3 <= n <= 64 and 2 * r <= 63:
        prm, fwd, rev, himask = _prepare_masks(n, both)
        witness = np.empty(k, np.int64)
        ok = _scan_increasing_packed(n, k, 2 * r, prm, fwd, rev, himask, witness)
        return None if ok else tuple(int(x) for x in witness)
    prm, fwd, rev, himask = _prepare_masks_py(n, both)
    res = _scan_increasing_py(n, k, 2 * r, prm, fwd, rev, himask)
    return None if res is None else tuple(res)


# ---------------------------------------------------------------------------
# k-independence scan.
#
# Enumerates index combinations i_1 < ... < i_k depth first, carrying the
# 2^d intersection masks of all complementation patterns over the prefix.
# An empty intersection at any depth certifies a violation for the smallest
# completion of the prefix (further intersections only shrink).
# ---------------------------------------------------------------------------


@njit(cache=True)
def _scan_kindep_packed(m, k, nwords, sets, comps, out_idx):
    npat = 1 << k
    pat = np.empty((k + 1, npat, nwords), np.uint64)
    for w in range(nwords):
        pat[0, 0, w] = ~np.uint64(0)
    # trim the top word to the ground-set width via comps' implicit masking:
    # sets/comps are already masked, and every depth-1 pattern is an AND with
    # one of them, so the depth-0 all-ones row never leaks spare bits.
    idx = np.empty(k, np.int64)
    j = 0
    idx[0] = -1
    while j >= 0:
        idx[j] += 1
        if idx[j] > m - k + j:
            j -= 1
            continue
        s = idx[j]
        bad = -1
        for q in range(1 << j):
            for half in range(2):
                empty = True
                for w in range(nwords):
                    src = pat[j, q, w]
                    v = src & sets[s, w] if half == 0 else src & comps[s, w]
                    pat[j + 1, 2 * q + half, w] = v
                    if v != np.uint64(0):
                        empty = False
                if empty and bad < 0:
                    bad = 2 * q + half
        if bad >= 0:
            for q in range(j + 1):
                out_idx[q] = idx[q]
            for q in range(j + 1, k):
                out_idx[q] = idx[j] + (q - j)
            # pad the dead pattern with 0-bits for the filler indices
            return bad << (k - 1 - j)
        if j < k - 1:
            j += 1
            idx[j] = idx[j - 1]
    return -1


def _scan_kindep_py(m, k, masks, t):
    full = (1 << t) - 1
    comps = [full & ~a for a in masks]
    pat = [[full]] + [[0] * (1 << d) for d in range(1, k + 1)]
    idx = [0] * k
    j = 0
    idx[0] = -1
    while j >= 0:
        idx[j] += 1
        if idx[j] > m - k + j:
            j -= 1
            continue
        s = idx[j]
        bad = -1
        row = pat[j]
        nxt = pat[j + 1]
        for q in range(1 << j):
            a = row[q] & masks[s]
            b = row[q] & comps[s]
            nxt[2 * q] = a
            nxt[2 * q + 1] = b
            if bad < 0:
                if a == 0:
                    bad = 2 * q
                elif b == 0:
                    bad = 2 * q + 1
        if bad >= 0:
            chosen = idx[: j + 1] + [idx[j] + (q - j) for q in range(j + 1, k)]
            return tuple(chosen), bad << (k - 1 - j)
        if j < k - 1:
            j += 1
            idx[j] = idx[j - 1]
    return None


def scan_kindep(masks, t, k, force_python=False):
    """First (index tuple, pattern) with empty intersection, or None.

    masks: list of python-int ground-set bitmasks, one per set.  The pattern
    integer reads MSB-first over the tuple; bit 0 keeps the set, bit 1 takes
    its complement.
    """
    m = len(masks)
    if m < k:
        raise ValueError(f"need at least k={k} sets, got {m}")
    if HAVE_NUMBA and not force_python and t >= 1 and k <= 16:
        nwords = (t + 63) // 64
        sets = np.zeros((m, nwords), dtype=np.uint64)
        comps = np.zeros((m, nwords), dtype=np.uint64)
        full = (1 << t) - 1
        nbytes = nwords * 8
        for i, a in enumerate(masks):
            c = full & ~a
            sets[i] = np.frombuffer(a.to_bytes(nbytes, "little"), dtype=np.uint64)
            comps[i] = np.frombuffer(c.to_bytes(nbytes, "little"), dtype=np.uint64)
        out_idx = np.empty(k, np.int64)
        bad = _scan_kindep_packed(m, k, nwords, sets, comps, out_idx)
        if bad < 0:
            return None
        return tuple(int(x) for x in out_idx), int(bad)
    if t < 1:
        return tuple(range(k)), 0
    return _scan_kindep_py(m, k, list(masks), t)

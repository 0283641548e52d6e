"""Exhaustive coverage checkers over k-subsets, with reproducible witnesses.

All three checkers enumerate k-subsets in lexicographic order and return the
first violation, so verdicts are deterministic across platforms.  The
increasing check runs on the packed scan kernel; the weak and all-orderings
checks are pure python (their k is small in practice).
"""

import itertools
import math

import numpy as np

from .core import UNCYCLED_SUBSET, Witness, out_neighbor_masks
from . import _kernels


def _validate(f, k):
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if k > f.n:
        raise ValueError(f"need k <= n, got k={k}, n={f.n}")


def _rounds_matrix(f):
    if not f.rounds:
        return np.zeros((0, f.n * (f.n - 1) // 2), dtype=np.uint8)
    return np.stack([t.bits for t in f.rounds])


def _subset_rank(n, sub):
    """Lexicographic rank of a sorted k-subset of [n]."""
    rank = 0
    prev = -1
    k = len(sub)
    for pos, v in enumerate(sub):
        for x in range(prev + 1, v):
            rank += math.comb(n - 1 - x, k - pos - 1)
        prev = v
    return rank


def _increasing_blockers(f, sub):
    """Per round, one blocking edge for each rotational direction."""
    detail = {}
    k = len(sub)
    for ell, t in enumerate(f.rounds):
        notes = []
        for label, reverse in (("forward", False), ("reverse", True)):
            for i in range(k):
                a, b = sub[i], sub[(i + 1) % k]
                if reverse:
                    a, b = b, a
                lo, hi = (a, b) if a < b else (b, a)
                if t.bit(lo, hi) != (1 if a < b else 0):
                    notes.append(f"{label}: edge {a}->{b} is oriented {b}->{a}")
                    break
        detail[f"round_{ell}"] = "; ".join(notes)
    return detail


def check_increasing(f, k):
    """None if every increasing k-cycle u_1 < ... < u_k is directed (in one
    of its two rotational directions) in some round, else the
    lexicographically first uncovered k-subset."""
    _validate(f, k)
    sub = _kernels.scan_increasing(f.n, k, _rounds_matrix(f))
    if sub is None:
        return None
    return Witness(
        kind=UNCYCLED_SUBSET,
        vertices=sub,
        detail={"mode": "increasing", **_increasing_blockers(f, sub)},
    )


def _reach(rows, start, mask):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = v & -v
            nxt |= rows[low.bit_length() - 1]
            v ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen & mask


def _round_adjacency(f):
    out_rows = [out_neighbor_masks(t) for t in f.rounds]
    in_rows = []
    for rows in out_rows:
        inn = [0] * f.n
        for u in range(f.n):
            v = rows[u]
            while v:
                low = v & -v
                inn[low.bit_length() - 1] |= 1 << u
                v ^= low
        in_rows.append(inn)
    return out_rows, in_rows


def check_weak(f, k):
    """None if every k-subset carries a directed Hamiltonian cycle in some
    round (strong-connectivity characterization), else the first failure."""
    _validate(f, k)
    out_rows, in_rows = _round_adjacency(f)
    for sub in itertools.combinations(range(f.n), k):
        mask = 0
        for v in sub:
            mask |= 1 << v
        start = sub[0]
        if not any(
            _reach(out_rows[ell], start, mask) == mask
            and _reach(in_rows[ell], start, mask) == mask
            for ell in range(len(f.rounds))
        ):
            return Witness(
                kind=UNCYCLED_SUBSET,
                vertices=sub,
                detail={
                    "mode": "weak",
                    "reason": "no round induces a strongly connected subtournament",
                },
            )
    return None


def _canonical_orderings(sub):
    """The (k-1)!/2 direction-free cyclic orderings of a sorted subset:
    first element fixed to the minimum, second element below the last."""
    first, rest = sub[0], sub[1:]
    for perm in itertools.permutations(rest):
        if len(perm) < 2 or perm[0] < perm[-1]:
            yield (first,) + perm


def _cycle_directed(t, order, reverse):
    k = len(order)
    for i in range(k):
        a, b = order[i], order[(i + 1) % k]
        if reverse:
            a, b = b, a
        lo, hi = (a, b) if a < b else (b, a)
        if t.bit(lo, hi) != (1 if a < b else 0):
            return False
    return True


def check_all_orderings(f, k):
    """None if every cyclic ordering of every k-subset appears as a directed
    cycle (in either direction) in some round, else the first failure."""
    _validate(f, k)
    for sub in itertools.combinations(range(f.n), k):
        for order in _canonical_orderings(sub):
            if not any(
                _cycle_directed(t, order, False) or _cycle_directed(t, order, True)
                for t in f.rounds
            ):
                return Witness(
                    kind=UNCYCLED_SUBSET,
                    vertices=sub,
                    detail={"mode": "all", "ordering": list(order)},
                )
    return None


_CHECKERS = {
    "increasing": check_increasing,
    "weak": check_weak,
    "all": check_all_orderings,
}


def run_check(f, k, mode, elapsed=None):
    """Verdict document for the CLI: status, counts, optional witness."""
    if mode not in _CHECKERS:
        raise ValueError(f"unknown mode {mode!r}")
    witness = _CHECKERS[mode](f, k)
    total = math.comb(f.n, k)
    doc = {
        "status": "ok" if witness is None else "fail",
        "mode": mode,
        "n": f.n,
        "k": k,
        "rounds": len(f.rounds),
        "subsets_checked": total
        if witness is None
        else _subset_rank(f.n, witness.vertices) + 1,
    }
    if witness is not None:
        doc["witness"] = witness.to_document()
    if elapsed is not None:
        doc["elapsed"] = elapsed
    return doc

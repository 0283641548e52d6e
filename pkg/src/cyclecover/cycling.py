"""Optimal increasing-k-cycling constructions and the matching lower bound.

The construction places the vertices of K_{n'} on a circle, n' = 2^r(k-2)+1
the smallest such value >= n, and derives r rounds from the binary digits of
f(i,j) = floor(d(i,j)/(k-2)), where d is the clockwise gap.  Round ell
(1-based, ell-th most significant of the r digits) orients i -> j iff that
digit of f(i,j) is 0.  Restricting to the lowest n labels keeps every
increasing k-subset of [n] covered.
"""

from dataclasses import dataclass
import itertools
import math

import numpy as np

from .core import (
    DUPLICATE_LOCAL_SEQUENCE,
    OrientationFamily,
    Tournament,
    Witness,
    pair_count,
)


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    k: int
    r: int
    n_padded: int

    @classmethod
    def for_instance(cls, n, k):
        if k < 3:
            raise ValueError(f"need k >= 3, got {k}")
        if n < k:
            raise ValueError(f"need n >= k, got n={n}, k={k}")
        r = lower_bound(n, k)
        return cls(n, k, r, (1 << r) * (k - 2) + 1)


def lower_bound(n, k):
    """ceil(log2((n-1)/(k-2))) in exact integer arithmetic."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    r = 1
    while (1 << r) * (k - 2) < n - 1:
        r += 1
    return r


def clockwise_gap(p, a, b):
    """Number of vertices strictly between a and b, clockwise from a."""
    npad = p.n_padded
    if a == b:
        raise ValueError("a and b must differ")
    if not (0 <= a < npad and 0 <= b < npad):
        raise ValueError(f"vertex out of range for n_padded={npad}: ({a}, {b})")
    return b - a - 1 if b > a else npad + b - a - 1


def f_value(p, i, j):
    """floor(d(i,j)/(k-2)); an r-digit binary number."""
    return clockwise_gap(p, i, j) // (p.k - 2)


def construct_family(n, k):
    """Increasingly k-cycling family on [n] with lower_bound(n, k) rounds."""
    p = ConstructionParams.for_instance(n, k)
    bits = np.empty((p.r, pair_count(n)), dtype=np.uint8)
    q = 0
    for i in range(n):
        for j in range(i + 1, n):
            f = f_value(p, i, j)
            for ell in range(1, p.r + 1):
                digit = (f >> (p.r - ell)) & 1
                bits[ell - 1, q] = 1 if digit == 0 else 0
            q += 1
    rounds = tuple(Tournament(n, bits[ell]) for ell in range(p.r))
    return OrientationFamily(n, rounds)


def _local_sequences(f, u):
    """Per-neighbor round-direction sequences at u; bit ell = 0 iff the
    edge leaves u in round ell."""
    seqs = {}
    for v in range(f.n):
        if v == u:
            continue
        lo, hi = (u, v) if u < v else (v, u)
        seq = 0
        for ell, t in enumerate(f.rounds):
            away = t.bit(lo, hi) == (1 if u < v else 0)
            if not away:
                seq |= 1 << ell
        seqs.setdefault(seq, []).append(v)
    return seqs


def pigeonhole_witness(f, k):
    """Witness from a vertex with k-1 identically-sequenced incident edges.

    Such a k-subset has, in every round, all edges at u pointing the same
    way, so no round can orient any k-cycle through it cyclically.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    nr = len(f.rounds)
    for u in range(f.n):
        for seq, neighbors in _local_sequences(f, u).items():
            if len(neighbors) >= k - 1:
                chosen = neighbors[: k - 1]
                return Witness(
                    kind=DUPLICATE_LOCAL_SEQUENCE,
                    vertices=tuple(sorted([u] + chosen)),
                    detail={
                        "vertex": u,
                        "neighbors": chosen,
                        "sequence": "".join(
                            "1" if (seq >> ell) & 1 else "0" for ell in range(nr)
                        ),
                    },
                )
    return None


def _increasing_coverage(n, k, tournament):
    """Bitmask over lex-ordered k-subsets whose increasing cycle this round
    directs in one of its two rotational directions."""
    covered = 0
    for idx, sub in enumerate(itertools.combinations(range(n), k)):
        fwd = all(tournament.bit(sub[i], sub[i + 1]) for i in range(k - 1))
        if fwd and tournament.bit(sub[0], sub[-1]) == 0:
            covered |= 1 << idx
            continue
        bwd = not any(tournament.bit(sub[i], sub[i + 1]) for i in range(k - 1))
        if bwd and tournament.bit(sub[0], sub[-1]) == 1:
            covered |= 1 << idx
    return covered


@dataclass(frozen=True)
class SearchResult:
    status: str  # "minimum" | "refuted" | "budget_exhausted"
    minimum: int = None
    certificate: OrientationFamily = None
    refuted_up_to: int = None
    nodes: int = 0

    def to_document(self):
        doc = {"status": self.status, "nodes": self.nodes}
        if self.status == "minimum":
            doc["minimum"] = self.minimum
            doc["certificate"] = [t.to_bitstring() for t in self.certificate.rounds]
        elif self.status == "refuted":
            doc["refuted_up_to"] = self.refuted_up_to
        return doc


def exact_min_search(n, k, max_rounds, node_budget=5_000_000, feasibility_limit=5):
    """Exact minimum family size by depth-first search over round tuples.

    Rounds are enumerated as integer codes in nondecreasing order (families
    are order-insensitive, so this is a sound symmetry reduction).  A branch
    is pruned when the uncovered subsets exceed what the remaining rounds
    could possibly cover.  Every visited round code counts as one node.
    """
    if n > feasibility_limit:
        raise ValueError(
            f"n={n} exceeds the exhaustive-search guard ({feasibility_limit}); "
            "raise feasibility_limit explicitly to override"
        )
    if k < 3 or n < k:
        raise ValueError(f"need 3 <= k <= n, got n={n}, k={k}")
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")

    ncodes = 1 << pair_count(n)
    coverage = [_increasing_coverage(n, k, Tournament.from_code(n, c)) for c in range(ncodes)]
    nsubsets = math.comb(n, k)
    full = (1 << nsubsets) - 1
    max_cover = max(bin(c).count("1") for c in coverage)
    nodes = 0

    def dfs(depth, start, covered, chosen, m):
        nonlocal nodes
        for code in range(start, ncodes):
            nodes += 1
            if nodes > node_budget:
                return "budget"
            new = covered | coverage[code]
            if new == full:
                chosen.append(code)
                return "found"
            if depth + 1 < m:
                remaining = bin(full & ~new).count("1")
                if depth >= 1 and remaining > (m - depth - 1) * max_cover:
                    continue
                chosen.append(code)
                res = dfs(depth + 1, code, new, chosen, m)
                if res != "none":
                    return res
                chosen.pop()
        return "none"

    for m in range(1, max_rounds + 1):
        chosen = []
        res = dfs(0, 0, 0, chosen, m)
        if res == "budget":
            return SearchResult(status="budget_exhausted", nodes=nodes)
        if res == "found":
            rounds = tuple(Tournament.from_code(n, c) for c in chosen)
            return SearchResult(
                status="minimum",
                minimum=m,
                certificate=OrientationFamily(n, rounds),
                nodes=nodes,
            )
    return SearchResult(status="refuted", refuted_up_to=max_rounds, nodes=nodes)

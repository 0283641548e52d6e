"""k-independent set families and their translation to orientation rounds.

A family is k-independent when every k of its members realize all 2^k
complementation patterns with nonempty intersection.  The characteristic
vectors of such a family over the C(n,2) edges of K_n yield rounds in which
every prescribed orientation of any k edges appears somewhere, hence every
cyclic ordering of every k-set is realized.
"""

from dataclasses import dataclass
import json

import numpy as np

from .core import (
    MISSING_INTERSECTION_PATTERN,
    OrientationFamily,
    Tournament,
    Witness,
    pair_count,
)
from .cycling import lower_bound
from .verifier import check_all_orderings
from . import _kernels


@dataclass(frozen=True, eq=False)
class SetFamily:
    """Indexed list of subsets of the ground set {0, ..., ground_size-1}."""

    ground_size: int
    sets: tuple

    def __post_init__(self):
        if self.ground_size < 0:
            raise ValueError("ground_size must be >= 0")
        sets = tuple(tuple(sorted({int(x) for x in s})) for s in self.sets)
        for s in sets:
            if s and (s[0] < 0 or s[-1] >= self.ground_size):
                raise ValueError(f"set {s} out of ground range {self.ground_size}")
        object.__setattr__(self, "sets", sets)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground_size == other.ground_size and self.sets == other.sets

    def __len__(self):
        return len(self.sets)

    def masks(self):
        out = []
        for s in self.sets:
            m = 0
            for x in s:
                m |= 1 << x
            out.append(m)
        return out


def is_k_independent(fam, k):
    """None if every k-tuple of members realizes all 2^k complementation
    patterns with nonempty intersection, else the first missing pattern."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if len(fam) < k:
        raise ValueError(f"need at least k={k} sets, got {len(fam)}")
    res = _kernels.scan_kindep(fam.masks(), fam.ground_size, k)
    if res is None:
        return None
    indices, pattern = res
    bits = [(pattern >> (k - 1 - pos)) & 1 for pos in range(k)]
    return Witness(
        kind=MISSING_INTERSECTION_PATTERN,
        vertices=indices,
        detail={
            "indices": list(indices),
            "pattern": bits,  # 0 = the set itself, 1 = its complement
        },
    )


class RetriesExhausted(RuntimeError):
    def __init__(self, m, k, t, retries, last_witness):
        super().__init__(
            f"no k-independent family found for m={m}, k={k}, t={t} "
            f"after {retries} attempts"
        )
        self.last_witness = last_witness


def randomized_family(m, k, t, seed, retries=20):
    """Random family (each element kept with probability 1/2 per set) retried
    until it verifies k-independent; deterministic per seed."""
    if t < 1:
        raise ValueError("need t >= 1")
    rng = np.random.default_rng(seed)
    witness = None
    for _ in range(retries):
        member = rng.integers(0, 2, size=(m, t), dtype=np.uint8)
        fam = SetFamily(t, tuple(tuple(np.flatnonzero(row)) for row in member))
        witness = is_k_independent(fam, k)
        if witness is None:
            return fam
    raise RetriesExhausted(m, k, t, retries, witness)


def derive_orientations(fam, n):
    """One round per ground element: edge e (lex pair order) is flipped from
    the transitive reference orientation in round s iff s is in set e."""
    m = pair_count(n)
    if len(fam) != m:
        raise ValueError(f"need C({n},2) = {m} sets, got {len(fam)}")
    t = fam.ground_size
    bits = np.ones((t, m), dtype=np.uint8)
    for e, s in enumerate(fam.sets):
        for ground in s:
            bits[ground, e] = 0
    return OrientationFamily(
        n, tuple(Tournament(n, bits[ground]) for ground in range(t))
    )


@dataclass(frozen=True)
class PipelineResult:
    family: OrientationFamily
    set_family: SetFamily
    t: int
    floor: int  # the increasing-cycling lower bound, for context


def w_upper_pipeline(n, k, seed, retries=5, t_cap=4096):
    """Minimal-t randomized k-independent family on C(n,2) sets, translated
    to orientations and verified against the all-orderings checker."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    m = pair_count(n)

    def attempt(t):
        try:
            return randomized_family(m, k, t, np.random.SeedSequence([seed, t]), retries)
        except RetriesExhausted:
            return None

    # grow until success, then binary search the smallest succeeding t
    hi = max(k, 4)
    fam = attempt(hi)
    while fam is None:
        hi *= 2
        if hi > t_cap:
            raise RetriesExhausted(m, k, hi, retries, None)
        fam = attempt(hi)
    best_t, best = hi, fam
    lo = 1
    while lo < best_t:
        mid = (lo + best_t) // 2
        got = attempt(mid)
        if got is None:
            lo = mid + 1
        else:
            best_t, best = mid, got
    orientations = derive_orientations(best, n)
    leftover = check_all_orderings(orientations, k)
    if leftover is not None:  # pragma: no cover - guaranteed by k-independence
        raise RuntimeError(f"derived family failed verification: {leftover}")
    return PipelineResult(
        family=orientations, set_family=best, t=best_t, floor=lower_bound(n, k)
    )


def set_family_to_document(fam):
    return {"t": fam.ground_size, "sets": [list(s) for s in fam.sets]}


def set_family_from_document(doc):
    if not isinstance(doc, dict) or not {"t", "sets"} <= set(doc):
        raise ValueError("set family document needs fields 't' and 'sets'")
    return SetFamily(doc["t"], tuple(tuple(s) for s in doc["sets"]))


def serialize_set_family(fam):
    return json.dumps(set_family_to_document(fam), sort_keys=True, indent=2) + "\n"


def deserialize_set_family(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed set family document: {e}") from e
    return set_family_from_document(doc)

"""Facet-orientation rounds for r-subsets: consistency, exhaustive small-case
maxima, the local-lemma round budget, and a resampling construction.

Sign convention: every (r-1)-subset's +1 orientation is the one given by
increasing vertex order.  Deleting the i-th smallest vertex (i is 1-based)
from an r-set oriented epsilon induces epsilon * (-1)^i on the facet, so an
r-set is consistent in a round iff sign(facet_i) * (-1)^i is the same for
all i.  The 1-based i matters: an off-by-one flips every verdict.
"""

from dataclasses import dataclass
import itertools
import json
import math

import numpy as np

from .core import (
    DUPLICATE_LOCAL_SEQUENCE,
    INCONSISTENT_SIMPLEX,
    Witness,
)


def permutation_parity(perm):
    """'even' or 'odd' parity of perm relative to its sorted order."""
    seq = list(perm)
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated elements in {perm!r}")
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    swaps = 0
    seen = [False] * len(seq)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            clen += 1
        swaps += clen - 1
    return "odd" if swaps % 2 else "even"


def parity_sign(perm):
    return -1 if permutation_parity(perm) == "odd" else 1


def induced_sign(simplex, simplex_sign, i):
    """Orientation induced on the facet missing the i-th smallest vertex."""
    r = len(simplex)
    if list(simplex) != sorted(simplex):
        raise ValueError("simplex vertices must be listed in increasing order")
    if not 1 <= i <= r:
        raise ValueError(f"facet index must be in 1..{r}, got {i}")
    if simplex_sign not in (1, -1):
        raise ValueError(f"sign must be +1/-1, got {simplex_sign}")
    return simplex_sign * (-1) ** i


def facet_subsets(n, r):
    """All (r-1)-subsets of [n] in lexicographic order."""
    return list(itertools.combinations(range(n), r - 1))


@dataclass(frozen=True, eq=False)
class FacetSigning:
    """One round: a sign for every (r-1)-subset of [n], lex subset order."""

    n: int
    r: int
    signs: np.ndarray  # int8, +1/-1, length C(n, r-1)

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"need r >= 3, got {self.r}")
        if self.n < self.r - 1:
            raise ValueError(f"need n >= r-1, got n={self.n}, r={self.r}")
        signs = np.asarray(self.signs, dtype=np.int8)
        want = math.comb(self.n, self.r - 1)
        if signs.ndim != 1 or signs.shape[0] != want:
            raise ValueError(f"need C({self.n},{self.r - 1}) = {want} signs")
        if signs.size and not set(np.unique(signs)) <= {-1, 1}:
            raise ValueError("signs must be +1/-1")
        signs.flags.writeable = False
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "_index", None)

    def __eq__(self, other):
        if not isinstance(other, FacetSigning):
            return NotImplemented
        return (
            self.n == other.n
            and self.r == other.r
            and np.array_equal(self.signs, other.signs)
        )

    def facet_index(self, facet):
        if self._index is None:
            idx = {s: p for p, s in enumerate(facet_subsets(self.n, self.r))}
            object.__setattr__(self, "_index", idx)
        return self._index[tuple(facet)]

    def sign(self, facet):
        return int(self.signs[self.facet_index(facet)])

    def to_signstring(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    @classmethod
    def from_signstring(cls, n, r, s):
        if set(s) - {"+", "-"}:
            raise ValueError(f"sign string may contain only '+'/'-': {s!r}")
        return cls(n, r, np.array([1 if c == "+" else -1 for c in s], dtype=np.int8))


@dataclass(frozen=True)
class SimplexRoundFamily:
    n: int
    r: int
    rounds: tuple

    def __post_init__(self):
        rounds = tuple(self.rounds)
        for rd in rounds:
            if rd.n != self.n or rd.r != self.r:
                raise ValueError("all rounds must share (n, r)")
        object.__setattr__(self, "rounds", rounds)


def is_consistent(round_, s):
    """True iff all facet signs of the r-set s are induced by one orientation."""
    s = tuple(sorted(s))
    if len(s) != round_.r:
        raise ValueError(f"need an r-set with r={round_.r}, got {s}")
    ref = None
    for i in range(1, round_.r + 1):
        facet = s[: i - 1] + s[i:]
        val = round_.sign(facet) * (-1) ** i
        if ref is None:
            ref = val
        elif val != ref:
            return False
    return True


def check_simplex_family(fam):
    """None if every r-subset of [n] is consistent in some round, else the
    lexicographically first failing r-subset."""
    for s in itertools.combinations(range(fam.n), fam.r):
        if not any(is_consistent(rd, s) for rd in fam.rounds):
            return Witness(
                kind=INCONSISTENT_SIMPLEX,
                vertices=s,
                detail={
                    "reason": "no round orients all facets consistently",
                    "rounds": len(fam.rounds),
                },
            )
    return None


def max_consistent_per_round(n, r, guard=25, force=False):
    """Exhaustive max, over all sign assignments, of simultaneously
    consistent r-subsets."""
    nfacets = math.comb(n, r - 1)
    if nfacets > guard and not force:
        raise ValueError(
            f"C({n},{r - 1}) = {nfacets} facets exceeds the enumeration guard "
            f"({guard}); pass force=True to override"
        )
    facets = facet_subsets(n, r)
    rsets = list(itertools.combinations(range(n), r))
    # per r-set: facet positions and the (-1)^i weights, precomputed
    tables = []
    for s in rsets:
        pos = []
        idx = {f: p for p, f in enumerate(facets)}
        for i in range(1, r + 1):
            facet = s[: i - 1] + s[i:]
            pos.append((idx[facet], (-1) ** i))
        tables.append(pos)
    best = 0
    for code in range(1 << nfacets):
        count = 0
        for pos in tables:
            ref = None
            good = True
            for p, w in pos:
                val = (1 if (code >> p) & 1 else -1) * w
                if ref is None:
                    ref = val
                elif val != ref:
                    good = False
                    break
            if good:
                count += 1
        if count > best:
            best = count
    return best


def lll_round_budget(n, r):
    """Smallest t with 4 * ((2^{r-1}-1)/2^{r-1})^t * r(n-r) <= 1, evaluated
    in exact integer arithmetic."""
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    if n <= r:
        raise ValueError(f"need n > r, got n={n}, r={r}")
    base = (1 << (r - 1)) - 1
    denom = 1 << (r - 1)
    d = r * (n - r)
    t = 1
    while 4 * d * base**t > denom**t:
        t += 1
    return t


def simplex_pigeonhole_witness(fam):
    """Witness from an (r-2)-set whose extensions share an induced-sign
    sequence across all rounds: the r-set joining two such extensions can
    never be consistent."""
    n, r = fam.n, fam.r
    for core_set in itertools.combinations(range(n), r - 2):
        seen = {}
        for v in range(n):
            if v in core_set:
                continue
            facet = tuple(sorted(core_set + (v,)))
            i = facet.index(v) + 1  # 1-based position of v in the facet
            seq = tuple(rd.sign(facet) * (-1) ** i for rd in fam.rounds)
            if seq in seen:
                w = seen[seq]
                return Witness(
                    kind=DUPLICATE_LOCAL_SEQUENCE,
                    vertices=tuple(sorted(core_set + (w, v))),
                    detail={
                        "core": list(core_set),
                        "extensions": [w, v],
                        "sequence": list(seq),
                    },
                )
            seen[seq] = v
    return None


def signing_from_tournament(t):
    """r=3 translation: sign of {i, j}, i < j, is +1 iff the edge runs i -> j.

    Under this map a 3-set is consistent exactly when its triangle is
    cyclically oriented.
    """
    signs = np.where(t.bits == 1, 1, -1).astype(np.int8)
    return FacetSigning(t.n, 3, signs)


def simplex_family_from_orientations(f):
    return SimplexRoundFamily(
        f.n, 3, tuple(signing_from_tournament(t) for t in f.rounds)
    )


class ResampleLimitExceeded(RuntimeError):
    def __init__(self, stuck, resamples):
        super().__init__(
            f"resample limit reached after {resamples} resamplings; "
            f"stuck r-subset {stuck}"
        )
        self.stuck = stuck
        self.resamples = resamples


def randomized_construct(n, r, t, seed, resample_limit=100_000):
    """t random rounds, repaired Moser-Tardos style: while some r-subset is
    inconsistent in every round, resample that subset's facet signs in all
    rounds.  Deterministic per seed; the result is verified before return."""
    if t < 1:
        raise ValueError("need t >= 1")
    rng = np.random.default_rng(seed)
    facets = facet_subsets(n, r)
    idx = {f: p for p, f in enumerate(facets)}
    signs = rng.choice(np.array([-1, 1], dtype=np.int8), size=(t, len(facets)))
    rsets = list(itertools.combinations(range(n), r))
    tables = []
    for s in rsets:
        tables.append(
            [(idx[s[: i - 1] + s[i:]], (-1) ** i) for i in range(1, r + 1)]
        )

    def consistent_somewhere(table):
        for ell in range(t):
            ref = None
            good = True
            for p, w in table:
                val = int(signs[ell, p]) * w
                if ref is None:
                    ref = val
                elif val != ref:
                    good = False
                    break
            if good:
                return True
        return False

    resamples = 0
    while True:
        stuck = None
        for s, table in zip(rsets, tables):
            if not consistent_somewhere(table):
                stuck = (s, table)
                break
        if stuck is None:
            break
        if resamples >= resample_limit:
            raise ResampleLimitExceeded(stuck[0], resamples)
        resamples += 1
        for p, _ in stuck[1]:
            signs[:, p] = rng.choice(np.array([-1, 1], dtype=np.int8), size=t)

    fam = SimplexRoundFamily(
        n, r, tuple(FacetSigning(n, r, signs[ell]) for ell in range(t))
    )
    leftover = check_simplex_family(fam)
    if leftover is not None:  # pragma: no cover - the loop above guarantees this
        raise RuntimeError(f"resampling terminated with a violation: {leftover}")
    return fam


def simplex_family_to_document(fam):
    return {
        "n": fam.n,
        "r": fam.r,
        "rounds": [rd.to_signstring() for rd in fam.rounds],
    }


def simplex_family_from_document(doc):
    if not isinstance(doc, dict) or not {"n", "r", "rounds"} <= set(doc):
        raise ValueError("simplex family document needs fields 'n', 'r', 'rounds'")
    n, r = doc["n"], doc["r"]
    rounds = tuple(FacetSigning.from_signstring(n, r, s) for s in doc["rounds"])
    return SimplexRoundFamily(n, r, rounds)


def serialize_simplex_family(fam):
    return json.dumps(simplex_family_to_document(fam), sort_keys=True, indent=2) + "\n"


def deserialize_simplex_family(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed simplex family document: {e}") from e
    return simplex_family_from_document(doc)

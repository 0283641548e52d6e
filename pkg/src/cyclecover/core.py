"""Tournaments, orientation families, witnesses, and their canonical file format.

A tournament on [n] = {0, ..., n-1} is stored as a packed bit sequence over
the unordered pairs in lexicographic order (0,1), (0,2), ..., (0,n-1),
(1,2), ...; bit 1 means the edge is oriented from the lower index to the
higher one.  All types are immutable after construction.
"""

from dataclasses import dataclass
import json

import numpy as np

# Witness kinds.
UNCYCLED_SUBSET = "UncycledSubset"
INCONSISTENT_SIMPLEX = "InconsistentSimplex"
MISSING_INTERSECTION_PATTERN = "MissingIntersectionPattern"
DUPLICATE_LOCAL_SEQUENCE = "DuplicateLocalSequence"


def pair_count(n):
    return n * (n - 1) // 2


def pair_index(n, i, j):
    """Index of pair (i, j), i < j, in lexicographic pair order."""
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True, eq=False)
class Tournament:
    """One round: a complete antisymmetric orientation of K_n."""

    n: int
    bits: np.ndarray  # uint8, length C(n,2)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        bits = np.asarray(self.bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.shape[0] != pair_count(self.n):
            raise ValueError(
                f"bit sequence length {bits.shape} != C({self.n},2) = {pair_count(self.n)}"
            )
        if bits.size and bits.max() > 1:
            raise ValueError("bits must be 0/1")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def bit(self, i, j):
        """Stored bit of pair (i, j) with i < j."""
        return int(self.bits[pair_index(self.n, i, j)])

    def to_bitstring(self):
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from_bitstring(cls, n, s):
        if set(s) - {"0", "1"}:
            raise ValueError(f"bit string may contain only '0'/'1': {s!r}")
        return cls(n, np.frombuffer(s.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_code(cls, n, code):
        """Tournament whose pair-p bit is bit p of the integer code."""
        m = pair_count(n)
        if not 0 <= code < (1 << m):
            raise ValueError(f"code out of range for n={n}")
        return cls(n, np.array([(code >> p) & 1 for p in range(m)], dtype=np.uint8))

    @classmethod
    def transitive(cls, n):
        """The transitive tournament: i -> j whenever i < j."""
        return cls(n, np.ones(pair_count(n), dtype=np.uint8))


def direction(t, i, j):
    """Oriented pair (source, target) of the edge {i, j}."""
    if i == j:
        raise ValueError(f"i and j must differ, got {i}")
    if not (0 <= i < t.n and 0 <= j < t.n):
        raise ValueError(f"vertex out of range for n={t.n}: ({i}, {j})")
    lo, hi = (i, j) if i < j else (j, i)
    return (lo, hi) if t.bit(lo, hi) else (hi, lo)


def induced_subtournament(t, s):
    """Subtournament on the vertex subset s, relabeled by rank within s."""
    verts = sorted(set(s))
    if not verts:
        raise ValueError("vertex subset must be nonempty")
    if verts[0] < 0 or verts[-1] >= t.n:
        raise ValueError(f"vertices out of range for n={t.n}: {verts}")
    m = len(verts)
    bits = np.empty(pair_count(m), dtype=np.uint8)
    p = 0
    for a in range(m):
        for b in range(a + 1, m):
            bits[p] = t.bit(verts[a], verts[b])
            p += 1
    return Tournament(m, bits)


def out_neighbor_masks(t):
    """Per-vertex bitmask (python int) of out-neighbors."""
    out = [0] * t.n
    p = 0
    for i in range(t.n):
        for j in range(i + 1, t.n):
            if t.bits[p]:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
            p += 1
    return out


def has_hamiltonian_cycle(t):
    """True iff some cyclic ordering of all vertices is a directed cycle.

    Uses the Camion/Moon characterization: a tournament on >= 3 vertices has
    a directed Hamiltonian cycle iff it is strongly connected.
    """
    if t.n < 3:
        raise ValueError(f"need n >= 3, got {t.n}")
    out = out_neighbor_masks(t)
    inn = [0] * t.n
    for i in range(t.n):
        for j in range(t.n):
            if i != j and not (out[i] >> j) & 1:
                inn[i] |= 1 << j
    full = (1 << t.n) - 1

    def reach(adj):
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= adj[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen

    return reach(out) == full and reach(inn) == full


@dataclass(frozen=True, eq=False)
class OrientationFamily:
    """Ordered list of tournament rounds over a common vertex set [n]."""

    n: int
    rounds: tuple

    def __post_init__(self):
        rounds = tuple(self.rounds)
        for t in rounds:
            if t.n != self.n:
                raise ValueError(f"round has n={t.n}, family has n={self.n}")
        object.__setattr__(self, "rounds", rounds)

    def __eq__(self, other):
        if not isinstance(other, OrientationFamily):
            return NotImplemented
        return self.n == other.n and self.rounds == other.rounds

    def __len__(self):
        return len(self.rounds)


@dataclass(frozen=True)
class Witness:
    """Violation certificate; detail is enough to re-check by hand."""

    kind: str
    vertices: tuple
    detail: dict

    def to_document(self):
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "detail": self.detail,
        }


def family_to_document(f, k=None):
    doc = {"n": f.n, "rounds": [t.to_bitstring() for t in f.rounds]}
    if k is not None:
        doc["k"] = k
    return doc


def family_from_document(doc):
    if not isinstance(doc, dict) or "n" not in doc or "rounds" not in doc:
        raise ValueError("family document needs fields 'n' and 'rounds'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad vertex count: {n!r}")
    m = pair_count(n)
    rounds = []
    for s in doc["rounds"]:
        if len(s) != m:
            raise ValueError(f"bit string of length {len(s)}, expected C({n},2)={m}")
        rounds.append(Tournament.from_bitstring(n, s))
    return OrientationFamily(n, tuple(rounds))


def serialize(f, k=None):
    """Canonical text form of a family (bit-exact round trip)."""
    return json.dumps(family_to_document(f, k), sort_keys=True, indent=2) + "\n"


def deserialize(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed family document: {e}") from e
    return family_from_document(doc)

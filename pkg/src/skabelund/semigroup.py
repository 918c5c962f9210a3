"""General numerical-semigroup engine based on Apery sets.

A numerical semigroup is a subset of the naturals containing 0, closed
under addition, with finite complement.  Everything here is driven by the
Apery set: for each residue class modulo the multiplicity m (the smallest
positive element), the least semigroup element in that class.  The Apery
set is computed from a generating set as single-source shortest paths on
the residue graph Z/mZ, where each generator g contributes edges
r -> (r + g) mod m of weight g.  Membership, gaps, genus, conductor and
Frobenius number then follow by direct arithmetic:

    n in S          iff  n >= apery[n mod m]
    genus           =    sum(a // m for a in apery)
    conductor       =    1 + max(apery) - m
    frobenius       =    conductor - 1        (-1 when S is all of N)
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import EmptyInput, NonCoprime, Overflow

U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class GeneratorSet:
    """Strictly increasing positive integers with overall gcd 1."""

    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise EmptyInput("generator set is empty")
        if self.gens[0] < 1:
            raise ValueError(f"generators must be positive, got {self.gens[0]}")
        if any(a >= b for a, b in zip(self.gens, self.gens[1:])):
            raise ValueError("generators must be strictly increasing")
        if math.gcd(*self.gens) != 1:
            raise NonCoprime(f"gcd({', '.join(map(str, self.gens))}) != 1")


@dataclass(frozen=True)
class SemigroupProfile:
    """A numerical semigroup in Apery normal form.

    ``apery[r]`` is the least semigroup element congruent to r modulo the
    multiplicity; ``apery[0] == 0`` always.
    """

    multiplicity: int
    apery: tuple[int, ...]
    genus: int
    conductor: int
    frobenius: int

    @classmethod
    def from_apery(cls, apery: Iterable[int]) -> "SemigroupProfile":
        ap = tuple(apery)
        m = len(ap)
        genus = sum(a // m for a in ap)
        conductor = 1 + max(ap) - m
        return cls(m, ap, genus, conductor, conductor - 1)


@dataclass(frozen=True)
class SemigroupStats:
    """Summary numbers of a semigroup, detached from its Apery array."""

    multiplicity: int
    genus: int
    conductor: int
    frobenius: int
    symmetric: bool

    @classmethod
    def from_profile(cls, p: SemigroupProfile) -> "SemigroupStats":
        return cls(p.multiplicity, p.genus, p.conductor, p.frobenius, is_symmetric(p))


@dataclass(frozen=True)
class GapSet:
    """Sorted gap values, all below ``bound``.

    The complement of a valid gap set is cofinite and closed under
    addition; that closure is checked separately by
    :func:`verify_cofinite_complement`, not at construction time.
    """

    gaps: tuple[int, ...]
    bound: int

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.gaps, self.gaps[1:])):
            raise ValueError("gaps must be strictly increasing")
        if self.gaps:
            if self.gaps[0] < 1:
                raise ValueError("0 cannot be a gap")
            if self.gaps[-1] >= self.bound:
                raise ValueError("all gaps must lie below the bound")


def normalize_generators(raw: Iterable[int]) -> GeneratorSet:
    """Sort, deduplicate and validate a raw list of generators."""
    values = sorted(set(raw))
    if not values:
        raise EmptyInput("generator set is empty")
    if values[0] < 1:
        raise ValueError(f"generators must be positive, got {values[0]}")
    return GeneratorSet(tuple(values))


def profile_from_generators(gen_set: GeneratorSet) -> SemigroupProfile:
    """Compute the Apery set of <gens> by Dijkstra over residues mod min(gens).

    Runs in O(m * k * log m) for m = min(gens) and k generators, which keeps
    multiplicities in the tens of thousands comfortably fast; a naive sieve
    would need the full conductor window instead.
    """
    gens = gen_set.gens
    m = gens[0]
    if m == 1:
        return SemigroupProfile(1, (0,), 0, 0, -1)
    # Edges with g % m == 0 are self-loops in the residue graph and can
    # never improve a distance.
    steps = [g for g in gens if g % m != 0]
    dist: list[int | None] = [None] * m
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in steps:
            nd = d + g
            if nd > U64_MAX:
                raise Overflow(f"Apery element exceeds 64 bits at residue {r}")
            nr = nd % m
            cur = dist[nr]
            if cur is None or nd < cur:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    # gcd(gens) == 1 guarantees every residue class is reached.
    return SemigroupProfile.from_apery(dist)  # type: ignore[arg-type]


def contains(p: SemigroupProfile, n: int) -> bool:
    """Membership test: n belongs to the semigroup iff n >= apery[n mod m]."""
    if n < 0:
        return False
    return n >= p.apery[n % p.multiplicity]


def gaps_of(p: SemigroupProfile) -> GapSet:
    """All gaps of the semigroup; n is a gap iff n < apery[n mod m]."""
    m = p.multiplicity
    gaps = sorted(n for r, a in enumerate(p.apery) for n in range(r, a, m))
    return GapSet(tuple(gaps), p.conductor)


def is_symmetric(p: SemigroupProfile) -> bool:
    """True iff the conductor equals twice the genus."""
    return p.conductor == 2 * p.genus


def verify_cofinite_complement(gs: GapSet) -> bool:
    """Check that the complement of a gap set is closed under addition.

    Only sums x + y below ``gs.bound`` are examined; closure above the
    largest gap is automatic.  Implemented as bitset sweeps: one shift-and
    per positive complement element.
    """
    bound = gs.bound
    if bound <= 0:
        return True
    gap_bits = 0
    for v in gs.gaps:
        gap_bits |= 1 << v
    mask = (1 << bound) - 1
    comp = mask & ~gap_bits
    cur = comp >> 1  # positive elements only; x + 0 is trivially fine
    x = 1
    while cur:
        shift = (cur & -cur).bit_length() - 1
        x += shift
        cur >>= shift
        if (comp << x) & gap_bits:
            return False
        cur >>= 1
        x += 1
    return True


def minimal_generators(p: SemigroupProfile) -> tuple[int, ...]:
    """Minimal generating set: nonzero elements that are not a sum of two
    nonzero elements.

    Candidates all lie below conductor + multiplicity.  Decomposability is
    read off a sumset convolution of the membership indicator (FFT; counts
    are small integers, so a 0.5 threshold is exact for these sizes).
    """
    win = max(p.conductor + 2 * p.multiplicity, 2)
    n = np.arange(win, dtype=np.int64)
    apery = np.asarray(p.apery, dtype=np.int64)
    member = n >= apery[n % p.multiplicity]
    positive = member.copy()
    positive[0] = False
    nfft = 2 * win
    spectrum = np.fft.rfft(positive.astype(np.float64), nfft)
    counts = np.fft.irfft(spectrum * spectrum, nfft)[:win]
    decomposable = counts > 0.5
    return tuple(int(v) for v in n[positive & ~decomposable])

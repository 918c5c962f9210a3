"""The six gap families at generic points, and gap-witness search.

At a point outside the F_{q^4}-rational locus, the gap set of the
Weierstrass semigroup is the disjoint union of six parameterised families
F1..F6.  Each family value is nu + (family offset), where

    sigma = a1 + a2 + a3 + a4 + f
    nu    = a1 + a2*q0 + a3*2*q0 + a4*q + f*q^2

and the exponents range over a family-specific constraint block.  Where a
family fixes sigma, the exponent f is treated as the dependent variable
and tuples that would force f < 0 are skipped.

Every gap value v admits a witness: an exponent vector for a monomial in
the building-block functions (see :func:`skabelund.curve.pole_order_table`)
whose vanishing order at the point is v - 1 and whose total pole order at
infinity stays within 2g - 2.  Witnesses certify the value is a gap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from .curve import CurveParams, PoleOrderTable, pole_order_table
from .errors import (
    DuplicateGap,
    NonIntegerResult,
    NotClosed,
    NoWitness,
    Overflow,
    UnsupportedS,
)
from .semigroup import GapSet, SemigroupProfile, contains, verify_cofinite_complement


class FamilyId(Enum):
    F1 = 1
    F2 = 2
    F3 = 3
    F4 = 4
    F5 = 5
    F6 = 6


@dataclass(frozen=True, slots=True)
class FamilyParams:
    """Exponent tuple producing one family value.

    ``n`` is the family index used by F2/F3/F4/F6, ``c``/``d`` are the two
    extra exponents of F5; unused components are zero.  ``sigma`` and
    ``nu`` are stored redundantly and must match their defining sums.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    f: int
    n: int
    c: int
    d: int
    sigma: int
    nu: int

    def __post_init__(self) -> None:
        if min(self.a1, self.a2, self.a3, self.a4, self.f, self.n, self.c, self.d) < 0:
            raise ValueError("family parameters must be non-negative")
        if self.sigma != self.a1 + self.a2 + self.a3 + self.a4 + self.f:
            raise ValueError(f"stored sigma {self.sigma} disagrees with components")

    def nu_matches(self, p: CurveParams) -> bool:
        q0, q = p.q0, p.q
        return self.nu == self.a1 + self.a2 * q0 + self.a3 * 2 * q0 + self.a4 * q + self.f * q * q


@dataclass(frozen=True, slots=True)
class GapRecord:
    """One gap value together with the family and parameters producing it."""

    value: int
    family: FamilyId
    params: FamilyParams


def _params(p: CurveParams, a1: int, a2: int, a3: int, a4: int, f: int,
            n: int = 0, c: int = 0, d: int = 0) -> FamilyParams:
    q0, q = p.q0, p.q
    nu = a1 + a2 * q0 + a3 * 2 * q0 + a4 * q + f * q * q
    return FamilyParams(a1, a2, a3, a4, f, n, c, d, a1 + a2 + a3 + a4 + f, nu)


def family_value(p: CurveParams, fid: FamilyId, fp: FamilyParams) -> int:
    """Evaluate the displayed expression of a family at given parameters."""
    q0, q = p.q0, p.q
    nu = fp.nu
    n = fp.n
    if fid is FamilyId.F1:
        return nu + 1
    if fid is FamilyId.F2:
        return nu + (n + 1) * q0 * q + 1
    if fid is FamilyId.F3:
        return nu + (2 * n + 1) * q0 * q + n + 2
    if fid is FamilyId.F4:
        return nu + (2 * n + 2) * q0 * q + n + 3
    if fid is FamilyId.F5:
        return nu + fp.c * q0 * (q + 1) + fp.d * (2 * q * q0 + 2 * q0 + 1) + 1
    return nu + q0 + (2 * n + 2) * q0 * q + n + 2


# ---------------------------------------------------------------------------
# Enumeration.  Each _raw_* iterator yields (value, a1, a2, a3, a4, f, n, c, d)
# in a fixed lexicographic order of its loop variables, so output is
# deterministic; callers sort by value afterwards.

def _raw_f1(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    cap = q - 2
    for a1 in range(q0):
        for a2 in range(2):
            for a3 in range(q0):
                s3 = a1 + a2 + a3
                if s3 > cap:
                    continue
                base = a1 + a2 * q0 + a3 * 2 * q0 + 1
                for a4 in range(cap - s3 + 1):
                    v = base + a4 * q
                    for f in range(cap - s3 - a4 + 1):
                        yield (v + f * qq, a1, a2, a3, a4, f, 0, 0, 0)


def _raw_f2(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    for n in range(1, 2 * q0 - 1):
        sigma = q - q0 - 2 - n * q0 + n
        a4cap = q - q0 - 1 - n * q0
        offset = (n + 1) * q0 * q + 1
        for a1 in range(q0):
            for a2 in range(2):
                for a3 in range(q0):
                    s3 = a1 + a2 + a3
                    base = a1 + a2 * q0 + a3 * 2 * q0 + offset
                    for a4 in range(min(a4cap, sigma - s3) + 1):
                        f = sigma - s3 - a4
                        yield (base + a4 * q + f * qq, a1, a2, a3, a4, f, n, 0, 0)


def _raw_f3(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    for n in range(q0 - 1):
        sigma = q - q0 - 2 - 2 * n * q0 + n
        offset = (2 * n + 1) * q0 * q + n + 2
        for a1 in range(q0 - 1 - n):
            for a2 in range(2):
                for a3 in range(q0):
                    s3 = a1 + a2 + a3
                    base = a1 + a2 * q0 + a3 * 2 * q0 + offset
                    for a4 in range(min(q0 - 1, sigma - s3) + 1):
                        f = sigma - s3 - a4
                        yield (base + a4 * q + f * qq, a1, a2, a3, a4, f, n, 0, 0)


def _raw_f4(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    for n in range(q0 - 2):
        sigma = q - 2 * q0 - 2 - 2 * n * q0 + n
        offset = (2 * n + 2) * q0 * q + n + 3
        for a1 in range(q0 - 2 - n):
            for a2 in range(2):
                for a3 in range(q0):
                    s3 = a1 + a2 + a3
                    base = a1 + a2 * q0 + a3 * 2 * q0 + offset
                    for a4 in range(min(q0 - 1, sigma - s3) + 1):
                        f = sigma - s3 - a4
                        yield (base + a4 * q + f * qq, a1, a2, a3, a4, f, n, 0, 0)


def _raw_f5(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    for c in (0, 1):
        for d in range(1 - c, q0):
            sigma = q - 2 - 2 * d * q0 - c * q0
            offset = c * q0 * (q + 1) + d * (2 * q * q0 + 2 * q0 + 1) + 1
            for a2 in range(2 - c):
                for a3 in range(q0 - d):
                    s3 = a2 + a3
                    base = a2 * q0 + a3 * 2 * q0 + offset
                    for a4 in range(min(q0 - 1, sigma - s3) + 1):
                        f = sigma - s3 - a4
                        yield (base + a4 * q + f * qq, 0, a2, a3, a4, f, 0, c, d)


def _raw_f6(p: CurveParams) -> Iterator[tuple[int, ...]]:
    q0, q = p.q0, p.q
    qq = q * q
    for n in range(q0 - 1):
        sigma = q - 2 * q0 - 2 - 2 * n * q0 + n
        offset = q0 + (2 * n + 2) * q0 * q + n + 2
        for a3 in range(n + 1):
            base = a3 * 2 * q0 + offset
            for a4 in range(min(q0 - 1, sigma - a3) + 1):
                f = sigma - a3 - a4
                yield (base + a4 * q + f * qq, 0, 0, a3, a4, f, n, 0, 0)


_RAW_ITERS = {
    FamilyId.F1: _raw_f1,
    FamilyId.F2: _raw_f2,
    FamilyId.F3: _raw_f3,
    FamilyId.F4: _raw_f4,
    FamilyId.F5: _raw_f5,
    FamilyId.F6: _raw_f6,
}


def iter_family_records(p: CurveParams, fid: FamilyId) -> Iterator[GapRecord]:
    """Lazily yield the records of one family in loop order."""
    for v, a1, a2, a3, a4, f, n, c, d in _RAW_ITERS[fid](p):
        yield GapRecord(v, fid, _params(p, a1, a2, a3, a4, f, n, c, d))


def enumerate_family(p: CurveParams, fid: FamilyId) -> list[GapRecord]:
    """All records of one family, sorted by value."""
    records = list(iter_family_records(p, fid))
    records.sort(key=lambda r: r.value)
    return records


class _GapBitset:
    """Duplicate-detecting bitset over [0, 2g)."""

    def __init__(self, p: CurveParams) -> None:
        self.limit = 2 * p.genus
        self.bits = bytearray((self.limit + 7) >> 3)
        self.count = 0

    def insert(self, v: int) -> None:
        if not 1 <= v < self.limit:
            raise RuntimeError(f"gap value {v} outside [1, {self.limit})")
        byte, bit = v >> 3, 1 << (v & 7)
        if self.bits[byte] & bit:
            raise DuplicateGap(f"value {v} produced twice")
        self.bits[byte] |= bit
        self.count += 1

    def sorted_values(self) -> tuple[int, ...]:
        arr = np.unpackbits(np.frombuffer(bytes(self.bits), dtype=np.uint8),
                            bitorder="little")[: self.limit]
        return tuple(int(v) for v in np.nonzero(arr)[0])


def iter_family_values(p: CurveParams, fid: FamilyId) -> Iterator[int]:
    """Lazily yield the values of one family, without parameter records."""
    for row in _RAW_ITERS[fid](p):
        yield row[0]


def enumerate_values(p: CurveParams, threads: int = 1) -> tuple[GapSet, dict[FamilyId, int]]:
    """Stream all six families into a bitset without retaining records.

    Returns the combined gap set (bound 2g) and the per-family counts.
    Raises DuplicateGap on any collision, within or across families.
    The families are independent, so with ``threads > 1`` they are
    enumerated concurrently; the merge is a fixed-order insertion either
    way, so the result is identical.
    """
    bitset = _GapBitset(p)
    counts: dict[FamilyId, int] = {}
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        order = list(FamilyId)
        with ThreadPoolExecutor(max_workers=min(threads, len(order))) as pool:
            value_lists = list(pool.map(lambda fid: list(iter_family_values(p, fid)), order))
        for fid, values in zip(order, value_lists):
            for v in values:
                bitset.insert(v)
            counts[fid] = len(values)
    else:
        for fid in FamilyId:
            before = bitset.count
            for v in iter_family_values(p, fid):
                bitset.insert(v)
            counts[fid] = bitset.count - before
    return GapSet(bitset.sorted_values(), bitset.limit), counts


def enumerate_all(p: CurveParams) -> tuple[GapSet, list[GapRecord]]:
    """Union of the six families with full records, sorted by value."""
    bitset = _GapBitset(p)
    records: list[GapRecord] = []
    for fid in FamilyId:
        for rec in iter_family_records(p, fid):
            bitset.insert(rec.value)
            records.append(rec)
    records.sort(key=lambda r: r.value)
    return GapSet(tuple(r.value for r in records), bitset.limit), records


def count_family(p: CurveParams, fid: FamilyId) -> int:
    """Family cardinality with the two innermost loops collapsed.

    Counts (a4, f) pairs arithmetically instead of enumerating them, so
    this stays fast even where full enumeration is impractical.
    """
    q0, q = p.q0, p.q

    def pairs(budget: int) -> int:
        # number of (a4, f) with a4, f >= 0 and a4 + f <= budget
        return (budget + 1) * (budget + 2) // 2 if budget >= 0 else 0

    def capped(budget: int, a4cap: int) -> int:
        # number of a4 in [0, a4cap] with budget - a4 >= 0
        return min(a4cap, budget) + 1 if budget >= 0 and a4cap >= 0 else 0

    total = 0
    if fid is FamilyId.F1:
        for a1 in range(q0):
            for a2 in range(2):
                for a3 in range(q0):
                    total += pairs(q - 2 - a1 - a2 - a3)
    elif fid is FamilyId.F2:
        for n in range(1, 2 * q0 - 1):
            sigma = q - q0 - 2 - n * q0 + n
            a4cap = q - q0 - 1 - n * q0
            for a1 in range(q0):
                for a2 in range(2):
                    for a3 in range(q0):
                        total += capped(sigma - a1 - a2 - a3, a4cap)
    elif fid is FamilyId.F3:
        for n in range(q0 - 1):
            sigma = q - q0 - 2 - 2 * n * q0 + n
            for a1 in range(q0 - 1 - n):
                for a2 in range(2):
                    for a3 in range(q0):
                        total += capped(sigma - a1 - a2 - a3, q0 - 1)
    elif fid is FamilyId.F4:
        for n in range(q0 - 2):
            sigma = q - 2 * q0 - 2 - 2 * n * q0 + n
            for a1 in range(q0 - 2 - n):
                for a2 in range(2):
                    for a3 in range(q0):
                        total += capped(sigma - a1 - a2 - a3, q0 - 1)
    elif fid is FamilyId.F5:
        for c in (0, 1):
            for d in range(1 - c, q0):
                sigma = q - 2 - 2 * d * q0 - c * q0
                for a2 in range(2 - c):
                    for a3 in range(q0 - d):
                        total += capped(sigma - a2 - a3, q0 - 1)
    else:
        for n in range(q0 - 1):
            sigma = q - 2 * q0 - 2 - 2 * n * q0 + n
            for a3 in range(n + 1):
                total += capped(sigma - a3, q0 - 1)
    return total


def family_count_closed_form(p: CurveParams, fid: FamilyId) -> int:
    """Closed-form family cardinality as a polynomial in q and q0.

    The fractional coefficients are handled in exact integer arithmetic:
    each numerator (scaled by 24) must divide out evenly, anything else
    signals a transcription error.  F5 is the sum of its c = 0 and c = 1
    sub-counts, checked separately.
    """
    q0, q = p.q0, p.q
    if fid is FamilyId.F5:
        return _div24(12 * q * q0 - 12 * q) + _div24(6 * q * q0 + 6 * q - 24)
    numerators = {
        FamilyId.F1: 12 * q**3 - 24 * q * q * q0 + 7 * q * q - 2 * q,
        FamilyId.F2: 24 * q * q * q0 - 43 * q * q + 24 * q * q0 + 2 * q + 24,
        FamilyId.F3: 6 * q * q - 12 * q * q0,
        FamilyId.F4: 6 * q * q - 36 * q * q0 + 24 * q,
        FamilyId.F6: 6 * q * q0 - 6 * q,
    }
    return _div24(numerators[fid])


def _div24(numerator: int) -> int:
    if numerator % 24:
        raise NonIntegerResult(f"24 does not divide {numerator}")
    return numerator // 24


def binom_sum_check(n: int) -> bool:
    """Exact check of sum_{s=0}^{n} C(s+4, 4) == C(n+5, 5)."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n > 10_000:
        raise Overflow("binomial sum check capped at n = 10^4")
    return sum(comb(sig + 4, 4) for sig in range(n + 1)) == comb(n + 5, 5)


_CLOSURE_SAMPLES = 100_000


def generic_semigroup(p: CurveParams, closure: str = "auto",
                      rng_seed: int = 0) -> SemigroupProfile:
    """The semigroup at a generic point: complement of the six families.

    Builds the complement bitset over [0, 2g), extracts the Apery set, and
    verifies additive closure.  ``closure`` is "full" (every pair below
    twice the conductor), "sampled" (random pairs), or "auto": full for
    s <= 2, sampled at s = 3 where the window is ~2 * 10^6 and pairwise
    checking stops being a sane default.
    """
    if p.s > 3:
        raise UnsupportedS("generic-point enumeration is supported for s <= 3")
    if closure not in ("auto", "full", "sampled"):
        raise ValueError(f"unknown closure mode {closure!r}")
    if closure == "auto":
        closure = "full" if p.s <= 2 else "sampled"
    gap_set, _ = enumerate_values(p)
    two_g = 2 * p.genus

    member = np.ones(two_g, dtype=bool)
    gaps = np.asarray(gap_set.gaps, dtype=np.int64)
    member[gaps] = False
    m = int(np.nonzero(member[1:])[0][0]) + 1

    n = np.arange(two_g + m, dtype=np.int64)
    mem_ext = np.concatenate([member, np.ones(m, dtype=bool)])
    cand = n[mem_ext]
    res = cand % m
    _, first = np.unique(res, return_index=True)  # residues sorted 0..m-1
    profile = SemigroupProfile.from_apery(int(v) for v in cand[first])

    if profile.genus != p.genus:
        raise RuntimeError(
            f"complement profile has genus {profile.genus}, expected {p.genus}"
        )
    if closure == "full":
        window = GapSet(gap_set.gaps, 2 * profile.conductor)
        if not verify_cofinite_complement(window):
            raise NotClosed("complement fails pairwise additive closure")
    else:
        rng = random.Random(rng_seed)
        for _ in range(_CLOSURE_SAMPLES):
            x = rng.randrange(profile.conductor)
            y = rng.randrange(profile.conductor)
            if contains(profile, x) and contains(profile, y):
                if not contains(profile, x + y):
                    raise NotClosed(f"{x} + {y} = {x + y} left the complement")
    return profile


# ---------------------------------------------------------------------------
# Witness search.

@dataclass(frozen=True, slots=True)
class WitnessVector:
    """Exponents of a gap-witness monomial.

    ``b[n-1]`` is the exponent of h_n (n = 1..2q0-2) and ``e[n]`` the
    exponent of g_n (n = 0..q0-2); the scalar fields follow the building
    blocks x, y, z, w, f1, f2, pi in that order.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    f: int
    b: tuple[int, ...]
    c: int
    d: int
    e: tuple[int, ...]


def _axis(table: PoleOrderTable, w: WitnessVector, which: int) -> int:
    total = 0
    for exp, entry in (
        (w.a1, table.x), (w.a2, table.y), (w.a3, table.z), (w.a4, table.w),
        (w.c, table.f1), (w.d, table.f2), (w.f, table.pi),
    ):
        total += exp * entry[which]
    total += sum(exp * entry[which] for exp, entry in zip(w.b, table.h))
    total += sum(exp * entry[which] for exp, entry in zip(w.e, table.g))
    return total


def witness_valuation(p: CurveParams, w: WitnessVector) -> int:
    """Vanishing order at the point of the witness monomial."""
    return _axis(pole_order_table(p), w, 0)


def witness_pole_cost(p: CurveParams, w: WitnessVector) -> int:
    """Pole order at infinity of the witness monomial (upper bound)."""
    return _axis(pole_order_table(p), w, 1)


@lru_cache(maxsize=None)
def _witness_items(p: CurveParams) -> tuple[tuple[int, int, object], ...]:
    """Building blocks as (valuation, pole, slot), sorted by valuation
    descending so the search tries the big strides first."""
    t = pole_order_table(p)
    items: list[tuple[int, int, object]] = [
        (*t.pi, "f"), (*t.w, "a4"), (*t.z, "a3"), (*t.y, "a2"), (*t.x, "a1"),
        (*t.f1, "c"), (*t.f2, "d"),
    ]
    items.extend((*entry, ("b", n)) for n, entry in enumerate(t.h, start=1))
    items.extend((*entry, ("e", n)) for n, entry in enumerate(t.g))
    items.sort(key=lambda it: -it[0])
    return tuple(items)


def _vector_from_slots(p: CurveParams, slots: dict) -> WitnessVector:
    b = [0] * (2 * p.q0 - 2)
    e = [0] * (p.q0 - 1)
    scalars = {"a1": 0, "a2": 0, "a3": 0, "a4": 0, "f": 0, "c": 0, "d": 0}
    for slot, exp in slots.items():
        if isinstance(slot, tuple):
            kind, n = slot
            if kind == "b":
                b[n - 1] = exp
            else:
                e[n] = exp
        else:
            scalars[slot] = exp
    return WitnessVector(
        scalars["a1"], scalars["a2"], scalars["a3"], scalars["a4"], scalars["f"],
        tuple(b), scalars["c"], scalars["d"], tuple(e),
    )


def _family_seed(p: CurveParams, record: GapRecord) -> WitnessVector:
    """Read a witness straight off the family parameters.

    The F1/F2/F3/F5 offsets each match one building block (nothing, h_n,
    g_n, f1^c * f2^d).  The remaining two offsets are products: for F4,
    g_0 * g_n supplies (2n+2)q0q + n + 2, and for F6, f1 * g_n supplies
    (2n+2)q0q + q0 + n + 1.  In every case the pole weight comes to q - 2
    at most, so the pole bound holds automatically.
    """
    fp = record.params
    b = [0] * (2 * p.q0 - 2)
    e = [0] * (p.q0 - 1)
    c = d = 0
    if record.family is FamilyId.F2:
        b[fp.n - 1] = 1
    elif record.family is FamilyId.F3:
        e[fp.n] = 1
    elif record.family is FamilyId.F4:
        e[0] += 1
        e[fp.n] += 1
    elif record.family is FamilyId.F5:
        c, d = fp.c, fp.d
    elif record.family is FamilyId.F6:
        c = 1
        e[fp.n] += 1
    return WitnessVector(fp.a1, fp.a2, fp.a3, fp.a4, fp.f, tuple(b), c, d, tuple(e))


def gap_witness(p: CurveParams, record: GapRecord) -> WitnessVector:
    """Find an exponent vector with valuation value - 1 and pole cost
    within 2g - 2.

    The family seed is tried first and is expected to succeed for every
    record; as a fallback, a depth-first search over the building blocks
    runs with exponents bounded by the remaining valuation and pruned
    against the best possible pole/valuation ratio (the ratio of the
    degree-q^2 block).  Exhaustion raises NoWitness, which would
    contradict the gap property.
    """
    target = record.value - 1
    budget = p.two_g_minus_2
    seed = _family_seed(p, record)
    if witness_valuation(p, seed) == target and witness_pole_cost(p, seed) <= budget:
        return seed

    items = _witness_items(p)
    q2 = p.q * p.q
    chosen: dict = {}

    def search(idx: int, remaining: int, pole: int) -> bool:
        if remaining == 0:
            return pole <= budget
        if idx == len(items):
            return False
        val, cost, slot = items[idx]
        for exp in range(remaining // val, -1, -1):
            rest = remaining - exp * val
            spent = pole + exp * cost
            # any completion costs at least (q^2+1)/q^2 per unit of valuation
            if spent * q2 + rest * (q2 + 1) > budget * q2:
                continue
            if exp:
                chosen[slot] = exp
            elif slot in chosen:
                del chosen[slot]
            if search(idx + 1, rest, spent):
                return True
        chosen.pop(slot, None)
        return False

    if not search(0, target, 0):
        raise NoWitness(f"no witness for value {record.value} within pole budget {budget}")
    return _vector_from_slots(p, chosen)

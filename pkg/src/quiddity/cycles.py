"""Quiddity cycles up to dihedral equivalence.

A quiddity cycle is the cyclic sequence of triangle counts at the
vertices of a triangulated convex polygon.  The set of all of them is
generated from the base cycle (0,0) by ear insertion: put a 1 between two
cyclically adjacent entries and increment both.  This module provides the
canonical form under rotation/reversal, the 2x2 integer matrix invariant,
a membership test by ear reduction, exhaustive enumeration per length,
and the cyclic/linear containment tests used by the cover machinery.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, NamedTuple

from . import kernels

Pattern = tuple[int, ...]

#: When set (QUIDDITY_SELF_CHECK=1), every positive membership result is
#: cross-checked against the matrix-product invariant.
_SELF_CHECK = os.environ.get("QUIDDITY_SELF_CHECK") == "1"

#: Largest cycle length ``enumerate_cycles`` accepts by default; the class
#: counts grow roughly by x3.4 per step, so this is a memory guard, not a
#: hard algorithmic limit.
DEFAULT_MAX_LENGTH = 24


def as_pattern(entries: Iterable[int]) -> Pattern:
    """Validate and freeze a finite sequence of non-negative integers."""
    seq = tuple(entries)
    if len(seq) < 1:
        raise ValueError("pattern must have length >= 1")
    for e in seq:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"pattern entries must be integers >= 0, got {e!r}")
    return seq


class DihedralCycle:
    """An equivalence class of integer cycles under rotation and reversal,
    stored as its lexicographically least representative.

    Two instances are equal iff their canonical representatives are equal.
    Instances are immutable and hashable.
    """

    __slots__ = ("_canon",)

    def __init__(self, entries: Iterable[int]):
        seq = as_pattern(entries)
        if len(seq) < 2:
            raise ValueError("a cycle needs length >= 2")
        self._canon = kernels.canonical_form(seq)

    @property
    def canon(self) -> Pattern:
        return self._canon

    def __len__(self) -> int:
        return len(self._canon)

    def __iter__(self) -> Iterator[int]:
        return iter(self._canon)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DihedralCycle) and self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def __lt__(self, other: "DihedralCycle") -> bool:
        return (len(self._canon), self._canon) < (len(other._canon), other._canon)

    def __repr__(self) -> str:
        return f"DihedralCycle({list(self._canon)!r})"

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self._canon)) + ">"

    def representatives(self) -> list[Pattern]:
        """All distinct linear representatives (rotations of the canonical
        word and of its reversal; at most 2n)."""
        n = len(self._canon)
        out = []
        seen = set()
        for base in (self._canon, self._canon[::-1]):
            d = base + base
            for i in range(n):
                r = d[i : i + n]
                if r not in seen:
                    seen.add(r)
                    out.append(r)
        return out

    def to_json(self) -> list[int]:
        return list(self._canon)


def canonicalize(raw: Iterable[int]) -> DihedralCycle:
    """The dihedral class of ``raw``; idempotent on canonical input."""
    return raw if isinstance(raw, DihedralCycle) else DihedralCycle(raw)


class EtaMatrix(NamedTuple):
    """2x2 integer matrix; products of the ear generators all have det 1."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "EtaMatrix") -> "EtaMatrix":
        return EtaMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))


IDENTITY = EtaMatrix(1, 0, 0, 1)
MINUS_IDENTITY = EtaMatrix(-1, 0, 0, -1)


def eta(a: int) -> EtaMatrix:
    """The generator ((a, -1), (1, 0))."""
    return EtaMatrix(a, -1, 1, 0)


def eta_product(seq: Iterable[int]) -> EtaMatrix:
    """Left-to-right product of ``eta`` over the entries.  Every quiddity
    cycle multiplies to minus the identity."""
    m = IDENTITY
    for a in seq:
        m = m @ eta(a)
    return m


def xi(a: int) -> EtaMatrix:
    """eta(a) @ eta(1); satisfies xi(a) xi(3) xi(b) = xi(a-1) xi(b-1)."""
    return eta(a) @ eta(1)


def _is_quiddity_canon(canon: Pattern) -> bool:
    """Ear reduction on a canonical tuple.

    Remove any entry equal to 1 and decrement its two cyclic neighbours;
    a cycle is a quiddity cycle iff this terminates at (0,0).  The choice
    of ear does not matter for members (removing an ear of a triangulated
    polygon leaves a triangulated polygon), and any successful reduction
    path certifies membership because each step reversed is an ear
    insertion, so a deterministic first-ear scan decides membership.
    """
    s = list(canon)
    while True:
        n = len(s)
        if n == 2:
            return s[0] == 0 and s[1] == 0
        if 0 in s:
            return False
        try:
            i = s.index(1)
        except ValueError:
            return False
        s[i - 1] -= 1
        s[(i + 1) % n] -= 1
        del s[i]


def is_quiddity(c: DihedralCycle | Iterable[int]) -> bool:
    """True iff ``c`` is (the class of) a quiddity cycle."""
    cyc = canonicalize(c)
    ok = _is_quiddity_canon(cyc.canon)
    if _SELF_CHECK and ok:
        assert eta_product(cyc.canon) == MINUS_IDENTITY, cyc
    return ok


def ear_insert(c: DihedralCycle | Iterable[int], position: int) -> DihedralCycle:
    """Insert a 1 between positions ``position`` and ``position + 1`` of
    the canonical representative (cyclically) and increment both
    neighbours.  The input must be a quiddity cycle; the result is one of
    length n + 1."""
    cyc = canonicalize(c)
    if not is_quiddity(cyc):
        raise ValueError(f"not a quiddity cycle: {cyc}")
    rep = cyc.canon
    n = len(rep)
    i = position % n
    if i < n - 1:
        cand = rep[:i] + (rep[i] + 1, 1, rep[i + 1] + 1) + rep[i + 2 :]
    else:
        cand = (rep[0] + 1,) + rep[1 : n - 1] + (rep[n - 1] + 1, 1)
    return DihedralCycle(cand)


_levels: dict[int, frozenset[Pattern]] = {2: frozenset({(0, 0)})}
_level_cycles: dict[int, frozenset[DihedralCycle]] = {}


def _canon_level(n: int) -> frozenset[Pattern]:
    """Canonical tuples of all quiddity classes of length ``n`` (memoized)."""
    for k in range(3, n + 1):
        if k in _levels:
            continue
        cur: set[Pattern] = set()
        for rep in _levels[k - 1]:
            cur.update(kernels.insert_fanout(rep))
        _levels[k] = frozenset(cur)
    return _levels[n]


def enumerate_cycles(n: int, *, limit: int | None = None) -> frozenset[DihedralCycle]:
    """All dihedral classes of quiddity cycles of length ``n``.

    Built length by length from (0,0) by ear insertion at every cyclic
    position, canonicalized and deduplicated.  Results are memoized per
    length, so repeated and incremental calls are cheap.
    """
    bound = DEFAULT_MAX_LENGTH if limit is None else limit
    if n < 2:
        raise ValueError("cycle length starts at 2")
    if n > bound:
        raise ValueError(f"length {n} exceeds the enumeration bound {bound}")
    if n not in _level_cycles:
        _level_cycles[n] = frozenset(
            DihedralCycle(t) for t in _canon_level(n)
        )
    return _level_cycles[n]


def contains_cyclic(c: DihedralCycle | Iterable[int], d: Iterable[int]) -> bool:
    """True iff some representative of ``c`` (any rotation, either
    direction) has ``d`` as a consecutive subsequence."""
    cyc = canonicalize(c)
    return kernels.cyclic_contains(cyc.canon, as_pattern(d))


def contains_linear(seq: Iterable[int], d: Iterable[int]) -> bool:
    """Consecutive-subsequence test on a linear sequence: no wraparound,
    given orientation only."""
    return kernels.linear_contains(as_pattern(seq), as_pattern(d))

"""Local descriptions of quiddity cycles.

The central object is a cover pair (E, F): a finite exceptional set E of
cycles plus a finite set F of linear patterns such that every quiddity
cycle outside E strictly contains some pattern of F.  ``theorem_step``
refines a cover pair into one whose patterns are strictly longer, via the
ear-doubling bijection and two rewriting systems:

* ``rho`` rewrites a linear sequence until no two adjacent entries exceed
  1 and both ends are 1 (splitting adjacent big pairs with an inserted 1,
  padding the ends);
* ``delta`` is the cyclic analogue on dihedral classes.

Preimage sets under both maps are computed by breadth-first reverse
rewriting with a forward check on every candidate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .cycles import (
    DihedralCycle,
    Pattern,
    as_pattern,
    canonicalize,
    contains_cyclic,
    contains_linear,
    enumerate_cycles,
    is_quiddity,
)

ZERO_ZERO = DihedralCycle((0, 0))
TRIANGLE = DihedralCycle((1, 1, 1))

#: The 27 length-4 patterns: every quiddity cycle outside the three
#: exceptional classes below strictly contains one of them (cyclically,
#: either direction).
QUADRUPLE_PATTERNS: tuple[Pattern, ...] = (
    (1, 2, 2, 1), (1, 2, 2, 2), (1, 2, 2, 3), (1, 2, 2, 4), (1, 2, 3, 1),
    (1, 2, 3, 2), (1, 2, 3, 3), (1, 2, 4, 1), (1, 2, 4, 3), (1, 2, 5, 1),
    (1, 2, 5, 2), (1, 2, 6, 1), (1, 3, 1, 3), (1, 3, 1, 4), (1, 3, 1, 5),
    (1, 3, 1, 6), (1, 3, 4, 1), (1, 4, 1, 2), (1, 5, 1, 2), (1, 6, 1, 2),
    (1, 7, 1, 2), (2, 1, 3, 2), (2, 1, 3, 3), (2, 2, 1, 4), (2, 2, 1, 5),
    (3, 1, 2, 3), (3, 1, 2, 4),
)

#: Exceptional linear representatives for the interior-subsequence
#: theorem: any other representative of any quiddity cycle has one of the
#: nine patterns below inside positions 2..n-1 (forward or reversed).
EXCEPTIONAL_REPRESENTATIVES: tuple[Pattern, ...] = (
    (0, 0), (1, 1, 1), (1, 2, 1, 2), (2, 1, 2, 1), (2, 1, 3, 1, 2),
)

NINE_PATTERNS: tuple[Pattern, ...] = (
    (1, 2, 2), (1, 2, 3), (1, 2, 4),
    (2, 1, 3), (2, 1, 4), (2, 1, 5),
    (3, 1, 4), (3, 1, 5), (1, 3, 1, 3),
)

#: Twelve-pattern cover obtained by refining the trivial cover twice and
#: pruning reversal duplicates; exceptional set {(0,0),(1,1,1),(1,2,1,2)}.
TWELVE_PATTERNS: tuple[Pattern, ...] = (
    (1, 2, 2), (1, 2, 3, 1), (1, 2, 3, 2, 1), (1, 2, 4, 1, 2),
    (1, 2, 4, 1, 3, 1), (1, 3, 1, 3), (1, 3, 1, 4, 1), (1, 3, 1, 5, 1, 2),
    (1, 3, 1, 5, 1, 3, 1), (1, 4, 1, 2), (2, 1, 3), (2, 1, 5, 1, 2),
)


@dataclass(frozen=True)
class CoverPair:
    """A finite exceptional-cycle set E and finite pattern set F."""

    E: frozenset[DihedralCycle]
    F: frozenset[Pattern]

    @classmethod
    def of(cls, E: Iterable, F: Iterable[Iterable[int]]) -> "CoverPair":
        return cls(
            frozenset(canonicalize(e) for e in E),
            frozenset(as_pattern(f) for f in F),
        )

    def sorted_e(self) -> list[DihedralCycle]:
        return sorted(self.E)

    def sorted_f(self) -> list[Pattern]:
        return sorted(self.F, key=lambda f: (len(f), f))

    def check_properties(self) -> None:
        """Raise unless (0,0),(1,1,1) are in E and every f in F has a 1."""
        if ZERO_ZERO not in self.E or TRIANGLE not in self.E:
            raise ValueError("E must contain <0,0> and <1,1,1>")
        for f in self.F:
            if 1 not in f:
                raise ValueError(f"every pattern in F must contain a 1: {f}")

    def to_json(self) -> dict:
        return {
            "E": [list(e.canon) for e in self.sorted_e()],
            "F": [list(f) for f in self.sorted_f()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoverPair":
        return cls.of(data["E"], data["F"])


#: (E, F) seeds addressable from the CLI as builtin:<name>.
def _builtin_pairs() -> dict[str, CoverPair]:
    return {
        # minimal seed: every quiddity cycle beyond <0,0> has an ear
        "base": CoverPair.of([(0, 0), (1, 1, 1)], [(1,)]),
        # 27 quadruples with the three short exceptional classes
        "cor12": CoverPair.of(
            [(0, 0), (1, 1, 1), (1, 2, 1, 2)], QUADRUPLE_PATTERNS
        ),
        # every quiddity cycle contains (0,0), (1,1), (1,2) or (1,3);
        # only <0,0> contains its witness non-strictly, so it sits in E
        "ends": CoverPair.of([(0, 0)], [(0, 0), (1, 1), (1, 2), (1, 3)]),
        # nine interior patterns, with the exceptional representatives
        # collapsed to their dihedral classes
        "thm16": CoverPair.of(
            [(0, 0), (1, 1, 1), (1, 2, 1, 2), (2, 1, 3, 1, 2)], NINE_PATTERNS
        ),
        # twelve-pattern refinement with the three-class exceptional set
        "thm16proof": CoverPair.of(
            [(0, 0), (1, 1, 1), (1, 2, 1, 2)], TWELVE_PATTERNS
        ),
    }


BUILTIN_PAIRS = _builtin_pairs()


# ---------------------------------------------------------------------------
# rewriting maps


def psi(seq: Iterable[int]) -> Pattern:
    """Interleave: each entry + 2 followed by a 1; doubles the length."""
    out: list[int] = []
    for c in as_pattern(seq):
        out.append(c + 2)
        out.append(1)
    return tuple(out)


def psi_bar(c: DihedralCycle | Iterable[int]) -> DihedralCycle:
    """Ear doubling on classes: psi applied cyclically.  Bijection from
    quiddity cycles onto those of even length with exactly half the
    entries equal to 1."""
    cyc = canonicalize(c)
    if not is_quiddity(cyc):
        raise ValueError(f"not a quiddity cycle: {cyc}")
    return DihedralCycle(psi(cyc.canon))


def in_a_prime(c: DihedralCycle) -> bool:
    """Even length, exactly half the entries equal to 1, and a quiddity
    cycle: the image of ``psi_bar``."""
    n = len(c)
    return n % 2 == 0 and sum(1 for e in c.canon if e == 1) * 2 == n and is_quiddity(c)


def psi_bar_inv(c: DihedralCycle | Iterable[int]) -> DihedralCycle:
    """Inverse of ``psi_bar``: remove all ears at once (drop the 1s,
    subtract 2 from the survivors)."""
    cyc = canonicalize(c)
    if not in_a_prime(cyc):
        raise ValueError(f"not in the ear-doubled image: {cyc}")
    for rep in cyc.representatives():
        if all(rep[i] == 1 for i in range(1, len(rep), 2)) and all(
            rep[i] >= 2 for i in range(0, len(rep), 2)
        ):
            return DihedralCycle(tuple(rep[i] - 2 for i in range(0, len(rep), 2)))
    raise ValueError(f"no alternating representative found: {cyc}")


def iota(seq: Iterable[int]) -> Pattern:
    """Prepend a 1 to an alternating (value, 1, value, 1, ...) sequence
    as produced by ``psi``."""
    s = as_pattern(seq)
    if len(s) % 2 != 0 or any(s[i] != 1 for i in range(1, len(s), 2)) or any(
        s[i] == 1 for i in range(0, len(s), 2)
    ):
        raise ValueError(f"malformed alternation: {s}")
    return (1,) + s


def rho(seq: Iterable[int]) -> Pattern:
    """Normal form of a linear sequence under three rewriting rules:
    pad a first entry > 1 with a leading 1 (incrementing it), split the
    leftmost adjacent pair with both entries > 1 by an inserted 1
    (incrementing both), pad a last entry > 1 with a trailing 1.

    Rules are applied with that priority at the leftmost position, which
    makes the function deterministic; order-independence is a tested
    property, not an assumption.
    """
    s = list(as_pattern(seq))
    while True:
        if s[0] > 1:
            s[0:1] = [1, s[0] + 1]
            continue
        for i in range(len(s) - 1):
            if s[i] > 1 and s[i + 1] > 1:
                s[i : i + 2] = [s[i] + 1, 1, s[i + 1] + 1]
                break
        else:
            if s[-1] > 1:
                s[-1:] = [s[-1] + 1, 1]
                continue
            return tuple(s)


def rho_preimages(target: Iterable[int]) -> frozenset[Pattern]:
    """All sequences whose ``rho`` normal form is ``target``.

    Breadth-first reverse rewriting: collapse (x,1,y) with x,y >= 3 to
    (x-1,y-1), strip a leading (1,x) with x >= 3 to (x-1), strip a
    trailing (x,1) with x >= 3 to (x-1).  Every reverse step shortens the
    sequence, so the search is finite; every candidate is confirmed by a
    forward ``rho`` call.
    """
    t = as_pattern(target)
    if rho(t) != t:
        raise ValueError(f"target is not a rho normal form: {t}")
    seen = {t}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        preds: list[Pattern] = []
        for i in range(len(s) - 2):
            if s[i] >= 3 and s[i + 1] == 1 and s[i + 2] >= 3:
                preds.append(s[:i] + (s[i] - 1, s[i + 2] - 1) + s[i + 3 :])
        if len(s) >= 2 and s[0] == 1 and s[1] >= 3:
            preds.append((s[1] - 1,) + s[2:])
        if len(s) >= 2 and s[-1] == 1 and s[-2] >= 3:
            preds.append(s[:-2] + (s[-2] - 1,))
        for p in preds:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return frozenset(s for s in seen if rho(s) == t)


_DELTA_EXCLUDED = frozenset({ZERO_ZERO, TRIANGLE})


def delta(c: DihedralCycle | Iterable[int]) -> DihedralCycle:
    """Cyclic normal form: split every cyclically adjacent pair with both
    entries > 1 by an inserted 1 until none remains.  Works on the
    canonical representative, leftmost split first, then the wraparound
    pair.  Not defined on <0,0> and <1,1,1>."""
    cyc = canonicalize(c)
    if cyc in _DELTA_EXCLUDED:
        raise ValueError(f"delta is not defined on {cyc}")
    s = list(cyc.canon)
    while True:
        for i in range(len(s) - 1):
            if s[i] > 1 and s[i + 1] > 1:
                s[i : i + 2] = [s[i] + 1, 1, s[i + 1] + 1]
                break
        else:
            if s[0] > 1 and s[-1] > 1:
                s = [s[0] + 1] + s[1:-1] + [s[-1] + 1, 1]
                continue
            return DihedralCycle(s)


def delta_preimages(target: DihedralCycle | Iterable[int]) -> frozenset[DihedralCycle]:
    """All classes in the domain of ``delta`` that normalize to ``target``.

    Reverse rewriting collapses any cyclic window (x,1,y) with x,y >= 3 to
    (x-1,y-1); windows may wrap, which also inverts the boundary rule.
    Candidates are confirmed by a forward ``delta`` call.
    """
    tgt = canonicalize(target)
    if not in_a_prime(tgt):
        raise ValueError(f"target not in the ear-doubled image: {tgt}")
    seen = {tgt.canon}
    queue = deque([tgt.canon])
    while queue:
        s = queue.popleft()
        n = len(s)
        if n < 3:
            continue
        for i in range(n):
            if s[i] == 1 and s[i - 1] >= 3 and s[(i + 1) % n] >= 3:
                rest = [s[(i + 1 + j) % n] for j in range(n - 1)]
                rest[0] -= 1
                rest[-1] -= 1
                if len(rest) >= 2:
                    p = kernels.canonical_form(tuple(rest))
                    if p not in seen:
                        seen.add(p)
                        queue.append(p)
    out = set()
    for s in seen:
        cyc = DihedralCycle(s)
        if cyc not in _DELTA_EXCLUDED and delta(cyc) == tgt:
            out.add(cyc)
    return frozenset(out)


def theorem_step(pair: CoverPair) -> CoverPair:
    """One refinement step on a cover pair.

    E' adds every ``delta`` preimage of the ear doubling of each member
    of E that is itself a quiddity cycle; F' is the union of the ``rho``
    preimage sets of iota(psi(f)).  The minimum pattern length strictly
    increases.
    """
    pair.check_properties()
    for e in pair.E:
        if not is_quiddity(e):
            raise ValueError(f"E must consist of quiddity cycles: {e}")
    new_e = set(pair.E)
    for e in pair.E:
        for p in delta_preimages(psi_bar(e)):
            if is_quiddity(p):
                new_e.add(p)
    new_f: set[Pattern] = set()
    for f in pair.F:
        new_f |= rho_preimages(iota(psi(f)))
    result = CoverPair(frozenset(new_e), frozenset(new_f))
    old_min = min(len(f) for f in pair.F)
    new_min = min(len(f) for f in result.F)
    if not old_min < new_min:
        raise RuntimeError(
            f"minimum pattern length did not grow: {old_min} -> {new_min}"
        )
    return result


# ---------------------------------------------------------------------------
# verification


@dataclass
class CoverReport:
    """Outcome of checking a cover pair against an enumeration."""

    checked: int
    violations: list[DihedralCycle]
    bound: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "violations": [list(v.canon) for v in sorted(self.violations)],
            "bound": self.bound,
        }


def verify_cover(pair: CoverPair, max_length: int) -> CoverReport:
    """Check property (2): every quiddity cycle of length <= max_length is
    in E or strictly contains some pattern of F (strictness is
    len(f) < len(c))."""
    e_canons = {e.canon for e in pair.E}
    by_len = sorted(pair.F, key=len)
    checked = 0
    violations: list[DihedralCycle] = []
    for n in range(2, max_length + 1):
        for cyc in sorted(enumerate_cycles(n)):
            checked += 1
            if cyc.canon in e_canons:
                continue
            word = cyc.canon
            covered = False
            for f in by_len:
                if len(f) >= n:
                    break
                if kernels.cyclic_contains(word, f):
                    covered = True
                    break
            if not covered:
                violations.append(cyc)
    return CoverReport(checked=checked, violations=violations, bound=max_length)


@dataclass
class SubseqReport:
    """Outcome of the interior-subsequence check over all representatives."""

    checked: int
    violations: list[Pattern]
    bound: int
    pattern_hits: dict[Pattern, int]
    exceptional_hits: dict[Pattern, int]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "violations": [list(v) for v in self.violations],
            "bound": self.bound,
            "pattern_hits": {",".join(map(str, k)): v for k, v in self.pattern_hits.items()},
            "exceptional_hits": {
                ",".join(map(str, k)): v for k, v in self.exceptional_hits.items()
            },
        }


def verify_thm_subseqs(max_length: int) -> SubseqReport:
    """For every representative of every quiddity cycle of length <=
    max_length: either it is one of the five exceptional representatives
    or its interior (positions 2..n-1), forward or reversed, linearly
    contains one of the nine patterns."""
    exceptional = set(EXCEPTIONAL_REPRESENTATIVES)
    pattern_hits: dict[Pattern, int] = {p: 0 for p in NINE_PATTERNS}
    exceptional_hits: dict[Pattern, int] = {e: 0 for e in EXCEPTIONAL_REPRESENTATIVES}
    checked = 0
    violations: list[Pattern] = []
    for n in range(2, max_length + 1):
        for cyc in sorted(enumerate_cycles(n)):
            for rep in cyc.representatives():
                checked += 1
                if rep in exceptional:
                    exceptional_hits[rep] += 1
                    continue
                interior = rep[1:-1]
                reversed_interior = interior[::-1]
                for p in NINE_PATTERNS:
                    if kernels.linear_contains(interior, p) or kernels.linear_contains(
                        reversed_interior, p
                    ):
                        pattern_hits[p] += 1
                        break
                else:
                    violations.append(rep)
    return SubseqReport(
        checked=checked,
        violations=violations,
        bound=max_length,
        pattern_hits=pattern_hits,
        exceptional_hits=exceptional_hits,
    )

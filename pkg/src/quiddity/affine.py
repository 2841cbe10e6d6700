"""Affine periodic sequences and the rank-two classification.

A bi-infinite periodic integer sequence is *affine* when it can be cut
into representatives of quiddity cycles glued end to end, each junction
entry carrying the two boundary entries plus 2.  ``decompose_affine``
decides this by backtracking over junction positions and splits; the
entry-sum identity of quiddity cycles forces the number of junctions per
window to be exactly 3*len - sum, which prunes the search to triviality.

``classify_mu`` sweeps all root-of-unity triples up to a torsion bound,
walks each one, keeps the affine orbits and matches them against the
built-in classification table (eleven root-of-unity rows plus three
one-parameter families checked by specialization).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

from .charseq import (
    SHAPE_BROKEN,
    SHAPE_CHAIN,
    SHAPE_CYCLE,
    Triple,
    minimal_period,
    walk,
)
from .cycles import DihedralCycle, Pattern, as_pattern, is_quiddity
from .localdesc import NINE_PATTERNS
from .scalars import Scalar

#: Patterns one of which every affine sequence must contain (cyclically,
#: either orientation): the nine interior patterns plus six that arise
#: from gluing only short blocks.
FIFTEEN_PATTERNS: tuple[Pattern, ...] = NINE_PATTERNS + (
    (1, 3, 2), (1, 3, 3), (1, 4, 1, 4), (2, 1, 6), (2, 2, 2, 2), (3, 1, 6),
)


@dataclass(frozen=True)
class AffineDecomposition:
    """A gluing of one junction-period of the sequence.

    ``blocks[t]`` sits between junction ``t`` and junction ``t+1``
    (cyclically); its first entry is the y-part of junction ``t`` and its
    last entry the x-part of junction ``t+1``.  ``junctions`` holds
    (position, x, y) with position indexing the tiled word, whose length
    is ``period_multiple`` copies of the period.
    """

    period: Pattern
    period_multiple: int
    junctions: tuple[tuple[int, int, int], ...]
    blocks: tuple[Pattern, ...]

    def word(self) -> Pattern:
        return self.period * self.period_multiple

    def reassemble(self) -> Pattern:
        """Rebuild the tiled word from blocks and junctions (soundness)."""
        n = len(self.period) * self.period_multiple
        out: list[Optional[int]] = [None] * n
        k = len(self.junctions)
        for t, (pos, x, y) in enumerate(self.junctions):
            blk = self.blocks[t]
            nxt = self.junctions[(t + 1) % k]
            if blk[0] != y or blk[-1] != nxt[1]:
                raise ValueError("blocks do not meet their junction splits")
            out[pos % n] = x + 2 + y
            for j, val in enumerate(blk[1:-1], start=pos + 1):
                out[j % n] = val
        if any(v is None for v in out):
            raise ValueError("gaps between blocks")
        return tuple(out)  # type: ignore[arg-type]

    def to_json(self) -> dict:
        return {
            "period": list(self.period),
            "period_multiple": self.period_multiple,
            "junctions": [list(j) for j in self.junctions],
            "blocks": [list(b) for b in self.blocks],
        }


@lru_cache(maxsize=None)
def _block_ok(block: Pattern) -> bool:
    return is_quiddity(DihedralCycle(block))


@lru_cache(maxsize=None)
def decompose_affine(
    period: Pattern, max_multiple: int = 3
) -> Optional[AffineDecomposition]:
    """Search for a gluing of the bi-infinite sequence with period
    ``period`` into quiddity-cycle blocks; None when none exists with a
    junction pattern repeating within ``max_multiple`` periods.

    Every block of length r contributes entry sum 3(r-2), which forces
    any valid window of length N to carry exactly 3N - sum(window)
    junctions; the backtracking enforces that count exactly.
    """
    p = as_pattern(period)
    for mult in range(1, max_multiple + 1):
        word = p * mult
        n = len(word)
        k_needed = 3 * n - sum(word)
        if k_needed < 1 or k_needed > n:
            continue
        for j0 in range(n):
            v0 = word[j0]
            if v0 < 2:
                continue
            for x0 in range(v0 - 1):
                y0 = v0 - 2 - x0
                found = _chain(word, n, j0, x0, y0, j0, y0, k_needed - 1)
                if found is not None:
                    junctions, blocks = found
                    return AffineDecomposition(
                        period=p,
                        period_multiple=mult,
                        junctions=((j0, x0, y0),)
                        + tuple((j % n, x, y) for (j, x, y) in junctions),
                        blocks=tuple(blocks),
                    )
    return None


def _chain(word, n, j0, x0, y0, prev_j, prev_y, remaining):
    """Extend a partial gluing: place the next junction after prev_j.

    Returns (junctions, blocks) past the first junction, or None.
    """
    limit = j0 + n
    for j in range(prev_j + 1, limit + 1):
        interior = tuple(word[t % n] for t in range(prev_j + 1, j))
        if j == limit:
            if remaining != 0:
                return None
            block = (prev_y,) + interior + (x0,)
            if _block_ok(block):
                return ((), (block,))
            return None
        if remaining == 0:
            continue
        v = word[j % n]
        if v < 2:
            continue
        for x in range(v - 1):
            y = v - 2 - x
            block = (prev_y,) + interior + (x,)
            if not _block_ok(block):
                continue
            rest = _chain(word, n, j0, x0, y0, j, y, remaining - 1)
            if rest is not None:
                junctions, blocks = rest
                return (((j, x, y),) + junctions, (block,) + blocks)
    return None


def cor15_check(period: Iterable[int]) -> bool:
    """True iff the bi-infinite sequence with this period contains one of
    the fifteen patterns, in either orientation."""
    p = as_pattern(period)
    n = len(p)
    reps = -(-(n + 3) // n)  # window length up to 4
    for word in (p, p[::-1]):
        tiled = word * reps
        for pat in FIFTEEN_PATTERNS:
            for off in range(n):
                if tiled[off : off + len(pat)] == pat:
                    return True
    return False


# ---------------------------------------------------------------------------
# classification table


@dataclass(frozen=True)
class TableRow:
    """One root-of-unity row of the classification table: diagrams as
    exponent triples over a primitive n-th root, the parameter
    description, and the period as printed."""

    row: int
    n: int
    diagrams: tuple[tuple[int, int, int], ...]
    parameter: str
    period: Pattern


KNOWN_ROWS: tuple[TableRow, ...] = (
    TableRow(1, 3, ((1, 1, 1),), "zeta in mu_3", (2,)),
    TableRow(2, 6, ((2, 5, 2),), "zeta in mu_6", (2,)),
    TableRow(3, 6, ((1, 4, 4),), "zeta in mu_6", (2,)),
    TableRow(4, 6, ((4, 1, 2), (2, 3, 2), (2, 1, 4)), "zeta in mu_6", (2,)),
    TableRow(5, 12, ((1, 10, 4),), "zeta in mu_12", (2,)),
    TableRow(6, 5, ((1, 4, 4),), "zeta in mu_5", (1, 4)),
    TableRow(7, 8, ((4, 4, 1),), "zeta in mu_8", (1, 4)),
    TableRow(8, 10, ((1, 9, 4),), "zeta in mu_10", (1, 4)),
    TableRow(9, 12, ((1, 10, 9), (9, 8, 4)), "zeta in mu_12", (2, 3, 1, 3)),
    TableRow(
        10,
        12,
        ((1, 8, 6), (6, 4, 3), (3, 2, 9), (9, 4, 6), (6, 8, 7)),
        "zeta in mu_12",
        (4, 1, 3, 3, 1),
    ),
    TableRow(11, 18, ((1, 12, 9), (9, 6, 4)), "zeta in mu_18", (6, 1, 3, 1)),
)

#: One-parameter families: (row, label, maker, excluded torsion orders).
#: The maker builds the triple for a generic q or for q a given root of
#: unity; exclusions are the orders where the family degenerates.
def _family_row12(q: Scalar) -> Triple:
    return Triple(q, q ** -2, q)


def _family_row13(q: Scalar) -> Triple:
    return Triple(q, q ** -2, Scalar.minus_one() * q)


def _family_row14(q: Scalar) -> Triple:
    return Triple(q, q ** -4, q ** 4)


GENERIC_ROWS = (
    (12, "q generic, q != +-1", _family_row12, (2,), (1, 2)),
    (13, "q generic, q != +-1", _family_row13, (2,), (1, 2)),
    (14, "q generic, q != +-1, q not in mu_3 or mu_4", _family_row14, (1, 4), (1, 2, 3, 4)),
)


def canonical_period_key(period: Iterable[int]) -> Pattern:
    """Rotation+reversal canonical form, for comparing cyclic periods."""
    p = tuple(period)
    if not p:
        return p
    return min(minimal_period(p), minimal_period(p[::-1]))


def _triple_key(t: Triple):
    return t.sort_key()


def _orbit_key(triples: Iterable[Triple]) -> frozenset:
    return frozenset(_triple_key(t) for t in triples)


def _orbit_level(triples: Iterable[Triple]) -> int:
    lvl = 1
    for t in triples:
        for s in (t.q1, t.q, t.q2):
            lvl = lvl * s.torsion.denominator // gcd(lvl, s.torsion.denominator)
    return lvl


@dataclass
class ClassifiedOrbit:
    """One affine reflection orbit with its table match."""

    row_matched: Optional[int]
    diagrams: list[Triple]
    parameter: str
    period: Pattern
    orbit_size: int
    level: int

    def to_json(self) -> dict:
        return {
            "row_matched": self.row_matched,
            "diagrams": [t.to_json() for t in self.diagrams],
            "parameter": self.parameter,
            "period": list(self.period),
            "orbit_size": self.orbit_size,
        }


@dataclass
class ClassificationReport:
    n_max: int
    orbits: list[ClassifiedOrbit]
    missing: list[str]
    unmatched: list[ClassifiedOrbit]
    triples_checked: int
    broken: int
    non_affine: int

    @property
    def ok(self) -> bool:
        return not self.missing and not self.unmatched

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "orbits": [o.to_json() for o in self.orbits],
            "missing": self.missing,
            "unmatched": [o.to_json() for o in self.unmatched],
            "triples_checked": self.triples_checked,
            "broken": self.broken,
            "non_affine": self.non_affine,
        }


def _instance_orbits(n_max: int, max_steps: int):
    """Instantiate every table row at every admissible root of unity.

    Returns (expected, required): ``expected`` maps an orbit key (or its
    label swap) to (row, parameter, period); ``required`` lists
    (label, key, swapped_key) for instances that must show up in a sweep
    bounded by ``n_max``.
    """
    expected: dict[frozenset, tuple[int, str, Pattern]] = {}
    required: list[tuple[str, frozenset, frozenset]] = []

    def register(start: Triple, rowno: int, parameter: str, period: Pattern, label: str):
        rep = walk(start, max_steps=max_steps)
        if rep.shape != SHAPE_CYCLE:
            raise RuntimeError(f"classification instance did not close: {label}")
        if _orbit_level(rep.orbit) > n_max:
            return
        key = _orbit_key(rep.orbit)
        skey = _orbit_key(t.swap() for t in rep.orbit)
        for k in (key, skey):
            if k not in expected:
                expected[k] = (rowno, parameter, period)
        required.append((label, key, skey))

    for row in KNOWN_ROWS:
        if row.n is None or row.n > n_max:
            continue
        for u in range(1, row.n):
            if gcd(u, row.n) != 1:
                continue
            e1, e, e2 = row.diagrams[0]
            register(
                Triple.from_exponents(row.n, e1 * u, e * u, e2 * u),
                row.row,
                row.parameter,
                row.period,
                f"row {row.row} at zeta^{u}, mu_{row.n}",
            )
    for rowno, _param, maker, period, excluded in GENERIC_ROWS:
        for k in range(3, n_max + 1):
            if k in excluded:
                continue
            for u in range(1, k):
                if gcd(u, k) != 1:
                    continue
                register(
                    maker(Scalar.root_of_unity(k, u)),
                    rowno,
                    f"q primitive {k}-th root (generic row {rowno})",
                    period,
                    f"row {rowno} specialized at mu_{k}, q=zeta^{u}",
                )
    return expected, required


@lru_cache(maxsize=4)
def classify_mu(n_max: int, max_steps: int = 100000) -> ClassificationReport:
    """Sweep all root-of-unity triples with exponents in (Z/n)^3 for
    n <= n_max, keep the affine orbits, and match each one against the
    classification table.

    Raises if an affine period ever fails the fifteen-pattern condition
    (that would contradict the necessity direction and means a bug or a
    counterexample).
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    verdicts: dict = {}
    found: dict[frozenset, dict] = {}
    checked = broken = non_affine = 0
    for n in range(2, n_max + 1):
        for e1 in range(n):
            for e in range(n):
                for e2 in range(n):
                    t = Triple.from_exponents(n, e1, e, e2)
                    key = _triple_key(t)
                    if key in verdicts:
                        continue
                    checked += 1
                    report = walk(t, max_steps=max_steps)
                    if report.shape == SHAPE_BROKEN:
                        broken += 1
                        for ot in report.orbit:
                            verdicts[_triple_key(ot)] = "broken"
                        continue
                    if report.shape != SHAPE_CYCLE:
                        raise RuntimeError(
                            f"root-of-unity walk did not resolve: {t}"
                        )
                    dec = decompose_affine(report.period)
                    if dec is None:
                        non_affine += 1
                        for ot in report.orbit:
                            verdicts[_triple_key(ot)] = "non-affine"
                        continue
                    if not cor15_check(report.period):
                        raise RuntimeError(
                            "affine period fails the fifteen-pattern "
                            f"condition: {report.period} from {t}"
                        )
                    okey = _orbit_key(report.orbit)
                    for ot in report.orbit:
                        verdicts[_triple_key(ot)] = "affine"
                    if okey not in found:
                        found[okey] = {
                            "orbit": sorted(report.orbit, key=_triple_key),
                            "period": report.period,
                        }
    expected, required = _instance_orbits(n_max, max_steps)
    orbits: list[ClassifiedOrbit] = []
    unmatched: list[ClassifiedOrbit] = []
    for okey, data in found.items():
        level = _orbit_level(data["orbit"])
        match = expected.get(okey)
        period_ok = True
        if match is not None:
            rowno, parameter, row_period = match
            period_ok = canonical_period_key(data["period"]) == canonical_period_key(
                row_period
            )
        co = ClassifiedOrbit(
            row_matched=match[0] if (match and period_ok) else None,
            diagrams=data["orbit"],
            parameter=match[1] if (match and period_ok) else f"mu_{level}",
            period=data["period"],
            orbit_size=len(data["orbit"]),
            level=level,
        )
        orbits.append(co)
        if co.row_matched is None:
            unmatched.append(co)
    found_keys = set(found)
    missing = [
        label
        for (label, key, skey) in required
        if key not in found_keys and skey not in found_keys
    ]
    orbits.sort(key=lambda o: (o.row_matched or 10_000, o.level, [t.sort_key() for t in o.diagrams]))
    return ClassificationReport(
        n_max=n_max,
        orbits=orbits,
        missing=missing,
        unmatched=unmatched,
        triples_checked=checked,
        broken=broken,
        non_affine=non_affine,
    )


@dataclass
class SpecializationResult:
    row: int
    order: int
    exponent: int
    status: str  # "match", "degenerate", "broken"

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "order": self.order,
            "exponent": self.exponent,
            "status": self.status,
        }


@dataclass
class GenericRowsReport:
    """Symbolic verification of the three one-parameter families plus the
    exactness of their stated exclusions under specialization."""

    rows: dict[int, dict]
    specializations: list[SpecializationResult]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "specializations": [s.to_json() for s in self.specializations],
            "violations": self.violations,
        }


def check_generic_rows(max_order: int = 48, max_steps: int = 10000) -> GenericRowsReport:
    """Walk the three one-parameter families symbolically, then specialize
    q to every primitive k-th root for k up to ``max_order``.

    A specialization must reproduce the generic period exactly when k is
    allowed, and must degenerate or break exactly when the parameter
    column excludes it (including q = +-1 for all three rows).
    """
    rows: dict[int, dict] = {}
    specializations: list[SpecializationResult] = []
    violations: list[str] = []
    for rowno, param, maker, period, excluded in GENERIC_ROWS:
        q = Scalar.q_power(1)
        rep = walk(maker(q), max_steps=max_steps)
        dec = decompose_affine(rep.period) if rep.period else None
        rows[rowno] = {
            "parameter": param,
            "shape": rep.shape,
            "period": list(rep.period),
            "affine": dec is not None,
            "ends": len(rep.ends),
        }
        if rep.shape != SHAPE_CHAIN:
            violations.append(f"row {rowno}: generic walk gave shape {rep.shape}")
        if canonical_period_key(rep.period) != canonical_period_key(period):
            violations.append(
                f"row {rowno}: generic period {rep.period} != expected {period}"
            )
        if dec is None:
            violations.append(f"row {rowno}: generic period not affine")
        target = canonical_period_key(period)
        for k in range(1, max_order + 1):
            for u in range(1, max(k, 2)):
                if gcd(u, k) != 1:
                    continue
                srep = walk(maker(Scalar.root_of_unity(k, u)), max_steps=max_steps)
                if srep.shape == SHAPE_BROKEN:
                    status = "broken"
                elif canonical_period_key(srep.period) == target:
                    status = "match"
                else:
                    status = "degenerate"
                specializations.append(SpecializationResult(rowno, k, u, status))
                allowed = k not in excluded
                if allowed and status != "match":
                    violations.append(
                        f"row {rowno}: mu_{k} (exp {u}) should match but got {status}"
                    )
                if not allowed and status == "match":
                    violations.append(
                        f"row {rowno}: mu_{k} (exp {u}) is excluded but matches"
                    )
    return GenericRowsReport(
        rows=rows, specializations=specializations, violations=violations
    )


@dataclass
class Cor15Report:
    n_max: int
    periods: list[Pattern]
    failures: list[Pattern]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "periods": [list(p) for p in self.periods],
            "failures": [list(p) for p in self.failures],
        }


def verify_cor15_on_classified(n_max: int) -> Cor15Report:
    """Every affine period found by the sweep passes the fifteen-pattern
    containment condition."""
    report = classify_mu(n_max)
    periods = sorted(
        {canonical_period_key(o.period) for o in report.orbits},
        key=lambda p: (len(p), p),
    )
    failures = [p for p in periods if not cor15_check(p)]
    return Cor15Report(n_max=n_max, periods=periods, failures=failures)

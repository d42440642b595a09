"""Scan over delta: fraction-free elimination of the symbolic system over Z[delta]."""
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Sequence, Set, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from core.deltader import SYMBOLIC, SymbolicRow, assemble_system, derivation_space, split_components
from core.exactnum import DELTA_RING, IntPolynomial, poly_lcm, split_candidates
from core.logging_config import get_logger, log_solve_event
from core.superalgebra import SuperAlgebra

logger = get_logger(__name__)

PROBE_NUMERATOR_BOUND = 97
PROBE_DENOMINATOR_BOUND = 31

MODULUS_RING, _ = ring("delta", QQ)


@dataclass
class CriticalReport:
    algebra_name: str
    n: int
    generic_rank: int
    critical: List[Tuple[Fraction, int]] = field(default_factory=list)
    unresolved_factors: List[IntPolynomial] = field(default_factory=list)
    candidates: List[Fraction] = field(default_factory=list)

    @property
    def generic_nullity(self) -> int:
        return self.n * self.n - self.generic_rank

    @property
    def degenerate(self) -> bool:
        return self.generic_rank == 0

    @property
    def critical_deltas(self) -> List[Fraction]:
        return [delta for delta, _ in self.critical]


def integral_row(row: SymbolicRow) -> Dict[int, object]:
    denominator = reduce(poly_lcm, (value.denominator for value in row.values()), IntPolynomial((1,)))
    scaled = {}
    for var, value in row.items():
        scaled[var] = value.numerator.to_ring() * denominator.exquo(value.denominator).to_ring()
    return scaled


def _strip_content(row: Dict[int, object], contents: List[IntPolynomial]) -> Dict[int, object]:
    common = reduce(lambda a, b: a.gcd(b), row.values())
    if common.LC < 0:
        common = -common
    if common == DELTA_RING.one:
        return row
    if common.degree() > 0:
        contents.append(IntPolynomial.from_ring(common))
    return {var: value.exquo(common) for var, value in row.items()}


def eliminate_block(rows: Sequence[Dict[int, object]]) -> Tuple[List[IntPolynomial], List[IntPolynomial]]:
    """Fraction-free elimination of one block.

    Pivots on the lowest-degree entry, ties broken towards the sparsest column.
    Each update r <- a*r - b*p is followed by division by the polynomial gcd of
    the row.

    Returns:
        (pivot polynomials, stripped contents of positive degree)
    """
    contents: List[IntPolynomial] = []
    active = [_strip_content(dict(row), contents) for row in rows if row]
    pivots: List[IntPolynomial] = []
    while active:
        counts = Counter(var for row in active for var in row)
        _, _, var, _, position = min(
            (row[v].degree(), counts[v], v, len(row), pos) for pos, row in enumerate(active) for v in row
        )
        pivot_row = active[position]
        a = pivot_row[var]
        pivots.append(IntPolynomial.from_ring(a))

        remaining = []
        for pos, row in enumerate(active):
            if pos == position:
                continue
            if var in row:
                b = row[var]
                updated = {}
                for key in set(row) | set(pivot_row):
                    value = a * row.get(key, DELTA_RING.zero) - b * pivot_row.get(key, DELTA_RING.zero)
                    if value:
                        updated[key] = value
                row = _strip_content(updated, contents) if updated else updated
            if row:
                remaining.append(row)
        active = remaining
    return pivots, contents


def _reduce_row(row: Dict[int, object], modulus) -> Dict[int, object]:
    reduced = {}
    for var, value in row.items():
        rest = value.rem(modulus)
        if rest:
            reduced[var] = rest
    if reduced:
        scale = reduced[min(reduced)].LC
        reduced = {var: value.quo_ground(scale) for var, value in reduced.items()}
    return reduced


def rank_modulo(rows: Sequence[Dict[int, object]], factor: IntPolynomial) -> int:
    """Rank of integral rows over the field Q[delta]/(factor).

    ``factor`` must be irreducible. Entries are kept reduced below its degree
    and every row is scaled so its first entry has leading coefficient 1.
    """
    modulus = MODULUS_RING.from_dict(dict(factor.to_ring()))
    zero = MODULUS_RING.zero
    active = []
    for row in rows:
        lifted = _reduce_row({var: MODULUS_RING.from_dict(dict(value)) for var, value in row.items()}, modulus)
        if lifted:
            active.append(lifted)

    rank = 0
    while active:
        position = min(range(len(active)), key=lambda pos: len(active[pos]))
        pivot_row = active[position]
        var = min(pivot_row)
        a = pivot_row[var]
        rank += 1
        remaining = []
        for pos, row in enumerate(active):
            if pos == position:
                continue
            if var in row:
                b = row[var]
                row = _reduce_row(
                    {key: a * row.get(key, zero) - b * pivot_row.get(key, zero) for key in set(row) | set(pivot_row)},
                    modulus,
                )
            if row:
                remaining.append(row)
        active = remaining
    return rank


def critical_deltas(A: SuperAlgebra) -> CriticalReport:
    """Generic rank over Q(delta) and the rational delta where the nullity jumps.

    Candidates are the rational roots of every pivot and every stripped
    content; each is confirmed by an exact solve at that delta. Irreducible
    factors without rational roots are kept only when the rank over
    Q[delta]/(factor) falls below the generic rank.
    """
    started = time.perf_counter()
    system = assemble_system(A, SYMBOLIC)
    rows = [integral_row(row) for row in system.rows]
    polynomials: List[IntPolynomial] = []
    generic_rank = 0
    blocks = split_components([row.keys() for row in rows])
    for positions, _ in blocks:
        pivots, contents = eliminate_block([rows[p] for p in positions])
        generic_rank += len(pivots)
        polynomials.extend(pivots)
        polynomials.extend(contents)

    roots, factors = split_candidates(polynomials)
    leftovers = []
    for factor in factors:
        rank = sum(rank_modulo([rows[p] for p in positions], factor) for positions, _ in blocks)
        if rank < generic_rank:
            leftovers.append(factor)
        else:
            logger.debug(f"{A.name}: dropped {factor}, full rank {rank} modulo the factor")
    report = CriticalReport(A.name, A.dim, generic_rank, unresolved_factors=leftovers, candidates=sorted(roots))
    if report.degenerate:
        logger.warning(f"{A.name}: degenerate system, generic rank 0")
    for delta in sorted(roots):
        nullity = derivation_space(A, delta).nullity
        if nullity > report.generic_nullity:
            report.critical.append((delta, nullity))
    if leftovers:
        logger.warning(f"{A.name}: {len(leftovers)} pivot factors without rational roots")

    log_solve_event(
        logger,
        "critical_deltas",
        A.name,
        dim=A.dim,
        rank=generic_rank,
        blocks=len(blocks),
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return report


def random_probe_deltas(seed: Union[int, str], count: int, avoid: Set[Fraction]) -> List[Fraction]:
    rng = random.Random(seed)
    probes: List[Fraction] = []
    while len(probes) < count:
        delta = Fraction(
            rng.randint(-PROBE_NUMERATOR_BOUND, PROBE_NUMERATOR_BOUND),
            rng.randint(1, PROBE_DENOMINATOR_BOUND),
        )
        if delta not in avoid and delta not in probes:
            probes.append(delta)
    return probes


def probe_generic_nullity(
    A: SuperAlgebra,
    report: CriticalReport,
    seed: int,
    count: int = 5,
) -> List[Tuple[Fraction, int]]:
    """(delta, nullity) at seeded random rationals away from every candidate root."""
    avoid = set(report.candidates) | {delta for delta, _ in report.critical}
    return [(delta, derivation_space(A, delta).nullity) for delta in random_probe_deltas(seed, count, avoid)]

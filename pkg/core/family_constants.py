from __future__ import annotations

from typing import Final

# ---------------- Instances ----------------
SUPERIDENTITY_SPECS: Final[tuple[str, ...]] = (
    "A:1,0",
    "A:2,1",
    "Aqq:1",
    "B:0,1",
    "B:1,1",
    "C:2",
    "D:2,1",
    "P:2",
    "P:3",
    "Q:2",
    "Q:3",
    "D21:1",
    "D21:2",
    "D21:-1/2",
    "D21:3/5",
)

# Families with a root table over independent coordinates.
ROOT_TABLE_SPECS: Final[tuple[str, ...]] = (
    "A:1,0",
    "B:0,1",
    "B:1,1",
    "C:2",
)

SCAN_SPECS: Final[tuple[str, ...]] = (
    "A:1,0",
    "B:0,1",
)

FIXTURE_NAMES: Final[tuple[str, ...]] = (
    "sl2",
    "abelian1",
    "sl2-corrupt",
)

# ---------------- Deltas ----------------
SCALAR_DELTA: Final[str] = "1/2"
DERIVATION_DELTA: Final[str] = "1"

TRIVIAL_DELTAS: Final[tuple[str, ...]] = (
    "0",
    "-1",
    "-1/2",
    "2",
    "3/7",
)

REPORT_DELTAS: Final[tuple[str, ...]] = (
    SCALAR_DELTA,
    DERIVATION_DELTA,
    *TRIVIAL_DELTAS,
)

ORACLE_DELTAS: Final[tuple[str, ...]] = (
    "-1",
    "0",
    "1/2",
    "1",
    "2",
)

# ---------------- Probes ----------------
PROBE_COUNT: Final[int] = 5
REPORT_PROBES_PER_INSTANCE: Final[int] = 1
ORACLE_MAX_DIM: Final[int] = 6

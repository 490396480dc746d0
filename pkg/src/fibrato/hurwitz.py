"""Branch data for candidate branched covers of curves.

A branch datum records a degree-d cover of a genus-g_target curve with m
branch points and one partition of d per branch point (the local degrees).
Compatibility couples the Euler characteristics,

    2 - 2*g_source - m_parts = d * (2 - 2*g_target - m),

together with the parity condition that m*d - m_parts be even (m_parts is
the total number of parts over all branch points).  The two conditions are
equivalent to the Riemann-Hurwitz count being an integer, which
solve_source_genus exploits; ramification_genus recomputes the genus by the
classical summation over local degrees as an independent cross-check.

Realizability only imports a sufficient criterion — a full cyclic branch
point over the projective line — so the answer is Realizable or Unknown,
never "No".
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BranchDatum",
    "REALIZABLE",
    "UNKNOWN",
    "is_compatible",
    "solve_source_genus",
    "is_realizable",
    "ramification_genus",
    "branch_datum_to_json",
    "branch_datum_from_json",
    "NonIntegralGenus",
    "NegativeGenus",
    "ParityViolation",
    "IncompatibleDatum",
]

REALIZABLE = "Realizable"
UNKNOWN = "Unknown"


class ParityViolation(ValueError):
    """m*d - m_parts is odd: no cover can carry this ramification."""


class NonIntegralGenus(ParityViolation):
    """The solved genus is not an integer (equivalent to a parity failure)."""


class NegativeGenus(ValueError):
    """The solved genus is negative: no such cover exists."""


class IncompatibleDatum(ValueError):
    """Realizability was asked of an incompatible branch datum."""


@dataclass(frozen=True)
class BranchDatum:
    """A candidate branched cover: source genus (or None while unsolved),
    target genus, branch-point count, degree, and local degrees."""

    g_source: int | None
    g_target: int
    m: int
    d: int
    partitions: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "partitions", tuple(tuple(int(x) for x in p) for p in self.partitions)
        )
        if self.g_source is not None and self.g_source < 0:
            raise ValueError("source genus must be non-negative")
        if self.g_target < 0:
            raise ValueError("target genus must be non-negative")
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if self.m != len(self.partitions) or self.m < 0:
            raise ValueError("need exactly one partition per branch point")
        for p in self.partitions:
            if not p or any(x < 1 for x in p):
                raise ValueError("partition parts must be positive")
            if sum(p) != self.d:
                raise ValueError(f"partition {p} does not sum to the degree {self.d}")

    @property
    def total_parts(self) -> int:
        """Total number of preimages of branch points (often written with a
        tilde over m)."""
        return sum(len(p) for p in self.partitions)


def is_compatible(b: BranchDatum) -> bool:
    """Both the Euler-characteristic identity and the parity condition."""
    if b.g_source is None:
        raise ValueError("compatibility needs a known source genus")
    euler = 2 - 2 * b.g_source - b.total_parts == b.d * (2 - 2 * b.g_target - b.m)
    parity = (b.m * b.d - b.total_parts) % 2 == 0
    return euler and parity


def solve_source_genus(g_target: int, m: int, d: int, partitions) -> int:
    """The unique source genus admitted by the datum, if one exists."""
    probe = BranchDatum(None, g_target, m, d, tuple(partitions))
    if (m * d - probe.total_parts) % 2 != 0:
        raise ParityViolation(f"m*d - parts = {m * d - probe.total_parts} is odd")
    doubled = 2 - probe.total_parts - d * (2 - 2 * g_target - m)
    if doubled % 2 != 0:  # unreachable: equivalent to the parity test above
        raise NonIntegralGenus(f"2*g = {doubled} is odd")
    g = doubled // 2
    if g < 0:
        raise NegativeGenus(f"solved genus {g} is negative")
    return g


def ramification_genus(g_target: int, d: int, partitions) -> int:
    """Independent Riemann-Hurwitz evaluation: genus from the summation of
    (local degree - 1) over all preimages of branch points."""
    ram = sum(part - 1 for p in partitions for part in p)
    doubled = d * (2 * g_target - 2) + ram + 2
    if doubled % 2 != 0:
        raise ParityViolation(f"total ramification {ram} has the wrong parity")
    g = doubled // 2
    if g < 0:
        raise NegativeGenus(f"summation genus {g} is negative")
    return g


def is_realizable(b: BranchDatum) -> str:
    """Realizable when the target is the projective line and some branch
    point is fully cyclic (its partition is the single part (d)); Unknown
    otherwise."""
    if not is_compatible(b):
        raise IncompatibleDatum("realizability is only defined for compatible data")
    if b.g_target == 0 and any(p == (b.d,) for p in b.partitions):
        return REALIZABLE
    return UNKNOWN


# ---------------------------------------------------------------------------
# JSON round trip

def branch_datum_to_json(b: BranchDatum) -> dict:
    out = {
        "schema_version": 1,
        "g_target": b.g_target,
        "m": b.m,
        "d": b.d,
        "partitions": [list(p) for p in b.partitions],
    }
    if b.g_source is not None:
        out["g_source"] = b.g_source
    return out


def branch_datum_from_json(payload: dict) -> BranchDatum:
    version = payload.get("schema_version", 1)
    if version != 1:
        raise ValueError(f"unsupported schema_version {version}")
    return BranchDatum(
        payload.get("g_source"),
        payload["g_target"],
        payload["m"],
        payload["d"],
        tuple(tuple(p) for p in payload["partitions"]),
    )

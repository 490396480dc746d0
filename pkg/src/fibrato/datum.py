"""Assembly and analysis of hyperelliptic fibration data.

A genus-g datum packages the discrete shape of a double cover of a ruled
surface over a curve: the fiber genus g, the base genus g_C, the ruled-surface
invariant e, the twisting integer n (the branch divisor has bidegree
(2g+2, (g+1)e + n)), and one entry per critical fiber listing the local
branch-curve germs sitting over it.

From that local data alone the module computes the relative invariants of the
induced genus-g fibration.  Every germ is resolved by even blow-ups; with
k_i = floor(m_i / 2) at each infinitely-near point of multiplicity m_i, the
invariants are

    chi      = (1/2) g n - (1/2) sum k_i (k_i - 1)
    omega^2  = (2g - 2) n - 2 sum (k_i - 1)^2 - m

where m (``declared_m``) counts vertical (-1)-curves in the resolved cover;
delta then follows from the Noether identity.  A companion check decides
semi-stability of the fibration: it holds exactly when every negligible
cluster in every resolution tree is a rational double point of type A and the
ramification over the critical values is declared simple.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from fractions import Fraction

from .fibration import FibrationInvariants, noether_delta, slope, speed
from .germs import (
    DEFAULT_MAX_DEPTH,
    Germ,
    ResolutionTrace,
    TracePoint,
    even_resolve,
    parse_germ,
)

SCHEMA_VERSION = 1


class InvalidDatum(ValueError):
    """Raised when invariants are requested for a datum that fails validation."""


@dataclass(frozen=True)
class CriticalFiber:
    """One critical fiber: a label plus the branch germs over its critical value.

    ``germs`` entries may be given as ``Germ`` objects or as strings in the
    germ grammar; strings are parsed on construction.  A fiber whose only
    singularities are negligible double points that the author chose not to
    spell out may instead carry ``negligible_marker=True`` with an empty germ
    list; such markers contribute nothing to the invariant sums but still
    count toward s.
    """

    label: str
    germs: tuple[Germ, ...] = ()
    negligible_marker: bool = False

    def __post_init__(self):
        parsed = tuple(parse_germ(g) if isinstance(g, str) else g for g in self.germs)
        for g in parsed:
            if not isinstance(g, Germ):
                raise TypeError(f"germ entries must be Germ or str, got {type(g).__name__}")
        object.__setattr__(self, "germs", parsed)


@dataclass(frozen=True)
class GenusGDatum:
    """Discrete data of a double cover of a ruled surface over a genus-g_C curve.

    The branch divisor is declared to meet a general fiber in 2g+2 points
    (echoed in reports as ``r_dot_gamma``) and to have bidegree
    (2g+2, (g+1)e + n).  ``c0_in_branch`` records whether the negative
    section is a component of the branch divisor, which relaxes the bound on
    e from n/(g+1) to n/g.  ``declared_m`` is the number of vertical
    (-1)-curves in the resolved double cover; there is no way to recover it
    from the local germs, so it is part of the input (default 0).
    ``simple_ramification`` is likewise a declaration about the global
    ramification over the critical values.
    """

    g: int
    g_C: int
    e: int
    n: int
    critical_fibers: tuple[CriticalFiber, ...]
    declared_m: int = 0
    simple_ramification: bool = True
    c0_in_branch: bool = False

    def __post_init__(self):
        for name in ("g", "g_C", "e", "n", "declared_m"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Integral):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.g < 2:
            raise ValueError(f"fiber genus must be >= 2, got {self.g}")
        if self.g_C < 0:
            raise ValueError(f"base genus must be >= 0, got {self.g_C}")
        if self.declared_m < 0:
            raise ValueError(f"declared_m must be >= 0, got {self.declared_m}")
        fibers = tuple(self.critical_fibers)
        for fib in fibers:
            if not isinstance(fib, CriticalFiber):
                raise TypeError(f"critical fibers must be CriticalFiber, got {type(fib).__name__}")
        object.__setattr__(self, "critical_fibers", fibers)

    @property
    def s(self) -> int:
        """Number of critical fibers."""
        return len(self.critical_fibers)


def validate(d: GenusGDatum) -> list[str]:
    """Check the datum's consistency conditions; return a list of violations.

    An empty list means the datum is admissible: the declared branch class is
    divisible by two ((g+1)e + n even), the ruled-surface invariant respects
    e <= n/(g+1) (or e <= n/g when the negative section lies in the branch
    divisor), at least one critical fiber is declared, and every critical
    fiber either carries a germ of multiplicity >= 2 or is marked negligible.
    """
    violations: list[str] = []
    parity = (d.g + 1) * d.e + d.n
    if parity % 2 != 0:
        violations.append(
            f"(g+1)*e + n = {parity} is odd; the branch class must be divisible by two"
        )
    if d.c0_in_branch:
        if d.e * d.g > d.n:
            violations.append(
                f"e = {d.e} exceeds n/g = {d.n}/{d.g} (negative section in the branch divisor)"
            )
    elif d.e * (d.g + 1) > d.n:
        violations.append(f"e = {d.e} exceeds n/(g+1) = {d.n}/{d.g + 1}")
    if d.s < 1:
        violations.append("no critical fibers declared (s = 0)")
    for fib in d.critical_fibers:
        if fib.negligible_marker:
            continue
        if not any(g.multiplicity >= 2 for g in fib.germs):
            violations.append(
                f"critical fiber {fib.label!r} carries no germ of multiplicity >= 2 "
                "and no negligible marker"
            )
    return violations


@dataclass(frozen=True)
class GermTraceSummary:
    """Resolution record of one germ inside one critical fiber."""

    fiber_label: str
    germ: Germ
    multiplicities: tuple[int, ...]
    classification: str
    sum_k_km1: int
    sum_km1_sq: int
    trace: ResolutionTrace = field(repr=False)


@dataclass(frozen=True)
class SemistableVerdict:
    """Outcome of the semi-stability check; ``failures`` names each offence."""

    passed: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class DatumInvariantsReport:
    """Invariants of the genus-g fibration induced by a datum.

    ``r_dot_gamma`` echoes the declared intersection of the branch divisor
    with a general fiber (always 2g + 2 for a genus-g double cover).
    """

    datum: GenusGDatum
    traces: tuple[GermTraceSummary, ...]
    sum_k_km1: int
    sum_km1_sq: int
    r_dot_gamma: int
    invariants: FibrationInvariants
    slope: Fraction
    speed: Fraction
    semistable: SemistableVerdict


def _overall_label(trace: ResolutionTrace) -> str:
    if trace.root is None:
        return "Smooth"
    if trace.root.classification == "NonNegligibleInterior":
        return "NonNegligible"
    return trace.root.classification


def _cluster_offences(germ: Germ, trace: ResolutionTrace) -> list[str]:
    """Names of D/E-type negligible clusters in the resolution tree.

    A cluster head is a point whose whole subtree is negligible but whose
    parent (if any) is not.  Heads labelled A* are harmless double points of
    the cover; D or E heads obstruct semi-stability.
    """
    offences: list[str] = []

    def walk(node: TracePoint):
        if node.classification == "NonNegligibleInterior":
            for child in node.children:
                walk(child)
        elif node.classification.startswith(("D", "E")):
            offences.append(
                f"germ {germ} has a residual singularity of type {node.classification}; "
                "only type-A clusters keep the fibration semi-stable"
            )

    if trace.root is not None:
        walk(trace.root)
    return offences


def _verdict(d: GenusGDatum, summaries: tuple[GermTraceSummary, ...]) -> SemistableVerdict:
    failures: list[str] = []
    if not d.simple_ramification:
        failures.append("declared non-simple ramification")
    for summary in summaries:
        failures.extend(_cluster_offences(summary.germ, summary.trace))
    return SemistableVerdict(not failures, tuple(failures))


def semistable_check(report: DatumInvariantsReport, d: GenusGDatum) -> SemistableVerdict:
    """Decide semi-stability of the fibration described by a computed report.

    Passes exactly when every negligible cluster in every resolution trace is
    of type A and the datum declares simple ramification; otherwise the
    verdict lists each offending germ with its D/E classification.
    """
    return _verdict(d, report.traces)


def invariants(d: GenusGDatum, max_depth: int = DEFAULT_MAX_DEPTH) -> DatumInvariantsReport:
    """Resolve every germ of the datum and compute the fibration invariants.

    Raises InvalidDatum when validate() reports violations,
    RequiresAlgebraicExtension / DepthOverflow from germ resolution, and
    NonHyperbolicBase when 2*g_C - 2 + s <= 0 so no speed is defined.
    """
    problems = validate(d)
    if problems:
        raise InvalidDatum("invalid datum: " + "; ".join(problems))

    summaries: list[GermTraceSummary] = []
    total_k_km1 = 0
    total_km1_sq = 0
    # Identical germs repeat many times within a datum (e.g. g+1 copies of the
    # same double point per fiber); resolve each distinct germ once.
    cache: dict[Germ, ResolutionTrace] = {}
    for fib in d.critical_fibers:
        for germ in fib.germs:
            trace = cache.get(germ)
            if trace is None:
                trace = even_resolve(germ, max_depth)
                cache[germ] = trace
            summaries.append(
                GermTraceSummary(
                    fiber_label=fib.label,
                    germ=germ,
                    multiplicities=tuple(trace.multiplicities()),
                    classification=_overall_label(trace),
                    sum_k_km1=trace.sum_k_km1,
                    sum_km1_sq=trace.sum_km1_sq,
                    trace=trace,
                )
            )
            total_k_km1 += trace.sum_k_km1
            total_km1_sq += trace.sum_km1_sq

    chi = Fraction(d.g * d.n - total_k_km1, 2)
    omega_sq = Fraction((2 * d.g - 2) * d.n - 2 * total_km1_sq - d.declared_m)
    delta = noether_delta(omega_sq, chi)
    locked = tuple(summaries)
    verdict = _verdict(d, locked)
    inv = FibrationInvariants(
        g=d.g,
        g_C=d.g_C,
        s=d.s,
        chi=chi,
        omega_sq=omega_sq,
        delta=delta,
        hyperelliptic=True,
        semistable=verdict.passed,
    )
    return DatumInvariantsReport(
        datum=d,
        traces=locked,
        sum_k_km1=total_k_km1,
        sum_km1_sq=total_km1_sq,
        r_dot_gamma=2 * d.g + 2,
        invariants=inv,
        slope=slope(inv),
        speed=speed(inv),
        semistable=verdict,
    )


# ---------------------------------------------------------------------------
# JSON serialization

def datum_to_json(d: GenusGDatum) -> dict:
    """Plain-JSON form of a datum; germs are rendered in the germ grammar."""
    fibers = []
    for fib in d.critical_fibers:
        entry: dict = {"label": fib.label, "germs": [str(g) for g in fib.germs]}
        if fib.negligible_marker:
            entry["negligible"] = True
        fibers.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "g": d.g,
        "g_C": d.g_C,
        "e": d.e,
        "n": d.n,
        "declared_m": d.declared_m,
        "simple_ramification": d.simple_ramification,
        "c0_in_branch": d.c0_in_branch,
        "critical_fibers": fibers,
    }


def datum_from_json(obj) -> GenusGDatum:
    """Inverse of datum_to_json.

    A missing schema_version is read as version 1; any other version is
    rejected.  Raises ValueError on malformed input (missing fields, bad germ
    strings, wrong types).
    """
    if not isinstance(obj, dict):
        raise ValueError("datum JSON must be an object")
    version = obj.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {version!r}")
    try:
        raw_fibers = obj["critical_fibers"]
        if not isinstance(raw_fibers, list):
            raise ValueError("critical_fibers must be a list")
        fibers = []
        for entry in raw_fibers:
            if not isinstance(entry, dict) or "label" not in entry:
                raise ValueError("each critical fiber needs at least a label")
            fibers.append(
                CriticalFiber(
                    label=str(entry["label"]),
                    germs=tuple(entry.get("germs", ())),
                    negligible_marker=bool(entry.get("negligible", False)),
                )
            )
        return GenusGDatum(
            g=int(obj["g"]),
            g_C=int(obj["g_C"]),
            e=int(obj["e"]),
            n=int(obj["n"]),
            critical_fibers=tuple(fibers),
            declared_m=int(obj.get("declared_m", 0)),
            simple_ramification=bool(obj.get("simple_ramification", True)),
            c0_in_branch=bool(obj.get("c0_in_branch", False)),
        )
    except KeyError as exc:
        raise ValueError(f"datum JSON missing field {exc.args[0]!r}") from None

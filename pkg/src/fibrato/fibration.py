"""Invariants of relatively minimal fibered surfaces and their audits.

A fibration f: X -> C of genus-g curves over a genus-g_C base carries three
relative invariants — the self-intersection of the relative canonical class
(omega_sq), the degree of the Hodge bundle (chi), and the number of nodes of
the fibers (delta) — tied together by the Noether identity

    delta = 12*chi - omega_sq.

Two derived ratios drive everything downstream: the slope omega_sq/chi and
the speed 2*chi/(2*g_C - 2 + s), where s counts the singular fibers.  All
arithmetic is exact (fractions.Fraction); audits report strict inequalities
as strict and never repair stored data silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "FibrationInvariants",
    "FiberNodeProfile",
    "StableModelNodes",
    "AuditCheck",
    "AuditReport",
    "slope",
    "speed",
    "noether_delta",
    "relative_from_absolute",
    "fiber_delta",
    "is_compact_type",
    "r_f",
    "delta_f",
    "nu",
    "omega_upper_bound",
    "canonical_class_bound",
    "audit",
    "IsotrivialDivisionByZero",
    "NonHyperbolicBase",
    "NonIntegralChi",
    "PreconditionViolated",
]


class IsotrivialDivisionByZero(ZeroDivisionError):
    """Slope is undefined when the Hodge bundle has degree zero."""


class NonHyperbolicBase(ValueError):
    """Speed needs a hyperbolic base orbifold: 2*g_C - 2 + s > 0."""


class NonIntegralChi(ValueError):
    """Chern inputs with c1^2 + c2 not divisible by 12 are inconsistent."""


class PreconditionViolated(ValueError):
    """An operation was called outside its stated domain."""


@dataclass(frozen=True)
class FibrationInvariants:
    """The numerical record of one fibration.

    delta is stored independently of chi and omega_sq so that the Noether
    audit can catch inconsistent (for instance, forged) records.
    """

    g: int
    g_C: int
    s: int
    chi: Fraction
    omega_sq: Fraction
    delta: Fraction
    hyperelliptic: bool = False
    semistable: bool = True

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("fiber genus must be at least 2")
        if self.g_C < 0 or self.s < 0:
            raise ValueError("base genus and fiber count must be non-negative")
        for name in ("chi", "omega_sq", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class FiberNodeProfile:
    """Node bookkeeping of a single singular fiber.

    g_geo is the sum of the geometric genera of the l irreducible
    components; delta_counts[i] counts nodes whose normalization separates
    the fiber into genera i and g - i (i = 0 marks non-separating nodes).
    """

    g: int
    g_geo: int
    l: int
    delta_counts: dict[int, int]

    def __post_init__(self):
        if not 0 <= self.g_geo <= self.g:
            raise ValueError("geometric genus must lie in 0..g")
        if self.l < 1:
            raise ValueError("a fiber has at least one component")
        for i, c in self.delta_counts.items():
            if not 0 <= i <= self.g // 2 or c < 0:
                raise ValueError("delta_counts maps 0..floor(g/2) to counts")

    @property
    def total_nodes(self) -> int:
        return sum(self.delta_counts.values())

    @property
    def is_compact_type(self) -> bool:
        return self.g_geo == self.g


@dataclass(frozen=True)
class StableModelNodes:
    """Multiset of m_q: the number of (-2)-curves over each node of the
    stable model (m_q = 0 where the relatively minimal model is already
    stable)."""

    node_indices: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(sorted(int(m) for m in self.node_indices))
        if entries and entries[0] < 0:
            raise ValueError("node indices are non-negative")
        object.__setattr__(self, "node_indices", entries)


# ---------------------------------------------------------------------------
# basic quantities

def slope(inv: FibrationInvariants) -> Fraction:
    """omega_sq / chi."""
    if inv.chi == 0:
        raise IsotrivialDivisionByZero("slope undefined for chi = 0")
    return inv.omega_sq / inv.chi


def speed(inv: FibrationInvariants) -> Fraction:
    """2*chi / (2*g_C - 2 + s)."""
    denom = 2 * inv.g_C - 2 + inv.s
    if denom <= 0:
        raise NonHyperbolicBase(f"base orbifold Euler number {-denom} >= 0")
    return 2 * inv.chi / denom


def noether_delta(omega_sq, chi) -> Fraction:
    """The node count forced by the Noether identity: 12*chi - omega_sq."""
    return 12 * Fraction(chi) - Fraction(omega_sq)


def relative_from_absolute(c1_sq, c2, g: int, g_C: int):
    """(omega_sq, chi, delta) from the Chern numbers of the total space."""
    if g < 2:
        raise ValueError("fiber genus must be at least 2")
    c1_sq = Fraction(c1_sq)
    c2 = Fraction(c2)
    if (c1_sq + c2) % 12 != 0:
        raise NonIntegralChi(f"c1^2 + c2 = {c1_sq + c2} is not divisible by 12")
    base = (g_C - 1) * (g - 1)
    return (
        c1_sq - 8 * base,
        (c1_sq + c2) / 12 - base,
        c2 - 4 * base,
    )


def fiber_delta(g: int, g_geo: int, l: int) -> int:
    """Nodes of a fiber with l components of total geometric genus g_geo."""
    if not 0 <= g_geo <= g:
        raise ValueError("geometric genus must lie in 0..g")
    if l < 1:
        raise ValueError("a fiber has at least one component")
    return g - g_geo + l - 1


def is_compact_type(g: int, g_geo: int) -> bool:
    """No non-separating nodes: the geometric genus is the full genus."""
    return g_geo == g


def r_f(nodes: StableModelNodes) -> Fraction:
    """Sum of 1/(m_q + 1) over the nodes of the stable model."""
    return sum((Fraction(1, m + 1) for m in nodes.node_indices), Fraction(0))


def delta_f(nodes: StableModelNodes) -> int:
    """Sum of (m_q + 1): nodes of the fibration counted on its own model."""
    return sum(m + 1 for m in nodes.node_indices)


def nu(m: int) -> Fraction:
    """Local contribution (m + 1) - 1/(m + 1) of a stable-model node."""
    if m < 0:
        raise ValueError("node index is non-negative")
    return Fraction(m + 1) - Fraction(1, m + 1)


def canonical_class_bound(g: int, g_C: int, s: int) -> int:
    """(2g - 2)(2*g_C - 2 + s); audits treat it as a strict upper bound."""
    return (2 * g - 2) * (2 * g_C - 2 + s)


def omega_upper_bound(g: int, g_C: int, s: int, r: Fraction, n: int) -> Fraction:
    """Upper bound for omega_sq from an n-fold cyclic base change:

        (2g-2)(2*g_C-2+s) + 3r/n^2 - (2g-2)s/n,

    admissible whenever n >= 1 and 2*g_C - 2 + s*(n-1)/n >= 0.
    """
    if n < 1:
        raise PreconditionViolated("n must be a positive integer")
    if Fraction(2 * g_C - 2) + Fraction(s * (n - 1), n) < 0:
        raise PreconditionViolated(f"n = {n} is inadmissible for g_C = {g_C}, s = {s}")
    return (
        Fraction(canonical_class_bound(g, g_C, s))
        + 3 * Fraction(r) / n**2
        - Fraction((2 * g - 2) * s, n)
    )


# ---------------------------------------------------------------------------
# audits

@dataclass
class AuditCheck:
    check: str
    status: str  # "pass" | "fail" | "skipped"
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    strict: bool = False
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "lhs": _rat_str(self.lhs),
            "rhs": _rat_str(self.rhs),
            "strict": self.strict,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class AuditReport:
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def failures(self) -> list[AuditCheck]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> dict:
        return {"schema_version": 1, "checks": [c.to_json() for c in self.checks]}


def _rat_str(x) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def audit(inv: FibrationInvariants, nodes: StableModelNodes | None = None,
          profiles: list[FiberNodeProfile] | None = None) -> AuditReport:
    """Run every applicable identity and inequality against one record.

    Failures are report entries, never exceptions.  Checks that need data
    the record does not carry (positive chi for slopes, a hyperbolic base
    and semi-stability for speed bounds, optional nodes and fiber profiles)
    are reported as skipped.
    """
    report = AuditReport()
    add = report.checks.append

    forced = noether_delta(inv.omega_sq, inv.chi)
    add(AuditCheck("noether-identity", _status(inv.delta == forced), inv.delta, forced))

    if inv.chi > 0:
        lam = slope(inv)
        lower = Fraction(4 * (inv.g - 1), inv.g)
        add(AuditCheck("slope-lower", _status(lower <= lam), lower, lam))
        add(AuditCheck("slope-upper", _status(lam <= Fraction(12)), lam, Fraction(12)))
        add(AuditCheck(
            "slope-12-iff-smooth",
            _status((lam == 12) == (inv.s == 0)),
            lam, Fraction(12),
            note=f"s = {inv.s}",
        ))
    else:
        note = "chi = 0" if inv.chi == 0 else "chi < 0"
        for name in ("slope-lower", "slope-upper", "slope-12-iff-smooth"):
            add(AuditCheck(name, "skipped", note=note))

    hyperbolic = 2 * inv.g_C - 2 + inv.s > 0
    if inv.semistable and hyperbolic:
        spd = speed(inv)
        add(AuditCheck("arakelov-speed", _status(spd < inv.g), spd, Fraction(inv.g), strict=True))
        bound = Fraction(canonical_class_bound(inv.g, inv.g_C, inv.s))
        add(AuditCheck("canonical-class", _status(inv.omega_sq < bound),
                       inv.omega_sq, bound, strict=True))
    else:
        note = "not semi-stable" if not inv.semistable else "non-hyperbolic base"
        add(AuditCheck("arakelov-speed", "skipped", strict=True, note=note))
        add(AuditCheck("canonical-class", "skipped", strict=True, note=note))

    if inv.g_C == 0 and inv.s > 0:
        add(AuditCheck("five-fibers", _status(inv.s >= 5), Fraction(5), Fraction(inv.s)))
    else:
        add(AuditCheck("five-fibers", "skipped", note="applies over a rational base with s > 0"))

    if nodes is not None:
        cap = Fraction((3 * inv.g - 3) * inv.s)
        add(AuditCheck("node-ratio", _status(r_f(nodes) <= cap), r_f(nodes), cap))
    else:
        add(AuditCheck("node-ratio", "skipped", note="no stable-model nodes supplied"))

    if profiles:
        for idx, prof in enumerate(profiles):
            expected = fiber_delta(prof.g, prof.g_geo, prof.l)
            ok = (prof.total_nodes == expected
                  and (prof.delta_counts.get(0, 0) == 0) == prof.is_compact_type)
            add(AuditCheck(f"fiber-profile-{idx}", _status(ok),
                           Fraction(prof.total_nodes), Fraction(expected)))
    else:
        add(AuditCheck("fiber-profile", "skipped", note="no fiber profiles supplied"))

    return report


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"

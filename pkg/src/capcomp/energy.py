"""Battery dynamics for a receiver powered by the bits it decodes.

Each transmitted 1 delivers one unit of energy, each channel use consumes
B units (0 < B < 1), and the buffer is clamped to [0, E_max].  With levels
indexed from E(1) = E_init, channel use i with bit b_i updates

    E(i+1) = min(max(E(i) + b_i - B, 0), E_max).

An outage happens at use i when E(i) + b_i < B: the receiver cannot fund
that use.  An overflow happens when E(i) + b_i - B > E_max: harvested
energy is thrown away.  Outages are recorded and the simulation continues
with the buffer clamped at zero.

All quantities are exact rationals.  Floats are rejected at the boundary
because the feasibility conditions below take ceilings of products like
T*B, which are discontinuous in B; a float that merely prints like 3/5
can land on the wrong side of a threshold.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

RationalLike = Fraction | int | str

# accepted literals: "7", "3/5", "0.6" (at most 12 fractional digits)
_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/[1-9]\d*|\.\d{1,12})?")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational from a string, int, or Fraction.

    Accepts "p/q" with a positive denominator and plain or decimal integers
    with at most 12 fractional digits.  Floats raise TypeError.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not energy quantities")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            "floats are not accepted for energy quantities; "
            "pass an exact literal such as '3/5' or '0.6'"
        )
    if isinstance(value, str):
        text = value.strip()
        if _RATIONAL_RE.fullmatch(text):
            return Fraction(text)
        raise ValueError(f"not a rational literal: {value!r}")
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


@dataclass(frozen=True)
class EnergyModel:
    """Per-use draw ``b``, buffer capacity ``e_max``, starting charge ``e_init``."""

    b: Fraction
    e_max: Fraction
    e_init: Fraction

    def __post_init__(self) -> None:
        for name in ("b", "e_max", "e_init"):
            val = getattr(self, name)
            if isinstance(val, float):
                raise TypeError(f"{name} must be an exact rational, not float")
            object.__setattr__(self, name, Fraction(val))
        if not 0 < self.b < 1:
            raise ValueError(f"b must lie strictly between 0 and 1, got {self.b}")
        if self.e_max < 0:
            raise ValueError(f"e_max must be nonnegative, got {self.e_max}")
        if not 0 <= self.e_init <= self.e_max:
            raise ValueError(
                f"e_init must lie in [0, e_max], got {self.e_init} with e_max {self.e_max}"
            )

    @classmethod
    def make(
        cls,
        b: RationalLike,
        e_max: RationalLike,
        e_init: RationalLike | None = None,
    ) -> "EnergyModel":
        """Build a model from rational literals; e_init defaults to a full buffer."""
        b_q = parse_rational(b)
        e_max_q = parse_rational(e_max)
        e_init_q = e_max_q if e_init is None else parse_rational(e_init)
        return cls(b=b_q, e_max=e_max_q, e_init=e_init_q)

    def with_full_buffer(self) -> "EnergyModel":
        if self.e_init == self.e_max:
            return self
        return EnergyModel(b=self.b, e_max=self.e_max, e_init=self.e_max)


@dataclass
class SimTrace:
    """Exact battery trajectory: levels E(1..n+1) plus 1-indexed event steps."""

    levels: list[Fraction]
    outages: list[int]
    overflows: list[int]


def _check_bits(bits: str) -> None:
    if not isinstance(bits, str):
        raise TypeError("bit sequence must be a str of '0'/'1'")
    for ch in bits:
        if ch not in "01":
            raise ValueError(f"bit sequence may contain only '0' and '1', got {ch!r}")


def simulate(bits: str, model: EnergyModel) -> SimTrace:
    """Run the exact battery recursion over a bit sequence.

    Returns the full level trajectory (n+1 entries for n bits) and the
    1-indexed steps at which outages and overflows occurred.
    """
    _check_bits(bits)
    level = model.e_init
    levels = [level]
    outages: list[int] = []
    overflows: list[int] = []
    for i, ch in enumerate(bits, start=1):
        avail = level + 1 if ch == "1" else level
        if avail < model.b:
            outages.append(i)
        if avail - model.b > model.e_max:
            overflows.append(i)
        level = min(max(avail - model.b, Fraction(0)), model.e_max)
        levels.append(level)
    return SimTrace(levels=levels, outages=outages, overflows=overflows)


def outage_occurs(bits: str, model: EnergyModel) -> bool:
    """Integer-scaled outage predicate, equivalent to simulate() but allocation-free.

    Scales every quantity by the common denominator so the inner loop is pure
    int arithmetic; used by the exhaustive verification sweeps.
    """
    _check_bits(bits)
    den = math.lcm(
        model.b.denominator, model.e_max.denominator, model.e_init.denominator
    )
    draw = model.b.numerator * (den // model.b.denominator)
    cap = model.e_max.numerator * (den // model.e_max.denominator)
    level = model.e_init.numerator * (den // model.e_init.denominator)
    for ch in bits:
        if ch == "1":
            level += den
        if level < draw:
            return True
        level -= draw
        if level > cap:
            level = cap
    return False


def rll_feasible(d: int, model: EnergyModel) -> bool:
    """Whether every (d, inf) run-length sequence avoids outage under the model."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return d >= math.ceil(model.b / (1 - model.b)) and model.e_init >= model.b


def swc_feasible(t: int, w: int, model: EnergyModel) -> bool:
    """Whether every (T, w) sliding-window sequence avoids outage under the model."""
    _check_pair(t, w)
    return w >= math.ceil(t * model.b) and model.e_init >= (t - w) * model.b


def sec_feasible(length: int, w: int, model: EnergyModel) -> bool:
    """Whether every (L, w) subblock sequence avoids outage under the model."""
    _check_pair(length, w)
    return (
        w >= math.ceil(length * model.b)
        and model.e_init >= (length - w) * model.b
        and model.e_max >= 2 * (length - w) * model.b
    )


def _check_pair(span: int, w: int) -> None:
    if span < 1:
        raise ValueError("window/subblock length must be >= 1")
    if not 1 <= w <= span:
        raise ValueError(f"weight must satisfy 1 <= w <= {span}, got {w}")


def feasible_swc_candidates(model: EnergyModel) -> list[tuple[int, int]]:
    """Outage-free (T, w) pairs that can carry the maximum rate.

    For each window length T the least admissible weight is
    max(ceil(T*b), T - z) with z = floor(e_max / b); window lengths beyond
    ceil(z / (1 - b)) cannot beat shorter ones.  Every returned pair passes
    swc_feasible.  Empty when the buffer cannot fund a single zero (z = 0).
    """
    z = math.floor(model.e_max / model.b)
    if z == 0:
        return []
    out = []
    for t in range(1, math.ceil(z / (1 - model.b)) + 1):
        w = max(math.ceil(t * model.b), t - z)
        if swc_feasible(t, w, model):
            out.append((t, w))
    return out


def feasible_sec_candidates(
    model: EnergyModel, l_cap: int | None = None
) -> list[tuple[int, int]]:
    """Outage-free (L, w) pairs up to a search cap on the subblock length.

    The least admissible weight is max(ceil(L*b), L - z2) with
    z2 = floor(e_max / (2*b)).  Every returned pair passes sec_feasible.
    """
    z2 = math.floor(model.e_max / (2 * model.b))
    if l_cap is None:
        l_cap = default_sec_l_cap(model)
    out = []
    for length in range(1, l_cap + 1):
        w = max(math.ceil(length * model.b), length - z2)
        if sec_feasible(length, w, model):
            out.append((length, w))
    return out


def default_sec_l_cap(model: EnergyModel) -> int:
    """Search cap comfortably past the interior maximizer of the subblock rate."""
    z2 = math.floor(model.e_max / (2 * model.b))
    return max(64, 4 * math.ceil(z2 / (1 - model.b)))


def preamble_length(model: EnergyModel) -> int:
    """All-ones prefix length guaranteed to fill the buffer from empty."""
    return math.ceil(model.e_max / (1 - model.b))

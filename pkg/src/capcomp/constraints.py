"""Binary sequence constraints: run-length, sliding-window, and subblock rules.

Three families, each a frozen parameter record:

* RLL(d): at least d ones separate any two successive zeros.  Sequences
  shorter than d+1 bits carry no full separation window and are accepted;
  leading and trailing runs of ones are unconstrained.
* SWC(t, w): every window of t consecutive bits holds at least w ones.
  Sequences shorter than t have no such window and are accepted.
* SEC(length, w): the sequence splits into aligned subblocks of the given
  length, each holding at least w ones.  Other lengths are rejected as a
  length mismatch.

With these conventions RLL(d) and SWC(d+1, d) accept exactly the same
sequences at every length, which the verification suites exercise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_ENUM_LIMIT, DEFAULT_STATE_BUDGET
from .energy import EnergyModel, rll_feasible, sec_feasible, swc_feasible
from .errors import NoWitnessError, ResourceLimitError


@dataclass(frozen=True)
class RLL:
    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("d must be >= 1")


@dataclass(frozen=True)
class SWC:
    t: int
    w: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if not 1 <= self.w <= self.t:
            raise ValueError(f"w must satisfy 1 <= w <= t, got {self.w}")


@dataclass(frozen=True)
class SEC:
    length: int
    w: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("subblock length must be >= 1")
        if not 1 <= self.w <= self.length:
            raise ValueError(f"w must satisfy 1 <= w <= length, got {self.w}")


ConstraintSpec = RLL | SWC | SEC


def satisfies(spec: ConstraintSpec, bits: str) -> bool:
    """Exact membership test for a bit string under the given constraint."""
    _check_bits(bits)
    if isinstance(spec, RLL):
        if len(bits) <= spec.d:
            return True
        last_zero = None
        for i, ch in enumerate(bits):
            if ch == "0":
                if last_zero is not None and i - last_zero - 1 < spec.d:
                    return False
                last_zero = i
        return True
    if isinstance(spec, SWC):
        n = len(bits)
        if n < spec.t:
            return True
        ones = bits.count("1", 0, spec.t)
        if ones < spec.w:
            return False
        for j in range(n - spec.t):
            ones += (bits[j + spec.t] == "1") - (bits[j] == "1")
            if ones < spec.w:
                return False
        return True
    if isinstance(spec, SEC):
        n = len(bits)
        if n % spec.length:
            raise ValueError(
                f"sequence length {n} is not a multiple of the subblock length {spec.length}"
            )
        return all(
            bits.count("1", j, j + spec.length) >= spec.w
            for j in range(0, n, spec.length)
        )
    raise TypeError(f"unknown constraint spec: {spec!r}")


def enumerate_sequences(
    spec: ConstraintSpec, n: int, limit: int = DEFAULT_ENUM_LIMIT
) -> list[str]:
    """All valid length-n sequences in lexicographic order, by brute force.

    Deliberately dumb: every one of the 2^n candidates is tested with
    satisfies(), so this is the reference the counting recurrences are
    checked against.  Lengths above `limit` are refused.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > limit:
        raise ResourceLimitError(
            f"enumeration of 2^{n} sequences exceeds the limit of 2^{limit}"
        )
    if n == 0:
        return [""] if satisfies(spec, "") else []
    return [s for s in (format(i, f"0{n}b") for i in range(1 << n)) if satisfies(spec, s)]


def count_exact(
    spec: ConstraintSpec, n: int, state_budget: int = DEFAULT_STATE_BUDGET
) -> int:
    """Number of valid length-n sequences, by exact integer recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if isinstance(spec, RLL):
        return _count_rll(spec.d, n)
    if isinstance(spec, SWC):
        return _count_swc(spec.t, spec.w, n, state_budget)
    if isinstance(spec, SEC):
        return _count_sec(spec.length, spec.w, n)
    raise TypeError(f"unknown constraint spec: {spec!r}")


def _count_rll(d: int, n: int) -> int:
    if n <= d:
        return 1 << n
    # states: no zero emitted yet, or j ones since the last zero (j capped at d)
    free = 1
    run = [0] * (d + 1)
    for _ in range(n):
        nxt = [0] * (d + 1)
        nxt[0] = free + run[d]  # a zero is legal only after >= d ones, or first
        for j in range(d):
            nxt[j + 1] += run[j]
        nxt[d] += run[d]
        run = nxt
    return free + sum(run)


def _count_swc(t: int, w: int, n: int, state_budget: int) -> int:
    if n < t:
        return 1 << n
    if t == 1:
        return 1  # w == 1 forces the all-ones sequence
    states = 1 << (t - 1)
    if states > state_budget:
        raise ResourceLimitError(
            f"window length {t} needs 2^{t - 1} states, over the budget of {state_budget}"
        )
    half = states >> 1
    pc = [bin(s).count("1") for s in range(states)]
    # counts[s]: valid sequences whose last t-1 bits spell s; at length t-1
    # every prefix is still valid
    counts = [1] * states
    for _ in range(t - 1, n):
        counts = [
            (counts[s >> 1] if pc[s] >= w else 0)
            + (counts[(s >> 1) + half] if pc[s] + 1 >= w else 0)
            for s in range(states)
        ]
    return sum(counts)


def _count_sec(length: int, w: int, n: int) -> int:
    if n % length:
        raise ValueError(
            f"sequence length {n} is not a multiple of the subblock length {length}"
        )
    # ones accumulated inside the current subblock -> count
    state = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = {}
        for ones, cnt in state.items():
            nxt[ones] = nxt.get(ones, 0) + cnt
            nxt[ones + 1] = nxt.get(ones + 1, 0) + cnt
        if (i + 1) % length == 0:
            carried = sum(cnt for ones, cnt in nxt.items() if ones >= w)
            nxt = {0: carried}
        state = nxt
    return sum(state.values())


def sets_equal(
    spec_a: ConstraintSpec,
    spec_b: ConstraintSpec,
    n: int,
    limit: int = DEFAULT_ENUM_LIMIT,
) -> bool:
    """Whether two constraints admit exactly the same length-n sequences."""
    return set(enumerate_sequences(spec_a, n, limit)) == set(
        enumerate_sequences(spec_b, n, limit)
    )


def adversarial_sequence(
    spec: ConstraintSpec, model: EnergyModel, repetitions: int = 1
) -> str:
    """A valid sequence built to drain the battery when the model is infeasible.

    The phase of the periodic pattern targets whichever feasibility condition
    fails: too-low starting charge is attacked zeros-first, a too-low weight
    or buffer is attacked ones-first so harvested energy overflows before the
    zeros arrive.  Raises NoWitnessError when every valid sequence is
    outage-free, since no witness can exist.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if isinstance(spec, RLL):
        if rll_feasible(spec.d, model):
            raise NoWitnessError(f"{spec} avoids outage under {model}")
        return ("0" + "1" * spec.d) * repetitions
    if isinstance(spec, SWC):
        if swc_feasible(spec.t, spec.w, model):
            raise NoWitnessError(f"{spec} avoids outage under {model}")
        ones_first = "1" * spec.w + "0" * (spec.t - spec.w)
        zeros_first = "0" * (spec.t - spec.w) + "1" * spec.w
        if spec.w < math.ceil(spec.t * model.b):
            return ones_first * repetitions
        return zeros_first * repetitions
    if isinstance(spec, SEC):
        if sec_feasible(spec.length, spec.w, model):
            raise NoWitnessError(f"{spec} avoids outage under {model}")
        ones_first = "1" * spec.w + "0" * (spec.length - spec.w)
        zeros_first = "0" * (spec.length - spec.w) + "1" * spec.w
        short_start = model.e_init < (spec.length - spec.w) * model.b
        rate_ok = spec.w >= math.ceil(spec.length * model.b)
        buffer_ok = model.e_max >= 2 * (spec.length - spec.w) * model.b
        if short_start and rate_ok and buffer_ok:
            return (zeros_first + ones_first) * repetitions
        return (ones_first + zeros_first) * repetitions
    raise TypeError(f"unknown constraint spec: {spec!r}")


def _check_bits(bits: str) -> None:
    if not isinstance(bits, str):
        raise TypeError("bit sequence must be a str of '0'/'1'")
    for ch in bits:
        if ch not in "01":
            raise ValueError(f"bit sequence may contain only '0' and '1', got {ch!r}")

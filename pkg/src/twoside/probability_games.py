"""Dice and coin games solved three ways: exact chains, series, simulation.

The exact values come from rational linear algebra or dynamic programming;
the series route produces a bracket (partial sum plus a proven tail bound)
that must contain the exact value; the Monte Carlo route is a seeded
splitmix64 simulation compared against the exact value on a 3-sigma soft
gate (WARN, not FAIL, between 3 and 4 sigma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .exact_core import Bracket, DomainError, root_bracket
from .rng import GAMMA, MASK64, SplitMix64
from .report import PASS, FAIL, WARN

__all__ = [
    "ModelError",
    "AbsorbingChain",
    "absorbing_chain_solve",
    "dice_chain",
    "dice_game",
    "dice_series_bracket",
    "coin_game_exact",
    "coin_game_pair",
    "coin_game_closed_form",
    "coin_game_series_partial",
    "coin_series_tail_bracket",
    "coin_series_index_report",
    "monte_carlo",
    "GameReport",
    "MonteCarloReport",
]


class ModelError(ValueError):
    """The chain description is inconsistent or absorption is unreachable."""


@dataclass(frozen=True)
class AbsorbingChain:
    """Finite chain with absorbing win/lose states and exact probabilities."""

    transitions: Mapping[str, tuple[tuple[Fraction, str], ...]]
    win: frozenset
    lose: frozenset

    def __post_init__(self):
        cleaned = {
            state: tuple((Fraction(p), target) for p, target in moves)
            for state, moves in self.transitions.items()
        }
        object.__setattr__(self, "transitions", cleaned)
        object.__setattr__(self, "win", frozenset(self.win))
        object.__setattr__(self, "lose", frozenset(self.lose))
        if self.win & self.lose:
            raise ModelError("win and lose sets overlap")
        absorbing = self.win | self.lose
        if absorbing & set(self.transitions):
            raise ModelError("absorbing states cannot have transitions")
        for state, moves in self.transitions.items():
            if sum(p for p, _ in moves) != 1:
                raise ModelError(f"probabilities at {state!r} do not sum to 1")
            if any(p < 0 for p, _ in moves):
                raise ModelError(f"negative probability at {state!r}")
            for _, target in moves:
                if target not in absorbing and target not in self.transitions:
                    raise ModelError(f"unknown target state {target!r}")

    def states(self) -> tuple:
        return tuple(self.transitions)


def absorbing_chain_solve(chain: AbsorbingChain) -> dict:
    """Exact win probability per transient state by Gaussian elimination."""
    transient = list(chain.transitions)
    index = {s: i for i, s in enumerate(transient)}
    size = len(transient)
    # (I - Q) p = r, where Q holds transient-to-transient mass and r the
    # one-step win mass.
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size
    for s, moves in chain.transitions.items():
        i = index[s]
        matrix[i][i] += 1
        for p, target in moves:
            if target in chain.win:
                rhs[i] += p
            elif target not in chain.lose:
                matrix[i][index[target]] -= p
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col] != 0), None)
        if pivot is None:
            raise ModelError("singular system: absorption unreachable")
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / matrix[col][col]
        matrix[col] = [v * inv for v in matrix[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b
                             for a, b in zip(matrix[r], matrix[col])]
                rhs[r] -= factor * rhs[col]
    return {s: rhs[index[s]] for s in transient}


def dice_chain() -> AbsorbingChain:
    """Start state S (first player rolls), C1 (second player rolls)."""
    sixth = Fraction(1, 6)
    return AbsorbingChain(
        transitions={
            "S": ((sixth, "A-wins"), (1 - sixth, "C1")),
            "C1": ((sixth, "B-wins"), (1 - sixth, "S")),
        },
        win={"A-wins"},
        lose={"B-wins"},
    )


def dice_series_bracket(terms: int) -> Bracket:
    """Partial sum of (1/6)(25/36)^k plus the exact geometric tail."""
    if terms < 0:
        raise DomainError("term count must be non-negative")
    ratio = Fraction(25, 36)
    partial = Fraction(0)
    power = Fraction(1)
    for _ in range(terms + 1):
        partial += Fraction(1, 6) * power
        power *= ratio
    tail = Fraction(1, 6) * power / (1 - ratio)
    return Bracket(partial, partial + tail)


# --- the n-th head coin game -----------------------------------------------------

def coin_game_exact(n: int) -> Fraction:
    """Probability the starter throws the n-th head, by backward DP.

    One fair flip per turn, alternating; with x the value after the next
    head, the flipper's win probability solves w = x/2 + (1 - w)/2.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    w = Fraction(2, 3)  # one head to go
    for _ in range(n - 1):
        w = (2 - w) / 3
    return w


def coin_game_pair(n: int) -> tuple[Fraction, Fraction]:
    """(starter, second player) win probabilities from the coupled system.

    Solves the flipper/waiter pair jointly at every head count, without
    using the single-variable recursion, so the two routes are independent.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    # With one head to go the flipper wins with 2/3; roles swap after every
    # flip, so each further head mixes the pair through (2a + b)/3.
    flipper, waiter = Fraction(2, 3), Fraction(1, 3)
    for _ in range(n - 1):
        flipper, waiter = ((2 * waiter + flipper) / 3,
                           (2 * flipper + waiter) / 3)
    return flipper, waiter


def coin_game_closed_form(n: int) -> Fraction:
    if n < 1:
        raise DomainError("n must be a positive integer")
    return Fraction(1, 2) * (1 + Fraction((-1) ** (n + 1), 3 ** n))


def coin_game_series_partial(n: int, l_start: int, l_max: int) -> Fraction:
    """Partial sum of C(2L, n-1) / 2^(2L+1) over l_start <= L <= l_max."""
    if l_start < 0 or l_max < l_start:
        raise DomainError("need 0 <= l_start <= l_max")
    total = Fraction(0)
    for level in range(l_start, l_max + 1):
        total += Fraction(math.comb(2 * level, n - 1), 2 ** (2 * level + 1))
    return total


def coin_series_tail_bracket(n: int, l_start: int, l_max: int) -> Bracket:
    """[partial, partial + tail bound] for the series from l_start.

    The term ratio (2L+1)(2L+2) / (4 (2L+1-m)(2L+2-m)) with m = n-1
    decreases in L, so once it is below 1 at L = l_max the remaining terms
    are dominated by a geometric series with that ratio.
    """
    m = n - 1
    if l_max < max(n, l_start):
        l_max = max(n, l_start)
    partial = coin_game_series_partial(n, l_start, l_max)
    two_l = 2 * l_max
    ratio = Fraction((two_l + 1) * (two_l + 2),
                     4 * (two_l + 1 - m) * (two_l + 2 - m))
    if ratio >= 1:
        raise DomainError("l_max too small to bound the tail")
    first_omitted = Fraction(math.comb(2 * (l_max + 1), m),
                             2 ** (2 * (l_max + 1) + 1))
    return Bracket(partial, partial + first_omitted / (1 - ratio))


@dataclass(frozen=True)
class SeriesIndexReport:
    n: int
    exact: Fraction
    brackets: Mapping[int, Bracket]
    matches: Mapping[int, bool]


def coin_series_index_report(n: int, candidates: Sequence[int] = (0, 1),
                             l_max: int = 60) -> SeriesIndexReport:
    """Which lower summation index makes the series meet the DP value.

    Nothing is silently corrected: the report carries one rigorous bracket
    per candidate start index and the exact value either lies inside it or
    provably does not.
    """
    exact = coin_game_exact(n)
    brackets = {}
    matches = {}
    for l_start in candidates:
        bracket = coin_series_tail_bracket(n, l_start, l_max)
        brackets[l_start] = bracket
        matches[l_start] = bracket.contains(exact)
    return SeriesIndexReport(n, exact, brackets, matches)


# --- seeded Monte Carlo ------------------------------------------------------------

_DICE_LIMIT = (1 << 64) - ((1 << 64) % 6)


def _mix64_np(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def _draws_np(states, counters):
    return _mix64_np(states + counters * np.uint64(GAMMA))


def monte_carlo_dice(trials: int, seed: int) -> int:
    """Starter wins in the first-six dice game; returns the hit count.

    Trial t reads its own splitmix64 substream seeded with seed XOR t; die
    rolls reject raw 64-bit draws at or above the top multiple of six.
    """
    if trials < 1:
        raise DomainError("trials must be positive")
    states = np.uint64(seed & MASK64) ^ np.arange(trials, dtype=np.uint64)
    counters = np.zeros(trials, dtype=np.uint64)
    active = np.arange(trials)
    hits = 0
    starter_turn = True
    with np.errstate(over="ignore"):
        while active.size:
            counters[active] += np.uint64(1)
            draws = _draws_np(states[active], counters[active])
            bad = draws >= np.uint64(_DICE_LIMIT)
            while bad.any():
                idx = active[bad]
                counters[idx] += np.uint64(1)
                draws[bad] = _draws_np(states[idx], counters[idx])
                bad = draws >= np.uint64(_DICE_LIMIT)
            six = (draws % np.uint64(6)) == np.uint64(5)
            if starter_turn:
                hits += int(np.count_nonzero(six))
            active = active[~six]
            starter_turn = not starter_turn
    return hits


def monte_carlo_coin(n: int, trials: int, seed: int) -> int:
    """Starter wins in the n-th head coin game; one bit per flip."""
    if trials < 1:
        raise DomainError("trials must be positive")
    if n < 1:
        raise DomainError("n must be a positive integer")
    states = np.uint64(seed & MASK64) ^ np.arange(trials, dtype=np.uint64)
    counters = np.zeros(trials, dtype=np.uint64)
    heads = np.zeros(trials, dtype=np.int64)
    active = np.arange(trials)
    hits = 0
    starter_turn = True
    with np.errstate(over="ignore"):
        while active.size:
            counters[active] += np.uint64(1)
            draws = _draws_np(states[active], counters[active])
            is_head = (draws >> np.uint64(63)) == np.uint64(1)
            heads[active[is_head]] += 1
            done = heads[active] == n
            if starter_turn:
                hits += int(np.count_nonzero(done))
            active = active[~done]
            starter_turn = not starter_turn
    return hits


def reference_monte_carlo_dice(trials: int, seed: int) -> int:
    """Pure-Python restatement of monte_carlo_dice, for crosschecking."""
    hits = 0
    for t in range(trials):
        rng = SplitMix64((seed & MASK64) ^ t)
        starter_turn = True
        while True:
            if rng.below(6) == 5:
                hits += starter_turn
                break
            starter_turn = not starter_turn
    return hits


def reference_monte_carlo_coin(n: int, trials: int, seed: int) -> int:
    hits = 0
    for t in range(trials):
        rng = SplitMix64((seed & MASK64) ^ t)
        heads = 0
        starter_turn = True
        while True:
            heads += rng.coin_bit()
            if heads == n:
                hits += starter_turn
                break
            starter_turn = not starter_turn
    return hits


@dataclass(frozen=True)
class MonteCarloReport:
    trials: int
    hits: int
    estimate: Fraction
    three_sigma: Bracket
    deviation: Fraction
    status: str


def _gate(exact: Fraction, hits: int, trials: int) -> MonteCarloReport:
    estimate = Fraction(hits, trials)
    deviation = abs(estimate - exact)
    variance = exact * (1 - exact) / trials
    sigma = root_bracket(variance, 2, Fraction(1, 10 ** 12))
    three_sigma = sigma.scale(3)
    if deviation <= three_sigma.lo:
        status = PASS
    elif deviation <= sigma.scale(4).hi:
        status = WARN
    else:
        status = FAIL
    return MonteCarloReport(trials, hits, estimate, three_sigma, deviation,
                            status)


def monte_carlo(game: str, trials: int, seed: int, n: int = 1) -> MonteCarloReport:
    """Run the named game and gate the estimate against its exact value."""
    if game == "dice":
        exact = absorbing_chain_solve(dice_chain())["S"]
        hits = monte_carlo_dice(trials, seed)
    elif game == "coin":
        exact = coin_game_exact(n)
        hits = monte_carlo_coin(n, trials, seed)
    else:
        raise DomainError(f"unknown game {game!r}")
    return _gate(exact, hits, trials)


@dataclass(frozen=True)
class GameReport:
    exact: Fraction
    series_bracket: Bracket
    monte_carlo: MonteCarloReport | None

    def consistent(self) -> bool:
        return self.series_bracket.contains(self.exact)


def dice_game(terms: int = 40, trials: int = 0, seed: int = 42) -> GameReport:
    """Exact 6/11 by chain solve, series bracket, optional simulation."""
    exact = absorbing_chain_solve(dice_chain())["S"]
    series = dice_series_bracket(terms)
    mc = _gate(exact, monte_carlo_dice(trials, seed), trials) if trials else None
    return GameReport(exact, series, mc)


def coin_game(n: int, terms: int = 60, trials: int = 0,
              seed: int = 42) -> GameReport:
    """Exact DP value with the (index-0) series bracket and optional MC."""
    exact = coin_game_exact(n)
    series = coin_series_tail_bracket(n, 0, terms)
    mc = _gate(exact, monte_carlo_coin(n, trials, seed), trials) if trials else None
    return GameReport(exact, series, mc)

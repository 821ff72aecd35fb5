"""Finite strategic games and logical games over a standard algebra.

Strategic games follow the usual normal form: players 1..n, strategies
identified with 0..|S_i|-1, and exact rational payoffs for every profile.
A logical game instead gives each player a block of propositional variables,
a finite set of value tuples she may assign to them, and a payoff formula
evaluated in the chosen algebra.  Strategy sets are stored sorted
lexicographically, so a strategy's index doubles as its lexicographic rank.

The module also owns the canonical JSON file formats for strategic games,
logical games, and mixed profiles.  All values are immutable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import formula as fm
from .algebra import Algebra, catalog_lookup, format_rational, parse_rational
from .errors import InputError, SemanticError

Profile = tuple[int, ...]
ValueTuple = tuple[Fraction, ...]


@dataclass(frozen=True)
class StrategicGame:
    """Normal-form game with rational payoffs, total over all profiles."""

    strategy_names: tuple[tuple[str, ...], ...]
    payoffs: dict[Profile, tuple[Fraction, ...]]

    def __post_init__(self):
        n = self.n_players
        if n == 0:
            raise SemanticError("a game needs at least one player")
        expected = set(itertools.product(*[range(c) for c in self.strategy_counts]))
        if set(self.payoffs) != expected:
            raise SemanticError("payoffs must be total over all strategy profiles")
        for profile, values in self.payoffs.items():
            if len(values) != n:
                raise SemanticError(f"profile {profile}: need one payoff per player")

    @property
    def n_players(self) -> int:
        return len(self.strategy_names)

    @property
    def strategy_counts(self) -> tuple[int, ...]:
        return tuple(len(names) for names in self.strategy_names)

    def profiles(self) -> Iterator[Profile]:
        return itertools.product(*[range(c) for c in self.strategy_counts])

    def payoff(self, profile: Profile, player: int) -> Fraction:
        return self.payoffs[tuple(profile)][player]

    def payoff_values(self, player: Optional[int] = None) -> tuple[Fraction, ...]:
        """Sorted distinct payoff values, of one player or of all players."""
        values = set()
        for vec in self.payoffs.values():
            if player is None:
                values.update(vec)
            else:
                values.add(vec[player])
        return tuple(sorted(values))


def make_game(counts: Sequence[int], payoff_fn, names=None) -> StrategicGame:
    """Build a game from per-player strategy counts and profile -> payoff vector."""
    if names is None:
        names = tuple(tuple(f"s{k}" for k in range(c)) for c in counts)
    payoffs = {}
    for profile in itertools.product(*[range(c) for c in counts]):
        payoffs[profile] = tuple(Fraction(v) for v in payoff_fn(profile))
    return StrategicGame(tuple(tuple(ns) for ns in names), payoffs)


@dataclass(frozen=True)
class LogicalGame:
    """Game whose strategies assign algebra values to controlled variables."""

    algebra: Algebra
    variables: tuple[tuple[str, ...], ...]
    strategies: tuple[tuple[ValueTuple, ...], ...]
    payoff_formulas: tuple[fm.Formula, ...]

    def __post_init__(self):
        n = len(self.variables)
        if not (n == len(self.strategies) == len(self.payoff_formulas)):
            raise SemanticError("variables, strategies, payoff_formulas: one entry per player")
        flat = [v for block in self.variables for v in block]
        if len(flat) != len(set(flat)):
            raise SemanticError("controlled variable blocks must be pairwise disjoint")
        object.__setattr__(
            self, "strategies",
            tuple(tuple(sorted(set(map(tuple, block)))) for block in self.strategies))
        for i, block in enumerate(self.strategies):
            if not block:
                raise SemanticError(f"player {i + 1} has an empty strategy set")
            for tup in block:
                if len(tup) != len(self.variables[i]):
                    raise SemanticError(
                        f"player {i + 1}: strategy {tup} does not match |V_i|")
                for component in tup:
                    if not self.algebra.contains(component):
                        raise SemanticError(
                            f"strategy component {component} outside the domain of "
                            f"{self.algebra.id}")
        allowed = set(flat)
        for i, phi in enumerate(self.payoff_formulas):
            extra = set(fm.free_variables(phi)) - allowed
            if extra:
                raise SemanticError(
                    f"payoff formula of player {i + 1} uses unknown variables {sorted(extra)}")

    @property
    def n_players(self) -> int:
        return len(self.variables)

    @property
    def all_variables(self) -> tuple[str, ...]:
        return tuple(v for block in self.variables for v in block)

    def profiles(self) -> Iterator[tuple[ValueTuple, ...]]:
        return itertools.product(*self.strategies)

    def assignment(self, profile: Sequence[ValueTuple]) -> dict[str, Fraction]:
        out = {}
        for block, tup in zip(self.variables, profile):
            out.update(zip(block, tup))
        return out

    def strategy_index(self, player: int, strategy: ValueTuple) -> int:
        """Lexicographic rank of a strategy tuple in the player's ordered set."""
        try:
            return self.strategies[player].index(tuple(strategy))
        except ValueError:
            raise SemanticError(
                f"{tuple(strategy)} is not a strategy of player {player + 1}") from None


def payoff(lg: LogicalGame, profile: Sequence[ValueTuple]) -> tuple[Fraction, ...]:
    """Per-player formula values at the strategy profile."""
    for i, tup in enumerate(profile):
        if tuple(tup) not in lg.strategies[i]:
            raise SemanticError(f"{tuple(tup)} is not a strategy of player {i + 1}")
    e = lg.assignment(profile)
    return tuple(fm.evaluate(phi, lg.algebra, e) for phi in lg.payoff_formulas)


def relevant_elements(lg: LogicalGame) -> tuple[Fraction, ...]:
    """Sorted algebra values that some player can actually assign."""
    found = {x for block in lg.strategies for tup in block for x in tup}
    return tuple(sorted(found))


def has_pseudo_char(alg: Algebra, a: Fraction) -> bool:
    """Catalog knowledge: does a one-variable formula pin the value `a`?"""
    if not alg.contains(a):
        return False
    if a in (Fraction(0), Fraction(1)) or alg.has_constant(a):
        return True
    return alg.family == "mv"


@dataclass(frozen=True)
class GameFlags:
    basic: bool
    finite: bool
    full: Optional[bool]       # None: undecidable over an infinite domain
    expressible: bool
    weakly_expressible: bool


def classify(lg: LogicalGame) -> GameFlags:
    basic = all(len(block) == 1 for block in lg.variables)
    relevant = relevant_elements(lg)
    expressible = all(lg.algebra.has_constant(a) for a in relevant)
    weakly = expressible or all(has_pseudo_char(lg.algebra, a) for a in relevant)
    if lg.algebra.is_finite:
        size = lg.algebra.chain + 1
        full = all(len(block) == size ** len(vs)
                   for block, vs in zip(lg.strategies, lg.variables))
    else:
        full = None
    return GameFlags(basic=basic, finite=True, full=full,
                     expressible=expressible, weakly_expressible=weakly)


def pure_equilibria_check(lg: LogicalGame, profile: Sequence[ValueTuple]) -> bool:
    """Exhaustive unilateral-deviation check at one profile."""
    profile = tuple(map(tuple, profile))
    current = payoff(lg, profile)
    for i in range(lg.n_players):
        for alternative in lg.strategies[i]:
            deviated = profile[:i] + (alternative,) + profile[i + 1:]
            if payoff(lg, deviated)[i] > current[i]:
                return False
    return True


def logical_to_strategic(lg: LogicalGame) -> StrategicGame:
    """Forget the logical structure: strategy ids are lexicographic ranks."""
    counts = [len(block) for block in lg.strategies]
    payoffs = {}
    for ids in itertools.product(*[range(c) for c in counts]):
        profile = tuple(lg.strategies[i][k] for i, k in enumerate(ids))
        payoffs[ids] = payoff(lg, profile)
    names = tuple(tuple(",".join(map(format_rational, tup)) or "()" for tup in block)
                  for block in lg.strategies)
    return StrategicGame(names, payoffs)


@dataclass(frozen=True)
class MixedProfile:
    """One probability vector per player, aligned with strategy indices."""

    probabilities: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for i, vector in enumerate(self.probabilities):
            if any(p < 0 for p in vector):
                raise SemanticError(f"player {i + 1}: negative probability")
            if sum(vector) != 1:
                raise SemanticError(
                    f"player {i + 1}: probabilities sum to {sum(vector)}, not 1")

    def prob(self, player: int, strategy: int) -> Fraction:
        return self.probabilities[player][strategy]

    def support(self, player: int) -> tuple[int, ...]:
        return tuple(k for k, p in enumerate(self.probabilities[player]) if p > 0)


def dirac(counts: Sequence[int], profile: Profile) -> MixedProfile:
    """The mixed profile concentrated at one pure profile."""
    return MixedProfile(tuple(
        tuple(Fraction(1) if k == profile[i] else Fraction(0) for k in range(c))
        for i, c in enumerate(counts)))


# --- file formats ------------------------------------------------------------

def game_to_json(game: StrategicGame) -> dict:
    return {
        "players": game.n_players,
        "strategies": [list(names) for names in game.strategy_names],
        "payoffs": [[format_rational(v) for v in game.payoffs[p]]
                    for p in game.profiles()],
    }


def game_from_json(doc: dict) -> StrategicGame:
    try:
        n = int(doc["players"])
        names = tuple(tuple(block) for block in doc["strategies"])
        rows = doc["payoffs"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad strategic-game document: {exc}") from None
    if len(names) != n:
        raise InputError("strategies must list one block per player")
    counts = [len(block) for block in names]
    profiles = list(itertools.product(*[range(c) for c in counts]))
    if len(rows) != len(profiles):
        raise InputError(f"expected {len(profiles)} payoff rows, got {len(rows)}")
    payoffs = {}
    for profile, row in zip(profiles, rows):
        if len(row) != n:
            raise InputError(f"payoff row for {profile} must have {n} entries")
        payoffs[profile] = tuple(parse_rational(v) for v in row)
    return StrategicGame(names, payoffs)


def lgame_to_json(lg: LogicalGame) -> dict:
    return {
        "algebra": lg.algebra.id,
        "variables": [list(block) for block in lg.variables],
        "strategies": [[[format_rational(x) for x in tup] for tup in block]
                       for block in lg.strategies],
        "payoff_formulas": [fm.to_text(phi) for phi in lg.payoff_formulas],
    }


def lgame_from_json(doc: dict) -> LogicalGame:
    try:
        alg = catalog_lookup(doc["algebra"])
        variables = tuple(tuple(block) for block in doc["variables"])
        strategies = tuple(
            tuple(tuple(parse_rational(x) for x in tup) for tup in block)
            for block in doc["strategies"])
        formulas = tuple(fm.parse(text) for text in doc["payoff_formulas"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad logical-game document: {exc}") from None
    return LogicalGame(alg, variables, strategies, formulas)


def profile_to_json(profile: MixedProfile) -> list[dict]:
    return [{str(k): format_rational(p) for k, p in enumerate(vector) if p != 0}
            for vector in profile.probabilities]


def profile_from_json(doc, counts: Sequence[int]) -> MixedProfile:
    if not isinstance(doc, list) or len(doc) != len(counts):
        raise InputError("mixed profile must list one map per player")
    vectors = []
    for i, (entry, count) in enumerate(zip(doc, counts)):
        vector = [Fraction(0)] * count
        for key, text in entry.items():
            k = int(key)
            if not 0 <= k < count:
                raise InputError(f"player {i + 1}: strategy id {k} out of range")
            vector[k] = parse_rational(text)
        vectors.append(tuple(vector))
    return MixedProfile(tuple(vectors))


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def dump_json(doc, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=2)
        handle.write("\n")

"""Compiling finite strategic games into logical games.

A representation consists of per-player bijections c_i from strategy ids to
value tuples and a strictly increasing payoff transform g with
f_i(s) = g(phi_i(c(s))) at every profile.  Affine g additionally preserves
mixed equilibria; a finite strictly increasing table suffices in general
because the payoff formulas only ever attain the anchor values.

The constructors mirror the standard recipes: binary-payoff games become
Boolean games over ceil(log2 |S_i|) variables per player, or basic games on
a Lukasiewicz chain, or anything in between given enough characterizable
elements.  Games with r rational payoff values compile into basic games over
the rational-constant Godel algebra with delta, over a finite Godel chain
with constants and delta, or over a prime Lukasiewicz chain (constant-free,
routing payoff values through the zeta gadget).  The fully general route
only assumes characteristic formulas for enough "strategy anchors" and truth
constants for enough "payoff anchors".

Payoff formulas come out as the literal disjunctive normal form over
characteristic conjuncts, without minimization; identical delta subformulas
are shared, so the DNF is compact as a DAG.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Union

from . import formula as fm
from .algebra import Algebra, catalog_lookup, format_rational, parse_rational
from .chars import characteristic, is_prime, zeta
from .errors import InputError, SemanticError
from .game import LogicalGame, StrategicGame, ValueTuple, payoff
from .formula import App, Const, Var, conj_all, disj_all


@dataclass(frozen=True)
class Affine:
    """g(x) = slope * x + shift with slope > 0."""

    slope: Fraction
    shift: Fraction

    def __post_init__(self):
        if self.slope <= 0:
            raise SemanticError("affine payoff transform needs a positive slope")

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.shift

    def inverse(self, y: Fraction) -> Fraction:
        return (y - self.shift) / self.slope


@dataclass(frozen=True)
class Table:
    """Finite strictly increasing map, defined only at its anchor points."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        xs = [x for x, _ in self.points]
        ys = [y for _, y in self.points]
        if sorted(set(xs)) != xs or sorted(set(ys)) != ys:
            raise SemanticError("table payoff transform must be strictly increasing")

    def __call__(self, x: Fraction) -> Fraction:
        for anchor, value in self.points:
            if anchor == x:
                return value
        raise SemanticError(f"payoff transform undefined at {x}")

    def inverse(self, y: Fraction) -> Fraction:
        for anchor, value in self.points:
            if value == y:
                return anchor
        raise SemanticError(f"payoff transform never attains {y}")

    def is_affine(self) -> bool:
        if len(self.points) < 3:
            return True
        (x0, y0), (x1, y1) = self.points[0], self.points[1]
        slope = (y1 - y0) / (x1 - x0)
        return all(y - y0 == slope * (x - x0) for x, y in self.points[2:])


Transform = Union[Affine, Table]


@dataclass(frozen=True)
class Representation:
    source: StrategicGame
    target: LogicalGame
    coding: tuple[tuple[ValueTuple, ...], ...]   # per player: strategy id -> tuple
    g: Transform

    def __post_init__(self):
        for i, table in enumerate(self.coding):
            if len(table) != self.source.strategy_counts[i]:
                raise SemanticError(f"player {i + 1}: coding must cover every strategy")
            if len(set(table)) != len(table) or set(table) != set(self.target.strategies[i]):
                raise SemanticError(
                    f"player {i + 1}: coding must be a bijection onto the target strategies")

    def encode(self, profile: Sequence[int]) -> tuple[ValueTuple, ...]:
        return tuple(self.coding[i][s] for i, s in enumerate(profile))

    def is_affine(self) -> bool:
        return isinstance(self.g, Affine) or self.g.is_affine()


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    affine: bool
    counterexample: Optional[tuple] = None     # (profile, player, expected, actual)
    message: str = ""

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        kind = "affine" if self.affine else "non-affine"
        if self.ok:
            return f"{status} ({kind} transform)"
        return f"{status}: {self.message}"


def verify_representation(rep: Representation) -> VerificationReport:
    """Exhaustively check f_i(s) = g(phi_i(c(s))) over all profiles and players."""
    affine = rep.is_affine()
    for profile in rep.source.profiles():
        encoded = rep.encode(profile)
        try:
            values = payoff(rep.target, encoded)
        except SemanticError as exc:
            return VerificationReport(False, affine, (profile, None, None, None),
                                      f"profile {profile}: {exc}")
        for i in range(rep.source.n_players):
            expected = rep.source.payoff(profile, i)
            try:
                actual = rep.g(values[i])
            except SemanticError as exc:
                return VerificationReport(False, affine, (profile, i, expected, None),
                                          f"profile {profile}, player {i + 1}: {exc}")
            if actual != expected:
                return VerificationReport(
                    False, affine, (profile, i, expected, actual),
                    f"profile {profile}, player {i + 1}: "
                    f"g(phi) = {actual} but f = {expected}")
    return VerificationReport(True, affine)


# --- helpers ------------------------------------------------------------------

def _binary_range(game: StrategicGame) -> tuple[Fraction, Fraction]:
    values = game.payoff_values()
    if len(values) != 2:
        raise SemanticError(f"payoff range must have exactly 2 values, found {len(values)}")
    return values[0], values[1]


def _digits(value: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(value % base)
        value //= base
    return tuple(reversed(out))


def _digit_width(count: int, base: int) -> int:
    width = 0
    while base ** width < count:
        width += 1
    return width


def _player_variables(game: StrategicGame, widths: Sequence[int]) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(f"v{i + 1}_{j + 1}" for j in range(widths[i]))
                 for i in range(game.n_players))


def _delta_table(alg, variables, coding) -> dict[tuple[str, Fraction], fm.Formula]:
    """Characteristic formulas instantiated per (variable, element), shared."""
    needed = sorted({x for block in coding for tup in block for x in tup})
    deltas = {x: characteristic(alg, x) for x in needed}
    table = {}
    for block in variables:
        for name in block:
            for x in needed:
                table[name, x] = fm.substitute(deltas[x], {"x": Var(name)})
    return table


def _profile_conjunct(variables, encoded, delta_at) -> fm.Formula:
    """/\\ over all players and digits of delta_{digit}(variable)."""
    parts = []
    for block, tup in zip(variables, encoded):
        for name, value in zip(block, tup):
            parts.append(delta_at[name, value])
    return conj_all(parts)


def _rational_payoff_setup(game: StrategicGame):
    values = game.payoff_values()
    if len(values) < 2:
        raise SemanticError("payoff transform needs at least 2 distinct payoff values")
    q = lcm(*[v.denominator for v in values])
    numerators = [v * q for v in values]
    return values, q, numerators


# --- binary-payoff constructors ------------------------------------------------

def represent_binary_boolean(game: StrategicGame) -> Representation:
    """Binary payoffs -> expressible Boolean game, ceil(log2 |S_i|) variables each."""
    a, b = _binary_range(game)
    alg = catalog_lookup("BOOL2")
    widths = [_digit_width(c, 2) for c in game.strategy_counts]
    variables = _player_variables(game, widths)
    coding = tuple(
        tuple(tuple(map(Fraction, _digits(s, 2, widths[i]))) for s in range(count))
        for i, count in enumerate(game.strategy_counts))
    delta_at = _delta_table(alg, variables, coding)
    formulas = []
    for i in range(game.n_players):
        winning = [
            _profile_conjunct(variables, [coding[k][s] for k, s in enumerate(profile)], delta_at)
            for profile in game.profiles() if game.payoff(profile, i) == b]
        formulas.append(disj_all(winning))
    target = LogicalGame(alg, variables, coding, tuple(formulas))
    return Representation(game, target, coding, Affine(b - a, a))


def represent_binary_chain(game: StrategicGame) -> Representation:
    """Binary payoffs -> basic weakly expressible game on the chain L_m."""
    a, b = _binary_range(game)
    m = max(game.strategy_counts) - 1
    if m < 1:
        raise SemanticError("chain representation needs a player with >= 2 strategies")
    alg = catalog_lookup("L_n", m)
    return _binary_on_algebra(game, alg, [Fraction(k, m) for k in range(m + 1)], a, b)


def represent_binary_general(game: StrategicGame, m: int, alg: Algebra,
                             elements: Optional[Sequence[Fraction]] = None) -> Representation:
    """Binary payoffs -> (m+1)-ary digit coding over any algebra providing
    m+1 distinct characterizable elements."""
    a, b = _binary_range(game)
    if m < 1:
        raise SemanticError("digit base m + 1 needs m >= 1")
    if elements is None:
        if alg.chain is None or alg.chain < m:
            raise SemanticError(f"{alg.id} does not supply {m + 1} default elements")
        elements = [Fraction(k, alg.chain) for k in range(m + 1)]
    elements = [Fraction(x) for x in elements]
    if len(elements) != m + 1 or len(set(elements)) != m + 1:
        raise SemanticError(f"need {m + 1} distinct elements, got {elements}")
    return _binary_on_algebra(game, alg, elements, a, b, base=m + 1)


def _binary_on_algebra(game, alg, elements, a, b, base=None) -> Representation:
    if base is None:
        base = len(elements)
        widths = [1] * game.n_players
    else:
        widths = [_digit_width(c, base) for c in game.strategy_counts]
    variables = _player_variables(game, widths)
    coding = tuple(
        tuple(tuple(elements[d] for d in _digits(s, base, widths[i])) for s in range(count))
        for i, count in enumerate(game.strategy_counts))
    delta_at = _delta_table(alg, variables, coding)
    formulas = []
    for i in range(game.n_players):
        winning = [
            _profile_conjunct(variables, [coding[k][s] for k, s in enumerate(profile)], delta_at)
            for profile in game.profiles() if game.payoff(profile, i) == b]
        formulas.append(disj_all(winning))
    target = LogicalGame(alg, variables, coding, tuple(formulas))
    return Representation(game, target, coding, Affine(b - a, a))


# --- rational-payoff constructors ----------------------------------------------

def _value_dnf(game: StrategicGame, alg: Algebra, variables, coding,
               value_formula) -> tuple[fm.Formula, ...]:
    """phi_i = \\/ over all profiles of (value_formula(i, s) /\\ profile conjunct)."""
    delta_at = _delta_table(alg, variables, coding)
    formulas = []
    for i in range(game.n_players):
        disjuncts = []
        for profile in game.profiles():
            encoded = [coding[k][s] for k, s in enumerate(profile)]
            conjunct = _profile_conjunct(variables, encoded, delta_at)
            disjuncts.append(App("and", (value_formula(i, profile), conjunct)))
        formulas.append(disj_all(disjuncts))
    return tuple(formulas)


def represent_rational_qg_delta(game: StrategicGame) -> Representation:
    """Rational payoffs -> basic expressible game over the rational-constant
    Godel algebra with delta."""
    values = game.payoff_values()
    if len(values) < 2:
        raise SemanticError("payoff transform needs at least 2 distinct payoff values")
    m = max(game.strategy_counts) - 1
    if m < 1:
        raise SemanticError("representation needs a player with >= 2 strategies")
    alg = catalog_lookup("STD_QG_DELTA")
    g = Affine(values[-1] - values[0], values[0])
    variables = _player_variables(game, [1] * game.n_players)
    coding = tuple(tuple((Fraction(s, m),) for s in range(count))
                   for count in game.strategy_counts)
    formulas = _value_dnf(game, alg, variables, coding,
                          lambda i, s: Const(g.inverse(game.payoff(s, i))))
    target = LogicalGame(alg, variables, coding, formulas)
    return Representation(game, target, coding, g)


def represent_rational_gmc_delta(game: StrategicGame, m: Optional[int] = None) -> Representation:
    """Rational payoffs p_j/q -> basic expressible game over the Godel chain
    G_m with constants and delta, g(x) = (m x + p_1)/q."""
    values, q, numerators = _rational_payoff_setup(game)
    span = int(numerators[-1] - numerators[0])
    bound = max(span, max(game.strategy_counts) - 1)
    if m is None:
        m = bound
    elif m < bound:
        raise SemanticError(f"chain size m = {m} below the bound {bound}")
    alg = catalog_lookup("G_n_C_DELTA", m)
    g = Affine(Fraction(m, q), Fraction(numerators[0], q))
    variables = _player_variables(game, [1] * game.n_players)
    coding = tuple(tuple((Fraction(s, m),) for s in range(count))
                   for count in game.strategy_counts)
    formulas = _value_dnf(game, alg, variables, coding,
                          lambda i, s: Const(g.inverse(game.payoff(s, i))))
    target = LogicalGame(alg, variables, coding, formulas)
    return Representation(game, target, coding, g)


def represent_rational_lm(game: StrategicGame, m: Optional[int] = None) -> Representation:
    """Rational payoffs p_j/q -> basic weakly expressible game on a prime
    chain L_m; payoff values enter through the zeta gadget, so no truth
    constants are needed."""
    values, q, numerators = _rational_payoff_setup(game)
    span = int(numerators[-1] - numerators[0])
    bound = max([span] + [c + 1 for c in game.strategy_counts])
    if m is None:
        m = bound
        while not is_prime(m):
            m += 1
    elif not is_prime(m):
        raise SemanticError(f"chain size m = {m} is not prime")
    elif m < bound:
        raise SemanticError(f"chain size m = {m} below the bound {bound}")
    alg = catalog_lookup("L_n", m)
    g = Affine(Fraction(m, q), Fraction(numerators[0], q))
    variables = _player_variables(game, [1] * game.n_players)
    coding = tuple(tuple((Fraction(s + 1, m),) for s in range(count))
                   for count in game.strategy_counts)
    zeta_at: dict[tuple, fm.Formula] = {}   # shared across disjuncts

    def value_formula(i, profile):
        anchor = Fraction(profile[i] + 1, m)
        target_value = g.inverse(game.payoff(profile, i))
        key = (i, anchor, target_value)
        if key not in zeta_at:
            zeta_at[key] = fm.substitute(zeta(m, anchor, target_value),
                                         {"x": Var(variables[i][0])})
        return zeta_at[key]

    formulas = _value_dnf(game, alg, variables, coding, value_formula)
    target = LogicalGame(alg, variables, coding, formulas)
    return Representation(game, target, coding, g)


def represent_general(game: StrategicGame, alg: Algebra,
                      anchors: Sequence[Fraction],
                      payoff_anchors: Sequence[Fraction]) -> Representation:
    """Any finite game -> basic weakly expressible game over `alg`, given
    characterizable strategy anchors and constant-bearing payoff anchors.
    The transform is a strictly increasing table, affine only by accident."""
    anchors = [Fraction(x) for x in anchors]
    if len(set(anchors)) != len(anchors):
        raise SemanticError("strategy anchors must be distinct")
    if len(anchors) < max(game.strategy_counts):
        raise SemanticError(
            f"need at least {max(game.strategy_counts)} strategy anchors, "
            f"got {len(anchors)}")
    values = game.payoff_values()
    bs = sorted(Fraction(x) for x in payoff_anchors)
    if len(set(bs)) != len(bs):
        raise SemanticError("payoff anchors must be distinct")
    if len(bs) < len(values):
        raise SemanticError(
            f"need at least {len(values)} payoff anchors, got {len(bs)}")
    for b in bs:
        if not alg.has_constant(b):
            raise SemanticError(f"{alg.id} has no truth constant for {b}")
    g = Table(tuple(zip(bs[:len(values)], values)))
    variables = _player_variables(game, [1] * game.n_players)
    coding = tuple(tuple((anchors[s],) for s in range(count))
                   for count in game.strategy_counts)
    formulas = _value_dnf(game, alg, variables, coding,
                          lambda i, s: Const(g.inverse(game.payoff(s, i))))
    target = LogicalGame(alg, variables, coding, formulas)
    return Representation(game, target, coding, g)


# --- serialization --------------------------------------------------------------

def representation_to_json(rep: Representation) -> dict:
    if isinstance(rep.g, Affine):
        g_doc = {"kind": "affine", "a": format_rational(rep.g.slope),
                 "b": format_rational(rep.g.shift)}
    else:
        g_doc = {"kind": "table",
                 "points": [[format_rational(x), format_rational(y)]
                            for x, y in rep.g.points]}
    return {
        "g": g_doc,
        "c": [[[format_rational(x) for x in tup] for tup in table]
              for table in rep.coding],
    }


def representation_from_json(doc: dict, source: StrategicGame,
                             target: LogicalGame) -> Representation:
    try:
        g_doc = doc["g"]
        if g_doc["kind"] == "affine":
            g = Affine(parse_rational(g_doc["a"]), parse_rational(g_doc["b"]))
        elif g_doc["kind"] == "table":
            g = Table(tuple((parse_rational(x), parse_rational(y))
                            for x, y in g_doc["points"]))
        else:
            raise InputError(f"unknown transform kind {g_doc['kind']!r}")
        coding = tuple(tuple(tuple(parse_rational(x) for x in tup) for tup in table)
                       for table in doc["c"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad representation document: {exc}") from None
    return Representation(source, target, coding, g)

"""Propositional encodings of pure and mixed Nash equilibria.

Pure equilibria: for each player i and each of her strategies, one conjunct
"payoff after switching to that strategy -> payoff as played"; since
implication hits 1 exactly on <=, the big conjunction gamma is satisfied by
a strategy profile iff no unilateral deviation profits.  Expressible games
substitute truth constants for the deviating strategy's values; weakly
expressible games route them through auxiliary variables q_a pinned to the
value a by pseudo-characteristic formulas.  An existence formula conjoins
gamma with a disjunction asserting that the variables spell out some
strategy profile, so it is satisfiable iff a pure equilibrium exists; for
full games the membership disjunction is redundant and dropped.

Mixed equilibria need truncated addition and product, i.e. an algebra
expanding the standard MV-algebra with the product connective.  One fresh
variable per (player, strategy) carries the probability; a partition-of-
unity formula is satisfied exactly by vectors summing to 1, and the expected
payoff of a player is the truncated sum over profiles of (payoff formula
with strategy constants substituted) * (product of the profile's probability
variables).  Because payoffs live in [0,1] and the profile probabilities sum
to 1, no truncation ever bites and the formula value equals the exact
real-arithmetic expectation.  Games over smaller algebras are first lifted
along a subreduct embedding into a catalog algebra that has the product and
the required truth constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import formula as fm
from .algebra import ONE, Algebra, catalog_lookup, format_rational, is_subreduct
from .chars import pseudo_char
from .errors import SemanticError
from .game import LogicalGame, MixedProfile, ValueTuple, classify, relevant_elements
from .formula import App, Const, Var, conj_all, disj_all, odot_all, oplus_all


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name = "_" + name
    return name


def _q_name(a: Fraction, taken: set[str]) -> str:
    return _fresh(f"q_{a.numerator}_{a.denominator}", taken)


@dataclass(frozen=True)
class PureNEEncoding:
    game: LogicalGame
    gamma: fm.Formula
    existence: fm.Formula
    aux_w: tuple[str, ...]
    aux_q: dict[Fraction, str]       # empty in the expressible variant
    variant: str                     # "EXPRESSIBLE" | "WEAKLY_EXPRESSIBLE"


def _gamma_conjuncts(lg: LogicalGame, plug) -> list[fm.Formula]:
    """One conjunct per (player, strategy): phi_i(plugged) -> phi_i(v)."""
    conjuncts = []
    for i, phi in enumerate(lg.payoff_formulas):
        names = lg.variables[i]
        for strategy in lg.strategies[i]:
            deviated = fm.substitute(phi, {name: plug(value)
                                           for name, value in zip(names, strategy)})
            conjuncts.append(App("imp", (deviated, phi)))
    return conjuncts


def _membership(lg: LogicalGame, taken: set[str]) -> fm.Formula:
    """\\/ over profiles s of /\\ chi_{s_i^j}(v_i^j): pins v to some profile."""
    chi_at: dict[tuple[str, Fraction], fm.Formula] = {}
    for block in lg.variables:
        for name in block:
            for a in relevant_elements(lg):
                chi_at[name, a] = pseudo_char(lg.algebra, a, name)
    disjuncts = []
    for profile in lg.profiles():
        parts = []
        for block, tup in zip(lg.variables, profile):
            parts.extend(chi_at[name, value] for name, value in zip(block, tup))
        disjuncts.append(conj_all(parts))
    return disj_all(disjuncts)


def build_gamma(lg: LogicalGame) -> PureNEEncoding:
    """Constant-substitution encoding; needs a truth constant per relevant element."""
    flags = classify(lg)
    if not flags.expressible:
        raise SemanticError(
            f"game over {lg.algebra.id} is not expressible; use build_gamma_weak")
    taken = set(lg.all_variables)
    aux_w = tuple(_fresh(f"w_{j + 1}", taken)
                  for j in range(max(len(b) for b in lg.variables)))
    gamma = conj_all(_gamma_conjuncts(lg, lambda value: Const(value)))
    existence = gamma if flags.full else App("and", (_membership(lg, taken), gamma))
    return PureNEEncoding(lg, gamma, existence, aux_w, {}, "EXPRESSIBLE")


def build_gamma_weak(lg: LogicalGame) -> PureNEEncoding:
    """Auxiliary-variable encoding; q_a variables play the role of constants."""
    flags = classify(lg)
    if not flags.weakly_expressible:
        raise SemanticError(f"game over {lg.algebra.id} is not weakly expressible")
    taken = set(lg.all_variables)
    aux_w = tuple(_fresh(f"w_{j + 1}", taken)
                  for j in range(max(len(b) for b in lg.variables)))
    taken.update(aux_w)
    aux_q = {}
    for a in relevant_elements(lg):
        aux_q[a] = _q_name(a, taken)
        taken.add(aux_q[a])
    chi_block = conj_all(pseudo_char(lg.algebra, a, aux_q[a])
                         for a in sorted(aux_q))
    body = conj_all(_gamma_conjuncts(lg, lambda value: Var(aux_q[value])))
    gamma = App("and", (chi_block, body))
    existence = gamma if flags.full else App("and", (_membership(lg, taken), gamma))
    return PureNEEncoding(lg, gamma, existence, aux_w, aux_q, "WEAKLY_EXPRESSIBLE")


def build_existence(lg: LogicalGame, enc: Optional[PureNEEncoding] = None) -> fm.Formula:
    """Formula satisfiable iff the game has a pure Nash equilibrium."""
    if enc is None:
        enc = build_encoding(lg)
    return enc.existence


def build_encoding(lg: LogicalGame) -> PureNEEncoding:
    """Constant route when available, otherwise the auxiliary-variable route."""
    flags = classify(lg)
    if flags.expressible:
        return build_gamma(lg)
    return build_gamma_weak(lg)


def satisfies_gamma(enc: PureNEEncoding, profile: Sequence[ValueTuple]) -> bool:
    """Evaluate gamma at the profile (q_a pinned to a in the weak variant)."""
    assignment = enc.game.assignment(profile)
    for a, name in enc.aux_q.items():
        assignment[name] = a
    return fm.evaluate(enc.gamma, enc.game.algebra, assignment) == ONE


def decide_pure_ne(lg: LogicalGame,
                   enc: Optional[PureNEEncoding] = None
                   ) -> tuple[list[tuple[ValueTuple, ...]], bool]:
    """All gamma-satisfying strategy profiles, plus the SAT verdict.

    Enumerating the strategy space is complete: the existence formula's
    membership disjunct confines satisfying assignments to profiles.
    """
    if enc is None:
        enc = build_encoding(lg)
    found = [profile for profile in lg.profiles() if satisfies_gamma(enc, profile)]
    return sorted(found), bool(found)


# --- mixed equilibria ---------------------------------------------------------

def build_prob_distr(variables: Sequence[str]) -> fm.Formula:
    """Partition-of-unity formula: satisfied iff the variables sum to exactly 1.

    For a single variable this degenerates to the variable itself (forced
    to 1); the general shape needs at least two summands.
    """
    names = [Var(v) for v in variables]
    if not names:
        raise SemanticError("a probability block needs at least one variable")
    if len(names) == 1:
        return names[0]
    total = oplus_all(names)
    caps = [App("imp", (oplus_all(names[:i] + names[i + 1:]), App("neg", (p,))))
            for i, p in enumerate(names)]
    return conj_all([total] + caps)


@dataclass(frozen=True)
class MixedNEEncoding:
    game: LogicalGame
    algebra: Algebra                              # expands STD_PL
    prob_vars: tuple[tuple[str, ...], ...]        # per player, lexicographic
    prob_distr: tuple[fm.Formula, ...]
    expected: tuple[fm.Formula, ...]
    expected_dev: tuple[tuple[fm.Formula, ...], ...]
    full: fm.Formula

    def assignment(self, profile: MixedProfile) -> dict[str, Fraction]:
        out = {}
        for i, block in enumerate(self.prob_vars):
            if len(block) != len(profile.probabilities[i]):
                raise SemanticError(
                    f"player {i + 1}: profile has {len(profile.probabilities[i])} "
                    f"entries for {len(block)} strategies")
            out.update(zip(block, profile.probabilities[i]))
        return out


def lift_algebra_for_mixed(lg: LogicalGame) -> Algebra:
    """Smallest catalog expansion of the standard PL-algebra that contains
    the game's algebra as a subreduct and a constant per relevant element.
    A game already over a product algebra keeps its own algebra."""
    candidates = [lg.algebra] + [catalog_lookup(name) for name in
                                 ("STD_PL", "STD_PL_DELTA", "STD_QPL_DELTA")]
    for candidate in candidates:
        if "odot" not in candidate.ops or candidate.family != "mv":
            continue
        if not is_subreduct(lg.algebra, candidate):
            continue
        if all(candidate.has_constant(a) for a in relevant_elements(lg)):
            return candidate
    raise SemanticError(
        f"no catalog product-algebra expansion accommodates {lg.algebra.id}")


def build_mixed_encoding(lg: LogicalGame, alg: Optional[Algebra] = None) -> MixedNEEncoding:
    if alg is None:
        alg = lift_algebra_for_mixed(lg)
    else:
        if "odot" not in alg.ops:
            raise SemanticError(f"{alg.id} lacks the product connective")
        if not is_subreduct(lg.algebra, alg):
            raise SemanticError(f"{lg.algebra.id} is not a subreduct of {alg.id}")
        if not all(alg.has_constant(a) for a in relevant_elements(lg)):
            raise SemanticError(f"{alg.id} lacks constants for the relevant elements")
    taken = set(lg.all_variables)
    prob_vars = []
    for i, block in enumerate(lg.strategies):
        names = tuple(_fresh(f"p_{i + 1}__{rank}", taken) for rank in range(len(block)))
        taken.update(names)
        prob_vars.append(names)
    prob_vars = tuple(prob_vars)

    substituted = {}   # profile of ranks -> payoff formulas with constants plugged in
    for ranks in itertools.product(*[range(len(b)) for b in lg.strategies]):
        values = {}
        for i, rank in enumerate(ranks):
            values.update(zip(lg.variables[i], lg.strategies[i][rank]))
        substituted[ranks] = tuple(fm.substitute_values(phi, values)
                                   for phi in lg.payoff_formulas)

    n = lg.n_players
    expected = []
    expected_dev = []
    for i in range(n):
        terms = [App("odot", (substituted[ranks][i],
                              odot_all(Var(prob_vars[j][ranks[j]]) for j in range(n))))
                 for ranks in sorted(substituted)]
        expected.append(oplus_all(terms))
        deviations = []
        for a_rank in range(len(lg.strategies[i])):
            dev_terms = [
                App("odot", (substituted[ranks][i],
                             odot_all(Var(prob_vars[j][ranks[j]])
                                      for j in range(n) if j != i)))
                for ranks in sorted(substituted) if ranks[i] == a_rank]
            deviations.append(oplus_all(dev_terms))
        expected_dev.append(tuple(deviations))

    prob_distr = tuple(build_prob_distr(block) for block in prob_vars)
    player_conjuncts = []
    for i in range(n):
        implications = [App("imp", (dev, expected[i])) for dev in expected_dev[i]]
        player_conjuncts.append(conj_all([prob_distr[i]] + implications))
    return MixedNEEncoding(lg, alg, prob_vars, prob_distr, tuple(expected),
                           tuple(expected_dev), conj_all(player_conjuncts))


def build_expected_payoff(lg: LogicalGame, player: int,
                          alg: Optional[Algebra] = None) -> fm.Formula:
    """E_i over the probability variables, strategy constants substituted."""
    return build_mixed_encoding(lg, alg).expected[player]


def check_mixed_ne(lg: LogicalGame, profile: MixedProfile,
                   alg: Optional[Algebra] = None,
                   enc: Optional[MixedNEEncoding] = None,
                   ) -> tuple[bool, list[tuple[str, Fraction]]]:
    """Evaluate the mixed-equilibrium formula at a rational profile.

    Returns the verdict (formula value 1) and a trace of conjunct values.
    """
    if enc is None:
        enc = build_mixed_encoding(lg, alg)
    assignment = enc.assignment(profile)
    trace = []
    for i in range(lg.n_players):
        trace.append((f"probdistr_{i + 1}",
                      fm.evaluate(enc.prob_distr[i], enc.algebra, assignment)))
        trace.append((f"expected_{i + 1}",
                      fm.evaluate(enc.expected[i], enc.algebra, assignment)))
        for rank, dev in enumerate(enc.expected_dev[i]):
            conjunct = App("imp", (dev, enc.expected[i]))
            trace.append((f"dev_{i + 1}_{rank}",
                          fm.evaluate(conjunct, enc.algebra, assignment)))
    value = fm.evaluate(enc.full, enc.algebra, assignment)
    trace.append(("formula", value))
    return value == ONE, trace


def format_trace(trace) -> str:
    return "\n".join(f"{key} {format_rational(value)}" for key, value in trace)

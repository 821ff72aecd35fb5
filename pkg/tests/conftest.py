"""Shared fixtures: the seeded RNG and the random-game battery.

Every randomized test draws from an RNG seeded by --seed (fixed default),
so the whole suite is reproducible, and the battery of random games is
built once and shared between the representation, encoding, and acceptance
tests.
"""

import itertools
import random
from fractions import Fraction

import pytest

from mvgames import App, Const, LogicalGame, StrategicGame, Var, catalog_lookup

DEFAULT_SEED = 20260810

PAYOFF_POOL = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2),
               Fraction(1), Fraction(3, 2), Fraction(2)]


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for all randomized property tests")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


def random_counts(rng, max_players=3):
    n = rng.choice([2, 2, 2, 3]) if max_players >= 3 else 2
    # 2-player games reach the |S_i| = 4 bound; 3-player ones stay smaller
    # to keep the profile spaces (and the gamma evaluations) desk-sized.
    pool = [1, 2, 2, 2, 3, 3, 4] if n == 2 else [1, 2, 2, 2, 3, 3]
    counts = [rng.choice(pool) for _ in range(n)]
    if max(counts) < 2:
        counts[rng.randrange(n)] = 2
    return counts


def _fill_payoffs(rng, counts, pool, distinct_needed):
    while True:
        payoffs = {}
        seen = set()
        for profile in itertools.product(*[range(c) for c in counts]):
            row = tuple(rng.choice(pool) for _ in counts)
            payoffs[profile] = row
            seen.update(row)
        if len(seen) >= distinct_needed:
            names = tuple(tuple(f"s{k}" for k in range(c)) for c in counts)
            return StrategicGame(names, payoffs)


def random_rational_game(rng) -> StrategicGame:
    """Small game with 2 to 5 distinct rational payoff values."""
    counts = random_counts(rng)
    pool = rng.sample(PAYOFF_POOL, rng.randint(2, 5))
    return _fill_payoffs(rng, counts, pool, 2)


def random_binary_game(rng) -> StrategicGame:
    """Small game whose payoffs take exactly two values a < b."""
    counts = random_counts(rng)
    pool = sorted(rng.sample(PAYOFF_POOL, 2))
    return _fill_payoffs(rng, counts, pool, 2)


def random_fraction(rng, max_den=6) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)


def random_distribution(rng, count) -> tuple[Fraction, ...]:
    """Exact probability vector; occasionally drops strategies from support."""
    weights = [Fraction(rng.randint(1, 6)) for _ in range(count)]
    if count > 1 and rng.random() < 0.4:
        weights[rng.randrange(count)] = Fraction(0)
    if sum(weights) == 0:
        weights[0] = Fraction(1)
    total = sum(weights)
    return tuple(w / total for w in weights)


_FORMULA_OPS = ["and", "or", "imp", "neg", "and_strong", "oplus", "ominus"]


def random_formula(rng, variables, depth=3, ops=_FORMULA_OPS, constants=True):
    if depth == 0 or rng.random() < 0.25:
        if constants and rng.random() < 0.3:
            return Const(random_fraction(rng, 4))
        return Var(rng.choice(variables))
    op = rng.choice(ops)
    arity = 1 if op in ("neg", "delta") else 2
    args = tuple(random_formula(rng, variables, depth - 1, ops, constants)
                 for _ in range(arity))
    return App(op, args)


def random_logical_game(rng, algebra_id="STD_QPL_DELTA") -> LogicalGame:
    """Random expressible logical game over a product algebra."""
    alg = catalog_lookup(algebra_id)
    n = 2 if rng.random() < 0.8 else 3
    variables = tuple((f"v{i + 1}",) for i in range(n))
    names = [f"v{i + 1}" for i in range(n)]
    strategies = []
    for _ in range(n):
        size = rng.randint(2, 3)
        block = set()
        while len(block) < size:
            block.add((random_fraction(rng, 4),))
        strategies.append(tuple(sorted(block)))
    ops = _FORMULA_OPS + ["odot", "delta"]
    formulas = tuple(random_formula(rng, names, depth=3, ops=ops) for _ in range(n))
    return LogicalGame(alg, variables, tuple(strategies), formulas)


@pytest.fixture(scope="session")
def battery(seed):
    """200 seeded (rational game, binary game) pairs shared across tests."""
    rng = random.Random(seed)
    return [(random_rational_game(rng), random_binary_game(rng))
            for _ in range(200)]


@pytest.fixture(scope="session")
def battery_representations(battery):
    """Every constructor applied to every battery game where its
    preconditions hold; shared input of the representation and encoding
    acceptance criteria."""
    from mvgames import (represent_binary_boolean, represent_binary_chain,
                         represent_binary_general, represent_general,
                         represent_rational_gmc_delta, represent_rational_lm,
                         represent_rational_qg_delta)
    chain2 = catalog_lookup("L_n", 2)
    chain5c = catalog_lookup("L_n_C", 5)
    anchors = [Fraction(k, 5) for k in range(4)]
    payoff_anchors = [Fraction(k, 5) for k in range(6)]
    out = []
    for rational, binary in battery:
        out.append(("ab_i", represent_binary_boolean(binary)))
        out.append(("ab_ii", represent_binary_chain(binary)))
        out.append(("ab_iii", represent_binary_general(binary, 2, chain2)))
        out.append(("vi", represent_rational_qg_delta(rational)))
        out.append(("vi_gmc", represent_rational_gmc_delta(rational)))
        out.append(("vi_lm", represent_rational_lm(rational)))
        out.append(("vii", represent_general(rational, chain5c, anchors,
                                             payoff_anchors)))
    return out

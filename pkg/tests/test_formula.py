"""Formula grammar, printer round-trips, and compositional semantics."""

import random
from fractions import Fraction

import pytest

from mvgames import (App, Const, Var, apply, catalog_lookup, evaluate,
                     free_variables, parse, substitute, to_text)
from mvgames.errors import SemanticError
from mvgames.formula import ParseError, substitute_values
from conftest import random_formula, random_fraction

STD_QL = catalog_lookup("STD_QL")
STD_QPL_DELTA = catalog_lookup("STD_QPL_DELTA")


def test_parse_basic_shapes():
    f = parse(r"(v1 -> ~v2) \/ (~v1 -> v2)")
    assert f == App("or", (App("imp", (Var("v1"), App("neg", (Var("v2"),)))),
                           App("imp", (App("neg", (Var("v1"),)), Var("v2")))))
    g = parse(r"c(1/2) + (c(1/2) /\ v1)")
    assert g == App("oplus", (Const(Fraction(1, 2)),
                              App("and", (Const(Fraction(1, 2)), Var("v1")))))


def test_parse_precedence_and_associativity():
    assert parse(r"a -> b -> c") == parse(r"a -> (b -> c)")
    assert parse(r"a - b + c") == parse(r"(a - b) + c")
    assert parse(r"a \/ b /\ c") == parse(r"a \/ (b /\ c)")
    assert parse(r"a /\ b -> c") == parse(r"(a /\ b) -> c")
    assert parse(r"~a & b") == parse(r"(~a) & b")
    assert parse(r"D a * b") == parse(r"(D a) * b")
    assert parse("0") == Const(Fraction(0))
    assert parse("c(1)") == Const(Fraction(1))


def test_parse_whitespace_insensitive():
    assert parse("v1/\\v2") == parse("  v1   /\\   v2 ")


@pytest.mark.parametrize("text", ["v1 & &", "(v1", "v1 )", "", "c(3/2)",
                                  "c(1/2", "2", "v1 ~ v2", "# nope"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse("v1 /\\\n  & v2")
    assert info.value.line == 2
    assert info.value.column == 3


def test_print_parse_round_trip(seed):
    rng = random.Random(seed)
    names = ["v1", "v2", "w"]
    ops = ["and", "or", "imp", "imp_pi", "neg", "and_strong", "oplus",
           "ominus", "odot", "delta"]
    for _ in range(200):
        f = random_formula(rng, names, depth=4, ops=ops)
        text = to_text(f)
        again = parse(text)
        assert again == f                 # parse . print = identity on ASTs
        assert to_text(again) == text     # print . parse = identity on canonical text


def test_evaluate_nt_payoff_formula():
    from mvgames import new_technology
    bundle = new_technology(Fraction(1))
    phi1 = bundle.logical.payoff_formulas[0]
    alg = bundle.logical.algebra
    one, zero = Fraction(1), Fraction(0)
    assert evaluate(phi1, alg, {"v1": one, "v2": zero, "v3": zero}) == 1
    assert evaluate(phi1, alg, {"v1": zero, "v2": one, "v3": one}) == 0
    assert evaluate(phi1, alg, {"v1": zero, "v2": zero, "v3": zero}) == Fraction(1, 2)


def test_evaluate_imp_reflexive_on_godel(seed):
    rng = random.Random(seed)
    f = parse("v -> v")
    alg = catalog_lookup("STD_G")
    for _ in range(100):
        assert evaluate(f, alg, {"v": random_fraction(rng, 30)}) == 1


def test_evaluate_errors():
    with pytest.raises(SemanticError):
        evaluate(parse("v"), STD_QL, {})
    with pytest.raises(SemanticError):
        evaluate(parse("c(1/3)"), catalog_lookup("L_4"), {})
    with pytest.raises(SemanticError):
        evaluate(parse("v * w"), STD_QL, {"v": Fraction(1), "w": Fraction(0)})
    with pytest.raises(SemanticError):
        evaluate(parse("v"), catalog_lookup("L_4"), {"v": Fraction(1, 3)})


def test_negation_expansion_on_godel():
    # ~ is not primitive in Godel algebras; it evaluates as x -> 0.
    alg = catalog_lookup("STD_G")
    assert evaluate(parse("~v"), alg, {"v": Fraction(1, 2)}) == 0
    assert evaluate(parse("~v"), alg, {"v": Fraction(0)}) == 1
    with pytest.raises(SemanticError):
        evaluate(parse("v + w"), alg, {"v": Fraction(0), "w": Fraction(0)})


def test_free_variables_order():
    assert free_variables(parse(r"v2 /\ v1 /\ v2")) == ["v2", "v1"]
    assert free_variables(parse("c(1/2)")) == []
    assert free_variables(parse(r"(x -> y) & (z \/ x)")) == ["x", "y", "z"]


def test_locality(seed):
    rng = random.Random(seed)
    for _ in range(100):
        f = random_formula(rng, ["a", "b"], depth=3)
        env = {"a": random_fraction(rng, 6), "b": random_fraction(rng, 6)}
        extended = dict(env, c=random_fraction(rng, 6))
        assert evaluate(f, STD_QL, env) == evaluate(f, STD_QL, extended)


def test_compositionality(seed):
    rng = random.Random(seed)
    for _ in range(100):
        f = random_formula(rng, ["a", "b"], depth=2)
        g = random_formula(rng, ["a", "b"], depth=2)
        env = {"a": random_fraction(rng, 6), "b": random_fraction(rng, 6)}
        for op in ("and", "or", "imp", "and_strong", "oplus", "ominus", "odot"):
            composed = App(op, (f, g))
            assert evaluate(composed, STD_QPL_DELTA, env) == apply(
                STD_QPL_DELTA, op,
                [evaluate(f, STD_QPL_DELTA, env), evaluate(g, STD_QPL_DELTA, env)])


def test_substitution_examples():
    f = parse("v1 + v2")
    assert to_text(substitute(f, {"v1": Const(Fraction(1, 2))})) == "(c(1/2) + v2)"
    assert substitute(f, {}) is f
    assert substitute(f, {"v3": Var("v4")}) == f


def test_substitution_lemma(seed):
    # e(f[v := psi]) = e[v := e(psi)](f), checked on random formulas.
    rng = random.Random(seed)
    for _ in range(150):
        f = random_formula(rng, ["v", "w"], depth=3)
        psi = random_formula(rng, ["v", "w"], depth=2)
        env = {"v": random_fraction(rng, 6), "w": random_fraction(rng, 6)}
        left = evaluate(substitute(f, {"v": psi}), STD_QL, env)
        right = evaluate(f, STD_QL, dict(env, v=evaluate(psi, STD_QL, env)))
        assert left == right


def test_substitute_values_checks_range():
    with pytest.raises(SemanticError):
        substitute_values(parse("v"), {"v": Fraction(3, 2)})

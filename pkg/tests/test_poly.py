import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from horoflex.poly import (
    Derivation,
    Polynomial,
    PolynomialSyntaxError,
    compose_substitutions,
    constant,
    derivation_apply,
    divide,
    divide_exact,
    exp_lnd,
    is_locally_nilpotent_bounded,
    parse_polynomial,
    preserves_hypersurface,
    variable,
)

X, Y, Z = variable("x"), variable("y"), variable("z")


def random_poly(rng, names=("x", "y"), max_terms=4, max_deg=3, max_coef=5):
    p = constant(0)
    for _ in range(rng.randint(1, max_terms)):
        term = constant(rng.randint(-max_coef, max_coef))
        for name in names:
            term = term * variable(name) ** rng.randint(0, max_deg)
        p = p + term
    return p


def to_sympy(p):
    expr = sympy.Integer(0)
    syms = [sympy.Symbol(v) for v in p.variables]
    for exps, coef in p.terms.items():
        term = sympy.Rational(coef.numerator, coef.denominator)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.expand(expr)


# ---------------------------------------------------------------------------
# arithmetic


def test_basic_arithmetic():
    p = (X + Y) ** 2
    assert p == X**2 + 2 * X * Y + Y**2
    assert (X + Y) * (X - Y) == X**2 - Y**2
    assert (p - p).is_zero


def test_constant_and_scalar_mixing():
    assert 2 * X + X == 3 * X
    assert X * Fraction(1, 2) * 2 == X
    assert (X + 1) - 1 == X
    assert constant(Fraction(3, 4)).constant_value() == Fraction(3, 4)


def test_variable_universes_merge():
    p = X + variable("a")
    assert p.variables == ("a", "x")
    q = p * Z
    assert q.variables == ("a", "x", "z")


def test_polynomial_identity_examples():
    left = (X + Y + Z) ** 3
    right = sum(
        (
            X**3,
            Y**3,
            Z**3,
            3 * X**2 * Y,
            3 * X**2 * Z,
            3 * Y**2 * X,
            3 * Y**2 * Z,
            3 * Z**2 * X,
            3 * Z**2 * Y,
            6 * X * Y * Z,
        ),
        constant(0),
    )
    assert left == right


def test_power_rejects_negative():
    with pytest.raises(ValueError):
        X ** (-1)


def test_partial_and_evaluate():
    p = X**2 * Y + 3 * Y
    assert p.partial("x") == 2 * X * Y
    assert p.partial("y") == X**2 + 3
    assert p.evaluate({"x": 2, "y": Fraction(1, 3)}) == Fraction(4, 3) + 1


def test_substitute():
    p = X**2 + Y
    image = p.substitute({"x": Y, "y": constant(1)})
    assert image == Y**2 + 1
    # untouched variables stay themselves
    assert (X + Z).substitute({"x": Y}) == Y + Z


# ---------------------------------------------------------------------------
# parsing and printing


def test_parse_examples():
    assert parse_polynomial("x^2 - 2*x + 1") == (X - 1) ** 2
    assert parse_polynomial("-x*y") == -(X * Y)
    assert parse_polynomial("3/4*x^2*y - 2") == Fraction(3, 4) * X**2 * Y - 2
    assert parse_polynomial("(x + y)^2") == (X + Y) ** 2
    assert parse_polynomial("7") == constant(7)


def test_parse_errors():
    for bad in ["", "x +", "x^-1", "2x", "x**2", "(x", "x/y", "^2"]:
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial(bad)


def test_str_is_reparseable_frozen():
    p = -(X**2) * Y + Fraction(1, 2) * Z - 3
    assert parse_polynomial(str(p)) == p
    assert str(constant(0)) == "0"
    assert str(X - Y) in {"x - y"}


# ---------------------------------------------------------------------------
# division


def test_divide_exact_determinant_pullback():
    x1, x2, x3, x4 = (variable(f"x{i}") for i in (1, 2, 3, 4))
    a, b, g, d = (variable(n) for n in ("alpha", "beta", "gamma", "delta"))
    det = x1 * x4 - x2 * x3
    pulled = det.substitute(
        {
            "x1": a * x1 + b * x2,
            "x2": g * x1 + d * x2,
            "x3": a * x3 + b * x4,
            "x4": g * x3 + d * x4,
        }
    )
    assert divide_exact(pulled, det) == a * d - b * g


def test_divide_remainder_invariants():
    dividend = X**2 * Y + X * Y**2 + Y**2
    divisors = [X * Y - 1, Y**2 - 1]
    quotients, remainder = divide(dividend, divisors)
    recomposed = remainder
    for q, d in zip(quotients, divisors):
        recomposed = recomposed + q * d
    assert recomposed == dividend
    assert remainder == X + Y + 1


def test_divide_exact_returns_none_on_failure():
    assert divide_exact(X**2 + 1, X + 1) is None
    assert divide_exact(X**2 - 1, X + 1) == X - 1


# ---------------------------------------------------------------------------
# derivations


def test_derivation_images_and_apply():
    d = Derivation({"x": Y, "y": constant(0)})
    assert derivation_apply(d, X**2) == 2 * X * Y
    assert derivation_apply(d, X * Y) == Y**2
    assert derivation_apply(d, constant(5)).is_zero


def test_leibniz_rule_frozen():
    d = Derivation({"x": X * Y, "y": Z, "z": constant(1)})
    p, q = X + Z**2, Y * X
    left = derivation_apply(d, p * q)
    right = derivation_apply(d, p) * q + p * derivation_apply(d, q)
    assert left == right


def test_nilpotency_certificate():
    d = Derivation({"x": Y, "y": constant(0)})
    check = is_locally_nilpotent_bounded(d, 5)
    assert check.certified
    assert check.order == 2
    assert dict(check.variable_orders) == {"x": 2, "y": 1}


def test_nilpotency_fails_for_euler():
    d = Derivation({"x": X})
    check = is_locally_nilpotent_bounded(d, 6)
    assert not check.certified


def test_exp_lnd_translation():
    d = Derivation({"x": Y, "y": constant(0)})
    e = exp_lnd(d, "t")
    assert e["x"] == X + variable("t") * Y
    assert e["y"] == Y


def test_exp_lnd_quadratic():
    d = Derivation({"x": Y**2, "y": constant(0)})
    e = exp_lnd(d, "s")
    assert e["x"] == X + variable("s") * Y**2


def test_exp_lnd_rejects_uncertified():
    with pytest.raises(ValueError):
        exp_lnd(Derivation({"x": X}), "t")
    with pytest.raises(ValueError):
        exp_lnd(Derivation({"x": Y, "y": constant(0)}), "x")


def test_exp_lnd_group_law_frozen():
    d = Derivation({"x": Y**2, "y": Z, "z": constant(0)})
    et = exp_lnd(d, "t")
    es = exp_lnd(d, "s")
    composed = compose_substitutions(et, es)
    er = exp_lnd(d, "r")
    ts = variable("t") + variable("s")
    for v, img in er.items():
        assert composed[v] == img.substitute({"r": ts})


def test_compose_substitutions_order():
    first = {"x": X + 1}
    second = {"x": X**2}
    # apply first, then second composed as second after first: x -> (x+1)^2
    assert compose_substitutions(second, first)["x"] == (X + 1) ** 2


# ---------------------------------------------------------------------------
# hypersurface preservation


def test_preserves_hypersurface_simple():
    eq = X * Y - 1
    check = preserves_hypersurface(eq, {"x": 2 * X, "y": Fraction(1, 2) * Y})
    assert check.preserved
    assert check.unit == constant(1)
    assert check.residual.is_zero


def test_preserves_hypersurface_failure():
    eq = X * Y - 1
    check = preserves_hypersurface(eq, {"x": X + 1})
    assert not check.preserved
    assert not check.residual.is_zero


# ---------------------------------------------------------------------------
# properties and sympy cross-checks


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_poly(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_product_matches_sympy(seed):
    rng = random.Random(seed)
    a, b = random_poly(rng), random_poly(rng)
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_str_roundtrip_random(seed):
    rng = random.Random(seed)
    p = random_poly(rng, names=("x", "y", "z"))
    assert parse_polynomial(str(p)) == p


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_division_recomposition_random(seed):
    rng = random.Random(seed)
    dividend = random_poly(rng, names=("x", "y"))
    divisors = [random_poly(rng, names=("x", "y"), max_terms=2) for _ in range(2)]
    divisors = [d for d in divisors if not d.is_zero]
    if not divisors:
        return
    quotients, remainder = divide(dividend, divisors)
    recomposed = remainder
    for q, d in zip(quotients, divisors):
        recomposed = recomposed + q * d
    assert recomposed == dividend


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_leibniz_rule_random(seed):
    rng = random.Random(seed)
    d = Derivation(
        {
            "x": random_poly(rng, names=("x", "y"), max_terms=2, max_deg=2),
            "y": random_poly(rng, names=("x", "y"), max_terms=2, max_deg=2),
        }
    )
    p, q = random_poly(rng), random_poly(rng)
    assert derivation_apply(d, p * q) == derivation_apply(d, p) * q + p * derivation_apply(d, q)

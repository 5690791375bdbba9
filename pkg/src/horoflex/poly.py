"""Exact multivariate polynomial arithmetic over the rationals.

Terms map exponent tuples to nonzero Fraction coefficients; the variable
universe of a polynomial is kept sorted by name so that the graded
lexicographic order (and with it every division result) is independent of
construction order.  Also provides derivations, a bounded local-nilpotency
certificate, exponentials of certified derivations, and the divisibility
check used to verify that a substitution preserves a hypersurface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

Scalar = Union[int, Fraction]
PolyLike = Union["Polynomial", int, Fraction]


class PolynomialSyntaxError(ValueError):
    """Text that does not match the documented polynomial grammar."""


def _grlex(e: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(e), e)


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[tuple[int, ...], Scalar],
    ):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        order = tuple(sorted(names))
        perm = [names.index(v) for v in order]
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            e = tuple(exps)
            if len(e) != len(names):
                raise ValueError("exponent tuple length does not match variables")
            for x in e:
                if not isinstance(x, int) or x < 0:
                    raise ValueError(f"exponents must be nonnegative integers, got {x!r}")
            c = Fraction(coeff)
            if c == 0:
                continue
            key = tuple(e[i] for i in perm)
            c = clean.get(key, Fraction(0)) + c
            if c == 0:
                clean.pop(key, None)
            else:
                clean[key] = c
        object.__setattr__(self, "variables", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def _make(variables: tuple[str, ...], terms: dict[tuple[int, ...], Fraction]) -> "Polynomial":
        # internal fast path: variables already sorted, terms already clean
        p = object.__new__(Polynomial)
        object.__setattr__(p, "variables", variables)
        object.__setattr__(p, "terms", {e: c for e, c in terms.items() if c != 0})
        return p

    # -- basic queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (exponent, coefficient) under graded lex; error on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def coefficient(self, exps: Mapping[str, int]) -> Fraction:
        key = tuple(exps.get(v, 0) for v in self.variables)
        for v in exps:
            if v not in self.variables and exps[v] > 0:
                return Fraction(0)
        return self.terms.get(key, Fraction(0))

    # -- universe alignment ----------------------------------------------------

    def on_universe(self, universe: tuple[str, ...]) -> dict[tuple[int, ...], Fraction]:
        """Re-key the terms onto a larger sorted variable universe."""
        if universe == self.variables:
            return dict(self.terms)
        pos = []
        for v in self.variables:
            try:
                pos.append(universe.index(v))
            except ValueError:
                raise ValueError(f"universe is missing variable {v!r}") from None
        width = len(universe)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            key = [0] * width
            for p, x in zip(pos, e):
                key[p] = x
            out[tuple(key)] = c
        return out

    @staticmethod
    def _merge_universe(a: "Polynomial", b: "Polynomial") -> tuple[str, ...]:
        if a.variables == b.variables:
            return a.variables
        return tuple(sorted(set(a.variables) | set(b.variables)))

    # -- arithmetic --------------------------------------------------------------

    @staticmethod
    def _coerce(value: PolyLike) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not polynomial coefficients")
        if isinstance(value, (int, Fraction)):
            return constant(value)
        raise TypeError(f"cannot treat {value!r} as a polynomial")

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial._coerce(other)
        universe = Polynomial._merge_universe(self, other)
        terms = self.on_universe(universe)
        for e, c in other.on_universe(universe).items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial._make(universe, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Polynomial":
        return self + (-Polynomial._coerce(other))

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return Polynomial._coerce(other) + (-self)

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial._coerce(other)
        universe = Polynomial._merge_universe(self, other)
        a = self.on_universe(universe)
        b = other.on_universe(universe)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return Polynomial._make(universe, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        universe = Polynomial._merge_universe(self, other)
        return self.on_universe(universe) == other.on_universe(universe)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        items = []
        for e, c in self.terms.items():
            support = tuple(
                (v, x) for v, x in zip(self.variables, e) if x
            )
            items.append((support, c))
        return hash(frozenset(items))

    # -- calculus and substitution -------------------------------------------

    def partial(self, var: str) -> "Polynomial":
        if var not in self.variables:
            return constant(0)
        idx = self.variables.index(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            key = tuple(x - 1 if i == idx else x for i, x in enumerate(e))
            out[key] = out.get(key, Fraction(0)) + c * e[idx]
        return Polynomial._make(self.variables, out)

    def substitute(self, assignment: Mapping[str, PolyLike]) -> "Polynomial":
        """Ring homomorphism determined by the assignment.

        Variables absent from the assignment map to themselves; the variable
        universe of the result is whatever the images introduce.
        """
        images = {v: Polynomial._coerce(img) for v, img in assignment.items()}
        powers: dict[str, list[Polynomial]] = {}

        def power(v: str, k: int) -> Polynomial:
            base = images.get(v)
            if base is None:
                base = variable(v)
                images[v] = base
            cache = powers.setdefault(v, [constant(1)])
            while len(cache) <= k:
                cache.append(cache[-1] * base)
            return cache[k]

        total = constant(0)
        for e, c in self.terms.items():
            term = constant(c)
            for v, x in zip(self.variables, e):
                if x:
                    term = term * power(v, x)
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Value at a rational point; raises if a needed variable is missing."""
        return self.substitute(dict(point)).constant_value()

    # -- printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            factors = []
            for v, x in zip(self.variables, e):
                if x == 1:
                    factors.append(v)
                elif x > 1:
                    factors.append(f"{v}^{x}")
            if not factors:
                body = str(abs(c))
            else:
                mon = "*".join(factors)
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        if text.startswith("+ "):
            return text[2:]
        return "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def variable(name: str) -> Polynomial:
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        raise ValueError(f"not a valid variable name: {name!r}")
    return Polynomial._make((name,), {(1,): Fraction(1)})


def constant(value: Scalar) -> Polynomial:
    c = Fraction(value)
    if c == 0:
        return Polynomial._make((), {})
    return Polynomial._make((), {(): c})


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse the plain-text polynomial syntax.

    Grammar (also documented for the command line):

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := base ('^' natural)?
        base   := rational | identifier | '(' expr ')'

    where a rational is ``digits`` or ``digits/digits`` (the slash is only
    allowed inside a numeric literal).
    """
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise PolynomialSyntaxError(
                    f"unexpected character {text[pos:].strip()[0]!r} at position {pos}"
                )
            break
        pos = m.end()
        for kind in ("number", "name", "op"):
            value = m.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
    index = 0

    def peek() -> Optional[tuple[str, str]]:
        return tokens[index] if index < len(tokens) else None

    def take(expected: Optional[str] = None) -> tuple[str, str]:
        nonlocal index
        if index >= len(tokens):
            raise PolynomialSyntaxError("unexpected end of input")
        tok = tokens[index]
        if expected is not None and tok[1] != expected:
            raise PolynomialSyntaxError(f"expected {expected!r}, got {tok[1]!r}")
        index += 1
        return tok

    def parse_expr() -> Polynomial:
        sign = 1
        nxt = peek()
        if nxt is not None and nxt[1] in "+-":
            take()
            sign = -1 if nxt[1] == "-" else 1
        total = parse_term() * sign
        while True:
            nxt = peek()
            if nxt is None or nxt[1] not in "+-":
                return total
            take()
            part = parse_term()
            total = total + (part if nxt[1] == "+" else -part)

    def parse_term() -> Polynomial:
        result = parse_factor()
        while True:
            nxt = peek()
            if nxt is None or nxt[1] != "*":
                return result
            take()
            result = result * parse_factor()

    def parse_factor() -> Polynomial:
        base = parse_base()
        nxt = peek()
        if nxt is not None and nxt[1] == "^":
            take()
            kind, value = take()
            if kind != "number" or "/" in value:
                raise PolynomialSyntaxError("exponent must be a natural number")
            return base ** int(value)
        return base

    def parse_base() -> Polynomial:
        kind, value = take()
        if kind == "number":
            return constant(Fraction(value))
        if kind == "name":
            return variable(value)
        if value == "(":
            inner = parse_expr()
            take(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected token {value!r}")

    result = parse_expr()
    if index != len(tokens):
        raise PolynomialSyntaxError(f"trailing input near {tokens[index][1]!r}")
    return result


# ---------------------------------------------------------------------------
# division


def divide(
    dividend: Polynomial, divisors: Sequence[Polynomial]
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: dividend = sum(q_i * divisors_i) + remainder.

    Divisors are tried in order against the graded-lex leading term; no
    remainder term is divisible by any divisor's leading term.  When the
    divisors' leading terms are pairwise coprime the zero-remainder test is a
    complete ideal-membership test (the only situation this package relies
    on).
    """
    divisors = list(divisors)
    if not divisors or any(d.is_zero for d in divisors):
        raise ZeroDivisionError("division by the zero polynomial")
    universe = dividend.variables
    for d in divisors:
        universe = tuple(sorted(set(universe) | set(d.variables)))
    work = dividend.on_universe(universe)
    divisor_data = []
    for d in divisors:
        terms = d.on_universe(universe)
        lead = max(terms, key=_grlex)
        divisor_data.append((terms, lead, terms[lead]))
    quotients: list[dict[tuple[int, ...], Fraction]] = [{} for _ in divisors]
    remainder: dict[tuple[int, ...], Fraction] = {}
    while work:
        e = max(work, key=_grlex)
        c = work[e]
        for qi, (terms, lead, lead_c) in enumerate(divisor_data):
            if all(x >= y for x, y in zip(e, lead)):
                shift = tuple(x - y for x, y in zip(e, lead))
                factor = c / lead_c
                quotients[qi][shift] = quotients[qi].get(shift, Fraction(0)) + factor
                for de, dc in terms.items():
                    key = tuple(x + y for x, y in zip(shift, de))
                    s = work.get(key, Fraction(0)) - factor * dc
                    if s == 0:
                        work.pop(key, None)
                    else:
                        work[key] = s
                break
        else:
            remainder[e] = c
            del work[e]
    return (
        [Polynomial._make(universe, q) for q in quotients],
        Polynomial._make(universe, remainder),
    )


def divide_exact(dividend: Polynomial, divisor: Polynomial) -> Optional[Polynomial]:
    """Quotient when the division is exact, None when it is not."""
    quotients, remainder = divide(dividend, [divisor])
    if remainder.is_zero:
        return quotients[0]
    return None


# ---------------------------------------------------------------------------
# derivations


class Derivation:
    """Derivation of a polynomial ring, given by images of variables.

    Variables missing from ``images`` are sent to zero; the extension to all
    polynomials is forced by additivity and the Leibniz rule.
    """

    __slots__ = ("images",)

    def __init__(self, images: Mapping[str, PolyLike]):
        cleaned = {}
        for v, img in sorted(images.items()):
            if not isinstance(v, str):
                raise TypeError("derivation keys must be variable names")
            cleaned[v] = Polynomial._coerce(img)
        object.__setattr__(self, "images", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Derivation is immutable")

    def image(self, var: str) -> Polynomial:
        return self.images.get(var, constant(0))

    def apply(self, p: PolyLike) -> Polynomial:
        p = Polynomial._coerce(p)
        total = constant(0)
        for v in p.variables:
            img = self.images.get(v)
            if img is None or img.is_zero:
                continue
            total = total + p.partial(v) * img
        return total

    __call__ = apply

    def closure_variables(self) -> tuple[str, ...]:
        out = set(self.images)
        for img in self.images.values():
            out.update(img.variables)
        return tuple(sorted(out))


def derivation_apply(d: Derivation, p: PolyLike) -> Polynomial:
    return d.apply(p)


@dataclass(frozen=True)
class NilpotencyCheck:
    """Outcome of the bounded local-nilpotency search.

    ``certified`` means every variable in the derivation's closure is killed
    by at most ``order`` applications, which suffices for local nilpotency on
    the whole ring.  ``certified=False`` only means the bound was too small:
    it is evidence of nothing.
    """

    certified: bool
    order: Optional[int]
    bound: int
    variable_orders: tuple[tuple[str, int], ...]


def is_locally_nilpotent_bounded(d: Derivation, bound: int) -> NilpotencyCheck:
    """Search, per variable, for the least k <= bound with d^k(variable) = 0."""
    if not isinstance(bound, int) or bound < 1:
        raise ValueError("bound must be a positive integer")
    per_var = []
    worst = 0
    for v in d.closure_variables():
        cur = variable(v)
        k = None
        for step in range(1, bound + 1):
            cur = d.apply(cur)
            if cur.is_zero:
                k = step
                break
        if k is None:
            return NilpotencyCheck(False, None, bound, ())
        per_var.append((v, k))
        worst = max(worst, k)
    return NilpotencyCheck(True, worst, bound, tuple(per_var))


def exp_lnd(d: Derivation, parameter: str, bound: int = 8) -> dict[str, Polynomial]:
    """Substitution map of the one-parameter group generated by the derivation.

    Each variable maps to the finite series sum_k parameter^k d^k(v) / k!; the
    derivation must certify locally nilpotent at the given bound, otherwise
    this raises.  The parameter must be a fresh variable name.
    """
    check = is_locally_nilpotent_bounded(d, bound)
    if not check.certified:
        raise ValueError(
            f"derivation is not certified locally nilpotent within bound {bound}"
        )
    names = d.closure_variables()
    if parameter in names:
        raise ValueError(f"parameter {parameter!r} collides with a ring variable")
    t = variable(parameter)
    out = {}
    for v in names:
        term = variable(v)
        total = term
        factorial = 1
        k = 0
        while not term.is_zero:
            k += 1
            factorial *= k
            term = d.apply(term)
            if term.is_zero:
                break
            total = total + t**k * term * Fraction(1, factorial)
        out[v] = total
    return out


def compose_substitutions(
    second: Mapping[str, PolyLike], first: Mapping[str, PolyLike]
) -> dict[str, Polynomial]:
    """Substitution map of 'apply first, then second' (as maps of points).

    Coordinate functions pull back contravariantly, so each image of the
    second map is rewritten through the first.
    """
    out = {v: Polynomial._coerce(img).substitute(first) for v, img in second.items()}
    for v, img in first.items():
        out.setdefault(v, Polynomial._coerce(img))
    return out


# ---------------------------------------------------------------------------
# hypersurface preservation


@dataclass(frozen=True)
class HypersurfaceCheck:
    """Certificate that a substitution maps (F) into (F) modulo a relation.

    ``preserved`` asserts F∘action = unit * F + modulus_quotient * modulus as
    an exact identity (without modulus, F∘action = unit * F).  ``residual`` is
    the reduction remainder and is zero exactly when ``preserved`` holds.
    """

    preserved: bool
    unit: Polynomial
    modulus_quotient: Optional[Polynomial]
    residual: Polynomial


def preserves_hypersurface(
    equation: Polynomial,
    action: Mapping[str, PolyLike],
    modulus: Optional[Polynomial] = None,
) -> HypersurfaceCheck:
    """Check that a substitution preserves the hypersurface of ``equation``.

    The pullback of the equation is reduced by the modulus first (when given)
    and then by the equation itself; a zero remainder certifies preservation
    and the quotients are returned for independent re-checking.  The test is
    complete whenever the leading terms of modulus and equation are coprime,
    which holds for every check this package performs.
    """
    if equation.is_zero:
        raise ValueError("the zero polynomial does not define a hypersurface")
    pulled = equation.substitute(action)
    if modulus is not None and modulus.is_zero:
        raise ValueError("the modulus must be nonzero")
    divisors = [modulus, equation] if modulus is not None else [equation]
    quotients, remainder = divide(pulled, divisors)
    recomposed = remainder
    for q, dv in zip(quotients, divisors):
        recomposed = recomposed + q * dv
    if recomposed != pulled:
        raise AssertionError("division identity failed to recompose")
    unit = quotients[-1]
    modulus_quotient = quotients[0] if modulus is not None else None
    return HypersurfaceCheck(remainder.is_zero, unit, modulus_quotient, remainder)

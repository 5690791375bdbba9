"""Diagonal multiplicative group actions with an optional cyclic twist.

An action scales each variable by t^weight and by a fixed root of unity
raised to the cyclic weight; a monomial transforms by the sum of its
exponent-weighted weights.  Everything here is exact integer arithmetic on
exponents, so invariance checks are decidable term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .poly import Polynomial


@dataclass(frozen=True)
class DiagonalTorusAction:
    """Diagonal action: variable i gets weight weights[i] and, modulo
    cyclic_order, the residue cyclic_weights[i]."""

    variables: tuple[str, ...]
    weights: tuple[int, ...]
    cyclic_order: int = 1
    cyclic_weights: tuple[int, ...] = ()

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable is required")
        if not isinstance(self.cyclic_order, int) or self.cyclic_order < 1:
            raise ValueError("cyclic_order must be a positive integer")
        cyc = self.cyclic_weights
        if not cyc:
            cyc = (0,) * len(self.variables)
        if len(cyc) != len(self.variables):
            raise ValueError("one cyclic weight per variable is required")
        object.__setattr__(
            self, "cyclic_weights", tuple(c % self.cyclic_order for c in cyc)
        )

    def weight_of(self, var: str) -> int:
        return self.weights[self.variables.index(var)]


@dataclass(frozen=True)
class MonomialWeightReport:
    exponents: tuple[int, ...]
    gm_weight: int
    cyclic_residue: int


def monomial_weight(
    action: DiagonalTorusAction,
    exponents: Union[Sequence[int], Mapping[str, int]],
) -> MonomialWeightReport:
    """Total weight and cyclic residue of one monomial under the action."""
    if isinstance(exponents, Mapping):
        for v in exponents:
            if v not in action.variables and exponents[v]:
                raise ValueError(f"unknown variable {v!r}")
        exps = tuple(exponents.get(v, 0) for v in action.variables)
    else:
        exps = tuple(exponents)
        if len(exps) != len(action.variables):
            raise ValueError("exponent tuple length does not match the action")
    for x in exps:
        if not isinstance(x, int) or x < 0:
            raise ValueError("exponents must be nonnegative integers")
    weight = sum(x * w for x, w in zip(exps, action.weights))
    residue = sum(x * c for x, c in zip(exps, action.cyclic_weights)) % action.cyclic_order
    return MonomialWeightReport(exps, weight, residue)


def _term_data(action: DiagonalTorusAction, p: Polynomial):
    for v in p.variables:
        if v not in action.variables:
            if any(e[p.variables.index(v)] for e in p.terms):
                raise ValueError(f"unknown variable {v!r}")
    index = [action.variables.index(v) if v in action.variables else None
             for v in p.variables]
    for e in p.terms:
        exps = [0] * len(action.variables)
        for pos, x in zip(index, e):
            if pos is not None:
                exps[pos] = x
        yield tuple(exps)


def is_invariant(action: DiagonalTorusAction, p: Polynomial) -> bool:
    """True when every term has weight zero and cyclic residue zero."""
    for exps in _term_data(action, p):
        report = monomial_weight(action, exps)
        if report.gm_weight != 0 or report.cyclic_residue != 0:
            return False
    return True


def semi_invariant_weight(
    action: DiagonalTorusAction, p: Polynomial
) -> Union[tuple[int, int], None]:
    """Common (weight, residue) of all terms.

    None when the terms disagree, and also for the zero polynomial, which
    determines no weight at all.
    """
    seen = None
    for exps in _term_data(action, p):
        report = monomial_weight(action, exps)
        pair = (report.gm_weight, report.cyclic_residue)
        if seen is None:
            seen = pair
        elif seen != pair:
            return None
    return seen


def commutes(a: DiagonalTorusAction, b: DiagonalTorusAction) -> bool:
    """Diagonal actions always commute; this guards future non-diagonal kinds."""
    if not isinstance(a, DiagonalTorusAction) or not isinstance(b, DiagonalTorusAction):
        raise TypeError("only diagonal actions are supported")
    return True

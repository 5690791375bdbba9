"""Named example suite: one-command reproduction of each worked case.

Every entry returns a deterministic report dictionary; timing is added only
at the command-line boundary so repeated runs are byte-identical.
"""

from __future__ import annotations

from typing import Any, Callable

from .reporting import (
    DatumSpec,
    SpecError,
    build_check_report,
    build_danielewski_report,
    build_ehm_report,
)


def _check_example(name: str, spec: DatumSpec) -> dict[str, Any]:
    report = build_check_report(spec, command=f"examples run {name}")
    report["name"] = name
    return report


def _cusp() -> dict[str, Any]:
    return _check_example("cusp", DatumSpec(1, 0, ((2,), (3,)), "cusp"))


def _plane() -> dict[str, Any]:
    return _check_example("plane", DatumSpec(2, 0, ((1, 0), (0, 1)), "plane"))


def _veronese() -> dict[str, Any]:
    return _check_example(
        "veronese", DatumSpec(2, 0, ((1, 0), (1, 1), (1, 2)), "veronese")
    )


def _danielewski() -> dict[str, Any]:
    return build_danielewski_report()


def _ehm(p: int, q: int, m: int) -> Callable[[], dict[str, Any]]:
    name = f"ehm-{p}-{q}-{m}"

    def build() -> dict[str, Any]:
        report = build_ehm_report(p, q, m, command=f"examples run {name}")
        report["name"] = name
        return report

    return build


_EXAMPLES: dict[str, Callable[[], dict[str, Any]]] = {
    "cusp": _cusp,
    "plane": _plane,
    "veronese": _veronese,
    "danielewski": _danielewski,
    "ehm-1-2-1": _ehm(1, 2, 1),
    "ehm-2-3-4": _ehm(2, 3, 4),
}


def list_examples() -> list[str]:
    return sorted(_EXAMPLES)


def run_example(name: str) -> dict[str, Any]:
    try:
        build = _EXAMPLES[name]
    except KeyError:
        raise SpecError(
            f"unknown example {name!r}; available: " + ", ".join(list_examples())
        ) from None
    return build()

"""Datum files, certificate reports, and report re-verification.

The JSON surface lives here: parsing of datum files (strict, unknown fields
rejected), builders for every report the command line emits, and the
re-verification pass that re-derives witness invariants from the raw report
data before anything is printed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .danielewski import (
    MAKAR_LIMANOV_NOTE,
    action_substitution,
    composition_law,
    preserves_surface,
    surface_equation,
    unit_specialization_exact,
)
from .ehm import (
    build_ehm,
    enumerate_invariant_monomials,
    verify_actions_on_hypersurface,
    verify_special_point,
    verify_weight_identity,
)
from .lattice import RationalCone, dot, face_lattice
from .semigroup import (
    FlexStatus,
    GradingWitness,
    HorosphericalDatum,
    flexibility_verdict,
    grading_for_face,
    is_saturated,
    orbit_faces,
    saturate,
    units_exist,
)

SCHEMA_VERSION = 1
TOOL_NAME = "horoflex"
TOOL_VERSION = "0.1.0"

RANK_CAP_ENV = "HOROFLEX_MAX_RANK"
DEFAULT_RANK_CAP = 6

_SPEC_FIELDS = ("torus_rank", "dominant_rank", "generators", "label")


class SpecError(ValueError):
    """Rejected input: malformed JSON, bad fields, or rank over the cap."""


class CorruptReportError(RuntimeError):
    """A report failed re-verification against its own stated invariants."""


# ---------------------------------------------------------------------------
# datum files


@dataclass(frozen=True)
class DatumSpec:
    """A datum file as written: generator order and label preserved.

    The canonical (sorted, deduplicated) form lives in HorosphericalDatum;
    keeping the original order here makes serialization lossless.
    """

    torus_rank: int
    dominant_rank: int
    generators: tuple[tuple[int, ...], ...]
    label: Optional[str] = None

    def to_payload(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "torus_rank": self.torus_rank,
            "dominant_rank": self.dominant_rank,
            "generators": [list(g) for g in self.generators],
        }
        if self.label is not None:
            out["label"] = self.label
        return out

    def to_datum(self) -> HorosphericalDatum:
        return HorosphericalDatum(self.torus_rank, self.dominant_rank, self.generators)

    def dumps(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2)


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{what} must be an integer, got {value!r}")
    return value


def parse_spec(text: str) -> DatumSpec:
    """Strict parse of a datum file; unknown fields are rejected.

    JSON syntax errors carry line and column; semantic errors name the
    offending field or generator index.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(data, dict):
        raise SpecError("datum file must contain a JSON object")
    unknown = sorted(set(data) - set(_SPEC_FIELDS))
    if unknown:
        raise SpecError("unknown fields: " + ", ".join(unknown))
    missing = [f for f in ("torus_rank", "dominant_rank", "generators") if f not in data]
    if missing:
        raise SpecError("missing fields: " + ", ".join(missing))
    torus_rank = _require_int(data["torus_rank"], "torus_rank")
    dominant_rank = _require_int(data["dominant_rank"], "dominant_rank")
    raw = data["generators"]
    if not isinstance(raw, list):
        raise SpecError("generators must be a list of integer vectors")
    gens = []
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise SpecError(f"generator {i} must be a list of integers")
        gens.append(tuple(_require_int(x, f"generator {i} entry") for x in row))
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise SpecError("label must be a string")
    spec = DatumSpec(torus_rank, dominant_rank, tuple(gens), label)
    try:
        spec.to_datum()
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    return spec


def max_ambient_rank() -> int:
    raw = os.environ.get(RANK_CAP_ENV)
    if raw is None:
        return DEFAULT_RANK_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SpecError(f"{RANK_CAP_ENV} must be a positive integer, got {raw!r}")
    if cap < 1:
        raise SpecError(f"{RANK_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


def enforce_rank_cap(spec: DatumSpec) -> None:
    cap = max_ambient_rank()
    rank = spec.torus_rank + spec.dominant_rank
    if rank > cap:
        raise SpecError(
            f"ambient rank {rank} exceeds {RANK_CAP_ENV}={cap}; "
            "raise the cap to allow larger enumerations"
        )


# ---------------------------------------------------------------------------
# report builders


def _envelope(command: str, payload: dict[str, Any]) -> dict[str, Any]:
    report: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": command,
    }
    report.update(payload)
    return report


def _witness_payload(index: int, witness: GradingWitness, cone: RationalCone) -> dict[str, Any]:
    return {
        "face_index": index,
        "dimension": witness.face.dim,
        "face_rays": [list(cone.rays[j]) for j in witness.face.span_rays],
        "functional": list(witness.functional),
        "generator_degrees": list(witness.generator_weights),
    }


def build_check_report(spec: DatumSpec, command: str = "check") -> dict[str, Any]:
    datum = spec.to_datum()
    verdict = flexibility_verdict(datum)
    gap = None if verdict.saturation_gap is None else list(verdict.saturation_gap)
    return _envelope(
        command,
        {
            "input": spec.to_payload(),
            "canonical_generators": [list(g) for g in datum.generators],
            "verdict": {"status": verdict.status.value, "saturation_gap": gap},
            "witnesses": [
                _witness_payload(i, w, datum.cone)
                for i, w in enumerate(verdict.witnesses)
            ],
        },
    )


def build_saturate_report(spec: DatumSpec, command: str = "saturate") -> dict[str, Any]:
    datum = spec.to_datum()
    if units_exist(datum):
        raise SpecError(
            "the weight cone contains a line; saturation is undefined here"
        )
    closed = saturate(datum)
    out_spec = DatumSpec(
        spec.torus_rank, spec.dominant_rank, closed.generators, spec.label
    )
    return _envelope(
        command,
        {
            "input": spec.to_payload(),
            "already_saturated": closed.generators == datum.generators,
            "saturated_datum": out_spec.to_payload(),
        },
    )


def build_orbits_report(spec: DatumSpec, command: str = "orbits") -> dict[str, Any]:
    datum = spec.to_datum()
    faces = orbit_faces(datum)
    table = []
    for i, f in enumerate(faces):
        table.append(
            {
                "face_index": i,
                "dimension": f.face.dim,
                "face_rays": [list(datum.cone.rays[j]) for j in f.face.span_rays],
                "off_face_generator_indices": list(f.off_face_generators),
                "off_face_generators": [
                    list(datum.generators[j]) for j in f.off_face_generators
                ],
            }
        )
    return _envelope(
        command,
        {
            "input": spec.to_payload(),
            "canonical_generators": [list(g) for g in datum.generators],
            "face_count": len(faces),
            "faces": table,
        },
    )


def build_grading_report(
    spec: DatumSpec, face_index: int, command: str = "grading"
) -> dict[str, Any]:
    datum = spec.to_datum()
    faces = face_lattice(datum.cone)
    if not 0 <= face_index < len(faces):
        raise SpecError(
            f"face index {face_index} out of range 0..{len(faces) - 1}"
        )
    witness = grading_for_face(datum, faces[face_index])
    return _envelope(
        command,
        {
            "input": spec.to_payload(),
            "canonical_generators": [list(g) for g in datum.generators],
            "face_count": len(faces),
            "witness": _witness_payload(face_index, witness, datum.cone),
        },
    )


def build_ehm_report(
    p: int, q: int, m: int, degree_bound: int = 8, command: str = "ehm"
) -> dict[str, Any]:
    datum = build_ehm(p, q, m)
    identity = verify_weight_identity(datum, degree_bound)
    point = verify_special_point(datum, degree_bound)
    actions = verify_actions_on_hypersurface(datum)
    monomials = enumerate_invariant_monomials(datum, degree_bound)
    all_ok = identity.ok and point.all_ok and actions.all_ok
    quotient = actions.sl2_check.modulus_quotient
    return _envelope(
        command,
        {
            "parameters": {"p": p, "q": q, "m": m, "degree_bound": degree_bound},
            "derived": {
                "k": datum.k,
                "a": datum.a,
                "b": datum.b,
                "height": f"{p}/{q}",
            },
            "hypersurface": str(datum.hypersurface),
            "grading_weights": list(datum.grading_action.weights),
            "twisted_weights": list(datum.twisted_action.weights),
            "cyclic_order": datum.twisted_action.cyclic_order,
            "cyclic_weights": list(datum.twisted_action.cyclic_weights),
            "invariant_monomials": [
                {"exponents": list(mon.exponents), "grading_weight": mon.grading_weight}
                for mon in monomials
            ],
            "checks": {
                "weight_identity": {
                    "ok": identity.ok,
                    "monomials_checked": identity.checked,
                    "failure": None if identity.failure is None else list(identity.failure),
                },
                "special_point": {
                    "ok": point.all_ok,
                    "on_hypersurface": point.on_hypersurface,
                    "monomial_exponents": list(point.monomial_exponents),
                    "monomial_invariant": point.monomial_invariant,
                    "value_at_point": str(point.value_at_point),
                    "zero_weight_avoids_y": point.zero_weight_avoids_y,
                },
                "hypersurface_actions": {
                    "ok": actions.all_ok,
                    "sl2_preserved": actions.sl2_check.preserved,
                    "determinant_unit": str(actions.sl2_check.unit),
                    "determinant_quotient": None if quotient is None else str(quotient),
                    "grading_invariant": actions.grading_invariant,
                    "twisted_weight": None
                    if actions.twisted_weight is None
                    else list(actions.twisted_weight),
                    "twisted_weight_expected": [actions.twisted_weight_expected, 0],
                },
            },
            "all_ok": all_ok,
        },
    )


def build_danielewski_report(command: str = "examples run danielewski") -> dict[str, Any]:
    surface = preserves_surface()
    specialization = unit_specialization_exact()
    law = composition_law()
    action = action_substitution()
    all_ok = surface.preserved and specialization and law.ok
    return _envelope(
        command,
        {
            "name": "danielewski",
            "surface": str(surface_equation()),
            "action": {v: str(img) for v, img in sorted(action.items())},
            "checks": {
                "preserves_surface": {
                    "ok": surface.preserved,
                    "unit": str(surface.unit),
                },
                "unit_specialization": {"ok": specialization},
                "composition_law": {
                    "ok": law.ok,
                    "label": "derived",
                    "law": "(t, s) after (t', s') = (t*t', s' + s*t'^-2)",
                },
            },
            "makar_limanov": {"statement": MAKAR_LIMANOV_NOTE, "label": "citation"},
            "all_ok": all_ok,
        },
    )


# ---------------------------------------------------------------------------
# re-verification


def _verify_witnesses(
    rank: int,
    generators: Sequence[Sequence[int]],
    witnesses: Sequence[dict[str, Any]],
) -> list[str]:
    problems = []
    for entry in witnesses:
        idx = entry.get("face_index")
        functional = entry.get("functional")
        rays = entry.get("face_rays")
        degrees = entry.get("generator_degrees")
        if not isinstance(functional, list) or len(functional) != rank:
            problems.append(f"witness {idx}: functional has wrong rank")
            continue
        if not isinstance(rays, list) or not isinstance(degrees, list):
            problems.append(f"witness {idx}: malformed table")
            continue
        if len(degrees) != len(generators):
            problems.append(f"witness {idx}: degree table length mismatch")
            continue
        for r in rays:
            if len(r) != rank:
                problems.append(f"witness {idx}: face ray of wrong rank")
            elif dot(functional, r) != 0:
                problems.append(f"witness {idx}: functional does not vanish on {r}")
        face_cone = RationalCone([tuple(r) for r in rays], rank) if rays else None
        for g, d in zip(generators, degrees):
            actual = dot(functional, g)
            if actual != d:
                problems.append(
                    f"witness {idx}: stored degree {d} on {list(g)}, recomputed {actual}"
                )
            if d < 0:
                problems.append(f"witness {idx}: negative degree on {list(g)}")
            on_face = face_cone.contains(tuple(g)) if face_cone else all(x == 0 for x in g)
            if on_face and d != 0:
                problems.append(f"witness {idx}: nonzero degree on face generator {list(g)}")
            if not on_face and d < 1:
                problems.append(f"witness {idx}: degree < 1 off the face at {list(g)}")
    return problems


def verify_check_report(report: dict[str, Any]) -> None:
    """Re-derive every witness invariant from the raw report data.

    Raises CorruptReportError on the first inconsistency; called on every
    certificate-bearing report before emission.
    """
    problems = []
    if report.get("schema") != SCHEMA_VERSION:
        problems.append("unknown schema version")
    spec = report.get("input", {})
    rank = spec.get("torus_rank", 0) + spec.get("dominant_rank", 0)
    generators = [tuple(g) for g in report.get("canonical_generators", [])]
    statuses = {s.value for s in FlexStatus}
    if "verdict" in report:
        status = report["verdict"].get("status")
        if status not in statuses:
            problems.append(f"unknown verdict status {status!r}")
        witnesses = report.get("witnesses", [])
        if status == FlexStatus.CERTIFIED_FLEXIBLE.value:
            if report["verdict"].get("saturation_gap") is not None:
                problems.append("certified verdict carries a saturation gap")
            if not witnesses:
                problems.append("certified verdict without witnesses")
        elif witnesses:
            problems.append("witnesses present on a non-certified verdict")
        problems.extend(_verify_witnesses(rank, generators, witnesses))
    if "witness" in report:
        problems.extend(_verify_witnesses(rank, generators, [report["witness"]]))
    if problems:
        raise CorruptReportError("; ".join(problems))


# ---------------------------------------------------------------------------
# text rendering


def _render_witness(entry: dict[str, Any]) -> str:
    rays = " ".join(str(tuple(r)) for r in entry["face_rays"]) or "(origin)"
    return (
        f"  face {entry['face_index']} (dim {entry['dimension']}): rays {rays}\n"
        f"    functional {tuple(entry['functional'])}"
        f"  degrees {tuple(entry['generator_degrees'])}"
    )


def render_text(report: dict[str, Any]) -> str:
    """Human-readable view of any report; same data as the JSON form."""
    lines = [f"{report['tool']} {report['command']} (version {report['version']})"]
    if "input" in report:
        spec = report["input"]
        label = f" label={spec['label']!r}" if "label" in spec else ""
        lines.append(
            f"input: torus_rank={spec['torus_rank']} dominant_rank={spec['dominant_rank']}"
            f" generators={spec['generators']}{label}"
        )
    if "verdict" in report:
        verdict = report["verdict"]
        lines.append(f"verdict: {verdict['status']}")
        if verdict.get("saturation_gap") is not None:
            lines.append(f"saturation gap: {tuple(verdict['saturation_gap'])}")
        if report.get("witnesses"):
            lines.append("witnesses:")
            lines.extend(_render_witness(w) for w in report["witnesses"])
    if "saturated_datum" in report:
        lines.append(f"already saturated: {report['already_saturated']}")
        lines.append(f"saturated generators: {report['saturated_datum']['generators']}")
    if "faces" in report:
        lines.append(f"faces: {report['face_count']}")
        for f in report["faces"]:
            rays = " ".join(str(tuple(r)) for r in f["face_rays"]) or "(origin)"
            lines.append(
                f"  face {f['face_index']} (dim {f['dimension']}): rays {rays}"
                f"  off-face generators {f['off_face_generators']}"
            )
    if "witness" in report:
        lines.append(f"faces: {report['face_count']}")
        lines.append(_render_witness(report["witness"]))
    if "parameters" in report:
        par = report["parameters"]
        der = report["derived"]
        lines.append(
            f"parameters: p={par['p']} q={par['q']} m={par['m']}"
            f" degree_bound={par['degree_bound']}"
        )
        lines.append(
            f"derived: k={der['k']} a={der['a']} b={der['b']} height={der['height']}"
        )
        lines.append(f"hypersurface: {report['hypersurface']}")
        checks = report["checks"]
        for name in ("weight_identity", "special_point", "hypersurface_actions"):
            lines.append(f"check {name}: {'ok' if checks[name]['ok'] else 'FAILED'}")
        lines.append(f"all checks: {'ok' if report['all_ok'] else 'FAILED'}")
    if report.get("name") == "danielewski":
        lines.append(f"surface: {report['surface']}")
        for var, img in report["action"].items():
            lines.append(f"  {var} -> {img}")
        for name, entry in report["checks"].items():
            tag = f" [{entry['label']}]" if "label" in entry else ""
            lines.append(f"check {name}: {'ok' if entry['ok'] else 'FAILED'}{tag}")
        lines.append(f"note [citation]: {report['makar_limanov']['statement']}")
        lines.append(f"all checks: {'ok' if report['all_ok'] else 'FAILED'}")
    if "examples" in report:
        lines.append("examples:")
        lines.extend(f"  {name}" for name in report["examples"])
    return "\n".join(lines)

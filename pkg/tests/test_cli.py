import copy
import json

import pytest

from horoflex.cli import main
from horoflex.reporting import (
    CorruptReportError,
    DatumSpec,
    SpecError,
    build_check_report,
    build_grading_report,
    max_ambient_rank,
    parse_spec,
    verify_check_report,
)

CUSP_TEXT = '{"torus_rank": 1, "dominant_rank": 0, "generators": [[2], [3]]}'
VERONESE_TEXT = '{"torus_rank": 2, "dominant_rank": 0, "generators": [[1, 0], [1, 1], [1, 2]]}'


@pytest.fixture
def cusp_file(tmp_path):
    path = tmp_path / "cusp.json"
    path.write_text(CUSP_TEXT)
    return str(path)


@pytest.fixture
def veronese_file(tmp_path):
    path = tmp_path / "veronese.json"
    path.write_text(VERONESE_TEXT)
    return str(path)


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# spec parsing


def test_parse_spec_roundtrip():
    spec = parse_spec(CUSP_TEXT)
    assert spec == parse_spec(spec.dumps())
    labeled = DatumSpec(1, 0, ((2,), (3,)), "cusp")
    assert parse_spec(labeled.dumps()) == labeled


def test_parse_spec_preserves_generator_order():
    spec = parse_spec('{"torus_rank": 1, "dominant_rank": 0, "generators": [[3], [2]]}')
    assert spec.generators == ((3,), (2,))


def test_parse_spec_unknown_field():
    with pytest.raises(SpecError, match="unknown fields: color"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 0, "generators": [[1]], "color": 1}')


def test_parse_spec_missing_field():
    with pytest.raises(SpecError, match="missing fields: generators"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 0}')


def test_parse_spec_dominance_violation():
    with pytest.raises(SpecError, match="dominance violation"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 1, "generators": [[1, -1]]}')


def test_parse_spec_empty_generators():
    with pytest.raises(SpecError, match="at least one generator"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 0, "generators": []}')


def test_parse_spec_syntax_error_position():
    with pytest.raises(SpecError, match="line 1 column"):
        parse_spec('{"torus_rank": 1 "dominant_rank": 0}')


def test_parse_spec_type_errors():
    with pytest.raises(SpecError, match="must be an integer"):
        parse_spec('{"torus_rank": true, "dominant_rank": 0, "generators": [[1]]}')
    with pytest.raises(SpecError, match="must be an integer"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 0, "generators": [[1.5]]}')
    with pytest.raises(SpecError, match="label"):
        parse_spec('{"torus_rank": 1, "dominant_rank": 0, "generators": [[1]], "label": 3}')


def test_rank_cap(monkeypatch):
    assert max_ambient_rank() == 6
    monkeypatch.setenv("HOROFLEX_MAX_RANK", "9")
    assert max_ambient_rank() == 9
    monkeypatch.setenv("HOROFLEX_MAX_RANK", "zero")
    with pytest.raises(SpecError):
        max_ambient_rank()


# ---------------------------------------------------------------------------
# subcommands


def test_check_cusp_exit_two(cusp_file, capsys):
    code, report = run_json(capsys, ["check", cusp_file])
    assert code == 2
    assert report["schema"] == 1
    assert report["verdict"]["status"] == "NotCovered_NotNormal"
    assert report["verdict"]["saturation_gap"] == [1]
    assert report["witnesses"] == []


def test_check_veronese_exit_zero(veronese_file, capsys):
    code, report = run_json(capsys, ["check", veronese_file])
    assert code == 0
    assert report["verdict"]["status"] == "CertifiedFlexible"
    functionals = [w["functional"] for w in report["witnesses"]]
    assert functionals == [[1, 0], [0, 1], [2, -1], [0, 0]]


def test_check_text_format(veronese_file, capsys):
    code = main(["check", veronese_file])
    out = capsys.readouterr().out
    assert code == 0
    assert "CertifiedFlexible" in out
    assert "functional" in out


def test_saturate_then_check(cusp_file, tmp_path, capsys):
    code, report = run_json(capsys, ["saturate", cusp_file])
    assert code == 0
    assert report["already_saturated"] is False
    assert report["saturated_datum"]["generators"] == [[1]]
    piped = tmp_path / "sat.json"
    piped.write_text(json.dumps(report["saturated_datum"]))
    code, report = run_json(capsys, ["check", str(piped)])
    assert code == 0
    assert report["verdict"]["status"] == "CertifiedFlexible"


def test_saturate_units_error(tmp_path, capsys):
    path = tmp_path / "units.json"
    path.write_text('{"torus_rank": 1, "dominant_rank": 0, "generators": [[1], [-1]]}')
    code = main(["saturate", str(path)])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_orbits(veronese_file, capsys):
    code, report = run_json(capsys, ["orbits", veronese_file])
    assert code == 0
    assert report["face_count"] == 4
    zero_face = report["faces"][0]
    assert zero_face["face_rays"] == []
    assert zero_face["off_face_generator_indices"] == [0, 1, 2]
    full_face = report["faces"][-1]
    assert full_face["off_face_generator_indices"] == []


def test_grading(veronese_file, capsys):
    code, report = run_json(capsys, ["grading", veronese_file, "--face", "2"])
    assert code == 0
    assert report["witness"]["functional"] == [2, -1]
    assert report["witness"]["generator_degrees"] == [2, 1, 0]


def test_grading_face_out_of_range(veronese_file, capsys):
    code = main(["grading", veronese_file, "--face", "9"])
    assert code == 1
    assert "out of range" in capsys.readouterr().err


def test_ehm_subcommand(capsys):
    code, report = run_json(capsys, ["ehm", "--p", "1", "--q", "2", "--m", "1"])
    assert code == 0
    assert report["derived"] == {"k": 1, "a": 1, "b": 1, "height": "1/2"}
    assert report["all_ok"] is True
    assert report["checks"]["hypersurface_actions"]["sl2_preserved"] is True


def test_ehm_rejects_bad_slope(capsys):
    code = main(["ehm", "--p", "2", "--q", "2", "--m", "1"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_examples_list(capsys):
    code, report = run_json(capsys, ["examples", "list"])
    assert code == 0
    assert report["examples"] == [
        "cusp",
        "danielewski",
        "ehm-1-2-1",
        "ehm-2-3-4",
        "plane",
        "veronese",
    ]


def test_examples_run_exit_codes(capsys):
    for name, expected in [
        ("cusp", 2),
        ("plane", 0),
        ("veronese", 0),
        ("danielewski", 0),
        ("ehm-1-2-1", 0),
        ("ehm-2-3-4", 0),
    ]:
        code, report = run_json(capsys, ["examples", "run", name])
        assert code == expected
        assert report["schema"] == 1
        assert report["name"] == name


def test_examples_run_unknown(capsys):
    code = main(["examples", "run", "nope"])
    assert code == 1
    assert "unknown example" in capsys.readouterr().err


def test_missing_file(capsys):
    code = main(["check", "/does/not/exist.json"])
    assert code == 1
    capsys.readouterr()


def test_rank_cap_enforced(tmp_path, capsys, monkeypatch):
    path = tmp_path / "wide.json"
    gens = [[1, 0, 0, 0, 0, 0, 0]]
    path.write_text(json.dumps({"torus_rank": 7, "dominant_rank": 0, "generators": gens}))
    code = main(["check", str(path)])
    assert code == 1
    assert "HOROFLEX_MAX_RANK" in capsys.readouterr().err
    monkeypatch.setenv("HOROFLEX_MAX_RANK", "8")
    code = main(["check", str(path), "--format", "json"])
    assert code == 0
    capsys.readouterr()


def test_usage_error_exits_one(capsys):
    assert main(["nonsense"]) == 1
    capsys.readouterr()
    assert main([]) == 1
    capsys.readouterr()


def test_json_output_has_sorted_keys(veronese_file, capsys):
    main(["check", veronese_file, "--format", "json"])
    out = capsys.readouterr().out
    keys = list(json.loads(out))
    assert keys == sorted(keys)
    assert "timing_ms" in out


# ---------------------------------------------------------------------------
# report re-verification


def test_verify_accepts_genuine_reports():
    spec = parse_spec(VERONESE_TEXT)
    verify_check_report(build_check_report(spec))
    verify_check_report(build_grading_report(spec, 1))


def test_verify_rejects_corrupted_functional():
    report = build_check_report(parse_spec(VERONESE_TEXT))
    bad = copy.deepcopy(report)
    bad["witnesses"][1]["functional"] = [5, 5]
    with pytest.raises(CorruptReportError):
        verify_check_report(bad)


def test_verify_rejects_corrupted_degree():
    report = build_check_report(parse_spec(VERONESE_TEXT))
    bad = copy.deepcopy(report)
    bad["witnesses"][0]["generator_degrees"][0] = -7
    with pytest.raises(CorruptReportError):
        verify_check_report(bad)


def test_verify_rejects_gap_on_certified():
    report = build_check_report(parse_spec(VERONESE_TEXT))
    bad = copy.deepcopy(report)
    bad["verdict"]["saturation_gap"] = [1, 1]
    with pytest.raises(CorruptReportError):
        verify_check_report(bad)


def test_corrupted_report_aborts_cli(veronese_file, capsys, monkeypatch):
    import horoflex.cli as cli_module

    genuine = build_check_report(parse_spec(VERONESE_TEXT))
    corrupted = copy.deepcopy(genuine)
    corrupted["witnesses"][2]["generator_degrees"] = [9, 9, 9]
    monkeypatch.setattr(cli_module, "build_check_report", lambda spec: corrupted)
    code = main(["check", veronese_file])
    assert code == 1
    assert capsys.readouterr().out == ""

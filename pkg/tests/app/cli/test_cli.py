import json
from pathlib import Path

from app.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, run
from app.models import SuiteName
from app.services import verification
from app.services.verification import Suite

DATA_DIR = Path(__file__).resolve().parents[3] / "data"


def _data(name: str) -> str:
    return str(DATA_DIR / name)


def _run(capsys, *argv: str) -> tuple[int, dict]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


def test_snf_command(capsys):
    code, payload = _run(capsys, "snf", "--matrix", _data("diag23.json"))

    assert code == EXIT_OK
    assert payload["diagonal"] == [1, 6]
    assert payload["D"] == [[1, 0], [0, 6]]


def test_module_canon_and_support(capsys):
    code, payload = _run(capsys, "module", "canon", "--in", _data("z_plus_z3.json"))
    assert code == EXIT_OK
    assert payload == {"rank": 1, "invariant_factors": [3]}

    _, payload = _run(capsys, "module", "support", "--in", _data("zmod12.json"))
    assert payload == {"support": [2, 3]}

    _, payload = _run(capsys, "module", "support", "--in", _data("z_plus_z3.json"))
    assert payload == {"support": "full"}


def test_module_split(capsys):
    code, payload = _run(capsys, "module", "split", "--in", _data("zmod12.json"))

    assert code == EXIT_OK
    assert payload["pieces"] == [
        {"support": [2], "module": {"rank": 0, "invariant_factors": [4]}},
        {"support": [3], "module": {"rank": 0, "invariant_factors": [3]}},
    ]


def test_module_split_along_a_wide_subcategory(capsys):
    _, payload = _run(capsys, "module", "split", "--in", _data("zmod12.json"), "--support", "full")

    assert payload["pieces"] == [{"support": "full", "module": {"rank": 0, "invariant_factors": [12]}}]


def test_module_k0(capsys):
    _, payload = _run(capsys, "module", "k0", "--in", _data("zmod12.json"), "--support", "2,3,5")
    assert payload == {"support": [2, 3, 5], "coords": [2, 1, 0]}

    _, payload = _run(capsys, "module", "k0", "--in", _data("z_plus_z3.json"))
    assert payload == {"support": "full", "coords": 1}


def test_module_k0_outside_support_fails(capsys):
    code = run(["module", "k0", "--in", _data("zmod12.json"), "--support", "3"])

    captured = capsys.readouterr()
    assert code == EXIT_INPUT_ERROR
    assert captured.out == ""
    assert "error:" in captured.err and "2" in captured.err


def test_errors_after_loading_name_the_input_file(capsys):
    code = run(["module", "k0", "--in", _data("zmod6.json"), "--support", "2"])

    err = capsys.readouterr().err
    assert code == EXIT_INPUT_ERROR
    assert err.startswith(f"error: {_data('zmod6.json')}: ")
    assert "3" in err
    assert err.count("zmod6.json") == 1


def test_hom_and_ext(capsys):
    _, payload = _run(capsys, "module", "hom", "--in", _data("zmod4.json"), "--with", _data("zmod6.json"))
    assert payload == {"functor": "hom", "group": {"rank": 0, "invariant_factors": [2]}}

    _, payload = _run(capsys, "module", "ext1", "--in", _data("zmod4.json"), "--with", _data("zmod6.json"))
    assert payload["group"]["invariant_factors"] == [2]

    assert run(["module", "hom", "--in", _data("zmod4.json")]) == EXIT_INPUT_ERROR


def test_complex_commands(capsys):
    _, payload = _run(capsys, "complex", "homology", "--in", _data("two_term.json"))
    assert payload["homology"] == [
        {"degree": 0, "group": {"rank": 0, "invariant_factors": [2]}},
        {"degree": 1, "group": {"rank": 0, "invariant_factors": []}},
    ]

    _, payload = _run(capsys, "complex", "support", "--in", _data("two_term.json"))
    assert payload == {"support": [2]}

    _, payload = _run(capsys, "complex", "k0", "--in", _data("two_term.json"))
    assert payload == {"support": [2], "coords": [1]}


def test_complex_truncate(capsys):
    _, payload = _run(capsys, "complex", "truncate", "--in", _data("two_term.json"), "--at", "1")
    assert payload == {"bottom_degree": 1, "ranks": [0], "differentials": []}

    _, payload = _run(
        capsys, "complex", "truncate", "--in", _data("two_term.json"), "--at", "0", "--mode", "below"
    )
    assert payload == {"bottom_degree": 0, "ranks": [1, 1], "differentials": [[[2]]]}

    assert run(["complex", "truncate", "--in", _data("two_term.json")]) == EXIT_INPUT_ERROR


def test_spec_commands(capsys):
    _, payload = _run(capsys, "spec", "decompose", "--zspec", "--support", "2,3,5")
    assert payload == {"support": [2, 3, 5], "parts": [[2], [3], [5]], "indecomposable": False}

    _, payload = _run(capsys, "spec", "decompose", "--in", _data("vee_poset.json"))
    assert payload == {"support": ["a", "b", "m"], "parts": [["a", "b", "m"]], "indecomposable": True}

    _, payload = _run(capsys, "spec", "islocal", "--in", _data("vee_poset.json"))
    assert payload == {"local": True, "maximal_points": ["m"]}

    _, payload = _run(capsys, "spec", "islocal", "--zspec")
    assert payload == {"local": False, "maximal_points": None}

    _, payload = _run(capsys, "spec", "enumerate", "--in", _data("antichain_poset.json"))
    assert payload["count"] == 4

    assert run(["spec", "enumerate", "--zspec"]) == EXIT_INPUT_ERROR


def test_verify_command_writes_report(capsys, tmp_path):
    report_path = tmp_path / "report.json"

    code, payload = _run(
        capsys, "verify", "--suite", "snf", "--trials", "5", "--seed", "42", "--report", str(report_path)
    )

    assert code == EXIT_OK
    assert payload["suite"] == "snf"
    assert payload["trials"] == 5
    assert payload["failures"] == 0
    assert json.loads(report_path.read_text(encoding="utf-8"))["seed"] == 42


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(verification.SUITES, SuiteName.SES, Suite(SuiteName.SES, lambda sampler: "broken"))

    code, payload = _run(capsys, "verify", "--suite", "ses", "--trials", "2", "--seed", "1", "--workers", "1")

    assert code == EXIT_VERIFICATION_FAILED
    assert payload["failures"] == 2


def test_input_errors_exit_with_two(capsys):
    assert run(["snf", "--matrix", "no/such/file.json"]) == EXIT_INPUT_ERROR
    assert "file.json" in capsys.readouterr().err

    assert run(["verify", "--suite", "bogus", "--trials", "1", "--seed", "0"]) == EXIT_INPUT_ERROR
    assert run(["verify", "--suite", "snf", "--trials", "1", "--seed", "-1"]) == EXIT_INPUT_ERROR
    assert run(["no-such-command"]) == EXIT_INPUT_ERROR
    assert run([]) == EXIT_INPUT_ERROR

import json

import pytest

from brmult import field
from brmult.cli import main
from brmult.report import compute_verdicts


@pytest.fixture(autouse=True)
def _reset_char():
    yield
    field.set_char(field.DEFAULT_PRIME)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def module_file(tmp_path, obj, name="mod.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_colength(capsys):
    code, data, _ = run_json(capsys, "colength", "x^2, x*y, y^2")
    assert code == 0 and data["colength"] == 3


def test_colength_text_format(capsys):
    code, out, _ = run(capsys, "colength", "x, y")
    assert code == 0 and "colength: 1" in out


def test_bad_poly_is_input_error(capsys):
    code, out, err = run(capsys, "colength", "x^^2")
    assert code == 2 and out == "" and "error" in err


def test_non_primary_is_resource_error(capsys):
    code, _, err = run(capsys, "colength", "x^2", "--trunc-cap", "12")
    assert code == 3 and "error" in err


def test_bad_char_is_input_error(capsys):
    code, _, err = run(capsys, "colength", "x, y", "--char", "15")
    assert code == 2 and "error" in err


def test_char_zero_rationals(capsys):
    code, prime_data, _ = run_json(capsys, "mult", "x^2 + y^3, x*y^2")
    assert code == 0
    code, data, _ = run_json(capsys, "mult", "x^2 + y^3, x*y^2", "--char", "0")
    assert code == 0 and data["multiplicity"] == prime_data["multiplicity"]
    code, data, _ = run_json(capsys, "mult", "x^2, y^3", "--char", "0")
    assert code == 0 and data["multiplicity"] == 6


def test_order(capsys):
    code, data, _ = run_json(capsys, "order", "x^3 + y^2, x*y^4")
    assert code == 0 and data["order"] == 2


def test_adjoint_polyhedral(capsys):
    code, data, _ = run_json(capsys, "adjoint", "x^2, x*y, y^2")
    assert code == 0 and data["adjoint"] == "x, y" and data["via"] == "polyhedral"


def test_adjoint_via_presentation(capsys):
    code, data, _ = run_json(capsys, "adjoint", "x^2, x*y, y^2", "--via", "presentation")
    assert code == 0 and data["adjoint"] == "x, y"


def test_mabc(capsys):
    code, data, _ = run_json(capsys, "mabc", "2", "4", "3")
    assert code == 0
    assert data == {"e_I": 36, "len_R_I": 31, "e_M": 32, "len_F_M": 29, "len_F_N": 32}


def test_mabc_bad_parameters(capsys):
    code, _, err = run(capsys, "mabc", "3", "9", "4")
    assert code == 2 and "error" in err


def test_mixed(capsys):
    code, data, _ = run_json(capsys, "mixed", "x, y^2", "x, y^3")
    assert code == 0 and data["mixed_multiplicity"] == 2


def test_br_mult_and_limit(capsys, tmp_path):
    path = module_file(
        tmp_path, {"rank": 2, "generators": [["x", "0"], ["y", "0"], ["0", "x"], ["0", "y"]]}
    )
    code, data, _ = run_json(capsys, "br-mult", path)
    assert code == 0 and data["br_multiplicity"] == 3
    code, data, _ = run_json(capsys, "br-limit", path)
    assert code == 0 and data["br_multiplicity_limit"] == 3


def test_missing_module_file(capsys):
    code, _, err = run(capsys, "br-mult", "/no/such/file.json")
    assert code == 2 and "error" in err


def test_bad_module_json(capsys, tmp_path):
    path = module_file(tmp_path, {"generators": [["x"]]})
    code, _, err = run(capsys, "report", path)
    assert code == 2 and "error" in err


def test_fitting(capsys, tmp_path):
    path = module_file(
        tmp_path,
        {"rank": 2, "generators": [["y^2", "x^2"], ["x^4", "0"], ["0", "y^4"], ["x^3*y^3", "0"]]},
    )
    code, data, _ = run_json(capsys, "fitting", path, "--k", "2")
    assert code == 0 and data["colength"] == 31
    code, data, _ = run_json(capsys, "fitting", path, "--k", "3")
    assert code == 0 and data["colength"] == 3
    code, _, err = run(capsys, "fitting", path, "--k", "5")
    assert code == 2


def test_closure_ideal(capsys):
    code, data, _ = run_json(capsys, "closure", "x^2, y^2")
    assert code == 0
    assert data["status"] == "certified"
    assert data["closure"] == "x^2, x*y, y^2"
    assert data["was_closed"] is False


def test_closure_module_file(capsys, tmp_path):
    path = module_file(
        tmp_path, {"rank": 2, "generators": [["x^2", "0"], ["y^2", "0"], ["0", "x"], ["0", "y"]]}
    )
    code, data, _ = run_json(capsys, "closure", path)
    assert code == 0 and data["status"] == "certified"
    cols = data["module"]["generators"]
    assert ["x*y", "0"] in cols


def test_report_verdicts_replayable(capsys, tmp_path):
    path = module_file(
        tmp_path,
        {"rank": 2, "generators": [["y^2", "x^2"], ["x^4", "0"], ["0", "y^4"], ["x^3*y^3", "0"]]},
    )
    code, data, _ = run_json(capsys, "report", path)
    assert code == 0
    assert data["e_M"] == 32 and data["len_F_M"] == 29 and data["e_IM"] == 36
    assert data["len_R_adj"] == 15 and data["ic_status"] == "witness_not_closed"

    class Shim:
        pass

    shim = Shim()
    for k, v in data.items():
        setattr(shim, k, v)
    replay = compute_verdicts(shim)
    assert replay == data["verdicts"]
    assert replay["sandwich_lower"] and replay["sandwich_upper"]
    assert replay["closed_equality"] is False


def test_verify_small_corpus(capsys):
    code, data, _ = run_json(capsys, "verify", "--corpus-size", "12", "--colength-bound", "12")
    assert code == 0
    assert data["ok"] is True and data["violations"] == []
    assert data["count"] >= 12
    assert "reports" not in data


def test_verify_full_includes_reports(capsys):
    code, data, _ = run_json(
        capsys, "verify", "--corpus-size", "4", "--colength-bound", "10", "--full"
    )
    assert code == 0 and len(data["reports"]) == data["count"]

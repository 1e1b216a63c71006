import io
import json

import pytest

from app.cli import main
from app.services.generators import parse_coordinate_generators
from app.services.ideal_engine import ideal_service
from app.services.linalg import rref


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# -----------------------------------------------------------------------------
# Ideal generado
# -----------------------------------------------------------------------------

@pytest.mark.parametrize(
    "char, gens, golden",
    [
        ("2", "x2", "gl2_char2_x2.txt"),
        ("2", "x1", "gl2_char2_x1.txt"),
        ("2", "x1, x2", "gl2_char2_x1_x2.txt"),
        ("3", "x3, x3 - x1", "gl2_char3_x3_x3_minus_x1.txt"),
        ("3", "x2", "gl2_char3_x2.txt"),
    ],
)
def test_ideal_text_output(char, gens, golden, golden_dir):
    code, out, err = _run("ideal", "--algebra", "gl2", "--char", char, "--gens", gens)
    assert code == 0
    assert err == ""
    assert out == (golden_dir / golden).read_text(encoding="utf-8")


def test_ideal_is_deterministic():
    args = ("ideal", "--algebra", "gl3", "--char", "3", "--gens", "x2 + 2 x6")
    assert _run(*args) == _run(*args)


def test_ideal_json_output():
    code, out, _ = _run("ideal", "--algebra", "gl2", "--char", "2", "--gens", "x2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "ideal"
    assert payload["algebra"] == "gl2"
    assert payload["char"] == 2
    assert payload["result"]["dimension"] == 2
    assert payload["result"]["basis"] == [[1, 0, 0, 1], [0, 1, 0, 0]]
    assert payload["result"]["generators"] == ["x2"]
    assert [entry["dimension"] for entry in payload["trace"]] == [1, 2, 2]
    assert payload["trace"][1]["text"] == "{x1 + x4, x2}"


def test_ideal_json_char0_uses_fraction_strings():
    code, out, _ = _run("ideal", "--algebra", "gl2", "--char", "0", "--coords", "1/2,0,0,0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["generators"] == ["1/2 x1"]
    assert payload["trace"][0]["spanning_set"] == [["1", "0", "0", "0"]]


def test_ideal_from_coordinates():
    code, out, _ = _run("ideal", "--algebra", "gl2", "--char", "2", "--coords", "0,1,0,0")
    assert code == 0
    assert out.splitlines()[-1] == "Ideal <{x2}> = {x1 + x4, x2} with dimension = 2 and char(K)=2"


def test_zero_generator():
    code, out, _ = _run("ideal", "--algebra", "gl2", "--char", "5", "--gens", "0")
    assert code == 0
    assert out.splitlines() == [
        "Depth = 0 -> {}",
        "Ideal <{0}> = {} with dimension = 0 and char(K)=5",
    ]


def test_ideal_from_file(data_dir):
    code, out, _ = _run("ideal", "--algebra", f"file:{data_dir / 'gl2.json'}", "--char", "3", "--gens", "x2")
    assert code == 0
    assert out.splitlines()[-1].startswith("Ideal <{x2}> = {x1 + 2 x4, x2, x3}")


# -----------------------------------------------------------------------------
# Otros comandos
# -----------------------------------------------------------------------------

def test_table_json():
    code, out, _ = _run("table", "--algebra", "gl2", "--char", "3", "--json")
    assert code == 0
    constants = json.loads(out)["result"]["structure_constants"]
    assert constants[1][2] == [1, 0, 0, 2]
    assert constants[2][1] == [2, 0, 0, 1]


def test_table_text():
    code, out, _ = _run("table", "--algebra", "sl2", "--char", "0")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_center():
    code, out, _ = _run("center", "--algebra", "gl2", "--char", "0")
    assert code == 0
    assert out.strip() == "{x1 + x4}"


def test_derived():
    code, out, _ = _run("derived", "--algebra", "gl2", "--char", "0")
    assert code == 0
    assert out.strip() == "{x1 - x4, x2, x3}"


def test_series():
    code, out, _ = _run("series", "--algebra", "ut2", "--char", "0")
    assert code == 0
    assert out.splitlines() == [
        "derived series: 3 > 1 > 0",
        "lower central series: 3 > 1",
        "solvable: yes",
        "nilpotent: no",
    ]


def test_simple():
    code, out, _ = _run("simple", "--algebra", "sl2", "--char", "3")
    assert code == 0
    assert out.strip() == "simple (13 candidates tested)"


def test_not_simple():
    code, out, _ = _run("simple", "--algebra", "gl2", "--char", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "not simple (derived_subalgebra_proper)"
    assert lines[1] == "witness = {x1 + 2 x4, x2, x3} with dimension = 3"


def test_not_simple_with_generator(data_dir):
    code, out, _ = _run("simple", "--algebra", f"file:{data_dir / 'sl2_sum_sl2.json'}", "--char", "3", "--threads", "2")
    assert code == 0
    assert out.splitlines()[-1] == "generated by x6"


def test_simple_json():
    code, out, _ = _run("simple", "--algebra", "sl2", "--char", "3", "--json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["verdict"] == "simple"
    assert result["candidates_tested"] == 13


# -----------------------------------------------------------------------------
# Códigos de salida
# -----------------------------------------------------------------------------

def test_inconclusive_exit_code():
    code, out, _ = _run("simple", "--algebra", "sl2", "--char", "0")
    assert code == 4
    assert out.splitlines() == [
        "inconclusive (characteristic_zero, 3 candidates tested)",
        "derived dimension = 3",
        "center = {}",
    ]


def test_inconclusive_json_keeps_quick_checks():
    code, out, _ = _run("simple", "--algebra", "gl3", "--char", "0", "--json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["reason"] == "derived_subalgebra_proper"
    assert result["derived_dimension"] == 8

    code, out, _ = _run("simple", "--algebra", "sl3", "--char", "0", "--json")
    assert code == 4
    result = json.loads(out)["result"]
    assert result["derived_dimension"] == 8
    assert result["center"] == []


def test_cap_exceeded_exit_code():
    code, _, _ = _run("simple", "--algebra", "sl2", "--char", "3", "--cap", "5")
    assert code == 4


@pytest.mark.parametrize(
    "argv",
    [
        ("ideal", "--algebra", "gl2", "--char", "2", "--gens", "x1 +"),
        ("ideal", "--algebra", "gl2", "--char", "2", "--gens", "3"),
        ("ideal", "--algebra", "gl2", "--char", "2"),
        ("ideal", "--algebra", "gl2", "--char", "2", "--coords", "1,a,0,0"),
        ("ideal", "--algebra", "gl4", "--char", "2", "--gens", "x1 2"),
        ("ideal", "--algebra", "gl4", "--char", "2", "--gens", "2 3 x1"),
        ("simple", "--algebra", "sl2", "--char", "3", "--cap", "0"),
        ("bracket", "--algebra", "gl2", "--char", "2"),
    ],
)
def test_parse_errors_exit_2(argv):
    code, out, _ = _run(*argv)
    assert code == 2
    assert out == ""


def test_usage_errors_go_to_given_stream():
    code, out, err = _run("bracket", "--algebra", "gl2", "--char", "2")
    assert code == 2
    assert out == ""
    assert "usage:" in err

    code, out, _ = _run("--help")
    assert code == 0
    assert out.startswith("usage: lie-ideal")


@pytest.mark.parametrize(
    "argv",
    [
        ("ideal", "--algebra", "gl2", "--char", "2", "--gens", "x5"),
        ("ideal", "--algebra", "gl2", "--char", "2", "--coords", "1,0,0"),
    ],
)
def test_foreign_generator_exit_3(argv):
    code, _, err = _run(*argv)
    assert code == 3
    assert err.startswith("error:")


def test_invalid_algebra_exit_5(data_dir):
    assert _run("table", "--algebra", "gl2", "--char", "4")[0] == 5
    assert _run("table", "--algebra", "so3", "--char", "2")[0] == 5
    code, _, err = _run("table", "--algebra", f"file:{data_dir / 'not_closed.json'}", "--char", "0")
    assert code == 5
    assert "[x2, x3]" in err


def test_json_basis_round_trips(gl2_char3):
    code, out, _ = _run("ideal", "--algebra", "gl2", "--char", "3", "--gens", "x2", "--json")
    assert code == 0
    basis = json.loads(out)["result"]["basis"]
    text = "; ".join(",".join(str(x) for x in row) for row in basis)
    reloaded = [g.element.coords for g in parse_coordinate_generators(gl2_char3, text)]
    assert rref(reloaded) == reloaded
    result = ideal_service.ideal_generated(gl2_char3, [gl2_char3.element(row) for row in basis])
    assert result.rows() == reloaded

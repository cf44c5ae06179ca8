import io
import json
import subprocess
import sys

import pytest

from infdef.artin import FiniteKAlgebra
from infdef.cli import run
from infdef.hyperdef import DeformationOverA


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0, out
    return json.loads(out)


def test_tjurina():
    assert call_json("tjurina", "--vars", "x,y", "x*y") == {"tjurina": 1, "basis": ["1"]}
    assert call_json("tjurina", "--vars", "x,y", "y^2 - x^3") == {"tjurina": 2, "basis": ["1", "x"]}
    code, out, _ = call("tjurina", "--vars", "x,y", "x*y")
    assert code == 0 and out == "tjurina: 1\nbasis: 1\n"


def test_ks_class():
    data = call_json("ks-class", "--vars", "x,y", "y^2 - x^3", "1/2 + 3*x + y")
    assert data == {"basis": ["1", "x"], "coordinates": ["1/2", "3"]}


def test_miniversal():
    data = call_json("miniversal", "--vars", "x,y", "y^2 - x^3")
    assert data["family"] == "-x^3 + y^2 + x*t2 + t1"
    assert data["kodaira_spencer"] == [["1", "0"], ["0", "1"]]


def test_specialize():
    data = call_json(
        "specialize", "--vars", "x,y", "y^2 - x^3", "--base-vars", "e", "--base-ideal", "e^2",
        "--assign", "e,2*e",
    )
    d = DeformationOverA.from_dict(data)
    assert data["coefficients"] == {"1": "-x^3 + y^2", "e": "2*x + 1"}
    assert d.base.dimension == 2


def test_lift():
    data = call_json(
        "lift", "--vars", "x,y", "x*y - t", "--base-vars", "t", "--base-ideal", "t^2",
        "--ext-vars", "t", "--ext-ideal", "t^3",
    )
    assert data["coefficients"] == {"1": "x*y", "t": "-1", "t^2": "0"}
    assert DeformationOverA.from_dict(data).base.dimension == 3


def test_glue():
    data = call_json(
        "glue", "--vars", "x,y", "x*y - e", "x*y - e",
        "--left-vars", "e", "--left-ideal", "e^2", "--right-vars", "e", "--right-ideal", "e^2",
    )
    assert data["base"]["dimension"] == 3
    assert DeformationOverA.from_dict(data).central_fiber.format() == "x*y"


def test_glue_over_dual_numbers_base():
    data = call_json(
        "glue", "--vars", "x,y", "x*y + t + t^2", "x*y + e",
        "--left-vars", "t", "--left-ideal", "t^3", "--right-vars", "e", "--right-ideal", "e^2",
        "--base-vars", "e", "--base-ideal", "e^2", "--left-images", "e", "--right-images", "e",
    )
    assert data["base"]["dimension"] == 3


def test_mu():
    assert call_json("mu", "--vars", "x,y") == {"mu": 0}
    assert call_json("mu", "--vars", "x,y", "x^2") == {"mu": 1}
    assert call_json("mu", "--vars", "x,y", "x^2", "x*y") == {"mu": 2}


def test_algebra_roundtrip():
    data = call_json("algebra", "--vars", "x,y", "x^2", "x*y", "y^2")
    alg = FiniteKAlgebra.from_dict(data)
    assert alg.dimension == 3 and alg.order == 1


def test_fprod():
    data = call_json(
        "fprod", "--left-vars", "e", "--left-ideal", "e^2", "--right-vars", "e", "--right-ideal", "e^2"
    )
    assert FiniteKAlgebra.from_dict(data["algebra"]).dimension == 3
    assert data["first_projection"]["target_dimension"] == 2


def test_factor_ext():
    data = call_json("factor-ext", "--vars", "x,y", "x^3", "x^2*y", "x*y^2", "y^3")
    assert data["length"] == 5
    data = call_json(
        "factor-ext", "--vars", "t", "t^3", "--target-vars", "t", "--target-ideal", "t^2", "--images", "t"
    )
    assert data["length"] == 1


def test_cohomology():
    assert call_json("cohomology", "--n", "2", "--d", "-3", "--q", "2")["dimension"] == 1
    data = call_json("cohomology", "--n", "3", "--d", "2", "--q", "0", "--method", "both")
    assert data["formula"] == data["cech"] == 10


def test_delta():
    assert call_json("delta", "--n", "3", "--d", "4", "--method", "both") == {
        "closed_form": False, "linear_algebra": False
    }
    code, out, _ = call("delta", "--n", "2", "--d", "3")
    assert (code, out) == (0, "closed_form: true\n")


def test_hypersurface_report():
    data = call_json("hypersurface-report", "--n", "2", "--d", "5")
    assert data["all_deformations_embedded"] is False
    assert data["hilb_obstruction_dim"] == 0
    assert data["hilb_tangent_dim"] == 20


def test_curve_moduli_and_chi_normal():
    code, out, _ = call("curve-moduli", "--genus", "5")
    assert (code, out) == (0, "12\n")
    assert call_json("chi-normal", "--d", "3", "--genus", "0")["chi_normal"] == 12


def test_prime_field():
    data = call_json("ks-class", "--field", "Fp:5", "--vars", "x,y", "y^2 - x^3", "1/2 + x")
    assert data["coordinates"] == ["3", "1"]


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["tjurina", "--vars", "x,y", "x^2"], "non-isolated-singularity"),
        (["tjurina", "--vars", "x,y", "x +"], "parse-error"),
        (["cohomology", "--n", "0", "--d", "1", "--q", "0"], "parameter-range"),
        (["algebra", "--vars", "x,y", "x*y"], "not-artinian"),
    ],
)
def test_domain_errors_exit_one_with_structured_error(argv, kind):
    code, out, _ = call(*argv, "--json")
    assert code == 1
    error = json.loads(out)["error"]
    assert error["kind"] == kind and error["message"]
    code, out, err = call(*argv)
    assert code == 1 and out == "" and kind in err


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["tjurina", "x*y"],
        ["tjurina", "--vars", "x,y", "x*y", "--bogus"],
        ["delta", "--n", "3", "--d", "4", "--method", "guess"],
        ["tjurina", "--vars", "x,x", "x"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "infdef", "miniversal", "--vars", "x,y", "y^2 - x^3", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["parameters"] == ["t1", "t2"]


def test_no_floats_in_json():
    out = call("specialize", "--vars", "x,y", "y^2 - x^3", "--base-vars", "e", "--base-ideal", "e^2",
               "--assign", "1/3*e,e", "--json")[1]
    assert "1/3" in out and "0.333" not in out

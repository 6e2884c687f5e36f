"""Command-line surface: verbs, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from polymat.cli import main


@pytest.fixture()
def fixture_file(tmp_path):
    def write(text: str, name: str = "ideal.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


SQUARE_TIMES_PRIME = "x1^2*x3, x1^2*x4, x2^2*x3, x2^2*x4, x1*x2*x3, x1*x2*x4"


class TestCheck:
    def test_property_holds_exits_zero(self, fixture_file, capsys):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["check", path, "--property", "unmixed", "--vars", "4"]) == 0
        assert "unmixed: yes" in capsys.readouterr().out

    def test_property_fails_exits_one_with_witness(self, fixture_file, capsys):
        path = fixture_file("x1^2, x1*x2")
        assert main(["check", path, "--property", "unmixed", "--vars", "2"]) == 1
        out = capsys.readouterr().out
        assert "witness" in out

    def test_polymatroidal_and_matroidal(self, fixture_file):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["check", path, "--property", "polymatroidal", "--vars", "4"]) == 0
        assert main(["check", path, "--property", "matroidal", "--vars", "4"]) == 1

    def test_cm_and_codim1(self, fixture_file):
        triangle = fixture_file("x1*x2, x1*x3, x2*x3")
        assert main(["check", triangle, "--property", "cm", "--vars", "3"]) == 0
        assert main(["check", triangle, "--property", "codim1", "--vars", "3"]) == 0
        prime_product = fixture_file(SQUARE_TIMES_PRIME, "p.txt")
        assert main(["check", prime_product, "--property", "cm", "--vars", "4"]) == 1


class TestClassify:
    def test_human_output(self, fixture_file, capsys):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["classify", path, "--vars", "4"]) == 0
        out = capsys.readouterr().out
        assert "case (ii)" in out
        assert "(x1, x2)^2 * (x3, x4)" in out

    def test_structured_output(self, fixture_file, capsys):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["--format", "structured", "classify", path, "--vars", "4"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["tag"] == "prime-power-product"

    def test_mixed_exits_one(self, fixture_file):
        path = fixture_file("x1^2, x1*x2")
        assert main(["classify", path, "--vars", "2"]) == 1


class TestDecomposeColonConstruct:
    def test_decompose_irreducible(self, fixture_file, capsys):
        path = fixture_file("x1^2, x1*x2")
        assert main(["decompose", path, "--vars", "2"]) == 0
        out = capsys.readouterr().out
        assert "(x1)" in out and "(x1^2, x2)" in out

    def test_decompose_prime_power(self, fixture_file, capsys):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["decompose", path, "--prime-power", "--vars", "4"]) == 0
        out = capsys.readouterr().out
        assert "(x1, x2)^2" in out and "(x3, x4)" in out

    def test_colon(self, fixture_file, capsys):
        path = fixture_file(SQUARE_TIMES_PRIME)
        assert main(["colon", path, "--by", "x3", "--vars", "4"]) == 0
        assert capsys.readouterr().out.strip() == "x1^2, x1*x2, x2^2"

    def test_colon_by_unit(self, fixture_file, capsys):
        path = fixture_file("x1*x2")
        assert main(["colon", path, "--by", "1", "--vars", "2"]) == 0
        assert capsys.readouterr().out.strip() == "x1*x2"

    def test_construct_veronese(self, capsys):
        assert main(
            ["construct", "veronese", "--degree", "2", "--caps", "2,1,1"]
        ) == 0
        assert capsys.readouterr().out.strip() == "x1^2, x1*x2, x1*x3, x2*x3"

    def test_construct_multipartite(self, capsys):
        assert main(
            ["construct", "multipartite", "--blocks", "1,2|3,4|5,6", "--degree", "3"]
        ) == 0
        out = capsys.readouterr().out.strip()
        assert out.count(",") == 7  # eight generators

    def test_construct_product_with_tail(self, capsys):
        assert main(
            [
                "construct", "product", "--factors", "1,2^2",
                "--tail", "x3*x4, x3*x5, x4*x5", "--vars", "5",
            ]
        ) == 0
        out = capsys.readouterr().out.strip()
        assert out.count(",") == 8  # nine generators


class TestEnumerateVerify:
    def test_enumerate(self, capsys):
        assert main(["enumerate", "--n", "3", "--d", "2", "--fully-supported"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 4

    def test_verify_clean_window_exits_zero(self, capsys):
        assert main(["verify", "t1", "--n", "4", "--d", "2"]) == 0
        assert "counterexamples: 0" in capsys.readouterr().out

    def test_verify_counterexample_window_exits_one(self, capsys):
        assert main(["verify", "t1", "--n", "5", "--d", "3"]) == 1
        out = capsys.readouterr().out
        assert "counterexamples: 10" in out

    def test_verify_closure(self, capsys):
        assert main(["verify", "closure", "--samples", "20", "--seed", "3"]) == 0

    def test_verify_ass(self, capsys):
        assert main(["verify", "ass", "--n", "4", "--d", "2"]) == 0


class TestErrorPaths:
    def test_parse_error_exits_two(self, fixture_file, capsys):
        path = fixture_file("x1x2")
        assert main(["classify", path, "--vars", "2"]) == 2
        assert "missing '*'" in capsys.readouterr().err

    def test_missing_file_exits_two(self, capsys):
        assert main(["classify", "/nonexistent/ideal.txt"]) == 2

    def test_unknown_property_usage_error(self, fixture_file):
        path = fixture_file("x1*x2")
        assert main(["check", path, "--property", "bogus"]) == 2

    def test_precondition_failure_exits_two(self, fixture_file, capsys):
        # Partial support rejected by the classifier.
        path = fixture_file("x3*x4, x3*x5, x4*x5")
        assert main(["classify", path, "--vars", "5"]) == 2

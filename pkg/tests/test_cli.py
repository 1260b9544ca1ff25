"""Command-line interface: output shapes and exit codes."""

import json

import pytest

from pinclasses.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPerm:
    def test_single_word(self, capsys):
        code, out, err = run(capsys, "perm", "2lurdld")
        assert code == 0
        assert out.strip() == "31586[4]27"

    def test_multiple_words_tabulated(self, capsys):
        code, out, _ = run(capsys, "perm", "1", "1ul")
        assert code == 0
        assert out.splitlines() == ["1\t[1]2", "1ul\t3[1]42"]

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("2lurdld\n1ul\n"))
        code, out, _ = run(capsys, "perm")
        assert code == 0
        assert out.splitlines() == ["2lurdld\t31586[4]27", "1ul\t3[1]42"]

    def test_json_single(self, capsys):
        code, out, _ = run(capsys, "perm", "--format", "json", "2lurdld")
        assert code == 0
        data = json.loads(out)
        assert data["word"] == "2lurdld"
        assert data["perm"] == "31586[4]27"

    def test_json_multi_is_list(self, capsys):
        code, out, _ = run(capsys, "perm", "--format", "json", "1", "3")
        data = json.loads(out)
        assert [d["perm"] for d in data] == ["[1]2", "1[2]"]

    def test_malformed_word(self, capsys):
        code, out, err = run(capsys, "perm", "1uu")
        assert code == 2
        assert err


class TestGf:
    def test_text_lines(self, capsys):
        code, out, _ = run(capsys, "gf", "1(ru)*")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "spec: 1(ru)*   mode: class"
        assert "f  = (1 - z)/(1 - 2z - z^3)" in lines
        assert any(line.startswith("growth = 2.20556943") for line in lines)

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "gf", "--format", "json", "1(ru)*")
        data = json.loads(out)
        assert data["mode"] == "class"
        assert data["growth"]["decimal"] == "2.20556943"
        assert data["display"]["G"] == "(z + z^3)/(1 - z)"

    def test_class_mode_rejects_nonrecurrent(self, capsys):
        code, out, err = run(capsys, "gf", "1(ul)*")
        assert code == 3
        assert "closure" in err

    def test_closure_mode_allows_it(self, capsys):
        code, out, _ = run(capsys, "gf", "1(ul)*", "--mode", "closure")
        assert code == 0
        assert "f  = (1 - z)/(1 - 3z - 2z^3)" in out.splitlines()

    def test_digits(self, capsys):
        code, out, _ = run(capsys, "gf", "1(ru)*", "--digits", "4")
        assert any(line.startswith("growth = 2.206") for line in out.splitlines())


class TestGrowth:
    def test_spec_default_closure_mode(self, capsys):
        code, out, _ = run(capsys, "growth", "1(ul)*")
        assert code == 0
        assert out.splitlines()[0] == "growth = 3.195823345"

    def test_interior_mode(self, capsys):
        code, out, _ = run(capsys, "growth", "1(ul)*", "--mode", "interior")
        assert out.splitlines()[0] == "growth = 2.20556943"

    def test_poly(self, capsys):
        code, out, _ = run(capsys, "growth", "--poly", "1-2z-z^3")
        assert code == 0
        assert out.splitlines()[0] == "growth = 2.20556943"
        assert "exact interval:" in out

    def test_poly_without_root_in_window(self, capsys):
        code, out, err = run(capsys, "growth", "--poly", "1")
        assert code == 4
        assert "no roots" in err

    def test_malformed_poly(self, capsys):
        code, _, err = run(capsys, "growth", "--poly", "1 - 2q")
        assert code == 2

    def test_tolerance_flag(self, capsys):
        code, out, _ = run(capsys, "growth", "--poly", "1-2z-z^3", "--tol", "0.01")
        assert code == 0
        import re
        from fractions import Fraction

        m = re.search(r"\[(\S+), (\S+)\]", out)
        lo, hi = Fraction(m.group(1)), Fraction(m.group(2))
        assert hi - lo <= Fraction(1, 100) * 6  # growth interval of a coarse root box

    def test_needs_spec_or_poly(self, capsys):
        code, _, err = run(capsys, "growth")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "growth", "--format", "json", "1(ru)*")
        data = json.loads(out)
        assert data["growth"]["decimal"] == "2.20556943"
        assert data["growth"]["polynomial"] == "1 - 2z - z^3"
        assert data["mode"] == "closure"


class TestVerifyTables:
    def test_clean_run(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--n-max", "5")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 5
        assert all("match" in line for line in lines)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--n-max", "4", "--format", "json")
        data = json.loads(out)["reports"]
        assert [d["length"] for d in data] == [1, 2, 3, 4]
        assert all(d["table_match"] for d in data)


class TestOracle:
    def test_composition_match(self, capsys):
        code, out, _ = run(capsys, "oracle", "1(ru)*", "--n", "5", "--method", "composition")
        assert code == 0
        assert "match: yes" in out
        assert "counts: [1, 1, 2, 5, 11, 24]" in out

    def test_subset_match(self, capsys):
        code, out, _ = run(capsys, "oracle", "1(ru)*", "--n", "4", "--method", "subset")
        assert code == 0
        assert "match: yes" in out

    def test_representation(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "4", "--method", "representation")
        assert code == 0
        assert "counts: [1, 4, 18, 92, 484]" in out

    def test_dump_perms(self, capsys, tmp_path):
        path = tmp_path / "perms.txt"
        code, out, _ = run(
            capsys, "oracle", "1(ru)*", "--n", "3", "--method", "composition",
            "--dump-perms", str(path),
        )
        assert code == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 1 + 1 + 2 + 5
        assert "[1]" in lines

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "1(ru)*", "--n", "4", "--method", "composition",
            "--format", "json",
        )
        data = json.loads(out)
        assert data["counts"] == [1, 1, 2, 5, 11]
        assert data["match"] is True

    def test_composition_rejects_nonrecurrent(self, capsys):
        code, _, err = run(capsys, "oracle", "1(ul)*", "--n", "3", "--method", "composition")
        assert code == 3

    def test_guard_exit(self, capsys):
        code, _, err = run(capsys, "oracle", "1(ru)*", "--n", "9", "--method", "subset")
        assert code == 3
        assert "guard" in err


class TestComplete:
    def test_all_quadrants(self, capsys):
        code, out, _ = run(capsys, "complete")
        assert code == 0
        assert "growth = 5.241124652" in out

    def test_two_quadrants(self, capsys):
        code, out, _ = run(capsys, "complete", "--quadrants", "1,2")
        assert code == 0
        assert "growth = 3.512049606" in out
        assert "1 - 2z - 4z^2 - 2z^3 - 8z^4 - 4z^5" in out

    def test_opposite_quadrants(self, capsys):
        code, _, err = run(capsys, "complete", "--quadrants", "1,3")
        assert code == 3

    def test_bad_quadrant_literal(self, capsys):
        code, _, err = run(capsys, "complete", "--quadrants", "1,alpha")
        assert code == 2


class TestClosureOf:
    def test_named_generators(self, capsys):
        code, out, _ = run(capsys, "closure-of", "--perms", "41[3]52")
        assert code == 0
        assert "f = (1)/(1 - 4z + 2z^2 - z^4)" in out
        assert "growth = 3.443718375" in out

    def test_below_two(self, capsys):
        code, out, _ = run(capsys, "closure-of", "--perms", "[1]2", "1[2]")
        assert code == 0
        assert "below 2" in out

    def test_malformed_perm(self, capsys):
        code, _, err = run(capsys, "closure-of", "--perms", "4[1]52")
        assert code == 2


class TestRender:
    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "1ru", "--format", "ascii")
        assert code == 0
        assert "o" in out

    def test_svg_to_file(self, capsys, tmp_path):
        path = tmp_path / "diagram.svg"
        code, out, _ = run(capsys, "render", "2lurdld", "--out", str(path))
        assert code == 0
        text = path.read_text()
        assert text.startswith("<svg")

    def test_spec_needs_steps_or_default(self, capsys):
        code, out, _ = run(capsys, "render", "1(ul)*", "--format", "ascii", "--steps", "6")
        assert code == 0

    def test_word_truncation(self, capsys):
        code, out, _ = run(capsys, "render", "1ururu", "--steps", "3", "--format", "ascii")
        assert code == 0
        # 3 placed points plus the origin
        assert sum(ch.isdigit() for ch in out) + out.count("o") == 4


class TestTopLevel:
    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["nonexistent"])
        assert exc.value.code == 2

    def test_bare_invocation_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

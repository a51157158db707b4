import json
import subprocess
import sys

import pytest

from unitgroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassifyScan:
    def test_bound_ten(self, capsys):
        code, out, _ = run(capsys, "classify-scan", "--bound", "10", "--json")
        assert code == 0
        data = json.loads(out)
        assert [f["q"] for f in data["fields"]] == [2, 3, 4, 5, 8, 9]
        assert data["disagreements"] == []

    def test_bound_two(self, capsys):
        code, out, _ = run(capsys, "classify-scan", "--bound", "2", "--json")
        assert json.loads(out)["fields"][0]["q"] == 2
        assert len(json.loads(out)["fields"]) == 1

    def test_human_output_names_families(self, capsys):
        code, out, _ = run(capsys, "classify-scan", "--bound", "10")
        assert code == 0
        assert "9" in out and "17" not in out

    def test_bad_bound_is_a_domain_error(self, capsys):
        # the argument parses as an integer; the range check is mathematics
        assert run(capsys, "classify-scan", "--bound", "1")[0] == 1


class TestFactor:
    def test_human_form(self, capsys):
        code, out, _ = run(capsys, "factor", "--field", "GF(2)", "x^5+x+1")
        assert code == 0
        assert out.strip() == "(x^2 + x + 1) * (x^3 + x^2 + 1)"

    def test_unit_prefix(self, capsys):
        code, out, _ = run(capsys, "factor", "--field", "GF(3)", "2*x^2+2*x")
        assert out.strip() == "2 * (x) * (x + 1)"

    def test_json_form(self, capsys):
        code, out, _ = run(capsys, "factor", "--field", "GF(2)", "--json",
                           "x^2+x")
        data = json.loads(out)
        assert data == {"field": "GF(2)", "input": "x^2+x", "unit": "1",
                        "factors": [{"poly": "x", "exp": 1},
                                    {"poly": "x+1", "exp": 1}]}

    def test_rejects_non_poly_input(self, capsys):
        assert run(capsys, "factor", "--field", "GF(2)", "x/(x+1)")[0] == 2

    def test_zero_is_domain_error(self, capsys):
        assert run(capsys, "factor", "--field", "GF(2)", "x+x")[0] == 1


class TestDecompose:
    def test_json_is_byte_exact(self, capsys):
        code, out, _ = run(capsys, "decompose", "--field", "GF(2)", "--json",
                           "x/(x+1)")
        assert code == 0
        assert out.strip() == ('{"constant":"1","factors":[{"poly":"x","exp":1},'
                               '{"poly":"x+1","exp":-1}]}')

    def test_human_form(self, capsys):
        code, out, _ = run(capsys, "decompose", "--field", "GF(2)",
                           "(x^5+x+1)/x")
        assert out.strip() == "1 * x^-1 * (x^2 + x + 1) * (x^3 + x^2 + 1)"

    def test_round_trips_through_grammar(self, capsys):
        from unitgroups.gf import field_make
        from unitgroups.parsing import parse_poly, parse_ratfunc
        from unitgroups.ratfunc import recompose, UnitDecomposition
        from unitgroups.gf import FqElem
        spec = field_make(3)
        src = "(2*x^3+x)/(x+2)"
        code, out, _ = run(capsys, "decompose", "--field", "GF(3)", "--json", src)
        data = json.loads(out)
        const = parse_ratfunc(spec, data["constant"])
        factors = tuple((parse_poly(spec, f["poly"]), f["exp"])
                        for f in data["factors"])
        d = UnitDecomposition(FqElem(spec, const.num[0].val), factors)
        assert recompose(d) == parse_ratfunc(spec, src)

    def test_zero_exits_one(self, capsys):
        assert run(capsys, "decompose", "--field", "GF(2)", "x+x")[0] == 1


class TestPadic:
    def test_frozen_example(self, capsys):
        code, out, _ = run(capsys, "padic", "-p", "3", "1/9")
        assert code == 0 and out.strip() == "-2"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "padic", "-p", "2", "--json", "12")
        assert json.loads(out) == {"p": 2, "input": "12", "valuation": 2}

    def test_zero_exits_one(self, capsys):
        assert run(capsys, "padic", "-p", "2", "0")[0] == 1

    def test_composite_modulus_exits_one(self, capsys):
        assert run(capsys, "padic", "-p", "6", "2")[0] == 1

    def test_garbage_exits_two(self, capsys):
        assert run(capsys, "padic", "-p", "2", "one ninth")[0] == 2


class TestHahn:
    def test_inverse(self, capsys):
        code, out, _ = run(capsys, "hahn", "inv", "1+x", "--terms", "4")
        assert code == 0
        assert out.strip() == "1 + x^(1) + x^(2) + x^(3) + O(x^(4))"

    def test_mul_dyadic(self, capsys):
        code, out, _ = run(capsys, "hahn", "mul", "x^(1/2)", "x^(1/2)",
                           "--group", "Z[1/2]")
        assert out.strip() == "x^(1)"

    def test_val_lex(self, capsys):
        code, out, _ = run(capsys, "hahn", "val", "x^(0,1) + x^(1,0)",
                           "--group", "Z^2", "--json")
        assert json.loads(out) == {"valuation": "(0,1)"}

    def test_split_json(self, capsys):
        code, out, _ = run(capsys, "hahn", "split", "x^(-3) + x^(2)", "--json")
        assert json.loads(out) == {"exponent": "-3",
                                   "unit": "1 + x^(5)"}

    def test_section(self, capsys):
        code, out, _ = run(capsys, "hahn", "section", "3/4", "--group", "Z[1/2]")
        assert out.strip() == "x^(3/4)"

    def test_arity_checked(self, capsys):
        assert run(capsys, "hahn", "inv", "1+x")[0] == 0
        assert run(capsys, "hahn", "mul", "x")[0] == 2

    def test_zero_inverse_exits_one(self, capsys):
        assert run(capsys, "hahn", "inv", "x+x")[0] == 1


class TestPerfectClosure:
    def test_frobenius_and_level(self, capsys):
        code, out, _ = run(capsys, "pc", "frobenius", "t^(1/2)")
        assert out.strip() == "t"
        code, out, _ = run(capsys, "pc", "level", "t^(1/4)+t", "--json")
        assert json.loads(out) == {"level": 2}

    def test_decompose_recompose_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "pc", "decompose", "t^(1/2)*(t+1)", "--json")
        assert code == 0
        payload = out.strip()
        assert json.loads(payload) == {"factors": [
            {"poly": "t", "exp": "1/2"}, {"poly": "t+1", "exp": "1"}]}
        code, out, _ = run(capsys, "pc", "recompose", payload)
        assert code == 0
        assert out.strip() == "t^(3/2) + t^(1/2)"

    def test_recompose_rejects_bad_json(self, capsys):
        assert run(capsys, "pc", "recompose", "{not json")[0] == 2
        assert run(capsys, "pc", "recompose", '{"factors": 3}')[0] == 2

    def test_frobenius_inv(self, capsys):
        code, out, _ = run(capsys, "pc", "frobenius-inv", "t+t^3")
        assert out.strip() == "t^(3/2) + t^(1/2)"


class TestNorm:
    def test_frozen_example(self, capsys):
        code, out, _ = run(capsys, "norm", "--ext", "GF(2)(t)[y]/(y^2+y+t)", "y")
        assert code == 0 and out.strip() == "t"

    def test_json_carries_status(self, capsys):
        code, out, _ = run(capsys, "norm", "--ext", "GF(2)(t)[y]/(y^2+y+t)",
                           "--json", "y+1")
        data = json.loads(out)
        assert data["status"] == "Verified"
        assert data["norm"] == "t"
        assert data["extension"] == "GF(2)(t)[y]/(y^2+y+t)"

    def test_non_squarefree_modulus_exits_one(self, capsys):
        assert run(capsys, "norm", "--ext", "GF(2)(t)[y]/(y^2+t^2)", "y")[0] == 1

    def test_malformed_descriptor_exits_two(self, capsys):
        assert run(capsys, "norm", "--ext", "GF(2)(t)[y]", "y")[0] == 2

    def test_norm_of_zero_exits_one(self, capsys):
        assert run(capsys, "norm", "--ext", "GF(2)(t)[y]/(y^2+y+t)", "y+y")[0] == 1


class TestRank:
    def test_frozen_example(self, capsys):
        code, out, _ = run(capsys, "rank", "--field", "GF(2)", "x", "x+1",
                           "x^2+x")
        assert code == 0 and out.strip() == "2"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "rank", "--field", "GF(3)", "--json", "2")
        assert json.loads(out) == {"rank": 0, "count": 1}


class TestAxioms:
    def test_probe_filter(self, capsys):
        code, out, _ = run(capsys, "axioms", "--probe", "padic-2", "--trials",
                           "50", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["trials"] == 50 and data["all_passed"] is True
        assert data["probes"] == [{"name": "padic-2", "passed": True,
                                   "detail": "pass (50 trials)"}]

    def test_all_probes_pass(self, capsys):
        code, out, _ = run(capsys, "axioms", "--trials", "20", "--json")
        assert code == 0
        data = json.loads(out)
        names = [p["name"] for p in data["probes"]]
        assert names == ["padic-2", "padic-3", "padic-5", "ratfunc-x",
                         "ratfunc-x+1", "ratfunc-x^2+x+1", "hahn-GF(2)-Z",
                         "hahn-GF(2)-Z^2", "hahn-GF(2)-Z[1/2]"]
        assert all(p["passed"] for p in data["probes"])

    def test_unknown_probe_exits_two(self, capsys):
        assert run(capsys, "axioms", "--probe", "nope")[0] == 2


class TestSelftest:
    def test_quick_is_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "selftest", "--quick", "--seed", "3",
                             "--json")
        code2, out2, _ = run(capsys, "selftest", "--quick", "--seed", "3",
                             "--json")
        assert code1 == code2 == 0
        assert out1 == out2
        data = json.loads(out1)
        assert all(c["passed"] for c in data["checks"])

    def test_quick_human_lines(self, capsys):
        code, out, _ = run(capsys, "selftest", "--quick", "--seed", "1")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.startswith("[")]
        assert len(lines) == 9
        assert all(ln.startswith("[PASS]") for ln in lines)


class TestEntryPoints:
    def test_module_invocation(self):
        out = subprocess.run([sys.executable, "-m", "unitgroups", "padic",
                              "-p", "3", "1/9"], capture_output=True, text=True)
        assert out.returncode == 0 and out.stdout.strip() == "-2"

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0

    def test_no_command_exits_two(self, capsys):
        with pytest.raises(SystemExit):
            main([])

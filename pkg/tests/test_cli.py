from __future__ import annotations

import json

from click.testing import CliRunner

from morphprim.cli import cli

from conftest import EXAMPLE_WORD


def invoke(*args, input=None):
    return CliRunner().invoke(cli, list(args), input=input)


class TestCheck:
    def test_args(self):
        res = invoke("check", "abaaba", "abba")
        assert res.exit_code == 0
        assert res.output.splitlines() == [
            "abaaba\timprimitive",
            "abba\tprimitive",
        ]

    def test_stdin(self):
        res = invoke("check", input="abaaba\nabba\n")
        assert res.exit_code == 0
        assert res.output.splitlines() == [
            "abaaba\timprimitive",
            "abba\tprimitive",
        ]

    def test_empty_word_is_primitive(self):
        res = invoke("check", input="\n")
        assert res.exit_code == 0
        assert res.output.splitlines() == ["\tprimitive"]

    def test_tokens_mode(self):
        res = invoke("check", "--tokens", "foo bar foo foo bar foo")
        assert res.exit_code == 0
        assert res.output.strip().endswith("imprimitive")


class TestFactorize:
    def test_example_word_text(self):
        res = invoke("factorize", EXAMPLE_WORD)
        assert res.exit_code == 0
        lines = res.output.splitlines()
        assert lines[0] == "c↦c, a↦ε, b↦aab, d↦aad, e↦e"
        assert lines[1] == "c|aab|c|aad|e|aab|e|aad"
        assert lines[2] == "imprimitive"

    def test_abaaba(self):
        res = invoke("factorize", "abaaba")
        assert res.output.splitlines()[0] == "a↦ε, b↦aba"
        assert res.output.splitlines()[1] == "aba|aba"

    def test_single_letter_identity(self):
        res = invoke("factorize", "a")
        assert res.output.splitlines() == ["a↦a", "a", "primitive"]

    def test_json(self):
        res = invoke("factorize", "abaaba", "--json")
        doc = json.loads(res.output)
        assert doc["primitive"] is False
        assert doc["images"] == {"a": "", "b": "aba"}
        assert doc["expanding"] == ["b"]
        assert doc["factor_cuts"] == [0, 3, 6]


class TestTrace:
    def test_example_rounds(self):
        res = invoke("trace", EXAMPLE_WORD)
        doc = json.loads(res.output)
        assert [r["letter"] for r in doc["rounds"]] == ["c", "b", "d", "e"]
        assert doc["rounds"][0]["L"] == [0, 3, 4, 7, 16]
        assert doc["rounds"][0]["R"] == [0, 1, 4, 5, 16]
        assert doc["rounds"][3]["L"] == [0, 3, 4, 7, 8, 11, 12, 15, 16]
        assert doc["rounds"][3]["R"] == [0, 1, 4, 5, 8, 9, 12, 13, 16]
        assert doc["final"]["images"] == {
            "a": "", "b": "aab", "c": "c", "d": "aad", "e": "e",
        }

    def test_abba_two_rounds(self):
        doc = json.loads(invoke("trace", "abba").output)
        assert [r["letter"] for r in doc["rounds"]] == ["a", "b"]

    def test_reserialization_is_byte_identical(self):
        out = invoke("trace", EXAMPLE_WORD).output.strip()
        assert json.dumps(json.loads(out), sort_keys=True, ensure_ascii=False) == out


class TestOracle:
    def test_abaaba(self):
        res = invoke("oracle", "abaaba")
        lines = res.output.splitlines()
        assert lines[0] == "abaaba\timprimitive"
        assert lines[1] == "min_expanding\t1"
        assert lines[2] == "witness\ta↦ε, b↦aba"

    def test_abba(self):
        res = invoke("oracle", "abba")
        assert res.output.splitlines()[0] == "abba\tprimitive"

    def test_guard_refusal_exit_code(self):
        res = invoke("oracle", "a" * 17)
        assert res.exit_code == 2
        assert "refused" in res.output

    def test_guard_override(self):
        assert invoke("oracle", "a" * 17, "--max-len", "20").exit_code == 0
        assert invoke("oracle", "a" * 17, "--force").exit_code == 0


class TestGen:
    def test_family_wn(self):
        assert invoke("gen", "--family", "wn", "--n", "3").output == "abccba\n"
        assert invoke("gen", "--family", "wn", "--n", "1").output == "aa\n"

    def test_random_deterministic(self):
        args = ("gen", "--random", "--len", "12", "--alphabet", "3", "--seed", "7")
        assert invoke(*args).output == invoke(*args).output

    def test_wn_is_palindrome_with_k_letters(self):
        for k in (1, 2, 5, 10):
            out = invoke("gen", "--family", "wn", "--n", str(k)).output.strip()
            assert len(out) == 2 * k
            assert out == out[::-1]
            assert len(set(out)) == k

    def test_usage_error_exit_code(self):
        assert invoke("gen").exit_code == 1
        assert invoke("gen", "--family", "wn").exit_code == 1


class TestBench:
    def test_wn_family_csv(self):
        res = invoke("bench", "--family", "wn", "--n-max", "4", "--csv")
        lines = res.output.splitlines()
        assert lines[0] == "n,m,expanding,rounds,scanned,edges,ns"
        for k, line in enumerate(lines[1:], start=1):
            n, m, e, rounds = map(int, line.split(",")[:4])
            assert (n, m) == (2 * k, k)
            assert rounds == e == k  # primitive family: one round per letter

    def test_file_input_with_empty_word(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("abaaba\n\n")
        res = invoke("bench", "--file", str(path), "--csv")
        rows = [line.split(",") for line in res.output.splitlines()[1:]]
        assert rows[0][3] == "1"  # abaaba: one round
        assert rows[1][:4] == ["0", "0", "0", "0"]  # empty word: zero rounds

    def test_stdin_input(self):
        res = invoke("bench", "--file", "-", "--csv", input="abba\n")
        assert res.exit_code == 0
        assert len(res.output.splitlines()) == 2

    def test_missing_file_exit_code(self):
        res = invoke("bench", "--file", "/nonexistent/words.txt")
        assert res.exit_code == 3

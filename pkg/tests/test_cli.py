import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

from src.cli import EXIT_FAILS, EXIT_OK, EXIT_USAGE, main
from src.core.hilbert import check_derivation, load_derivation


MP_BASIC = """\
system: D2-MINUS
premises: p ; p -> q
1. p  [premise]
2. p -> q  [premise]
3. q  [mp 1 2]
"""


class TestCli(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.root = Path(self._tmp.name)
        self.config_dir = str(self.root / "config")

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def run_cli(self, *argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(["--config-dir", self.config_dir, *argv])
        return code, out.getvalue(), err.getvalue()

    def test_parse_prints_canonical_form(self) -> None:
        code, out, _ = self.run_cli("parse", "p -> (q -> p)")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "p -> q -> p\n")

    def test_parse_json(self) -> None:
        code, out, _ = self.run_cli("--format", "json", "parse", "p -> (q -> p)")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["language"], "Lr-")
        self.assertEqual((data["depth"], data["size"]), (2, 5))

    def test_syntax_error_is_a_usage_error(self) -> None:
        code, out, err = self.run_cli("parse", "p ->")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error: "))

    def test_deeply_parenthesized_formula_parses(self) -> None:
        code, out, _ = self.run_cli("parse", "(" * 40 + "p &r q" + ")" * 40)
        self.assertEqual((code, out), (EXIT_OK, "p &r q\n"))

    def test_recursion_error_is_a_usage_error(self) -> None:
        with mock.patch("src.cli.app.run_command", side_effect=RecursionError("maximum recursion depth exceeded")):
            code, out, err = self.run_cli("parse", "p")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error: "))

    def test_missing_command(self) -> None:
        code, _, _ = self.run_cli()
        self.assertEqual(code, EXIT_USAGE)

    def test_eval_and_table(self) -> None:
        code, out, _ = self.run_cli("eval", "--matrix", "D2M-3", "--assign", "p=i", "~p")
        self.assertEqual((code, out), (EXIT_OK, "i\n"))
        code, out, _ = self.run_cli("table", "--matrix", "D2M-3", "p -> q")
        rows = out.splitlines()
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(rows), 9)
        self.assertEqual(rows[0], "p=1 q=1 | 1")
        self.assertEqual(rows[-1], "p=0 q=0 | 1")

    def test_unknown_matrix(self) -> None:
        code, _, err = self.run_cli("eval", "--matrix", "D2M-9", "p")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("D2M-9", err)

    def test_entails_exit_codes(self) -> None:
        code, out, _ = self.run_cli("entails", "--semantics", "D2M-3", "--premise", "p", "--premise", "~p", "q")
        self.assertEqual((code, out), (EXIT_FAILS, "FAILS\np=i\nq=0\n"))
        code, out, _ = self.run_cli("entails", "--semantics", "kripke", "--premise", "p", "--premise", "p -> q", "q")
        self.assertEqual((code, out), (EXIT_OK, "HOLDS\n"))

    def test_entails_json(self) -> None:
        code, out, _ = self.run_cli(
            "--format", "json", "entails", "--semantics", "routley:base", "--premise", "p & ~p", "q"
        )
        self.assertEqual(code, EXIT_FAILS)
        data = json.loads(out)
        self.assertEqual(data["verdict"], "FAILS")
        self.assertEqual(data["semantics"], "routley:base")

    def test_countermodel(self) -> None:
        code, out, _ = self.run_cli("countermodel", "--semantics", "kripke", "--premise", "p", "--premise", "~p", "q")
        self.assertEqual((code, out), (EXIT_FAILS, "FAILS\nWORLDS 2\nw1: p=1 q=0\nw2: p=0 q=0\n"))
        code, out, _ = self.run_cli("countermodel", "--semantics", "D2M-3", "p -> p")
        self.assertEqual((code, out), (EXIT_OK, "HOLDS\n"))

    def test_check_and_deduce_files(self) -> None:
        source = self.root / "mp.txt"
        source.write_text(MP_BASIC, encoding="utf-8")
        code, out, _ = self.run_cli("check", str(source))
        self.assertEqual((code, out), (EXIT_OK, "VALID\nconclusion: q\n"))

        target = self.root / "out" / "mp_discharged.txt"
        code, out, _ = self.run_cli("deduce", str(source), "--discharge", "p", "--output", str(target))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("system: D2-MINUS\npremises: p -> q\n"))
        self.assertTrue(check_derivation(load_derivation(target)).valid)

    def test_check_invalid_file(self) -> None:
        source = self.root / "bad.txt"
        source.write_text("system: D2-MINUS\npremises: p\n1. q  [premise]\n", encoding="utf-8")
        code, out, _ = self.run_cli("check", str(source))
        self.assertEqual((code, out), (EXIT_FAILS, "INVALID\nline 1: not-a-premise\n"))

    def test_deduce_needs_discharge(self) -> None:
        code, _, _ = self.run_cli("deduce")
        self.assertEqual(code, EXIT_USAGE)

    def test_deduce_corpus(self) -> None:
        code, out, _ = self.run_cli("deduce", "--corpus")
        self.assertEqual(code, EXIT_OK)
        last = out.splitlines()[-1]
        self.assertRegex(last, r"^corpus: (\d+)/\1 verified$")

    def test_crosscheck_with_report(self) -> None:
        report = self.root / "report.json"
        code, out, _ = self.run_cli("crosscheck", "--pair", "3v-vs-4v", "--samples", "20", "--output", str(report))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("AGREEMENTS 20", out)
        self.assertEqual(json.loads(report.read_text(encoding="utf-8"))["samples"], 20)

    def test_noncontainment_and_listings(self) -> None:
        code, out, _ = self.run_cli("noncontainment")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("FACT a CONFIRMED", out)
        code, out, _ = self.run_cli("systems", "D2-NC")
        self.assertEqual(out.splitlines()[0], "D2-NC (L-NC, 9 schemata)")
        code, out, _ = self.run_cli("matrices")
        self.assertIn("D2M-3\tLr-\t1i0\t1i", out.splitlines())

    def test_config_set_persists(self) -> None:
        code, out, _ = self.run_cli("config", "--set", "default_seed=7", "--set", "output_format=json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["default_seed"], 7)
        saved = json.loads((Path(self.config_dir) / "settings.json").read_text(encoding="utf-8"))
        self.assertEqual((saved["default_seed"], saved["output_format"]), (7, "json"))

    def test_config_rejects_unknown_key(self) -> None:
        code, _, err = self.run_cli("config", "--set", "colour=blue")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("colour", err)


if __name__ == "__main__":
    unittest.main()

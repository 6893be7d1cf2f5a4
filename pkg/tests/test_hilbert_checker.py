import tempfile
import unittest
from pathlib import Path

from src.core.errors import DerivationFormatError, UnknownRegistryKeyError
from src.core.formula import Atom, parse, parse_schema, print_formula
from src.core.hilbert import (
    Derivation,
    DerivationLine,
    FailureReason,
    Justification,
    ProofChecker,
    check_derivation,
    find_schema,
    list_system,
    list_systems,
    load_derivation,
    match_schema,
    parse_derivation,
    render_derivation,
    save_derivation,
)


MP_BASIC = """\
system: D2-MINUS
premises: p ; p -> q
1. p  [premise]
2. p -> q  [premise]
3. q  [mp 1 2]
"""


def _derivation(body: str, system: str = "D2-MINUS", premises: str = "p ; p -> q"):
    return parse_derivation(f"system: {system}\npremises: {premises}\n{body}")


class TestAxiomSystems(unittest.TestCase):
    def test_schema_counts(self) -> None:
        self.assertEqual(len(list_system("D2-MINUS").schemata), 10)
        self.assertEqual(len(list_system("D2-PLUS").schemata), 14)
        self.assertEqual(len(list_system("D2-LEFT").schemata), 10)
        self.assertEqual(len(list_system("D2-NC").schemata), 9)
        self.assertEqual(len(list_system("D2-DN").schemata), 10)
        self.assertEqual([s.system_id for s in list_systems()], ["D2-MINUS", "D2-PLUS", "D2-LEFT", "D2-NC", "D2-DN"])

    def test_negation_conditional_axioms(self) -> None:
        texts = [s.text for s in list_system("D2-NC").schemata]
        self.assertIn("~(A -> B) -> ~B", texts)
        self.assertIn("~(A -> B) -> A", texts)

    def test_biconditional_schema_is_expanded(self) -> None:
        self.assertEqual(list_system("D2-MINUS").schema("Ax8").text, "(~~A -> A) &r (A -> ~~A)")
        self.assertEqual(list_system("D2-LEFT").schema("ax9'").text, "(~(A &l B) -> A -> ~B) &l ((A -> ~B) -> ~(A &l B))")

    def test_lookup_is_case_insensitive(self) -> None:
        self.assertEqual(list_system("d2-minus").system_id, "D2-MINUS")
        with self.assertRaises(UnknownRegistryKeyError):
            list_system("D3")
        with self.assertRaises(UnknownRegistryKeyError):
            list_system("D2-MINUS").schema("Ax16")


class TestSchemaMatching(unittest.TestCase):
    def test_match_binds_metavariables(self) -> None:
        schema = parse_schema("A -> (B -> A)", "Lr-")
        binding = match_schema(schema, parse("p -> (q -> r) -> p", "Lr-"))
        self.assertEqual(binding, {"A": Atom("p"), "B": parse("q -> r", "Lr-")})

    def test_repeated_metavariable_must_agree(self) -> None:
        schema = parse_schema("A -> (B -> A)", "Lr-")
        self.assertIsNone(match_schema(schema, parse("p -> q -> r", "Lr-")))

    def test_connective_mismatch(self) -> None:
        schema = parse_schema("A &r B -> A", "Lr-")
        self.assertIsNone(match_schema(schema, parse("p -> q -> p", "Lr-")))

    def test_find_schema_uses_registry_order(self) -> None:
        system = list_system("D2-MINUS")
        self.assertEqual(find_schema(system, parse("p &r q -> p", "Lr-")), "Ax4")
        self.assertEqual(find_schema(system, parse("(~p -> p) -> p", "Lr-")), "Ax7")
        self.assertIsNone(find_schema(system, parse("p -> p", "Lr-")))

    def test_checker_identifies_axioms_per_system(self) -> None:
        checker = ProofChecker()
        self.assertEqual(checker.identify_axiom("D2-MINUS", parse("p -> q -> p", "Lr-")), "Ax1")
        self.assertEqual(checker.identify_axiom("D2-NC", parse("~(p -> q) -> p", "L-NC")), "Ax10.1")
        self.assertIsNone(checker.identify_axiom("D2-MINUS", parse("p -> p", "Lr-")))


class TestCheckDerivation(unittest.TestCase):
    def test_modus_ponens_derivation_is_valid(self) -> None:
        verdict = check_derivation(parse_derivation(MP_BASIC))
        self.assertTrue(verdict.valid)
        self.assertEqual(verdict.to_text(), "VALID\nconclusion: q")

    def test_not_a_premise(self) -> None:
        verdict = check_derivation(_derivation("1. r  [premise]\n"))
        self.assertFalse(verdict.valid)
        self.assertEqual(verdict.first_bad_line, 1)
        self.assertEqual(verdict.reason, FailureReason.NOT_A_PREMISE)
        self.assertEqual(verdict.to_text(), "INVALID\nline 1: not-a-premise")

    def test_no_schema_match(self) -> None:
        verdict = check_derivation(_derivation("1. p  [premise]\n2. p -> p  [ax1]\n"))
        self.assertEqual((verdict.first_bad_line, verdict.reason), (2, FailureReason.NO_SCHEMA_MATCH))

    def test_unknown_schema_name(self) -> None:
        verdict = check_derivation(_derivation("1. p -> q -> p  [ax16]\n"))
        self.assertEqual(verdict.reason, FailureReason.NO_SCHEMA_MATCH)

    def test_bad_mp_reference(self) -> None:
        verdict = check_derivation(_derivation("1. p  [premise]\n2. p -> q  [premise]\n3. q  [mp 1 5]\n"))
        self.assertEqual((verdict.first_bad_line, verdict.reason), (3, FailureReason.BAD_MP_REFERENCE))
        verdict = check_derivation(_derivation("1. p  [premise]\n2. q  [mp 2 1]\n"))
        self.assertEqual(verdict.reason, FailureReason.BAD_MP_REFERENCE)

    def test_mp_shape_mismatch(self) -> None:
        verdict = check_derivation(_derivation("1. p  [premise]\n2. p -> q  [premise]\n3. q  [mp 2 1]\n"))
        self.assertEqual((verdict.first_bad_line, verdict.reason), (3, FailureReason.MP_SHAPE_MISMATCH))

    def test_wrong_language(self) -> None:
        verdict = check_derivation(_derivation("1. p | q  [premise]\n", premises="p | q"))
        self.assertEqual((verdict.first_bad_line, verdict.reason), (1, FailureReason.WRONG_LANGUAGE))

    def test_unnamed_axiom_is_identified(self) -> None:
        verdict = check_derivation(_derivation("1. p -> q -> p  [axiom]\n2. p  [premise]\n3. q -> p  [mp 2 1]\n"))
        self.assertTrue(verdict.valid)
        self.assertEqual(verdict.matched_schemata, {1: "Ax1"})

    def test_substitution_hint_must_agree_with_match(self) -> None:
        f = parse("p -> q -> p", "Lr-")
        good = Derivation("D2-MINUS", (), (DerivationLine(f, Justification.axiom("Ax1", {"A": Atom("p"), "B": Atom("q")})),))
        self.assertTrue(check_derivation(good).valid)
        partial = Derivation("D2-MINUS", (), (DerivationLine(f, Justification.axiom("Ax1", {"B": Atom("q")})),))
        self.assertTrue(check_derivation(partial).valid)
        wrong = Derivation("D2-MINUS", (), (DerivationLine(f, Justification.axiom("Ax1", {"A": Atom("p"), "B": Atom("r")})),))
        verdict = check_derivation(wrong)
        self.assertEqual((verdict.first_bad_line, verdict.reason), (1, FailureReason.NO_SCHEMA_MATCH))
        self.assertIn("B", verdict.detail)

    def test_unnamed_axiom_hint_filters_candidates(self) -> None:
        f = parse("p -> q -> p", "Lr-")
        hinted = Derivation("D2-MINUS", (), (DerivationLine(f, Justification.axiom(None, {"A": Atom("p")})),))
        self.assertEqual(check_derivation(hinted).matched_schemata, {1: "Ax1"})
        foreign = Derivation("D2-MINUS", (), (DerivationLine(f, Justification.axiom(None, {"C": Atom("p")})),))
        self.assertEqual(check_derivation(foreign).reason, FailureReason.NO_SCHEMA_MATCH)

    def test_variant_system_axioms(self) -> None:
        nc = _derivation("1. ~(p -> q) -> ~q  [ax10.2]\n", system="D2-NC", premises="")
        self.assertTrue(check_derivation(nc).valid)
        left = _derivation("1. p &l q -> q  [ax5]\n", system="D2-LEFT", premises="")
        self.assertTrue(check_derivation(left).valid)
        dn = _derivation("1. ~d p -> ~d ~d p -> q  [ax8']\n", system="D2-DN", premises="")
        self.assertTrue(check_derivation(dn).valid)
        plus = _derivation("1. p -> p | q  [ax13]\n", system="D2-PLUS", premises="")
        self.assertTrue(check_derivation(plus).valid)


class TestDerivationFiles(unittest.TestCase):
    def test_render_round_trip(self) -> None:
        self.assertEqual(render_derivation(parse_derivation(MP_BASIC)), MP_BASIC)

    def test_comments_and_blank_lines_are_ignored(self) -> None:
        text = "# modus ponens\nsystem: D2-MINUS\n\npremises: p ; p -> q\n1. p  [premise]  # first\n2. p -> q  [premise]\n3. q  [MP 1 2]\n"
        self.assertTrue(check_derivation(parse_derivation(text)).valid)

    def test_format_errors(self) -> None:
        cases = {
            "missing system": "premises: p\n1. p  [premise]\n",
            "numbering": "system: D2-MINUS\npremises: p\n2. p  [premise]\n",
            "justification": "system: D2-MINUS\npremises: p\n1. p  [because]\n",
            "no lines": "system: D2-MINUS\npremises: p\n",
            "bad formula": "system: D2-MINUS\npremises: p\n1. p ->  [premise]\n",
        }
        for name, text in cases.items():
            with self.subTest(case=name):
                with self.assertRaises(DerivationFormatError):
                    parse_derivation(text)

    def test_save_and_check_file(self) -> None:
        with tempfile.TemporaryDirectory() as td:
            path = Path(td) / "mp.txt"
            save_derivation(parse_derivation(MP_BASIC), path)
            self.assertEqual(path.read_text(encoding="utf-8"), MP_BASIC)
            self.assertEqual(load_derivation(path).conclusion, Atom("q"))
            verdict = ProofChecker().check_file(path)
            self.assertTrue(verdict.valid)
            self.assertEqual(print_formula(verdict.conclusion), "q")


if __name__ == "__main__":
    unittest.main()

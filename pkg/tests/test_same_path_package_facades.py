import importlib
import unittest


class TestSamePathPackageFacades(unittest.TestCase):
    def test_core_facades_export_expected_symbols(self) -> None:
        cases = {
            "src.core.formula": ["parse", "print_formula", "Formula", "Atom", "Connective", "lookup_language"],
            "src.core.matrix": ["MatrixChecker", "TruthValue", "lookup_matrix", "entails_matrix"],
            "src.core.kripke": ["KripkeSearcher", "KripkeModel", "RoutleyModel", "entails_discussive", "routley_entails"],
            "src.core.hilbert": ["ProofChecker", "check_derivation", "deduction_transform", "list_system"],
            "src.core.crosscheck": ["CrossChecker", "crosscheck", "noncontainment_check", "export_report"],
        }

        for module_name, exports in cases.items():
            module = importlib.import_module(module_name)
            self.assertTrue(hasattr(module, "__path__"), module_name)
            for export in exports:
                self.assertTrue(hasattr(module, export), f"{module_name}.{export}")
            for export in getattr(module, "__all__", []):
                self.assertTrue(hasattr(module, export), f"{module_name}.__all__ {export}")

    def test_cli_facade_exports_expected_symbols(self) -> None:
        cli = importlib.import_module("src.cli")
        self.assertTrue(hasattr(cli, "__path__"))
        for export in ("main", "build_parser", "run_command", "HANDLERS", "CommandResult"):
            self.assertTrue(hasattr(cli, export), export)
        self.assertEqual(
            sorted(cli.HANDLERS),
            sorted(
                [
                    "check",
                    "config",
                    "countermodel",
                    "crosscheck",
                    "deduce",
                    "entails",
                    "eval",
                    "matrices",
                    "noncontainment",
                    "parse",
                    "systems",
                    "table",
                ]
            ),
        )


if __name__ == "__main__":
    unittest.main()

import logging
import unittest

import hypothesis.strategies as st
from hypothesis import given, settings

from src.core.crosscheck import GeneratorConfig, gen_formula
from src.core.errors import CapacityError, LanguageError, ModelError, ValuationError
from src.core.formula import parse, variables
from src.core.kripke import (
    KripkeModel,
    KripkeSearcher,
    RoutleyModel,
    StarMode,
    belnap_decode,
    collapse_pattern,
    default_bound,
    entails_discussive,
    fourvalued_decode,
    interpret,
    interpret_routley,
    involutions,
    routley_entails,
    world_names,
    world_patterns,
    worlds_pattern,
)
from src.core.matrix import TruthValue, eval_formula, lookup_matrix
from src.utils.logger import LogCapture


V = TruthValue


def _f(text: str, lang: str = "Lr-"):
    return parse(text, lang)


class TestKripkeModel(unittest.TestCase):
    def setUp(self) -> None:
        self.model = KripkeModel(("w1", "w2"), {"p": (True, False), "q": (False, False)})

    def test_interpret_examples(self) -> None:
        self.assertTrue(interpret(self.model, "w1", _f("p &r ~p")))
        self.assertFalse(interpret(self.model, "w2", _f("p &r ~p")))
        self.assertTrue(interpret(self.model, "w2", _f("~p")))
        self.assertTrue(interpret(self.model, "w1", _f("q -> p")))
        # 조건문의 전건이 어딘가에서 참이면 후건의 세계별 값을 따른다
        self.assertFalse(interpret(self.model, "w2", _f("p -> p")))

    def test_discussive_negation_and_left_conjunction(self) -> None:
        self.assertTrue(interpret(self.model, "w2", _f("~d p", "L-DN")))
        self.assertFalse(interpret(self.model, "w1", _f("~d ~d p", "L-DN")))
        self.assertEqual(worlds_pattern(self.model, _f("q &l p", "Ll-")), (False, False))
        self.assertEqual(worlds_pattern(self.model, _f("p &l ~p", "Ll-")), (False, True))

    def test_four_valued_decoding(self) -> None:
        self.assertEqual(fourvalued_decode(self.model, _f("p")), V.I)
        self.assertEqual(fourvalued_decode(self.model, _f("~p")), V.J)
        self.assertEqual(fourvalued_decode(self.model, _f("q -> p")), V.ONE)
        self.assertEqual(fourvalued_decode(self.model, _f("q")), V.ZERO)

    def test_four_valued_decoding_needs_two_worlds(self) -> None:
        model = KripkeModel(("w1",), {"p": (True,)})
        with self.assertRaises(ModelError):
            fourvalued_decode(model, _f("p"))

    def test_collapse_pattern(self) -> None:
        self.assertEqual(collapse_pattern((True, True, True)), V.ONE)
        self.assertEqual(collapse_pattern((True, False, True)), V.I)
        self.assertEqual(collapse_pattern((False, False)), V.ZERO)

    def test_model_validation(self) -> None:
        with self.assertRaises(ModelError):
            KripkeModel((), {})
        with self.assertRaises(ModelError):
            KripkeModel(("w1", "w1"), {})
        with self.assertRaises(ModelError):
            KripkeModel(("w1", "w2"), {"p": (True,)})
        with self.assertRaises(ValuationError):
            interpret(self.model, "w3", _f("p"))
        with self.assertRaises(ValuationError):
            interpret(self.model, "w1", _f("r"))

    def test_render(self) -> None:
        self.assertEqual(self.model.to_text(), "WORLDS 2\nw1: p=1 q=0\nw2: p=0 q=0")
        self.assertEqual(self.model.to_dict()["valuation"], {"p": [1, 0], "q": [0, 0]})


class TestKripkeSearch(unittest.TestCase):
    def test_world_patterns_order(self) -> None:
        self.assertEqual(world_patterns(1), (1, 0))
        self.assertEqual(world_patterns(2), (3, 1, 2, 0))
        self.assertEqual(world_names(3), ("w1", "w2", "w3"))

    def test_explosion_fails_with_two_world_countermodel(self) -> None:
        verdict = entails_discussive([_f("p"), _f("~p")], _f("q"), "Lr-")
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.label, "FAILS")
        self.assertEqual(verdict.bound, 2)
        self.assertEqual(verdict.to_text(), "FAILS\nWORLDS 2\nw1: p=1 q=0\nw2: p=0 q=0")

    def test_modus_ponens_holds_completely(self) -> None:
        verdict = entails_discussive([_f("p"), _f("p -> q")], _f("q"), "Lr-")
        self.assertTrue(verdict.holds)
        self.assertTrue(verdict.complete)
        self.assertEqual(verdict.label, "HOLDS")

    def test_disjunction_language_reports_bound(self) -> None:
        f = _f("~(p | ~p) -> q", "Lr")
        self.assertEqual(default_bound([], f, "Lr"), 7)
        verdict = entails_discussive([], f, "Lr")
        self.assertTrue(verdict.holds)
        self.assertFalse(verdict.complete)
        self.assertEqual(verdict.label, "HOLDS-UP-TO-BOUND 7")

    def test_de_morgan_axiom_fails_in_two_worlds(self) -> None:
        verdict = entails_discussive([], _f("~(p | q) <-> ~p &r ~q", "Lr"), "Lr", 2)
        self.assertFalse(verdict.holds)
        model = verdict.countermodel
        assert isinstance(model, KripkeModel)
        self.assertEqual(dict(model.valuation), {"p": (True, False), "q": (False, True)})

    def test_bound_is_clamped_with_warning(self) -> None:
        f = _f("p | q | r", "Lr")
        with LogCapture("src.core.kripke.search", level=logging.WARNING) as capture:
            bound = default_bound([], f, "Lr", bit_limit=6)
        self.assertEqual(bound, 2)
        self.assertTrue(any(msg.startswith("WARNING") for msg in capture.messages))

    def test_capacity_and_bound_errors(self) -> None:
        with self.assertRaises(CapacityError) as ctx:
            entails_discussive([], _f("p -> q -> r"), "Lr-", 7, bit_limit=20)
        self.assertEqual(ctx.exception.bits, 21)
        with self.assertRaises(ModelError):
            entails_discussive([], _f("p"), "Lr-", 0)

    def test_language_is_checked(self) -> None:
        with self.assertRaises(LanguageError):
            entails_discussive([], _f("p | q", "Lr"), "Lr-")

    def test_facade(self) -> None:
        searcher = KripkeSearcher(bit_limit=20)
        self.assertEqual(searcher.default_bound([], _f("p"), "Lr-"), 2)
        self.assertFalse(searcher.entails([_f("p"), _f("~p")], _f("q"), "Lr-").holds)
        model = KripkeModel(("w1", "w2"), {"p": (False, True)})
        self.assertEqual(searcher.decode(model, _f("p")), V.J)


class TestRoutleySearch(unittest.TestCase):
    def test_involutions(self) -> None:
        self.assertEqual(involutions(2), ((0, 1), (1, 0)))
        self.assertEqual(len(involutions(3)), 4)

    def test_base_mode_countermodel(self) -> None:
        verdict = routley_entails(_f("p & ~p", "L-FDE"), _f("q", "L-FDE"), "base", 2)
        self.assertFalse(verdict.holds)
        model = verdict.countermodel
        assert isinstance(model, RoutleyModel)
        self.assertEqual(model.worlds, ("w1", "w2"))
        self.assertEqual(model.star, (1, 0))
        self.assertEqual(model.base, "w1")
        self.assertEqual(dict(model.valuation), {"p": (True, False), "q": (False, True)})
        self.assertEqual(belnap_decode(model, _f("p", "L-FDE")), V.B)
        self.assertEqual(belnap_decode(model, _f("q", "L-FDE")), V.N)
        self.assertEqual(
            verdict.to_text(),
            "FAILS\nWORLDS 2\nSTAR w2 w1\nBASE w1\nw1: p=1 q=0\nw2: p=0 q=1",
        )

    def test_forall_mode_is_explosive(self) -> None:
        verdict = routley_entails(_f("p & ~p", "L-FDE"), _f("q", "L-FDE"), StarMode.FORALL, 2)
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.label, "HOLDS")
        self.assertEqual(verdict.semantics, "routley:forall")

    def test_exists_mode_countermodel(self) -> None:
        verdict = routley_entails(_f("p & ~p", "L-FDE"), _f("q", "L-FDE"), "exists", 2)
        model = verdict.countermodel
        assert isinstance(model, RoutleyModel)
        self.assertEqual(belnap_decode(model, _f("p", "L-FDE")), V.B)
        self.assertEqual(belnap_decode(model, _f("q", "L-FDE")), V.F)

    def test_star_negation(self) -> None:
        model = RoutleyModel(("w1", "w2"), "w1", (1, 0), {"p": (True, False)})
        self.assertTrue(interpret_routley(model, "w1", _f("~p", "L-FDE")))
        self.assertFalse(interpret_routley(model, "w2", _f("~~p", "L-FDE")))
        self.assertEqual(model.star_of("w1"), "w2")

    def test_identity_star_agrees_with_underlying_kripke_model(self) -> None:
        model = RoutleyModel(("w1", "w2"), "w1", (0, 1), {"p": (True, False), "q": (False, True)})
        plain = model.as_kripke()
        self.assertEqual(plain.worlds, model.worlds)
        for text in ("~p", "p & ~q", "~(p | q)", "~~p | q", "~(p & ~p)"):
            for world in model.worlds:
                with self.subTest(formula=text, world=world):
                    self.assertEqual(
                        interpret_routley(model, world, _f(text, "L-FDE")),
                        interpret(plain, world, _f(text, "L-FDE")),
                    )

    def test_facade_decodes_routley_models(self) -> None:
        searcher = KripkeSearcher()
        model = RoutleyModel(("w1", "w2"), "w1", (1, 0), {"p": (True, False), "q": (True, True)})
        self.assertEqual(searcher.decode_belnap(model, _f("p", "L-FDE")), V.B)
        self.assertEqual(searcher.decode_belnap(model, _f("q", "L-FDE")), V.T)
        self.assertEqual(searcher.decode_belnap(model, _f("~p", "L-FDE")), V.B)
        self.assertFalse(searcher.interpret_routley(model, "w2", _f("~p", "L-FDE")))

    def test_routley_model_validation(self) -> None:
        with self.assertRaises(ModelError):
            RoutleyModel(("w1", "w2", "w3"), "w1", (1, 2, 0), {})
        with self.assertRaises(ModelError):
            RoutleyModel(("w1",), "w2", (0,), {})
        model = RoutleyModel(("w1",), "w1", (0,), {"p": (True,), "q": (False,)})
        with self.assertRaises(LanguageError):
            interpret_routley(model, "w1", _f("p -> q"))

    def test_unknown_mode(self) -> None:
        with self.assertRaises(ValueError):
            StarMode.from_value("somewhere")


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from([("Lr-", "D2M-4"), ("Ll-", "D2L-4"), ("L-DN", "DN-4")]),
    st.integers(min_value=0, max_value=2**31),
    st.data(),
)
def test_two_world_models_decode_homomorphically(case, seed: int, data) -> None:
    lang, matrix_id = case
    f = gen_formula(GeneratorConfig(language=lang, max_depth=4, variable_count=3, seed=seed), 0)
    names = variables(f)
    valuation = {name: data.draw(st.tuples(st.booleans(), st.booleans())) for name in names}
    model = KripkeModel(("w1", "w2"), valuation)
    assignment = {name: fourvalued_decode(model, parse(name, lang)) for name in names}
    assert fourvalued_decode(model, f) == eval_formula(lookup_matrix(matrix_id), assignment, f)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**31), st.integers(min_value=1, max_value=4), st.data())
def test_collapse_matches_three_valued_tables(seed: int, count: int, data) -> None:
    f = gen_formula(GeneratorConfig(language="Lr-", max_depth=4, variable_count=3, seed=seed), 0)
    names = variables(f)
    valuation = {name: tuple(data.draw(st.lists(st.booleans(), min_size=count, max_size=count))) for name in names}
    model = KripkeModel(world_names(count), valuation)
    assignment = {name: collapse_pattern(valuation[name]) for name in names}
    assert collapse_pattern(worlds_pattern(model, f)) == eval_formula(lookup_matrix("D2M-3"), assignment, f)


if __name__ == "__main__":
    unittest.main()

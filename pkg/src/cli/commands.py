from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional

from ..core.crosscheck import CrossChecker, SemanticsSpec, decide
from ..core.formula import LanguageTag, depth, lookup_language, parse, print_formula, size, variables
from ..core.hilbert import (
    ProofChecker,
    check_derivation,
    deduction_transform,
    derivation_corpus,
    list_system,
    list_systems,
    load_derivation,
    render_derivation,
)
from ..core.matrix import MatrixChecker, TruthValue, list_matrices, lookup_matrix
from ..utils.settings import AppSettings, SettingsManager


_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    """명령 실행 결과: 종료 코드와 텍스트/JSON 두 가지 표현."""

    exit_code: int
    text: str
    data: dict[str, Any] = field(default_factory=dict)


@dataclass
class CommandContext:
    settings: AppSettings
    manager: Optional[SettingsManager] = None


Handler = Callable[[argparse.Namespace, CommandContext], CommandResult]


def _verdict_exit(holds: bool) -> int:
    return EXIT_OK if holds else EXIT_FAILS


def _default_language(spec: SemanticsSpec) -> LanguageTag:
    if spec.kind == "matrix":
        return lookup_matrix(spec.matrix_id).language
    if spec.kind == "routley":
        return lookup_language("L-FDE")
    return lookup_language("Lr-")


def cmd_parse(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    lang = lookup_language(args.lang or "Lr-")
    f = parse(args.formula, lang)
    text = print_formula(f)
    return CommandResult(
        EXIT_OK,
        text,
        {"formula": text, "language": lang.name, "variables": list(variables(f)), "depth": depth(f), "size": size(f)},
    )


def _parse_assignment(text: str) -> dict[str, TruthValue]:
    assignment: dict[str, TruthValue] = {}
    for chunk in str(text or "").split(","):
        if not chunk.strip():
            continue
        name, sep, value = chunk.partition("=")
        if not sep:
            raise ValueError(f"할당 형식은 var=value 입니다: {chunk.strip()}")
        assignment[name.strip()] = TruthValue.from_symbol(value.strip())
    return assignment


def cmd_eval(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    matrix = lookup_matrix(args.matrix)
    f = parse(args.formula, matrix.language)
    value = MatrixChecker(ctx.settings.matrix_variable_limit).evaluate(matrix.matrix_id, _parse_assignment(args.assign), f)
    return CommandResult(
        EXIT_OK,
        value.value,
        {"matrix": matrix.matrix_id, "formula": print_formula(f), "value": value.value},
    )


def _entailment(args: argparse.Namespace, ctx: CommandContext):
    spec = SemanticsSpec.parse(args.semantics)
    lang = lookup_language(args.lang) if args.lang else _default_language(spec)
    premises = [parse(p, lang) for p in (args.premise or [])]
    conclusion = parse(args.formula, lang)
    return decide(
        spec,
        premises,
        conclusion,
        lang,
        bit_limit=ctx.settings.enumeration_bit_limit,
        variable_limit=ctx.settings.matrix_variable_limit,
    )


def cmd_entails(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    verdict = _entailment(args, ctx)
    return CommandResult(_verdict_exit(verdict.holds), verdict.to_text(), verdict.to_dict())


def cmd_countermodel(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    verdict = _entailment(args, ctx)
    if verdict.countermodel is None:
        return CommandResult(EXIT_OK, verdict.label, {"verdict": verdict.label, "countermodel": None})
    lines = verdict.countermodel.render_lines()
    return CommandResult(
        EXIT_FAILS,
        "\n".join([verdict.label, *lines]),
        {"verdict": verdict.label, "countermodel": verdict.countermodel.to_dict()},
    )


def cmd_check(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    verdict = ProofChecker().check_file(args.file)
    return CommandResult(EXIT_OK if verdict.valid else EXIT_FAILS, verdict.to_text(), verdict.to_dict())


def _deduce_corpus() -> CommandResult:
    rows = []
    verified = 0
    for entry in derivation_corpus():
        output = deduction_transform(entry.derivation, entry.dischargee)
        verdict = check_derivation(output)
        ok = verdict.valid and verdict.conclusion is not None
        verified += int(ok)
        rows.append({"name": entry.name, "lines": len(output), "valid": ok})
    total = len(rows)
    text = "\n".join([*(f"{r['name']}: {'VALID' if r['valid'] else 'INVALID'} ({r['lines']} lines)" for r in rows), f"corpus: {verified}/{total} verified"])
    return CommandResult(EXIT_OK if verified == total else EXIT_FAILS, text, {"verified": verified, "total": total, "entries": rows})


def cmd_deduce(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    if args.corpus:
        return _deduce_corpus()
    if not args.file or not args.discharge:
        raise ValueError("deduce에는 유도 파일과 --discharge가 필요합니다 (또는 --corpus)")
    d = load_derivation(args.file)
    system = list_system(d.system_id)
    dischargee = parse(args.discharge, system.language)
    output = deduction_transform(d, dischargee)
    rendered = render_derivation(output)
    if args.output:
        ProofChecker().save(output, args.output)
    verdict = check_derivation(output)
    return CommandResult(
        EXIT_OK if verdict.valid else EXIT_FAILS,
        rendered.rstrip("\n"),
        {"derivation": rendered, "verdict": verdict.to_dict()},
    )


def cmd_crosscheck(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    settings = ctx.settings
    if args.max_premises is not None:
        settings = replace(settings, max_premises=max(0, args.max_premises))
    checker = CrossChecker(settings)
    report = checker.run(args.pair, samples=args.samples, seed=args.seed, workers=args.workers)
    if args.output:
        checker.export(report, args.output)
    return CommandResult(EXIT_OK if report.success else EXIT_FAILS, report.to_text(), report.to_dict())


def cmd_noncontainment(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    report = CrossChecker(ctx.settings).noncontainment()
    return CommandResult(EXIT_OK if report.success else EXIT_FAILS, report.to_text(), report.to_dict())


def cmd_table(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    matrix = lookup_matrix(args.matrix)
    f = parse(args.formula, matrix.language)
    rows = MatrixChecker(ctx.settings.matrix_variable_limit).truth_table(matrix.matrix_id, f)
    lines = [f"{' '.join(valuation.render_lines())} | {value.value}" for valuation, value in rows]
    data = {
        "matrix": matrix.matrix_id,
        "formula": print_formula(f),
        "rows": [{"valuation": valuation.to_dict(), "value": value.value} for valuation, value in rows],
    }
    return CommandResult(EXIT_OK, "\n".join(lines), data)


def cmd_systems(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    if args.id:
        system = list_system(args.id)
        lines = [f"{system.system_id} ({system.language.name}, {len(system.schemata)} schemata)"]
        lines.extend(f"  {s.name}: {s.text}" for s in system.schemata)
        data = {
            "system": system.system_id,
            "language": system.language.name,
            "schemata": {s.name: s.text for s in system.schemata},
        }
        return CommandResult(EXIT_OK, "\n".join(lines), data)
    systems = list_systems()
    lines = [f"{s.system_id}\t{s.language.name}\t{len(s.schemata)}\t{s.description}" for s in systems]
    data = {"systems": [{"id": s.system_id, "language": s.language.name, "schemata": len(s.schemata)} for s in systems]}
    return CommandResult(EXIT_OK, "\n".join(lines), data)


def cmd_matrices(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    matrices = list_matrices()
    lines = []
    for m in matrices:
        values = "".join(v.value for v in m.values)
        designated = "".join(v.value for v in m.values if m.is_designated(v))
        lines.append(f"{m.matrix_id}\t{m.language.name}\t{values}\t{designated}")
    data = {
        "matrices": [
            {
                "id": m.matrix_id,
                "language": m.language.name,
                "values": [v.value for v in m.values],
                "designated": [v.value for v in m.values if m.is_designated(v)],
            }
            for m in matrices
        ]
    }
    return CommandResult(EXIT_OK, "\n".join(lines), data)


def cmd_config(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    manager = ctx.manager
    if args.set and manager is not None:
        for item in args.set:
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"설정 형식은 key=value 입니다: {item}")
            current = manager.get(key.strip())
            converted: Any = int(value) if isinstance(current, int) else value.strip()
            if not manager.set(key.strip(), converted):
                raise ValueError(f"알 수 없는 설정 키: {key.strip()}")
        ctx.settings = manager.settings
    data = ctx.settings.to_dict()
    lines = [f"{key} = {value}" for key, value in data.items()]
    if manager is not None:
        lines.append(f"# {manager.config_file}")
    return CommandResult(EXIT_OK, "\n".join(lines), data)


HANDLERS: dict[str, Handler] = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "entails": cmd_entails,
    "countermodel": cmd_countermodel,
    "check": cmd_check,
    "deduce": cmd_deduce,
    "crosscheck": cmd_crosscheck,
    "noncontainment": cmd_noncontainment,
    "table": cmd_table,
    "systems": cmd_systems,
    "matrices": cmd_matrices,
    "config": cmd_config,
}


def run_command(name: str, args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    handler = HANDLERS[name]
    _logger.debug(f"명령 실행: {name}")
    return handler(args, ctx)

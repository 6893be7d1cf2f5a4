from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

from ...utils.atomic_write import atomic_save_workbook, atomic_write_json, atomic_write_text
from ..formula import print_formula
from .models import CrosscheckReport


_logger = logging.getLogger(__name__)

REPORT_FORMATS = ("txt", "json", "xlsx")


def _export_excel(report: CrosscheckReport, output_path: Path) -> None:
    from openpyxl import Workbook
    from openpyxl.styles import Alignment, Font, PatternFill

    wb = Workbook()
    summary = wb.active
    summary.title = "Summary"
    for key, value in (
        ("pair", report.pair_name),
        ("left", report.left),
        ("right", report.right),
        ("language", report.language),
        ("seed", report.seed),
        ("requested", report.requested),
        ("samples", report.samples),
        ("agreements", report.agreements),
        ("disagreements", len(report.disagreements)),
        ("skipped", len(report.skipped)),
    ):
        summary.append([key, value])
    for row in summary.iter_rows(min_col=1, max_col=1):
        row[0].font = Font(bold=True)
    summary.column_dimensions["A"].width = 16
    summary.column_dimensions["B"].width = 28

    detail = wb.create_sheet("Disagreements")
    headers = ["sample", "premises", "conclusion", "left", "right", "witness"]
    detail.append(headers)
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill("solid", fgColor="333333")
    for col in range(1, len(headers) + 1):
        cell = detail.cell(row=1, column=col)
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = Alignment(vertical="center")

    broken_fill = PatternFill("solid", fgColor="FEE2E2")
    for d in report.disagreements:
        detail.append(
            [
                d.sample_index,
                " ; ".join(print_formula(p) for p in d.premises),
                print_formula(d.conclusion),
                d.left_verdict,
                d.right_verdict,
                d.witness,
            ]
        )
        for col in range(1, len(headers) + 1):
            cell = detail.cell(row=detail.max_row, column=col)
            cell.fill = broken_fill
            cell.alignment = Alignment(wrap_text=True, vertical="top")

    detail.column_dimensions["B"].width = 40
    detail.column_dimensions["C"].width = 30
    detail.column_dimensions["F"].width = 40

    atomic_save_workbook(wb, output_path)
    wb.close()


def export_report(report: CrosscheckReport, output_path: Union[str, Path]) -> Path:
    """
    교차 검증 보고서 저장 (확장자로 형식 결정: .xlsx / .json / 그 밖은 텍스트)

    Returns:
        저장된 경로
    """
    target = Path(output_path)
    suffix = target.suffix.lower()
    if suffix == ".xlsx":
        _export_excel(report, target)
    elif suffix == ".json":
        atomic_write_json(target, report.to_dict(), ensure_ascii=False, indent=2)
    else:
        atomic_write_text(target, report.to_text() + "\n")
    _logger.info(f"교차 검증 보고서 저장: {target}")
    return target

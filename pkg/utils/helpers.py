import csv
import io
import json
import logging
import os
from typing import Any, Iterable, List, Tuple

from config import RunConfig
from models.classification import CSV_COLUMNS, ClassificationRecord
from models.rational import RationalValue
from models.report import VerificationReport

logger = logging.getLogger(__name__)


def validate_modulus(d: int) -> Tuple[bool, str]:
    """Validate a modulus passed on the command line"""
    if d is None:
        return False, "A modulus is required"
    if d < 1:
        return False, "Modulus must be a positive integer"
    return True, ""


def validate_bound(bound: int, least: int = 2) -> Tuple[bool, str]:
    if bound is None:
        return False, "A bound is required"
    if bound < least:
        return False, f"Bound must be at least {least}"
    return True, ""


def resolve_run_config(ctx_obj, **flags) -> RunConfig:
    """Settings for one command: the --config file, overridden by explicit flags"""
    config_path = (ctx_obj or {}).get('config_path')
    return RunConfig.from_sources(config_path, **flags)


def parse_rational(text: str) -> RationalValue:
    """Parse 'num/den'; raises ValueError on malformed input"""
    try:
        value = RationalValue.parse(text)
    except ZeroDivisionError:
        raise ValueError(f"{text!r} has a zero denominator")
    except ValueError:
        raise ValueError(f"{text!r} is not a rational of the form num/den")
    return value


def format_csv(records: Iterable[ClassificationRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.to_row())
    return buffer.getvalue()


def format_jsonl(records: Iterable[ClassificationRecord]) -> str:
    return ''.join(json.dumps(record.to_dict()) + '\n' for record in records)


def format_table(records: Iterable[ClassificationRecord]) -> str:
    rows = [CSV_COLUMNS] + [record.to_row() for record in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
             for row in rows]
    return '\n'.join(lines) + '\n'


def format_records(records: List[ClassificationRecord], output_format: str) -> str:
    formatters = {'csv': format_csv, 'jsonl': format_jsonl, 'table': format_table}
    return formatters[output_format](records)


def parse_csv(text: str) -> List[ClassificationRecord]:
    """Read classify CSV output back into records"""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header: {header}")
    return [ClassificationRecord.from_row(row) for row in reader]


def write_output(text: str, path: str):
    """Write UTF-8 text to path, creating parent directories"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logger.info(f"Wrote {len(text)} characters to {path}")


def format_witness(witness: Any) -> str:
    """Render a witness as the arguments that reproduce it"""
    if isinstance(witness, (tuple, list)):
        return ' '.join(format_witness(part) for part in witness)
    return str(witness)


def format_report(report: VerificationReport) -> str:
    field = 'Q' if report.field_m in (None, 1) else f'Q(sqrt({report.field_m}))'
    status = 'PASS' if report.passed else 'FAIL'
    lines = [
        f"suite {report.suite_name} over {field} up to {report.bound}: {status}",
        f"checked: {report.checked}",
        f"failures: {len(report.failures)}",
    ]
    for key in sorted(report.details):
        lines.append(f"{key}: {report.details[key]}")
    for witness in report.failures:
        lines.append(f"witness: {format_witness(witness)}")
    return '\n'.join(lines) + '\n'

import csv
import io
import logging
from enum import Enum

from pydantic import BaseModel, Field, TypeAdapter

from qspt.auxiliary.time import Stopwatch, Timedelta


logger = logging.getLogger(__name__)


MAX_STORED_FAILURES = 100

ParamValue = str | int | bool


class Format(Enum):
    JSON = 'json'
    CSV = 'csv'
    TEXT = 'text'


class Failure(BaseModel):
    location: str
    expected: str
    actual: str


class ScanPoint(BaseModel):
    n: int
    argument: int
    modulus: str
    residue: str


class SequenceValue(BaseModel):
    n: int
    value: int


class VerificationReport(BaseModel):
    task: str
    params: dict[str, ParamValue] = Field(default_factory=dict)
    order_checked: int
    range_checked: tuple[int, int]
    failures: list[Failure] = Field(default_factory=list)
    failure_count: int = 0
    scanned: list[ScanPoint] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


class ReportBuilder:
    def __init__(self, task: str, **params: ParamValue):
        self.task = task
        self.params = params
        self.failures: list[Failure] = []
        self.failure_count = 0
        self.scanned: list[ScanPoint] = []
        self.notes: list[str] = []
        self.stopwatch = Stopwatch()

    def fail(self, location: str, expected, actual):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(Failure(location=location, expected=str(expected), actual=str(actual)))

    def check(self, condition: bool, location: str, expected, actual) -> bool:
        if not condition:
            self.fail(location, expected, actual)
        return condition

    def scan(self, n: int, argument: int, modulus: int, residue: int):
        self.scanned.append(ScanPoint(n=n, argument=argument, modulus=str(modulus), residue=str(residue)))

    def note(self, text: str):
        self.notes.append(text)

    def build(self, order_checked: int, range_checked: tuple[int, int]) -> VerificationReport:
        report = VerificationReport(
            task=self.task,
            params=self.params,
            order_checked=order_checked,
            range_checked=range_checked,
            failures=self.failures,
            failure_count=self.failure_count,
            scanned=self.scanned,
            notes=self.notes,
            elapsed_ms=self.stopwatch.elapsed_ms(),
        )
        if report.passed:
            logger.info(f'{report.task}: passed up to order {order_checked}')
        else:
            logger.warning(f'{report.task}: {report.failure_count} failures, first at {report.failures[0].location}')
        return report


def _render_json(reports: list[VerificationReport]) -> str:
    return '[' + ',\n'.join(report.model_dump_json() for report in reports) + ']\n'


def _render_csv(reports: list[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['task', 'location', 'expected', 'actual', 'status'])
    for report in reports:
        if report.scanned:
            for point in report.scanned:
                writer.writerow([
                    report.task,
                    f'n={point.n}',
                    f'0 mod {point.modulus}',
                    point.residue,
                    'ok' if point.residue == '0' else 'fail',
                ])
        elif report.failures:
            for failure in report.failures:
                writer.writerow([report.task, failure.location, failure.expected, failure.actual, 'fail'])
        else:
            writer.writerow([report.task, '', '', '', 'pass'])
    return buffer.getvalue()


def _render_text(reports: list[VerificationReport]) -> str:
    lines = []
    for report in reports:
        status = 'PASS' if report.passed else 'FAIL'
        elapsed = Timedelta.from_milliseconds(report.elapsed_ms).to_human_readable_format()
        lines.append(f'[{status}] {report.task}  order={report.order_checked}  range={list(report.range_checked)}  {elapsed}')
        if report.params:
            lines.append('    params: ' + ', '.join(f'{key}={value}' for key, value in report.params.items()))
        for note in report.notes:
            lines.append(f'    note: {note}')
        for failure in report.failures:
            lines.append(f'    failure at {failure.location}: expected {failure.expected}, got {failure.actual}')
        if report.failure_count > len(report.failures):
            lines.append(f'    ... {report.failure_count - len(report.failures)} more failures')
    return '\n'.join(lines) + '\n'


def report_emit(reports: VerificationReport | list[VerificationReport], format: Format = Format.TEXT) -> bytes:
    if isinstance(reports, VerificationReport):
        reports = [reports]
    match format:
        case Format.JSON:
            text = _render_json(reports)
        case Format.CSV:
            text = _render_csv(reports)
        case Format.TEXT:
            text = _render_text(reports)
        case _:
            raise ValueError(f'Unknown report format: {format}')
    return text.encode()


_SEQUENCE_VALUES = TypeAdapter(list[SequenceValue])


def sequence_emit(values: list[SequenceValue], format: Format = Format.TEXT) -> bytes:
    match format:
        case Format.JSON:
            return _SEQUENCE_VALUES.dump_json(values) + b'\n'
        case Format.CSV:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerow(['n', 'value'])
            writer.writerows((value.n, value.value) for value in values)
            return buffer.getvalue().encode()
        case Format.TEXT:
            return ''.join(f'{value.n} {value.value}\n' for value in values).encode()
        case _:
            raise ValueError(f'Unknown output format: {format}')

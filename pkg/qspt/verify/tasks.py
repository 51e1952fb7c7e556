import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from qspt.auxiliary.time import Stopwatch
from qspt.verify.report import VerificationReport


logger = logging.getLogger(__name__)


TaskResult = VerificationReport | list[VerificationReport]


@dataclass(frozen=True)
class Task:
    name: str
    function: Callable[..., TaskResult]
    kwargs: dict[str, Any] = field(default_factory=dict)

    def __call__(self) -> list[VerificationReport]:
        result = self.function(**self.kwargs)
        return result if isinstance(result, list) else [result]


def _run(task: Task) -> list[VerificationReport]:
    return task()


def run_tasks(tasks: list[Task], workers: int = 1) -> list[VerificationReport]:
    with Stopwatch() as stopwatch:
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as executor:
                results = list(executor.map(_run, tasks))
        else:
            results = [_run(task) for task in tasks]

    logger.info(f'Ran {len(tasks)} tasks on {max(1, workers)} workers in {stopwatch.elapsed().to_human_readable_format()}')
    ordered = sorted(zip(tasks, results), key=lambda pair: pair[0].name)
    return [report for _, reports in ordered for report in reports]

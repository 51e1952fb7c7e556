import math
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from time import perf_counter
from typing_extensions import Self


Seconds = float
Milliseconds = int

TIMEZONE = timezone.utc


@dataclass
class TimeUnit:
    in_seconds: Seconds
    name: str

    def to_string(self, seconds: Seconds):
        units = math.floor(seconds / self.in_seconds)
        name = self.name if units < 2 or self.name == 'ms' else self.name + 's'
        return f'{units} {name}'


class Timedelta(timedelta):
    MILLISECOND = TimeUnit(
        0.001,
        'ms',
    )

    SECOND = TimeUnit(
        1,
        'sec',
    )

    MINUTE = TimeUnit(
        SECOND.in_seconds * 60,
        'min',
    )

    HOUR = TimeUnit(
        MINUTE.in_seconds * 60,
        'hour',
    )

    TIME_UNITS = [
        MILLISECOND,
        SECOND,
        MINUTE,
        HOUR,
    ]

    @classmethod
    def from_milliseconds(cls, milliseconds: Milliseconds) -> Self:
        return cls(milliseconds=milliseconds)

    def to_milliseconds(self) -> Milliseconds:
        return round(self.total_seconds() * 1000)

    def to_human_readable_format(self, minimum: TimeUnit = None):
        seconds = self.total_seconds()

        for i in range(len(self.TIME_UNITS) - 1):
            time_unit = self.TIME_UNITS[i]
            next_time_unit = self.TIME_UNITS[i + 1]

            if (
                    seconds < next_time_unit.in_seconds and
                    (
                        minimum is None or
                        time_unit.in_seconds >= minimum.in_seconds
                    )
            ):
                return time_unit.to_string(seconds)

        return self.TIME_UNITS[-1].to_string(seconds)


class Timestamp(datetime):
    @classmethod
    def now(cls, tz=TIMEZONE) -> Self:
        return super().now(tz)


class Stopwatch:
    def __init__(self):
        self.start = perf_counter()
        self.stop = None

    def __enter__(self) -> Self:
        self.start = perf_counter()
        self.stop = None
        return self

    def __exit__(self, *exc_info):
        self.stop = perf_counter()

    def elapsed(self) -> Timedelta:
        end = self.stop if self.stop is not None else perf_counter()
        return Timedelta(seconds=end - self.start)

    def elapsed_ms(self) -> Milliseconds:
        return self.elapsed().to_milliseconds()

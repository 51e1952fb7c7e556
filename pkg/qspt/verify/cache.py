import hashlib
import logging
import os
import tempfile
from pathlib import Path

from pydantic import BaseModel, ValidationError

from qspt.auxiliary.errors import QsptError
from qspt.auxiliary.logs import VERBOSE
from qspt.config.config import CACHE_DIRECTORY
from qspt.forms.named import NamedFunction, named_series
from qspt.series.laurent import ArithmeticMode, Exponent, LaurentSeries


logger = logging.getLogger(__name__)


class ChecksumMismatch(QsptError):
    def __init__(self, key: 'SeriesCacheKey'):
        super().__init__(f'Cached coefficients of {key.name} ({key.mode}) do not match their checksum')
        self.key = key


class SeriesCacheKey(BaseModel):
    name: str
    mode: str

    @property
    def file_name(self) -> str:
        return f'{self.name}__{self.mode}.json'


class SeriesCacheEntry(BaseModel):
    key: SeriesCacheKey
    order: int
    min_exp: int
    modulus: str | None = None
    coefficients: list[str]
    checksum: str

    @staticmethod
    def digest(coefficients: list[str]) -> str:
        return hashlib.sha256(','.join(coefficients).encode()).hexdigest()

    @classmethod
    def from_series(cls, key: SeriesCacheKey, series: LaurentSeries) -> 'SeriesCacheEntry':
        coefficients = [str(c) for c in series.coeffs]
        return cls(
            key=key,
            order=series.trunc,
            min_exp=series.min_exp,
            modulus=None if series.modulus is None else str(series.modulus),
            coefficients=coefficients,
            checksum=cls.digest(coefficients),
        )

    def validate_checksum(self):
        if self.digest(self.coefficients) != self.checksum:
            raise ChecksumMismatch(self.key)

    def to_series(self) -> LaurentSeries:
        return LaurentSeries.from_coefficients(
            map(int, self.coefficients),
            min_exp=self.min_exp,
            trunc=self.order,
            modulus=None if self.modulus is None else int(self.modulus),
        )


class SeriesCache:
    def __init__(self, directory: Path | str = CACHE_DIRECTORY, mode: ArithmeticMode = ArithmeticMode.EXACT):
        self.directory = Path(directory)
        self.mode = mode

    def key(self, name: NamedFunction) -> SeriesCacheKey:
        return SeriesCacheKey(name=name.value, mode=self.mode.label())

    def path(self, key: SeriesCacheKey) -> Path:
        return self.directory / key.file_name

    def _read(self, key: SeriesCacheKey) -> SeriesCacheEntry | None:
        path = self.path(key)
        try:
            entry = SeriesCacheEntry.model_validate_json(path.read_text())
        except FileNotFoundError:
            return None
        except ValidationError as e:
            logger.warning(f'Ignoring unreadable cache file {path}: {e.error_count()} validation errors')
            return None
        if entry.key != key:
            return None
        entry.validate_checksum()
        return entry

    def load(self, key: SeriesCacheKey, order: Exponent = None) -> SeriesCacheEntry | None:
        try:
            entry = self._read(key)
        except ChecksumMismatch as e:
            logger.warning(f'{e}, recomputing')
            return None
        if entry is None or (order is not None and entry.order < order):
            return None
        return entry

    def store(self, entry: SeriesCacheEntry) -> bool:
        try:
            existing = self._read(entry.key)
        except ChecksumMismatch:
            existing = None
        if existing is not None and existing.order >= entry.order:
            return False

        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(entry.key)
        # one temporary file per writer, concurrent stores of the same key end with the last rename
        with tempfile.NamedTemporaryFile('w', dir=self.directory, prefix=path.stem, suffix='.tmp', delete=False) as temporary:
            temporary.write(entry.model_dump_json())
        try:
            os.replace(temporary.name, path)
        except OSError as e:
            logger.warning(f'Could not cache {entry.key.name} ({entry.key.mode}): {e}')
            Path(temporary.name).unlink(missing_ok=True)
            return False
        logger.log(VERBOSE, f'Cached {entry.key.name} ({entry.key.mode}) to order {entry.order}')
        return True

    def named_series(self, name: NamedFunction, order: Exponent) -> LaurentSeries:
        key = self.key(name)
        entry = self.load(key, order)
        if entry is not None:
            logger.debug(f'Cache hit for {key.name} ({key.mode}) at order {order}')
            return entry.to_series().truncate(order)

        series = named_series(name, order, self.mode.modulus())
        self.store(SeriesCacheEntry.from_series(key, series))
        return series

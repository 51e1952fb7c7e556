from configparser import ConfigParser
from enum import Enum
from os import path
from pathlib import Path
from typing import TypeVar


CONFIGS_DIRECTORY = Path(__file__).resolve().parents[2] / 'configs'

E = TypeVar('E', bound=Enum)


class Config(ConfigParser):
    def read(self, file_name, directory_path: Path | str = CONFIGS_DIRECTORY, **kwargs):
        return super().read(path.join(directory_path, file_name))

    def read_file_path(self, file_path: Path | str):
        if not path.isfile(file_path):
            raise FileNotFoundError(file_path)
        return super().read(file_path)

    def get_or_none(self, section, option) -> str | None:
        return self.get(section, option, fallback=None) or None

    def getint(self, section, option, default: int = None, **kwargs) -> int | None:
        return super().getint(section, option, **kwargs) if self.get_or_none(section, option) else default

    def getboolean(self, section, option, default: bool = None, **kwargs) -> bool | None:
        return super().getboolean(section, option, **kwargs) if self.get_or_none(section, option) else default

    def getpath(self, section, option, default: Path = None) -> Path | None:
        value = self.get_or_none(section, option)
        return Path(value) if value else default

    def getenum(self, section, option, enum: type[E], default: E = None) -> E | None:
        value = self.get_or_none(section, option)
        return enum(value) if value else default

"""Built-in demonstration scenarios shipped with the package."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import List

from .errors import ConfigError
from .scenario import Scenario, parse_scenario


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    tag: str
    text: str

    def scenario(self) -> Scenario:
        return parse_scenario(self.text)


def list_scenarios() -> List[CatalogEntry]:
    entries = []
    for item in resources.files(__package__).joinpath("scenarios").iterdir():
        if not item.name.endswith(".scn"):
            continue
        text = item.read_text(encoding="utf-8")
        sc = parse_scenario(text)
        entries.append(CatalogEntry(sc.name or item.name[:-4], sc.description, sc.tag, text))
    return sorted(entries, key=lambda e: e.name)


def get_scenario(name: str) -> CatalogEntry:
    for entry in list_scenarios():
        if entry.name == name:
            return entry
    raise ConfigError(f"no built-in scenario named {name!r}")

"""Flat ``key = value`` scenario config files.

    # atom trap, thinner plates
    separation = 2cm
    t = 5mm
    temperature = 300K

Blank lines and ``#`` comments are ignored. Values carry unit suffixes and are
converted to SI; keys must be known to the scenario being configured.
"""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path

from pydantic import BaseModel

from ..core.errors import ConfigError
from ..core.units import Kind, format_quantity, parse_quantity


class Parameter(BaseModel):
    """One scenario input: SI value plus the unit it is echoed in."""

    model_config = {"frozen": True}

    key: str
    value: float
    kind: Kind
    unit: str = ""
    description: str = ""

    def echo(self) -> str:
        return format_quantity(self.value, self.unit, self.kind)

    def with_text(self, text: str, line: int | None = None) -> Parameter:
        try:
            value = parse_quantity(text, self.kind, key=self.key)
        except ConfigError as e:
            raise ConfigError(e.message, line=line, key=self.key) from e
        return self.model_copy(update={"value": value})


class RawEntry(BaseModel):
    text: str
    line: int


def parse_config_text(text: str) -> dict[str, RawEntry]:
    """Split config text into raw ``key -> value`` entries with their line numbers."""
    entries: dict[str, RawEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("missing key before '='", line=lineno)
        if not value:
            raise ConfigError("missing value after '='", line=lineno, key=key)
        if key in entries:
            raise ConfigError(
                f"duplicate key (first set on line {entries[key].line})", line=lineno, key=key
            )
        entries[key] = RawEntry(text=value, line=lineno)
    return entries


def load_config(path: Path) -> dict[str, RawEntry]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    return parse_config_text(text)


def resolve_parameters(
    defaults: Mapping[str, Parameter],
    file_entries: Mapping[str, RawEntry] | None = None,
    overrides: Mapping[str, str] | None = None,
) -> dict[str, Parameter]:
    """Apply file values, then command-line overrides, on top of the defaults.

    Raises:
        ConfigError: unknown key or unparseable value, with its line when it
            came from a file
    """
    params = dict(defaults)
    for key, entry in (file_entries or {}).items():
        if key not in params:
            raise ConfigError("unknown parameter", line=entry.line, key=key)
        params[key] = params[key].with_text(entry.text, entry.line)
    for key, text in (overrides or {}).items():
        if key not in params:
            raise ConfigError("unknown parameter", key=key)
        params[key] = params[key].with_text(text)
    return params


def render_config(params: Mapping[str, Parameter], title: str | None = None) -> str:
    """Config text that re-parses to exactly ``params``."""
    lines = [f"# {title}"] if title else []
    width = max((len(k) for k in params), default=0)
    for key in sorted(params):
        p = params[key]
        comment = f"  # {p.description}" if p.description else ""
        lines.append(f"{key:<{width}} = {p.echo()}{comment}")
    return "\n".join(lines) + "\n"

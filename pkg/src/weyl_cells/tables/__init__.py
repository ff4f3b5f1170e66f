"""Golden table data and the engine that recomputes it."""

from __future__ import annotations

from .data import TABLES, Cell, Entry, TableRow
from .engine import (
    BoundRow,
    Check,
    Instance,
    Report,
    TableError,
    bind,
    computed_label,
    emit_table,
    find_row,
    fixture_name,
    instances,
    parse_emitted,
    verify_instance,
    verify_level_ranges,
    verify_row,
    verify_singleton_sing,
    verify_table,
)
from .templates import TemplateError, expand

__all__ = [
    "TABLES",
    "BoundRow",
    "Cell",
    "Check",
    "Entry",
    "Instance",
    "Report",
    "TableError",
    "TableRow",
    "TemplateError",
    "bind",
    "computed_label",
    "emit_table",
    "expand",
    "find_row",
    "fixture_name",
    "instances",
    "parse_emitted",
    "verify_instance",
    "verify_level_ranges",
    "verify_row",
    "verify_singleton_sing",
    "verify_table",
]

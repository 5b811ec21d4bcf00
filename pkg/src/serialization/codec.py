"""
Reading and writing gptkit files.

CSV probability tables have a header row (corner cell, then measurement
labels) and one row per preparation. JSON files are written with sorted
keys and a fixed indent so identical content gives identical bytes.
"""

import csv
import hashlib
import io
import json
import logging
from pathlib import Path
from typing import Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from bell import Behavior
from tablecore import RawTable
from utils.errors import SchemaError, TableParseError
from utils.scalars import parse_scalar

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


def parse_table_csv(text: str) -> RawTable:
    """Parse CSV text into a RawTable.

    Raises:
        TableParseError: On malformed cells (with 0-based data row and column).
    """
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not rows:
        raise TableParseError("empty table")
    header = [cell.strip() for cell in rows[0]]
    cols = tuple(header[1:])
    labels, entries = [], []
    for i, row in enumerate(rows[1:]):
        if len(row) != len(header):
            raise TableParseError(f"expected {len(header)} cells, found {len(row)}", row=i)
        labels.append(row[0].strip())
        values = []
        for j, cell in enumerate(row[1:]):
            try:
                values.append(parse_scalar(cell))
            except (ValueError, ZeroDivisionError) as exc:
                raise TableParseError(f"cannot parse {cell!r}: {exc}", row=i, col=j) from exc
        entries.append(tuple(values))
    return RawTable(tuple(labels), cols, tuple(entries))


def read_table_csv(path: Union[str, Path]) -> RawTable:
    table = parse_table_csv(Path(path).read_text(encoding="utf-8"))
    logger.info(f"📥 Loaded table {path}: {len(table.rows)} preparations x {len(table.cols)} measurements")
    return table


def parse_behavior_csv(text: str) -> Behavior:
    """Behavior from CSV rows a,b,x,y,p (header required)."""
    reader = csv.DictReader(io.StringIO(text))
    values = {}
    for i, row in enumerate(reader):
        try:
            key = tuple(int(row[k]) for k in ("a", "b", "x", "y"))
            values[key] = parse_scalar(row["p"])
        except (KeyError, TypeError, ValueError) as exc:
            raise TableParseError(f"bad behavior row: {exc}", row=i) from exc
    missing = [k for k in ((a, b, x, y) for a in (0, 1) for b in (0, 1) for x in (0, 1) for y in (0, 1))
               if k not in values]
    if missing:
        raise TableParseError(f"behavior is missing entries {missing}")
    return Behavior.from_function(lambda a, b, x, y: values[(a, b, x, y)])


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(model: BaseModel, path: Union[str, Path]) -> str:
    """Write a schema deterministically; returns the sha256 of the bytes written."""
    text = dump_json(model)
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"📤 Wrote {path}")
    return sha256_text(text)


def load_json(schema: Type[Model], path: Union[str, Path]) -> Model:
    return parse_json(schema, Path(path).read_text(encoding="utf-8"))


def parse_json(schema: Type[Model], text: str) -> Model:
    """Parse JSON text into a schema.

    Raises:
        SchemaError: If the document is not valid JSON or does not match.
    """
    try:
        return schema.model_validate_json(text)
    except ValidationError as exc:
        raise SchemaError(f"{schema.__name__}: {exc}") from exc


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()

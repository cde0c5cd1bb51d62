"""Reading and writing named collections of rankings over a common item set.

CSV layout: the header lists item names, each following row is one ranking
given as a position (or raw score) per item. If the first header cell is
``name`` (or empty) the first column holds the ranking labels; otherwise rows
are labelled ``r1, r2, ...``.

JSON layout: ``{"items": [...], "rankings": {"label": [positions...]}}``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError
from .rankdata import Ranking, make_ranking


@dataclass(frozen=True)
class Dataset:
    items: tuple[str, ...]
    names: tuple[str, ...]
    rankings: tuple[Ranking, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValidationError("ranking labels must be unique")
        if len(self.names) != len(self.rankings):
            raise ValidationError("one label per ranking is required")
        for name, r in zip(self.names, self.rankings):
            if r.n != len(self.items):
                raise ValidationError(
                    f"ranking {name!r} has {r.n} entries but there are {len(self.items)} items"
                )

    def __getitem__(self, name: str) -> Ranking:
        try:
            return self.rankings[self.names.index(name)]
        except ValueError:
            raise ValidationError(f"no ranking labelled {name!r}") from None

    @property
    def n(self) -> int:
        return len(self.items)


def _number(cell: str, where: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ValidationError(f"{where}: position {cell!r} is not numeric") from None
    if value != value:
        raise ValidationError(f"{where}: position is NaN")
    return value


def parse_csv(text: str) -> Dataset:
    rows = [(k, row) for k, row in enumerate(csv.reader(io.StringIO(text)), start=1) if any(c.strip() for c in row)]
    if not rows:
        raise ValidationError("line 1: empty input, expected a header of item names")
    _, header = rows[0]
    header = [c.strip() for c in header]
    labelled = header[0].lower() in ("name", "")
    items = header[1:] if labelled else header
    if len(items) < 2:
        raise ValidationError("line 1: need at least 2 items")
    if len(set(items)) != len(items):
        raise ValidationError("line 1: item names must be unique")
    if len(rows) < 2:
        raise ValidationError("no rankings after the header")
    names, rankings = [], []
    for count, (lineno, row) in enumerate(rows[1:], start=1):
        row = [c.strip() for c in row]
        if labelled:
            label, cells = row[0], row[1:]
        else:
            label, cells = f"r{count}", row
        if len(cells) != len(items):
            raise ValidationError(
                f"line {lineno}: expected {len(items)} positions, got {len(cells)}"
            )
        values = [_number(c, f"line {lineno}, field {f}") for f, c in enumerate(cells, start=1 + labelled)]
        names.append(label)
        rankings.append(make_ranking(values))
    return Dataset(tuple(items), tuple(names), tuple(rankings))


def parse_json(text: str) -> Dataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "items" not in doc or "rankings" not in doc:
        raise ValidationError('expected an object with "items" and "rankings"')
    items = doc["items"]
    rankings = doc["rankings"]
    if not isinstance(items, list) or not isinstance(rankings, dict):
        raise ValidationError('"items" must be a list and "rankings" an object')
    if len(items) < 2:
        raise ValidationError(f"need at least 2 items, got {len(items)}")
    names, ranks = [], []
    for name, positions in rankings.items():
        if not isinstance(positions, list):
            raise ValidationError(f"rankings.{name}: expected a list of positions")
        if len(positions) != len(items):
            raise ValidationError(
                f"rankings.{name}: expected {len(items)} positions, got {len(positions)}"
            )
        for f, p in enumerate(positions, start=1):
            if isinstance(p, bool) or not isinstance(p, (int, float)):
                raise ValidationError(f"rankings.{name}[{f}]: position {p!r} is not numeric")
        names.append(str(name))
        ranks.append(make_ranking(positions))
    if not names:
        raise ValidationError("no rankings given")
    return Dataset(tuple(str(i) for i in items), tuple(names), tuple(ranks))


def load_dataset(path: str | os.PathLike, format: str | None = None) -> Dataset:
    """Load a dataset; ``format`` defaults to the file extension."""
    path = Path(path)
    if format is None:
        format = "json" if path.suffix.lower() == ".json" else "csv"
    text = path.read_text()
    if format == "csv":
        return parse_csv(text)
    if format == "json":
        return parse_json(text)
    raise ValidationError(f"unknown dataset format {format!r}")


def dump_json(ds: Dataset) -> str:
    doc = {
        "items": list(ds.items),
        "rankings": {name: list(r.positions) for name, r in zip(ds.names, ds.rankings)},
    }
    return json.dumps(doc, indent=2)


def dump_csv(ds: Dataset) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", *ds.items])
    for name, r in zip(ds.names, ds.rankings):
        writer.writerow([name, *r.positions])
    return buf.getvalue()

"""Text, CSV and JSON rendering for CLI output."""

import csv
from collections.abc import Sequence

import pandas as pd
from pydantic import BaseModel, TypeAdapter

from packages.collisions.relgraph import SccChain
from packages.core.models.records import OutputRecord

_RECORDS = TypeAdapter(list[OutputRecord])


def to_json(payload: BaseModel | Sequence[OutputRecord]) -> str:
    """Stable, indented JSON with a trailing newline."""
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2) + "\n"
    return _RECORDS.dump_json(list(payload), indent=2).decode() + "\n"


def table_frame(records: Sequence[OutputRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        {"n": [r.n for r in records], "polynomial": [r.polynomial for r in records]},
        columns=["n", "polynomial"],
    )


def render_table(records: Sequence[OutputRecord], fmt: str) -> str:
    """Render table rows as ``text``, ``csv`` or ``json``."""
    if fmt == "json":
        return to_json(records)
    frame = table_frame(records)
    if fmt == "csv":
        return frame.to_csv(index=False, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    if frame.empty:
        return "n  polynomial\n"
    return frame.to_string(index=False, justify="left") + "\n"


def render_chain(chain: SccChain) -> str:
    """``{2#0} ← {6#1, 7#2} ← {60#3}``."""
    return " ← ".join(
        "{" + ", ".join(str(v) for v in component.vertices) + "}" for component in chain
    )

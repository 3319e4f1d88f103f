"""Text, CSV and JSON renderings of Hilbert tables and dual bases."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources


def fmt_degree(m) -> str:
    return str(m[0]) if len(m) == 1 else "(" + ",".join(str(x) for x in m) + ")"


def grading_json(grading) -> dict:
    return {
        "vars": list(grading.var_names),
        "A": [list(r) for r in grading.A],
        "B": [list(r) for r in grading.B],
    }


def document(grading, values, **meta) -> dict:
    """The machine-readable result shared by every subcommand."""
    return {
        "grading": grading_json(grading),
        "values": [{"degree": list(m), "dim": int(d)} for m, d in values.items()],
        "meta": {k: v for k, v in meta.items() if v is not None},
    }


def load_schema() -> dict:
    return json.loads(resources.files("mgdual.io").joinpath("schema.json").read_text())


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def to_csv(values: dict, k: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"d{i + 1}" for i in range(k)] + ["dim"])
    for m, d in values.items():
        w.writerow([*m, d])
    return buf.getvalue()


def _align(rows):
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def grid_2d(values: dict) -> str:
    """Rows are the second coordinate (descending), columns the first.

    A cell shows ``-`` when the degree is outside the table or its value is 0.
    """
    if not values:
        return ""
    i_range = range(min(m[0] for m in values), max(m[0] for m in values) + 1)
    j_vals = sorted({m[1] for m in values}, reverse=True)
    j_range = range(j_vals[0], j_vals[-1] - 1, -1)
    rows = [["j\\i"] + [str(i) for i in i_range]]
    for j in j_range:
        row = [str(j)]
        for i in i_range:
            d = values.get((i, j))
            row.append(str(d) if d else "-")
        rows.append(row)
    return _align(rows)


def rows_1d(labelled: list, degrees) -> str:
    """Tables whose columns are rank-one degrees; ``labelled`` is ``[(label, {degree: dim})]``."""
    rows = [["k"] + [str(m[0]) for m in degrees]]
    for label, values in labelled:
        rows.append([label] + [str(values[m]) if m in values else "-" for m in degrees])
    return _align(rows)


def listing(values: dict) -> str:
    rows = [["degree", "dim"]] + [[fmt_degree(m), str(d)] for m, d in values.items()]
    return _align(rows)


def hilbert_text(values: dict, k: int, label="H") -> str:
    if k == 1:
        return rows_1d([(label, values)], list(values))
    if k == 2:
        return grid_2d(values)
    return listing(values)

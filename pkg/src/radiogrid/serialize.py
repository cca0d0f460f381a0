"""LabelingDocument (JSON), ASCII table and DOT renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from . import __version__
from .formulas import rn_formula, t_plus_formula
from .grid import GridGraph, Vertex
from .labeling import Labeling, span


class DocumentError(ValueError):
    """Unparseable or inconsistent document."""


@dataclass
class LabelingDocument:
    a: int
    b: int
    labels: Labeling
    span: int
    meta: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def build(cls, g: GridGraph, f: Mapping[Vertex, int]) -> "LabelingDocument":
        meta = {
            "parity_case": g.parity_case().value,
            "formula_rn": rn_formula(g.a, g.b),
            "formula_t_plus": t_plus_formula(g.a, g.b),
            "tool_version": __version__,
        }
        return cls(g.a, g.b, dict(f), span(f), meta)

    @property
    def grid(self) -> GridGraph:
        return GridGraph(self.a, self.b)

    def to_dict(self) -> dict[str, Any]:
        rows = [
            {"x": x, "y": y, "label": self.labels[(x, y)]} for (x, y) in sorted(self.labels)
        ]
        return {"a": self.a, "b": self.b, "labels": rows, "span": self.span, "meta": self.meta}

    @classmethod
    def from_dict(cls, data: Any) -> "LabelingDocument":
        try:
            a, b = data["a"], data["b"]
            rows = data["labels"]
            labels: Labeling = {}
            for r in rows:
                key = (r["x"], r["y"])
                if key in labels:
                    raise DocumentError(f"vertex {key} labeled twice")
                labels[key] = r["label"]
            doc = cls(a, b, labels, data["span"], dict(data.get("meta", {})))
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed labeling document: {exc!r}") from exc
        ints = [a, b, doc.span] + [v for k in labels for v in k] + list(labels.values())
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in ints):
            raise DocumentError("document fields must be integers")
        try:
            g = GridGraph(a, b)
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        if set(labels) != set(g.vertices()):
            raise DocumentError(f"labels do not cover the {a}x{b} grid exactly once")
        return doc


def to_json(doc: LabelingDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def from_json(text: str) -> LabelingDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return LabelingDocument.from_dict(data)


def to_ascii(doc: LabelingDocument) -> str:
    """Label table with (1,1) bottom-left and y increasing upward."""
    width = max(len(str(v)) for v in doc.labels.values())
    lines = []
    for y in range(doc.b, 0, -1):
        lines.append(" ".join(str(doc.labels[(x, y)]).rjust(width) for x in range(1, doc.a + 1)))
    return "\n".join(lines) + "\n"


def from_ascii(text: str) -> Labeling:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    b = len(rows)
    out: Labeling = {}
    for i, row in enumerate(rows):
        for j, tok in enumerate(row):
            out[(j + 1, b - i)] = int(tok)
    return out


def to_dot(doc: LabelingDocument) -> str:
    lines = [f'graph "G_{doc.a}_{doc.b}" {{', "  node [shape=circle];"]
    for (x, y) in sorted(doc.labels):
        lines.append(f'  "{x},{y}" [label="{doc.labels[(x, y)]}", pos="{x},{y}!"];')
    for (x, y) in sorted(doc.labels):
        if x < doc.a:
            lines.append(f'  "{x},{y}" -- "{x + 1},{y}";')
        if y < doc.b:
            lines.append(f'  "{x},{y}" -- "{x},{y + 1}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""File formats: edge lists, vertex profiles, demand/commodity pair lists,
and the JSON family formats.  Labels are arbitrary tokens, remapped to dense
0-based ids in first-appearance order; the label table travels with every
report so outputs can be mapped back.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import Graph


class LabelTable:
    """Bijection between input labels and dense vertex ids."""

    def __init__(self, labels: list[str]):
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}
        if len(self.index) != len(labels):
            raise ValueError("duplicate labels in table")

    def id_of(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def ids_of(self, labels) -> list[int]:
        return [self.id_of(x) for x in labels]

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def labels_of(self, ids) -> list[str]:
        return [self.labels[v] for v in ids]

    def __len__(self):
        return len(self.labels)


def read_edge_list(path: str | Path) -> tuple[Graph, LabelTable]:
    """One edge per line, two whitespace-separated labels; '#' starts a comment."""
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def vid(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two labels, got {len(parts)}")
        u, v = vid(parts[0]), vid(parts[1])
        if u == v:
            raise ValueError(f"{path}:{lineno}: self-loop at {parts[0]!r}")
        edges.append((u, v))
    if not labels:
        raise ValueError(f"{path}: no edges found")
    try:
        g = Graph(len(labels), edges)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
    return g, LabelTable(labels)


def write_edge_list(g: Graph, table: LabelTable, path: str | Path) -> None:
    lines = [f"{table.label_of(u)} {table.label_of(v)}" for u, v in g.edges()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_tokens(path: str | Path) -> list[str]:
    """Whitespace-separated tokens, '#' comments allowed: used for profiles."""
    tokens: list[str] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens.extend(line.split())
    return tokens


def read_pairs(path: str | Path) -> list[tuple[str, str]]:
    """One labeled pair per line: demand and commodity files."""
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two labels, got {len(parts)}")
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise ValueError(f"{path}: no pairs found")
    return pairs


def read_family_json(path: str | Path) -> list[dict]:
    """[{"name": str, "vertices": [labels]}, ...]; epsilon is never read."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list) or not data:
        raise ValueError(f"{path}: expected a nonempty JSON list of sets")
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or "vertices" not in entry:
            raise ValueError(f"{path}: entry {i} must be an object with 'vertices'")
        if not isinstance(entry["vertices"], list) or not entry["vertices"]:
            raise ValueError(f"{path}: entry {i} has no vertices")
        entry.setdefault("name", f"set[{i}]")
    return data


def read_kappa_family_json(path: str | Path) -> list[dict]:
    """[{"name": str, "parts": [[labels], ...]}, ...]."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list) or not data:
        raise ValueError(f"{path}: expected a nonempty JSON list of members")
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or "parts" not in entry:
            raise ValueError(f"{path}: entry {i} must be an object with 'parts'")
        parts = entry["parts"]
        if not isinstance(parts, list) or not parts:
            raise ValueError(f"{path}: entry {i} has no parts")
        for j, part in enumerate(parts):
            if not isinstance(part, list) or not part:
                raise ValueError(f"{path}: entry {i} part {j} is empty")
        entry.setdefault("name", f"member[{i}]")
    return data

"""Canonical JSON persistence of the dataset and the derived reverse index.

Only the forward mapping (film -> tropes) is written to disk; the reverse
mapping is always recomputed, so the two can never drift apart.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import BinaryIO, Mapping

from .extraction import FilmTropeDataset

FORMAT_VERSION = 1


class DatasetFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ReverseIndex:
    """Trope short name -> sorted tuple of film short names."""

    tropes: Mapping[str, tuple[str, ...]]

    @property
    def edge_count(self) -> int:
        return sum(len(f) for f in self.tropes.values())

    def degrees(self) -> dict[str, int]:
        return {trope: len(films) for trope, films in self.tropes.items()}

    def transpose(self) -> FilmTropeDataset:
        return FilmTropeDataset(_transpose(self.tropes))

    def __len__(self) -> int:
        return len(self.tropes)


def _transpose(mapping: Mapping[str, tuple[str, ...]]) -> dict[str, tuple[str, ...]]:
    out = defaultdict(list)
    # keys visited in sorted order, so every value list comes out sorted
    for key in sorted(mapping):
        for value in mapping[key]:
            out[value].append(key)
    return {k: tuple(out[k]) for k in sorted(out)}


def reverse_index(dataset: FilmTropeDataset) -> ReverseIndex:
    rev = ReverseIndex(_transpose(dataset.films))
    if rev.edge_count != dataset.edge_count:
        raise AssertionError("transpose lost edges")  # pragma: no cover
    return rev


def dumps_dataset(dataset: FilmTropeDataset) -> bytes:
    """Canonical bytes: sorted keys, 2-space indent, LF, UTF-8 without BOM."""
    films = {film: list(dataset.films[film]) for film in sorted(dataset.films)}
    body = json.dumps({"version": FORMAT_VERSION, "films": films}, indent=2, ensure_ascii=False)
    return (body + "\n").encode("utf-8")


def save_dataset(dataset: FilmTropeDataset, destination) -> int:
    """Write the canonical form to a path or binary sink; returns bytes written."""
    data = dumps_dataset(dataset)
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)
    return len(data)


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise DatasetFormatError(f"duplicate key {key!r}")
        out[key] = value
    return out


def loads_dataset(data: bytes) -> FilmTropeDataset:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DatasetFormatError(f"dataset is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise DatasetFormatError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DatasetFormatError("top level must be a JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise DatasetFormatError(f"unsupported dataset version {doc.get('version')!r}; expected {FORMAT_VERSION}")
    films = doc.get("films")
    if not isinstance(films, dict):
        raise DatasetFormatError("'films' must be a JSON object")
    extra = sorted(set(doc) - {"version", "films"})
    if extra:
        raise DatasetFormatError(f"unknown top-level keys: {', '.join(extra)}")
    for film, tropes in films.items():
        if not isinstance(tropes, list):
            raise DatasetFormatError(f"tropes of film {film!r} must be a list")
        for t in tropes:
            if not isinstance(t, str):
                raise DatasetFormatError(f"non-string trope entry {t!r} in film {film!r}")
        if not film or "" in tropes:
            raise DatasetFormatError(f"empty name in entry for film {film!r}")
    dataset = FilmTropeDataset({film: tuple(tropes) for film, tropes in films.items()})
    if dataset.edge_count != reverse_index(dataset).edge_count:
        raise AssertionError("degree sums disagree")  # pragma: no cover
    return dataset


def load_dataset(source) -> FilmTropeDataset:
    """Load from a path or binary source; lists are re-sorted and de-duplicated."""
    if hasattr(source, "read"):
        return loads_dataset(source.read())
    with open(source, "rb") as fh:
        return loads_dataset(fh.read())

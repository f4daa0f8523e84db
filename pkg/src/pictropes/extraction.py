"""Turn a stream of RDF triples into the film -> tropes bipartite dataset."""

from __future__ import annotations

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional
from urllib.parse import unquote

from .ntriples import IRI, Triple

log = logging.getLogger(__name__)

# DBTropes resource layout: one namespace per media type, tropes under Main/.
DBTROPES_FILM_PREFIXES = ("http://dbtropes.org/resource/Film/",)
DBTROPES_TROPE_PREFIXES = ("http://dbtropes.org/resource/Main/",)
DBTROPES_LINK_PREDICATES = ("http://skipforward.net/skipforward/resource/seeder/skipinions/hasFeature",)

NAME_RULES = ("last_segment", "first_segment_after_prefix")


class Kind(Enum):
    FILM = "film"
    TROPE = "trope"
    OTHER = "other"


class ConfigError(ValueError):
    pass


class ShortNameError(ValueError):
    """No short name can be derived from an IRI."""


@dataclass(frozen=True)
class ExtractionConfig:
    film_iri_prefixes: tuple[str, ...] = DBTROPES_FILM_PREFIXES
    trope_iri_prefixes: tuple[str, ...] = DBTROPES_TROPE_PREFIXES
    link_predicates: tuple[str, ...] = DBTROPES_LINK_PREDICATES
    name_rule: str = "last_segment"

    def __post_init__(self):
        for key in ("film_iri_prefixes", "trope_iri_prefixes", "link_predicates"):
            value = getattr(self, key)
            if isinstance(value, str) or not all(isinstance(v, str) for v in value):
                raise ConfigError(f"{key} must be a list of strings")
            object.__setattr__(self, key, tuple(value))
            if not value:
                raise ConfigError(f"{key} must not be empty")
            for v in value:
                if ":" not in v or any(ch in v for ch in ' <>"{}|^`\\'):
                    raise ConfigError(f"{key}: {v!r} is not a valid IRI prefix")
        for f in self.film_iri_prefixes:
            for t in self.trope_iri_prefixes:
                if f.startswith(t) or t.startswith(f):
                    raise ConfigError(f"film prefix {f!r} and trope prefix {t!r} overlap")
        if self.name_rule not in NAME_RULES:
            raise ConfigError(f"unknown name_rule {self.name_rule!r}; expected one of {NAME_RULES}")

    @classmethod
    def from_mapping(cls, data: Mapping) -> "ExtractionConfig":
        if not isinstance(data, Mapping):
            raise ConfigError("extraction config must be a JSON object")
        known = {"film_iri_prefixes", "trope_iri_prefixes", "link_predicates", "name_rule"}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        missing = sorted(known - {"name_rule"} - set(data))
        if missing:
            raise ConfigError(f"missing config keys: {', '.join(missing)}")
        if not isinstance(data.get("name_rule", "last_segment"), str):
            raise ConfigError("name_rule must be a string")
        return cls(**data)

    @classmethod
    def load(cls, path) -> "ExtractionConfig":
        with open(path, "rb") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: malformed JSON ({exc})") from None
        return cls.from_mapping(data)


@dataclass(frozen=True)
class FilmTropeDataset:
    """Film short name -> sorted, duplicate-free tuple of trope short names."""

    films: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        clean = {}
        for film in sorted(self.films):
            tropes = self.films[film]
            if isinstance(tropes, str):
                raise TypeError(f"trope list of {film!r} must be a sequence of names, not a string")
            if not film:
                raise ValueError("empty film name")
            ordered = tuple(sorted(set(tropes)))
            if "" in ordered:
                raise ValueError(f"empty trope name in film {film!r}")
            if ordered:
                clean[film] = ordered
        object.__setattr__(self, "films", clean)

    @property
    def edge_count(self) -> int:
        return sum(len(t) for t in self.films.values())

    def degrees(self) -> dict[str, int]:
        return {film: len(tropes) for film, tropes in self.films.items()}

    def __len__(self) -> int:
        return len(self.films)


def classify_resource(iri, config: ExtractionConfig) -> Kind:
    value = iri.value if isinstance(iri, IRI) else iri
    if value.startswith(config.film_iri_prefixes):
        return Kind.FILM
    if value.startswith(config.trope_iri_prefixes):
        return Kind.TROPE
    return Kind.OTHER


def short_name(iri, rule: str = "last_segment", prefixes: Iterable[str] = ()) -> str:
    """Derive the table name of a resource, e.g. ``.../Film/StarTrek`` -> ``StarTrek``.

    ``first_segment_after_prefix`` keeps only the path segment right after
    the matching prefix, which collapses per-usage instance IRIs such as
    ``Main/ShoutOut/int_1a2b`` onto their trope.
    """
    value = iri.value if isinstance(iri, IRI) else iri
    if rule == "last_segment":
        segment = value.rsplit("/", 1)[-1] if "/" in value else ""
    elif rule == "first_segment_after_prefix":
        prefix = next((p for p in prefixes if value.startswith(p)), None)
        if prefix is None:
            raise ShortNameError(f"{value}: no matching prefix for name derivation")
        segment = value[len(prefix) :].split("/", 1)[0]
    else:
        raise ConfigError(f"unknown name_rule {rule!r}")
    segment = unquote(segment.split("#", 1)[0])
    if not segment:
        raise ShortNameError(f"{value}: empty final path segment")
    return segment


@dataclass
class ExtractionReport:
    links_seen: int = 0
    edges_added: int = 0
    name_errors: int = 0
    films_dropped: int = 0
    first_name_error: Optional[str] = None

    def summary(self) -> str:
        return (
            f"links={self.links_seen} edges={self.edges_added} "
            f"name_errors={self.name_errors} films_dropped={self.films_dropped}"
        )


@dataclass
class _Accumulator:
    config: ExtractionConfig
    edges: dict = field(default_factory=lambda: defaultdict(set))
    bad_films: set = field(default_factory=set)
    report: ExtractionReport = field(default_factory=ExtractionReport)

    def _name(self, iri: IRI, prefixes) -> Optional[str]:
        try:
            return short_name(iri, self.config.name_rule, prefixes)
        except ShortNameError as exc:
            self.report.name_errors += 1
            if self.report.first_name_error is None:
                self.report.first_name_error = str(exc)
            return None

    def add(self, triple: Triple) -> None:
        cfg = self.config
        if triple.predicate.value not in cfg.link_predicates:
            return
        s, o = triple.subject, triple.object
        if not (isinstance(s, IRI) and isinstance(o, IRI)):
            return
        if classify_resource(s, cfg) is not Kind.FILM or classify_resource(o, cfg) is not Kind.TROPE:
            return
        self.report.links_seen += 1
        film = self._name(s, cfg.film_iri_prefixes)
        if film is None:
            self.bad_films.add(s.value)
            return
        trope = self._name(o, cfg.trope_iri_prefixes)
        if trope is None:
            # keep the key so a film whose links all fail is reported as dropped
            self.edges[film]
            return
        self.edges[film].add(trope)

    def finish(self) -> FilmTropeDataset:
        dropped = [f for f, t in self.edges.items() if not t]
        self.report.films_dropped = len(dropped) + len(self.bad_films)
        for film in sorted(dropped):
            log.warning("dropping film %s: no trope link yielded a usable name", film)
        for iri in sorted(self.bad_films):
            log.warning("dropping film %s: no usable short name", iri)
        dataset = FilmTropeDataset({f: tuple(t) for f, t in self.edges.items() if t})
        self.report.edges_added = dataset.edge_count
        return dataset


def extract_dataset(
    triples: Iterable[Triple], config: Optional[ExtractionConfig] = None
) -> tuple[FilmTropeDataset, ExtractionReport]:
    """Collect film-has-trope edges; duplicates collapse, input order is irrelevant."""
    acc = _Accumulator(config or ExtractionConfig())
    for triple in triples:
        acc.add(triple)
    return acc.finish(), acc.report

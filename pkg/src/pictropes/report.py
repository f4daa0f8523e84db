"""Full two-axis analysis and the static report bundle.

The bundle written by :func:`render_report` is

    report.md         statistics tables, fits, top-K tables, derived figures
    film_axis.svg     tropes-per-film histogram with the winning pdf
    trope_axis.svg    films-per-trope histogram with the winning pdf
    summary.json      every number in report.md, machine-readable
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .distributions import get_family
from .extraction import FilmTropeDataset
from .fitting import DEFAULT_FAMILIES, FitResult, select_best
from .ranking import (
    HistogramBin,
    RankingEntry,
    coverage_percent,
    degree_sequence,
    histogram,
    spread_percent,
    top_k,
)
from .stats import StatsSummary, summarize
from .store import ReverseIndex, reverse_index
from .svg import density_histogram_svg

AXES = ("films", "tropes")

_AXIS_TEXT = {
    # axis: (section title, entity column, count column, measured quantity, figure file)
    "films": ("Tropes per film", "Film (short name)", "N. tropes", "Number of films", "film_axis.svg"),
    "tropes": ("Films per trope", "Trope (short name)", "N. films", "Number of tropes", "trope_axis.svg"),
}

FAMILY_TITLES = {
    "loglogistic": "log-logistic",
    "foldcauchy": "folded Cauchy",
    "lognormal": "lognormal",
    "exponential": "exponential",
}


@dataclass
class AxisAnalysis:
    axis: str
    degrees: np.ndarray
    stats: StatsSummary
    fits: list[FitResult]
    ranking: list[RankingEntry]
    histogram: list[HistogramBin]

    @property
    def best(self) -> Optional[FitResult]:
        return self.fits[0] if self.fits and self.fits[0].ok else None

    @property
    def spread(self) -> float:
        return spread_percent(self.ranking)


@dataclass
class Analysis:
    dataset: FilmTropeDataset
    reverse: ReverseIndex
    films: AxisAnalysis
    tropes: AxisAnalysis

    @property
    def top_trope_coverage(self) -> float:
        return coverage_percent(self.tropes.ranking[0].name, self.reverse, len(self.dataset))

    def axis(self, name: str) -> AxisAnalysis:
        return {"films": self.films, "tropes": self.tropes}[name]


def axis_index(dataset: FilmTropeDataset, axis: str, reverse: Optional[ReverseIndex] = None):
    """Forward mapping for ``films``, reverse mapping for ``tropes``."""
    if axis == "films":
        return dataset
    if axis == "tropes":
        return reverse if reverse is not None else reverse_index(dataset)
    raise ValueError(f"unknown axis {axis!r}; expected one of {AXES}")


def analyze_axis(index, axis: str, families: Sequence[str] = DEFAULT_FAMILIES, k: int = 25) -> AxisAnalysis:
    degrees = degree_sequence(index)
    return AxisAnalysis(
        axis=axis,
        degrees=degrees,
        stats=summarize(degrees),
        fits=select_best(families, degrees) if families else [],
        ranking=top_k(index, k),
        histogram=histogram(degrees),
    )


def analyze(dataset: FilmTropeDataset, families: Sequence[str] = DEFAULT_FAMILIES, k: int = 25) -> Analysis:
    if len(dataset) == 0:
        raise ValueError("cannot analyse an empty dataset")
    reverse = reverse_index(dataset)
    return Analysis(
        dataset=dataset,
        reverse=reverse,
        films=analyze_axis(dataset, "films", families, k),
        tropes=analyze_axis(reverse, "tropes", families, k),
    )


# --------------------------------------------------------------------------
# formatting


def _num(v) -> str:
    if v is None:
        return "undefined"
    if isinstance(v, (int, np.integer)):
        return f"{int(v):,}"
    return f"{v:,.3f}"


def _pct(v: float) -> str:
    return f"{v:.3f} %"


def _fit_line(fit: FitResult) -> str:
    p = fit.params
    return (
        f"{FAMILY_TITLES.get(fit.family, fit.family)} "
        f"(location={p.location:.3f}, shape={p.shape:.3f}, scale={p.scale:.3f})"
    )


def stats_table(a: AxisAnalysis) -> list[str]:
    title, _, _, count_label, _ = _AXIS_TEXT[a.axis]
    s = a.stats
    rows = [
        ("Minimum", s.minimum),
        ("Maximum", s.maximum),
        ("Mean", s.mean),
        ("Median", s.median),
        ("Q1", s.q1),
        ("Q2", s.median),
        ("Q3", s.q3),
        ("Variance", s.variance),
        ("Skewness", s.skewness),
        ("Kurtosis", s.kurtosis),
    ]
    lines = [f"| {count_label} | {_num(s.n)} |", "|:--|--:|", f"| | **{title}** |"]
    lines += [f"| {label} | {_num(v)} |" for label, v in rows]
    return lines


def fits_table(a: AxisAnalysis) -> list[str]:
    lines = [
        "| Rank | Family | Location | Shape | Scale | NLL | KS | AIC | Converged |",
        "|--:|:--|--:|--:|--:|--:|--:|--:|:--|",
    ]
    for i, f in enumerate(a.fits, start=1):
        name = FAMILY_TITLES.get(f.family, f.family)
        if not f.ok:
            lines.append(f"| {i} | {name} | | | | | | | failed: {f.error} |")
            continue
        p = f.params
        lines.append(
            f"| {i} | {name} | {p.location:.4f} | {p.shape:.4f} | {p.scale:.4f} | "
            f"{f.nll:,.3f} | {f.ks:.5f} | {f.aic:,.3f} | {'yes' if f.converged else 'no'} |"
        )
    return lines


def ranking_table(a: AxisAnalysis) -> list[str]:
    _, entity, count, _, _ = _AXIS_TEXT[a.axis]
    lines = [f"| Position | {entity} | {count} |", "|--:|:--|--:|"]
    lines += [f"| {e.position} | {e.name} | {e.count} |" for e in a.ranking]
    return lines


def render_markdown(analysis: Analysis) -> str:
    ds = analysis.dataset
    out = [
        "# PicTropes descriptive analysis",
        "",
        f"{_num(len(ds))} films, {_num(len(analysis.reverse))} tropes, {_num(ds.edge_count)} film-trope links.",
    ]
    for a in (analysis.films, analysis.tropes):
        title, _, _, _, figure = _AXIS_TEXT[a.axis]
        out += ["", f"## {title}", ""]
        out += stats_table(a)
        out += [""]
        if a.best is not None:
            out += [f"Best fit: {_fit_line(a.best)}.", ""]
        if a.fits:
            out += fits_table(a)
            out += [""]
        out += [f"![Distribution of {title.lower()}]({figure})", ""]
        out += [f"Top-{len(a.ranking)} by degree:", ""]
        out += ranking_table(a)

    top_film, bottom_film = analysis.films.ranking[0], analysis.films.ranking[-1]
    top_trope, bottom_trope = analysis.tropes.ranking[0], analysis.tropes.ranking[-1]
    out += [
        "",
        "## Derived figures",
        "",
        f"- Film ranking spread ({top_film.name} vs {bottom_film.name}): {_pct(analysis.films.spread)}",
        f"- Trope ranking spread ({top_trope.name} vs {bottom_trope.name}): {_pct(analysis.tropes.spread)}",
        f"- Films using {top_trope.name}: {_pct(analysis.top_trope_coverage)}",
    ]
    return "\n".join(out) + "\n"


def summary_dict(analysis: Analysis) -> dict:
    def axis_block(a: AxisAnalysis) -> dict:
        return {
            "stats": a.stats.to_dict(),
            "fits": [f.to_dict() for f in a.fits],
            "top": [{"position": e.position, "name": e.name, "count": e.count} for e in a.ranking],
            "spread_percent": a.spread,
        }

    return {
        "n_films": len(analysis.dataset),
        "n_tropes": len(analysis.reverse),
        "edge_count": analysis.dataset.edge_count,
        "films": axis_block(analysis.films),
        "tropes": axis_block(analysis.tropes),
        "coverage": {
            "trope": analysis.tropes.ranking[0].name,
            "percent": analysis.top_trope_coverage,
        },
    }


def figure_svg(a: AxisAnalysis) -> str:
    title = _AXIS_TEXT[a.axis][0]
    best = a.best
    pdf = label = None
    if best is not None:
        fam = get_family(best.family)
        params = best.params

        def pdf(x):
            return fam.pdf(x, params)

        label = f"{FAMILY_TITLES.get(best.family, best.family)} fit"
    return density_histogram_svg(a.histogram, int(a.degrees.size), pdf, f"Distribution of {title.lower()}", title, label or "")


def render_report(analysis: Analysis, out_dir) -> dict[str, Path]:
    """Write the report bundle into ``out_dir``; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "report.md": render_markdown(analysis),
        _AXIS_TEXT["films"][4]: figure_svg(analysis.films),
        _AXIS_TEXT["tropes"][4]: figure_svg(analysis.tropes),
        "summary.json": json.dumps(summary_dict(analysis), indent=2, sort_keys=True, allow_nan=False) + "\n",
    }
    written = {}
    for name, text in files.items():
        path = out / name
        path.write_bytes(text.encode("utf-8"))
        written[name] = path
    return written

"""Film-trope bipartite dataset extraction from DBTropes dumps, and its analysis."""

from .distributions import FitParams, neg_log_likelihood
from .extraction import ExtractionConfig, FilmTropeDataset, classify_resource, extract_dataset, short_name
from .fitting import FitResult, fit_mle, ks_statistic, select_best
from .ntriples import Triple, parse_line, parse_stream
from .ranking import RankingEntry, coverage_percent, histogram, spread_percent, top_k
from .report import analyze, render_report
from .stats import StatsSummary, quantile, summarize
from .store import ReverseIndex, load_dataset, reverse_index, save_dataset

__version__ = "0.1.0"

__all__ = [
    "ExtractionConfig",
    "FilmTropeDataset",
    "FitParams",
    "FitResult",
    "RankingEntry",
    "ReverseIndex",
    "StatsSummary",
    "Triple",
    "analyze",
    "classify_resource",
    "coverage_percent",
    "extract_dataset",
    "fit_mle",
    "histogram",
    "ks_statistic",
    "load_dataset",
    "neg_log_likelihood",
    "parse_line",
    "parse_stream",
    "quantile",
    "render_report",
    "reverse_index",
    "save_dataset",
    "select_best",
    "short_name",
    "spread_percent",
    "summarize",
    "top_k",
]

import json
import xml.etree.ElementTree as ET

import pytest

from pictropes.report import analyze, render_report
from pictropes.synthetic import synthetic_dataset


@pytest.fixture(scope="module")
def analysis():
    return analyze(synthetic_dataset(300, 1200, seed=11))


def test_bundle_contents(analysis, tmp_path):
    written = render_report(analysis, tmp_path)
    assert sorted(written) == ["film_axis.svg", "report.md", "summary.json", "trope_axis.svg"]
    md = (tmp_path / "report.md").read_text()
    for needle in ("Tropes per film", "Films per trope", "| Skewness |", "| Kurtosis |", "Top-25", "Derived figures"):
        assert needle in md
    assert md.count("| Position |") == 2


def test_svgs_are_well_formed(analysis, tmp_path):
    render_report(analysis, tmp_path)
    for name in ("film_axis.svg", "trope_axis.svg"):
        root = ET.parse(tmp_path / name).getroot()
        assert root.tag.endswith("svg")
        tags = {el.tag.split("}")[1] for el in root.iter()}
        assert {"rect", "polyline", "line", "text"} <= tags


def test_summary_mirrors_numbers(analysis, tmp_path):
    render_report(analysis, tmp_path)
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["n_films"] == len(analysis.dataset)
    assert summary["edge_count"] == analysis.dataset.edge_count
    assert summary["films"]["stats"] == analysis.films.stats.to_dict()
    assert summary["tropes"]["top"][0]["name"] == analysis.tropes.ranking[0].name
    assert summary["films"]["fits"][0]["family"] == analysis.films.best.family
    assert summary["coverage"]["percent"] == pytest.approx(analysis.top_trope_coverage)
    md = (tmp_path / "report.md").read_text()
    assert f"{analysis.films.spread:.3f} %" in md


def test_byte_identical_reruns(tmp_path):
    ds = synthetic_dataset(200, 800, seed=3)
    a = render_report(analyze(ds), tmp_path / "a")
    b = render_report(analyze(ds), tmp_path / "b")
    for name in a:
        assert a[name].read_bytes() == b[name].read_bytes(), name


def test_report_with_no_fits(tmp_path):
    an = analyze(synthetic_dataset(50, 100, seed=1), families=())
    render_report(an, tmp_path)
    assert "Best fit" not in (tmp_path / "report.md").read_text()
    ET.parse(tmp_path / "film_axis.svg")


def test_empty_dataset_rejected():
    from pictropes.extraction import FilmTropeDataset

    with pytest.raises(ValueError):
        analyze(FilmTropeDataset({}))

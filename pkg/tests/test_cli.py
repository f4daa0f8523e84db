import gzip
import json
import subprocess
import sys
from pathlib import Path

import pytest

from pictropes.cli import main
from pictropes.store import save_dataset
from pictropes.synthetic import synthetic_dataset

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def dataset_path(tmp_path):
    path = tmp_path / "pictropes.json"
    save_dataset(synthetic_dataset(120, 400, seed=5), path)
    return path


def test_extract_gz(tmp_path, capsys):
    dump = tmp_path / "dump.nt.gz"
    dump.write_bytes(gzip.compress((FIXTURES / "dbtropes_sample.nt").read_bytes()))
    out = tmp_path / "ds.json"
    assert main(["extract", "--input", str(dump), "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["version"] == 1 and "StarTrek" in data["films"]
    stdout = capsys.readouterr().out
    assert "skipped=1" in stdout and "films=3" in stdout


def test_extract_with_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "film_iri_prefixes": ["http://a/"],
                "trope_iri_prefixes": ["http://b/"],
                "link_predicates": ["http://p"],
            }
        )
    )
    dump = tmp_path / "d.nt"
    dump.write_text("<http://a/F> <http://p> <http://b/T> .\n")
    out = tmp_path / "ds.json"
    assert main(["extract", "--input", str(dump), "--config", str(cfg), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["films"] == {"F": ["T"]}


def test_extract_strict_syntax_error(tmp_path, capsys):
    out = tmp_path / "ds.json"
    code = main(["extract", "--input", str(FIXTURES / "dbtropes_sample.nt"), "--output", str(out), "--policy", "strict"])
    assert code == 2
    assert "line 14" in capsys.readouterr().err


def test_missing_input_is_io_error(tmp_path, capsys):
    assert main(["extract", "--input", str(tmp_path / "nope.nt"), "--output", str(tmp_path / "o.json")]) == 3
    assert "I/O error" in capsys.readouterr().err


def test_bad_config_is_input_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"bogus": 1}')
    code = main(["extract", "--input", str(FIXTURES / "dbtropes_sample.nt"), "--config", str(cfg), "--output", str(tmp_path / "o")])
    assert code == 2


def test_stats(dataset_path, capsys):
    assert main(["stats", "--dataset", str(dataset_path), "--axis", "films", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert list(out) == ["films"]
    assert {"n", "minimum", "maximum", "mean", "median", "q1", "q3", "variance", "skewness", "kurtosis"} == set(out["films"])


def test_stats_both_axes_text(dataset_path, capsys):
    assert main(["stats", "--dataset", str(dataset_path)]) == 0
    out = capsys.readouterr().out
    assert "[films]" in out and "[tropes]" in out


def test_fit(dataset_path, capsys):
    assert main(["fit", "--dataset", str(dataset_path), "--axis", "films", "--families", "loglogistic,exponential", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [r["family"] for r in out["films"]][0] == "loglogistic"
    assert main(["fit", "--dataset", str(dataset_path), "--axis", "tropes"]) == 0
    assert "converged=" in capsys.readouterr().out


def test_rank(dataset_path, capsys):
    assert main(["rank", "--dataset", str(dataset_path), "--axis", "tropes", "--top", "5", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [e["position"] for e in out["tropes"]] == [1, 2, 3, 4, 5]


def test_report_twice_identical(dataset_path, tmp_path):
    assert main(["report", "--dataset", str(dataset_path), "--output", str(tmp_path / "r1")]) == 0
    assert main(["report", "--dataset", str(dataset_path), "--output", str(tmp_path / "r2")]) == 0
    for f in ("report.md", "film_axis.svg", "trope_axis.svg", "summary.json"):
        assert (tmp_path / "r1" / f).read_bytes() == (tmp_path / "r2" / f).read_bytes()


def test_malformed_dataset(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 9, "films": {}}')
    assert main(["stats", "--dataset", str(bad)]) == 2
    assert "version" in capsys.readouterr().err


def test_synth_requires_seed(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["synth", "--output", str(tmp_path / "s.json")])
    assert info.value.code == 1


def test_synth_deterministic(tmp_path):
    main(["synth", "--output", str(tmp_path / "a.json"), "--seed", "4", "--films", "30"])
    main(["synth", "--output", str(tmp_path / "b.json"), "--seed", "4", "--films", "30"])
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["stats", "--dataset", "x.json", "--bogus"],
        ["rank", "--dataset", "x.json", "--to", "3"],  # abbreviations are refused
        ["rank", "--dataset", "x.json", "--top", "0"],
        ["fit", "--dataset", "x.json", "--families", "pareto"],
        ["stats", "--dataset", "x.json", "--axis", "series"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_1(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_module_entry_point(dataset_path):
    proc = subprocess.run(
        [sys.executable, "-m", "pictropes", "rank", "--dataset", str(dataset_path), "--top", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("[films]")

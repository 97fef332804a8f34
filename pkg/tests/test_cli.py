import json

import pytest
from fastapi.testclient import TestClient

from rtv.cli import main
from rtv.service.app import create_app
from rtv.service.config import load_config


@pytest.fixture()
def fixture_csv_file(tmp_path, fixture_csv_bytes):
    path = tmp_path / "fixture_a.csv"
    path.write_bytes(fixture_csv_bytes)
    return path


def test_validate_clean_corpus(fixture_csv_file, capsys):
    code = main(["validate", str(fixture_csv_file), "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert "5 records, 0 issues" in out


def test_validate_rejects_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_bytes(
        b"title,authors,abstract,date,citations,venue,fields\n"
        b"Good,A,x,2019-01-01,1,V,F\n"
        b",A,x,2019-01-01,1,V,F\n"
    )
    code = main(["validate", str(bad), "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 1
    assert "1 records, 1 issues" in out
    assert "[rejected]" in out


def test_validate_missing_file_errors(capsys):
    code = main(["validate", "/nonexistent.csv", "--format", "csv"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_no_arguments_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unknown_view_is_usage_error(fixture_csv_file, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["export", "pies", "--corpus", str(fixture_csv_file), "--out", str(tmp_path / "o.json")])
    assert exc.value.code == 2


def test_export_equals_service_response(fixture_csv_file, tmp_path, fixture_corpus, capsys):
    out_path = tmp_path / "v.json"
    code = main(["export", "venues", "--corpus", str(fixture_csv_file), "--n", "2", "--out", str(out_path)])
    assert code == 0

    client = TestClient(create_app(corpus=fixture_corpus))
    body = client.get("/api/venues", params={"n": 2}).json()
    exported = json.loads(out_path.read_bytes())
    assert exported == body["data"]


def test_export_words_with_range(fixture_csv_file, tmp_path, capsys):
    out_path = tmp_path / "w.json"
    code = main(
        ["export", "words", "--corpus", str(fixture_csv_file),
         "--from", "2019-01-01", "--to", "2019-12-31", "--n", "2", "--out", str(out_path)]
    )
    assert code == 0
    data = json.loads(out_path.read_bytes())
    assert data["k"] == 2
    assert [f["bucket"] for f in data["frames"]] == ["2019"]


def test_export_bad_param_exits_one(fixture_csv_file, tmp_path, capsys):
    code = main(
        ["export", "venues", "--corpus", str(fixture_csv_file), "--n", "0", "--out", str(tmp_path / "x.json")]
    )
    assert code == 1
    assert "invalid_n" in capsys.readouterr().err


def test_export_via_config(fixture_csv_file, tmp_path, fixture_corpus):
    config_path = tmp_path / "rtv.conf"
    config_path.write_text(
        f"corpus_path = {fixture_csv_file}\ncorpus_format = csv\nport = 8123\ncache_capacity = 16\n"
    )
    out_path = tmp_path / "r.json"
    assert main(["export", "themeriver", "--config", str(config_path), "--out", str(out_path)]) == 0
    data = json.loads(out_path.read_bytes())
    assert data["baseline"] == [-1.5, -1.0, -0.5]

    config = load_config(config_path)
    assert config.port == 8123 and config.cache_capacity == 16


def test_port_env_override(fixture_csv_file, tmp_path, monkeypatch):
    config_path = tmp_path / "rtv.conf"
    config_path.write_text(f"corpus_path = {fixture_csv_file}\nport = 8123\n")
    monkeypatch.setenv("RTV_PORT", "9001")
    assert load_config(config_path).port == 9001
    monkeypatch.setenv("RTV_PORT", "999999")
    from rtv.service.config import ConfigError

    with pytest.raises(ConfigError):
        load_config(config_path)

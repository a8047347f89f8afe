import json
import logging
import sys

from logging_config import DevFormatter, JSONFormatter, channel_var, ring_var, run_id_var, setup_logging


def _record(**extra) -> logging.LogRecord:
    record = logging.LogRecord("fsing.test", logging.INFO, __file__, 1, "stage %d", (2,), None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_json_formatter_stamps_context_and_data():
    tokens = [run_id_var.set("r-1"), ring_var.set("two-planes"), channel_var.set("buchsbaum")]
    try:
        entry = json.loads(JSONFormatter().format(_record(data={"delta": 1})))
    finally:
        channel_var.reset(tokens[2])
        ring_var.reset(tokens[1])
        run_id_var.reset(tokens[0])
    assert entry["message"] == "stage 2"
    assert (entry["run_id"], entry["ring"], entry["channel"]) == ("r-1", "two-planes", "buchsbaum")
    assert entry["data"] == {"delta": 1}


def test_json_formatter_defaults_outside_a_run():
    entry = json.loads(JSONFormatter().format(_record()))
    assert entry["run_id"] == "-"
    assert "data" not in entry


def test_dev_formatter_appends_data():
    line = DevFormatter().format(_record(data={"e": 1}))
    assert "run_id=- ring=- channel=-" in line
    assert line.endswith("data={'e': 1}")


def test_setup_logging_installs_one_stderr_handler(monkeypatch):
    monkeypatch.setenv("ENV", "production")
    root = logging.getLogger()
    saved = root.handlers[:], root.level
    try:
        setup_logging()
        setup_logging()
        assert len(root.handlers) == 1
        handler = root.handlers[0]
        assert handler.stream is sys.stderr
        assert isinstance(handler.formatter, JSONFormatter)
    finally:
        root.handlers[:] = saved[0]
        root.setLevel(saved[1])

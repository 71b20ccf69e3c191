"""HTTP service endpoints."""

import pytest
from fastapi.testclient import TestClient

from minbr.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_corpus_endpoints(client):
    r = client.get("/corpus")
    assert r.status_code == 200
    assert "T_O58" in r.json()["keys"]
    r = client.get("/corpus/unit_3")
    assert r.status_code == 200
    assert r.json()["dims"] == [3, 3, 3]
    assert client.get("/corpus/nope").status_code == 404


def test_analyze(client):
    r = client.post("/analyze", json={"tensor": {"dims": [2, 2, 2], "entries": [
        {"i": 1, "j": 1, "k": 1, "v": 1}, {"i": 2, "j": 2, "k": 2, "v": "1/1"}]}})
    assert r.status_code == 200
    assert r.json()["verdicts"]["minimal_border_rank"]["answer"] == "yes"


def test_analyze_rejects_bad_tensor(client):
    r = client.post("/analyze", json={"tensor": {"dims": [2, 2], "entries": []}})
    assert r.status_code == 422


def test_classify(client):
    r = client.post("/classify", json={"tensor": {"corpus_key": "T_O55"}})
    assert r.status_code == 200
    body = r.json()
    assert body["label"] == "O55"
    assert body["symmetry"]["full"] == 19


def test_classify_precondition(client):
    r = client.post("/classify", json={"tensor": {"corpus_key": "unit_5"}})
    assert r.status_code == 409


def test_certify_with_builtin_family(client):
    r = client.post("/certify", json={"tensor": {"corpus_key": "T_O58"},
                                      "use_builtin_family": True})
    assert r.status_code == 200
    body = r.json()
    assert body["minimal_border_rank"]["answer"] == "yes"
    assert body["wild"]["answer"] == "yes"
    assert body["limit_certificate"]["verified"] is True


def test_unknown_corpus_key(client):
    r = client.post("/analyze", json={"tensor": {"corpus_key": "nope"}})
    assert r.status_code == 404

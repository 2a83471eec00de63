from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from braidmarkov import __version__
from braidmarkov.main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    resp = client.get("/api/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_moves(client):
    items = client.get("/api/moves").json()["items"]
    assert {i["kind"]: i["ledger_delta"] for i in items} == {
        "conjugate": 0,
        "cyclic_rotate": 0,
        "destabilize": -1,
        "stabilize": 1,
    }


def test_normalize(client):
    body = client.post("/api/normalize", json={"word": "B3: s1 s2 s1 s1 s2 s1"}).json()
    assert body["delta_power"] == 2
    assert body["factors"] == 0
    assert body["word"] == "B3: s1 s2 s1 s1 s2 s1"


def test_invariants(client):
    body = client.post("/api/invariants", json={"word": "B3: s1 s2^-1 s1 s2^-1"}).json()
    inv = body["invariants"]
    assert inv["components"]["text"] == "1"
    assert inv["determinant"]["text"] == "5"
    assert inv["alexander"]["scaled"] is True


def test_move(client):
    resp = client.post("/api/move", json={"word": "B3: s1 s2", "move": {"kind": "destabilize", "sign": 1}})
    assert resp.json() == {"word": "B2: s1"}


def test_verify(client):
    resp = client.post(
        "/api/verify",
        json={
            "source": "B2: s1",
            "target": "B3: s1 s2",
            "certificate": {"initial_index": 2, "moves": [{"kind": "stabilize", "sign": 1}]},
        },
    )
    assert resp.status_code == 200
    report = resp.json()
    assert report["verdict"] == "accept"
    assert report["ledger"] == [2, 3]

    rejected = client.post(
        "/api/verify",
        json={"source": "B2: s1 s1 s1", "target": "B2: s1", "certificate": {"initial_index": 2}},
    ).json()
    assert rejected["verdict"] == "reject"


def test_simplify_disc(client, doc):
    body = client.post("/api/simplify-disc", json={"tiling": doc("pillow")}).json()
    assert body["ledger"] == [2, 1]
    assert body["certificate"] == {"initial_index": 2, "moves": [{"kind": "destabilize", "sign": 1}]}
    assert [s["action"] for s in body["trace"]] == ["remove_b_arc", "destabilize"]


def test_unlink(client):
    body = client.post(
        "/api/unlink",
        json={"diagram": {"crossings": [{"id": "c1", "over": "green", "under": "red"}]}},
    ).json()
    assert body["green_over_red"] == 1
    assert body["certificate"] == {"switched": ["c1"], "summands": 1}
    assert body["diagram"]["crossings"][0]["over"] == "red"


@pytest.mark.parametrize(
    "path, payload",
    [
        ("/api/normalize", {"word": "B3: s9"}),
        ("/api/move", {"word": "B2: s1", "move": {"kind": "twist"}}),
        ("/api/verify", {"source": "B2: s1", "target": "B2: s1", "certificate": {"initial_index": 0}}),
        ("/api/simplify-disc", {"tiling": {"vertices": "v0"}}),
        ("/api/unlink", {"diagram": {"crossings": [{"id": "c", "over": "blue", "under": "red"}]}}),
    ],
)
def test_bad_input_is_a_400(client, path, payload):
    resp = client.post(path, json=payload)
    assert resp.status_code == 400
    assert resp.json()["detail"]

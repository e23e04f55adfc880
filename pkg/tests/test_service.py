from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from blfkit.blffile import parse_document, serialize_document
from blfkit.models import matsumoto_fibration, matsumoto_sum, rational_ruled
from blfkit.service import create_app
from blfkit.surgery import example42_family

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def _fixture_text(name):
    return (FIXTURES / name).read_text(encoding="utf-8")


def test_validate_ok(client):
    resp = client.post("/validate", json={"text": _fixture_text("matsumoto.blf")})
    assert resp.status_code == 200
    assert resp.json() == {"ok": True, "violations": []}


def test_validate_reports_violations(client):
    text = (FIXTURES / "broken" / "parity-mismatch.blf").read_text(encoding="utf-8")
    resp = client.post("/validate", json={"text": text})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is False
    assert body["violations"][0]["code"] == "parity-mismatch"
    assert body["violations"][0]["where"] == "round[0]"


def test_invariants_endpoint(client):
    resp = client.post("/invariants", json={"text": _fixture_text("matsumoto-sum.blf")})
    assert resp.status_code == 200
    body = resp.json()
    assert body["e"] == 8
    assert body["sigma"] == -4
    assert body["chi_h"] == "1"
    assert body["pi1"] == "trivial"
    assert body["b_minus"] == 5
    assert "e=8\n" in body["text"]


def test_monodromy_endpoint(client):
    resp = client.post("/monodromy", json={"text": _fixture_text("matsumoto.blf")})
    assert resp.status_code == 200
    body = resp.json()
    assert body["genus"] == 2
    assert body["identity"] is True
    assert len(body["matrix"]) == 4


def test_parity_endpoint(client):
    resp = client.post("/parity", json={"text": _fixture_text("example42.blf")})
    assert resp.json() == {"parities": ["Twisted"]}
    resp = client.post("/parity", json={"text": _fixture_text("step-g0.blf")})
    assert resp.json() == {"parities": ["Untwisted"]}


def test_report_endpoint(client):
    resp = client.post("/report", json={"text": _fixture_text("matsumoto-sum.blf")})
    assert "CP^2 # 5 -CP^2" in resp.json()["report"]


def test_sum_endpoint_matches_library(client):
    resp = client.post(
        "/sum",
        json={
            "left_text": _fixture_text("matsumoto.blf"),
            "right_text": _fixture_text("rational-s2xs2.blf"),
            "gammas": ["a1", "b2"],
            "phi1": "id",
            "phi2": "id",
        },
    )
    assert resp.status_code == 200
    produced = parse_document(resp.json()["document"])
    expected = matsumoto_sum()
    # the stock model additionally pins the declared metadata
    assert produced.higher == expected.higher
    assert produced.cobordisms == expected.cobordisms
    assert produced.sections == expected.sections
    assert produced.declared.sigma == -4


def test_csum_endpoint(client):
    text = _fixture_text("rational-s2xs2.blf")
    resp = client.post("/csum", json={"left_text": text, "right_text": text})
    out = parse_document(resp.json()["document"])
    assert len(out.lower.fiber.components) == 2
    assert out.cobordisms[-1].separating


def test_trade_and_errors(client):
    resp = client.post(
        "/trade", json={"text": _fixture_text("achiral-neg.blf"), "index": 0}
    )
    assert resp.status_code == 200
    out = parse_document(resp.json()["document"])
    assert out.blowups == 1

    resp = client.post(
        "/trade", json={"text": _fixture_text("achiral-neg.blf"), "index": 7}
    )
    assert resp.status_code == 422
    assert resp.json()["kind"] == "validation"

    broken = (
        'lower { genus = 0 }\n'
        'round { gamma = "a1" }\n'
        'higher { genus = 1; cycles = ["-b1"] }\n'
    )
    resp = client.post("/trade", json={"text": broken, "index": 0})
    assert resp.status_code == 422
    assert resp.json()["kind"] == "unsupported"


def test_blowdown_endpoint(client):
    text = serialize_document(example42_family(-1))
    resp = client.post("/blowdown", json={"text": text, "section_index": 0})
    out = parse_document(resp.json()["document"])
    assert out.basepoints == 1
    assert out.sections == ()


def test_step_and_example42_endpoints(client):
    resp = client.post("/step", json={"genus": 0, "framing": 1})
    assert 'label = "S2x~S2 # S1xS3"' in resp.json()["document"]
    resp = client.post("/example42", json={"framing": 2})
    assert 'label = "S2xS2"' in resp.json()["document"]


def test_parse_errors_carry_positions(client):
    resp = client.post("/validate", json={"text": "blf {\n  base = 5\n}\n"})
    assert resp.status_code == 422
    body = resp.json()
    assert body["kind"] == "parse"
    assert (body["line"], body["col"]) == (2, 10)


def test_sw_endpoints(client):
    resp = client.post(
        "/sw/wall", json={"value": 0, "d": 2, "sign_h": "+", "sign_h_prime": "-"}
    )
    assert resp.json() == {"value": -1}
    resp = client.post(
        "/sw/wall", json={"value": 0, "d": 3, "sign_h": "+", "sign_h_prime": "-"}
    )
    assert resp.status_code == 422
    assert resp.json()["kind"] == "validation"

    resp = client.post("/sw/adjunction", json={"genus": 1, "square": 1, "pairing": 0})
    assert resp.json() == {"ok": False}
    resp = client.post("/sw/simple-type", json={"square": 0, "e": 24, "sigma": -16})
    assert resp.json() == {"ok": True}
    resp = client.post("/sw/symmetry", json={"value": 3, "e": 8, "sigma": -4})
    assert resp.json() == {"value": -3}
    resp = client.post("/sw/section", json={"b_plus": 2, "nontrivial": True, "k": 0})
    assert resp.json() == {"verdict": "Forbidden"}
    resp = client.post("/sw/vanishing", json={})
    body = resp.json()
    assert body["vanishes"] is True
    assert body["text"].endswith("flag: SW == 0 (identically)\n")


def test_push_endpoint(client):
    f = matsumoto_fibration()
    resp = client.post("/push", json={"text": serialize_document(f)})
    assert parse_document(resp.json()["document"]) == f  # nothing on the lower side


def test_unknown_route_is_404(client):
    assert client.post("/nope", json={}).status_code == 404


def test_rational_invariants(client):
    resp = client.post("/invariants", json={"text": serialize_document(rational_ruled())})
    body = resp.json()
    assert body["e"] == 4
    assert body["sigma"] == 0
    assert body["chi_h"] == "1"

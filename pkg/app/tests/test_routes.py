from fastapi.testclient import TestClient

from main import app

client = TestClient(app)

J_1_TEXT = "ring n=4\ngens: x1*x3, x1*x4, x2*x3, x2*x4"


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_analyze_from_text():
    response = client.post("/api/analysis/analyze", json={"text": J_1_TEXT})
    assert response.status_code == 200
    data = response.json()
    assert data["dim"] == 2
    assert data["depth"] == 1
    assert data["gcm"] is True
    assert data["a"] == ["-infinity", 0, -2]
    assert data["k_index"] == 1


def test_check_gcm_from_generators():
    payload = {"n": 4, "gens": ["x1*x3", "x1^2*x4", "x1*x4^2", "x2^2*x3", "x2*x3^2", "x2*x4"]}
    response = client.post("/api/analysis/check-gcm", json=payload)
    assert response.status_code == 200
    data = response.json()
    assert data["gcm"] is True
    assert data["combinatorial"] is True
    assert data["field"] == "Q"


def test_field_override():
    response = client.post("/api/analysis/check-gcm", json={"text": J_1_TEXT, "field": "gf:2"})
    assert response.status_code == 200
    assert response.json()["field"] == "GF(2)"


def test_k_index_with_cap():
    text = "ring n=4\ngens: x1^2*x3^2, x1^2*x4^2, x2^2*x3^2, x2^2*x4^2"
    response = client.post("/api/analysis/k-index", json={"text": text})
    assert response.status_code == 200
    assert response.json()["value"] == 5
    capped = client.post("/api/analysis/k-index", json={"text": text, "cap": 2})
    assert capped.json()["value"] == "above_cap"


def test_frobenius():
    response = client.post("/api/analysis/frobenius", json={"text": J_1_TEXT, "exps": [2, 2, 2, 2]})
    assert response.status_code == 200
    assert "x2^2*x4^2" in response.json()["image"]["gens"]


def test_hilbert_and_radical_compare():
    response = client.post("/api/analysis/hilbert", json={"text": J_1_TEXT})
    assert response.status_code == 200
    assert response.json()["series"]["1"] == "1"
    response = client.post("/api/analysis/radical-compare", json={"text": J_1_TEXT})
    assert response.status_code == 200
    assert response.json()["mismatches"] == []


def test_input_errors_are_422():
    response = client.post("/api/analysis/analyze", json={"text": "ring n=2\ngens\nx1^0"})
    assert response.status_code == 422
    assert "line 3" in response.json()["detail"]
    response = client.post("/api/analysis/frobenius", json={"text": J_1_TEXT, "exps": [0, 1, 1, 1]})
    assert response.status_code == 422
    response = client.post("/api/analysis/analyze", json={"n": 2, "gens": ["x1"], "field": "gf:6"})
    assert response.status_code == 422
    response = client.post("/api/analysis/check-gcm", json={"n": 2, "gens": ["x1", "x3"]})
    assert response.status_code == 422
    assert response.json()["detail"].startswith("generator 2 'x3'")


def test_fields():
    response = client.get("/api/analysis/fields")
    assert response.status_code == 200
    assert "gf:<p>" in response.json()["accepted"]

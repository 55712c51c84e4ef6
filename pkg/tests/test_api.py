import pytest
from fastapi.testclient import TestClient
from sqlalchemy.orm import sessionmaker

from api.main import app
from src.database import Base, get_db, make_engine

HALF = {"algebra": {"blocks": [2]}, "blocks": [[[0.5, 0], [0, 0], [0, 0], [0.5, 0]]]}
SKEWED = {"algebra": {"blocks": [2]}, "blocks": [[[0.9, 0], [0, 0], [0, 0], [0.1, 0]]]}
IDENTITY_L2 = {"algebra": {"blocks": [2]}, "p": 2.0, "blocks": [[[1, 0], [0, 0], [0, 0], [1, 0]]]}


@pytest.fixture
def client(tmp_path):
    engine = make_engine(f"sqlite:///{tmp_path / 'api.db'}")
    Base.metadata.create_all(bind=engine)
    TestingSession = sessionmaker(autocommit=False, autoflush=False, bind=engine)

    def override_get_db():
        db = TestingSession()
        try:
            yield db
        finally:
            db.close()

    app.dependency_overrides[get_db] = override_get_db
    try:
        yield TestClient(app)
    finally:
        app.dependency_overrides.clear()
        engine.dispose()


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_divergence(client):
    response = client.post("/api/divergence", json={"phi": HALF, "psi": SKEWED, "alpha": 0.0, "oracle": True})
    assert response.status_code == 200
    body = response.json()
    assert body["value"] == pytest.approx(0.4222912360003366, abs=1e-12)
    assert body["agreement"] is True


def test_divergence_alpha_out_of_range(client):
    response = client.post("/api/divergence", json={"phi": HALF, "psi": SKEWED, "alpha": 1.5})
    assert response.status_code == 422
    assert response.json()["error"] == "DomainError"


def test_malformed_functional(client):
    broken = {"algebra": {"blocks": [2]}, "blocks": [[[0.5, 0]]]}
    response = client.post("/api/divergence", json={"phi": broken, "psi": SKEWED, "alpha": 0.0})
    assert response.status_code == 422
    assert response.json()["error"] == "ParseError"


def test_embed(client):
    body = client.post("/api/embed", json={"omega": HALF, "alpha": 0.0, "dual": True}).json()
    assert body["norm"] == pytest.approx(2.0)
    assert body["dual"]["p"] == 2.0


def test_spectrum(client):
    body = client.post("/api/spectrum", json={"phi": HALF, "psi": SKEWED, "function": "t_log_t"}).json()
    assert body["faithful"] is True
    assert len(body["pairs"]) == 2
    assert body["quasi_entropy"] == pytest.approx(0.5108256237659907)


def test_project_lp_vector(client):
    y = {"algebra": {"blocks": [2]}, "p": 2.0, "blocks": [[[3, 0], [0, 0], [0, 0], [1, 0]]]}
    payload = {"y": y, "set": {"variant": "cone", "generators": [IDENTITY_L2]}, "samples": 20}
    response = client.post("/api/project", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["converged"] is True
    assert body["x_m"]["blocks"][0][0][0] == pytest.approx(2.0, abs=1e-7)


def test_alpha_projection_of_member(client):
    payload = {"y": HALF, "set": {"variant": "cone", "generators": [IDENTITY_L2]}, "samples": 20}
    body = client.post("/api/project", json=payload).json()
    assert body["alpha"] == 0.0
    assert body["omega_m"]["blocks"][0][0][0] == pytest.approx(0.5, abs=1e-8)
    assert body["pythagorean_gap"] >= -1e-8


def test_list_checks(client):
    body = client.get("/api/checks").json()
    assert body["count"] == len(body["checks"])
    assert "divergence.worked_example" in body["checks"]


def test_verify_and_archive(client):
    payload = {"config": {"seed": 3, "checks": ["divergence.worked_example"]}, "record": True}
    body = client.post("/api/verify", json=payload).json()
    assert body["summary"]["status"] == "PASSED"
    run_id = body["archive"]["run_id"]

    runs = client.get("/api/runs").json()
    assert runs["count"] == 1
    assert client.get(f"/api/runs/{run_id}").json()["failed_checks"] == []
    assert client.get("/api/runs/RUN-missing").status_code == 404
    assert client.get("/api/audit-logs", params={"run_id": run_id}).json()["count"] == 1

    again = client.post("/api/verify", json={"config": payload["config"], "compare_baseline": True}).json()
    assert again["reproducibility"]["match_status"] == "REPRODUCED"


def test_verify_bad_config(client):
    response = client.post("/api/verify", json={"config": {"alphas": [3.0]}})
    assert response.status_code == 422
    assert response.json()["error"] == "ParseError"

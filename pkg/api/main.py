"""
ncgeom API
HTTP front end for divergences, embeddings, modular spectra, projections
and the property-verification suite
"""

from typing import Any, Dict, List, Optional, Union

from fastapi import Depends, FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from pydantic import BaseModel, Field
from sqlalchemy.orm import Session

from src.database import crud, get_db, init_db
from src.divergence.alpha_divergence import alpha_divergence
from src.lp.embedding import alpha_embed, duality_map, order_to_alpha
from src.lp.lp_space import schatten_norm
from src.projection.alpha_projection import alpha_project
from src.projection.certificates import optimality_residuals
from src.projection.solver import SolverOptions, project_Dp
from src.quasientropy.modular import alpha_via_quasientropy, modular_spectrum, quasi_entropy
from src.reports.report_generator import encode_value
from src.reports.reproducibility import ReproducibilityChecker
from src.config.settings import get_settings
from src.utils.codec import (
    ConvexSetModel,
    FunctionalModel,
    convex_set_from_dict,
    functional_from_dict,
    functional_to_dict,
    lp_vector_from_dict,
    lp_vector_to_dict,
)
from src.utils.errors import NCGeomError, SolverError
from src.verification.checks import CHECKS
from src.verification.property_suite import PropertySuite
from src.verification.suite_config import load_suite_config

app = FastAPI(
    title="ncgeom API",
    description="Non-commutative alpha-divergences, projections and property checks",
    version="1.0.0"
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Initialize database
try:
    init_db()
except Exception as e:
    print(f"⚠️  Database initialization warning: {e}")


# ============= Pydantic Models =============

class DivergenceRequest(BaseModel):
    """S_alpha request"""
    phi: FunctionalModel
    psi: FunctionalModel
    alpha: float
    oracle: bool = False
    tolerance: float = 1e-9


class EmbedRequest(BaseModel):
    """alpha-embedding request"""
    omega: FunctionalModel
    alpha: float
    dual: bool = False


class SpectrumRequest(BaseModel):
    """Relative modular spectrum request"""
    phi: FunctionalModel
    psi: FunctionalModel
    function: Optional[Union[str, List[List[float]]]] = None
    strict: bool = False


class ProjectRequest(BaseModel):
    """Projection of an L_p vector (has "p") or a functional onto a convex set"""
    y: Dict[str, Any]
    convex_set: ConvexSetModel = Field(alias="set")
    alpha: Optional[float] = None
    tolerance: Optional[float] = None
    max_iter: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0


class VerifyRequest(BaseModel):
    """Suite run; config takes the same keys as a suite config file"""
    config: Dict[str, Any] = Field(default_factory=dict)
    record: bool = False
    compare_baseline: bool = False


# ============= Helper Functions =============

def json_response(result: Dict, status_code: int = 200) -> Response:
    """JSON body with floats at 17 significant digits"""
    return Response(content=encode_value(result), media_type="application/json", status_code=status_code)


def error_status(error: NCGeomError) -> int:
    """Solver failures are 409; parse, domain and shape errors are 422"""
    return 409 if isinstance(error, SolverError) else 422


@app.exception_handler(NCGeomError)
async def toolkit_error_handler(request: Request, exc: NCGeomError):
    return json_response(
        {"success": False, "error": type(exc).__name__, "detail": str(exc)},
        status_code=error_status(exc),
    )


# ============= Endpoints =============

@app.get("/api/health")
async def health_check():
    """Health check"""
    return {"status": "healthy", "checks": len(CHECKS)}


@app.post("/api/divergence")
def divergence_endpoint(request: DivergenceRequest):
    """S_alpha(phi, psi) with its lower bound"""
    phi = functional_from_dict(request.phi.model_dump())
    psi = functional_from_dict(request.psi.model_dump())
    value = alpha_divergence(phi, psi, request.alpha)
    result = {"success": True, "value": value.value, "lower_bound": value.lower_bound}
    if request.oracle:
        oracle = alpha_via_quasientropy(phi, psi, request.alpha)
        scale = 1.0 + max(abs(oracle), abs(value.value))
        result["oracle_value"] = oracle
        result["agreement"] = abs(oracle - value.value) / scale <= request.tolerance
    return json_response(result)


@app.post("/api/embed")
def embed_endpoint(request: EmbedRequest):
    """l_alpha(omega) and optionally its duality-map image"""
    x = alpha_embed(functional_from_dict(request.omega.model_dump()), request.alpha)
    result = lp_vector_to_dict(x)
    result["norm"] = schatten_norm(x)
    if request.dual:
        result["dual"] = lp_vector_to_dict(duality_map(x))
    return json_response(result)


@app.post("/api/spectrum")
def spectrum_endpoint(request: SpectrumRequest):
    """(eigenvalue, weight) pairs and an optional quasi-entropy"""
    phi = functional_from_dict(request.phi.model_dump())
    psi = functional_from_dict(request.psi.model_dump())
    result = modular_spectrum(phi, psi, strict=request.strict).to_dict()
    if request.function is not None:
        result["quasi_entropy"] = quasi_entropy(request.function, phi, psi, strict=request.strict)
    return json_response(result)


@app.post("/api/project")
def project_endpoint(request: ProjectRequest):
    """D_p-projection (L_p input) or alpha-projection (functional input)"""
    settings = get_settings()
    C = convex_set_from_dict(request.convex_set.model_dump(exclude_none=True))
    options = SolverOptions(
        tolerance=request.tolerance or settings.solver_tol,
        max_iter=request.max_iter or settings.solver_max_iter,
        seed=request.seed,
        certificate_samples=settings.certificate_samples if request.samples is None else request.samples,
    )

    if "p" in request.y:
        y = lp_vector_from_dict(request.y)
        result = project_Dp(y, C, options)
        output = result.to_dict()
    else:
        psi = functional_from_dict(request.y)
        alpha = order_to_alpha(C.order) if request.alpha is None else request.alpha
        projection = alpha_project(psi, C, alpha, options, samples=options.certificate_samples, seed=request.seed)
        result = projection.result
        y = alpha_embed(psi, alpha)
        output = projection.to_dict()
        output["alpha"] = alpha
        output["omega_m"] = functional_to_dict(projection.omega_m)

    if not result.converged:
        raise SolverError(f"solver did not converge (kkt residual {result.kkt_residual:.3e})")
    output["x_m"] = lp_vector_to_dict(result.x_m)
    output["certificates"] = optimality_residuals(
        result.x_m, y, C, samples=options.certificate_samples, seed=request.seed
    )
    return json_response(output)


@app.get("/api/checks")
async def list_checks():
    """Names of all registered property checks"""
    return {"count": len(CHECKS), "checks": sorted(CHECKS)}


@app.post("/api/verify")
def verify_endpoint(request: VerifyRequest, db: Session = Depends(get_db)):
    """Run the suite; optionally archive it and compare with the baseline"""
    config = load_suite_config(None, **request.config)
    report = PropertySuite(config, verbose=False).run()
    result = {
        "success": True,
        "summary": report.summary(),
        "rows": report.rows,
    }
    checker = ReproducibilityChecker(db)
    if request.compare_baseline:
        result["reproducibility"] = checker.check(report)
    if request.record:
        result["archive"] = checker.record(report)
    return json_response(result)


@app.get("/api/runs")
async def list_runs(limit: int = 100, db: Session = Depends(get_db)):
    """Archived suite runs, newest first"""
    runs = crud.get_suite_runs(db, limit=limit)
    return {
        "success": True,
        "count": len(runs),
        "runs": [
            {
                "run_id": run.run_id,
                "seed": run.seed,
                "report_hash": run.report_hash,
                "passed": run.passed,
                "match_score": run.match_score,
                "created_at": run.created_at.isoformat(),
            }
            for run in runs
        ]
    }


@app.get("/api/runs/{run_id}")
async def get_run(run_id: str, db: Session = Depends(get_db)):
    """One archived run with its failed checks"""
    run = crud.get_suite_run(db, run_id)
    if not run:
        raise HTTPException(status_code=404, detail="Run not found")
    return {
        "success": True,
        "run_id": run.run_id,
        "config_hash": run.config_hash,
        "report_hash": run.report_hash,
        "total_checks": run.total_checks,
        "failed_checks": [record.check_name for record in crud.get_failed_checks(db, run_id)],
    }


@app.get("/api/audit-logs")
async def get_audit_logs(
    run_id: Optional[str] = None,
    operation_type: Optional[str] = None,
    limit: int = 100,
    db: Session = Depends(get_db)
):
    """Get audit logs"""
    logs = crud.get_audit_logs(db, run_id, operation_type, limit=limit)
    return {
        "success": True,
        "count": len(logs),
        "logs": [
            {
                "id": log.id,
                "timestamp": log.timestamp.isoformat(),
                "operation_type": log.operation_type,
                "run_id": log.run_id,
                "status": log.status,
                "message": log.message
            }
            for log in logs
        ]
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)

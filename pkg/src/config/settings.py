"""
Runtime Settings
Defaults read from the environment (and an optional .env file)
"""

import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()


DATABASE_URL = os.getenv(
    "NCGEOM_DATABASE_URL",
    "sqlite:///./data/ncgeom.db"  # Default to SQLite
)


@dataclass(frozen=True)
class Settings:
    """Snapshot of the environment-driven defaults"""

    database_url: str
    seed: int
    report_dir: str
    solver_tol: float
    solver_max_iter: int
    certificate_samples: int


def get_settings() -> Settings:
    """
    Read settings from the environment

    Returns:
        Settings: current values, falling back to built-in defaults
    """
    return Settings(
        database_url=os.getenv("NCGEOM_DATABASE_URL", DATABASE_URL),
        seed=int(os.getenv("NCGEOM_SEED", "42")),
        report_dir=os.getenv("NCGEOM_REPORT_DIR", "data/reports"),
        solver_tol=float(os.getenv("NCGEOM_SOLVER_TOL", "1e-8")),
        solver_max_iter=int(os.getenv("NCGEOM_SOLVER_MAX_ITER", "10000")),
        certificate_samples=int(os.getenv("NCGEOM_CERT_SAMPLES", "200")),
    )

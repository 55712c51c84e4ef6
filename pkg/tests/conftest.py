"""
Shared fixtures: seeded generators, standard shapes and a throwaway archive
"""

import json

import numpy as np
import pytest
from sqlalchemy.orm import sessionmaker

from src.algebra.algebra import AlgebraShape, NormalFunctional
from src.database import Base, drop_db, make_engine

SHAPES = [(2,), (3,), (1, 2), (2, 2), (1, 1, 1)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=SHAPES, ids=lambda dims: "x".join(map(str, dims)))
def shape(request):
    return AlgebraShape(request.param)


@pytest.fixture
def qubit():
    return AlgebraShape((2,))


@pytest.fixture
def worked_pair():
    """diag(0.5, 0.5) and diag(0.9, 0.1)"""
    return NormalFunctional.diagonal([0.5, 0.5]), NormalFunctional.diagonal([0.9, 0.1])


@pytest.fixture
def db_session(tmp_path):
    engine = make_engine(f"sqlite:///{tmp_path / 'archive.db'}")
    Base.metadata.create_all(bind=engine)
    session = sessionmaker(autocommit=False, autoflush=False, bind=engine)()
    try:
        yield session
    finally:
        session.close()
        drop_db(bind=engine)
        engine.dispose()


@pytest.fixture
def write_json(tmp_path):
    """Write a payload to a JSON file under tmp_path and return its path"""
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write

import os

# in-memory default so importing main never touches a database file
os.environ.setdefault("DATABASE_URL", "sqlite://")

from itertools import product

import pytest
from dependency_injector import providers
from sqlalchemy import create_engine

from app.container import Container
from app.db.engine import init_orm
from app.domain.atom import FactorAtom, ProductAtom, Sign, Signature
from app.repositories.catalogs import CatalogsRepository
from app.services.atom_algebra import dims_leq
from app.services.molecule_serializers import MoleculeSerializer
from app.services.subcomplexes import normalize
from app.services.worked_examples import PAIRWISE_EXAMPLE

TRIPLE = Signature.plain(3)
PAIR = Signature.plain(2)
CUBE = Signature.capped((1, 1, 1))


def sub(text, signature):
    return MoleculeSerializer.parse_subcomplex(text, signature)


def atom(text):
    return MoleculeSerializer.parse_atom(text)


def signed_atoms(arity, max_dim):
    factors = [FactorAtom(d, s) for d in range(max_dim + 1) for s in (Sign.MINUS, Sign.PLUS)]
    return [ProductAtom(fs) for fs in product(factors, repeat=arity)]


def condition1_subcomplexes(signature, atoms, sizes=None):
    """Every subcomplex whose maximal atoms come from `atoms` and have pairwise incomparable dims.

    `sizes` limits the number of maximal atoms.
    """
    by_dims = {}
    for a in atoms:
        by_dims.setdefault(a.dims, []).append(a)
    vectors = sorted(by_dims)
    largest = max(sizes) if sizes else len(vectors)

    def dims_antichains(start, chosen):
        if chosen and (sizes is None or len(chosen) in sizes):
            yield chosen
        if len(chosen) == largest:
            return
        for n in range(start, len(vectors)):
            v = vectors[n]
            if all(not dims_leq(v, w) and not dims_leq(w, v) for w in chosen):
                yield from dims_antichains(n + 1, chosen + [v])

    for dims in dims_antichains(0, []):
        for picked in product(*(by_dims[v] for v in dims)):
            yield normalize(signature, picked)


@pytest.fixture
def pairwise():
    return sub(PAIRWISE_EXAMPLE, TRIPLE)


@pytest.fixture
def engine(tmp_path):
    engine = create_engine(f"sqlite:///{tmp_path / 'catalogs.db'}")
    init_orm(engine)
    return engine


@pytest.fixture
def container(engine, tmp_path):
    container = Container()
    container.catalogs_repository.override(providers.Factory(CatalogsRepository, engine=engine))
    container.catalog_files_repository.override(
        providers.Factory("app.repositories.catalog_files.CatalogFilesRepository", directory=str(tmp_path))
    )
    return container

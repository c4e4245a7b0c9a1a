from fastapi import APIRouter, HTTPException
from typing import List, Optional
from pydantic import BaseModel

from app.domain.catalog import Catalog
from app.domain.errors import MoleculeError
from app.repositories.catalogs import CatalogsRepository
from app.services.molecule_serializers import MoleculeSerializer
from app.services.oracle import OracleService
from app.services.triple_enumeration import EnumerationService


class EnumerateRequest(BaseModel):
    name: str
    caps: List[int]
    twists: List[int] = []
    source: str = "construction"  # or "oracle"
    mode: str = "capped"


class CatalogResponse(BaseModel):
    name: Optional[str] = None
    signature: str
    mode: str
    count: int
    entries: List[str] = []


class CatalogsRouter:
    """Router for stored molecule catalogs."""

    def __init__(
        self,
        catalogs_repo: CatalogsRepository,
        enumeration_service: EnumerationService,
        oracle_service: OracleService,
        serializer: MoleculeSerializer,
    ):
        """
        Initialize router with dependencies.

        Args:
            catalogs_repo: Repository storing catalogs by name
            enumeration_service: Level-by-level construction for three factors
            oracle_service: Brute-force closure on finite products
            serializer: Formatter for catalog entries
        """
        self.catalogs_repo = catalogs_repo
        self.enumeration_service = enumeration_service
        self.oracle_service = oracle_service
        self.serializer = serializer
        self.router = APIRouter(prefix="/catalogs", tags=["Catalogs"])
        self._register_routes()

    def _register_routes(self):
        """Register all routes with the router."""
        self.router.add_api_route("/", self.list_catalogs, methods=["GET"], response_model=List[str])
        self.router.add_api_route("/enumerate", self.enumerate, methods=["POST"], response_model=CatalogResponse)
        self.router.add_api_route("/{name}", self.get_catalog, methods=["GET"], response_model=CatalogResponse)
        self.router.add_api_route("/{name}", self.delete_catalog, methods=["DELETE"])

    def _response(self, catalog: Catalog) -> CatalogResponse:
        return CatalogResponse(
            name=catalog.name,
            signature=self.serializer.format_signature(catalog.signature),
            mode=catalog.mode,
            count=len(catalog.entries),
            entries=self.serializer.format_lines(catalog.entries),
        )

    async def list_catalogs(self) -> List[str]:
        return self.catalogs_repo.list_catalogs()

    async def enumerate(self, request: EnumerateRequest) -> CatalogResponse:
        """
        Build a catalog and store it under the requested name.

        Returns:
            The stored catalog with its entries
        """
        try:
            if request.source == "oracle":
                catalog = self.oracle_service.enumerate(request.caps, request.twists)
            elif request.source == "construction":
                if any(request.twists):
                    raise HTTPException(status_code=400, detail="the construction enumerates untwisted products only")
                catalog = self.enumeration_service.enumerate3(request.caps, mode=request.mode)
            else:
                raise HTTPException(status_code=400, detail=f"unknown source {request.source!r}")
        except MoleculeError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        stored = self.catalogs_repo.save_catalog(request.name, catalog)
        return self._response(stored)

    async def get_catalog(self, name: str) -> CatalogResponse:
        catalog = self.catalogs_repo.get_catalog(name)
        if catalog is None:
            raise HTTPException(status_code=404, detail=f"No catalog named {name}")
        return self._response(catalog)

    async def delete_catalog(self, name: str):
        if not self.catalogs_repo.delete_catalog(name):
            raise HTTPException(status_code=404, detail=f"No catalog named {name}")
        return {"deleted": name}


# Factory function to create router with dependencies from container
def create_catalogs_router(container) -> APIRouter:
    """Create and configure the catalogs router with dependencies from container."""
    catalogs_router = CatalogsRouter(
        catalogs_repo=container.catalogs_repository(),
        enumeration_service=container.enumeration_service(),
        oracle_service=container.oracle_service(),
        serializer=container.molecule_serializer(),
    )
    return catalogs_router.router


# Note: router is now initialized in main.py with container
router = None

from fastapi import APIRouter, HTTPException
from typing import List, Optional
from pydantic import BaseModel

from app.domain.atom import Sign, Signature
from app.domain.errors import MoleculeError, NotAMoleculeError
from app.domain.expr import leaves
from app.domain.verdict import Verdict
from app.services.molecule_serializers import MoleculeSerializer
from app.services.molecule_service import MoleculeService


class SignatureFields(BaseModel):
    factors: int
    twists: List[int] = []
    caps: Optional[List[int]] = None

    def signature(self) -> Signature:
        return Signature(self.factors, tuple(self.twists), tuple(self.caps) if self.caps is not None else None)


class CheckRequest(SignatureFields):
    subcomplex: str
    explicit: bool = False


class BoundaryRequest(SignatureFields):
    subcomplex: str
    p: int
    sign: str = "-"


class ComposeRequest(SignatureFields):
    left: str
    right: str
    p: int


class DecomposeRequest(SignatureFields):
    subcomplex: str


class ProjectRequest(SignatureFields):
    subcomplex: str
    axis: int  # 1-based factor number
    level: int


class VerdictResponse(BaseModel):
    molecule: bool
    verdict: str
    reason: Optional[str] = None
    axis: Optional[int] = None
    level: Optional[int] = None
    detail: Optional[str] = None
    witnesses: List[str] = []


class SubcomplexResponse(BaseModel):
    signature: str
    subcomplex: str


class ExprResponse(BaseModel):
    expr: str
    leaves: int


def _verdict_response(verdict: Verdict) -> VerdictResponse:
    return VerdictResponse(
        molecule=verdict.ok,
        verdict=verdict.describe(),
        reason=verdict.reason,
        axis=None if verdict.axis is None else verdict.axis + 1,
        level=verdict.level,
        detail=verdict.detail,
        witnesses=[str(a) for a in verdict.witnesses],
    )


def _http_error(exc: MoleculeError) -> HTTPException:
    if isinstance(exc, NotAMoleculeError):
        return HTTPException(status_code=422, detail=str(exc))
    return HTTPException(status_code=400, detail=str(exc))


class MoleculesRouter:
    """Router for molecule checks and operations."""

    def __init__(self, molecule_service: MoleculeService, serializer: MoleculeSerializer):
        """
        Initialize router with dependencies.

        Args:
            molecule_service: Facade over the per-arity molecule algorithms
            serializer: Parser and formatter for subcomplex literals
        """
        self.molecule_service = molecule_service
        self.serializer = serializer
        self.router = APIRouter(prefix="/molecules", tags=["Molecules"])
        self._register_routes()

    def _register_routes(self):
        """Register all routes with the router."""
        self.router.add_api_route("/check", self.check, methods=["POST"], response_model=VerdictResponse)
        self.router.add_api_route("/boundary", self.boundary, methods=["POST"], response_model=SubcomplexResponse)
        self.router.add_api_route("/compose", self.compose, methods=["POST"], response_model=SubcomplexResponse)
        self.router.add_api_route("/decompose", self.decompose, methods=["POST"], response_model=ExprResponse)
        self.router.add_api_route("/project", self.project, methods=["POST"], response_model=SubcomplexResponse)

    def _subcomplex_response(self, x) -> SubcomplexResponse:
        return SubcomplexResponse(
            signature=self.serializer.format_signature(x.signature),
            subcomplex=self.serializer.format_subcomplex(x),
        )

    async def check(self, request: CheckRequest) -> VerdictResponse:
        """Molecule verdict, naming the violated condition when negative."""
        try:
            x = self.serializer.parse_subcomplex(request.subcomplex, request.signature())
            verdict = self.molecule_service.check(x, explicit=request.explicit)
        except MoleculeError as exc:
            raise _http_error(exc)
        return _verdict_response(verdict)

    async def boundary(self, request: BoundaryRequest) -> SubcomplexResponse:
        """d_p^- (sign "-") or d_p^+ (sign "+") of a molecule."""
        try:
            gamma = Sign.from_symbol(request.sign)
            x = self.serializer.parse_subcomplex(request.subcomplex, request.signature())
            result = self.molecule_service.boundary(x, request.p, gamma)
        except MoleculeError as exc:
            raise _http_error(exc)
        return self._subcomplex_response(result)

    async def compose(self, request: ComposeRequest) -> SubcomplexResponse:
        try:
            signature = request.signature()
            left = self.serializer.parse_subcomplex(request.left, signature)
            right = self.serializer.parse_subcomplex(request.right, signature)
            result = self.molecule_service.compose(left, request.p, right)
        except MoleculeError as exc:
            raise _http_error(exc)
        return self._subcomplex_response(result)

    async def decompose(self, request: DecomposeRequest) -> ExprResponse:
        try:
            x = self.serializer.parse_subcomplex(request.subcomplex, request.signature())
            expr = self.molecule_service.decompose(x)
        except MoleculeError as exc:
            raise _http_error(exc)
        return ExprResponse(expr=self.serializer.format_expr(expr), leaves=len(leaves(expr)))

    async def project(self, request: ProjectRequest) -> SubcomplexResponse:
        try:
            x = self.serializer.parse_subcomplex(request.subcomplex, request.signature())
            result = self.molecule_service.project(x, request.axis - 1, request.level)
        except MoleculeError as exc:
            raise _http_error(exc)
        return self._subcomplex_response(result)


# Factory function to create router with dependencies from container
def create_molecules_router(container) -> APIRouter:
    """Create and configure the molecules router with dependencies from container."""
    molecules_router = MoleculesRouter(
        molecule_service=container.molecule_service(),
        serializer=container.molecule_serializer(),
    )
    return molecules_router.router


# Note: router is now initialized in main.py with container
router = None

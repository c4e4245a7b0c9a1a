import logging

from fastapi import FastAPI

from app import config
from app.container import Container
from app.db.engine import init_orm
from app.routers import catalogs, molecules

logging.basicConfig(level=config.LOG_LEVEL)


def create_app(container: Container) -> FastAPI:
    # Initialize routers with dependencies from container
    molecules.router = molecules.create_molecules_router(container)
    catalogs.router = catalogs.create_catalogs_router(container)
    init_orm(container.catalogs_repository().engine)

    app = FastAPI(
        title="Molecules API",
        description="API for checking, composing and enumerating molecules in products of globes",
        version="1.0.0"
    )

    # Include routers
    app.include_router(molecules.router)
    app.include_router(catalogs.router)

    @app.get("/")
    async def root():
        return {
            "message": "Molecules API",
            "endpoints": {
                "check": "/molecules/check",
                "compose": "/molecules/compose",
                "enumerate": "/catalogs/enumerate",
                "docs": "/docs"
            }
        }

    @app.get("/health")
    async def health_check():
        return {"status": "healthy"}

    return app


# Initialize dependency injection container
container = Container()
app = create_app(container)

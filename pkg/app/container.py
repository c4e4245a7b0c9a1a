"""Dependency injection container for the application."""
from dependency_injector import containers, providers


class Container(containers.DeclarativeContainer):
	"""Dependency injection container for the application."""
	
	# Configuration
	config = providers.Configuration()
	
	# Repositories - Factory creates new instance per request
	catalogs_repository = providers.Factory(
		"app.repositories.catalogs.CatalogsRepository"
	)
	catalog_files_repository = providers.Factory(
		"app.repositories.catalog_files.CatalogFilesRepository"
	)
	
	# Services - stateless, or caching per-signature cell complexes
	molecule_serializer = providers.Singleton(
		"app.services.molecule_serializers.MoleculeSerializer"
	)
	
	molecule_service = providers.Singleton(
		"app.services.molecule_service.MoleculeService"
	)
	
	oracle_service = providers.Singleton(
		"app.services.oracle.OracleService"
	)
	
	enumeration_service = providers.Singleton(
		"app.services.triple_enumeration.EnumerationService"
	)

import logging
from typing import List, Optional

from sqlalchemy import select
from sqlalchemy.orm import Session

from app.db.engine import make_engine
from app.db.models import CatalogEntryRecord, CatalogRecord
from app.domain.catalog import Catalog
from app.services.molecule_serializers import MoleculeSerializer

logger = logging.getLogger(__name__)


class CatalogsRepository:
    def __init__(self, engine=None):
        self.engine = engine or make_engine()

    def get_session(self) -> Session:
        return Session(self.engine)

    def _find(self, session: Session, name: str) -> Optional[CatalogRecord]:
        q = select(CatalogRecord).where(CatalogRecord.name == name)
        return session.execute(q).scalars().first()

    def save_catalog(self, name: str, catalog: Catalog) -> Catalog:
        """Store a catalog under `name`, replacing any catalog of that name.

        Args:
            name: unique catalog name
            catalog: the catalog to store

        Returns:
            The stored catalog, named
        """
        lines = sorted(MoleculeSerializer.format_lines(catalog.entries))
        with self.get_session() as session:
            existing = self._find(session, name)
            if existing:
                session.delete(existing)
                session.flush()
            record = CatalogRecord(
                name=name,
                signature=MoleculeSerializer.format_signature(catalog.signature),
                mode=catalog.mode,
                count=len(lines),
            )
            record.entries = [
                CatalogEntryRecord(position=position, text=text)
                for position, text in enumerate(lines)
            ]
            session.add(record)
            session.commit()
        logger.info("saved catalog %s with %d entries", name, len(lines))
        return Catalog(catalog.signature, sorted(catalog.entries, key=str), mode=catalog.mode, name=name)

    def get_catalog(self, name: str) -> Optional[Catalog]:
        with self.get_session() as session:
            record = self._find(session, name)
            if not record:
                return None
            signature = MoleculeSerializer.signature_from_text(record.signature)
            entries = [MoleculeSerializer.parse_subcomplex(e.text, signature) for e in record.entries]
            return Catalog(signature, entries, mode=record.mode, name=record.name)

    def list_catalogs(self) -> List[str]:
        with self.get_session() as session:
            q = select(CatalogRecord.name).order_by(CatalogRecord.name)
            return list(session.execute(q).scalars().all())

    def delete_catalog(self, name: str) -> bool:
        with self.get_session() as session:
            record = self._find(session, name)
            if not record:
                return False
            session.delete(record)
            session.commit()
            return True

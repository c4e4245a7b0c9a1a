from __future__ import annotations

from sqlalchemy import Column, DateTime, ForeignKey, Integer, Text, func
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class CatalogRecord(Base):
    __tablename__ = "catalogs"

    catalog_id = Column(Integer, primary_key=True)
    name = Column(Text, unique=True, nullable=False)
    signature = Column(Text, nullable=False)  # e.g. 'factors=3 twists=0,0,0 caps=1,1,1'
    mode = Column(Text, nullable=False)
    count = Column(Integer, nullable=False)
    created_at = Column(DateTime(timezone=True), server_default=func.now(), nullable=False)

    entries = relationship(
        "CatalogEntryRecord",
        back_populates="catalog",
        cascade="all, delete-orphan",
        order_by="CatalogEntryRecord.position",
    )


class CatalogEntryRecord(Base):
    __tablename__ = "catalog_entries"

    entry_id = Column(Integer, primary_key=True)
    catalog_id = Column(Integer, ForeignKey("catalogs.catalog_id", ondelete="CASCADE"), nullable=False)
    position = Column(Integer, nullable=False)
    text = Column(Text, nullable=False)  # canonical serialization of one subcomplex

    catalog = relationship("CatalogRecord", back_populates="entries")

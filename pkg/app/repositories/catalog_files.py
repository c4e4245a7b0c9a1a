"""Catalog text files.

    # signature: factors=3 twists=0,0,0 caps=1,1,1
    # mode: capped
    # count: 57
    (0-,0-,0-)
    ...

Comment lines start with '#'; every other line is one canonical subcomplex,
and the lines are sorted and distinct.
"""
import logging
import os
from typing import List, Optional

from app import config
from app.domain.catalog import Catalog
from app.domain.errors import CatalogFormatError, MoleculeError
from app.services.molecule_serializers import MoleculeSerializer

logger = logging.getLogger(__name__)


class CatalogFilesRepository:
    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or config.CATALOG_DIR

    def path_for(self, name: str) -> str:
        return os.path.join(self.directory, f"{name}.txt")

    @staticmethod
    def dumps(catalog: Catalog) -> str:
        lines = [
            f"# signature: {MoleculeSerializer.format_signature(catalog.signature)}",
            f"# mode: {catalog.mode}",
            f"# count: {len(catalog.entries)}",
        ]
        lines.extend(sorted(MoleculeSerializer.format_lines(catalog.entries)))
        return "\n".join(lines) + "\n"

    @staticmethod
    def loads(text: str, name: Optional[str] = None) -> Catalog:
        headers = {}
        body: List[str] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].partition(":")
                if sep:
                    headers[key.strip()] = value.strip()
                continue
            body.append(line)

        if "signature" not in headers:
            raise CatalogFormatError("catalog has no '# signature:' header")
        if "count" not in headers:
            raise CatalogFormatError("catalog has no '# count:' header")
        try:
            count = int(headers["count"])
        except ValueError as exc:
            raise CatalogFormatError(f"bad count header {headers['count']!r}") from exc
        if count != len(body):
            raise CatalogFormatError(f"count header says {count} but the catalog has {len(body)} entries")
        for prev, cur in zip(body, body[1:]):
            if not prev < cur:
                raise CatalogFormatError(f"catalog is not sorted: {prev!r} before {cur!r}")

        try:
            signature = MoleculeSerializer.signature_from_text(headers["signature"])
            entries = [MoleculeSerializer.parse_subcomplex(line, signature) for line in body]
        except MoleculeError as exc:
            raise CatalogFormatError(f"bad catalog entry: {exc}") from exc
        for line, entry in zip(body, entries):
            if MoleculeSerializer.format_subcomplex(entry) != line:
                raise CatalogFormatError(f"entry {line!r} is not in canonical form")
        return Catalog(signature, entries, mode=headers.get("mode", "capped"), name=name)

    def write(self, catalog: Catalog, path: Optional[str] = None) -> str:
        path = path or self.path_for(catalog.name or "catalog")
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.dumps(catalog))
        logger.info("wrote %d entries to %s", len(catalog.entries), path)
        return path

    def read(self, path: str) -> Catalog:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
        name = os.path.splitext(os.path.basename(path))[0]
        return self.loads(text, name=name)

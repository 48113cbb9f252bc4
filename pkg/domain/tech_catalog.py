"""
Catalog of PON standards: builtin set, CSV loader and serializer
"""

import csv
import io
import logging
from pathlib import Path
from typing import Dict, List, Optional

from domain.errors import CatalogParseError
from domain.models import Catalog, PonTechnology
from utils.constants import CATALOG_COMMENT_PREFIX, CATALOG_HEADER, LOG_MESSAGES, NG_PON2_NOTE
from utils.helpers import ValidationHelper

logger = logging.getLogger(__name__)


def builtin_catalog() -> Catalog:
    """PON standards with the capacity lines used for planning"""
    return Catalog((
        PonTechnology("GPON", 1_250, 2_488, 128, 2003),
        PonTechnology("XG-PON", 2_500, 10_000, 256, 2012),
        PonTechnology("XGS-PON", 10_000, 10_000, 256, 2016),
        PonTechnology("10G-EPON", 10_000, 10_000, 256, 2009),
        PonTechnology("25G-PON", 25_000, 25_000, 256, 2021),
        PonTechnology("NG-PON2", 40_000, 40_000, 256, 2014, note=NG_PON2_NOTE),
        PonTechnology("100G-EPON", 100_000, 100_000, 256, 2020, note="4 carriers at 25G"),
    ))


def _parse_number(raw: str, line: int, column: str, cast):
    try:
        return cast(raw.strip())
    except ValueError:
        raise CatalogParseError(f"'{raw}' is not a valid {cast.__name__}", line, column) from None


def load_catalog(text: str) -> Catalog:
    """Parse catalog CSV text, validating every technology"""
    header_line = None
    technologies: List[PonTechnology] = []
    seen: Dict[str, int] = {}

    for number, raw_line in enumerate(text.splitlines(), 1):
        stripped = raw_line.strip()
        if not stripped or stripped.startswith(CATALOG_COMMENT_PREFIX):
            continue

        fields = [field.strip() for field in next(csv.reader([raw_line]))]

        if header_line is None:
            missing = [column for column in CATALOG_HEADER if column not in fields]
            if missing:
                raise CatalogParseError("missing header column", number, missing[0])
            if fields != CATALOG_HEADER:
                raise CatalogParseError(f"header must be exactly '{','.join(CATALOG_HEADER)}'", number)
            header_line = number
            continue

        if len(fields) != len(CATALOG_HEADER):
            raise CatalogParseError(f"expected {len(CATALOG_HEADER)} fields, got {len(fields)}", number)

        name = fields[0]
        if not name:
            raise CatalogParseError("technology name is empty", number, "name")
        if name.lower() in seen:
            raise CatalogParseError(f"duplicate name '{name}' (first on line {seen[name.lower()]})",
                                    number, "name")

        upstream = _parse_number(fields[1], number, "upstream_mbps", float)
        downstream = _parse_number(fields[2], number, "downstream_mbps", float)
        max_split = _parse_number(fields[3], number, "max_split", int)
        ratified = _parse_number(fields[4], number, "ratified", int)

        if not upstream > 0:
            raise CatalogParseError("capacity must be > 0", number, "upstream_mbps")
        if not downstream > 0:
            raise CatalogParseError("capacity must be > 0", number, "downstream_mbps")
        if not ValidationHelper.validate_standard_split(max_split):
            raise CatalogParseError("split must be a power of two >= 4", number, "max_split")

        seen[name.lower()] = number
        technologies.append(PonTechnology(name, upstream, downstream, max_split, ratified))

    if header_line is None:
        raise CatalogParseError("missing header", 1)
    if not technologies:
        raise CatalogParseError("catalog has no technologies", header_line)

    return Catalog(tuple(technologies))


def _format_capacity(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def serialize_catalog(catalog: Catalog) -> str:
    """Catalog as CSV text readable by load_catalog"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CATALOG_HEADER)
    for tech in catalog:
        writer.writerow([tech.name, _format_capacity(tech.upstream_mbps),
                         _format_capacity(tech.downstream_mbps), tech.max_standard_split, tech.ratified])
    return buffer.getvalue()


def merge_catalogs(base: Catalog, extra: Catalog) -> Catalog:
    """Replace same-named entries of base with those of extra, append the rest"""
    overrides = {tech.name.lower(): tech for tech in extra}
    merged = []
    for tech in base:
        replacement = overrides.pop(tech.name.lower(), None)
        if replacement is not None:
            logger.warning(LOG_MESSAGES["catalog_override"].format(name=tech.name))
        merged.append(replacement or tech)
    merged.extend(tech for tech in extra if tech.name.lower() in overrides)
    return Catalog(tuple(merged))


class CatalogManager:
    """Holds the active catalog: builtin, extended or replaced by a catalog file"""

    def __init__(self, catalog_file: Optional[str] = None, replace: bool = False):
        self.catalog = builtin_catalog()
        if catalog_file:
            self.load_file(catalog_file, replace=replace)

    def load_file(self, path: str, replace: bool = False) -> Catalog:
        """Load a catalog file into the active catalog"""
        loaded = load_catalog(Path(path).read_text(encoding="utf-8"))
        logger.info(LOG_MESSAGES["catalog_loaded"].format(count=len(loaded), source=path))
        self.catalog = loaded if replace else merge_catalogs(self.catalog, loaded)
        return self.catalog

    def get(self, name: str) -> PonTechnology:
        """Look up a technology in the active catalog"""
        return self.catalog.get(name)

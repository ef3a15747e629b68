"""Dimension and semisimple-dimension tables as text, CSV or JSON"""
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from modules.adic import simple_dim_tl
from modules.diagram import FamilyId
from modules.errors import UnsupportedError, ValidationError
from modules.families import SHORT_NAMES, SYMMETRIC_TYPE, widths
from modules.linalg import FieldSpec, rank
from modules.representations import diagram_gram_matrix, ssdim

logger = logging.getLogger('cellgap')

SCHEMA_VERSION = 1
CSV_COLUMNS = ('family', 'n', 'k', 'char', 'dim', 'ssdim', 'source')
FORMATS = ('text', 'csv', 'json')


@dataclass(frozen=True)
class TableRow:
    family: str
    n: int
    k: int
    char: int
    dim: Optional[int]
    ssdim: int
    source: str  # table-formula, gram-rank or bound


@dataclass(frozen=True)
class Table:
    kind: str  # dims or ssdims
    family: FamilyId
    char: int
    rows: Tuple[TableRow, ...]

    def value(self, row: TableRow) -> Optional[int]:
        return row.dim if self.kind == 'dims' else row.ssdim

    def row_values(self, n: int) -> Dict[int, Optional[int]]:
        return {r.k: self.value(r) for r in self.rows if r.n == n}

    def tuple_for(self, n: int) -> Tuple[Optional[int], ...]:
        values = self.row_values(n)
        return tuple(values[k] for k in sorted(values))


def _dim_entry(family: FamilyId, n: int, k: int, char: int) -> TableRow:
    p = None if char == 0 else char
    name = SHORT_NAMES[family]
    if family == FamilyId.TL:
        return TableRow(name, n, k, char, simple_dim_tl(n, k, p), ssdim(family, n, k), 'table-formula')
    if family == FamilyId.PLANAR_ROOK:
        return TableRow(name, n, k, char, comb(n, k), comb(n, k), 'table-formula')
    dim = rank(diagram_gram_matrix(family, n, k, FieldSpec(char)))
    return TableRow(name, n, k, char, dim, ssdim(family, n, k), 'gram-rank')


def _ssdim_entry(family: FamilyId, n: int, k: int, char: int) -> TableRow:
    return TableRow(SHORT_NAMES[family], n, k, char, None, ssdim(family, n, k), 'table-formula')


def _entry(args: Tuple[str, FamilyId, int, int, int]) -> TableRow:
    kind, family, n, k, char = args
    return _dim_entry(family, n, k, char) if kind == 'dims' else _ssdim_entry(family, n, k, char)


def _build(kind: str, family: FamilyId, n_max: int, char: int, threads: int) -> Table:
    if n_max < 0:
        raise ValidationError(f"Need n >= 0, got {n_max}")
    FieldSpec(char)
    jobs = [(kind, family, n, k, char) for n in range(n_max + 1) for k in widths(family, n)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            rows = list(executor.map(_entry, jobs, chunksize=8))
    else:
        rows = [_entry(job) for job in jobs]
    logger.debug(f"{kind} table for {SHORT_NAMES[family]} up to n={n_max}: {len(rows)} entries")
    return Table(kind, family, char, tuple(rows))


def dims_table(family: FamilyId, n_max: int, char: int = 0, threads: int = 1) -> Table:
    """
    Simple dimensions for n <= n_max. TL uses the adic formula, planar rook
    its binomials, the other planar families Gram ranks.
    """
    if family in SYMMETRIC_TYPE:
        raise UnsupportedError(f"Simple dimensions of {SHORT_NAMES[family]} need the head of "
                               f"modules induced from symmetric groups, which is not computed; use ssdims")
    return _build('dims', family, n_max, char, threads)


def ssdims_table(family: FamilyId, n_max: int, char: int = 0, threads: int = 1) -> Table:
    return _build('ssdims', family, n_max, char, threads)


# --- rendering -------------------------------------------------------------

def _cell(value: Optional[int]) -> str:
    return '-' if value is None else str(value)


def to_text(table: Table) -> str:
    """Triangular layout: one line per n, one column per k."""
    n_values = sorted({r.n for r in table.rows})
    k_values = sorted({r.k for r in table.rows})
    width = max([len(_cell(table.value(r))) for r in table.rows] + [len(str(k)) for k in k_values] + [3])
    head = "n\\k".rjust(4) + "".join(str(k).rjust(width + 1) for k in k_values)
    lines = [f"{table.kind} of {table.family.value}, char {table.char}", head]
    for n in n_values:
        values = table.row_values(n)
        cells = "".join((_cell(values[k]) if k in values else '').rjust(width + 1) for k in k_values)
        lines.append(str(n).rjust(4) + cells)
    return "\n".join(lines) + "\n"


def to_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for r in table.rows:
        writer.writerow([r.family, r.n, r.k, r.char, '' if r.dim is None else r.dim, r.ssdim, r.source])
    return buffer.getvalue()


def to_json(table: Table) -> str:
    payload = {
        'schema_version': SCHEMA_VERSION,
        'kind': table.kind,
        'family': table.family.value,
        'char': table.char,
        'rows': [asdict(r) for r in table.rows],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render(table: Table, fmt: str = 'text') -> str:
    if fmt not in FORMATS:
        raise ValidationError(f"Unknown format {fmt}; expected one of {', '.join(FORMATS)}")
    return {'text': to_text, 'csv': to_csv, 'json': to_json}[fmt](table)


def render_records(records: List[Dict], fmt: str = 'text', columns: Optional[List[str]] = None) -> str:
    """Generic list-of-dicts output for the CLI verbs that are not dimension tables."""
    if fmt not in FORMATS:
        raise ValidationError(f"Unknown format {fmt}; expected one of {', '.join(FORMATS)}")
    columns = columns or (list(records[0].keys()) if records else [])
    if fmt == 'json':
        return json.dumps({'schema_version': SCHEMA_VERSION, 'rows': records}, indent=2, sort_keys=True,
                          default=str) + "\n"
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n', extrasaction='ignore')
        writer.writeheader()
        for record in records:
            writer.writerow(record)
        return buffer.getvalue()
    return "".join("  ".join(f"{c}={record.get(c)}" for c in columns) + "\n" for record in records)

"""Representation gaps, semisimple gaps and faithfulness: exact values and bounds

Every number leaves this module wrapped in an Evidence that records whether it
is exact, a lower bound, a heuristic or unknown, and which result it rests on.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from math import comb, gcd
from typing import Any, Dict, List, Optional

from sympy import Integer, Rational, binomial, factorint, floor, integer_nthroot, isprime, log, primefactors, sqrt, sympify

from modules.adic import cell_module_dim, simple_dim_tl
from modules.cells import CellStructure, cl, green_cells, linear_character_count
from modules.diagram import FamilyId
from modules.errors import UnsupportedError, ValidationError
from modules.extensions import ExtCase, ext_dim
from modules.families import (SHORT_NAMES, SYMMETRIC_TYPE, FamilyInstance, cardinality, family_monoid,
                              cyclic_monoid, family_truncation, j_class_size, widths)
from modules.linalg import FieldSpec
from modules.monoid import FiniteMonoid
from modules.provenance import Evidence, Status
from modules.representations import gram_rank_dim, ssdim
from modules.settings import Settings

logger = logging.getLogger('cellgap')

settings = Settings()


@dataclass(frozen=True)
class GapReport:
    description: str
    field: FieldSpec
    size: Optional[int]
    gap: Evidence
    ssgap: Evidence
    faith: Evidence
    extras: Dict[str, Evidence] = dc_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out = {
            'monoid': self.description,
            'field': str(self.field),
            'size': self.size,
            'gap': self.gap.to_dict(),
            'ssgap': self.ssgap.to_dict(),
            'faith': self.faith.to_dict(),
        }
        if self.extras:
            out['extras'] = {key: value.to_dict() for key, value in self.extras.items()}
        if self.size:
            out['ratios'] = ratios(self, self.size).to_dict()
        return out


@dataclass(frozen=True)
class Ratios:
    gratio: Evidence
    fratio: Evidence
    ssratio: Evidence

    def to_dict(self) -> Dict[str, Any]:
        return {'gratio': self.gratio.to_dict(), 'fratio': self.fratio.to_dict(), 'ssratio': self.ssratio.to_dict()}


def ratios(report: GapReport, size: int) -> Ratios:
    """Each value divided by sqrt(|M|), keeping the status of the value."""
    if size < 1:
        raise ValidationError(f"Monoid size must be positive, got {size}")
    root = sqrt(Integer(size))

    def scale(e: Evidence) -> Evidence:
        if not e.known:
            return e
        return Evidence(sympify(e.value) / root, e.status, e.source)

    return Ratios(scale(report.gap), scale(report.faith), scale(report.ssgap))


def _min_or_none(values: List[int]) -> Optional[int]:
    return min(values) if values else None


# --- exact gaps ------------------------------------------------------------

def burnside_brauer_bound(monoid: FiniteMonoid, cells: Optional[CellStructure] = None) -> Evidence:
    """
    ceil(dmax^(1/(cl(M) - 1))) for the largest simple dimension dmax. With
    trivial H-cells dmax is the largest Gram rank over Q; otherwise the
    largest |L|/|H| stands in for it and the bound is only heuristic.
    """
    cells = cells or green_cells(monoid)
    classes = cl(monoid, cells)
    if classes <= 1:
        return Evidence.unknown()
    js = cells.idempotent_js
    if all(cells.h_size(j) == 1 for j in js):
        dmax = max(gram_rank_dim(monoid, j, FieldSpec(0), cells) for j in js)
        source = 'burnside-brauer'
    else:
        dmax = max(len(cells.r_classes_in(j)) for j in js)
        source = 'burnside-brauer-proxy'
    root, exact = integer_nthroot(dmax, classes - 1)
    value = int(root) if exact else int(root) + 1
    logger.debug(f"{monoid.name}: cl = {classes}, dmax = {dmax}, bound {value}")
    return Evidence.of(value, source)


def nontrivial_simple_dims(monoid: FiniteMonoid, field: FieldSpec,
                           cells: Optional[CellStructure] = None) -> Dict[int, int]:
    """Gram-rank dimensions of the simples that are not 1_b or 1_t, keyed by apex."""
    cells = cells or green_cells(monoid)
    for j in cells.idempotent_js:
        if cells.h_size(j) != 1:
            raise UnsupportedError(f"{monoid.name}: J-class {j} has |H| = {cells.h_size(j)}")
    trivial = {cells.bottom_j, cells.top_j}
    out = {}
    for j in cells.idempotent_js:
        d = gram_rank_dim(monoid, j, field, cells)
        if j in trivial and d == 1:
            continue
        out[j] = d
    return out


def _cell_ssgap(cells: CellStructure) -> Evidence:
    """
    Smallest nontrivial simple in the semisimple setting: #R-classes of an
    idempotent J-cell, where the bottom and top cells only count when their
    group H(e) has a nontrivial one-dimensional representation.
    """
    ends = {cells.bottom_j, cells.top_j}
    values = [len(cells.r_classes_in(j)) for j in cells.idempotent_js if j not in ends]
    for j in ends:
        group = cells.group_of(cells.idempotent_in(j))
        if group.size == 1:
            continue
        if linear_character_count(group) == 1:
            logger.info(f"{group.name} is perfect; its smallest nontrivial simple is not computed")
            return Evidence.unknown()
        values.append(len(cells.r_classes_in(j)))
    return Evidence.of(_min_or_none(values), 'cell-size')


def gap_exact(monoid: FiniteMonoid, field: FieldSpec = FieldSpec(0),
              cells: Optional[CellStructure] = None) -> GapReport:
    """
    Smallest dimension of a representation that is not a sum of trivial
    ones. With trivial H-cells this is the smallest nontrivial simple
    dimension, capped at 2 when some extension between trivial
    representations does not split. Value None means no such representation.
    """
    if monoid.size == 1:
        zero = Evidence.of(0, 'gram-rank')
        return GapReport(monoid.name, field, 1, zero, zero, zero)
    cells = cells or green_cells(monoid)
    faith = burnside_brauer_bound(monoid, cells)
    ssgap = _cell_ssgap(cells)
    try:
        dims = nontrivial_simple_dims(monoid, field, cells)
    except UnsupportedError as e:
        logger.info(f"No exact gap for {monoid.name}: {e}")
        return GapReport(monoid.name, field, monoid.size, Evidence.unknown(), ssgap, faith)

    gap = _min_or_none(list(dims.values()))
    source = 'gram-rank'
    if gap is None or gap > 2:
        for case in ExtCase:
            if ext_dim(monoid, field, case, cells) > 0:
                logger.debug(f"{monoid.name}: Ext^1 {case.value} does not vanish over {field}")
                gap, source = 2, 'ext-vanishing'
                break
    return GapReport(monoid.name, field, monoid.size, Evidence.of(gap, source), ssgap, faith)


def _surviving_widths(family: FamilyId, n: int, max_width: Optional[int], min_width: Optional[int]) -> List[int]:
    hi = n if max_width is None else max_width
    lo = 0 if min_width is None else min_width
    return [w for w in widths(family, n) if lo <= w <= hi]


def _truncated_size(fi: FamilyInstance, survivors: List[int], max_width: Optional[int],
                    min_width: Optional[int]) -> int:
    if max_width is None and min_width is None:
        return cardinality(fi)
    adjoined = (max_width is not None) + (min_width is not None)
    return sum(j_class_size(fi.family, fi.n, w) for w in survivors) + adjoined


def family_gap(fi: FamilyInstance, field: FieldSpec = FieldSpec(0), max_width: Optional[int] = None,
               min_width: Optional[int] = None) -> GapReport:
    """
    Gap of a family or one of its truncations. TL (n > 4, at least three
    strands kept) and planar rook use their closed forms; everything else
    is computed on the truncated monoid.
    """
    n, family = fi.n, fi.family
    if max_width is not None and max_width >= n:
        raise ValidationError(f"A truncation must drop the unit cell: need max width < {n}, got {max_width}")
    if min_width is not None and max_width is not None and min_width > max_width:
        raise ValidationError(f"Empty truncation: min width {min_width} above max width {max_width}")
    description = fi.label + ("" if max_width is None else f",<={max_width}") \
        + ("" if min_width is None else f",>={min_width}")
    survivors = _surviving_widths(family, n, max_width, min_width)

    if family == FamilyId.TL and n > 4 and min_width is None and (max_width is None or max_width >= 3):
        kept = [l for l in survivors if l not in (0, 1, n)]
        p = field.adic_prime
        gap = _min_or_none([simple_dim_tl(n, l, p) for l in kept])
        ssgap = _min_or_none([cell_module_dim(n, l) for l in kept])
        size = _truncated_size(fi, survivors, max_width, min_width)
        return GapReport(description, field, size, Evidence.of(gap, 'tl-simple-dims'),
                         Evidence.of(ssgap, 'cell-size'), Evidence.unknown())

    if family == FamilyId.PLANAR_ROOK:
        kept = [w for w in survivors if w not in (0, n)]
        value = _min_or_none([comb(n, w) for w in kept])
        e = Evidence.of(value, 'prook-semisimple')
        return GapReport(description, field, _truncated_size(fi, survivors, max_width, min_width), e, e,
                         Evidence.unknown())

    if max_width is None and min_width is None:
        return gap_exact(family_monoid(fi), field)
    truncation = family_truncation(fi, max_width, min_width)
    report = gap_exact(truncation.result, field)
    return GapReport(description, field, truncation.result.size, report.gap, report.ssgap, report.faith)


# --- bounds ----------------------------------------------------------------

def _tl_faith_bound(n: int):
    even = n - n % 2
    return Rational(6, n + 4) * binomial(n, even // 2 - 1)


def _is_small_k(n: int, k: int) -> bool:
    return n >= 5 and 0 <= k and k * k <= 4 * n


def _is_large_k(n: int, k: int) -> bool:
    return n >= 8 and 4 * n <= k * k and k <= n and (n - k) ** 2 >= n


def tl_bounds(n: int, k: int) -> Dict[str, Any]:
    """Closed-form lower bounds for TL_{n,>=k}: keys gap, ssgap, faith, source."""
    s = sqrt(Integer(n))
    if _is_small_k(n, k):
        gap = 4 / ((n + 2 * s + 2) * (n + 2 * s + 4)) * binomial(n, int(floor(Rational(n, 2) - s)))
        ssgap = Rational(2, 2 * n) * binomial(n, n // 2)
        source = 'tl-small-k'
    elif _is_large_k(n, k):
        lower = int(floor(s / 2))
        gap = 1 / ((n - s / 2 + 1) * (n - s / 2 + 2)) * binomial(n, lower)
        ssgap = (n - s + 1) / (n - s / 2 + 1) * binomial(n, lower)
        source = 'tl-large-k'
    else:
        raise ValidationError(f"No TL bound covers n={n}, k={k}: need n >= 5 with k^2 <= 4n, "
                              f"or n >= 8 with 4n <= k^2 and (n-k)^2 >= n")
    return {'gap': gap, 'ssgap': ssgap, 'faith': _tl_faith_bound(n), 'source': source}


def _prook_bounds(n: int) -> Dict[str, Any]:
    """Planar rook truncation keeping widths l..n-l with l = floor(2 sqrt(n))."""
    l = int(floor(2 * sqrt(Integer(n))))
    if 2 * l > n:
        raise ValidationError(f"Planar rook bound needs 2*floor(2*sqrt(n)) <= n, got n={n}")
    root_n = int(floor(sqrt(Integer(n))))
    root, exact = integer_nthroot(comb(n, n // 2), 2 * root_n + 1)
    faith = int(root) if exact else int(root) + 1
    return {'gap': comb(n, l), 'ssgap': comb(n, l), 'faith': faith, 'l': l}


def _default_k(n: int) -> int:
    return int(floor(2 * sqrt(Integer(n))))


def _cell_extra(family: FamilyId, n: int, k: int) -> Evidence:
    """Smallest |L|/|H| over the cells kept by the truncation, the trivial ones aside."""
    ws = widths(family, n)
    kept = [w for w in ws if w <= k and w not in (ws[0], n)]
    return Evidence.of(_min_or_none([ssdim(family, n, w) for w in kept]), 'cell-size')


def gap_bounds(family: FamilyId, n: int, k: Optional[int] = None, field: FieldSpec = FieldSpec(0)) -> GapReport:
    """
    Lower bounds for the truncation of a family that keeps the cells with at
    most k through strands (k defaults to floor(2 sqrt(n))). Diagram families
    without a bound of their own inherit one through an embedded TL or
    planar rook monoid.
    """
    if family == FamilyId.SYMMETRIC:
        raise UnsupportedError("No gap bounds for symmetric groups")
    if n < 1:
        raise ValidationError(f"Need n >= 1, got {n}")
    k = _default_k(n) if k is None else k
    if not 0 <= k <= n:
        raise ValidationError(f"Need 0 <= k <= n, got k={k}")
    description = f"{SHORT_NAMES[family]}_{n},<={k}"
    char0 = field.char == 0
    extras: Dict[str, Evidence] = {}

    def lower(value, source, status=None) -> Evidence:
        return Evidence.of(value, source, status)

    if family == FamilyId.TL:
        b = tl_bounds(n, k)
        gap = lower(b['gap'], b['source']) if char0 else Evidence.unknown()
        report = GapReport(description, field, None, gap, lower(b['ssgap'], b['source']),
                           lower(b['faith'], b['source']) if char0 else Evidence.unknown())

    elif family == FamilyId.MOTZKIN:
        b = tl_bounds(n - 1, k)
        report = GapReport(description, field, None,
                           lower(b['gap'], 'motzkin-via-tl', Status.HEURISTIC) if char0 else Evidence.unknown(),
                           lower(b['ssgap'], 'motzkin-via-tl'),
                           lower(b['faith'], 'motzkin-via-tl') if char0 else Evidence.unknown())

    elif family in (FamilyId.PLANAR_ROOK, FamilyId.ROOK):
        if family == FamilyId.ROOK and field.char != 0 and field.char <= n:
            raise UnsupportedError(f"The rook bound needs a characteristic not dividing {n}!, got {field.char}")
        b = _prook_bounds(n)
        source = 'prook-truncation' if family == FamilyId.PLANAR_ROOK else 'rook-via-prook'
        description = f"{SHORT_NAMES[family]}_{n},{b['l']}..{n - b['l']}"
        report = GapReport(description, field, None, lower(b['gap'], source),
                           lower(b['ssgap'], source), lower(b['faith'], source))
        return report

    elif family == FamilyId.BRAUER:
        if field.char == 2:
            raise UnsupportedError("Brauer bounds need a characteristic other than 2")
        b = tl_bounds(n, k)
        report = GapReport(description, field, None,
                           lower(b['gap'], 'brauer-via-tl') if char0 else Evidence.unknown(),
                           lower(b['ssgap'], 'brauer-via-tl'),
                           lower(b['faith'], 'brauer-via-tl') if char0 else Evidence.unknown())

    elif family == FamilyId.ROOK_BRAUER:
        b = tl_bounds(n - 1, k)
        report = GapReport(description, field, None, Evidence.unknown(),
                           lower(b['ssgap'], 'rookbrauer-via-motzkin'),
                           lower(b['faith'], 'rookbrauer-via-motzkin') if char0 else Evidence.unknown())

    elif family in (FamilyId.PLANAR_PARTITION, FamilyId.PARTITION):
        b = tl_bounds(2 * n, 2 * k)
        gap = lower(b['gap'], 'partition-via-planar') \
            if char0 and family == FamilyId.PLANAR_PARTITION else Evidence.unknown()
        report = GapReport(description, field, None, gap, lower(b['ssgap'], 'partition-via-planar'),
                           lower(b['faith'], 'partition-via-planar') if char0 else Evidence.unknown())
    else:
        raise UnsupportedError(f"No bounds for {family.value}")

    if family in SYMMETRIC_TYPE or family == FamilyId.MOTZKIN:
        extras['ssgap_cells'] = _cell_extra(family, n, k)
    return GapReport(report.description, report.field, report.size, report.gap, report.ssgap,
                     report.faith, extras)


# --- cyclic groups ---------------------------------------------------------

def _prime_of(q: int) -> int:
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise ValidationError(f"Field size must be a prime power, got {q}")
    return next(iter(factors))


def cyclic_gap(n: int, q: Optional[int] = None) -> int:
    """Gap of Z/nZ over Q (q None) or over F_q."""
    if n <= 1:
        raise ValidationError(f"Need n > 1, got {n}")
    if q is None:
        return min(r - 1 for r in primefactors(n))
    p = _prime_of(q)
    if gcd(n, q - 1) > 1:
        return 1
    if n % p == 0:
        return 2
    d = 1
    while gcd(n, q ** d - 1) == 1:
        d += 1
    return d


def printed_cyclic_faith(n: int) -> int:
    """Sum of phi(r^d) over the prime powers r^d exactly dividing n."""
    if n <= 1:
        raise ValidationError(f"Need n > 1, got {n}")
    return sum(r ** d - r ** (d - 1) for r, d in factorint(n).items())


def cyclic_faith(n: int, q: Optional[int] = None) -> int:
    """
    Faithfulness of Z/nZ. Over Q: the sum of phi(r^d) over the prime powers
    of n, less one when n = 2 mod 4 and n > 2 (the factor 2 is carried by
    the sign of the odd part). Over F_q only prime n with char not dividing n.
    """
    if q is not None:
        p = _prime_of(q)
        if not isprime(n) or n == p:
            raise UnsupportedError(f"Faithfulness of Z/{n}Z over F_{q} needs n prime and coprime to {p}")
        return cyclic_gap(n, q)
    value = printed_cyclic_faith(n)
    if n % 4 == 2 and n > 2:
        value -= 1
        logger.warning(f"faith_Q(Z/{n}Z): the prime-power sum gives {value + 1}, "
                       f"a faithful representation of dimension {value} exists")
    return value


def cyclic_report(n: int, q: Optional[int] = None) -> GapReport:
    field = FieldSpec(0) if q is None else FieldSpec(_prime_of(q))
    gap = Evidence.of(cyclic_gap(n, q), 'cyclic-group')
    try:
        faith = Evidence.of(cyclic_faith(n, q), 'cyclic-group')
    except UnsupportedError:
        faith = Evidence.unknown()
    if n <= settings.get('table_max_size'):
        ssgap = _cell_ssgap(green_cells(cyclic_monoid(0, n)))
    else:
        logger.info(f"Z/{n}Z is above table_max_size; semisimple gap left unknown")
        ssgap = Evidence.unknown()
    description = f"Z/{n}Z" + ("" if q is None else f" over F_{q}")
    return GapReport(description, field, n, gap, ssgap, faith)


def field_complexity(dim: int, q: int):
    """dim * log2(q), exact: an integer multiple of log2(p)."""
    if dim < 0:
        raise ValidationError(f"Dimension must be nonnegative, got {dim}")
    p = _prime_of(q)
    exponent = factorint(q)[p]
    if p == 2:
        return Integer(dim * exponent)
    return dim * exponent * log(p, 2)

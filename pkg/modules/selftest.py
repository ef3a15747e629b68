"""Acceptance checks runnable from the command line"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from math import lcm
from typing import Callable, Dict, List, Tuple

from sympy import Integer, N, Rational, divisors, floor, sqrt, totient

from modules.adic import e_coefficient, simple_dim_tl
from modules.cells import green_cells, index_period
from modules.diagram import FamilyId
from modules.extensions import ExtCase, additive_hom_dim, ext_dim, roundedness
from modules.families import (FamilyInstance, GraphKind, build_graph, cardinality, enumerate_family,
                              family_monoid, is_connected, j_class_of_width, transformation_monoid)
from modules.gaps import burnside_brauer_bound, cyclic_faith, cyclic_gap, tl_bounds
from modules.linalg import FieldSpec, rank
from modules.protocols import DiagramPlatform, commuting_generator_sets, run_stickel, run_su
from modules.reference_data import E_MATRIX_NONZERO, E_MATRIX_SIZE, TL24_DIMS, TL24_SSDIMS, TL_DIMS
from modules.representations import diagram_gram_matrix, gram_matrix
from modules.tables import dims_table, ssdims_table

logger = logging.getLogger('cellgap')


class CheckFailed(AssertionError):
    pass


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float
    message: str = ''


@dataclass(frozen=True)
class SelftestReport:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = 'ok' if r.passed else 'FAIL'
            lines.append(f"{status:4} {r.name:24} {r.seconds:8.2f}s {r.message}".rstrip())
        total = sum(r.seconds for r in self.results)
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed in {total:.2f}s")
        return "\n".join(lines) + "\n"


# --- checks ----------------------------------------------------------------

def check_cardinalities(quick: bool) -> None:
    limits = {FamilyId.TL: 8 if quick else 12, FamilyId.BRAUER: 4 if quick else 6,
              FamilyId.PLANAR_ROOK: 6 if quick else 8, FamilyId.PARTITION: 3 if quick else 4}
    for family, n_max in limits.items():
        for n in range(1, n_max + 1):
            fi = FamilyInstance(family, n)
            counted = len(enumerate_family(fi))
            expect(counted == cardinality(fi), f"{fi}: {counted} != {cardinality(fi)}")
    expect(len(enumerate_family(FamilyInstance(FamilyId.ROOK, 3))) == 34, "Ro_3 should have 34 elements")


def check_dim_tables(quick: bool) -> None:
    n_max = 12 if quick else 16
    for char, rows in TL_DIMS.items():
        table = dims_table(FamilyId.TL, n_max, char)
        for n in range(n_max + 1):
            expect(table.tuple_for(n) == rows[n], f"char {char}, n={n}: {table.tuple_for(n)} != {rows[n]}")


def check_tl24(quick: bool) -> None:
    dims = tuple(simple_dim_tl(24, k) for k in range(0, 25, 2))
    expect(dims == TL24_DIMS, f"TL_24 dims {dims}")
    ssdims = ssdims_table(FamilyId.TL, 24).tuple_for(24)
    expect(ssdims == TL24_SSDIMS, f"TL_24 ssdims {ssdims}")


def check_gram_oracle(quick: bool) -> None:
    n_max = 6 if quick else 10
    for char in (0, 2, 3):
        field = FieldSpec(char)
        for n in range(1, n_max + 1):
            for k in range(n % 2, n + 1, 2):
                r = rank(diagram_gram_matrix(FamilyId.TL, n, k, field))
                d = simple_dim_tl(n, k, field.adic_prime)
                expect(r == d, f"TL_{n}, k={k}, {field}: rank {r} != {d}")


def check_e_matrix(quick: bool) -> None:
    for n in range(E_MATRIX_SIZE):
        for k in range(n + 1):
            want = E_MATRIX_NONZERO.get((n, k), 0)
            got = e_coefficient(n, k)
            expect(got == want, f"e({n},{k}) = {got}, expected {want}")


def check_prook_semisimple(quick: bool) -> None:
    for n in range(1, (4 if quick else 5) + 1):
        monoid = family_monoid(FamilyInstance(FamilyId.PLANAR_ROOK, n))
        cells = green_cells(monoid)
        for j in cells.idempotent_js:
            expect(gram_matrix(monoid, j, FieldSpec(0), cells).is_permutation(),
                   f"pRo_{n}: Gram matrix of J-class {j} is not a permutation matrix")
    monoid = family_monoid(FamilyInstance(FamilyId.PLANAR_ROOK, 3))
    cells = green_cells(monoid)
    p = gram_matrix(monoid, j_class_of_width(monoid, cells, 1), FieldSpec(0), cells)
    expect(p.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1)), f"pRo_3 J_1 Gram matrix {p.entries}")


def _j_sizes(monoid) -> List[int]:
    cells = green_cells(monoid)
    return [len(cells.j_members(j)) for j in cells.ordered_js()]


def check_cells(quick: bool) -> None:
    expect(_j_sizes(family_monoid(FamilyInstance(FamilyId.TL, 3))) == [1, 4], "TL_3 J-cell sizes")
    expect(_j_sizes(family_monoid(FamilyInstance(FamilyId.TL, 4))) == [1, 9, 4], "TL_4 J-cell sizes")
    expect(_j_sizes(transformation_monoid(3)) == [6, 18, 3], "T_3 J-cell sizes")
    monoid = family_monoid(FamilyInstance(FamilyId.BRAUER, 4))
    cells = green_cells(monoid)
    expect(cells.h_size(j_class_of_width(monoid, cells, 2)) == 2, "Br_4 J_2 H-cells should have size 2")


def check_roundedness(quick: bool) -> None:
    for n in range(5, (6 if quick else 7) + 1):
        expect(roundedness(family_monoid(FamilyInstance(FamilyId.TL, n))).well, f"TL_{n} is not well-rounded")
    expect(roundedness(family_monoid(FamilyInstance(FamilyId.TL, 3))).left_classes == 2, "TL_3 left classes")
    for n in range(1, (5 if quick else 6) + 1):
        monoid = family_monoid(FamilyInstance(FamilyId.TL, n))
        for char in (0, 2, 3):
            expect(additive_hom_dim(monoid, FieldSpec(char)) == 0, f"TL_{n} has additive characters in char {char}")
    tl5 = family_monoid(FamilyInstance(FamilyId.TL, 5))
    for case in ExtCase:
        expect(ext_dim(tl5, FieldSpec(0), case) == 0, f"TL_5 Ext {case.value} does not vanish")


def check_graphs(quick: bool) -> None:
    n_max = 7 if quick else 11
    for n in range(3, n_max + 1, 2):
        expect(is_connected(build_graph(GraphKind.FLIP, 3, n)), f"flip graph (3,{n}) disconnected")
    for n in range(4, (8 if quick else 10) + 1, 2):
        expect(not is_connected(build_graph(GraphKind.FLIP, 2, n)), f"flip graph (2,{n}) connected")
    for m in (1, 2, 3):
        for n in range(m, n_max + 1, 2):
            expect(is_connected(build_graph(GraphKind.VERTICAL, m, n)), f"vertical graph ({m},{n}) disconnected")


def check_periods(quick: bool) -> None:
    for n in range(1, (4 if quick else 5) + 1):
        monoid = family_monoid(FamilyInstance(FamilyId.BRAUER, n))
        cells = green_cells(monoid)
        for a in range(monoid.size):
            expect(index_period(monoid, a, cells).divides, f"Br_{n}: period of {monoid.labels[a]}")


def _faith_oracle(n: int) -> int:
    """Smallest sum of cyclotomic degrees phi(d) over divisor sets whose lcm is n."""
    ds = [d for d in divisors(n) if d > 1]
    best = None
    for size in range(1, len(ds) + 1):
        for subset in combinations(ds, size):
            if lcm(*subset) == n:
                total = sum(int(totient(d)) for d in subset)
                best = total if best is None else min(best, total)
    return best


def check_cyclic(quick: bool) -> None:
    for n in range(2, 31):
        oracle_gap = min(int(totient(d)) for d in divisors(n) if d > 1)
        expect(cyclic_gap(n) == oracle_gap, f"gap_Q(Z/{n}Z)")
        expect(cyclic_faith(n) == _faith_oracle(n), f"faith_Q(Z/{n}Z)")


def check_protocols(quick: bool) -> None:
    runs = 10 if quick else 100
    tl = FamilyInstance(FamilyId.TL, 10)
    platform = DiagramPlatform(tl, max_width=4)
    a, b = commuting_generator_sets(tl, 2, 3)
    for seed in range(runs):
        expect(run_su(platform, a, b, seed=seed).equal, f"SU secrets differ for seed {seed}")
    brauer = DiagramPlatform(FamilyInstance(FamilyId.BRAUER, 5))
    for seed in range(runs):
        expect(run_stickel(brauer, seed=seed).equal, f"Stickel secrets differ for seed {seed}")


def check_burnside_brauer(quick: bool) -> None:
    bound = burnside_brauer_bound(transformation_monoid(3))
    expect(bound.value == 2, f"T_3 bound {bound.value}")


def check_asymptotics(quick: bool) -> None:
    ratios = []
    for n in range(16, (32 if quick else 64) + 1):
        k = int(floor(2 * sqrt(Integer(n))))
        gap = tl_bounds(n, k)['gap']
        ratios.append(float(N(gap / (Integer(2) ** n * Integer(n) ** Rational(-5, 2)), 20)))
    expect(min(ratios) > 0 and max(ratios) / min(ratios) < 10, f"gap bound ratios range {min(ratios)}..{max(ratios)}")


CHECKS: Dict[str, Callable[[bool], None]] = {
    'cardinalities': check_cardinalities,
    'dim-tables': check_dim_tables,
    'tl24': check_tl24,
    'gram-oracle': check_gram_oracle,
    'e-matrix': check_e_matrix,
    'prook-semisimple': check_prook_semisimple,
    'cells': check_cells,
    'roundedness': check_roundedness,
    'graphs': check_graphs,
    'periods': check_periods,
    'cyclic': check_cyclic,
    'protocols': check_protocols,
    'burnside-brauer': check_burnside_brauer,
    'asymptotics': check_asymptotics,
}


def run_selftest(quick: bool = False, only: List[str] = None) -> SelftestReport:
    names = only or list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise KeyError(f"Unknown checks: {', '.join(unknown)}")
    results = []
    for name in names:
        start = time.perf_counter()
        try:
            CHECKS[name](quick)
            results.append(CheckResult(name, True, time.perf_counter() - start))
        except Exception as e:
            logger.error(f"Selftest check {name} failed: {e}")
            results.append(CheckResult(name, False, time.perf_counter() - start, str(e)))
    return SelftestReport(tuple(results))

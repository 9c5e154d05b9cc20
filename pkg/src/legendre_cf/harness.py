"""Exhaustive equivalence harness.

Enumerates alpha over reduced fractions in (0, 1) with denominator <= D and
p/q over the interior of the Farey series of order Q, both in
(denominator, numerator) order.  Every pair goes through the grid kernel,
whose predicate bits are then checked against the oracle verdict.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import gcd
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _bits as B
from . import kernels
from .cf_engine import penultimate
from .criteria import select_expansion
from .exact_arith import Rat, format_rat
from .farey import farey_series
from .oracle import Verdict

SCHEMA = "legendre-cf/verify-report/1"
CRITERIA = ("legendre-strict", "legendre", "lucas", "theorem-a", "interval", "oracle", "fatou", "dujella", "lehmer")
DEFAULT_C_VALUES = (Rat(3, 4), Rat(1), Rat(2))
SAMPLE_LIMIT = 10
WORKERS_ENV = "LEGENDRE_CF_WORKERS"

# check name -> criterion group that enables it
CHECKS = (
    ("strict_matches_oracle", "legendre-strict"),
    ("nonstrict_matches_oracle", "legendre"),
    ("strict_nonstrict_split_at_mediant", "legendre"),
    ("lucas_matches_strict", "lucas"),
    ("theorem_a_implies_strict", "theorem-a"),
    ("theorem_a_implies_lucas", "theorem-a"),
    ("interval_matches_strict", "interval"),
    ("canonical_only_unreachable", "oracle"),
    ("fatou_total", "fatou"),
    ("dujella_exists", "dujella"),
)
PAIR_TALLIES = (
    ("lehmer_raw_false_positives", "lehmer"),
    ("consecutive_interval_mismatches", "lehmer"),
    ("consecutive_interval_mismatches_at_p_over_q", "lehmer"),
)
TALLIES = (
    ("boundary_hits", "legendre"),
    ("theorem_a_misses", "theorem-a"),
) + PAIR_TALLIES


@dataclass(frozen=True)
class VerifyConfig:
    max_alpha_den: int
    max_q: int
    criteria: Tuple[str, ...] = CRITERIA
    c_values: Tuple[Rat, ...] = DEFAULT_C_VALUES
    # execution detail, not part of the report
    workers: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        unknown = set(self.criteria) - set(CRITERIA)
        if unknown:
            raise ValueError(f"unknown criteria: {sorted(unknown)}")
        if len(self.c_values) > B.MAX_C:
            raise ValueError(f"at most {B.MAX_C} c values")
        if any(Rat(c) <= 0 for c in self.c_values):
            raise ValueError("c values must be positive")

    def to_dict(self) -> dict:
        return {
            "max_alpha_den": self.max_alpha_den,
            "max_q": self.max_q,
            "criteria": [c for c in CRITERIA if c in self.criteria],
            "c_values": [format_rat(Rat(c)) for c in self.c_values],
        }


def grid_alphas(max_den: int) -> List[Tuple[int, int]]:
    return [(a, d) for d in range(2, max_den + 1) for a in range(1, d) if gcd(a, d) == 1]


def kernel_row(pq: Rat, series=None) -> Tuple[int, ...]:
    """One table row for p/q in (0, 1); see ``_pykernels`` for the layout."""
    pq = Rat(pq)
    pe = penultimate(select_expansion(pq, 1))
    po = penultimate(select_expansion(pq, -1))
    series = series or farey_series(pq.denominator)
    nb = series.neighbors_of(pq)
    return (pq.numerator, pq.denominator, *pe, *po,
            nb.lower.numerator, nb.lower.denominator, nb.upper.numerator, nb.upper.denominator)


def grid_table(max_q: int) -> List[Tuple[int, ...]]:
    rows = []
    for q in range(2, max_q + 1):
        series = farey_series(q)
        rows.extend(kernel_row(Rat(p, q), series) for p in range(1, q) if gcd(p, q) == 1)
    return rows


def worker_count(requested: Optional[int] = None) -> int:
    if requested:
        return max(1, requested)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _scan_chunk(chunk, rows, cvals, backend):
    return kernels.scan_block(chunk, rows, cvals, backend=backend)


@dataclass
class GridScan:
    alphas: List[Tuple[int, int]]
    rows: List[Tuple[int, ...]]
    masks: np.ndarray  # (len(alphas), len(rows)) uint32
    c_values: Tuple[Rat, ...]

    def alpha(self, i: int) -> Rat:
        return Rat(*self.alphas[i])

    def pq(self, j: int) -> Rat:
        return Rat(self.rows[j][0], self.rows[j][1])

    def neighbor(self, j: int, k: int) -> Rat:
        r = self.rows[j]
        return Rat(r[6], r[7]) if k == 0 else Rat(r[8], r[9])

    def bit(self, flag: int) -> np.ndarray:
        return (self.masks & np.uint32(flag)) != 0

    def pair_bit(self, flag0: int, k: int) -> np.ndarray:
        return self.bit(flag0 << (k * B.PAIR_STRIDE))


def scan_grid(config: VerifyConfig, backend: Optional[str] = None) -> GridScan:
    alphas = grid_alphas(config.max_alpha_den)
    rows = grid_table(config.max_q)
    c_values = tuple(Rat(c) for c in config.c_values)
    cvals = [(c.numerator, c.denominator) for c in c_values]
    n_workers = worker_count(config.workers)
    if n_workers > 1 and len(alphas) * len(rows) > 200_000:
        size = -(-len(alphas) // (4 * n_workers))
        chunks = [alphas[i:i + size] for i in range(0, len(alphas), size)]
        with ProcessPoolExecutor(n_workers) as pool:
            parts = list(pool.map(partial(_scan_chunk, rows=rows, cvals=cvals, backend=backend), chunks))
        masks = np.concatenate(parts, axis=0)
    else:
        masks = kernels.scan_block(alphas, rows, cvals, backend=backend)
    return GridScan(alphas, rows, masks.reshape(len(alphas), len(rows)), c_values)


def oracle_verdicts(scan: GridScan) -> np.ndarray:
    """Verdict value strings per pair, as an object array."""
    canon, comp = scan.bit(B.CANON), scan.bit(B.COMP)
    out = np.empty(scan.masks.shape, dtype=object)
    for (c, k), verdict in (((True, True), Verdict.BOTH_EXPANSIONS), ((True, False), Verdict.CANONICAL_ONLY),
                            ((False, True), Verdict.COMPANION_ONLY), ((False, False), Verdict.NOT_CONVERGENT)):
        out[(canon == c) & (comp == k)] = verdict.value
    return out


def check_violations(scan: GridScan) -> Dict[str, np.ndarray]:
    """Boolean violation grids, one per check."""
    bit = scan.bit
    both = bit(B.CANON) & bit(B.COMP)
    any_exp = bit(B.CANON) | bit(B.COMP)
    strict, nonstrict, lucas, thm_a = bit(B.STRICT), bit(B.NONSTRICT), bit(B.LUCAS), bit(B.THM_A)
    split = strict ^ nonstrict
    at_med = bit(B.AT_MEDIANT)
    companion_only = bit(B.COMP) & ~bit(B.CANON)
    dujella = np.zeros(scan.masks.shape, dtype=bool)
    for i in range(len(scan.c_values)):
        dujella |= bit(B.DUJ_DOMAIN0 << i) & ~bit(B.DUJ_FOUND0 << i)
    return {
        "strict_matches_oracle": strict != both,
        "nonstrict_matches_oracle": nonstrict != any_exp,
        "strict_nonstrict_split_at_mediant": (split & ~(at_med & companion_only)) | (at_med & ~split),
        "lucas_matches_strict": lucas != strict,
        "theorem_a_implies_strict": thm_a & ~strict,
        "theorem_a_implies_lucas": thm_a & ~lucas,
        "interval_matches_strict": bit(B.INTERVAL) != strict,
        "canonical_only_unreachable": bit(B.CANON) & ~bit(B.COMP) & ~bit(B.EQUAL),
        "fatou_total": bit(B.FATOU_DOMAIN) & ~bit(B.FATOU_FOUND),
        "dujella_exists": dujella,
    }


def tally_grids(scan: GridScan) -> Dict[str, np.ndarray]:
    """Pair-level tallies as boolean grids; neighbour tallies have a leading axis of 2."""
    bit = scan.bit
    both = bit(B.CANON) & bit(B.COMP)
    out = {
        "boundary_hits": bit(B.STRICT) ^ bit(B.NONSTRICT),
        "theorem_a_misses": both & ~bit(B.EQUAL) & ~bit(B.THM_A),
    }
    raw, mismatch, at_pq = [], [], []
    equal = bit(B.EQUAL)
    for k in range(2):
        cons_both = scan.pair_bit(B.CONS_CANON0, k) & scan.pair_bit(B.CONS_COMP0, k)
        cons_any = scan.pair_bit(B.CONS_CANON0, k) | scan.pair_bit(B.CONS_COMP0, k)
        raw.append(scan.pair_bit(B.RAW0, k) & ~cons_any)
        mm = scan.pair_bit(B.CINT0, k) != cons_both
        mismatch.append(mm)
        at_pq.append(mm & equal)
    out["lehmer_raw_false_positives"] = np.stack(raw)
    out["consecutive_interval_mismatches"] = np.stack(mismatch)
    out["consecutive_interval_mismatches_at_p_over_q"] = np.stack(at_pq)
    return out


def _verdict_str(mask: int) -> str:
    return Verdict.from_flags(bool(mask & B.CANON), bool(mask & B.COMP)).value


def _pair_record(scan: GridScan, i: int, j: int, label: str) -> dict:
    m = int(scan.masks[i, j])
    flags = [name.lower() for name in ("STRICT", "NONSTRICT", "LUCAS", "THM_A", "INTERVAL", "AT_MEDIANT")
             if m & getattr(B, name)]
    return {
        "check": label,
        "alpha": format_rat(scan.alpha(i)),
        "pq": format_rat(scan.pq(j)),
        "p2q2": None,
        "detail": f"oracle={_verdict_str(m)} flags={'+'.join(flags) or '-'}",
    }


def _triple_record(scan: GridScan, i: int, j: int, k: int, label: str) -> dict:
    m = int(scan.masks[i, j]) >> (k * B.PAIR_STRIDE)
    verdict = Verdict.from_flags(bool(m & B.CONS_CANON0), bool(m & B.CONS_COMP0)).value
    return {
        "check": label,
        "alpha": format_rat(scan.alpha(i)),
        "pq": format_rat(scan.pq(j)),
        "p2q2": format_rat(scan.neighbor(j, k)),
        "detail": f"oracle={verdict} raw={int(bool(m & B.RAW0))} interval={int(bool(m & B.CINT0))}",
    }


def _triple_positions(grid: np.ndarray):
    # grid has shape (2, nA, nP); order by (alpha, pq, neighbour)
    k, i, j = np.nonzero(grid)
    order = np.lexsort((k, j, i))
    return zip(i[order], j[order], k[order])


@dataclass
class EquivalenceReport:
    config: dict
    pairs: int
    triples: int
    agreements: int
    disagreements: int
    violations: Dict[str, int]
    tallies: Dict[str, int]
    samples: Dict[str, List[dict]]
    counterexamples: List[dict]

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "config": self.config,
            "pairs": self.pairs,
            "triples": self.triples,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "violations": self.violations,
            "tallies": self.tallies,
            "samples": self.samples,
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def counterexamples_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["check", "alpha", "pq", "p2q2", "detail"], lineterminator="\n")
        writer.writeheader()
        for rec in self.counterexamples:
            writer.writerow({k: ("" if v is None else v) for k, v in rec.items()})
        return buf.getvalue()

    def summary_lines(self) -> List[str]:
        lines = [f"pairs={self.pairs} triples={self.triples} agreements={self.agreements} "
                 f"disagreements={self.disagreements}"]
        lines += [f"violations {name}={n}" for name, n in self.violations.items()]
        lines += [f"tally {name}={n}" for name, n in self.tallies.items()]
        return lines


def report_from_scan(scan: GridScan, config: VerifyConfig) -> EquivalenceReport:
    enabled = set(config.criteria)
    checks = check_violations(scan)
    tallies = tally_grids(scan)
    any_violation = np.zeros(scan.masks.shape, dtype=bool)
    violations, counterexamples = {}, []
    for name, group in CHECKS:
        if group not in enabled:
            continue
        grid = checks[name]
        any_violation |= grid
        violations[name] = int(grid.sum())
        for i, j in zip(*np.nonzero(grid)):
            counterexamples.append(_pair_record(scan, i, j, name))
    counts, samples = {}, {}
    for name, group in TALLIES:
        if group not in enabled:
            continue
        grid = tallies[name]
        counts[name] = int(grid.sum())
        if grid.ndim == 3:
            picked = [_triple_record(scan, i, j, k, name)
                      for _, (i, j, k) in zip(range(SAMPLE_LIMIT), _triple_positions(grid))]
        else:
            picked = [_pair_record(scan, i, j, name)
                      for _, (i, j) in zip(range(SAMPLE_LIMIT), zip(*np.nonzero(grid)))]
        samples[name] = picked
    pairs = int(scan.masks.size)
    bad = int(any_violation.sum())
    lehmer_on = "lehmer" in enabled
    return EquivalenceReport(
        config=config.to_dict(),
        pairs=pairs,
        triples=2 * pairs if lehmer_on else 0,
        agreements=pairs - bad,
        disagreements=bad,
        violations=violations,
        tallies=counts,
        samples=samples,
        counterexamples=counterexamples,
    )


def run_equivalence_report(config: VerifyConfig, backend: Optional[str] = None) -> EquivalenceReport:
    return report_from_scan(scan_grid(config, backend=backend), config)

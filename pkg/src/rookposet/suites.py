"""Named verification suites over whole boards, as deterministic reports.

Each suite sweeps every placement of the requested board (sampling only where
the suite is explicitly sample-based), collects all failures with witnesses,
and never aborts mid-run.  Sampling is keyed off (seed, placement position),
so reports are reproducible and independent of any parallel split.
"""
from __future__ import annotations

import random
import time

import numpy as np

from .board import (
    kerov_involution,
    permutation_of,
    placement_from_rank_matrix,
    rank_matrix,
    to_json,
)
from .errors import BoundViolation, LimitExceeded
from .exactlin import (
    Scope,
    check_polarization,
    coadjoint,
    placement_form,
    random_scalars,
    rank_profile,
    tangent_dimension,
    _draw_upper,
)
from .polarization import dimensions
from .poset import (
    VerificationReport,
    _pairwise_leq,
    _stacked_dominance,
    bell_number,
    enumerate_placements,
    maximal_element,
    poset_index,
    verify_covers,
)

DEFAULT_SAMPLES = 100
DEFAULT_BOUND = 3


def _rng_for(seed: int, position: int) -> random.Random:
    return random.Random(seed * 1_000_003 + position)


def _scalar_witness(xi) -> dict:
    return {f"({c.row},{c.col})": str(v) for c, v in xi.items()}


# ---------------------------------------------------------------------------


def suite_thm15(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> VerificationReport:
    """Rank-profile invariance along orbits.

    Exhaustive over placements for n <= 5, else 50 seeded random placements;
    for each, ``samples`` random (group element, scalars) pairs must leave the
    rank profile equal to the rank matrix.
    """
    if not 1 <= n <= 8:
        raise LimitExceeded(f"suite thm15 supports 1 <= n <= 8, got {n}")
    t0 = time.perf_counter()
    everything = enumerate_placements(n)
    if n <= 5:
        chosen = list(enumerate(everything))
    else:
        picker = random.Random(seed)
        indices = sorted(picker.sample(range(len(everything)), 50))
        chosen = [(k, everything[k]) for k in indices]
    failures: list[dict] = []
    tested = 0
    for k, D in chosen:
        expected = [list(row) for row in rank_matrix(D).entries]
        rng = _rng_for(seed, k)
        for s in range(samples):
            xi = random_scalars(D, rng, DEFAULT_BOUND)
            b = _draw_upper(n, rng, DEFAULT_BOUND, Scope.BOREL)
            lam = coadjoint(b, placement_form(D, xi))
            tested += 1
            if rank_profile(lam) != expected:
                failures.append(
                    {
                        "placement": to_json(D),
                        "sample": s,
                        "scalars": _scalar_witness(xi),
                        "group_element": [[str(x) for x in row] for row in b],
                    }
                )
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("thm15", n, tested, failures, seed, millis)


def suite_thm24(n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> VerificationReport:
    """Full polarization and dimension certification for every placement.

    Per placement: the closed-form dimensions respect their bounds, the Borel
    tangent dimension matches 2|M| + |D|, and for each sampled scalar choice
    the polarization report passes and the unipotent tangent dimension is
    2|M| (in particular scalar-independent).
    """
    if not 1 <= n <= 6:
        raise LimitExceeded(f"suite thm24 supports 1 <= n <= 6, got {n}")
    t0 = time.perf_counter()
    failures: list[dict] = []
    everything = enumerate_placements(n)
    for k, D in enumerate(everything):
        try:
            dims = dimensions(D)
        except BoundViolation as exc:
            failures.append({"placement": to_json(D), "bound_violation": str(exc)})
            continue
        borel_dim = tangent_dimension(placement_form(D), Scope.BOREL)
        if borel_dim != dims.dim_omega or borel_dim > dims.length:
            failures.append(
                {
                    "placement": to_json(D),
                    "check": "borel-dimension",
                    "tangent": borel_dim,
                    "expected": dims.dim_omega,
                    "length": dims.length,
                }
            )
        rng = _rng_for(seed, k)
        for s in range(samples):
            xi = random_scalars(D, rng, DEFAULT_BOUND)
            report = check_polarization(D, xi)
            if not report.passed:
                failures.append(
                    {
                        "placement": to_json(D),
                        "sample": s,
                        "scalars": _scalar_witness(xi),
                        "clauses": report.to_json(),
                    }
                )
            uni_dim = tangent_dimension(placement_form(D, xi), Scope.UNIPOTENT)
            if uni_dim != dims.dim_theta:
                failures.append(
                    {
                        "placement": to_json(D),
                        "sample": s,
                        "check": "unipotent-dimension",
                        "tangent": uni_dim,
                        "expected": dims.dim_theta,
                    }
                )
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("thm24", n, len(everything), failures, seed, millis)


def suite_thm33(n: int, seed: int = 0, samples: int = 0) -> VerificationReport:
    report = verify_covers(n)
    report.seed = seed
    return report


def suite_cor18(n: int, seed: int = 0, samples: int = 0) -> VerificationReport:
    """Placement order == Bruhat order on the doubled involutions, all pairs."""
    if not 1 <= n <= 6:
        raise LimitExceeded(f"suite cor18 supports 1 <= n <= 6, got {n}")
    t0 = time.perf_counter()
    idx = poset_index(n)
    count = len(idx.placements)
    failures: list[dict] = []
    if n >= 2:
        tables = _stacked_dominance([kerov_involution(D) for D in idx.placements])
        sigma_le = _pairwise_leq(tables)
        for a, b in zip(*np.nonzero(sigma_le != idx.le)):
            failures.append(
                {
                    "first": to_json(idx.placements[int(a)]),
                    "second": to_json(idx.placements[int(b)]),
                    "placement_leq": bool(idx.le[a, b]),
                    "involution_leq": bool(sigma_le[a, b]),
                }
            )
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("cor18", n, count * count, failures, seed, millis)


def suite_proctor(n: int, seed: int = 0, samples: int = 0) -> VerificationReport:
    """Comparable attached permutations force comparable placements, all pairs."""
    if not 1 <= n <= 6:
        raise LimitExceeded(f"suite proctor supports 1 <= n <= 6, got {n}")
    t0 = time.perf_counter()
    idx = poset_index(n)
    count = len(idx.placements)
    tables = _stacked_dominance([permutation_of(D) for D in idx.placements])
    w_le = _pairwise_leq(tables)
    failures: list[dict] = []
    for a, b in zip(*np.nonzero(w_le & ~idx.le)):
        failures.append(
            {
                "smaller": to_json(idx.placements[int(a)]),
                "larger": to_json(idx.placements[int(b)]),
            }
        )
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("proctor", n, count * count, failures, seed, millis)


def suite_d0max(n: int, seed: int = 0, samples: int = 0) -> VerificationReport:
    """Every placement sits below the staircase maximal element."""
    if not 1 <= n <= 8:
        raise LimitExceeded(f"suite d0max supports 1 <= n <= 8, got {n}")
    t0 = time.perf_counter()
    top = maximal_element(n)
    top_row = np.array(rank_matrix(top).flatten_lower(), dtype=np.int16)
    everything = enumerate_placements(n)
    failures: list[dict] = []
    for D in everything:
        row = np.array(rank_matrix(D).flatten_lower(), dtype=np.int16)
        if not (row <= top_row).all():
            failures.append({"placement": to_json(D), "top": to_json(top)})
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("d0max", n, len(everything), failures, seed, millis)


def suite_counts(n: int, seed: int = 0, samples: int = 0) -> VerificationReport:
    """Enumeration count against the Bell triangle, canonical order, round-trips."""
    if not 1 <= n <= 8:
        raise LimitExceeded(f"suite counts supports 1 <= n <= 8, got {n}")
    t0 = time.perf_counter()
    everything = enumerate_placements(n)
    failures: list[dict] = []
    expected = bell_number(n)
    if len(everything) != expected:
        failures.append({"check": "count", "got": len(everything), "expected": expected})
    if everything != sorted(everything, key=lambda D: D.rooks):
        failures.append({"check": "canonical-order"})
    for D in everything:
        back = placement_from_rank_matrix(rank_matrix(D))
        if back != D:
            failures.append({"check": "round-trip", "placement": to_json(D), "got": to_json(back)})
    millis = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("counts", n, len(everything), failures, seed, millis)


SUITES = {
    "thm15": suite_thm15,
    "thm24": suite_thm24,
    "thm33": suite_thm33,
    "cor18": suite_cor18,
    "proctor": suite_proctor,
    "d0max": suite_d0max,
    "counts": suite_counts,
}

ALL_SUITES = ("thm15", "thm24", "thm33", "cor18", "proctor", "d0max", "counts")


def run_suite(name: str, n: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> VerificationReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    return fn(n, seed=seed, samples=samples)

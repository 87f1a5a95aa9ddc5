"""Exact certificate verification and sampling-based positivity probes.

Verification is pure algebra: re-expand epsilon + sum lambda_j t_j and
compare with p term by term.  A zero residual together with nonnegative
coefficients is a proof that p - epsilon lies in the nonnegative span of
the certificate terms.  Sampling (grids and seeded rational random
points) only ever estimates minima or hunts for counterexamples; it is
never an input to soundness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import Certificate
from .families import Box, SemiAlgebraicSet
from .poly import Polynomial

RANDOM_DENOMINATOR = 2**10


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    residual: Polynomial
    term_count: int
    max_term_degree: int

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "residual": str(self.residual),
            "term_count": self.term_count,
            "max_term_degree": self.max_term_degree,
        }


@dataclass(frozen=True)
class SamplingReport:
    estimated_min: Fraction
    argmin: tuple[Fraction, ...]
    samples_used: int
    strategy: str

    def to_json_dict(self) -> dict:
        return {
            "estimated_min": str(self.estimated_min),
            "argmin": [str(v) for v in self.argmin],
            "samples_used": self.samples_used,
            "strategy": self.strategy,
        }


def verify_certificate(p: Polynomial, cert: Certificate) -> VerificationReport:
    """Exact residual check; rejects negative coefficients up front."""
    for entry in cert.entries:
        if entry.coeff < 0:
            raise ValueError(
                f"certificate has a negative coefficient {entry.coeff} "
                f"on term '{entry.term}'"
            )
        if entry.term.dim != p.dim:
            raise ValueError("certificate term dimension mismatch")
    if cert.epsilon < 0:
        raise ValueError(f"certificate epsilon {cert.epsilon} is negative")
    residual = p - cert.combination(p.dim)
    max_deg = max((e.term.total_degree() for e in cert.entries), default=-1)
    return VerificationReport(
        ok=residual.is_zero(),
        residual=residual,
        term_count=len(cert.entries),
        max_term_degree=max_deg,
    )


def member(kset: SemiAlgebraicSet, point: Sequence) -> bool:
    """Exact membership: every constraint nonnegative at the point."""
    return kset.contains(point)


def grid_side(budget: int, dim: int) -> int:
    """Largest per-axis point count whose grid fits in the budget."""
    side = max(1, int(round(budget ** (1.0 / dim))))
    while side**dim > budget:
        side -= 1
    while (side + 1) ** dim <= budget:
        side += 1
    return max(side, 1)


def grid_points(box: Box, side: int):
    """Exact rational lattice with ``side`` points per axis, corners included."""
    axes = []
    for lo, hi in box:
        lo, hi = Fraction(lo), Fraction(hi)
        if side == 1:
            axes.append([lo])
        else:
            step = (hi - lo) / (side - 1)
            axes.append([lo + k * step for k in range(side)])
    return itertools.product(*axes)


def random_points(box: Box, count: int, seed: int):
    """Seeded rational samples with denominator 2**10 per coordinate."""
    rng = random.Random(seed)
    den = RANDOM_DENOMINATOR
    for _ in range(count):
        yield tuple(
            Fraction(lo)
            + Fraction(rng.randint(0, den), den) * (Fraction(hi) - Fraction(lo))
            for lo, hi in box
        )


def _resolve_box(kset: SemiAlgebraicSet, box: Box | None) -> Box:
    box = box if box is not None else kset.box
    if box is None:
        raise ValueError("no bounding box supplied and the set carries none")
    if len(box) != kset.dim:
        raise ValueError("bounding box dimension mismatch")
    return box


def sample_min(
    p: Polynomial,
    kset: SemiAlgebraicSet,
    box: Box | None = None,
    strategy: str = "grid",
    budget: int = 1000,
    seed: int = 0,
) -> SamplingReport | None:
    """Minimum of p over sampled points of the set; None if nothing landed in it.

    Grid sampling is deterministic; ties on the minimum go to the
    lexicographically smallest point.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    box = _resolve_box(kset, box)
    if strategy == "grid":
        points = grid_points(box, grid_side(budget, kset.dim))
    elif strategy == "random":
        points = random_points(box, budget, seed)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    best: Fraction | None = None
    argmin: tuple[Fraction, ...] | None = None
    used = 0
    for point in points:
        if not kset.contains(point):
            continue
        used += 1
        value = p.evaluate(point)
        if best is None or value < best or (value == best and point < argmin):
            best = value
            argmin = tuple(point)
    if best is None:
        return None
    return SamplingReport(
        estimated_min=best, argmin=argmin, samples_used=used, strategy=strategy
    )


def counterexample(
    p: Polynomial,
    kset: SemiAlgebraicSet,
    box: Box | None = None,
    budget: int = 1000,
    seed: int = 0,
) -> tuple[Fraction, ...] | None:
    """First sampled point of the set with p <= 0, or None (inconclusive)."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    box = _resolve_box(kset, box)
    side = grid_side(budget, kset.dim)
    used = 0
    for point in grid_points(box, side):
        used += 1
        if kset.contains(point) and p.evaluate(point) <= 0:
            return tuple(point)
    remaining = budget - used
    if remaining > 0:
        for point in random_points(box, remaining, seed):
            if kset.contains(point) and p.evaluate(point) <= 0:
                return tuple(point)
    return None

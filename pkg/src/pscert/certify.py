"""Certificate search over term families, plus constructive combinators.

A certificate for p over a family {t_j} is an exact identity

    p = epsilon + sum_j lambda_j t_j,   lambda_j > 0, epsilon >= 0,

found by exact-rational LP (coefficient matching, one equality row per
monomial).  Fixed-epsilon mode decides feasibility at a given epsilon;
maximize mode treats epsilon as an LP variable.  Infeasibility always
carries a Farkas functional over the monomial rows.

The combinators assemble new certificates from old ones without any LP:

* ``bound_product``: from bounds lam +/- a_i and lam +/- b_i, a bound on
  s = sum_i a_i b_i via
      3n*lam^2 - s = sum (lam - a_i)(lam + b_i)
                     + lam * sum (lam + a_i) + lam * sum (lam - b_i)
  (and the mirrored expansion for 3n*lam^2 + s).

* ``product_certificate``: from cone memberships of c and d and bound
  witnesses, a certificate for c*d + eps via
      c*d + eps = (c + delta)(d + delta) + delta*(lam - c)
                  + delta*(lam - d) + slack
  with a rational delta > 0 chosen so slack = eps - delta^2 - 2*delta*lam
  is nonnegative; the slack lands on the constant term.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import simplex
from .families import TermFamily
from .poly import Monomial, Polynomial, grlex_key, parse_polynomial

DEFAULT_CAP_SCHEDULE = (2, 4, 6, 8)
DEFAULT_LAMBDA_SCHEDULE = tuple(Fraction(2**k) for k in range(11))


@dataclass(frozen=True)
class CertEntry:
    term: Polynomial
    coeff: Fraction
    provenance: str


@dataclass(frozen=True)
class Certificate:
    """Self-contained witness: epsilon plus weighted explicit terms."""

    epsilon: Fraction
    entries: tuple[CertEntry, ...]
    family: str

    def combination(self, dim: int) -> Polynomial:
        """epsilon + sum coeff * term, expanded exactly."""
        acc = Polynomial.constant(dim, self.epsilon)
        for e in self.entries:
            acc = acc + e.term * e.coeff
        return acc

    @property
    def term_count(self) -> int:
        return len(self.entries)

    def to_json_dict(self, dim: int | None = None) -> dict:
        data = {
            "epsilon": str(self.epsilon),
            "terms": [
                {
                    "poly": str(e.term),
                    "coeff": str(e.coeff),
                    "provenance": e.provenance,
                }
                for e in self.entries
            ],
            "family": self.family,
        }
        if dim is None and self.entries:
            dim = self.entries[0].term.dim
        if dim is not None:
            data["dim"] = dim
        return data

    def dumps(self, dim: int | None = None) -> str:
        return json.dumps(self.to_json_dict(dim), indent=2)


def certificate_from_json(data: dict | str, dim: int | None = None) -> Certificate:
    """Rebuild a certificate from its JSON form (rationals as strings)."""
    if isinstance(data, str):
        data = json.loads(data)
    if dim is None:
        dim = data.get("dim")
    entries_raw = data.get("terms", [])
    if dim is None:
        raise ValueError("certificate JSON lacks 'dim'; pass the dimension explicitly")
    entries = tuple(
        CertEntry(
            term=parse_polynomial(item["poly"], dim),
            coeff=Fraction(item["coeff"]),
            provenance=item.get("provenance", ""),
        )
        for item in entries_raw
    )
    return Certificate(
        epsilon=Fraction(data["epsilon"]),
        entries=entries,
        family=data.get("family", ""),
    )


@dataclass(frozen=True)
class SearchInfeasible:
    """No representation at the requested epsilon; carries the Farkas dual."""

    farkas: dict[Monomial, Fraction]
    epsilon: Fraction


@dataclass(frozen=True)
class SearchTooLarge:
    columns: int
    limit: int


@dataclass(frozen=True)
class EpsilonUnbounded:
    """Maximize mode found epsilon unbounded (the family spans a negative)."""


@dataclass(frozen=True)
class Exhausted:
    """Per-cap failures from a schedule; not a disproof of positivity."""

    attempts: tuple[tuple[int, object], ...]


@dataclass(frozen=True)
class BoundWitness:
    """lam with certificates for lam - a and lam + a over one family."""

    lam: Fraction
    cert_upper: Certificate  # for lam - a
    cert_lower: Certificate  # for lam + a

    def bounded_element(self, dim: int) -> Polynomial:
        """Recover a from the upper certificate (lower must agree)."""
        a_up = Fraction(self.lam) - self.cert_upper.combination(dim)
        a_low = self.cert_lower.combination(dim) - Fraction(self.lam)
        if a_up != a_low:
            raise ValueError("bound witness certificates disagree on the element")
        return a_up


@dataclass(frozen=True)
class LPProblem:
    """Coefficient-matching program: one row per monomial, one column per term."""

    rows: tuple[Monomial, ...]
    columns: tuple[str, ...]
    program: simplex.LinearProgram


def solve_lp(problem: LPProblem, max_columns: int | None = None) -> simplex.LPResult:
    return simplex.solve(problem.program, max_columns=max_columns)


def build_lp(
    p: Polynomial, family: TermFamily, epsilon: Fraction | None
) -> LPProblem:
    """Encode p - epsilon = sum lambda_j t_j; epsilon is a column when None."""
    if p.dim != family.dim:
        raise ValueError(
            f"polynomial dimension {p.dim} does not match family {family.dim}"
        )
    maximize = epsilon is None
    target = p if maximize else p - Polynomial.constant(p.dim, epsilon)
    monos = set(target.monomials())
    for t in family.terms:
        monos.update(t.monomials())
    monos.add((0,) * p.dim)
    rows = tuple(sorted(monos, key=grlex_key))
    row_of = {m: i for i, m in enumerate(rows)}
    num_cols = len(family.terms) + (1 if maximize else 0)
    matrix = [[Fraction(0)] * num_cols for _ in rows]
    for j, t in enumerate(family.terms):
        for mono, coeff in t.terms.items():
            matrix[row_of[mono]][j] = coeff
    columns = list(family.provenance)
    objective = None
    if maximize:
        eps_col = len(family.terms)
        matrix[row_of[(0,) * p.dim]][eps_col] = Fraction(1)
        columns.append("epsilon")
        objective = tuple(
            Fraction(1) if j == eps_col else Fraction(0) for j in range(num_cols)
        )
    rhs = tuple(target.coefficient(m) for m in rows)
    program = simplex.LinearProgram(
        matrix=tuple(tuple(row) for row in matrix),
        rhs=rhs,
        objective=objective,
    )
    return LPProblem(rows=rows, columns=tuple(columns), program=program)


SearchResult = Certificate | SearchInfeasible | SearchTooLarge | EpsilonUnbounded


def search_certificate(
    p: Polynomial,
    family: TermFamily,
    *,
    epsilon: Fraction | int | str | None = None,
    max_columns: int | None = None,
) -> SearchResult:
    """Decide p in epsilon + cone(family); epsilon=None maximizes epsilon."""
    if epsilon is not None:
        epsilon = Fraction(epsilon)
        if epsilon < 0:
            raise ValueError("fixed epsilon must be nonnegative")
    problem = build_lp(p, family, epsilon)
    outcome = solve_lp(problem, max_columns=max_columns)
    if isinstance(outcome, simplex.TooLarge):
        return SearchTooLarge(columns=outcome.columns, limit=outcome.limit)
    if isinstance(outcome, simplex.Unbounded):
        return EpsilonUnbounded()
    if isinstance(outcome, simplex.Infeasible):
        farkas = {
            mono: y for mono, y in zip(problem.rows, outcome.farkas) if y != 0
        }
        return SearchInfeasible(
            farkas=farkas, epsilon=Fraction(0) if epsilon is None else epsilon
        )
    x = outcome.x
    achieved = x[len(family.terms)] if epsilon is None else epsilon
    entries = tuple(
        CertEntry(term=family.terms[j], coeff=x[j], provenance=family.provenance[j])
        for j in range(len(family.terms))
        if x[j] != 0
    )
    cert = Certificate(epsilon=achieved, entries=entries, family=family.source)
    residual = p - cert.combination(p.dim)
    assert residual.is_zero(), "internal error: certificate does not expand to p"
    return cert


def check_farkas_dual(
    result: SearchInfeasible, p: Polynomial, family: TermFamily
) -> bool:
    """Exact check: y annihilates no column positively yet y(p - eps) > 0."""
    y = result.farkas

    def apply(q: Polynomial) -> Fraction:
        return sum(
            (y[m] * c for m, c in q.terms.items() if m in y), start=Fraction(0)
        )

    target = p - Polynomial.constant(p.dim, result.epsilon)
    if apply(target) <= 0:
        return False
    return all(apply(t) <= 0 for t in family.terms)


def search_with_schedule(
    p: Polynomial,
    builder: Callable[[int], TermFamily],
    caps: Sequence[int],
    epsilon: Fraction | int | str = 0,
    max_columns: int | None = None,
) -> Certificate | Exhausted:
    """Escalate the degree cap until a fixed-epsilon search succeeds."""
    caps = list(caps)
    if any(b <= a for a, b in zip(caps, caps[1:])):
        raise ValueError("caps must be strictly increasing")
    attempts: list[tuple[int, object]] = []
    for cap in caps:
        family = builder(cap)
        result = search_certificate(
            p, family, epsilon=epsilon, max_columns=max_columns
        )
        if isinstance(result, Certificate):
            return result
        attempts.append((cap, result))
    return Exhausted(attempts=tuple(attempts))


def archimedean_bound(
    a: Polynomial,
    family: TermFamily,
    lambda_schedule: Iterable[Fraction | int | str] | None = None,
    max_columns: int | None = None,
) -> BoundWitness | None:
    """Smallest scheduled lam with lam - a and lam + a both in the cone."""
    schedule = (
        DEFAULT_LAMBDA_SCHEDULE if lambda_schedule is None else lambda_schedule
    )
    for lam_raw in schedule:
        lam = Fraction(lam_raw)
        if lam <= 0:
            raise ValueError("lambda candidates must be positive")
        upper = search_certificate(
            Polynomial.constant(a.dim, lam) - a,
            family,
            epsilon=0,
            max_columns=max_columns,
        )
        if not isinstance(upper, Certificate):
            continue
        lower = search_certificate(
            Polynomial.constant(a.dim, lam) + a,
            family,
            epsilon=0,
            max_columns=max_columns,
        )
        if isinstance(lower, Certificate):
            return BoundWitness(lam=lam, cert_upper=upper, cert_lower=lower)
    return None


class FamilyCapError(ValueError):
    """A combinator needed a term product the family does not contain."""


def _indexed_coeffs(cert: Certificate, family: TermFamily) -> dict[int, Fraction]:
    """Certificate as family-indexed coefficients; epsilon joins the 1 term."""
    coeffs: dict[int, Fraction] = {}
    if cert.epsilon:
        coeffs[family.one_index] = cert.epsilon
    for e in cert.entries:
        hit = family.find(e.term)
        if hit is None:
            raise FamilyCapError(
                f"certificate term '{e.term}' is not in family {family.source}"
            )
        idx, scale = hit
        coeffs[idx] = coeffs.get(idx, Fraction(0)) + e.coeff * scale
    return {i: c for i, c in coeffs.items() if c}


def _emit(coeffs: dict[int, Fraction], family: TermFamily) -> tuple[CertEntry, ...]:
    return tuple(
        CertEntry(
            term=family.terms[i], coeff=c, provenance=family.provenance[i]
        )
        for i, c in sorted(coeffs.items())
        if c
    )


def _add_scaled(
    into: dict[int, Fraction], coeffs: dict[int, Fraction], scale: Fraction
) -> None:
    if not scale:
        return
    for i, c in coeffs.items():
        into[i] = into.get(i, Fraction(0)) + scale * c


def _add_product(
    into: dict[int, Fraction],
    left: dict[int, Fraction],
    right: dict[int, Fraction],
    family: TermFamily,
) -> None:
    for i, ci in left.items():
        for j, cj in right.items():
            prod = family.terms[i] * family.terms[j]
            hit = family.find(prod)
            if hit is None:
                raise FamilyCapError(
                    f"product '{family.terms[i]}' * '{family.terms[j]}' "
                    f"(degree {prod.total_degree()}) exceeds family "
                    f"{family.source} with cap {family.degree_cap}"
                )
            idx, scale = hit
            into[idx] = into.get(idx, Fraction(0)) + ci * cj * scale


def _shifted_bound_coeffs(
    witness: BoundWitness, lam: Fraction, family: TermFamily
) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """Coefficients for lam - a and lam + a after raising the bound to lam."""
    gap = lam - witness.lam
    if gap < 0:
        raise ValueError("cannot lower a bound witness")
    upper = _indexed_coeffs(witness.cert_upper, family)
    lower = _indexed_coeffs(witness.cert_lower, family)
    if gap:
        one = family.one_index
        upper[one] = upper.get(one, Fraction(0)) + gap
        lower[one] = lower.get(one, Fraction(0)) + gap
    return upper, lower


def bound_product(
    a_witnesses: Sequence[BoundWitness],
    b_witnesses: Sequence[BoundWitness],
    family: TermFamily,
) -> BoundWitness:
    """Bound witness for sum_i a_i b_i with output level 3*n*lam^2."""
    if not a_witnesses or len(a_witnesses) != len(b_witnesses):
        raise ValueError("need matching nonempty witness lists")
    dim = family.dim
    n = len(a_witnesses)
    lam = max(w.lam for w in list(a_witnesses) + list(b_witnesses))
    a_polys = [w.bounded_element(dim) for w in a_witnesses]
    b_polys = [w.bounded_element(dim) for w in b_witnesses]
    target = Polynomial.zero(dim)
    for ai, bi in zip(a_polys, b_polys):
        target = target + ai * bi

    upper_out: dict[int, Fraction] = {}
    lower_out: dict[int, Fraction] = {}
    for wa, wb in zip(a_witnesses, b_witnesses):
        a_minus, a_plus = _shifted_bound_coeffs(wa, lam, family)
        b_minus, b_plus = _shifted_bound_coeffs(wb, lam, family)
        _add_product(upper_out, a_minus, b_plus, family)
        _add_scaled(upper_out, a_plus, lam)
        _add_scaled(upper_out, b_minus, lam)
        _add_product(lower_out, a_minus, b_minus, family)
        _add_scaled(lower_out, a_plus, lam)
        _add_scaled(lower_out, b_plus, lam)

    level = 3 * n * lam * lam
    cert_upper = Certificate(
        epsilon=Fraction(0), entries=_emit(upper_out, family), family=family.source
    )
    cert_lower = Certificate(
        epsilon=Fraction(0), entries=_emit(lower_out, family), family=family.source
    )
    level_poly = Polynomial.constant(dim, level)
    assert (level_poly - target) == cert_upper.combination(dim), (
        "bound_product upper identity failed to expand"
    )
    assert (level_poly + target) == cert_lower.combination(dim), (
        "bound_product lower identity failed to expand"
    )
    return BoundWitness(lam=level, cert_upper=cert_upper, cert_lower=cert_lower)


def product_certificate(
    cert_c: Certificate,
    cert_d: Certificate,
    bw_c: BoundWitness,
    bw_d: BoundWitness,
    epsilon: Fraction | int | str,
    family: TermFamily,
) -> Certificate:
    """Certificate for c*d + epsilon from memberships and bound witnesses."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    dim = family.dim
    c = cert_c.combination(dim)
    d = cert_d.combination(dim)
    if bw_c.bounded_element(dim) != c:
        raise ValueError("bound witness for c does not match its certificate")
    if bw_d.bounded_element(dim) != d:
        raise ValueError("bound witness for d does not match its certificate")
    lam = max(bw_c.lam, bw_d.lam)

    delta = epsilon / (4 * lam)
    while delta * delta + 2 * delta * lam > epsilon:
        delta /= 2
    slack = epsilon - delta * delta - 2 * delta * lam

    one = family.one_index
    c_shift = _indexed_coeffs(cert_c, family)
    c_shift[one] = c_shift.get(one, Fraction(0)) + delta
    d_shift = _indexed_coeffs(cert_d, family)
    d_shift[one] = d_shift.get(one, Fraction(0)) + delta
    c_minus, _ = _shifted_bound_coeffs(bw_c, lam, family)
    d_minus, _ = _shifted_bound_coeffs(bw_d, lam, family)

    out: dict[int, Fraction] = {}
    _add_product(out, c_shift, d_shift, family)
    _add_scaled(out, c_minus, delta)
    _add_scaled(out, d_minus, delta)
    if slack:
        out[one] = out.get(one, Fraction(0)) + slack

    cert = Certificate(
        epsilon=Fraction(0), entries=_emit(out, family), family=family.source
    )
    target = c * d + epsilon
    assert cert.combination(dim) == target, (
        "product_certificate identity failed to expand"
    )
    return cert


def dagger_probe(
    a: Polynomial,
    family: TermFamily,
    epsilons: Sequence[Fraction | int | str],
    max_columns: int | None = None,
) -> list[tuple[Fraction, SearchResult]]:
    """Probe a + eps in cone(family) along a decreasing epsilon schedule."""
    eps_list = [Fraction(e) for e in epsilons]
    if any(e <= 0 for e in eps_list):
        raise ValueError("epsilon values must be positive")
    if any(b >= a_ for a_, b in zip(eps_list, eps_list[1:])):
        raise ValueError("epsilon schedule must be strictly decreasing")
    results: list[tuple[Fraction, SearchResult]] = []
    for eps in eps_list:
        shifted = a + Polynomial.constant(a.dim, eps)
        results.append(
            (eps, search_certificate(shifted, family, epsilon=0, max_columns=max_columns))
        )
    return results

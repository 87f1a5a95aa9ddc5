"""Degree-truncated families of explicitly nonnegative polynomials.

A term family materializes a finite slice of an infinite cone: all
products of semiring generators up to a degree cap, generator-times-
square-atom terms for quadratic modules, cross products of several
families, and an optional layer of module weights that are applied at
most once per term.  Every family contains the constant 1 and records,
per term, how the term was derived.

Sums of squares are restricted throughout to conic combinations of the
atoms m^2, (m1+m2)^2, (m1-m2)^2 over monomials m, m1 != m2 (the
diagonally dominant subset, which keeps every search a pure LP).

``named_family`` exposes ready-made constructions (cubes, balls, a
paraboloid slab, a hyperbola-bounded region, ...) together with the
semi-algebraic set on which their terms are nonnegative and a rational
bounding box for sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Callable, Iterable, Sequence

from .poly import Monomial, Polynomial, grlex_key, variables

GENERATOR_KINDS = ("semiring", "quadratic-module", "module-weights")

Box = tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class GeneratorSet:
    """A list of generating polynomials plus the closure rule they obey."""

    dim: int
    generators: tuple[Polynomial, ...]
    kind: str
    name: str = ""

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(
                f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}"
            )
        if self.kind != "module-weights" and not self.generators:
            raise ValueError("generator list must be nonempty")
        for g in self.generators:
            if g.dim != self.dim:
                raise ValueError(
                    f"generator dimension {g.dim} does not match ambient {self.dim}"
                )


@dataclass(frozen=True)
class SemiAlgebraicSet:
    """Points where every constraint polynomial is nonnegative."""

    dim: int
    constraints: tuple[Polynomial, ...]
    box: Box | None = None
    name: str = ""

    def __post_init__(self):
        for g in self.constraints:
            if g.dim != self.dim:
                raise ValueError(
                    f"constraint dimension {g.dim} does not match ambient {self.dim}"
                )

    def contains(self, point: Sequence) -> bool:
        if len(point) != self.dim:
            raise ValueError(f"point length {len(point)}, expected {self.dim}")
        return all(g.evaluate(point) >= 0 for g in self.constraints)


@dataclass(frozen=True)
class TermFamily:
    """Finite list of explicit cone members, truncated by total degree."""

    dim: int
    terms: tuple[Polynomial, ...]
    provenance: tuple[str, ...]
    degree_cap: int
    source: str

    def __post_init__(self):
        if len(self.terms) != len(self.provenance):
            raise ValueError("terms and provenance must be aligned")
        if not any(t == Polynomial.one(self.dim) for t in self.terms):
            raise ValueError("a term family must contain the constant 1")
        for t in self.terms:
            if t.dim != self.dim:
                raise ValueError("term dimension mismatch")
            if t.total_degree() > self.degree_cap:
                raise ValueError(
                    f"term '{t}' exceeds degree cap {self.degree_cap}"
                )

    def __len__(self) -> int:
        return len(self.terms)

    @cached_property
    def _lookup(self) -> dict:
        table = {}
        for idx, t in enumerate(self.terms):
            key, lead = _scale_normal_form(t)
            table.setdefault(key, (idx, lead))
        return table

    @cached_property
    def one_index(self) -> int:
        found = self.find(Polynomial.one(self.dim))
        assert found is not None and found[1] == 1
        return found[0]

    def find(self, poly: Polynomial) -> tuple[int, Fraction] | None:
        """Locate ``poly`` up to positive scaling.

        Returns ``(index, scale)`` with ``poly == scale * terms[index]``,
        or None when no positive multiple of ``poly`` is a family term.
        """
        if poly.is_zero():
            return None
        key, lead = _scale_normal_form(poly)
        hit = self._lookup.get(key)
        if hit is None:
            return None
        idx, stored_lead = hit
        return idx, lead / stored_lead

    def __contains__(self, poly: Polynomial) -> bool:
        found = self.find(poly)
        return found is not None and found[1] == 1


def _scale_normal_form(poly: Polynomial):
    """Key invariant under multiplication by positive rationals."""
    lead_mono = max(poly.terms, key=grlex_key)
    lead = abs(poly.terms[lead_mono])
    key = tuple(sorted((m, c / lead) for m, c in poly.terms.items()))
    return key, lead


class _Builder:
    """Accumulates terms, deduplicating up to positive scale."""

    def __init__(self, dim: int, degree_cap: int, source: str):
        self.dim = dim
        self.degree_cap = degree_cap
        self.source = source
        self.terms: list[Polynomial] = []
        self.provenance: list[str] = []
        self.seen: dict = {}
        self.add(Polynomial.one(dim), "1")

    def add(self, poly: Polynomial, prov: str) -> None:
        if poly.is_zero() or poly.total_degree() > self.degree_cap:
            return
        key, _ = _scale_normal_form(poly)
        if key in self.seen:
            return
        self.seen[key] = len(self.terms)
        self.terms.append(poly)
        self.provenance.append(prov)

    def build(self) -> TermFamily:
        return TermFamily(
            dim=self.dim,
            terms=tuple(self.terms),
            provenance=tuple(self.provenance),
            degree_cap=self.degree_cap,
            source=self.source,
        )


def _gen_label(g: Polynomial, power: int = 1) -> str:
    text = f"({g})"
    return text if power == 1 else f"{text}^{power}"


def _product_label(gens: Sequence[Polynomial], exponents: Sequence[int]) -> str:
    parts = [
        _gen_label(g, e) for g, e in zip(gens, exponents) if e > 0
    ]
    return " * ".join(parts) if parts else "1"


def expand_semiring(gens: GeneratorSet, degree_cap: int) -> TermFamily:
    """All products of generators with total degree at most the cap.

    Degree-0 generators must be positive constants; they are kept as
    single terms but excluded from products (positive rescalings add
    nothing to a cone).
    """
    if gens.kind != "semiring":
        raise ValueError(f"expected a semiring generator set, got {gens.kind!r}")
    if degree_cap < 0:
        raise ValueError("degree cap must be nonnegative")
    name = gens.name or "semiring"
    builder = _Builder(gens.dim, degree_cap, f"{name}(cap={degree_cap})")
    positive_degree: list[Polynomial] = []
    for g in gens.generators:
        if g.total_degree() <= 0:
            value = g.constant_term
            if value <= 0:
                raise ValueError(
                    f"constant generator {value} is not positive"
                )
            builder.add(g, str(g))
        else:
            positive_degree.append(g)

    degs = [g.total_degree() for g in positive_degree]
    k = len(positive_degree)
    exponents = [0] * k

    def rec(start: int, current: Polynomial, degree: int) -> None:
        for i in range(start, k):
            nd = degree + degs[i]
            if nd > degree_cap:
                continue
            exponents[i] += 1
            prod = current * positive_degree[i]
            builder.add(prod, _product_label(positive_degree, exponents))
            rec(i, prod, nd)
            exponents[i] -= 1

    rec(0, Polynomial.one(gens.dim), 0)
    return builder.build()


def _monomials_up_to(dim: int, max_degree: int, variables_used: Sequence[int]) -> list[Monomial]:
    monos: list[Monomial] = []
    vs = list(variables_used)

    def rec(idx: int, remaining: int, expo: list[int]) -> None:
        if idx == len(vs):
            monos.append(tuple(expo))
            return
        for e in range(remaining + 1):
            expo[vs[idx]] = e
            rec(idx + 1, remaining - e, expo)
        expo[vs[idx]] = 0

    rec(0, max_degree, [0] * dim)
    monos.sort(key=grlex_key)
    return monos


def square_atoms(
    dim: int, sq_cap: int, atom_vars: Sequence[int] | None = None
) -> list[tuple[Polynomial, str]]:
    """Diagonally dominant square atoms: m^2 and (m1 +/- m2)^2.

    ``atom_vars`` restricts the base monomials to a subset of variables
    (used for per-variable or per-block multiplier algebras).
    """
    if sq_cap < 0:
        raise ValueError("square atom cap must be nonnegative")
    vs = list(range(dim)) if atom_vars is None else sorted(atom_vars)
    monos = _monomials_up_to(dim, sq_cap, vs)
    polys = [Polynomial(dim, {m: 1}) for m in monos]
    atoms: list[tuple[Polynomial, str]] = []
    for p in polys:
        atoms.append((p * p, f"sq({p})"))
    for a, b in itertools.combinations(polys, 2):
        atoms.append(((a + b) * (a + b), f"sq({a + b})"))
        atoms.append(((a - b) * (a - b), f"sq({a - b})"))
    return atoms


def expand_qmodule(
    gens: GeneratorSet,
    sq_cap: int,
    degree_cap: int,
    atom_vars: Sequence[int] | None = None,
) -> TermFamily:
    """Generators (and 1) times diagonally dominant square atoms."""
    if gens.kind != "quadratic-module":
        raise ValueError(
            f"expected a quadratic-module generator set, got {gens.kind!r}"
        )
    if degree_cap < 0:
        raise ValueError("degree cap must be nonnegative")
    name = gens.name or "qmodule"
    builder = _Builder(
        gens.dim, degree_cap, f"{name}(sq_cap={sq_cap}, cap={degree_cap})"
    )
    atoms = square_atoms(gens.dim, sq_cap, atom_vars)
    factors: list[tuple[Polynomial, str | None]] = [(Polynomial.one(gens.dim), None)]
    factors += [(g, str(g)) for g in gens.generators]
    for g, g_label in factors:
        for atom, atom_label in atoms:
            prov = atom_label if g_label is None else f"({g_label}) * {atom_label}"
            builder.add(g * atom, prov)
    return builder.build()


def product_family(families: Sequence[TermFamily], degree_cap: int) -> TermFamily:
    """All cross products t1 * ... * tn, one factor per family, under the cap."""
    if not families:
        raise ValueError("need at least one family")
    dim = families[0].dim
    for fam in families:
        if fam.dim != dim:
            raise ValueError("families must share the ambient dimension")
    source = "product(" + ", ".join(f.source for f in families) + f"; cap={degree_cap})"
    builder = _Builder(dim, degree_cap, source)

    def rec(idx: int, current: Polynomial, degree: int, labels: list[str]) -> None:
        if idx == len(families):
            prov = " * ".join(l for l in labels if l != "1") or "1"
            builder.add(current, prov)
            return
        fam = families[idx]
        for t, prov in zip(fam.terms, fam.provenance):
            d = t.total_degree()
            if degree + d > degree_cap:
                continue
            labels.append(prov)
            rec(idx + 1, current * t, degree + d, labels)
            labels.pop()

    rec(0, Polynomial.one(dim), 0, [])
    return builder.build()


def module_family(
    weights: GeneratorSet, base: TermFamily, degree_cap: int
) -> TermFamily:
    """Apply each weight at most once per base term (no mixed weights).

    Terms are f_j * t with f_j ranging over 1 and the weight list; the
    provenance marks the weight as ``w<j>`` so the no-mixed-products
    structure is checkable on any certificate.
    """
    if weights.kind != "module-weights":
        raise ValueError(
            f"expected module weights, got {weights.kind!r}"
        )
    if weights.dim != base.dim:
        raise ValueError("weight dimension does not match the base family")
    source = f"module(weights={len(weights.generators)}, base={base.source}; cap={degree_cap})"
    builder = _Builder(base.dim, degree_cap, source)
    for t, prov in zip(base.terms, base.provenance):
        builder.add(t, prov)
    for j, f in enumerate(weights.generators, start=1):
        for t, prov in zip(base.terms, base.provenance):
            builder.add(f * t, f"w{j}({f}) * {prov}")
    return builder.build()


def archimedean_atoms(family: TermFamily) -> list[Polynomial]:
    """Algebra generators whose boundedness makes the ambient cone Archimedean."""
    return list(variables(family.dim))


# ---------------------------------------------------------------------------
# Named family catalog
# ---------------------------------------------------------------------------


def _fr(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _unit_box(dim: int) -> Box:
    return tuple(((Fraction(-1), Fraction(1)) for _ in range(dim)))


def _bernstein_axis(dim: int, i: int, cap: int) -> TermFamily:
    x = Polynomial.variable(dim, i)
    gens = GeneratorSet(dim, (1 - x, 1 + x), "semiring", f"interval x{i + 1}")
    return expand_semiring(gens, cap)


def _markoff_axis(dim: int, i: int, sq_cap: int, cap: int) -> TermFamily:
    x = Polynomial.variable(dim, i)
    gens = GeneratorSet(dim, (1 - x * x,), "quadratic-module", f"interval x{i + 1}")
    return expand_qmodule(gens, sq_cap, cap, atom_vars=(i,))


def _cube_set(dim: int, squared: bool) -> SemiAlgebraicSet:
    cons: list[Polynomial] = []
    for i in range(dim):
        x = Polynomial.variable(dim, i)
        if squared:
            cons.append(1 - x * x)
        else:
            cons.extend((1 - x, 1 + x))
    return SemiAlgebraicSet(dim, tuple(cons), _unit_box(dim), "cube")


def _build_cube_bernstein(dim: int, cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    fams = [_bernstein_axis(dim, i, cap) for i in range(dim)]
    fam = product_family(fams, cap)
    fam = _with_source(fam, f"cube_bernstein(dim={dim}, cap={cap})")
    return fam, _cube_set(dim, squared=False)


def _build_cube_markoff(
    dim: int, cap: int, sq_cap: int = 1
) -> tuple[TermFamily, SemiAlgebraicSet]:
    fams = [_markoff_axis(dim, i, sq_cap, cap) for i in range(dim)]
    fam = product_family(fams, cap)
    fam = _with_source(fam, f"cube_markoff(dim={dim}, sq_cap={sq_cap}, cap={cap})")
    return fam, _cube_set(dim, squared=True)


def _build_cube_mixed(
    r: int, s: int, cap: int, sq_cap: int = 1
) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = r + s
    fams = [_bernstein_axis(dim, i, cap) for i in range(r)]
    fams += [_markoff_axis(dim, r + j, sq_cap, cap) for j in range(s)]
    fam = product_family(fams, cap)
    fam = _with_source(fam, f"cube_mixed(r={r}, s={s}, sq_cap={sq_cap}, cap={cap})")
    cons: list[Polynomial] = []
    for i in range(r):
        x = Polynomial.variable(dim, i)
        cons.extend((1 - x, 1 + x))
    for j in range(s):
        x = Polynomial.variable(dim, r + j)
        cons.append(1 - x * x)
    kset = SemiAlgebraicSet(dim, tuple(cons), _unit_box(dim), "cube")
    return fam, kset


def _build_rect_ball(
    r: int, s: int, cap: int, sq_cap: int = 1
) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = r + s
    ball = Polynomial.one(dim)
    for j in range(s):
        x = Polynomial.variable(dim, r + j)
        ball = ball - x * x
    fams = [_bernstein_axis(dim, i, cap) for i in range(r)]
    gens = GeneratorSet(dim, (ball,), "quadratic-module", "ball block")
    fams.append(expand_qmodule(gens, sq_cap, cap, atom_vars=range(r, dim)))
    fam = product_family(fams, cap)
    fam = _with_source(fam, f"rect_ball(r={r}, s={s}, sq_cap={sq_cap}, cap={cap})")
    cons = []
    for i in range(r):
        x = Polynomial.variable(dim, i)
        cons.extend((1 - x, 1 + x))
    cons.append(ball)
    kset = SemiAlgebraicSet(dim, tuple(cons), _unit_box(dim), "rect_ball")
    return fam, kset


def _build_ball_semiring(dim: int, cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    xs = variables(dim)
    ball = Polynomial.one(dim)
    for x in xs:
        ball = ball - x * x
    gens: list[Polynomial] = [ball]
    for x in xs:
        gens.append((1 - x) * (1 - x))
        gens.append((1 + x) * (1 + x))
    fam = expand_semiring(
        GeneratorSet(dim, tuple(gens), "semiring", "ball"), cap
    )
    fam = _with_source(fam, f"ball_semiring(dim={dim}, cap={cap})")
    kset = SemiAlgebraicSet(dim, (ball,), _unit_box(dim), "unit ball")
    return fam, kset


def _ceil_sqrt(value: Fraction) -> Fraction:
    """A rational upper bound h >= sqrt(value) (tight to 1/denominator)."""
    num, den = value.numerator, value.denominator
    root = isqrt(num * den)
    if root * root == num * den:
        return Fraction(root, den)
    return Fraction(root + 1, den)


def _build_shifted_ball(
    dim: int = 2,
    cap: int = 4,
    center: Sequence = (Fraction(5, 4), Fraction(5, 4)),
    rho2: Fraction | str = Fraction(9, 8),
) -> tuple[TermFamily, SemiAlgebraicSet]:
    rho2 = _fr(rho2)
    if rho2 <= 0:
        raise ValueError("squared radius must be positive")
    center = tuple(_fr(c) for c in center)
    if len(center) != dim:
        raise ValueError(f"center length {len(center)}, expected {dim}")
    xs = variables(dim)
    shifts = [xs[i] - center[i] for i in range(dim)]
    ball = Polynomial.constant(dim, rho2)
    for u in shifts:
        ball = ball - u * u
    # The radius itself may be irrational; only even powers of it are
    # rational, so the per-axis generators are rho^2 - u_i^2 and u_i^2.
    gens: list[Polynomial] = [ball]
    for u in shifts:
        gens.append(Polynomial.constant(dim, rho2) - u * u)
        gens.append(u * u)
    fam = expand_semiring(
        GeneratorSet(dim, tuple(gens), "semiring", "shifted ball"), cap
    )
    fam = _with_source(
        fam,
        f"shifted_ball(dim={dim}, center=({':'.join(str(c) for c in center)}), "
        f"rho2={rho2}, cap={cap})",
    )
    h = _ceil_sqrt(rho2)
    box = tuple((c - h, c + h) for c in center)
    kset = SemiAlgebraicSet(dim, (ball,), box, "shifted ball")
    return fam, kset


def _build_paraboloid(cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = 3
    x1, x2, x3 = variables(dim)
    bowl = x3 - x1 * x1 - x2 * x2
    gens = (
        bowl,
        x3,
        1 - x3,
        (1 - x1) * (1 - x1),
        (1 + x1) * (1 + x1),
        (1 - x2) * (1 - x2),
        (1 + x2) * (1 + x2),
    )
    fam = expand_semiring(GeneratorSet(dim, gens, "semiring", "paraboloid"), cap)
    fam = _with_source(fam, f"paraboloid(cap={cap})")
    box = (
        (Fraction(-1), Fraction(1)),
        (Fraction(-1), Fraction(1)),
        (Fraction(0), Fraction(1)),
    )
    kset = SemiAlgebraicSet(dim, (bowl, x3, 1 - x3), box, "paraboloid slab")
    return fam, kset


def _build_kss71(cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = 2
    x1, x2 = variables(dim)
    f1 = x2 - (x1 - Fraction(1, 2)) ** 2
    f2 = x2 - x1 * x1
    gens = (1 - f1, 1 + f1, 1 - f2, 1 + f2)
    fam = expand_semiring(GeneratorSet(dim, gens, "semiring", "kss71"), cap)
    fam = _with_source(fam, f"kss71(cap={cap})")
    # |f1 - f2| <= 2 pins x1 to [-7/4, 9/4]; the f2 band then pins x2.
    box = (
        (Fraction(-7, 4), Fraction(9, 4)),
        (Fraction(-1), Fraction(97, 16)),
    )
    kset = SemiAlgebraicSet(dim, gens, box, "band intersection")
    return fam, kset


def _jp_weights(dim: int = 2) -> tuple[Polynomial, Polynomial, Polynomial]:
    x1, x2 = variables(dim)
    f1 = x1 - Fraction(1, 2)
    f2 = x2 - Fraction(1, 2)
    f3 = 1 - x1 * x2
    return f1, f2, f3


def _jp_set() -> SemiAlgebraicSet:
    f1, f2, f3 = _jp_weights()
    box = ((Fraction(1, 2), Fraction(2)), (Fraction(1, 2), Fraction(2)))
    return SemiAlgebraicSet(2, (f1, f2, f3), box, "hyperbola corner")


def _build_jacobi_prestel_case1(cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = 2
    fams = []
    for i in range(dim):
        x = Polynomial.variable(dim, i)
        gens = GeneratorSet(
            dim, (2 - x, x - Fraction(1, 2)), "semiring", f"interval x{i + 1}"
        )
        fams.append(expand_semiring(gens, cap))
    base = product_family(fams, cap)
    _, _, f3 = _jp_weights()
    weights = GeneratorSet(dim, (f3,), "module-weights", "hyperbola weight")
    fam = module_family(weights, base, cap)
    fam = _with_source(fam, f"jacobi_prestel_case1(cap={cap})")
    return fam, _jp_set()


def _build_jacobi_prestel_case1_pre(
    cap: int, sq_cap: int = 1
) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = 2
    fams = []
    for i in range(dim):
        x = Polynomial.variable(dim, i)
        g = (2 - x) * (x - Fraction(1, 2))
        gens = GeneratorSet(dim, (g,), "quadratic-module", f"interval x{i + 1}")
        fams.append(expand_qmodule(gens, sq_cap, cap, atom_vars=(i,)))
    base = product_family(fams, cap)
    weights = GeneratorSet(dim, _jp_weights(), "module-weights", "defining weights")
    fam = module_family(weights, base, cap)
    fam = _with_source(
        fam, f"jacobi_prestel_case1_pre(sq_cap={sq_cap}, cap={cap})"
    )
    return fam, _jp_set()


def _build_jacobi_prestel_case2(cap: int) -> tuple[TermFamily, SemiAlgebraicSet]:
    base, _ = _build_shifted_ball(
        dim=2, cap=cap, center=(Fraction(5, 4), Fraction(5, 4)), rho2=Fraction(9, 8)
    )
    weights = GeneratorSet(2, _jp_weights(), "module-weights", "defining weights")
    fam = module_family(weights, base, cap)
    fam = _with_source(fam, f"jacobi_prestel_case2(cap={cap})")
    return fam, _jp_set()


def _build_separated_square(
    cap: int, sq_cap: int = 1
) -> tuple[TermFamily, SemiAlgebraicSet]:
    dim = 2
    x1, x2 = variables(dim)
    builder = _Builder(dim, cap, f"separated_square(sq_cap={sq_cap}, cap={cap})")
    atoms1 = square_atoms(dim, sq_cap, atom_vars=(0,))
    atoms2 = square_atoms(dim, sq_cap, atom_vars=(1,))
    carriers: list[tuple[Polynomial, str]] = [
        (Polynomial.one(dim), "1"),
        (1 - x1 * x1, "(1 - x1^2)"),
        (1 - x2 * x2, "(1 - x2^2)"),
    ]
    for g, g_label in carriers:
        for a1, l1 in atoms1:
            for a2, l2 in atoms2:
                prov = " * ".join(p for p in (g_label, l1, l2) if p != "1") or "1"
                builder.add(g * a1 * a2, prov)
    fam = builder.build()
    box = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))
    kset = SemiAlgebraicSet(
        dim, (x1, 1 - x1, x2, 1 - x2), box, "unit square"
    )
    return fam, kset


def _with_source(fam: TermFamily, source: str) -> TermFamily:
    return TermFamily(
        dim=fam.dim,
        terms=fam.terms,
        provenance=fam.provenance,
        degree_cap=fam.degree_cap,
        source=source,
    )


FAMILY_CATALOG: dict[str, Callable] = {
    "cube_bernstein": _build_cube_bernstein,
    "cube_markoff": _build_cube_markoff,
    "cube_mixed": _build_cube_mixed,
    "rect_ball": _build_rect_ball,
    "ball_semiring": _build_ball_semiring,
    "shifted_ball": _build_shifted_ball,
    "paraboloid": _build_paraboloid,
    "kss71": _build_kss71,
    "jacobi_prestel_case1": _build_jacobi_prestel_case1,
    "jacobi_prestel_case1_pre": _build_jacobi_prestel_case1_pre,
    "jacobi_prestel_case2": _build_jacobi_prestel_case2,
    "separated_square": _build_separated_square,
}


def named_family(name: str, **params) -> tuple[TermFamily, SemiAlgebraicSet]:
    """Build a catalogued family and the set its terms are nonnegative on."""
    builder = FAMILY_CATALOG.get(name)
    if builder is None:
        known = ", ".join(sorted(FAMILY_CATALOG))
        raise ValueError(f"unknown family {name!r}; catalog: {known}")
    try:
        return builder(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for family {name!r}: {exc}") from exc

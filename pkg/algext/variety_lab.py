"""
algext.variety_lab
~~~~~~~~~~~~~~~~~~
Sparse multivariate polynomials, affine varieties given by generators,
rational point enumeration and algebraic sources f(U_{V(F_q)}).

Dimensions are estimated from point counts and are always labeled
HEURISTIC; nothing here computes dimension or irreducibility symbolically.
"""
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .constants import DFT_BUDGET, ENUMERATION_BUDGET
from .errors import (AllCountsZero, ArityMismatch, BoundViolation,
                     BudgetExceeded, CtxMismatch, EmptyVariety)
from .finite_field import (FieldCtx, FieldElement, field_token, make_field,
                           parse_field_token, power_mod_array)
from .group_fourier import Carrier, FiniteDistribution, bias_spectrum

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]
Exponents = Tuple[int, ...]

NEG_INF = float("-inf")
HEURISTIC = "HEURISTIC"

_BLOCK = 2 ** 18


class MultiPoly:
    """A sparse polynomial in ``arity`` variables.

    Bound to a field (``ctx`` given), coefficients are encoded elements of
    that field and terms merge, scale and multiply with its arithmetic.
    Unbound, coefficients are integers c standing for c·1, i.e. the
    polynomial lives over Z and is reduced when bound; corpus entries are
    stored this way. Either way equal exponents are merged and zero terms
    dropped.
    """

    def __init__(self, arity: int,
                 terms: Iterable[Tuple[int, Sequence[int]]] = (),
                 ctx: Optional[FieldCtx] = None) -> None:
        self.arity = arity
        self.ctx = ctx
        merged: Dict[Exponents, int] = {}
        for coeff, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ArityMismatch(
                    f"exponent vector {exps} does not have {arity} entries")
            if ctx is None:
                merged[exps] = merged.get(exps, 0) + int(coeff)
            else:
                merged[exps] = ctx.add(merged.get(exps, 0), ctx.coerce(coeff))
        self.terms: Dict[Exponents, int] = {
            e: c for e, c in sorted(merged.items()) if c != 0}
        self.degree: float = max((sum(e) for e in self.terms), default=NEG_INF)

    @classmethod
    def variable(cls, arity: int, index: int, power: int = 1,
                 coeff: int = 1, ctx: Optional[FieldCtx] = None) -> "MultiPoly":
        exps = [0] * arity
        exps[index] = power
        return cls(arity, [(coeff, exps)], ctx)

    @classmethod
    def constant(cls, arity: int, value: int,
                 ctx: Optional[FieldCtx] = None) -> "MultiPoly":
        return cls(arity, [(value, [0] * arity)], ctx)

    def is_zero(self) -> bool:
        return not self.terms

    def bind(self, ctx: FieldCtx) -> "MultiPoly":
        """The polynomial over ``ctx``; unbound coefficients c become c·1.

        :raises CtxMismatch: already bound to another field
        """
        if self.ctx is not None:
            if self.ctx != ctx:
                raise CtxMismatch(f"polynomial over {self.ctx} used in {ctx}")
            return self
        return MultiPoly(self.arity, [(ctx.scale(c, 1), e) for e, c in self.terms.items()],
                         ctx)

    def _common(self, other: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        if other.arity != self.arity:
            raise ArityMismatch(f"arities {self.arity} and {other.arity} differ")
        ctx = self.ctx if self.ctx is not None else other.ctx
        if ctx is None:
            return self, other
        return self.bind(ctx), other.bind(ctx)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        left, right = self._common(other)
        return MultiPoly(self.arity,
                         [(c, e) for e, c in left.terms.items()] +
                         [(c, e) for e, c in right.terms.items()], left.ctx)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        left, right = self._common(other)
        ctx = left.ctx
        return MultiPoly(self.arity, [
            (c1 * c2 if ctx is None else ctx.mul(c1, c2),
             tuple(a + b for a, b in zip(e1, e2)))
            for e1, c1 in left.terms.items()
            for e2, c2 in right.terms.items()], ctx)

    def scale(self, factor: int) -> "MultiPoly":
        """Multiplies by an integer (unbound) or an encoded element (bound).
        """
        ctx = self.ctx
        if ctx is None:
            return MultiPoly(self.arity, [(c * factor, e) for e, c in self.terms.items()])
        factor = ctx.coerce(factor)
        return MultiPoly(self.arity, [(ctx.mul(c, factor), e) for e, c in self.terms.items()],
                         ctx)

    def coefficient(self, c: int, ctx: FieldCtx) -> int:
        """Encoded value in ``ctx`` of a stored coefficient.
        """
        return ctx.scale(c, 1) if self.ctx is None else c

    def embed(self, tower: "FieldTower") -> "MultiPoly":
        """The same polynomial with coefficients moved into a tower's top field.
        """
        if self.ctx is None or self.ctx == tower.ctx:
            return self.bind(tower.ctx)
        if self.ctx != tower.base:
            raise CtxMismatch(f"polynomial over {self.ctx} embedded from {tower.base}")
        return MultiPoly(self.arity, [(tower.embed(c), e) for e, c in self.terms.items()],
                         tower.ctx)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiPoly) and self.arity == other.arity and \
            self.ctx == other.ctx and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms.items():
            mono = "*".join(f"X{i + 1}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(exps) if e)
            parts.append(f"{coeff}*{mono}" if mono and coeff != 1 else (mono or str(coeff)))
        return " + ".join(parts)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "arity": self.arity,
            "terms": [{"coeff": c, "exps": list(e)} for e, c in self.terms.items()]}
        if self.ctx is not None:
            data["field"] = field_token(self.ctx)
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "MultiPoly":
        field = data.get("field")
        return cls(int(data["arity"]),
                   [(t["coeff"], t["exps"]) for t in data.get("terms", [])],
                   parse_field_token(field) if field else None)


def _eval(poly: MultiPoly, values: Sequence[int], ctx: FieldCtx,
          cache: Optional[Dict[Tuple[int, int], int]] = None) -> int:
    if poly.ctx is not None and poly.ctx != ctx:
        raise CtxMismatch(f"polynomial over {poly.ctx} evaluated in {ctx}")
    cache = {} if cache is None else cache
    acc = 0
    for exps, coeff in poly.terms.items():
        term = poly.coefficient(coeff, ctx)
        for var, power in enumerate(exps):
            if not power or not term:
                continue
            key = (var, power)
            if key not in cache:
                cache[key] = ctx.pow(values[var], power)
            term = ctx.mul(term, cache[key])
        if term:
            acc = ctx.add(acc, term)
    return acc


def eval_poly(poly: MultiPoly, point: Sequence[Any],
              ctx: Optional[FieldCtx] = None) -> FieldElement:
    """Evaluates a polynomial at a point of F_q^r.

    :param point: encoded values or FieldElements
    :param ctx: (optional) field, taken from the point when omitted
    :raises ArityMismatch: point has the wrong length
    :rtype: FieldElement
    """
    if len(point) != poly.arity:
        raise ArityMismatch(f"point of length {len(point)} for arity {poly.arity}")
    if ctx is None:
        ctx = poly.ctx if poly.ctx is not None else \
            next(v.ctx for v in point if isinstance(v, FieldElement))
    values = [ctx.coerce(v) for v in point]
    return FieldElement(ctx, _eval(poly, values, ctx))


def eval_poly_array(poly: MultiPoly, columns: Sequence[np.ndarray],
                    p: int) -> np.ndarray:
    """Evaluates over many points of a prime field at once.

    :param columns: one int64 array per variable
    """
    if poly.ctx is not None and (poly.ctx.m, poly.ctx.p) != (1, p):
        raise CtxMismatch(f"polynomial over {poly.ctx} evaluated over F_{p}")
    size = len(columns[0]) if columns else 1
    acc = np.zeros(size, dtype=np.int64)
    powers: Dict[Tuple[int, int], np.ndarray] = {}
    for exps, coeff in poly.terms.items():
        term = np.full(size, coeff % p, dtype=np.int64)
        for var, power in enumerate(exps):
            if power:
                key = (var, power)
                if key not in powers:
                    powers[key] = power_mod_array(columns[var], power, p)
                term = term * powers[key] % p
        acc = (acc + term) % p
    return acc


def _vectorizable(ctx: FieldCtx) -> bool:
    return ctx.m == 1 and ctx.p < 2 ** 31


class PolynomialMap:
    """f = (f_1, ..., f_n): A^r -> A^n.

    An optional span basis h_1, ..., h_s (degrees non-increasing) certifies
    that every component is sum_j a_ij h_j + a_i0; ``span_coeffs`` row i
    holds (a_i1, ..., a_is, a_i0).
    """

    def __init__(self, source_arity: int, components: Sequence[MultiPoly],
                 span_basis: Optional[Sequence[MultiPoly]] = None,
                 span_coeffs: Optional[Sequence[Sequence[int]]] = None) -> None:
        for comp in components:
            if comp.arity != source_arity:
                raise ArityMismatch(
                    f"component of arity {comp.arity} in a map from A^{source_arity}")
        self.source_arity = source_arity
        self.components = tuple(components)
        self.target_arity = len(self.components)
        self.span_basis = tuple(span_basis) if span_basis else None
        self.span_coeffs = tuple(tuple(row) for row in span_coeffs) if span_coeffs else None
        if self.span_basis is not None:
            self._check_span()

    def _check_span(self) -> None:
        degrees = [h.degree for h in self.span_basis]
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            raise BoundViolation(f"span basis degrees {degrees} are not non-increasing")
        if self.span_coeffs is None or len(self.span_coeffs) != self.target_arity:
            raise BoundViolation("span basis given without one coefficient row per component")
        ctx = next((h.ctx for h in self.components + self.span_basis if h.ctx is not None),
                   None)
        for comp, row in zip(self.components, self.span_coeffs):
            if len(row) != len(self.span_basis) + 1:
                raise BoundViolation(f"span coefficient row {row} has the wrong length")
            rebuilt = MultiPoly.constant(self.source_arity, row[-1], ctx)
            for coeff, basis in zip(row, self.span_basis):
                rebuilt = rebuilt + (basis if ctx is None else basis.bind(ctx)).scale(coeff)
            if rebuilt != (comp if ctx is None else comp.bind(ctx)):
                raise BoundViolation(f"component {comp} is not reproduced by {row}")

    def h_degrees(self) -> List[int]:
        """deg h_1 >= deg h_2 >= ...; components stand in when no basis is given.
        """
        source = self.span_basis if self.span_basis is not None else self.components
        return sorted((max(int(h.degree), 0) for h in source if not h.is_zero()),
                      reverse=True)

    def evaluate(self, point: Sequence[int], ctx: FieldCtx) -> Point:
        cache: Dict[Tuple[int, int], int] = {}
        values = [ctx.coerce(v) for v in point]
        return tuple(_eval(c, values, ctx, cache) for c in self.components)

    def evaluate_array(self, columns: Sequence[np.ndarray], p: int) -> List[np.ndarray]:
        return [eval_poly_array(c, columns, p) for c in self.components]

    def embed(self, tower: "FieldTower") -> "PolynomialMap":
        return PolynomialMap(self.source_arity, [c.embed(tower) for c in self.components])

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "source_arity": self.source_arity,
            "components": [c.to_json() for c in self.components],
        }
        if self.span_basis is not None:
            data["span_basis"] = [h.to_json() for h in self.span_basis]
            data["span_coeffs"] = [list(row) for row in self.span_coeffs]
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PolynomialMap":
        basis = data.get("span_basis")
        return cls(int(data["source_arity"]),
                   [MultiPoly.from_json(c) for c in data["components"]],
                   [MultiPoly.from_json(h) for h in basis] if basis else None,
                   data.get("span_coeffs"))


class VarietySpec:
    """V = V(g_1, ..., g_t) in A^r.

    :attribute parametrization: optional injective polynomial map A^j -> A^r
        onto V(F_q); enumeration uses it and checks every produced point
    :attribute absolutely_irreducible: property assumed by construction of
        the corpus entry, never verified
    """

    def __init__(self, arity: int, generators: Sequence[MultiPoly] = (),
                 declared_dim: Optional[int] = None,
                 degree_bound: Optional[int] = None,
                 parametrization: Optional[PolynomialMap] = None,
                 absolutely_irreducible: bool = False,
                 name: str = "") -> None:
        for gen in generators:
            if gen.arity != arity:
                raise ArityMismatch(f"generator of arity {gen.arity} in A^{arity}")
        if parametrization is not None and parametrization.target_arity != arity:
            raise ArityMismatch("parametrization does not land in the ambient space")
        self.arity = arity
        self.generators = tuple(g for g in generators if not g.is_zero())
        self.declared_dim = declared_dim
        self.degree_bound = degree_bound if degree_bound is not None else \
            math.prod(max(int(g.degree), 0) for g in self.generators)
        self.parametrization = parametrization
        self.absolutely_irreducible = absolutely_irreducible
        self.name = name

    def embed(self, tower: "FieldTower") -> "VarietySpec":
        return VarietySpec(
            self.arity, [g.embed(tower) for g in self.generators],
            self.declared_dim, self.degree_bound,
            self.parametrization.embed(tower) if self.parametrization else None,
            self.absolutely_irreducible, self.name)

    def contains(self, point: Sequence[int], ctx: FieldCtx) -> bool:
        values = [ctx.coerce(v) for v in point]
        cache: Dict[Tuple[int, int], int] = {}
        return all(_eval(g, values, ctx, cache) == 0 for g in self.generators)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "arity": self.arity,
            "generators": [g.to_json() for g in self.generators],
            "declared_dim": self.declared_dim,
            "degree_bound": self.degree_bound,
            "absolutely_irreducible": self.absolutely_irreducible,
            "name": self.name,
        }
        if self.parametrization is not None:
            data["parametrization"] = self.parametrization.to_json()
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "VarietySpec":
        param = data.get("parametrization")
        return cls(int(data["arity"]),
                   [MultiPoly.from_json(g) for g in data.get("generators", [])],
                   data.get("declared_dim"), data.get("degree_bound"),
                   PolynomialMap.from_json(param) if param else None,
                   bool(data.get("absolutely_irreducible", False)),
                   data.get("name", ""))


class AlgebraicSourceSpec:
    """An (n, k, d) algebraic source: a variety, a map into A^n and the
    budget d >= deg V * prod_{i <= k} deg h_i.

    :raises BoundViolation: the degree budget fails
    """

    def __init__(self, variety: VarietySpec, poly_map: PolynomialMap,
                 n: int, k: int, d: int) -> None:
        if poly_map.source_arity != variety.arity:
            raise ArityMismatch(
                f"map from A^{poly_map.source_arity} on a variety in A^{variety.arity}")
        if poly_map.target_arity != n:
            raise ArityMismatch(f"map lands in A^{poly_map.target_arity}, expected A^{n}")
        self.variety = variety
        self.map = poly_map
        self.n = n
        self.k = k
        self.d = d
        budget = degree_budget(self)
        if not budget["d_satisfied"]:
            raise BoundViolation(
                f"deg V * prod h = {budget['bezout_deg_V'] * budget['product_of_top_k_h_degrees']}"
                f" exceeds d = {d}")


class FieldTower:
    """F_{q^i} over a base F_q, with the embedding of the base.
    """

    def __init__(self, base: FieldCtx, degree: int) -> None:
        self.base = base
        self.degree = degree
        self.ctx = make_field(base.p, base.m * degree) if degree > 1 else base
        self._root = self._find_root() if base.m > 1 and degree > 1 else None

    def _find_root(self) -> int:
        for candidate in self.ctx.elements():
            acc = 0
            for power, coeff in enumerate(self.base.modulus):
                if coeff:
                    acc = self.ctx.add(acc, self.ctx.scale(
                        coeff, self.ctx.pow(candidate, power)))
            if acc == 0:
                return candidate
        raise BoundViolation("base modulus has no root in the extension")

    def embed(self, value: int) -> int:
        """Image of a base element (any integer, see :class:`MultiPoly`).
        """
        if self._root is None:
            return value if 0 <= value < self.base.q else value % self.base.p
        if not 0 <= value < self.base.q:
            return value % self.base.p
        acc = 0
        for power, coeff in enumerate(self.base.coeffs(value)):
            if coeff:
                acc = self.ctx.add(acc, self.ctx.scale(coeff, self.ctx.pow(self._root, power)))
        return acc


# === enumeration ===
def _grid_block(start: int, stop: int, arity: int, q: int) -> List[np.ndarray]:
    flat = np.arange(start, stop, dtype=np.int64)
    columns = []
    for _ in range(arity):
        flat, digit = np.divmod(flat, q)
        columns.append(digit)
    return columns[::-1]


def _scan_range(generators: Sequence[MultiPoly], arity: int, p: int,
                start: int, stop: int) -> List[Point]:
    found: List[Point] = []
    for lo in range(start, stop, _BLOCK):
        columns = _grid_block(lo, min(stop, lo + _BLOCK), arity, p)
        keep = np.arange(len(columns[0]) if columns else 1)
        for gen in generators:
            if not keep.size:
                break
            values = eval_poly_array(gen, [c[keep] for c in columns], p)
            keep = keep[values == 0]
        if keep.size:
            stacked = np.stack([c[keep] for c in columns], axis=1)
            found.extend(tuple(int(v) for v in row) for row in stacked)
    return found


def _cost_check(cost: int, budget: int, what: str) -> None:
    if cost > budget:
        raise BudgetExceeded(f"{what} needs {cost} evaluations, budget is {budget}")


def enumerate_points(variety: VarietySpec, ctx: FieldCtx,
                     budget: int = ENUMERATION_BUDGET, shards: int = 1) -> List[Point]:
    """V(F_q), lexicographically sorted.

    Uses the parametrization when there is one, otherwise scans F_q^r,
    sharded over the leading coordinate when ``shards > 1``.

    :raises BudgetExceeded: the scan exceeds ``budget`` evaluations
    """
    if variety.parametrization is not None:
        return _enumerate_parametrized(variety, ctx, budget)

    r = variety.arity
    total = ctx.q ** r
    _cost_check(total, budget, f"scan of A^{r} over F_{ctx.q}")
    if not _vectorizable(ctx):
        return [pt for pt in product(range(ctx.q), repeat=r)
                if variety.contains(pt, ctx)]
    if r == 0:
        return [()]
    if shards <= 1:
        return _scan_range(variety.generators, r, ctx.p, 0, total)

    step = ctx.q ** (r - 1)
    chunk = -(-ctx.q // shards)
    ranges = [(lo * step, min(ctx.q, lo + chunk) * step)
              for lo in range(0, ctx.q, chunk)]
    logger.debug("scanning %d points in %d shards", total, len(ranges))
    with ProcessPoolExecutor(max_workers=shards) as pool:
        parts = pool.map(_scan_range, *zip(*[
            (variety.generators, r, ctx.p, lo, hi) for lo, hi in ranges]))
    points: List[Point] = []
    for part in parts:
        points.extend(part)
    return points


def _enumerate_parametrized(variety: VarietySpec, ctx: FieldCtx,
                            budget: int) -> List[Point]:
    param = variety.parametrization
    j = param.source_arity
    _cost_check(ctx.q ** j, budget, f"parametrization over F_{ctx.q}^{j}")
    if _vectorizable(ctx):
        columns = _grid_block(0, ctx.q ** j, j, ctx.q)
        coords = param.evaluate_array(columns, ctx.p)
        keep = np.ones(len(coords[0]) if coords else 1, dtype=bool)
        for gen in variety.generators:
            keep &= eval_poly_array(gen, coords, ctx.p) == 0
        if not keep.all():
            raise BoundViolation(f"parametrization of {variety.name or 'variety'} "
                                 "leaves the variety")
        stacked = np.stack(coords, axis=1)
        points = {tuple(int(v) for v in row) for row in stacked}
    else:
        points = set()
        for params in product(range(ctx.q), repeat=j):
            point = param.evaluate(params, ctx)
            if not variety.contains(point, ctx):
                raise BoundViolation(f"parametrization of {variety.name or 'variety'} "
                                     "leaves the variety")
            points.add(point)
    return sorted(points)


def build_source(spec: AlgebraicSourceSpec, ctx: FieldCtx,
                 budget: int = ENUMERATION_BUDGET, shards: int = 1) -> FiniteDistribution:
    """Exact distribution of f(x) for x uniform on V(F_q).

    :raises EmptyVariety: V(F_q) is empty
    """
    points = enumerate_points(spec.variety, ctx, budget, shards)
    if not points:
        raise EmptyVariety(f"{spec.variety.name or 'variety'} has no points over F_{ctx.q}")
    carrier = Carrier.field_power(ctx, spec.n)
    return FiniteDistribution(carrier, image_counts(spec.map, points, ctx))


def image_counts(poly_map: PolynomialMap, points: Sequence[Point],
                 ctx: FieldCtx) -> Dict[Point, int]:
    """Multiplicities of f over a list of points.
    """
    if not points:
        return {}
    if _vectorizable(ctx) and poly_map.source_arity:
        array = np.asarray(points, dtype=np.int64)
        columns = [array[:, i] for i in range(array.shape[1])]
        images = np.stack(poly_map.evaluate_array(columns, ctx.p), axis=1) \
            if poly_map.target_arity else np.zeros((len(points), 0), dtype=np.int64)
        return dict(Counter(tuple(int(v) for v in row) for row in images))
    return dict(Counter(poly_map.evaluate(pt, ctx) for pt in points))


def estimate_dimension(variety: VarietySpec, p: int, m: int = 1, max_ext: int = 3,
                       budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """Slope of log|V(F_{q^i})| against i log q, rounded. HEURISTIC.

    :raises BudgetExceeded: an extension exceeds the budget
    :raises AllCountsZero: no extension has a rational point
    """
    base = make_field(p, m)
    counts = []
    for i in range(1, max_ext + 1):
        tower = FieldTower(base, i)
        counts.append(len(enumerate_points(variety.embed(tower), tower.ctx, budget)))
    logger.warning("dimension of %s estimated from point counts (%s)",
                   variety.name or "variety", HEURISTIC)
    return _slope_estimate(counts, base.q)


def _slope_estimate(counts: Sequence[int], q: int) -> Dict[str, Any]:
    xs = [i * math.log(q) for i, c in enumerate(counts, start=1) if c]
    ys = [math.log(c) for c in counts if c]
    if not xs:
        raise AllCountsZero(f"no rational points over any of {len(counts)} extensions")
    if len(xs) == 1:
        slope = ys[0] / xs[0]
    else:
        slope = float(np.polyfit(xs, ys, 1)[0])
    logger.debug("dimension estimate %.3f from point counts %s is %s",
                   slope, list(counts), HEURISTIC)
    return {"dim_estimate": int(round(slope)), "slope": slope,
            "counts": list(counts), "label": HEURISTIC}


def fiber_points(poly_map: PolynomialMap, variety: VarietySpec, target: Sequence[int],
                 ctx: FieldCtx, budget: int = ENUMERATION_BUDGET) -> List[Point]:
    """Points of V(F_q) that f sends to ``target``.
    """
    target = tuple(ctx.coerce(v) for v in target)
    return [pt for pt in enumerate_points(variety, ctx, budget)
            if poly_map.evaluate(pt, ctx) == target]


def degree_budget(spec: AlgebraicSourceSpec) -> Dict[str, Any]:
    """deg V * prod of the k largest h degrees against d.
    """
    top = spec.map.h_degrees()[:spec.k]
    product_of_h = math.prod(top)
    return {
        "bezout_deg_V": spec.variety.degree_bound,
        "product_of_top_k_h_degrees": product_of_h,
        "d_satisfied": spec.variety.degree_bound * product_of_h <= spec.d,
    }


def character_sum_survey(variety: VarietySpec, poly: MultiPoly, ctx: FieldCtx,
                         budget: int = ENUMERATION_BUDGET,
                         dft_budget: int = DFT_BUDGET) -> Dict[str, Any]:
    """sum_{x in V(F_q)} chi_alpha(f(x)) for every nontrivial alpha, from one
    histogram of f over V(F_q) and one FFT.

    Counts characters above (d1^2 + 2 d1 d2 - 3 d1) sqrt(q) + d1^2 with
    d1 = deg V and d2 = deg f; at most d1 d2 are allowed.
    """
    points = enumerate_points(variety, ctx, budget)
    if not points:
        raise EmptyVariety(f"{variety.name or 'variety'} has no points over F_{ctx.q}")
    carrier = Carrier.field_power(ctx, 1)
    values = image_counts(PolynomialMap(variety.arity, [poly]), points, ctx)
    spectrum = bias_spectrum(FiniteDistribution(carrier, values), dft_budget)
    sums = spectrum.nontrivial_abs() * len(points)
    d1, d2 = variety.degree_bound, max(int(poly.degree), 0)
    root_q = math.sqrt(ctx.q)
    bound = (d1 * d1 + 2 * d1 * d2 - 3 * d1) * root_q + d1 * d1
    violators = int(np.count_nonzero(sums > bound + 1e-6 * root_q))
    allowed = d1 * d2
    return {
        "points": len(points),
        "max_abs_sum": float(sums.max()) if sums.size else 0.0,
        "bound": bound,
        "violators": violators,
        "allowed": allowed,
        "pass": violators <= allowed,
    }


def point_count_bounds(variety: VarietySpec, ctx: FieldCtx,
                       budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """|V(F_q)| against d q^k, and against q^k / 2 when q >= 20 d^5 and V is
    flagged absolutely irreducible.
    """
    if variety.declared_dim is None:
        raise BoundViolation(f"{variety.name or 'variety'} has no declared dimension")
    count = len(enumerate_points(variety, ctx, budget))
    k, d = variety.declared_dim, variety.degree_bound
    upper = d * ctx.q ** k
    lower: Optional[Fraction] = None
    if variety.absolutely_irreducible and ctx.q >= 20 * d ** 5:
        lower = Fraction(ctx.q ** k, 2)
    return {
        "count": count,
        "upper": upper,
        "lower": float(lower) if lower is not None else None,
        "pass": count <= upper and (lower is None or count >= lower),
    }

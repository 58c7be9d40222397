"""
algext.rank_extract
~~~~~~~~~~~~~~~~~~~
Deterministic rank extractors for varieties built from pairwise coprime
degrees and k-regular matrices, and the linear seeded rank extractor family.
"""
import logging
import math
from fractions import Fraction
from itertools import combinations, islice, product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import nextprime, prime

from .constants import (ENUMERATION_BUDGET, MINOR_EXHAUSTIVE_LIMIT,
                        MINOR_SAMPLES, PRIME_LIMIT)
from .errors import (BoundViolation, DegreeCountMismatch, FieldTooSmall,
                     RankDeficientInput, ShapeMismatch)
from .finite_field import (FieldCtx, FieldElement, batch_rank_mod_p, field_token,
                           gf_array, matrix_rank, matvec, multiplicative_order,
                           parse_field_token)
from .variety_lab import (HEURISTIC, FieldTower, MultiPoly, PolynomialMap,
                          VarietySpec, _slope_estimate, enumerate_points,
                          image_counts)

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

_CHUNK = 2 ** 14


class CoprimeDegrees:
    """n pairwise coprime degrees, each greater than d.
    """

    def __init__(self, n: int, d: int, degrees: Sequence[int], strategy: str) -> None:
        self.n = n
        self.d = d
        self.degrees = tuple(degrees)
        self.strategy = strategy

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "d": self.d, "degrees": list(self.degrees),
                "strategy": self.strategy}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CoprimeDegrees":
        return cls(data["n"], data["d"], data["degrees"], data["strategy"])


def choose_degrees(n: int, d: int, strategy: str = "distinct_primes") -> CoprimeDegrees:
    """n pairwise coprime integers greater than d.

    ``distinct_primes`` takes the n smallest primes above d;
    ``prime_powers`` takes, for each of the first n primes, its least power
    above d.

    :raises BoundViolation: a needed prime exceeds the prime limit
    """
    if strategy == "distinct_primes":
        degrees: List[int] = []
        current = d
        for _ in range(n):
            current = nextprime(current)
            degrees.append(int(current))
    elif strategy == "prime_powers":
        degrees = []
        for i in range(1, n + 1):
            base = int(prime(i))
            power = base
            while power <= d:
                power *= base
            degrees.append(power)
    else:
        raise ValueError(f"unknown degree strategy {strategy}")
    if degrees and max(degrees) > PRIME_LIMIT and strategy == "distinct_primes":
        raise BoundViolation(f"degrees {degrees} need primes above {PRIME_LIMIT}")
    return CoprimeDegrees(n, d, degrees, strategy)


class RegularMatrix:
    """An m x n matrix over F_q any ``certified_k`` columns of which are
    linearly independent.

    :attribute certificate: ``exhaustive`` or ``sampled``
    """

    def __init__(self, rows: Sequence[Sequence[int]], ctx: FieldCtx,
                 tag: str = "custom", certified_k: int = 0,
                 certificate: str = "exhaustive") -> None:
        self.rows: Matrix = tuple(tuple(ctx.coerce(v) for v in row) for row in rows)
        self.ctx = ctx
        self.tag = tag
        self.certified_k = certified_k
        self.certificate = certificate

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def to_json(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx), "rows": [list(r) for r in self.rows],
                "tag": self.tag, "certified_k": self.certified_k,
                "certificate": self.certificate}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "RegularMatrix":
        return cls(data["rows"], parse_field_token(data["field"]), data["tag"],
                   data["certified_k"], data["certificate"])


def _column_subsets(n: int, k: int, rng_seed: int,
                    exhaustive_limit: int, samples: int) -> Tuple[Iterator[Tuple[int, ...]], str]:
    if math.comb(n, k) <= exhaustive_limit:
        return combinations(range(n), k), "exhaustive"
    rng = np.random.default_rng(rng_seed)
    subsets = (tuple(sorted(int(c) for c in rng.choice(n, k, replace=False)))
               for _ in range(samples))
    return subsets, "sampled"


def certify_regular(rows: Sequence[Sequence[int]], ctx: FieldCtx, k: int,
                    rng_seed: int = 0, exhaustive_limit: int = MINOR_EXHAUSTIVE_LIMIT,
                    samples: int = MINOR_SAMPLES) -> Tuple[bool, str]:
    """Checks that every k columns are independent.

    Exhaustive when C(n, k) is within ``exhaustive_limit``, otherwise over
    ``samples`` random column subsets.

    :return: (holds, mode)
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if k == 0:
        return True, "exhaustive"
    if k > m or k > n:
        return False, "exhaustive"
    subsets, mode = _column_subsets(n, k, rng_seed, exhaustive_limit, samples)
    if ctx.m == 1 and ctx.p < 2 ** 31:
        matrix = np.asarray(rows, dtype=np.int64)
        while True:
            chunk = list(islice(subsets, _CHUNK))
            if not chunk:
                return True, mode
            stack = matrix[:, np.asarray(chunk)].transpose(1, 0, 2)
            if (batch_rank_mod_p(stack, ctx.p) < k).any():
                return False, mode
    for cols in subsets:
        sub = [[row[c] for c in cols] for row in rows]
        if matrix_rank(sub, ctx) < k:
            return False, mode
    return True, mode


def build_regular_matrix(m: int, n: int, k: Optional[int], ctx: FieldCtx,
                         tag: str = "vandermonde", rng_seed: int = 0) -> RegularMatrix:
    """Builds and certifies a k-regular m x n matrix.

    ``vandermonde`` uses rows node^i over the nodes 1, ..., n (encoded);
    ``identity``, ``all_ones`` and ``drop_one`` only use 0, 1 and -1.

    :raises FieldTooSmall: fewer than n nonzero nodes
    :raises ShapeMismatch: tag incompatible with (m, n)
    """
    k = m if k is None else k
    minus_one = ctx.neg(1)
    if tag == "vandermonde":
        if ctx.q - 1 < n:
            raise FieldTooSmall(f"F_{ctx.q} has fewer than {n} nonzero nodes")
        rows = [[ctx.pow(node, i) for node in range(1, n + 1)] for i in range(m)]
    elif tag == "identity":
        if m != n:
            raise ShapeMismatch(f"identity needs m = n, got {m} x {n}")
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(m)]
    elif tag == "all_ones":
        if m != 1:
            raise ShapeMismatch(f"all_ones needs m = 1, got {m}")
        rows = [[1] * n]
    elif tag == "drop_one":
        if m != n - 1:
            raise ShapeMismatch(f"drop_one needs m = n - 1, got {m} x {n}")
        rows = [[1 if j == i else (minus_one if j == n - 1 else 0) for j in range(n)]
                for i in range(m)]
    else:
        raise ShapeMismatch(f"unknown matrix construction {tag}")

    certified, mode = k, "exhaustive"
    while certified > 0:
        holds, mode = certify_regular(rows, ctx, certified, rng_seed)
        if holds:
            break
        certified -= 1
    if certified < k:
        logger.warning("%s matrix %dx%d over F_%d only certified %d-regular",
                       tag, m, n, ctx.q, certified)
    return RegularMatrix(rows, ctx, tag, certified, mode)


class DklExtractor:
    """phi(a) = (sum_j c_ij a_j^{d_j})_i for a regular matrix (c_ij).

    :raises DegreeCountMismatch: number of degrees differs from the width
    """

    def __init__(self, degrees: CoprimeDegrees, matrix: RegularMatrix) -> None:
        rows, cols = matrix.shape
        if len(degrees.degrees) != cols:
            raise DegreeCountMismatch(
                f"{len(degrees.degrees)} degrees for a matrix with {cols} columns")
        self.degrees = degrees
        self.matrix = matrix
        self.ctx = matrix.ctx
        components = []
        for row in matrix.rows:
            components.append(MultiPoly(cols, [
                (c, [degrees.degrees[j] if i == j else 0 for i in range(cols)])
                for j, c in enumerate(row) if c], self.ctx))
        self.map = PolynomialMap(cols, components)

    @property
    def row_degrees(self) -> Tuple[int, ...]:
        """max d_j over the nonzero entries of each row.
        """
        return tuple(max((self.degrees.degrees[j] for j, c in enumerate(row) if c),
                         default=0)
                     for row in self.matrix.rows)

    def evaluate(self, point: Sequence[int]) -> Tuple[int, ...]:
        ctx = self.ctx
        powered = [ctx.pow(ctx.coerce(x), d) for x, d in zip(point, self.degrees.degrees)]
        return matvec(self.matrix.rows, powered, ctx)

    def to_json(self) -> Dict[str, Any]:
        return {"degrees": self.degrees.to_json(), "matrix": self.matrix.to_json()}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "DklExtractor":
        return cls(CoprimeDegrees.from_json(data["degrees"]),
                   RegularMatrix.from_json(data["matrix"]))


def dkl_map(degrees: CoprimeDegrees, matrix: RegularMatrix) -> DklExtractor:
    """The map A^n -> A^m of a degree list and a regular matrix.
    """
    return DklExtractor(degrees, matrix)


def fiber_finiteness_check(ext: DklExtractor, variety: VarietySpec, ctx: FieldCtx,
                           sample_targets: Optional[Sequence[Sequence[int]]] = None,
                           budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """Largest fiber of phi on V(F_q) against deg V * prod of row degrees.

    Every image point is inspected unless ``sample_targets`` is given.
    """
    points = enumerate_points(variety, ctx, budget)
    counts = image_counts(ext.map, points, ctx)
    if sample_targets is not None:
        targets = [tuple(ctx.coerce(v) for v in t) for t in sample_targets]
        sizes = [counts.get(t, 0) for t in targets]
        mode = "sampled"
    else:
        sizes = list(counts.values())
        mode = "exact"
    cap = variety.degree_bound * math.prod(ext.row_degrees)
    largest = max(sizes, default=0)
    return {"max_fiber_size": largest, "bezout_cap": cap, "fibers": len(sizes),
            "mode": mode, "pass": largest <= cap}


class SeededRankFamily:
    """Linear maps phi_i = ((omega^{j'} s_i)^j)_{j' < m, j < n}, one per seed.
    """

    def __init__(self, n: int, m: int, ctx: FieldCtx, omega: int,
                 seeds: Sequence[int]) -> None:
        self.n = n
        self.m = m
        self.ctx = ctx
        self.omega = omega
        self.seeds = tuple(seeds)
        self.matrices: Tuple[Matrix, ...] = tuple(self._matrix(s) for s in self.seeds)

    def _matrix(self, seed: int) -> Matrix:
        ctx = self.ctx
        rows = []
        for row in range(self.m):
            node = ctx.mul(ctx.pow(self.omega, row), seed)
            rows.append(tuple(ctx.pow(node, j) for j in range(self.n)))
        return tuple(rows)

    @property
    def size(self) -> int:
        return len(self.seeds)

    def apply(self, index: int, point: Sequence[int]) -> Tuple[int, ...]:
        return matvec(self.matrices[index], [self.ctx.coerce(v) for v in point], self.ctx)

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "m": self.m, "field": field_token(self.ctx),
                "omega": self.omega, "seeds": list(self.seeds)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "SeededRankFamily":
        return cls(data["n"], data["m"], parse_field_token(data["field"]),
                   data["omega"], data["seeds"])


def build_seeded_family(n: int, m: int, ctx: FieldCtx, ell: int) -> SeededRankFamily:
    """omega is the first element of order >= n; seeds are the first ell
    nonzero elements.

    :raises ShapeMismatch: m < 1
    :raises FieldTooSmall: q - 1 < max(n, ell)
    """
    if m < 1:
        raise ShapeMismatch(f"seeded family needs m >= 1, got {m}")
    if ctx.q - 1 < max(n, ell):
        raise FieldTooSmall(f"F_{ctx.q} has fewer than max({n}, {ell}) nonzero elements")
    omega = next(w for w in range(1, ctx.q)
                 if multiplicative_order(FieldElement(ctx, w)) >= n)
    return SeededRankFamily(n, m, ctx, omega, range(1, ell + 1))


def _basis_image(matrix: Matrix, basis: Sequence[Sequence[int]], ctx: FieldCtx) -> List[List[int]]:
    image = gf_array(matrix, ctx) @ gf_array(basis, ctx).T
    return np.asarray(image).tolist()


def subspace_rank_survey(fam: SeededRankFamily, basis: Sequence[Sequence[int]]) -> Dict[str, Any]:
    """Fraction of seeds whose map drops the rank of a subspace below m,
    against m (n - m) / ell.

    :param basis: k x n basis matrix, k >= m
    :raises RankDeficientInput: basis rows are dependent
    """
    ctx = fam.ctx
    basis = [[ctx.coerce(v) for v in row] for row in basis]
    k = len(basis)
    if matrix_rank(basis, ctx) != k:
        raise RankDeficientInput(f"basis of {k} vectors is not independent")
    if k < fam.m:
        raise ShapeMismatch(f"subspace of dimension {k} below m = {fam.m}")
    failing = [i for i, matrix in enumerate(fam.matrices)
               if matrix_rank(_basis_image(matrix, basis, ctx), ctx) < fam.m]
    fail_fraction = Fraction(len(failing), fam.size)
    bound = Fraction(fam.m * (fam.n - fam.m), fam.size)
    return {"fail_fraction": fail_fraction, "bound": bound,
            "failing_seeds": [fam.seeds[i] for i in failing],
            "pass": fail_fraction <= bound}


def enumerate_subspaces(n: int, k: int, ctx: FieldCtx) -> Iterator[List[List[int]]]:
    """Every k-dimensional subspace of F_q^n once, as its reduced row
    echelon basis.
    """
    for pivots in combinations(range(n), k):
        free = [(i, c) for i, piv in enumerate(pivots)
                for c in range(piv + 1, n) if c not in pivots]
        for values in product(range(ctx.q), repeat=len(free)):
            rows = [[1 if c == piv else 0 for c in range(n)] for piv in pivots]
            for (i, c), value in zip(free, values):
                rows[i][c] = value
            yield rows


def variety_rank_survey(fam: SeededRankFamily, variety: VarietySpec, ctx: FieldCtx,
                        max_ext: int = 3,
                        budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """Per-seed image dimension of V, estimated from image point counts
    over extensions. HEURISTIC.

    A seed fails when its estimate is below min(dim V, m).
    """
    if not variety.absolutely_irreducible:
        raise BoundViolation(
            f"{variety.name or 'variety'} is not flagged absolutely irreducible")
    if variety.declared_dim is None:
        raise BoundViolation(f"{variety.name or 'variety'} has no declared dimension")
    logger.warning("image dimensions of %s estimated from point counts (%s)",
                   variety.name or "variety", HEURISTIC)
    towers = [FieldTower(ctx, i) for i in range(1, max_ext + 1)]
    point_sets = [enumerate_points(variety.embed(t), t.ctx, budget) for t in towers]
    target = min(variety.declared_dim, fam.m)
    dims = []
    for matrix in fam.matrices:
        counts = []
        for tower, points in zip(towers, point_sets):
            rows = [tuple(tower.embed(v) for v in row) for row in matrix]
            image = {matvec(rows, pt, tower.ctx) for pt in points}
            counts.append(len(image))
        dims.append(_slope_estimate(counts, ctx.q)["dim_estimate"])
    failing = sum(1 for dim in dims if dim < target)
    fail_fraction = Fraction(failing, fam.size)
    bound = Fraction(fam.m * (fam.n - fam.m), fam.size)
    return {"dims": dims, "fail_fraction": fail_fraction, "bound": bound,
            "label": HEURISTIC, "pass": fail_fraction <= bound}

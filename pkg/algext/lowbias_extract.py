"""
algext.lowbias_extract
~~~~~~~~~~~~~~~~~~~~~~
Extractors for (eps, e)-biased and strongly (eps, e)-biased sources:
rank-metric (Gabidulin) matrices, the bilinear extractor built from them,
the mod-M extractor, parameter builders and exact Fourier-norm checks.
"""
import logging
import math
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .constants import (COMBINATION_EXHAUSTIVE_LIMIT, COMBINATION_SAMPLES,
                        CONST_FRACTION_C, DFT_BUDGET, MOD_M_C, NORM_TOL)
from .errors import (BasisDependent, BoundViolation, BudgetExceeded,
                     LengthMismatch, OutOfRange, ParamsInfeasible)
from .finite_field import (FieldCtx, batch_rank_mod_p, field_token, gf_array,
                           make_field, matrix_rank)
from .utils import log_base, log_inverse

logger = logging.getLogger(__name__)

_CHUNK = 2 ** 14


class GabidulinParams:
    """Parameters of the rank-metric code: 1 <= k <= r <= s, 1 <= t <= k s and
    r elements of F_{p^s} independent over F_p.

    The isomorphism F_{p^s} -> F_p^s is the coefficient map of the polynomial
    basis; the default basis is 1, X, ..., X^{r-1}.

    :raises BoundViolation: k, r, s or t out of range
    :raises BasisDependent: the basis is dependent over F_p
    """

    def __init__(self, p: int, k: int, r: int, s: int, t: int,
                 basis: Optional[Sequence[int]] = None) -> None:
        if not 1 <= k <= r <= s:
            raise BoundViolation(f"need 1 <= k <= r <= s, got k={k}, r={r}, s={s}")
        if not 1 <= t <= k * s:
            raise BoundViolation(f"t = {t} outside [1, k s = {k * s}]")
        self.p = p
        self.k = k
        self.r = r
        self.s = s
        self.t = t
        self.field: FieldCtx = make_field(p, s)
        if basis is None:
            basis = [self.field.monomial(j) for j in range(r)]
        self.basis: Tuple[int, ...] = tuple(int(g) for g in basis)
        if len(self.basis) != r:
            raise BoundViolation(f"{len(self.basis)} basis elements for r = {r}")
        coords = [list(self.field.coeffs(g)) for g in self.basis]
        if matrix_rank(coords, make_field(p)) != r:
            raise BasisDependent(f"basis {self.basis} is dependent over F_{p}")

    @property
    def rank_bound(self) -> int:
        return self.r - self.k + 1

    def to_json(self) -> Dict[str, Any]:
        return {"p": self.p, "k": self.k, "r": self.r, "s": self.s, "t": self.t,
                "field": field_token(self.field), "basis": list(self.basis)}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "GabidulinParams":
        return cls(data["p"], data["k"], data["r"], data["s"], data["t"],
                   data.get("basis"))


def gabidulin_matrices(params: GabidulinParams) -> List[np.ndarray]:
    """The t matrices M_u in F_p^{s x r}, u running over the first t
    vectors of the standard F_p-basis of F_{p^s}^k.

    Column j of M_u holds the coordinates of sum_i u_i g_j^{p^(i-1)}.
    """
    ctx = params.field
    basis = gf_array(list(params.basis), ctx)
    frobenius = [basis ** (params.p ** i) for i in range(params.k)]
    matrices = []
    for idx in range(params.t):
        i, power = divmod(idx, params.s)
        image = gf_array(ctx.monomial(power), ctx) * frobenius[i]
        if ctx.m == 1:
            coords = np.asarray(image, dtype=np.int64)[:, None]
        else:
            # vector() lists coordinates highest degree first
            coords = np.asarray(image.vector(), dtype=np.int64)[:, ::-1]
        matrices.append(coords.T.copy())
    return matrices


def _combinations(p: int, t: int, rng_seed: int, exhaustive_limit: int,
                  samples: int) -> Tuple[np.ndarray, str]:
    if p ** t <= exhaustive_limit:
        grid = np.indices((p,) * t).reshape(t, -1).T[1:]
        return grid.astype(np.int64), "exhaustive"
    rng = np.random.default_rng(rng_seed)
    combos = rng.integers(0, p, size=(samples, t), dtype=np.int64)
    zero = ~combos.any(axis=1)
    combos[zero, 0] = 1
    return combos, f"sampled({samples})"


def min_rank_survey(matrices: Sequence[np.ndarray], p: int, bound: int,
                    rng_seed: int = 0,
                    exhaustive_limit: int = COMBINATION_EXHAUSTIVE_LIMIT,
                    samples: int = COMBINATION_SAMPLES) -> Dict[str, Any]:
    """Minimum rank of sum c_i M_i over nonzero c in F_p^t.

    Exhaustive when p^t <= ``exhaustive_limit``, otherwise ``samples``
    random nonzero combinations.
    """
    stack = np.asarray(matrices, dtype=np.int64) % p
    combos, mode = _combinations(p, len(stack), rng_seed, exhaustive_limit, samples)
    lowest: Optional[int] = None
    for lo in range(0, len(combos), _CHUNK):
        chunk = combos[lo:lo + _CHUNK]
        summed = np.tensordot(chunk, stack, axes=(1, 0)) % p
        ranks = batch_rank_mod_p(summed, p)
        low = int(ranks.min())
        lowest = low if lowest is None else min(lowest, low)
    lowest = 0 if lowest is None else lowest
    return {"min_rank": lowest, "bound": bound, "combinations": len(combos),
            "mode": mode, "pass": lowest >= bound}


class BilinearExtractor:
    """f(x, y) = (x^T M_1 y, ..., x^T M_t y) on F_p^s x F_p^r, inputs given
    as one vector of length n = r + s with the s-block first.
    """

    def __init__(self, params: GabidulinParams,
                 matrices: Optional[Sequence[np.ndarray]] = None,
                 declared_error: Optional[float] = None,
                 choices: Optional[Dict[str, Any]] = None,
                 violations: Optional[List[str]] = None) -> None:
        self.params = params
        self.p = params.p
        self.r = params.r
        self.s = params.s
        self.t = params.t
        self.n = params.r + params.s
        source = gabidulin_matrices(params) if matrices is None else matrices
        self.matrices = np.asarray(source, dtype=np.int64).reshape(self.t, self.s, self.r) % self.p
        self.declared_error = declared_error
        self.choices = dict(choices or {})
        self.violations = list(violations or [])

    def extract(self, x: Sequence[int]) -> Tuple[int, ...]:
        if len(x) != self.n:
            raise LengthMismatch(f"input of length {len(x)}, expected {self.n}")
        row = self.extract_array(np.asarray([x], dtype=np.int64))[0]
        return tuple(int(v) for v in row)

    def extract_array(self, points: np.ndarray) -> np.ndarray:
        """Evaluates on a (N, n) array of points; returns (N, t).
        """
        points = np.asarray(points, dtype=np.int64) % self.p
        x, y = points[:, :self.s], points[:, self.s:]
        partial = np.einsum("ns,tsr->ntr", x, self.matrices) % self.p
        return np.einsum("ntr,nr->nt", partial, y) % self.p

    def to_json(self) -> Dict[str, Any]:
        return {"params": self.params.to_json(),
                "matrices": self.matrices.tolist(),
                "declared_error": self.declared_error,
                "choices": self.choices,
                "violations": self.violations}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "BilinearExtractor":
        params = GabidulinParams.from_json(data["params"])
        ext = cls(params, None, data.get("declared_error"), data.get("choices"),
                  data.get("violations"))
        if ext.matrices.tolist() != data["matrices"]:
            raise BoundViolation("stored matrices differ from the rebuilt ones")
        return ext


def bilinear_extract(ext: BilinearExtractor, x: Sequence[int]) -> Tuple[int, ...]:
    """
    :raises LengthMismatch: len(x) != r + s
    """
    return ext.extract(x)


def _all_points(p: int, n: int) -> np.ndarray:
    return np.indices((p,) * n).reshape(n, -1).T.astype(np.int64)


def fourier_norm_check(ext: BilinearExtractor, budget: int = DFT_BUDGET) -> Dict[str, Any]:
    """Exact L1 and L-infinity norms of the transform of psi o f for every
    nontrivial psi, against p^r and p^-(r-k+1).

    :raises BudgetExceeded: p^n * p^t exceeds ``budget``
    """
    p, n, t = ext.p, ext.n, ext.t
    cost = p ** n * p ** t
    if cost > budget:
        raise BudgetExceeded(f"norm check needs {cost} transform entries, budget is {budget}")
    outputs = ext.extract_array(_all_points(p, n))
    l1_bound = float(p ** ext.r)
    linf_bound = float(p) ** -ext.params.rank_bound
    rows = []
    for psi in product(range(p), repeat=t):
        if not any(psi):
            continue
        phase = outputs @ np.asarray(psi, dtype=np.int64) % p
        grid = np.exp(2j * math.pi * phase / p).reshape((p,) * n)
        magnitudes = np.abs(np.fft.fftn(grid)) / p ** n
        l1, linf = float(magnitudes.sum()), float(magnitudes.max())
        rows.append({"psi": list(psi), "l1": l1, "linf": linf,
                     "pass": l1 <= l1_bound + NORM_TOL and linf <= linf_bound + NORM_TOL})
    return {
        "max_l1": max((row["l1"] for row in rows), default=0.0),
        "max_linf": max((row["linf"] for row in rows), default=0.0),
        "l1_bound": l1_bound,
        "linf_bound": linf_bound,
        "rows": rows,
        "pass": all(row["pass"] for row in rows),
    }


def extraction_error_bound(ext: BilinearExtractor, max_bias: float, e_count: int) -> float:
    """(p^r max_bias + p^-(r-k+1) e) p^(t/2).
    """
    p = ext.p
    return (p ** ext.r * max_bias + float(p) ** -ext.params.rank_bound * e_count) \
        * p ** (ext.t / 2)


# === mod M ===
class ModMExtractor:
    """(a_1, ..., a_{t-1}, a) -> (a_1, ..., a_{t-1}, a mod M) on Z_N^t.

    :raises BoundViolation: M outside [1, N]
    """

    def __init__(self, N: int, t: int, M: int) -> None:
        if not 1 <= M <= N:
            raise BoundViolation(f"M = {M} outside [1, N = {N}]")
        self.N = N
        self.t = t
        self.M = M

    def extract(self, a: Sequence[int]) -> Tuple[int, ...]:
        if len(a) != self.t:
            raise LengthMismatch(f"input of length {len(a)}, expected {self.t}")
        for value in a:
            if not 0 <= value < self.N:
                raise OutOfRange(f"{value} is not a residue mod {self.N}")
        return tuple(a[:-1]) + (a[-1] % self.M,)

    def to_json(self) -> Dict[str, Any]:
        return {"N": self.N, "t": self.t, "M": self.M}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "ModMExtractor":
        return cls(data["N"], data["t"], data["M"])


def mod_m_extract(ext: ModMExtractor, a: Sequence[int]) -> Tuple[int, ...]:
    """
    :raises LengthMismatch: len(a) != t
    :raises OutOfRange: an entry outside [0, N)
    """
    return ext.extract(a)


def mod_m_uniform_distance(N: int, M: int) -> Fraction:
    """Exact distance of (U_N mod M) from U_M: r0 (M - r0) / (N M), r0 = N mod M.
    """
    r0 = N % M
    return Fraction(r0 * (M - r0), N * M)


def mod_m_error_bound(epsilon: float, N: int, t: int, M: int) -> float:
    """eps (N^(t-1) M)^(1/2) C log N + M / N for an eps-biased input.
    """
    return float(epsilon) * math.sqrt(N ** (t - 1) * M) * MOD_M_C * math.log2(N) + M / N


# === builders ===
def build_dense_affine_extractor(n: int, p: int, e: float, epsilon: float,
                                 t: Optional[int] = None) -> BilinearExtractor:
    """Extractor for (0, e)-biased sources, dense affine sources included:
    r = n // 2, k = 2, t = floor(n - 3 - 2 log_p(e / eps)).

    :raises ParamsInfeasible: n < 4 or t < 1
    """
    r = n // 2
    if r < 2:
        raise ParamsInfeasible(f"n = {n} leaves r = {r} below k = 2")
    if t is None:
        t = math.floor(n - 3 - 2 * log_base(Fraction(e) / Fraction(epsilon)
                                            if epsilon else math.inf, p))
    if t < 1:
        raise ParamsInfeasible(f"t = {t} for n = {n}, e = {e}, eps = {epsilon}")
    params = GabidulinParams(p, 2, r, n - r, t)
    declared = float(p) ** -(r - 1) * float(e) * p ** (t / 2)
    logger.debug("dense affine extractor n=%d r=%d t=%d declared error %.3g", n, r, t, declared)
    return BilinearExtractor(params, declared_error=declared,
                             choices={"r": r, "s": n - r, "k": 2, "t": t, "e": float(e)})


def strongly_biased_parameters(n: int, p: int, epsilon: float, e: float,
                               epsilon_prime: float) -> Tuple[int, int]:
    """n' = min(floor(2 log_p(1/eps) - 2 log_p(16 e / eps'^2)), n) and
    t = floor(n' - 3 - 2 log_p(2 e / eps')), without feasibility checks.
    """
    eps_prime = float(epsilon_prime)
    head = 2 * log_inverse(epsilon, p) - 2 * log_base(16 * float(e) / eps_prime ** 2, p)
    n_prime = min(math.floor(head), n)
    t = math.floor(n_prime - 3 - 2 * log_base(2 * float(e) / eps_prime, p))
    return int(n_prime), int(t)


class StronglyBiasedExtractor:
    """f o pi: projection onto the first n' coordinates followed by the
    dense affine extractor on F_p^{n'}.
    """

    def __init__(self, n: int, n_prime: int, inner: BilinearExtractor,
                 declared_error: float, violations: Optional[List[str]] = None) -> None:
        self.n = n
        self.n_prime = n_prime
        self.inner = inner
        self.p = inner.p
        self.t = inner.t
        self.declared_error = declared_error
        self.violations = list(violations or [])

    def extract(self, x: Sequence[int]) -> Tuple[int, ...]:
        if len(x) != self.n:
            raise LengthMismatch(f"input of length {len(x)}, expected {self.n}")
        return self.inner.extract(list(x[:self.n_prime]))

    def extract_array(self, points: np.ndarray) -> np.ndarray:
        return self.inner.extract_array(np.asarray(points)[:, :self.n_prime])

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "n_prime": self.n_prime, "inner": self.inner.to_json(),
                "declared_error": self.declared_error, "violations": self.violations}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "StronglyBiasedExtractor":
        return cls(data["n"], data["n_prime"], BilinearExtractor.from_json(data["inner"]),
                   data["declared_error"], data.get("violations"))


def build_strongly_biased_extractor(n: int, p: int, epsilon: float, e: float,
                                    epsilon_prime: float, n_prime: Optional[int] = None,
                                    t: Optional[int] = None,
                                    relax: bool = False) -> StronglyBiasedExtractor:
    """Extractor for strongly (eps, e)-biased sources over F_p^n.

    ``n_prime`` and ``t`` override the computed values. In relaxed mode an
    infeasible t is replaced by 1 and recorded in ``violations``.

    :raises ParamsInfeasible: t < 1 in strict mode, or n' < 4
    """
    computed_n, computed_t = strongly_biased_parameters(n, p, epsilon, e, epsilon_prime)
    n_prime = computed_n if n_prime is None else n_prime
    if t is None:
        t = computed_t if n_prime == computed_n else math.floor(
            n_prime - 3 - 2 * log_base(2 * float(e) / float(epsilon_prime), p))
    violations = []
    if t < 1:
        if not relax:
            raise ParamsInfeasible(f"n' = {n_prime} gives t = {t} < 1")
        violations.append(f"t = {t} < 1 replaced by 1")
        logger.warning("strongly biased extractor: t = %d < 1, relaxed to 1", t)
        t = 1
    if n_prime < 4:
        raise ParamsInfeasible(f"n' = {n_prime} is too short for a rank-2 code")
    r = n_prime // 2
    t = min(t, 2 * (n_prime - r))
    inner = build_dense_affine_extractor(n_prime, p, e, epsilon_prime, t)
    return StronglyBiasedExtractor(n, n_prime, inner, float(epsilon_prime), violations)


def constant_fraction_shape(n: int) -> Tuple[int, int, int]:
    """(r, s, k) = (n // 4, n - r, max(1, r // 2)); they depend on n only.
    """
    r = n // 4
    return r, n - r, max(1, r // 2)


def constant_fraction_headroom(n: int, p: int, d: float, e: float,
                               epsilon_prime: float) -> int:
    """Largest t with t log p <= n log p / c - 2 log(d e / eps'), c pinned.
    """
    return math.floor(n / CONST_FRACTION_C
                      - 2 * log_base(float(d) * float(e) / float(epsilon_prime), p))


def build_constant_fraction_extractor(n: int, p: int, d: float, e: float,
                                      epsilon_prime: float, t: Optional[int] = None,
                                      relax: bool = False) -> BilinearExtractor:
    """Extractor for (d p^(-n/2), e)-biased sources shaped by
    :func:`constant_fraction_shape`.

    Without ``t`` the largest value with (p^r eps + p^-(r-k+1) e) p^(t/2) <= eps'
    is taken. Either way t must fit the headroom of
    :func:`constant_fraction_headroom`; in relaxed mode a t outside it is kept
    (or raised to 1) and recorded in ``violations``.

    :raises ParamsInfeasible: n below the floor, or t fails the headroom in
        strict mode
    """
    if n < CONST_FRACTION_C:
        raise ParamsInfeasible(f"n = {n} below the floor {CONST_FRACTION_C}")
    r, s, k = constant_fraction_shape(n)
    epsilon = float(d) * p ** (-n / 2)
    inner_error = p ** r * epsilon + float(p) ** -(r - k + 1) * float(e)
    headroom = constant_fraction_headroom(n, p, d, e, epsilon_prime)
    if t is None:
        by_error = math.floor(2 * log_base(float(epsilon_prime) / inner_error, p))
        t = min(by_error, headroom)
    violations = []
    if t < 1 or t > headroom:
        if not relax:
            raise ParamsInfeasible(
                f"n = {n}, d = {d}, e = {e}, eps' = {epsilon_prime} leave headroom "
                f"{headroom} for t = {t}")
        violations.append(f"t = {t} with headroom {headroom}, need 1 <= t <= headroom")
        logger.warning("constant fraction extractor: t = %d, headroom %d", t, headroom)
        t = max(t, 1)
    params = GabidulinParams(p, k, r, s, t)
    declared = inner_error * p ** (t / 2)
    logger.debug("constant fraction extractor n=%d r=%d s=%d k=%d t=%d", n, r, s, k, t)
    return BilinearExtractor(params, declared_error=declared,
                             choices={"r": r, "s": s, "k": k, "t": t, "epsilon": epsilon,
                                      "headroom": headroom, "c": CONST_FRACTION_C},
                             violations=violations)

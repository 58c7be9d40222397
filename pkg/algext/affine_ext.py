"""
algext.affine_ext
~~~~~~~~~~~~~~~~~
The affine extractor E(x) = A (x_1^{d_1}, ..., x_n^{d_n}) over prime fields:
degree selection, the Vandermonde output matrix, echelon-form affine
subspaces, character-bias measurement and one-variable Weil sum checks.
"""
import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import divisors, isprime, nextprime

from .constants import BIAS_TOL, CHARACTER_SAMPLES, DISTANCE_TOL, ENUMERATION_BUDGET
from .errors import BoundViolation, BudgetExceeded, KTooLarge, LcmTooLarge, NotPrime, ShapeMismatch
from .finite_field import make_field, power_mod_array
from .rank_extract import RegularMatrix, build_regular_matrix
from .utils import ceil_log2

logger = logging.getLogger(__name__)

_BLOCK = 2 ** 20


class GoodDegrees:
    """n distinct divisors of D = p_1 ... p_r, each coprime to q - 1.

    :attribute lcm_ok: D <= q^epsilon
    """

    def __init__(self, n: int, q: int, epsilon: float, primes: Sequence[int],
                 degrees: Sequence[int]) -> None:
        self.n = n
        self.q = q
        self.epsilon = epsilon
        self.primes = tuple(primes)
        self.degrees = tuple(degrees)
        self.D = math.prod(self.primes)
        self.lcm_ok = self.D <= q ** float(epsilon)

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "q": self.q, "epsilon": float(self.epsilon),
                "primes": list(self.primes), "degrees": list(self.degrees),
                "D": self.D, "lcm_ok": self.lcm_ok}


def good_degrees(n: int, q: int, epsilon: float, relax: bool = False) -> GoodDegrees:
    """r = ceil(log2 n) least primes not dividing q - 1, and the n smallest
    divisors of their product.

    :raises NotPrime: q is not a prime
    :raises LcmTooLarge: D > q^epsilon and not ``relax``
    """
    if not isprime(q):
        raise NotPrime(f"{q} is not a prime")
    if n < 1:
        raise BoundViolation(f"n must be positive, got {n}")
    r = ceil_log2(n)
    primes: List[int] = []
    candidate = 1
    while len(primes) < r:
        candidate = int(nextprime(candidate))
        if (q - 1) % candidate:
            primes.append(candidate)
    degrees = sorted(divisors(math.prod(primes)))[:n]
    assert len(degrees) == n, "2^r divisors always cover n"
    result = GoodDegrees(n, q, epsilon, primes, degrees)
    if not result.lcm_ok:
        if not relax:
            raise LcmTooLarge(f"D = {result.D} exceeds q^{epsilon} for q = {q}")
        logger.warning("good degrees for q=%d: D = %d above q^%s, relaxed",
                       q, result.D, epsilon)
    return result


class AffineExtractor:
    """E(x) = A (x_i^{d_i})_i with A an m-regular Vandermonde matrix.
    """

    def __init__(self, n: int, m: int, q: int, degrees: GoodDegrees,
                 matrix: RegularMatrix) -> None:
        self.n = n
        self.m = m
        self.q = q
        self.degrees = degrees
        self.matrix = matrix
        self.A = np.asarray(matrix.rows, dtype=np.int64)

    def evaluate(self, x: Sequence[int]) -> Tuple[int, ...]:
        powered = np.asarray([pow(int(v), d, self.q) for v, d in zip(x, self.degrees.degrees)],
                             dtype=np.int64)
        return tuple(int(v) for v in self.A @ powered % self.q)

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        """(N, n) points to (N, m) outputs.
        """
        powered = np.stack([power_mod_array(points[:, i], d, self.q)
                            for i, d in enumerate(self.degrees.degrees)], axis=1)
        out = np.zeros((len(points), self.m), dtype=np.int64)
        for j in range(self.n):
            out = (out + powered[:, j:j + 1] * self.A[:, j][None, :]) % self.q
        return out

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "m": self.m, "q": self.q, "degrees": self.degrees.to_json(),
                "matrix": self.matrix.to_json()}


def build_affine_ext(n: int, m: int, q: int, degrees: GoodDegrees) -> AffineExtractor:
    """
    :raises FieldTooSmall: fewer than n nonzero Vandermonde nodes
    :raises ShapeMismatch: m > n or a degree list of the wrong length
    """
    if m > n or len(degrees.degrees) != n:
        raise ShapeMismatch(f"cannot build a {m} x {n} extractor from {degrees.degrees}")
    ctx = make_field(q)
    matrix = build_regular_matrix(m, n, m, ctx, "vandermonde")
    return AffineExtractor(n, m, q, degrees, matrix)


class AffineSubspace:
    """k-dimensional affine subspace of F_q^n in echelon form.

    Row j of ``maps`` holds the coefficients of l_j on t_1..t_k followed by
    its constant; l_{j_i}(t) = t_i and l_j only uses the t_i with j_i < j.
    """

    def __init__(self, n: int, k: int, q: int, pivots: Sequence[int],
                 maps: np.ndarray) -> None:
        self.n = n
        self.k = k
        self.q = q
        self.pivots = tuple(pivots)
        self.maps = np.asarray(maps, dtype=np.int64)

    def points(self, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
        """Points with parameter index in [start, stop), as an (N, n) array.
        Index order is lexicographic in (t_1, ..., t_k).
        """
        if self.k == 0:
            return self.maps[:, 0][None, :] % self.q
        stop = self.q ** self.k if stop is None else stop
        flat = np.arange(start, stop, dtype=np.int64)
        params = np.empty((len(flat), self.k), dtype=np.int64)
        for i in range(self.k - 1, -1, -1):
            flat, params[:, i] = np.divmod(flat, self.q)
        coeffs, const = self.maps[:, :self.k], self.maps[:, self.k]
        return (params @ coeffs.T + const[None, :]) % self.q

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "q": self.q, "pivots": list(self.pivots),
                "maps": self.maps.tolist()}


def sample_subspace(n: int, k: int, q: int, rng_seed: int = 0) -> AffineSubspace:
    """Uniform pivots and uniform free coefficients.

    :raises KTooLarge: k > n
    """
    if k > n:
        raise KTooLarge(f"k = {k} exceeds n = {n}")
    rng = np.random.default_rng(rng_seed)
    pivots = sorted(int(j) for j in rng.choice(n, k, replace=False))
    maps = np.zeros((n, k + 1), dtype=np.int64)
    for j in range(n):
        if j in pivots:
            maps[j, pivots.index(j)] = 1
            continue
        used = sum(1 for piv in pivots if piv < j)
        maps[j, :used] = rng.integers(0, q, size=used)
        maps[j, k] = rng.integers(0, q)
    return AffineSubspace(n, k, q, pivots, maps)


def _characters(ext: AffineExtractor, chars: Union[str, int], rng_seed: int,
                cost_per_char: int, budget: int) -> Tuple[np.ndarray, str]:
    q, m = ext.q, ext.m
    total = q ** m - 1
    if chars == "all" and total * cost_per_char <= budget:
        grid = np.indices((q,) * m).reshape(m, -1).T[1:]
        return grid.astype(np.int64), "all"
    count = CHARACTER_SAMPLES if chars == "all" else int(chars)
    rng = np.random.default_rng(rng_seed)
    picks = rng.integers(1, q ** m, size=count)
    grid = np.stack([(picks // q ** i) % q for i in range(m)], axis=1)
    return grid.astype(np.int64), f"sampled({count})"


def measure_affine_bias(ext: AffineExtractor, sub: AffineSubspace,
                        chars: Union[str, int] = "all", rng_seed: int = 0,
                        budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """|E[chi(c . E(X))]| for X uniform on the subspace, per nonzero c.

    Rows where at least k/2 pivot coefficients of b = c^T A are nonzero are
    compared with D^{k/2} q^{-k/4}.

    :raises BudgetExceeded: q^k exceeds ``budget``
    """
    q, k = ext.q, sub.k
    size = q ** k
    if size > budget:
        raise BudgetExceeded(f"subspace of {size} points exceeds budget {budget}")
    cs, mode = _characters(ext, chars, rng_seed, size, budget)
    bound = ext.degrees.D ** (k / 2) * q ** (-k / 4)
    histogram = np.zeros(q, dtype=np.int64)
    sums = np.zeros(len(cs), dtype=np.complex128)
    for lo in range(0, size, _BLOCK):
        outputs = ext.evaluate_array(sub.points(lo, min(size, lo + _BLOCK)))
        if ext.m == 1:
            histogram += np.bincount(outputs[:, 0], minlength=q)
        else:
            phases = outputs @ cs.T % q
            sums += np.exp(2j * math.pi * phases / q).sum(axis=0)
    if ext.m == 1:
        spectrum = np.abs(np.fft.fft(histogram)) / size
        biases = [float(spectrum[(-int(c[0])) % q]) for c in cs]
    else:
        biases = [float(v) for v in np.abs(sums) / size]
    rows = []
    for index, (c, bias) in enumerate(zip(cs, biases)):
        b = c @ ext.A % q
        nonzero = int(sum(1 for j in sub.pivots if b[j]))
        applicable = k > 0 and nonzero >= k / 2
        rows.append({"c_index": index, "c": [int(v) for v in c], "abs_bias": bias,
                     "nonzero_pivots": nonzero, "proof_bound": bound,
                     "applicable": applicable,
                     "pass": not applicable or bias <= bound + DISTANCE_TOL})
    return {"rows": rows, "max_bias": max((r["abs_bias"] for r in rows), default=0.0),
            "proof_bound": bound, "D": ext.degrees.D, "mode": mode,
            "pass": all(r["pass"] for r in rows)}


def uniform_input_check(ext: AffineExtractor,
                        budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """E(U) is uniform when every x -> x^{d_i} is a bijection and A has rank
    m; enumerated exactly when q^n fits the budget.
    """
    bijective = all(math.gcd(d, ext.q - 1) == 1 for d in ext.degrees.degrees)
    analytic = bijective and ext.matrix.certified_k >= ext.m
    distance = None
    mode = "analytic"
    total, outcomes = ext.q ** ext.n, ext.q ** ext.m
    if total <= budget:
        whole = AffineSubspace(ext.n, ext.n, ext.q, range(ext.n),
                               np.eye(ext.n, ext.n + 1, dtype=np.int64))
        counts = np.zeros(outcomes, dtype=np.int64)
        for lo in range(0, total, _BLOCK):
            outputs = ext.evaluate_array(whole.points(lo, min(total, lo + _BLOCK)))
            flat = np.zeros(len(outputs), dtype=np.int64)
            for i in range(ext.m):
                flat = flat * ext.q + outputs[:, i]
            counts += np.bincount(flat, minlength=outcomes)
        distance = Fraction(int(np.abs(counts * outcomes - total).sum()),
                            2 * total * outcomes)
        mode = "exact"
    return {"analytic": analytic, "distance": float(distance) if distance is not None else None,
            "mode": mode,
            "pass": analytic and (distance is None or distance == 0)}


def weil_sum_check(q: int, d: int, trials: int, rng_seed: int = 0) -> Dict[str, Any]:
    """|sum_x chi(f(x))| against (d - 1) sqrt(q) for random f of degree d
    with a nonzero top coefficient.

    :raises NotPrime: q is not a prime
    :raises BoundViolation: p divides d
    """
    if not isprime(q):
        raise NotPrime(f"{q} is not a prime")
    if d < 1 or d % q == 0:
        raise BoundViolation(f"degree {d} is not smooth over F_{q}")
    rng = np.random.default_rng(rng_seed)
    xs = np.arange(q, dtype=np.int64)
    root_q = math.sqrt(q)
    bound = (d - 1) * root_q
    rows = []
    for trial in range(trials):
        coeffs = rng.integers(0, q, size=d + 1)
        coeffs[d] = rng.integers(1, q)
        values = np.zeros(q, dtype=np.int64)
        for a in coeffs[::-1]:
            values = (values * xs + int(a)) % q
        total = float(abs(np.exp(2j * math.pi * values / q).sum()))
        rows.append({"trial": trial, "coeffs": [int(a) for a in coeffs],
                     "abs_sum": total, "bound": bound,
                     "pass": total <= bound + 1e-6 * root_q + BIAS_TOL})
    return {"q": q, "d": d, "rows": rows,
            "max_abs_sum": max((r["abs_sum"] for r in rows), default=0.0),
            "bound": bound, "pass": all(r["pass"] for r in rows)}

"""
algext.pipeline
~~~~~~~~~~~~~~~
The extractor stack for (n, k, d) algebraic sources over F_q: the (1, 1, d)
extractor, the (n, 1, d) extractor, the seeded hash extractor, the recursive
full-rank extractor and the composition extractor, plus exact and Monte
Carlo measurement.

Every extractor maps a point (a tuple of encoded field elements) to a bit
string of length ``m_out`` and serializes as ``{"kind", "params", "derived"}``.
Reloading rebuilds from ``params`` and checks ``derived``.
"""
import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np
from sympy import prime

from .constants import (C0, C_STAR, DISTANCE_TOL, ENUMERATION_BUDGET, MOD_M_C,
                        SAMPLE_BUDGET)
from .errors import (BoundViolation, BudgetExceeded, FieldTooSmall,
                     LengthMismatch, ParamsInfeasible, SeedLengthMismatch)
from .finite_field import FieldCtx, FieldElement, field_token, make_field, parse_field_token
from .group_fourier import (Carrier, FiniteDistribution, distance_to_uniform,
                            min_entropy, sampled_distance_to_uniform)
from .lowbias_extract import (ModMExtractor, StronglyBiasedExtractor,
                              build_strongly_biased_extractor,
                              mod_m_uniform_distance)
from .rank_extract import (DklExtractor, SeededRankFamily, build_regular_matrix,
                           build_seeded_family, choose_degrees)
from .utils import (bits_to_int, floor_log2, int_to_bits, number_token,
                    parse_number)

logger = logging.getLogger(__name__)

Scalar = Union[int, FieldElement]


def element_bits(value: int, ctx: FieldCtx) -> str:
    """Coefficient vector of an element, ceil(log2 p) bits per coefficient,
    each coefficient little-endian.
    """
    width = max(ctx.digit_bits, 1)
    return "".join(int_to_bits(c, width)[::-1] for c in ctx.coeffs(value))


def _fold(value: int, size: int) -> Tuple[str, int]:
    width = floor_log2(size)
    return int_to_bits(value % (1 << width), width), width


def _scalar(x: Any, ctx: FieldCtx) -> int:
    if isinstance(x, (list, tuple)):
        if len(x) != 1:
            raise LengthMismatch(f"expected one field element, got {len(x)}")
        x = x[0]
    return ctx.coerce(x)


def _eps(value: Any) -> Union[Fraction, float]:
    if isinstance(value, str):
        value = parse_number(value)
    return Fraction(value) if isinstance(value, int) else value


class _Extractor:
    """Serialization shared by every extractor of the stack.
    """
    KIND = ""

    m_out: int = 0
    declared_error: float = 0.0
    fold_loss: Fraction = Fraction(0)
    violations: List[str] = []

    def params(self) -> Dict[str, Any]:
        raise NotImplementedError

    def derived(self) -> Dict[str, Any]:
        raise NotImplementedError

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "_Extractor":
        raise NotImplementedError

    def extract(self, point: Any) -> str:
        raise NotImplementedError

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.KIND, "params": self.params(), "derived": self.derived()}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "_Extractor":
        ext = cls.rebuild(data["params"])
        if ext.derived() != data["derived"]:
            raise BoundViolation(f"rebuilt {cls.KIND} extractor differs from the stored one")
        return ext


# === (1, 1, d) ===
def select_branch(p: int, d: int, epsilon: Any) -> str:
    """``large_char`` iff p > (d / eps)^c*.
    """
    threshold = (Fraction(d) / Fraction(epsilon)) ** C_STAR
    return "large_char" if p > threshold else "small_char"


def _largest_power_of_two(p: int, holds) -> int:
    width = 0
    while (1 << (width + 1)) <= p and holds(1 << (width + 1)):
        width += 1
    return width


def _choose_modulus(p: int, d: int, epsilon: float, relax: bool, min_bits: int,
                    violations: List[str]) -> int:
    half = epsilon / 2

    def strict(M: int) -> bool:
        return 8 * d * d * math.sqrt(M / p) * MOD_M_C * math.log2(p) + M / p <= half

    width = _largest_power_of_two(p, strict)
    if width >= max(min_bits, 1):
        return 1 << width
    if not relax:
        raise ParamsInfeasible(
            f"no M >= 2^{max(min_bits, 1)} meets the mod-M inequality for p = {p}, d = {d}")

    def relaxed(M: int) -> bool:
        return d * math.sqrt(M / p) + M / p <= half

    width = max(_largest_power_of_two(p, relaxed), min_bits, 1)
    width = min(width, floor_log2(p))
    violations.append(f"mod-M inequality fails; M = 2^{width} from the relaxed rule")
    logger.warning("ext11 over F_%d: mod-M inequality relaxed, M = 2^%d", p, width)
    return 1 << width


class Ext11Config(_Extractor):
    """Deterministic extractor for (1, 1, d) sources over F_q.

    ``large_char`` reads the last coefficient mod M and folds the mixed-radix
    value to a power of two; ``small_char`` runs the strongly-biased
    extractor on the coefficient vector and folds its F_p^t output.
    """
    KIND = "ext11"

    def __init__(self, ctx: FieldCtx, d: int, epsilon: Any, branch: str,
                 payload: Union[ModMExtractor, StronglyBiasedExtractor],
                 relax: bool, min_bits: int, violations: List[str]) -> None:
        self.ctx = ctx
        self.d = d
        self.epsilon = epsilon
        self.branch = branch
        self.payload = payload
        self.relax = relax
        self.min_bits = min_bits
        self.violations = violations
        if branch == "large_char":
            self.range_size = ctx.p ** (ctx.m - 1) * payload.M
        else:
            self.range_size = ctx.p ** payload.t
        self.m_out = floor_log2(self.range_size)
        self.fold_loss = mod_m_uniform_distance(self.range_size, 1 << self.m_out)
        self.declared_error = float(epsilon) + float(self.fold_loss)

    def extract(self, point: Any) -> str:
        x = _scalar(point, self.ctx)
        coeffs = self.ctx.coeffs(x)
        p = self.ctx.p
        if self.branch == "large_char":
            value = coeffs[-1] % self.payload.M
            for c in reversed(coeffs[:-1]):
                value = value * p + c
            return _fold(value, self.range_size)[0]
        output = self.payload.extract(coeffs)
        if p == 2:
            return "".join(str(v) for v in output)
        value = 0
        for v in reversed(output):
            value = value * p + v
        return _fold(value, self.range_size)[0]

    def params(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx), "d": self.d,
                "epsilon": number_token(self.epsilon), "relax": self.relax,
                "min_bits": self.min_bits}

    def derived(self) -> Dict[str, Any]:
        payload = {"M": self.payload.M} if self.branch == "large_char" else \
            {"n_prime": self.payload.n_prime, "t": self.payload.t}
        return {"branch": self.branch, "payload": payload, "m_out": self.m_out,
                "fold_loss": number_token(self.fold_loss),
                "violations": list(self.violations)}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "Ext11Config":
        return build_ext11(parse_field_token(params["field"]), params["d"],
                           _eps(params["epsilon"]), params["relax"], params["min_bits"])


def build_ext11(ctx: FieldCtx, d: int, epsilon: Any, relax: bool = False,
                min_bits: int = 0) -> Ext11Config:
    """Builds the (1, 1, d) extractor.

    :param min_bits: smallest acceptable output length
    :raises FieldTooSmall: q < c0 d^5 / eps^2 in strict mode
    :raises ParamsInfeasible: the chosen branch has no feasible parameters
    """
    epsilon = _eps(epsilon)
    violations: List[str] = []
    floor = C0 * d ** 5 / Fraction(epsilon) ** 2
    if ctx.q < floor:
        if not relax:
            raise FieldTooSmall(f"q = {ctx.q} below c0 d^5 / eps^2 = {float(floor):.6g}")
        violations.append(f"q = {ctx.q} below the field-size floor {float(floor):.6g}")
        logger.warning("ext11: q = %d below the field-size floor %.6g", ctx.q, float(floor))

    branch = select_branch(ctx.p, d, epsilon)
    payload: Union[ModMExtractor, StronglyBiasedExtractor, None] = None
    if branch == "small_char":
        eps0 = 8 * d * d / math.sqrt(ctx.q)
        half = float(epsilon) / 2
        try:
            payload = build_strongly_biased_extractor(ctx.m, ctx.p, eps0, d, half)
        except ParamsInfeasible:
            if not relax:
                raise
            try:
                payload = build_strongly_biased_extractor(
                    ctx.m, ctx.p, eps0, d, half, n_prime=ctx.m, relax=True)
                violations.append(f"strongly biased parameters relaxed to n' = {ctx.m}")
                violations.extend(payload.violations)
            except ParamsInfeasible:
                payload = None
        if payload is not None and payload.t * math.log2(ctx.p) < min_bits:
            if not relax:
                raise ParamsInfeasible(f"small_char output of {payload.t} digits below "
                                       f"{min_bits} bits")
            payload = None
        if payload is None:
            branch = "large_char"
            violations.append("small_char infeasible; large_char used")
            logger.warning("ext11 over F_%d: small_char infeasible, using large_char", ctx.q)
    if branch == "large_char":
        M = _choose_modulus(ctx.p, d, float(epsilon), relax, min_bits, violations)
        payload = ModMExtractor(ctx.p, ctx.m, M)
    cfg = Ext11Config(ctx, d, epsilon, branch, payload, relax, min_bits, violations)
    logger.debug("ext11 over F_%d, d=%d: %s, m_out=%d", ctx.q, d, branch, cfg.m_out)
    return cfg


def extract11(cfg: Ext11Config, x: Scalar) -> str:
    return cfg.extract(x)


# === (n, 1, d) ===
class ExtN1Config(_Extractor):
    """Ext11 after the rank-1 map F(a) = sum_j a_j^{d_j}, degrees from
    ``prime_powers``, inner degree budget d' = 2 p_n d^2.
    """
    KIND = "extN1"

    def __init__(self, ctx: FieldCtx, n: int, d: int, epsilon: Any, dkl: DklExtractor,
                 d_prime: int, inner: Ext11Config, relax: bool, min_bits: int) -> None:
        self.ctx = ctx
        self.n = n
        self.d = d
        self.epsilon = epsilon
        self.dkl = dkl
        self.d_prime = d_prime
        self.inner = inner
        self.relax = relax
        self.min_bits = min_bits
        self.m_out = inner.m_out
        self.fold_loss = inner.fold_loss
        self.declared_error = float(epsilon) + float(self.fold_loss)
        self.violations = list(inner.violations)

    def extract(self, point: Sequence[Scalar]) -> str:
        if len(point) != self.n:
            raise LengthMismatch(f"point of length {len(point)}, expected {self.n}")
        return self.inner.extract(self.dkl.evaluate(point)[0])

    def params(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx), "n": self.n, "d": self.d,
                "epsilon": number_token(self.epsilon), "relax": self.relax,
                "min_bits": self.min_bits}

    def derived(self) -> Dict[str, Any]:
        return {"degrees": list(self.dkl.degrees.degrees), "d_prime": self.d_prime,
                "inner": self.inner.derived(), "m_out": self.m_out}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "ExtN1Config":
        return build_extN1(parse_field_token(params["field"]), params["n"], params["d"],
                           _eps(params["epsilon"]), params["relax"], params["min_bits"])


def build_extN1(ctx: FieldCtx, n: int, d: int, epsilon: Any, relax: bool = False,
                min_bits: int = 0) -> ExtN1Config:
    """
    :raises BoundViolation: a component degree overruns d'
    """
    epsilon = _eps(epsilon)
    degrees = choose_degrees(n, d, "prime_powers")
    matrix = build_regular_matrix(1, n, 1, ctx, "all_ones")
    dkl = DklExtractor(degrees, matrix)
    d_prime = 2 * int(prime(n)) * d * d
    if max(degrees.degrees) * d > d_prime:
        raise BoundViolation(f"degree {max(degrees.degrees)} * {d} exceeds d' = {d_prime}")
    inner = build_ext11(ctx, d_prime, epsilon / 2, relax, min_bits)
    return ExtN1Config(ctx, n, d, epsilon, dkl, d_prime, inner, relax, min_bits)


# === seeded hash extractor ===
def _modulus_bits(ctx: FieldCtx) -> int:
    return sum(c << i for i, c in enumerate(ctx.modulus))


class SeededExtractorConfig(_Extractor):
    """h_{a,b}(x) = a x + b over GF(2^{n_b}), truncated to
    n_out = n_b - delta - 2 log2(1/eps) bits.

    The seed is a then b, each n_b bits little-endian; a = 0 is read as 1.
    """
    KIND = "seeded"
    FAMILY = "multiply-shift"

    def __init__(self, n_b: int, delta: int, epsilon: Any) -> None:
        self.n_b = n_b
        self.delta = delta
        self.epsilon = epsilon
        self.seed_length = 2 * n_b
        self.m_out = max(0, math.floor(n_b - delta - 2 * math.log2(1 / float(epsilon))))
        self.ctx = make_field(2, n_b) if n_b else None
        self.declared_error = float(epsilon)
        self.violations = []

    def _hash(self, x: int, seed: str) -> int:
        a = bits_to_int(seed[:self.n_b][::-1]) or 1
        b = bits_to_int(seed[self.n_b:][::-1])
        return self.ctx.add(self.ctx.mul(a, x), b)

    def extract(self, point: Any) -> str:
        raise LengthMismatch("the seeded extractor needs a seed, use seeded_extract")

    def params(self) -> Dict[str, Any]:
        return {"n_b": self.n_b, "delta": self.delta, "epsilon": number_token(self.epsilon)}

    def derived(self) -> Dict[str, Any]:
        return {"family": self.FAMILY, "seed_length": self.seed_length, "m_out": self.m_out,
                "field": field_token(self.ctx) if self.ctx else None}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "SeededExtractorConfig":
        return build_seeded_extractor(params["n_b"], params["delta"], _eps(params["epsilon"]))


def build_seeded_extractor(n_b: int, delta: int, epsilon: Any) -> SeededExtractorConfig:
    return SeededExtractorConfig(n_b, delta, _eps(epsilon))


def seeded_extract(cfg: SeededExtractorConfig, x: str, seed: str) -> str:
    """
    :raises SeedLengthMismatch: seed is not 2 n_b bits
    :raises LengthMismatch: x is not n_b bits
    """
    if len(seed) != cfg.seed_length:
        raise SeedLengthMismatch(f"seed of {len(seed)} bits, expected {cfg.seed_length}")
    if len(x) != cfg.n_b:
        raise LengthMismatch(f"input of {len(x)} bits, expected {cfg.n_b}")
    if not cfg.m_out:
        return ""
    h = cfg._hash(bits_to_int(x[::-1]), seed)
    return element_bits(h, cfg.ctx)[:cfg.m_out]


def _gf2_mul_array(xs: np.ndarray, a: int, width: int, modulus: int) -> np.ndarray:
    result = np.zeros_like(xs)
    for i in range(width):
        if (a >> i) & 1:
            result ^= xs << i
    for degree in range(2 * width - 2, width - 1, -1):
        result ^= ((result >> degree) & 1) * (modulus << (degree - width))
    return result


def leftover_hash_distance(cfg: SeededExtractorConfig, support: Sequence[int],
                           budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """Exact distance of (seed, h_seed(X)) from (seed, uniform) for X flat on
    ``support``.

    The additive half of the seed shifts every output distribution without
    changing its distance, so only the multiplier is enumerated.

    :raises BudgetExceeded: 2^{n_b} |support| exceeds ``budget``
    """
    n_b = cfg.n_b
    cost = (1 << n_b) * len(support)
    if cost > budget or n_b > 31:
        raise BudgetExceeded(f"leftover hash check needs {cost} products, budget is {budget}")
    xs = np.asarray(support, dtype=np.int64)
    outcomes = 1 << cfg.m_out
    mask = outcomes - 1
    modulus = _modulus_bits(cfg.ctx) if cfg.ctx else 0
    total = 0.0
    for a in range(1 << n_b):
        images = _gf2_mul_array(xs, a or 1, n_b, modulus) & mask
        counts = np.bincount(images, minlength=outcomes)
        total += 0.5 * float(np.abs(counts / len(xs) - 1 / outcomes).sum())
    distance = total / (1 << n_b)
    return {"distance": distance, "bound": cfg.declared_error, "m_out": cfg.m_out,
            "pass": distance <= cfg.declared_error + DISTANCE_TOL}


# === full rank ===
class FullRankExtractor(_Extractor):
    """(x_1, x_2) -> (Ext1(x_1, y_1), y_2) with (y_1, y_2) = Ext2(x_2), x_1 in
    F_q^{k-1} seeded by the first bits of Ext2's output.
    """
    KIND = "full-rank"

    def __init__(self, ctx: FieldCtx, k: int, d: int, epsilon: Any,
                 ext1: SeededExtractorConfig, ext2: Ext11Config, ell: int, ell_used: int,
                 relax: bool, violations: List[str]) -> None:
        self.ctx = ctx
        self.k = k
        self.d = d
        self.epsilon = epsilon
        self.ext1 = ext1
        self.ext2 = ext2
        self.ell = ell
        self.ell_used = ell_used
        self.relax = relax
        self.violations = violations
        self.m_out = ext1.m_out + ext2.m_out - ell_used
        self.fold_loss = ext2.fold_loss
        self.declared_error = float(epsilon) + float(self.fold_loss)

    def extract(self, point: Sequence[Scalar]) -> str:
        if len(point) != self.k:
            raise LengthMismatch(f"point of length {len(point)}, expected {self.k}")
        x1 = "".join(element_bits(self.ctx.coerce(v), self.ctx) for v in point[:-1])
        y = self.ext2.extract(point[-1])
        seed = y[:self.ell_used].ljust(self.ell, "1")
        return seeded_extract(self.ext1, x1, seed) + y[self.ell_used:]

    def params(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx), "k": self.k, "d": self.d,
                "epsilon": number_token(self.epsilon), "relax": self.relax}

    def derived(self) -> Dict[str, Any]:
        return {"ext1": self.ext1.derived(), "ext2": self.ext2.derived(), "ell": self.ell,
                "ell_used": self.ell_used, "m_out": self.m_out,
                "violations": list(self.violations)}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> _Extractor:
        return build_full_rank_ext(parse_field_token(params["field"]), params["k"],
                                   params["d"], _eps(params["epsilon"]), params["relax"])


def build_full_rank_ext(ctx: FieldCtx, k: int, d: int, epsilon: Any,
                        relax: bool = False,
                        min_bits: int = 0) -> Union[Ext11Config, FullRankExtractor]:
    """Recursive extractor for (k, k, d) sources; k = 1 is Ext11 itself.

    :raises FieldTooSmall: q below the Ext11 floor at eps / 10 (strict)
    :raises ParamsInfeasible: Ext2 yields fewer than 2 n_b seed bits (strict)
    """
    epsilon = _eps(epsilon)
    if k == 1:
        return build_ext11(ctx, d, epsilon, relax, min_bits)
    eps_prime = epsilon / 10
    violations: List[str] = []
    floor = C0 * d ** 5 / Fraction(eps_prime) ** 2
    if ctx.q < floor:
        if not relax:
            raise FieldTooSmall(f"q = {ctx.q} below c0 d^5 / (eps/10)^2 = {float(floor):.6g}")
        violations.append(f"q = {ctx.q} below the field-size floor {float(floor):.6g}")
    n_b = (k - 1) * ctx.m * max(ctx.digit_bits, 1)
    delta = math.ceil(math.log2(d) + 3 + (n_b - (k - 1) * math.log2(ctx.q)))
    ext1 = build_seeded_extractor(n_b, delta, eps_prime)
    ext2 = build_ext11(ctx, d, eps_prime, relax)
    violations.extend(ext2.violations)
    ell = ext1.seed_length
    ell_used = ell
    if ell > ext2.m_out:
        if not relax:
            raise ParamsInfeasible(f"Ext2 gives {ext2.m_out} bits, the seed needs {ell}")
        ell_used = ext2.m_out
        violations.append(f"seed of {ell} bits built from {ell_used} bits padded with ones")
        logger.warning("full-rank k=%d: seed padded from %d to %d bits", k, ell_used, ell)
    return FullRankExtractor(ctx, k, d, epsilon, ext1, ext2, ell, ell_used, relax, violations)


# === composition ===
class EmptyExtractor(_Extractor):
    """Zero output bits, zero error."""
    KIND = "empty"

    def __init__(self) -> None:
        self.m_out = 0
        self.declared_error = 0.0
        self.violations = []

    def extract(self, point: Any) -> str:
        return ""

    def params(self) -> Dict[str, Any]:
        return {}

    def derived(self) -> Dict[str, Any]:
        return {"m_out": 0}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "EmptyExtractor":
        return cls()


class CompositionExtractor(_Extractor):
    """x -> (Ext1(x), Ext2(phi_y(x))) where y is the first ell bits of Ext1(x).
    """
    KIND = "composition"

    def __init__(self, ctx: FieldCtx, n: int, k: int, d: int, epsilon: Any, ell: int,
                 eps1: Any, eps0: Fraction, family: SeededRankFamily,
                 ext1: ExtN1Config, ext2: _Extractor, relax: bool) -> None:
        self.ctx = ctx
        self.n = n
        self.k = k
        self.d = d
        self.epsilon = epsilon
        self.ell = ell
        self.eps1 = eps1
        self.eps0 = eps0
        self.family = family
        self.ext1 = ext1
        self.ext2 = ext2
        self.relax = relax
        self.error_budget = 6 * eps1 * 2 ** ell + 4 * eps1 + eps0
        self.m_out = ext1.m_out + ext2.m_out
        self.fold_loss = ext1.fold_loss + ext2.fold_loss
        self.declared_error = float(epsilon) + float(self.fold_loss)
        self.violations = ext1.violations + ext2.violations

    def extract(self, point: Sequence[Scalar]) -> str:
        if len(point) != self.n:
            raise LengthMismatch(f"point of length {len(point)}, expected {self.n}")
        head = self.ext1.extract(point)
        y = bits_to_int(head[:self.ell])
        z = self.family.apply(y, point)
        return head + self.ext2.extract(z)

    def params(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx), "n": self.n, "k": self.k, "d": self.d,
                "epsilon": number_token(self.epsilon), "relax": self.relax}

    def derived(self) -> Dict[str, Any]:
        return {"ell": self.ell, "eps1": number_token(self.eps1),
                "eps0": number_token(self.eps0),
                "error_budget": number_token(self.error_budget),
                "family": self.family.to_json(), "ext1": self.ext1.derived(),
                "ext2": self.ext2.derived(), "m_out": self.m_out}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> _Extractor:
        return build_composition(parse_field_token(params["field"]), params["n"],
                                 params["k"], params["d"], _eps(params["epsilon"]),
                                 params["relax"])


def build_composition(ctx: FieldCtx, n: int, k: int, d: int, epsilon: Any,
                      relax: bool = False) -> _Extractor:
    """Extractor for (n, k, d) sources; k = 0 is empty and k = 1 is ExtN1.

    :raises FieldTooSmall: q - 1 < max(n, 2^ell)
    :raises ParamsInfeasible: the error budget exceeds eps
    """
    epsilon = _eps(epsilon)
    if k == 0:
        return EmptyExtractor()
    if k == 1:
        return build_extN1(ctx, n, d, epsilon, relax)
    ell = math.ceil(math.log2(2 * n * n / epsilon))
    eps1 = (epsilon / 2) / (6 * 2 ** ell + 4)
    eps0 = Fraction((k - 1) * (n - k + 1), 2 ** ell)
    budget = 6 * eps1 * 2 ** ell + 4 * eps1 + eps0
    if budget > epsilon:
        raise ParamsInfeasible(f"error budget {float(budget):.6g} exceeds eps = {float(epsilon)}")
    if ctx.q - 1 < max(n, 2 ** ell):
        raise FieldTooSmall(f"F_{ctx.q} has fewer than max({n}, 2^{ell}) nonzero elements")
    family = build_seeded_family(n, k - 1, ctx, 2 ** ell)
    ext1 = build_extN1(ctx, n, d, eps1, relax, min_bits=ell)
    ext2 = build_full_rank_ext(ctx, k - 1, d, eps1, relax)
    logger.debug("composition n=%d k=%d: ell=%d, eps1=%.3g, eps0=%.3g",
                 n, k, ell, float(eps1), float(eps0))
    return CompositionExtractor(ctx, n, k, d, epsilon, ell, eps1, eps0, family,
                                ext1, ext2, relax)


# === measurement ===
class BinarizationExtractor(_Extractor):
    """x -> x mod 2^floor(log2 q); its error is the exact folding loss.
    """
    KIND = "binarization"

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx = ctx
        self.m_out = floor_log2(ctx.q)
        self.fold_loss = mod_m_uniform_distance(ctx.q, 1 << self.m_out)
        self.declared_error = float(self.fold_loss)
        self.violations = []

    def extract(self, point: Any) -> str:
        return _fold(_scalar(point, self.ctx), self.ctx.q)[0]

    def params(self) -> Dict[str, Any]:
        return {"field": field_token(self.ctx)}

    def derived(self) -> Dict[str, Any]:
        return {"m_out": self.m_out, "fold_loss": number_token(self.fold_loss)}

    @classmethod
    def rebuild(cls, params: Dict[str, Any]) -> "BinarizationExtractor":
        return cls(parse_field_token(params["field"]))


EXTRACTOR_KINDS = {klass.KIND: klass for klass in (
    Ext11Config, ExtN1Config, SeededExtractorConfig, FullRankExtractor,
    EmptyExtractor, CompositionExtractor, BinarizationExtractor)}


def _output_distribution(ext: _Extractor, counts: Dict[Tuple[int, ...], int],
                         mode: str) -> FiniteDistribution:
    carrier = Carrier.residue_power(1 << ext.m_out, 1)
    out: Dict[Tuple[int, ...], int] = {}
    for point, count in counts.items():
        key = (bits_to_int(ext.extract(point)),)
        out[key] = out.get(key, 0) + count
    return FiniteDistribution(carrier, out, mode)


def measure_extractor(ext: _Extractor, source: FiniteDistribution, mode: str = "exact",
                      samples: int = SAMPLE_BUDGET, rng_seed: int = 0,
                      budget: int = ENUMERATION_BUDGET) -> Dict[str, Any]:
    """Distance of ext(source) from uniform on {0, 1}^m_out.

    ``exact`` runs over the source support; ``monte_carlo`` draws ``samples``
    points and reports the corrected estimate with its noise floor.

    :raises BudgetExceeded: the support is larger than ``budget`` (exact mode)
    """
    entropy = min_entropy(source)
    if mode == "exact":
        if source.support_size > budget:
            raise BudgetExceeded(
                f"support of {source.support_size} points exceeds budget {budget}")
        output = _output_distribution(ext, source.counts, "exact")
        distance = float(distance_to_uniform(output))
        floor = 0.0
        passed = distance <= ext.declared_error + DISTANCE_TOL
    else:
        rng = np.random.default_rng(rng_seed)
        keys = sorted(source.counts)
        weights = np.asarray([source.counts[key] for key in keys], dtype=np.float64)
        drawn = np.bincount(rng.choice(len(keys), size=samples, p=weights / weights.sum()),
                            minlength=len(keys))
        sampled = {keys[i]: int(c) for i, c in enumerate(drawn) if c}
        output = _output_distribution(ext, sampled, "sampled")
        distance, floor = sampled_distance_to_uniform(output)
        passed = distance <= ext.declared_error + floor
        mode = f"monte_carlo({samples})"
    return {"distance": distance, "floor": floor, "min_entropy": entropy,
            "m_out": ext.m_out, "declared_eps": ext.declared_error, "mode": mode,
            "pass": passed}

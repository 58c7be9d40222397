"""
algext.group_fourier
~~~~~~~~~~~~~~~~~~~~
Exact distributions over finite abelian groups (F_q^n and Z_N^t), their
statistical distance, min-entropy and full bias spectra.

Characters of F_q^n are indexed by alpha vectors, chi_alpha(x) =
exp(2 pi i Tr(<alpha, x>) / p). Characters of Z_N^t are indexed by residue
vectors a, chi_a(x) = exp(2 pi i <a, x> / N).
"""
import csv
import logging
import math
from collections import Counter
from fractions import Fraction
from itertools import product
from typing import (Any, Callable, Dict, Iterable, Iterator, List, Optional,
                    Sequence, Tuple, Union)

import numpy as np

from .constants import BIAS_TOL, CLOSURE_CAP, DFT_BUDGET
from .errors import BudgetExceeded, CarrierMismatch, EmptySupport
from .finite_field import FieldCtx, field_token, parse_field_token, trace_form
from .utils import log_base, log_inverse

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]
Value = Union[Fraction, float]


class Carrier:
    """A finite abelian group, either F_q^n or Z_N^t.

    Elements are tuples: n encoded field elements or t residues.
    """

    def __init__(self, kind: str, size: int, arity: int,
                 ctx: Optional[FieldCtx] = None) -> None:
        self.kind = kind
        self.size = size
        self.arity = arity
        self.ctx = ctx
        if kind == "field_power":
            assert ctx is not None
            self.shape: Tuple[int, ...] = (ctx.p,) * (ctx.m * arity)
            self.cardinality = ctx.q ** arity
        else:
            self.shape = (size,) * arity
            self.cardinality = size ** arity

    @classmethod
    def field_power(cls, ctx: FieldCtx, n: int = 1) -> "Carrier":
        """F_q^n.
        """
        return cls("field_power", ctx.q, n, ctx)

    @classmethod
    def residue_power(cls, modulus: int, t: int = 1) -> "Carrier":
        """Z_N^t.
        """
        return cls("residue_power", modulus, t)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Carrier) and self.kind == other.kind and \
            self.size == other.size and self.arity == other.arity and \
            self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.kind, self.size, self.arity, self.ctx))

    def __repr__(self) -> str:
        return f"Carrier({self.token()})"

    def token(self) -> str:
        if self.kind == "field_power":
            return f"F({field_token(self.ctx)})^{self.arity}"
        return f"Z({self.size})^{self.arity}"

    def normalize(self, element: Any) -> Point:
        """Turns a scalar or a sequence into a carrier tuple.
        """
        if isinstance(element, (int, np.integer)):
            element = (int(element),)
        return tuple(int(v) for v in element)

    def digits(self, element: Point) -> Point:
        """Group coordinates of an element (coefficient digits for F_q^n).
        """
        if self.kind == "field_power" and self.ctx.m > 1:
            out: List[int] = []
            for value in element:
                out.extend(self.ctx.coeffs(value))
            return tuple(out)
        return element

    def from_digits(self, digits: Sequence[int]) -> Point:
        if self.kind == "field_power" and self.ctx.m > 1:
            m = self.ctx.m
            return tuple(self.ctx.from_coeffs(digits[i * m:(i + 1) * m])
                         for i in range(self.arity))
        return tuple(int(d) for d in digits)

    def elements(self) -> Iterator[Point]:
        """Every element in lexicographic order.
        """
        return product(range(self.size), repeat=self.arity)

    def to_json(self) -> Dict[str, Any]:
        if self.kind == "field_power":
            return {"kind": self.kind, "field": field_token(self.ctx), "n": self.arity}
        return {"kind": self.kind, "N": self.size, "t": self.arity}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Carrier":
        if data["kind"] == "field_power":
            return cls.field_power(parse_field_token(data["field"]), int(data["n"]))
        return cls.residue_power(int(data["N"]), int(data["t"]))


class FiniteDistribution:
    """A probability distribution given by integer counts over a carrier.

    In ``exact`` mode the counts are multiplicities over an enumerated
    population; in ``sampled`` mode they are draws and ``total`` is the
    sample size.
    """

    def __init__(self, carrier: Carrier, counts: Dict[Point, int],
                 mode: str = "exact") -> None:
        self.carrier = carrier
        self.counts = {carrier.normalize(k): int(v) for k, v in counts.items() if v}
        if any(v < 0 for v in self.counts.values()):
            raise ValueError("counts must be non-negative")
        self.total = sum(self.counts.values())
        self.mode = mode

    @classmethod
    def uniform(cls, carrier: Carrier,
                support: Optional[Iterable[Any]] = None) -> "FiniteDistribution":
        elements = carrier.elements() if support is None else support
        return cls(carrier, {carrier.normalize(x): 1 for x in elements})

    @classmethod
    def point_mass(cls, carrier: Carrier, element: Any) -> "FiniteDistribution":
        return cls(carrier, {carrier.normalize(element): 1})

    @classmethod
    def from_samples(cls, carrier: Carrier,
                     samples: Iterable[Any]) -> "FiniteDistribution":
        return cls(carrier, dict(Counter(carrier.normalize(s) for s in samples)),
                   mode="sampled")

    @property
    def support_size(self) -> int:
        return len(self.counts)

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def weight(self, element: Any) -> Fraction:
        """Probability of an element as an exact fraction.
        """
        if not self.total:
            raise EmptySupport("distribution has no mass")
        return Fraction(self.counts.get(self.carrier.normalize(element), 0), self.total)

    def to_json(self) -> Dict[str, Any]:
        return {
            "carrier": self.carrier.to_json(),
            "mode": self.mode,
            "counts": [[list(k), v] for k, v in sorted(self.counts.items())],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FiniteDistribution":
        carrier = Carrier.from_json(data["carrier"])
        counts = {tuple(k): v for k, v in data["counts"]}
        return cls(carrier, counts, data.get("mode", "exact"))


class BiasSpectrum:
    """E[chi(D)] for every character of the carrier.

    ``values`` is indexed by the dual group coordinates; :meth:`entry`
    translates a character index alpha into those coordinates.
    """

    def __init__(self, carrier: Carrier, values: np.ndarray, mode: str,
                 samples: Optional[int] = None) -> None:
        self.carrier = carrier
        self.values = values
        self.mode = mode
        self.samples = samples
        self._form = trace_form(carrier.ctx) \
            if carrier.kind == "field_power" and carrier.ctx.m > 1 else None

    def dual_coordinates(self, alpha: Any) -> Point:
        """Dual coordinates beta with chi_alpha(x) = exp(2 pi i <beta, digits(x)> / p).
        """
        alpha = self.carrier.normalize(alpha)
        if self._form is None:
            return alpha
        ctx = self.carrier.ctx
        out: List[int] = []
        for value in alpha:
            coeffs = np.array(ctx.coeffs(value), dtype=np.int64)
            out.extend(int(v) for v in (coeffs @ self._form) % ctx.p)
        return tuple(out)

    def entry(self, alpha: Any) -> complex:
        return complex(self.values[self.dual_coordinates(alpha)])

    def nontrivial_abs(self) -> np.ndarray:
        """|E[chi(D)]| over every nontrivial character.
        """
        flat = np.abs(self.values).ravel()
        return flat[1:]

    def max_bias(self) -> float:
        rest = self.nontrivial_abs()
        return float(rest.max()) if rest.size else 0.0

    def rows(self) -> Iterator[Dict[str, Any]]:
        """CSV rows ordered by character index.
        """
        for alpha in self.carrier.elements():
            value = self.entry(alpha)
            yield {
                "character_index": ",".join(str(a) for a in alpha),
                "real": value.real,
                "imag": value.imag,
                "abs": abs(value),
            }

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle,
                                    fieldnames=["character_index", "real", "imag", "abs"])
            writer.writeheader()
            writer.writerows(self.rows())


# === distances and entropy ===
def _check_carriers(d1: FiniteDistribution, d2: FiniteDistribution) -> None:
    if d1.carrier != d2.carrier:
        raise CarrierMismatch(f"{d1.carrier.token()} vs {d2.carrier.token()}")


def _require_mass(dist: FiniteDistribution) -> None:
    if not dist.total:
        raise EmptySupport("distribution has no mass")


def statistical_distance(d1: FiniteDistribution, d2: FiniteDistribution) -> Value:
    """Half the L1 distance; an exact Fraction when both are exact.

    :raises CarrierMismatch: carriers differ
    """
    _check_carriers(d1, d2)
    _require_mass(d1)
    _require_mass(d2)
    keys = set(d1.counts) | set(d2.counts)
    t1, t2 = d1.total, d2.total
    numerator = sum(abs(d1.counts.get(k, 0) * t2 - d2.counts.get(k, 0) * t1)
                    for k in keys)
    distance = Fraction(numerator, 2 * t1 * t2)
    return distance if d1.exact and d2.exact else float(distance)


def distance_to_uniform(dist: FiniteDistribution,
                        outcomes: Optional[int] = None) -> Value:
    """Distance to the uniform distribution on the carrier, without
    materializing it.

    :param outcomes: (optional) size of the uniform target, defaults to
        the carrier cardinality
    """
    _require_mass(dist)
    size = outcomes if outcomes is not None else dist.carrier.cardinality
    total = dist.total
    numerator = sum(abs(c * size - total) for c in dist.counts.values())
    numerator += (size - dist.support_size) * total
    distance = Fraction(numerator, 2 * total * size)
    return distance if dist.exact else float(distance)


def sampled_distance_to_uniform(dist: FiniteDistribution,
                                outcomes: Optional[int] = None) -> Tuple[float, float]:
    """Bias-corrected plug-in estimate and its noise floor.

    The estimate subtracts (K - 1) / (2 n) from the plug-in distance; the
    floor is 1/2 sqrt(2 K / (pi n)), the expected plug-in distance of n
    uniform draws. Acceptance compares against the floor, never against 0.
    """
    size = outcomes if outcomes is not None else dist.carrier.cardinality
    plug_in = float(distance_to_uniform(dist, size))
    n = dist.total
    estimate = max(0.0, plug_in - (size - 1) / (2 * n))
    floor = 0.5 * math.sqrt(2 * size / (math.pi * n))
    return estimate, floor


def min_entropy(dist: FiniteDistribution) -> float:
    """-log2 of the heaviest atom.

    :raises EmptySupport: no mass
    """
    _require_mass(dist)
    return math.log2(dist.total) - math.log2(max(dist.counts.values()))


def _atom_cap(k: float) -> Fraction:
    """2^-k; a non-integer k uses the exact value of the float 2.0 ** -k.
    """
    if float(k).is_integer():
        k = int(k)
        return Fraction(1, 2 ** k) if k >= 0 else Fraction(2 ** -k)
    return Fraction(2.0 ** -k)


def trimmed_mass(dist: FiniteDistribution, k: float) -> Value:
    """Mass above 2^-k per atom: the distance from D to the nearest
    k-source (on a carrier with at least 2^k elements).

    A Fraction for exact distributions, a float for sampled ones.
    """
    _require_mass(dist)
    cap = _atom_cap(k)
    excess = sum((Fraction(c, dist.total) - cap for c in dist.counts.values()
                  if Fraction(c, dist.total) > cap), Fraction(0))
    return excess if dist.exact else float(excess)


def pushforward(dist: FiniteDistribution, fn: Callable[[Point], Any],
                carrier: Carrier) -> FiniteDistribution:
    """Image distribution fn(D) on a new carrier.
    """
    counts: Dict[Point, int] = {}
    for key, count in dist.counts.items():
        image = carrier.normalize(fn(key))
        counts[image] = counts.get(image, 0) + count
    return FiniteDistribution(carrier, counts, dist.mode)


# === spectra ===
def bias_spectrum(dist: FiniteDistribution, budget: int = DFT_BUDGET) -> BiasSpectrum:
    """E[chi(D)] for every character, by one multidimensional FFT.

    :raises BudgetExceeded: carrier larger than the DFT budget
    """
    _require_mass(dist)
    carrier = dist.carrier
    if carrier.cardinality > budget:
        raise BudgetExceeded(
            f"carrier of size {carrier.cardinality} exceeds DFT budget {budget}")
    grid = np.zeros(carrier.shape, dtype=np.float64)
    for key, count in dist.counts.items():
        grid[carrier.digits(key)] += count
    grid /= dist.total
    values = np.fft.ifftn(grid) * carrier.cardinality
    values[(0,) * len(carrier.shape)] = 1.0
    samples = None if dist.exact else dist.total
    mode = "exact" if dist.exact else f"sampled({dist.total})"
    return BiasSpectrum(carrier, values, mode, samples)


def parseval_gap(dist: FiniteDistribution, spectrum: BiasSpectrum) -> float:
    """|sum |entry|^2 - |A| sum D(x)^2|.
    """
    energy = float(np.sum(np.abs(spectrum.values) ** 2))
    collision = sum((c / dist.total) ** 2 for c in dist.counts.values())
    return abs(energy - dist.carrier.cardinality * collision)


def _generated_subgroup(generators: Sequence[Point], moduli: Sequence[int],
                        cap: int) -> Optional[set]:
    zero = tuple(0 for _ in moduli)

    def add(a: Point, b: Point) -> Point:
        return tuple((x + y) % n for x, y, n in zip(a, b, moduli))

    group = {zero}
    for gen in generators:
        if gen in group:
            continue
        multiples = [zero]
        current = gen
        while current != zero:
            multiples.append(current)
            current = add(current, gen)
        if len(group) * len(multiples) > cap:
            return None
        group = {add(s, k) for s in group for k in multiples}
        if len(group) > cap:
            return None
    return group


def classify_bias(spectrum: BiasSpectrum, epsilon: float,
                  cap: int = CLOSURE_CAP) -> Dict[str, Any]:
    """Counts nontrivial characters with |bias| > epsilon and decides
    whether they form a subgroup together with the trivial character.

    :return: dict with e_count, strongly, witness_subgroup_size and
        inconclusive (closure exceeded ``cap``)
    """
    magnitudes = np.abs(spectrum.values)
    mask = magnitudes > float(epsilon) + BIAS_TOL
    mask[(0,) * magnitudes.ndim] = False
    violators = [tuple(int(v) for v in idx) for idx in np.argwhere(mask)]
    group = _generated_subgroup(violators, spectrum.carrier.shape, cap)
    if group is None:
        logger.warning("closure of %d violators exceeds %d, inconclusive",
                       len(violators), cap)
        return {"e_count": len(violators), "strongly": False,
                "witness_subgroup_size": None, "inconclusive": True}
    return {
        "e_count": len(violators),
        "strongly": len(group) == len(violators) + 1,
        "witness_subgroup_size": len(group),
        "inconclusive": False,
    }


# === checks ===
def xor_distance_check(dist: FiniteDistribution,
                       budget: int = DFT_BUDGET) -> Dict[str, Any]:
    """Distance to uniform against max_bias * sqrt(|A|).
    """
    spectrum = bias_spectrum(dist, budget)
    max_bias = spectrum.max_bias()
    measured = float(distance_to_uniform(dist))
    bound = max_bias * math.sqrt(dist.carrier.cardinality)
    return {
        "max_bias": max_bias,
        "measured_distance": measured,
        "bound": bound,
        "holds": measured <= bound + BIAS_TOL,
    }


def entropy_bound_check(dist: FiniteDistribution, epsilon: float, e: int,
                        epsilon_prime: float) -> Dict[str, Any]:
    """Is an (epsilon, e)-biased D epsilon'-close to a k-source with
    k = min(2 log(1/eps), log|A| - log e) - log(2/eps')?
    """
    size = dist.carrier.cardinality
    k = min(2 * log_inverse(epsilon), math.log2(size) - log_base(e, 2)) \
        - math.log2(2 / float(epsilon_prime))
    if k <= 0:
        return {"k": k, "trimmed": 0.0, "vacuous": True, "pass": True}
    trimmed = trimmed_mass(dist, k)
    return {
        "k": k,
        "trimmed": float(trimmed),
        "vacuous": False,
        "pass": float(trimmed) <= float(epsilon_prime) + BIAS_TOL,
    }


def min_entropy_floor_check(dist: FiniteDistribution, k: int, d: int,
                            q: int) -> Dict[str, Any]:
    """Is an (n, k, d) source 2 eps-close, eps = 2 k d^2 / q, to a source of
    min-entropy k log q - log d - 2?
    """
    floor = k * math.log2(q) - math.log2(d) - 2
    allowed = Fraction(4 * k * d * d, q)
    trimmed = trimmed_mass(dist, floor) if floor > 0 else Fraction(0)
    return {
        "entropy_floor": floor,
        "trimmed": float(trimmed),
        "allowed": float(allowed),
        "min_entropy": min_entropy(dist),
        "pass": trimmed <= allowed,
    }


def entropy_upper_bound_check(dist: FiniteDistribution, k: int, d: int, q: int,
                              irreducible: bool = False) -> Dict[str, Any]:
    """Distance from every (k log q + 2 log d + 2)-source is at least
    1/(4d); for irreducible sources, distance from every
    (k log q + log d + 1)-source is at least 1/2.
    """
    if irreducible:
        ceiling = k * math.log2(q) + math.log2(d) + 1
        required: Fraction = Fraction(1, 2)
    else:
        ceiling = k * math.log2(q) + 2 * math.log2(d) + 2
        required = Fraction(1, 4 * d)
    trimmed = trimmed_mass(dist, ceiling)
    return {
        "entropy_ceiling": ceiling,
        "distance": float(trimmed),
        "required": float(required),
        "pass": trimmed >= required - BIAS_TOL,
    }

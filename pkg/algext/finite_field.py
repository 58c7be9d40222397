"""
algext.finite_field
~~~~~~~~~~~~~~~~~~~
Arithmetic for prime fields and their extensions.

Elements are stored as integers ``v = c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``c_i`` are the coefficients in the polynomial basis ``1, X, ..., X^{m-1}``.
Integer order is therefore the lexicographic order on coefficient vectors
(highest coefficient most significant) and is the enumeration order.
"""
import cmath
import functools
import logging
import math
from typing import (Any, Callable, Iterator, List, Optional, Sequence, Tuple, Type,
                    Union)

import galois
import numpy as np
from sympy import Poly, factorint, isprime, symbols

from .constants import MAX_FIELD_BITS
from .errors import (CardinalityOverflow, CtxMismatch, DivisionByZero,
                     NonPrime, ReducibleModulus, ZeroElement)
from .utils import ceil_log2

logger = logging.getLogger(__name__)

_X = symbols("X")

IntOrElement = Union[int, "FieldElement"]


class FieldCtx:
    """An immutable finite field F_q with q = p^m.

    Use :func:`make_field` to build one; the constructor trusts its input.

    :attribute p: characteristic
    :attribute m: extension degree
    :attribute modulus: monic modulus coefficients, lowest degree first,
        leading 1 included
    :attribute q: cardinality
    """
    __slots__ = ("p", "m", "modulus", "q", "digit_bits", "_modulus_bits",
                 "_trace_basis")

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]) -> None:
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p ** m
        self.digit_bits = ceil_log2(p)
        self._modulus_bits = sum(c << i for i, c in enumerate(modulus)) \
            if p == 2 else 0
        self._trace_basis: Optional[Tuple[int, ...]] = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and \
            (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx({field_token(self)})"

    # === representation ===
    def coeffs(self, value: int) -> Tuple[int, ...]:
        """Coefficient vector of an encoded element, lowest degree first.
        """
        out = []
        for _ in range(self.m):
            value, digit = divmod(value, self.p)
            out.append(digit)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Encodes a coefficient vector (lowest degree first).
        """
        value = 0
        for digit in reversed(coeffs):
            value = value * self.p + digit % self.p
        return value

    def coerce(self, value: IntOrElement) -> int:
        """Turns an int or a FieldElement into an encoded element.

        Integers in [0, q) are encodings; any other integer c stands for
        c·1 in the prime subfield.
        """
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise CtxMismatch(f"element of {value.ctx} used in {self}")
            return value.value
        value = int(value)
        if 0 <= value < self.q:
            return value
        return value % self.p

    def element(self, value: IntOrElement) -> "FieldElement":
        """Wraps an encoded value.
        """
        return FieldElement(self, self.coerce(value))

    def elements(self) -> range:
        """Encoded elements in enumeration order.
        """
        return range(self.q)

    # === arithmetic on encoded values ===
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiplies an element by an integer of the prime subfield.
        """
        c %= self.p
        if self.m == 1:
            return c * a % self.p
        return self.from_coeffs([c * x for x in self.coeffs(a)])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if self.p == 2:
            return self._mul_binary(a, b)
        return self._mul_poly(a, b)

    def _mul_binary(self, a: int, b: int) -> int:
        result = 0
        top = 1 << self.m
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self._modulus_bits
        return result

    def _mul_poly(self, a: int, b: int) -> int:
        m, p = self.m, self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        for deg in range(2 * m - 2, m - 1, -1):
            lead = prod[deg] % p
            prod[deg] = 0
            if lead:
                for i in range(m):
                    prod[deg - m + i] -= lead * self.modulus[i]
        return self.from_coeffs(prod[:m])

    def pow(self, a: int, exponent: int) -> int:
        """Square-and-multiply; pow(x, 0) is 1, including x = 0.
        """
        if exponent < 0:
            a = self.inv(a)
            exponent = -exponent
        if self.m == 1:
            return pow(a, exponent, self.p)
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {field_token(self)}")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def trace(self, a: int) -> int:
        """Tr(a), a residue of the prime subfield.
        """
        if self.m == 1:
            return a
        if self._trace_basis is None:
            self._trace_basis = tuple(
                _trace_by_frobenius(self, self.monomial(j))
                for j in range(self.m))
        return sum(c * t for c, t in zip(self.coeffs(a), self._trace_basis)) \
            % self.p

    def monomial(self, power: int) -> int:
        """Encoded X^power (reduced by the modulus).
        """
        if self.m == 1:
            return 1
        if power < self.m:
            return self.p ** power
        return self.pow(self.p, power)


def _trace_by_frobenius(ctx: FieldCtx, basis_value: int) -> int:
    # basis_value = X^j; X is encoded as p.
    total = 0
    x = basis_value
    for _ in range(ctx.m):
        total = ctx.add(total, x)
        x = ctx.pow(x, ctx.p)
    return ctx.coeffs(total)[0]


class FieldElement:
    """An element of a :class:`FieldCtx`.

    Supports ``+ - * / **`` and unary minus against other elements of the
    same field or plain integers.
    """
    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int) -> None:
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coefficient vector, lowest degree first.
        """
        return self.ctx.coeffs(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other: IntOrElement) -> int:
        return self.ctx.coerce(other)

    def __add__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __rsub__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.sub(self._other(other), self.value))

    def __mul__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __rtruediv__(self, other: IntOrElement) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.div(self._other(other), self.value))

    def __pow__(self, exponent: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.pow(self.value, exponent))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.ctx.m == 1:
            return str(self.value)
        terms = []
        for power, coeff in reversed(list(enumerate(self.coeffs))):
            if not coeff:
                continue
            mono = "" if power == 0 else ("X" if power == 1 else f"X^{power}")
            if not mono:
                terms.append(str(coeff))
            else:
                terms.append(mono if coeff == 1 else f"{coeff}{mono}")
        return "+".join(terms) or "0"


# === construction ===
def _is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
    poly = Poly(list(reversed(coeffs)), _X, modulus=p)
    return poly.degree() == len(coeffs) - 1 and poly.is_irreducible


@functools.lru_cache(maxsize=256)
def _build_field(p: int, m: int, modulus: Optional[Tuple[int, ...]]) -> FieldCtx:
    if not isprime(p):
        raise NonPrime(f"{p} is not a prime")
    if m < 1:
        raise ReducibleModulus(f"extension degree must be >= 1, got {m}")
    if (p ** m).bit_length() > MAX_FIELD_BITS:
        raise CardinalityOverflow(
            f"{p}^{m} does not fit in {MAX_FIELD_BITS} bits")

    if modulus is not None:
        if len(modulus) != m + 1 or modulus[-1] != 1 or \
                any(not 0 <= c < p for c in modulus):
            raise ReducibleModulus(
                f"modulus {modulus} is not a monic degree-{m} polynomial over F_{p}")
        if m > 1 and not _is_irreducible(p, modulus):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        return FieldCtx(p, m, modulus)

    if m == 1:
        return FieldCtx(p, 1, (0, 1))

    for lower in range(p ** m):
        candidate = []
        rest = lower
        for _ in range(m):
            rest, digit = divmod(rest, p)
            candidate.append(digit)
        candidate.append(1)
        if candidate[0] != 0 and _is_irreducible(p, candidate):
            logger.debug("modulus for F_%d^%d: %s", p, m, candidate)
            return FieldCtx(p, m, tuple(candidate))
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over F_{p}")


def make_field(p: int, m: int = 1,
               modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Builds the field F_{p^m}.

    Without a modulus the smallest irreducible monic polynomial (in the
    element encoding order of its lower coefficients) is chosen, so the
    result is a pure function of (p, m).

    :param p: characteristic
    :param m: (optional) extension degree, defaults to 1
    :param modulus: (optional) monic modulus, lowest degree first
    :raises NonPrime: p is not a prime
    :raises ReducibleModulus: modulus is not monic irreducible of degree m
    :raises CardinalityOverflow: q does not fit the machine-word budget
    :rtype: FieldCtx
    """
    return _build_field(int(p), int(m),
                        tuple(int(c) for c in modulus) if modulus is not None else None)


def parse_field_token(token: str) -> FieldCtx:
    """Parses ``p``, ``p^m`` or ``p^m/c0,...,cm`` into a field.
    """
    token = token.strip()
    modulus: Optional[List[int]] = None
    if "/" in token:
        token, coeff_text = token.split("/", 1)
        modulus = [int(c) for c in coeff_text.split(",")]
    if "^" in token:
        p_text, m_text = token.split("^", 1)
        return make_field(int(p_text), int(m_text), modulus)
    return make_field(int(token), 1, modulus)


def field_token(ctx: FieldCtx) -> str:
    """Text token of a field, e.g. ``2^2/1,1,1``; prime fields print as ``p``.
    """
    if ctx.m == 1:
        return str(ctx.p)
    return f"{ctx.p}^{ctx.m}/" + ",".join(str(c) for c in ctx.modulus)


# === operations ===
_OPS = {
    "add": lambda ctx, a, b: ctx.add(a, b),
    "sub": lambda ctx, a, b: ctx.sub(a, b),
    "mul": lambda ctx, a, b: ctx.mul(a, b),
    "div": lambda ctx, a, b: ctx.div(a, b),
}


def arith(a: FieldElement, b: Optional[FieldElement], op: str,
          exponent: Optional[int] = None) -> FieldElement:
    """Applies a field operation.

    :param a: first operand
    :param b: second operand, ignored by ``pow``, ``inv`` and ``neg``
    :param op: one of add, sub, mul, div, pow, inv, neg
    :param exponent: exponent for ``pow``
    :raises CtxMismatch: operands from different fields
    :raises DivisionByZero: inverting zero
    :rtype: FieldElement
    """
    ctx = a.ctx
    if op == "pow":
        return FieldElement(ctx, ctx.pow(a.value, int(exponent or 0)))
    if op == "inv":
        return FieldElement(ctx, ctx.inv(a.value))
    if op == "neg":
        return FieldElement(ctx, ctx.neg(a.value))
    if b is None or op not in _OPS:
        raise ValueError(f"unknown or incomplete operation {op}")
    if b.ctx != ctx:
        raise CtxMismatch(f"{ctx} and {b.ctx} differ")
    return FieldElement(ctx, _OPS[op](ctx, a.value, b.value))


def trace(x: FieldElement) -> int:
    """Tr(x) = sum of x^(p^i), i < m, as a residue mod p.
    """
    return x.ctx.trace(x.value)


def additive_character(alpha: FieldElement) -> Callable[[FieldElement], complex]:
    """Returns chi_alpha(x) = exp(2 pi i Tr(alpha x) / p).
    """
    ctx = alpha.ctx

    def chi(x: FieldElement) -> complex:
        if x.ctx != ctx:
            raise CtxMismatch(f"character over {ctx} applied to {x.ctx}")
        phase = ctx.trace(ctx.mul(alpha.value, x.value))
        return cmath.exp(2j * math.pi * phase / ctx.p)

    return chi


def multiplicative_order(w: FieldElement) -> int:
    """Least t >= 1 with w^t = 1, found by descending through the prime
    factors of q - 1.

    :raises ZeroElement: w is zero
    """
    ctx = w.ctx
    if w.value == 0:
        raise ZeroElement("0 has no multiplicative order")
    order = ctx.q - 1
    for prime in factorint(order):
        while order % prime == 0 and ctx.pow(w.value, order // prime) == 1:
            order //= prime
    return order


def enumerate_field(ctx: FieldCtx) -> Iterator[FieldElement]:
    """All q elements in coefficient-lexicographic order.
    """
    for value in ctx.elements():
        yield FieldElement(ctx, value)


def trace_form(ctx: FieldCtx) -> np.ndarray:
    """The m x m matrix Tr(X^a X^b) mod p.

    Maps a character index alpha (coefficients of alpha) to the dual vector
    beta with Tr(alpha x) = <beta, coeffs(x)>.
    """
    table = np.zeros((ctx.m, ctx.m), dtype=np.int64)
    for a in range(ctx.m):
        for b in range(ctx.m):
            table[a, b] = ctx.trace(ctx.monomial(a + b))
    return table


# === linear algebra ===
@functools.lru_cache(maxsize=64)
def galois_field(ctx: FieldCtx) -> Type[galois.FieldArray]:
    """The galois array class of a field, with the same modulus.

    galois encodes c_0 + c_1 X + ... as sum c_i p^i too, so encoded values
    move between the two unchanged.
    """
    if ctx.m == 1:
        return galois.GF(ctx.p)
    return galois.GF(ctx.q, irreducible_poly=list(reversed(ctx.modulus)))


def _coerced(values: Any, ctx: FieldCtx) -> Any:
    if isinstance(values, (list, tuple, np.ndarray)):
        return [_coerced(v, ctx) for v in values]
    return ctx.coerce(values)


def gf_array(values: Any, ctx: FieldCtx) -> galois.FieldArray:
    """Encoded values (a vector or a matrix) as a galois array over ``ctx``.
    """
    return galois_field(ctx)(_coerced(values, ctx))


def matrix_rank(rows: Sequence[Sequence[int]], ctx: FieldCtx) -> int:
    """Rank of a matrix of encoded elements over F_q.
    """
    if not len(rows) or not len(rows[0]):
        return 0
    return int(np.linalg.matrix_rank(gf_array(rows, ctx)))


def batch_rank_mod_p(stack: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices over F_p, eliminated together.

    galois ranks one matrix at a time; surveys over minors and code
    combinations run here instead, on the whole stack at once.

    :param stack: integer array of shape (batch, rows, cols)
    :param p: prime below 2^31
    :rtype: numpy.ndarray of shape (batch,)
    """
    work = np.array(stack, dtype=np.int64) % p
    if work.ndim == 2:
        work = work[None]
    batch, rows, cols = work.shape
    small = p < 2 ** 16
    if small:
        inverses = np.zeros(p, dtype=np.int64)
        inverses[1:] = [pow(v, p - 2, p) for v in range(1, p)]
    rank = np.zeros(batch, dtype=np.int64)
    row_ids = np.arange(rows)
    for col in range(cols):
        candidates = (work[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = candidates.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        pivot = candidates[idx].argmax(axis=1)
        target = rank[idx]
        pivot_rows = work[idx, pivot].copy()
        work[idx, pivot] = work[idx, target]
        lead = pivot_rows[:, col]
        if small:
            scale = inverses[lead]
        else:
            scale = np.array([pow(int(v), p - 2, p) for v in lead], dtype=np.int64)
        pivot_rows = pivot_rows * scale[:, None] % p
        work[idx, target] = pivot_rows
        factors = work[idx, :, col].copy()
        factors[np.arange(len(idx)), target] = 0
        work[idx] = (work[idx] - factors[:, :, None] * pivot_rows[:, None, :]) % p
        rank[idx] += 1
    return rank


def matvec(rows: Sequence[Sequence[int]], vector: Sequence[int],
           ctx: FieldCtx) -> Tuple[int, ...]:
    """Matrix-vector product over F_q on encoded elements.
    """
    out = []
    for row in rows:
        acc = 0
        for coeff, value in zip(row, vector):
            if coeff and value:
                acc = ctx.add(acc, ctx.mul(coeff, value))
        out.append(acc)
    return tuple(out)


def power_mod_array(values: np.ndarray, exponent: int, p: int) -> np.ndarray:
    """Elementwise values^exponent mod p for a prime p below 2^31.
    """
    result = np.ones_like(values, dtype=np.int64)
    base = np.asarray(values, dtype=np.int64) % p
    while exponent:
        if exponent & 1:
            result = result * base % p
        base = base * base % p
        exponent >>= 1
    return result

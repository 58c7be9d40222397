"""
algext.errors
~~~~~~~~~~~~~
Defines custom exception classes.
"""
from typing import Dict, Optional, Type


class AlgextError(Exception):
    """General exception class.
    """
    CODE: int = 100

    def __init__(self, msg: str, code: Optional[int] = None) -> None:
        """Initializes a new exception.

        :param msg: Exception message
        :param code: (optional) Exception code, defaults to the class code
        """
        if code is None:
            code = self.CODE
        super().__init__(msg, code)
        self.message = msg
        self.code = code


# === finite_field ===
class NonPrime(AlgextError):
    """The characteristic given for a field is not a prime.
    """
    CODE = 101


class ReducibleModulus(AlgextError):
    """The modulus polynomial is not a monic irreducible polynomial of the
    requested degree.
    """
    CODE = 102


class CardinalityOverflow(AlgextError):
    """The field is too large for the machine-word budget.
    """
    CODE = 103


class DivisionByZero(AlgextError):
    """Inversion or division by the zero element.
    """
    CODE = 104


class CtxMismatch(AlgextError):
    """Operands belong to different fields.
    """
    CODE = 105


class ZeroElement(AlgextError):
    """The zero element has no multiplicative order.
    """
    CODE = 106


# === group_fourier ===
class CarrierMismatch(AlgextError):
    """Distributions live on different carriers.
    """
    CODE = 201


class EmptySupport(AlgextError):
    """The distribution has no mass.
    """
    CODE = 202


class BudgetExceeded(AlgextError):
    """A computation would exceed the configured enumeration, DFT or
    sampling budget.
    """
    CODE = 203


# === variety_lab ===
class ArityMismatch(AlgextError):
    """A point or polynomial has the wrong number of variables.
    """
    CODE = 301


class EmptyVariety(AlgextError):
    """The variety has no rational points over the given field.
    """
    CODE = 302


class AllCountsZero(AlgextError):
    """No extension field produced a rational point.
    """
    CODE = 303


# === rank_extract ===
class DegreeCountMismatch(AlgextError):
    """The number of degrees does not match the matrix width.
    """
    CODE = 401


class FieldTooSmall(AlgextError):
    """The field has too few elements for the requested construction.
    """
    CODE = 402


class ShapeMismatch(AlgextError):
    """The matrix shape is not allowed for the requested construction.
    """
    CODE = 403


class RankDeficientInput(AlgextError):
    """The supplied basis is not linearly independent.
    """
    CODE = 404


# === lowbias_extract ===
class BasisDependent(AlgextError):
    """The Gabidulin evaluation points are linearly dependent over 𝔽_p.
    """
    CODE = 501


class BoundViolation(AlgextError):
    """A structural parameter bound (k ≤ r ≤ s, t ≤ ks, degree budget) fails.
    """
    CODE = 502


class LengthMismatch(AlgextError):
    """An input vector or bit string has the wrong length.
    """
    CODE = 503


class OutOfRange(AlgextError):
    """A residue lies outside its modulus range.
    """
    CODE = 504


class ParamsInfeasible(AlgextError):
    """The parameter formulas leave no valid instance (for example t < 1).
    """
    CODE = 505


# === pipeline ===
class SeedLengthMismatch(AlgextError):
    """The seed does not have the configured length.
    """
    CODE = 601


# === affine_ext ===
class NotPrime(NonPrime):
    """The affine extractor field size is not a prime.
    """
    CODE = 701


class LcmTooLarge(AlgextError):
    """The product of the degree primes exceeds q^ε in strict mode.
    """
    CODE = 702


class KTooLarge(AlgextError):
    """The subspace dimension is outside [0, n].
    """
    CODE = 703


# === harness ===
class ConfigError(AlgextError):
    """The experiment configuration cannot be parsed or is incomplete.
    """
    CODE = 801


class ArtifactVersionMismatch(AlgextError):
    """The artifact file is truncated, malformed or from another version.
    """
    CODE = 802


ERROR_CODES: Dict[int, Type[AlgextError]] = {
    klass.CODE: klass for klass in (
        AlgextError,
        NonPrime, ReducibleModulus, CardinalityOverflow, DivisionByZero,
        CtxMismatch, ZeroElement,
        CarrierMismatch, EmptySupport, BudgetExceeded,
        ArityMismatch, EmptyVariety, AllCountsZero,
        DegreeCountMismatch, FieldTooSmall, ShapeMismatch, RankDeficientInput,
        BasisDependent, BoundViolation, LengthMismatch, OutOfRange,
        ParamsInfeasible,
        SeedLengthMismatch,
        NotPrime, LcmTooLarge, KTooLarge,
        ConfigError, ArtifactVersionMismatch,
    )
}

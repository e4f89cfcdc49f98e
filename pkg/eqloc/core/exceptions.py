"""Custom exception classes and error handling."""

from typing import Any

# CLI exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class EngineException(Exception):
    """Base engine exception."""

    def __init__(
        self,
        code: str,
        message: str,
        details: dict[str, Any] | None = None,
        exit_code: int = EXIT_INPUT_ERROR,
    ):
        self.code = code
        self.message = message
        self.details = details or {}
        self.exit_code = exit_code
        super().__init__(message)

    def to_payload(self) -> dict[str, Any]:
        """Render the standard error envelope."""
        return {
            "success": False,
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
            },
        }


# ==========================================
# Character groups and subgroups
# ==========================================


class InvalidOrderError(EngineException):
    """A torsion order is smaller than 2."""

    def __init__(self, order: int):
        super().__init__(
            code="INVALID_ORDER",
            message=f"Torsion order {order} is invalid (must be >= 2)",
            details={"order": order},
        )


class GroupMismatchError(EngineException):
    """Operands live in different character groups."""

    def __init__(self, message: str = "Character groups do not match", details: dict[str, Any] | None = None):
        super().__init__(code="GROUP_MISMATCH", message=message, details=details)


class InvalidSubgroupError(EngineException):
    """Restriction matrix does not define a surjection onto the subgroup's characters."""

    def __init__(self, message: str = "Invalid subgroup", details: dict[str, Any] | None = None):
        super().__init__(code="INVALID_SUBGROUP", message=message, details=details)


class InvalidEmbeddingError(EngineException):
    """Embedding vector does not define an embedding mu_n -> T."""

    def __init__(self, embedding: list[int], n: int):
        super().__init__(
            code="INVALID_EMBEDDING",
            message=f"Vector {embedding} is not primitive modulo {n}",
            details={"embedding": embedding, "n": n},
        )


class InvalidEvaluationError(EngineException):
    """Evaluation datum is incompatible with the group's torsion."""

    def __init__(self, message: str = "Invalid evaluation datum", details: dict[str, Any] | None = None):
        super().__init__(code="INVALID_EVALUATION", message=message, details=details)


# ==========================================
# Rings and localization
# ==========================================


class CoefficientDomainError(EngineException):
    """A coefficient denominator is not a product of primes dividing r."""

    def __init__(self, coefficient: str, r: int):
        super().__init__(
            code="COEFFICIENT_DOMAIN",
            message=f"Coefficient {coefficient} does not lie in Z[1/{r}]",
            details={"coefficient": coefficient, "r": r},
        )


class TorsionUnsupportedError(EngineException):
    """Fraction equality requested over a group ring with zero divisors."""

    def __init__(self, torsion: list[int]):
        super().__init__(
            code="TORSION_UNSUPPORTED",
            message="Fraction equality needs a torsion-free character group; use the cyclotomic components",
            details={"torsion": torsion},
        )


class SetMismatchError(EngineException):
    """Fractions are localized at different multiplicative sets."""

    def __init__(self, message: str = "Multiplicative sets do not match"):
        super().__init__(code="SET_MISMATCH", message=message)


class NotInvertibleError(EngineException):
    """A factor 1 - t^chi is not in S_H because chi restricts trivially to H."""

    def __init__(self, character: str):
        super().__init__(
            code="NOT_INVERTIBLE",
            message=f"1 - {character} is not a generator of the multiplicative set",
            details={"character": character},
        )


class NotPolynomialError(EngineException):
    """Exact division left a remainder."""

    def __init__(self, message: str = "Sum of fractions is not a Laurent polynomial", details: dict[str, Any] | None = None):
        super().__init__(code="NOT_POLYNOMIAL", message=message, details=details)


# ==========================================
# Cyclotomic machinery
# ==========================================


class PrimeNotInvertedError(EngineException):
    """A prime dividing n is not inverted in Z[1/r]."""

    def __init__(self, prime: int, n: int, r: int):
        super().__init__(
            code="PRIME_NOT_INVERTED",
            message=f"Prime {prime} divides n={n} but not r={r}",
            details={"prime": prime, "n": n, "r": r},
        )


class EmptySetError(EngineException):
    """An lcm was requested over an empty set."""

    def __init__(self, message: str = "Set of stabilizer orders is empty"):
        super().__init__(code="EMPTY_SET", message=message)


# ==========================================
# Fans, divisors and polytopes
# ==========================================


class NotPrimitiveError(EngineException):
    """A ray generator is not primitive."""

    def __init__(self, ray_index: int, ray: list[int]):
        super().__init__(
            code="NOT_PRIMITIVE",
            message=f"Ray {ray_index} {ray} is not primitive",
            details={"ray": ray_index, "vector": ray},
        )


class NotSmoothError(EngineException):
    """A maximal cone's rays do not form a lattice basis."""

    def __init__(self, cone_index: int, determinant: int):
        super().__init__(
            code="NOT_SMOOTH",
            message=f"Cone {cone_index} is not smooth (|det| = {abs(determinant)})",
            details={"cone": cone_index, "determinant": determinant},
        )


class NotCompleteError(EngineException):
    """The maximal cones do not cover the lattice."""

    def __init__(self, message: str = "Fan is not complete", details: dict[str, Any] | None = None):
        super().__init__(code="NOT_COMPLETE", message=message, details=details)


class MalformedInputError(EngineException):
    """Input could not be parsed or fails structural validation."""

    def __init__(self, message: str = "Malformed input", details: dict[str, Any] | None = None):
        super().__init__(code="MALFORMED_INPUT", message=message, details=details)


class InconsistentDataError(EngineException):
    """Cartier data violates local linearity or facet agreement."""

    def __init__(self, message: str = "Inconsistent Cartier data", details: dict[str, Any] | None = None):
        super().__init__(code="INCONSISTENT_DATA", message=message, details=details)


class OracleTooLargeError(EngineException):
    """Lattice-point enumeration would exceed the configured cap."""

    def __init__(self, candidates: int, limit: int):
        super().__init__(
            code="ORACLE_TOO_LARGE",
            message=f"Bounding box has {candidates} candidate points (limit {limit})",
            details={"candidates": candidates, "limit": limit},
        )


class NotSmoothVertexConeError(EngineException):
    """A polytope vertex cone is not simple and unimodular."""

    def __init__(self, vertex: list[str], tight: int):
        super().__init__(
            code="NOT_SMOOTH_VERTEX_CONE",
            message=f"Vertex cone at {vertex} is not smooth",
            details={"vertex": vertex, "tight_inequalities": tight},
        )


class UnboundedPolytopeError(EngineException):
    """Polyhedron is unbounded or has no vertices."""

    def __init__(self, message: str = "Polyhedron is not a bounded polytope", details: dict[str, Any] | None = None):
        super().__init__(code="UNBOUNDED_POLYTOPE", message=message, details=details)


class InternalError(EngineException):
    """Internal engine error."""

    def __init__(self, message: str = "Internal engine error", details: dict[str, Any] | None = None):
        super().__init__(code="INTERNAL_ERROR", message=message, details=details)

"""Cyclotomic quotient models."""

from dataclasses import dataclass
from fractions import Fraction

from eqloc.core.exceptions import MalformedInputError


@dataclass(frozen=True)
class CyclotomicImage:
    """Element of Z[1/r][t]/(t^n - 1), coefficients of t^0 .. t^(n-1)."""

    n: int
    r: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.coeffs) != self.n:
            raise MalformedInputError(
                "Cyclotomic image needs exactly n coefficients",
                {"n": self.n, "coefficients": len(self.coeffs)},
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def _check(self, other: "CyclotomicImage") -> None:
        if (self.n, self.r) != (other.n, other.r):
            raise MalformedInputError("Cyclotomic images over different quotients")

    def __add__(self, other: "CyclotomicImage") -> "CyclotomicImage":
        self._check(other)
        return CyclotomicImage(self.n, self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "CyclotomicImage") -> "CyclotomicImage":
        """Cyclic convolution (multiplication modulo t^n - 1)."""
        self._check(other)
        out = [Fraction(0)] * self.n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[(i + j) % self.n] += a * b
        return CyclotomicImage(self.n, self.r, tuple(out))

    def __str__(self) -> str:
        return render_coefficients(self.coeffs)


@dataclass(frozen=True)
class PhiComponent:
    """Element of Z[1/r][t]/Phi_d(t) for a divisor d of n, reduced below deg Phi_d."""

    n: int
    d: int
    r: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.n % self.d != 0:
            raise MalformedInputError("Component index must divide n", {"n": self.n, "d": self.d})
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def is_one(self) -> bool:
        return self.coeffs[:1] == (Fraction(1),) and not any(self.coeffs[1:])

    def __str__(self) -> str:
        return render_coefficients(self.coeffs)


def render_coefficients(coeffs: tuple[Fraction, ...], variable: str = "t") -> str:
    pieces: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        monomial = "" if k == 0 else (variable if k == 1 else f"{variable}^{k}")
        magnitude = abs(c)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces) or "0"

"""Toric variety models: fans, Cartier data, fixed points, polytopes."""

from dataclasses import dataclass, field
from fractions import Fraction

from eqloc.models.characters import Character, CharacterGroup


@dataclass(frozen=True)
class Fan:
    """Smooth complete fan in N = Z^dim (validated by ``services.toric.make_fan``)."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    cones: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def group(self) -> CharacterGroup:
        """Character lattice M = Hom(N, Z) of the dense torus."""
        return CharacterGroup(self.dim)

    def cone_rays(self, cone: int) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in self.cones[cone]]


@dataclass(frozen=True)
class CartierData:
    """Equivariant line bundle O(D), D = sum a_rho D_rho, with its local data m_sigma."""

    fan: Fan
    coeffs: tuple[int, ...]
    per_cone_m: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FixedPointDatum:
    """Torus fixed point x_sigma: cotangent characters and the fiber character of O(D)."""

    cone: int
    cotangent_chars: tuple[Character, ...]
    fiber_char: Character | None = None


@dataclass(frozen=True)
class Polytope:
    """{m : <m, normal> >= -offset for every inequality} together with its vertices."""

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for vertex in self.vertices for c in vertex)

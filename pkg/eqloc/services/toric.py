"""Toric service: fan validation, fixed points, Cartier data, nefness and the lattice-point oracle."""

import itertools
import logging
from collections import defaultdict, deque
from functools import lru_cache
from fractions import Fraction
from math import ceil, floor, lcm, prod

import numpy as np
from sympy import Matrix

from eqloc.core.config import Settings, settings
from eqloc.core.exceptions import (
    InconsistentDataError,
    MalformedInputError,
    NotCompleteError,
    NotPrimitiveError,
    NotSmoothError,
    OracleTooLargeError,
    UnboundedPolytopeError,
)
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import RingElement
from eqloc.models.toric import CartierData, Fan, FixedPointDatum, Polytope
from eqloc.schemas.common import load_schema
from eqloc.schemas.toric import FanSchema
from eqloc.services.lattice import integer_det, is_primitive, mat_vec, transpose, unimodular_inverse

logger = logging.getLogger(__name__)

SAMPLE_RADIUS = 50


# ==========================================
# Fan validation
# ==========================================


class FanValidator:
    """Checks primitivity, smoothness and completeness of a fan."""

    def __init__(self, config: Settings = settings):
        self.config = config

    def validate(self, fan: Fan) -> Fan:
        self._check_shape(fan)
        for i, ray in enumerate(fan.rays):
            if not is_primitive(ray):
                raise NotPrimitiveError(i, list(ray))
        for k, cone in enumerate(fan.cones):
            det = integer_det(fan.cone_rays(k))
            if abs(det) != 1:
                raise NotSmoothError(k, det)
        if fan.dim > 0:
            self._check_facets(fan)
            if fan.dim <= 3:
                self._sample_points(fan)
        logger.debug(
            f"[TORIC] validated fan {fan.name or '<anonymous>'}",
            extra={"dim": fan.dim, "rays": len(fan.rays), "cones": len(fan.cones)},
        )
        return fan

    def _check_shape(self, fan: Fan) -> None:
        if fan.dim < 0:
            raise MalformedInputError("Fan dimension must be non-negative", {"field": "dim"})
        for i, ray in enumerate(fan.rays):
            if len(ray) != fan.dim:
                raise MalformedInputError(f"Ray {i} has length {len(ray)}, expected {fan.dim}", {"field": f"rays[{i}]"})
        if not fan.cones:
            raise MalformedInputError("Fan has no maximal cones", {"field": "cones"})
        seen: set[frozenset[int]] = set()
        for k, cone in enumerate(fan.cones):
            if len(cone) != fan.dim or len(set(cone)) != fan.dim:
                raise MalformedInputError(
                    f"Cone {k} must list {fan.dim} distinct rays",
                    {"field": f"cones[{k}]"},
                )
            if any(i < 0 or i >= len(fan.rays) for i in cone):
                raise MalformedInputError(f"Cone {k} references an unknown ray", {"field": f"cones[{k}]"})
            if frozenset(cone) in seen:
                raise MalformedInputError(f"Cone {k} is listed twice", {"field": f"cones[{k}]"})
            seen.add(frozenset(cone))
        used = {i for cone in fan.cones for i in cone}
        unused = sorted(set(range(len(fan.rays))) - used)
        if unused:
            raise MalformedInputError(f"Ray {unused[0]} lies in no maximal cone", {"field": f"rays[{unused[0]}]"})

    def _check_facets(self, fan: Fan) -> None:
        """Every facet is shared by exactly two cones lying on opposite sides; the dual graph is connected."""
        facets: dict[frozenset[int], list[tuple[int, int]]] = defaultdict(list)
        for k, cone in enumerate(fan.cones):
            for ray in cone:
                facets[frozenset(cone) - {ray}].append((k, ray))

        adjacency: dict[int, set[int]] = defaultdict(set)
        for facet, owners in facets.items():
            if len(owners) != 2:
                raise NotCompleteError(
                    f"Facet {sorted(facet)} belongs to {len(owners)} maximal cone(s)",
                    {"facet": sorted(facet), "cones": [k for k, _ in owners]},
                )
            (k1, r1), (k2, r2) = owners
            normal = dual_basis(fan, k1)[fan.cones[k1].index(r1)]
            side = sum(a * b for a, b in zip(normal, fan.rays[r2]))
            if side >= 0:
                raise NotCompleteError(
                    f"Cones {k1} and {k2} overlap across facet {sorted(facet)}",
                    {"facet": sorted(facet), "cones": [k1, k2]},
                )
            adjacency[k1].add(k2)
            adjacency[k2].add(k1)

        reached = {0}
        queue = deque([0])
        while queue:
            for neighbour in adjacency[queue.popleft()]:
                if neighbour not in reached:
                    reached.add(neighbour)
                    queue.append(neighbour)
        if len(reached) != len(fan.cones):
            missing = sorted(set(range(len(fan.cones))) - reached)
            raise NotCompleteError("Fan support is not connected", {"cones": missing})

    def _sample_points(self, fan: Fan) -> None:
        """Random lattice points must lie in some cone and in the interior of at most one."""
        rng = np.random.default_rng(self.config.RANDOM_SEED)
        inverses = [unimodular_inverse(fan.cone_rays(k)) for k in range(len(fan.cones))]
        samples = rng.integers(-SAMPLE_RADIUS, SAMPLE_RADIUS + 1, size=(self.config.COMPLETENESS_SAMPLES, fan.dim))
        for point in samples:
            v = tuple(int(x) for x in point)
            if not any(v):
                continue
            covering = 0
            interior = 0
            for inverse in inverses:
                # coordinates of v in the ray basis: v = sum x_j ray_j, i.e. x = B^{-T} v
                coords = mat_vec(transpose(inverse), v)
                if all(x >= 0 for x in coords):
                    covering += 1
                    if all(x > 0 for x in coords):
                        interior += 1
            if covering == 0:
                raise NotCompleteError(f"Point {list(v)} lies in no maximal cone", {"point": list(v)})
            if interior > 1:
                raise NotCompleteError(f"Point {list(v)} lies inside several cones", {"point": list(v)})


def make_fan(
    dim: int,
    rays: list[list[int]] | tuple[tuple[int, ...], ...],
    cones: list[list[int]] | tuple[tuple[int, ...], ...],
    name: str = "",
    config: Settings = settings,
) -> Fan:
    fan = Fan(
        dim=int(dim),
        rays=tuple(tuple(int(x) for x in ray) for ray in rays),
        cones=tuple(tuple(int(i) for i in cone) for cone in cones),
        name=name,
    )
    return FanValidator(config).validate(fan)


def parse_fan(description: dict | str, config: Settings = settings) -> Fan:
    """Validated fan from its JSON description."""
    schema = load_schema(FanSchema, description)
    return make_fan(schema.dim, schema.rays, schema.cones, name=schema.name or "", config=config)


# ==========================================
# Standard fans
# ==========================================


def projective_space_fan(n: int) -> Fan:
    rays = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [c for c in itertools.combinations(range(n + 1), n)]
    return make_fan(n, rays, cones, name=f"p{n}")


def hirzebruch_fan(a: int) -> Fan:
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return make_fan(2, rays, cones, name=f"f{a}")


def product_fan(left: Fan, right: Fan) -> Fan:
    """Fan of X x Y: rays of X padded by zeros, then rays of Y; cones are unions."""
    rays = [ray + (0,) * right.dim for ray in left.rays]
    rays += [(0,) * left.dim + ray for ray in right.rays]
    offset = len(left.rays)
    cones = [a + tuple(offset + j for j in b) for a in left.cones for b in right.cones]
    return make_fan(left.dim + right.dim, rays, cones, name=f"{left.name}x{right.name}")


def transform_fan(fan: Fan, unimodular: list[list[int]]) -> Fan:
    """Apply a lattice automorphism U of N to every ray."""
    if len(unimodular) != fan.dim or abs(integer_det(unimodular)) != 1:
        raise MalformedInputError("Transformation must be a unimodular dim x dim matrix")
    rays = [mat_vec(unimodular, ray) for ray in fan.rays]
    return make_fan(fan.dim, rays, fan.cones, name=fan.name)


def relabel_fan(fan: Fan, ray_order: list[int], cone_order: list[int]) -> Fan:
    """Same fan with rays listed as fan.rays[ray_order[i]] and cones as fan.cones[cone_order[k]]."""
    position = {old: new for new, old in enumerate(ray_order)}
    rays = [fan.rays[old] for old in ray_order]
    cones = [tuple(position[i] for i in fan.cones[old]) for old in cone_order]
    return make_fan(fan.dim, rays, cones, name=fan.name)


# ==========================================
# Fixed points and Cartier data
# ==========================================


@lru_cache(maxsize=1024)
def cone_inverse(fan: Fan, cone: int) -> tuple[tuple[int, ...], ...]:
    """B^{-1} for the matrix B whose rows are the cone's rays."""
    return tuple(tuple(row) for row in unimodular_inverse(fan.cone_rays(cone)))


def dual_basis(fan: Fan, cone: int) -> list[tuple[int, ...]]:
    """m_1..m_dim with <m_i, v_j> = delta_ij for the cone's rays v_j (columns of B^{-1})."""
    inverse = cone_inverse(fan, cone)
    return [tuple(row) for row in transpose(inverse)] if inverse else []


def cartier_from_divisor(fan: Fan, ray_coeffs: list[int] | tuple[int, ...]) -> CartierData:
    """Solve <m_sigma, v_rho> = -a_rho on every maximal cone."""
    coeffs = tuple(int(a) for a in ray_coeffs)
    if len(coeffs) != len(fan.rays):
        raise MalformedInputError(
            f"Divisor needs {len(fan.rays)} coefficients, got {len(coeffs)}",
            {"field": "coeffs"},
        )
    per_cone = []
    for k, cone in enumerate(fan.cones):
        inverse = cone_inverse(fan, k)
        per_cone.append(mat_vec(inverse, tuple(-coeffs[i] for i in cone)) if inverse else ())
    return validate_cartier(CartierData(fan=fan, coeffs=coeffs, per_cone_m=tuple(per_cone)))


def validate_cartier(data: CartierData) -> CartierData:
    """Local linearity on each cone and agreement on shared facets."""
    fan = data.fan
    if len(data.per_cone_m) != len(fan.cones):
        raise InconsistentDataError("One m_sigma per maximal cone is required")
    for k, cone in enumerate(fan.cones):
        m = data.per_cone_m[k]
        if len(m) != fan.dim:
            raise InconsistentDataError(f"m for cone {k} has the wrong length", {"cone": k})
        for i in cone:
            if sum(x * y for x, y in zip(m, fan.rays[i])) != -data.coeffs[i]:
                raise InconsistentDataError(
                    f"<m_{k}, v_{i}> != -a_{i}",
                    {"cone": k, "ray": i},
                )
    for k1, k2 in itertools.combinations(range(len(fan.cones)), 2):
        shared = set(fan.cones[k1]) & set(fan.cones[k2])
        if len(shared) != fan.dim - 1:
            continue
        diff = [a - b for a, b in zip(data.per_cone_m[k1], data.per_cone_m[k2])]
        if any(sum(x * y for x, y in zip(diff, fan.rays[i])) != 0 for i in shared):
            raise InconsistentDataError(
                f"Cones {k1} and {k2} disagree on their shared facet",
                {"cones": [k1, k2]},
            )
    return data


def fixed_points(fan: Fan, divisor: CartierData | None = None) -> list[FixedPointDatum]:
    """One fixed point per maximal cone: dual-basis cotangent characters, fiber t^{m_sigma}."""
    group = fan.group
    points = []
    for k in range(len(fan.cones)):
        cotangent = tuple(group.character(m) for m in dual_basis(fan, k))
        fiber = group.character(divisor.per_cone_m[k]) if divisor is not None else None
        points.append(FixedPointDatum(cone=k, cotangent_chars=cotangent, fiber_char=fiber))
    if len(points) != len(fan.cones):
        raise InconsistentDataError("Fixed point count differs from the number of maximal cones")
    return points


def is_nef(data: CartierData) -> bool:
    """<m_sigma, v_rho> >= -a_rho for every cone and every ray."""
    fan = data.fan
    return all(
        sum(x * y for x, y in zip(m, ray)) >= -a
        for m in data.per_cone_m
        for ray, a in zip(fan.rays, data.coeffs)
    )


# ==========================================
# Polytopes and the lattice-point oracle
# ==========================================


def polytope_vertices(
    dim: int,
    inequalities: list[tuple[tuple[int, ...], int]] | tuple[tuple[tuple[int, ...], int], ...],
) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of {m : <m, v> >= -a} from every nonsingular choice of dim tight inequalities."""
    if dim == 0:
        feasible = all(a >= 0 for _, a in inequalities)
        return ((),) if feasible else ()
    found: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(inequalities, dim):
        normals = Matrix([list(v) for v, _ in subset])
        if normals.det() == 0:
            continue
        solution = normals.LUsolve(Matrix([-a for _, a in subset]))
        point = tuple(Fraction(int(x.p), int(x.q)) for x in solution)
        if all(sum(p * c for p, c in zip(point, v)) >= -a for v, a in inequalities):
            found.add(point)
    return tuple(sorted(found))


def make_polytope(dim: int, inequalities: list[tuple[list[int] | tuple[int, ...], int]]) -> Polytope:
    normalized = tuple((tuple(int(x) for x in v), int(a)) for v, a in inequalities)
    for i, (v, _) in enumerate(normalized):
        if len(v) != dim:
            raise MalformedInputError(f"Inequality {i} has the wrong length", {"field": f"inequalities[{i}]"})
    return Polytope(dim=dim, inequalities=normalized, vertices=polytope_vertices(dim, normalized))


def recession_direction(polytope: Polytope) -> tuple[int, ...] | None:
    """A nonzero integer d with <d, normal> >= 0 for every inequality, or None if there is none.

    Extreme rays of the recession cone are cut out by dim - 1 independent
    normals, so it suffices to test both signs of every such kernel line.
    """
    dim = polytope.dim
    if dim == 0:
        return None
    normals = [v for v, _ in polytope.inequalities]

    def integral(column: Matrix) -> tuple[int, ...]:
        scale = lcm(*(int(x.q) for x in column))
        return tuple(int(x * scale) for x in column)

    if not normals:
        return (1,) + (0,) * (dim - 1)
    full = Matrix([list(v) for v in normals])
    if full.rank() < dim:
        return integral(full.nullspace()[0])
    for subset in itertools.combinations(normals, dim - 1):
        kernel = Matrix([list(v) for v in subset]).nullspace() if subset else [Matrix([1])]
        if len(kernel) != 1:
            continue
        line = integral(kernel[0])
        for sign in (1, -1):
            d = tuple(sign * x for x in line)
            if all(sum(x * y for x, y in zip(d, v)) >= 0 for v in normals):
                return d
    return None


def ensure_bounded(polytope: Polytope) -> None:
    """Raise UnboundedPolytopeError when the polyhedron has a recession direction."""
    direction = recession_direction(polytope)
    if direction is not None:
        raise UnboundedPolytopeError(
            f"Polyhedron is unbounded along {list(direction)}",
            {"direction": list(direction), "vertices": len(polytope.vertices)},
        )


def polytope_from_cartier(data: CartierData) -> Polytope:
    inequalities = [(ray, a) for ray, a in zip(data.fan.rays, data.coeffs)]
    return make_polytope(data.fan.dim, inequalities)


class LatticePointOracle:
    """Brute-force enumeration of P cap M inside the bounding box of P's vertices."""

    def __init__(self, config: Settings = settings):
        self.config = config

    def points(self, polytope: Polytope) -> list[tuple[int, ...]]:
        if polytope.dim == 0:
            return [()] if polytope.vertices else []
        ensure_bounded(polytope)
        if not polytope.vertices:
            return []
        lows = [floor(min(v[i] for v in polytope.vertices)) for i in range(polytope.dim)]
        highs = [ceil(max(v[i] for v in polytope.vertices)) for i in range(polytope.dim)]
        candidates = prod(h - lo + 1 for lo, h in zip(lows, highs))
        if candidates > self.config.ORACLE_MAX_POINTS:
            raise OracleTooLargeError(candidates, self.config.ORACLE_MAX_POINTS)

        axes = [np.arange(lo, h + 1, dtype=np.int64) for lo, h in zip(lows, highs)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, polytope.dim)
        normals = np.array([v for v, _ in polytope.inequalities], dtype=np.int64).reshape(-1, polytope.dim)
        offsets = np.array([a for _, a in polytope.inequalities], dtype=np.int64)
        inside = (grid @ normals.T >= -offsets).all(axis=1)
        # meshgrid with ij indexing already yields lexicographic order
        result = [tuple(int(x) for x in row) for row in grid[inside]]
        logger.debug(f"[ORACLE] {len(result)} lattice points out of {candidates} candidates")
        return result


def polytope_points(data: CartierData | Polytope, config: Settings = settings) -> list[tuple[int, ...]]:
    """Lattice points of {m : <m, v_rho> >= -a_rho}, sorted lexicographically."""
    polytope = polytope_from_cartier(data) if isinstance(data, CartierData) else data
    return LatticePointOracle(config).points(polytope)


def points_generating_function(points: list[tuple[int, ...]], dim: int) -> RingElement:
    group = CharacterGroup(dim)
    return RingElement(group, [(group.character(p), 1) for p in points])


def cech_p1_oracle(d: int) -> RingElement:
    """H^0 - H^1 of O(d) on P^1 from the two standard charts.

    H^0 has weights 0..d for d >= 0; H^1 has weights d+1..-1 for d <= -2.
    """
    group = CharacterGroup(1)
    h0 = [(group.character((k,)), 1) for k in range(0, d + 1)]
    h1 = [(group.character((k,)), -1) for k in range(d + 1, 0)]
    return RingElement(group, h0 + h1)

"""Character group service: subgroups, restriction, support of a prime."""

import logging
from math import gcd, lcm

from eqloc.core.exceptions import (
    GroupMismatchError,
    InternalError,
    InvalidEmbeddingError,
    InvalidEvaluationError,
    InvalidSubgroupError,
)
from eqloc.models.characters import (
    Character,
    CharacterGroup,
    EvaluationDatum,
    PrimeSupport,
    Subgroup,
)
from eqloc.services.lattice import content, invariant_factors, mat_vec, row_kernel

logger = logging.getLogger(__name__)


def make_character_group(rank: int, torsion: list[int] | tuple[int, ...] = ()) -> CharacterGroup:
    """Canonical character group Z^rank + sum Z/n_i (torsion sorted nondecreasing)."""
    return CharacterGroup(rank=rank, torsion=tuple(torsion))


def torus(rank: int) -> CharacterGroup:
    return CharacterGroup(rank=rank)


# ==========================================
# Subgroups
# ==========================================


def make_subgroup(
    ambient: CharacterGroup,
    target: CharacterGroup,
    matrix: list[list[int]] | tuple[tuple[int, ...], ...],
    label: str = "",
) -> Subgroup:
    """Validate a restriction matrix and wrap it as a Subgroup.

    The matrix must send every torsion relation of ``ambient`` to zero in
    ``target`` and its image must generate ``target``.
    """
    rows = tuple(tuple(int(v) for v in row) for row in matrix)
    if len(rows) != target.ngens or any(len(row) != ambient.ngens for row in rows):
        raise InvalidSubgroupError(
            "Restriction matrix has the wrong shape",
            {"expected": [target.ngens, ambient.ngens], "rows": len(rows)},
        )

    for j, order in enumerate(ambient.torsion):
        col = ambient.rank + j
        for i, row in enumerate(rows):
            image = row[col] * order
            if i < target.rank:
                bad = image != 0
            else:
                bad = image % target.torsion[i - target.rank] != 0
            if bad:
                raise InvalidSubgroupError(
                    "Restriction matrix does not respect torsion orders",
                    {"row": i, "column": col, "order": order},
                )

    # Surjectivity: image columns plus target relations must span Z^rows.
    columns = [[row[j] for row in rows] for j in range(ambient.ngens)]
    for i, order in enumerate(target.torsion):
        relation = [0] * target.ngens
        relation[target.rank + i] = order
        columns.append(relation)
    factors = invariant_factors(columns, target.ngens)
    if any(f != 1 for f in factors):
        raise InvalidSubgroupError(
            "Restriction map is not surjective",
            {"invariant_factors": factors},
        )
    return Subgroup(ambient=ambient, target=target, matrix=rows, label=label)


def whole_group(group: CharacterGroup) -> Subgroup:
    """H = G: restriction is the identity."""
    identity = [[1 if i == j else 0 for j in range(group.ngens)] for i in range(group.ngens)]
    return make_subgroup(group, group, identity, label="G")


def trivial_subgroup(group: CharacterGroup) -> Subgroup:
    """H = 1: every character restricts trivially."""
    return make_subgroup(group, CharacterGroup(0), [], label="1")


def mu_n_in_gm(n: int) -> Subgroup:
    """mu_n inside G_m: restriction is reduction mod n."""
    return mu_n_in_torus([1], n)


def mu_n_in_torus(embedding: list[int] | tuple[int, ...], n: int) -> Subgroup:
    """mu_n inside T = G_m^k through zeta -> (zeta^c_1, ..., zeta^c_k).

    A character a restricts to <a, c> mod n; ``c`` must be primitive mod n.
    """
    c = [int(v) for v in embedding]
    if n < 1 or gcd(content(c), n) != 1:
        raise InvalidEmbeddingError(c, n)
    ambient = CharacterGroup(len(c))
    if n == 1:
        return make_subgroup(ambient, CharacterGroup(0), [], label="mu_1")
    return make_subgroup(ambient, CharacterGroup(0, (n,)), [[v % n for v in c]], label=f"mu_{n}")


def subtorus(matrix: list[list[int]]) -> Subgroup:
    """T' inside T given by the integer restriction matrix Z^cols -> Z^rows."""
    if not matrix:
        raise InvalidSubgroupError("Subtorus matrix is empty")
    return make_subgroup(CharacterGroup(len(matrix[0])), CharacterGroup(len(matrix)), matrix, label="T'")


def diagonal_torus(rank: int) -> Subgroup:
    """Diagonal G_m inside G_m^rank: t_i -> t."""
    return subtorus([[1] * rank])


def restrict_character(character: Character, subgroup: Subgroup) -> Character:
    """Image of a character under G^v -> H^v."""
    if character.group != subgroup.ambient:
        raise GroupMismatchError(
            "Character does not live in the subgroup's ambient group",
            {"character": str(character), "ambient": subgroup.ambient.describe()},
        )
    return subgroup.target.from_vector(mat_vec(subgroup.matrix, character.vector))


def is_nontrivial_on(character: Character, subgroup: Subgroup) -> bool:
    return not restrict_character(character, subgroup).is_zero


# ==========================================
# Support of an evaluation prime
# ==========================================


def make_evaluation(group: CharacterGroup, values: list[tuple[int, int]] | list[list[int]]) -> EvaluationDatum:
    """Validate an evaluation datum (a_i, m_i) per generator: generator i -> zeta_{m_i}^{a_i}."""
    pairs = tuple((int(a), int(m)) for a, m in values)
    if len(pairs) != group.ngens:
        raise InvalidEvaluationError(
            "Evaluation datum needs one (a, m) pair per generator",
            {"expected": group.ngens, "got": len(pairs)},
        )
    for i, (a, m) in enumerate(pairs):
        if m < 1:
            raise InvalidEvaluationError("Root order must be positive", {"generator": i, "m": m})
        if i >= group.rank:
            order = group.torsion[i - group.rank]
            actual = m // gcd(a, m)
            if order % actual != 0:
                raise InvalidEvaluationError(
                    "Root order does not divide the torsion order",
                    {"generator": i, "root_order": actual, "torsion_order": order},
                )
    return EvaluationDatum(group=group, values=pairs)


def evaluation_congruence(datum: EvaluationDatum) -> tuple[tuple[int, ...], int]:
    """(weights w, modulus L) with chi(g) = exp(2 pi i (w . chi) / L)."""
    modulus = lcm(*(m for _, m in datum.values)) if datum.values else 1
    weights = tuple((a * (modulus // m)) % modulus for a, m in datum.values)
    return weights, modulus


def evaluates_to_one(character: Character, datum: EvaluationDatum) -> bool:
    """True iff chi(g) = 1, i.e. 1 - chi lies in the prime."""
    if character.group != datum.group:
        raise GroupMismatchError("Character and evaluation datum live in different groups")
    weights, modulus = evaluation_congruence(datum)
    return sum(w * x for w, x in zip(weights, character.vector)) % modulus == 0


def prime_support(datum: EvaluationDatum) -> PrimeSupport:
    """K_rho = {chi : chi(g) = 1} and H_rho = D(G^v / K_rho) via Smith invariants."""
    group = datum.group
    weights, modulus = evaluation_congruence(datum)

    # Kernel of Z^k -> Z, (x, y) -> w.x + L.y, projected onto x.
    lifted = row_kernel(list(weights) + [modulus])
    generators: list[Character] = []
    for vector in lifted:
        chi = group.from_vector(vector[: group.ngens])
        if not chi.is_zero and chi not in generators:
            generators.append(chi)
    generators.sort(key=Character.sort_key)

    relations = [list(chi.vector) for chi in generators]
    for i, order in enumerate(group.torsion):
        relation = [0] * group.ngens
        relation[group.rank + i] = order
        relations.append(relation)
    factors = invariant_factors(relations, group.ngens)
    support = CharacterGroup(
        rank=sum(1 for f in factors if f == 0),
        torsion=tuple(f for f in factors if f > 1),
    )
    logger.debug(
        f"[SUPPORT] modulus={modulus} weights={weights} -> H_rho^v = {support.describe()}",
        extra={"generators": len(generators)},
    )
    return PrimeSupport(
        datum=datum,
        weights=weights,
        modulus=modulus,
        kernel_generators=tuple(generators),
        support=support,
    )


def support_subgroup(datum: EvaluationDatum) -> Subgroup:
    """H_rho as a Subgroup: chi -> (w . chi / g) mod (L / g), g = gcd(w, L)."""
    group = datum.group
    weights, modulus = evaluation_congruence(datum)
    g = gcd(content(weights), modulus)
    order = modulus // g
    expected = prime_support(datum).support
    if order == 1:
        target = CharacterGroup(0)
        matrix: list[list[int]] = []
    else:
        target = CharacterGroup(0, (order,))
        matrix = [[(w // g) % order for w in weights]]
    if target != expected:
        raise InternalError(
            "Cyclic support disagrees with Smith invariants",
            {"cyclic": target.describe(), "smith": expected.describe()},
        )
    return make_subgroup(group, target, matrix, label="H_rho")

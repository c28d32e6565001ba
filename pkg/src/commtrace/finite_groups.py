"""Small finite groups with hardcoded character tables.

Used to check, by exhaustive summation, that the average of an irreducible
character over products of k commutators equals 1/d^(2k-1).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .algebra import DomainError

COMMUTATOR_TUPLE_LIMIT = 10**8


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple
    table: tuple[tuple[int, ...], ...]  # table[a][b] = index of elements[a]*elements[b]
    characters: tuple[tuple[int, ...], ...]  # characters[c][g], integer valued
    character_names: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][g] == g for g in range(self.order)):
                return e
        raise ValueError(f"{self.name}: no identity element")

    @property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(self.table[g].index(e) for g in range(self.order))

    @property
    def dimensions(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(chi[e] for chi in self.characters)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def commutator(self, y: int, z: int) -> int:
        """[y, z] = y^-1 z^-1 y z."""
        inv = self.inverses
        return self.mul(self.mul(inv[y], inv[z]), self.mul(y, z))

    def validate(self) -> None:
        """Raise ValueError unless the table is a group and the characters are orthonormal irreducibles."""
        g = range(self.order)
        for a, b, c in itertools.product(g, g, g):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError(f"{self.name}: multiplication is not associative")
        inv = self.inverses  # raises if some element has no inverse
        e = self.identity
        if any(self.table[a][inv[a]] != e for a in g):
            raise ValueError(f"{self.name}: inverses are not two-sided")
        if sum(d * d for d in self.dimensions) != self.order:
            raise ValueError(f"{self.name}: sum of squared dimensions != |G|")
        for (i, chi), (j, psi) in itertools.product(enumerate(self.characters), repeat=2):
            # integer-valued characters are real, so conjugation is a no-op
            ip = Fraction(sum(chi[x] * psi[x] for x in g), self.order)
            if ip != (1 if i == j else 0):
                raise ValueError(f"{self.name}: characters {i}, {j} are not orthonormal")


def _symmetric_group_3() -> FiniteGroup:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(3))] for q in perms) for p in perms
    )

    def sign(p):
        return (-1) ** sum(1 for a, b in itertools.combinations(range(3), 2) if p[a] > p[b])

    trivial = tuple(1 for _ in perms)
    sgn = tuple(sign(p) for p in perms)
    standard = tuple(sum(1 for x in range(3) if p[x] == x) - 1 for p in perms)
    return FiniteGroup(
        name="s3",
        elements=tuple(perms),
        table=table,
        characters=(trivial, sgn, standard),
        character_names=("trivial", "sign", "standard"),
    )


def _quaternion_group() -> FiniteGroup:
    # elements are (sign, unit) with unit in "1ijk"
    units = "1ijk"
    unit_products = {
        ("1", u): (1, u) for u in units
    } | {
        (u, "1"): (1, u) for u in units
    } | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elements = tuple((s, u) for u in units for s in (1, -1))
    index = {x: i for i, x in enumerate(elements)}

    def mul(a, b):
        s, u = unit_products[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)

    def linear(kernel_unit):
        return tuple(1 if u in ("1", kernel_unit) else -1 for _, u in elements)

    two_dim = tuple(2 * s if u == "1" else 0 for s, u in elements)
    return FiniteGroup(
        name="q8",
        elements=elements,
        table=table,
        characters=(tuple(1 for _ in elements), linear("i"), linear("j"), linear("k"), two_dim),
        character_names=("trivial", "chi_i", "chi_j", "chi_k", "two_dim"),
    )


BUILTIN_GROUPS: dict[str, FiniteGroup] = {
    "s3": _symmetric_group_3(),
    "q8": _quaternion_group(),
}


def get_group(name: str) -> FiniteGroup:
    try:
        return BUILTIN_GROUPS[name.lower()]
    except KeyError:
        raise DomainError(f"unknown group {name!r}; choose from {sorted(BUILTIN_GROUPS)}") from None


def commutator_product_distribution(group: FiniteGroup, k: int) -> Counter:
    """How many 2k-tuples (y1, z1, ..., yk, zk) give each value of [y1,z1]...[yk,zk].

    The counts over all |G|^(2k) tuples are accumulated one commutator
    factor at a time, which regroups the exhaustive sum without changing it.
    """
    single = Counter(
        group.commutator(y, z) for y in range(group.order) for z in range(group.order)
    )
    dist = Counter({group.identity: 1})
    for _ in range(k):
        nxt: Counter = Counter()
        for a, ca in dist.items():
            for b, cb in single.items():
                nxt[group.mul(a, b)] += ca * cb
        dist = nxt
    return dist


def finite_commutator_average(group: FiniteGroup, character: int, k: int) -> Fraction:
    """Average of ``characters[character]`` over [y1,z1]...[yk,zk] for all tuples."""
    if k < 1:
        raise DomainError("k must be at least 1")
    tuples = group.order ** (2 * k)
    if tuples > COMMUTATOR_TUPLE_LIMIT:
        raise DomainError(
            f"{group.name}, k={k}: {tuples} tuples exceeds the limit {COMMUTATOR_TUPLE_LIMIT}"
        )
    chi = group.characters[character]
    dist = commutator_product_distribution(group, k)
    return Fraction(sum(c * chi[g] for g, c in dist.items()), tuples)

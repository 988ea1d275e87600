"""Finite abelian groups, their characters, and character parities.

A group is a product of cyclic factors Z_q1 x ... x Z_qt; elements and
characters are residue tuples of the same shape.  The character with
residues (k_1, ..., k_t) is the homomorphism

    g = (g_1, ..., g_t)  |->  prod_i zeta_{q_i}^(k_i * g_i),

evaluated exactly in Q(zeta_N) where N is the group exponent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic, root_of_unity

DEFAULT_ORDER_BOUND = 4096


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_q1 x ... x Z_qt given by its cyclic factor orders."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(q) for q in self.factors))
        for q in self.factors:
            if q < 2:
                raise ValueError(f"cyclic factor orders must be >= 2, got {q}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    @property
    def rank(self) -> int:
        return len(self.factors)

    def _canon(self, residues: Sequence[int]) -> tuple[int, ...]:
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(self.factors):
            raise ValueError(
                f"residue tuple of length {len(residues)} for a group of rank {len(self.factors)}"
            )
        return tuple(r % q for r, q in zip(residues, self.factors))

    def element(self, residues: Sequence[int]) -> "GroupElement":
        return GroupElement(self, self._canon(residues))

    def character(self, residues: Sequence[int]) -> "Character":
        return Character(self, self._canon(residues))

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    @property
    def identity_character(self) -> "Character":
        return Character(self, (0,) * len(self.factors))

    def elements(self) -> list["GroupElement"]:
        """All elements, lexicographic on residue tuples."""
        return [
            GroupElement(self, r)
            for r in itertools.product(*(range(q) for q in self.factors))
        ]

    def characters(self) -> list["Character"]:
        """All characters, lexicographic on residue tuples."""
        return [
            Character(self, r)
            for r in itertools.product(*(range(q) for q in self.factors))
        ]

    def __str__(self):
        return "x".join(str(q) for q in self.factors) if self.factors else "1"


def make_group(
    factors: Iterable[int], *, order_bound: int = DEFAULT_ORDER_BOUND
) -> FiniteAbelianGroup:
    """Build Z_q1 x ... x Z_qt, keeping the order manageable for averaging."""
    group = FiniteAbelianGroup(tuple(factors))
    if group.order > order_bound:
        raise ValueError(
            f"group order {group.order} exceeds the bound {order_bound}"
        )
    return group


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    residues: tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        _same_group(self, other)
        return GroupElement(
            self.group,
            tuple(
                (a + b) % q
                for a, b, q in zip(self.residues, other.residues, self.group.factors)
            ),
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((-a) % q for a, q in zip(self.residues, self.group.factors)),
        )

    def is_identity(self) -> bool:
        return not any(self.residues)

    def __str__(self):
        return "(" + ",".join(str(r) for r in self.residues) + ")"


@dataclass(frozen=True)
class Character:
    """A weight label: the character g -> prod zeta_{q_i}^(k_i g_i)."""

    group: FiniteAbelianGroup
    residues: tuple[int, ...]

    def __call__(self, g: GroupElement) -> Cyclotomic:
        """Exact value at g, a root of unity of order dividing the exponent."""
        if g.group != self.group:
            raise ValueError("element belongs to a different group")
        n = self.group.exponent
        e = 0
        for k, gi, q in zip(self.residues, g.residues, self.group.factors):
            e += k * gi * (n // q)
        return root_of_unity(n, e % n)

    def __mul__(self, other: "Character") -> "Character":
        _same_group(self, other)
        return Character(
            self.group,
            tuple(
                (a + b) % q
                for a, b, q in zip(self.residues, other.residues, self.group.factors)
            ),
        )

    def inverse(self) -> "Character":
        return Character(
            self.group,
            tuple((-a) % q for a, q in zip(self.residues, self.group.factors)),
        )

    def is_identity(self) -> bool:
        return not any(self.residues)

    def __str__(self):
        return "(" + ",".join(str(r) for r in self.residues) + ")"


def _same_group(a, b):
    if a.group != b.group:
        raise ValueError("operands belong to different groups")


def character_table(group: FiniteAbelianGroup) -> list[list[Cyclotomic]]:
    """Matrix of exact character values, rows chi and columns g in lex order."""
    elements = group.elements()
    return [[chi(g) for g in elements] for chi in group.characters()]


@dataclass(frozen=True)
class ParityMap:
    """A homomorphism from the character group to Z_2.

    Bit p_i weights the i-th residue: |chi| = sum k_i * p_i mod 2.  A bit
    may be set only over an even cyclic factor, otherwise the map would
    not be well defined on residues.
    """

    group: FiniteAbelianGroup
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) != len(self.group.factors):
            raise ValueError(
                f"{len(self.bits)} parity bits for a group of rank {len(self.group.factors)}"
            )
        for q, b in zip(self.group.factors, self.bits):
            if b not in (0, 1):
                raise ValueError(f"parity bits must be 0 or 1, got {b}")
            if b and q % 2:
                raise ValueError(
                    f"parity bit set over odd cyclic factor Z_{q}: not a homomorphism"
                )

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup) -> "ParityMap":
        return cls(group, (0,) * len(group.factors))

    def __call__(self, chi: Character) -> int:
        if chi.group != self.group:
            raise ValueError("character belongs to a different group")
        return sum(k * b for k, b in zip(chi.residues, self.bits)) % 2


def parse_group_spec(
    spec: str, *, order_bound: int = DEFAULT_ORDER_BOUND
) -> FiniteAbelianGroup:
    """Parse a group spec string like ``"2x2"`` or ``"4"``."""
    text = spec.strip()
    if not text:
        raise ValueError("empty group spec")
    try:
        factors = [int(part) for part in text.split("x")]
    except ValueError:
        raise ValueError(f"malformed group spec {spec!r}") from None
    return make_group(factors, order_bound=order_bound)


def parse_parity_spec(group: FiniteAbelianGroup, spec: str) -> ParityMap:
    """Parse a parity bit string like ``"11"``, one bit per cyclic factor."""
    text = spec.strip()
    if not all(ch in "01" for ch in text):
        raise ValueError(f"parity spec must be a string of bits, got {spec!r}")
    return ParityMap(group, tuple(int(ch) for ch in text))

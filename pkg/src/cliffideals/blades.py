"""Signatures and basis blades for real Clifford algebras with null generators.

A signature (p, q, z) describes an algebra on p + q + z anticommuting
generators: p of them square to +1, q to -1 and z to 0.  Generators are
labelled canonically: indices 0..p-1 square to +1, p..p+q-1 to -1 and
p+q..p+q+z-1 to 0.  A basis blade is a product of distinct generators in
ascending index order, encoded as a bit mask over the generator indices
(bit i set means generator i participates; mask 0 is the scalar blade 1).
The 2**(p+q+z) blades form a linear basis of the algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

# Hard cap on p+q+z so 2**(p+q+z) blade masks stay addressable.
GENERATOR_CAP = 16


class GeneratorRole(enum.Enum):
    PLUS = 1
    MINUS = -1
    NULL = 0

    @property
    def square(self) -> int:
        return self.value


@dataclass(frozen=True)
class Signature:
    """Generator counts (p, q, z) in canonical labelling."""

    p: int
    q: int
    z: int

    def __post_init__(self):
        for name in ("p", "q", "z"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        if self.n > GENERATOR_CAP:
            raise ValueError(
                f"p+q+z = {self.n} exceeds the generator cap {GENERATOR_CAP}"
            )

    @property
    def n(self) -> int:
        """Total number of generators."""
        return self.p + self.q + self.z

    @property
    def dim(self) -> int:
        """Linear dimension of the algebra, 2**n."""
        return 1 << self.n

    @cached_property
    def plus_mask(self) -> int:
        return (1 << self.p) - 1

    @cached_property
    def minus_mask(self) -> int:
        return ((1 << self.q) - 1) << self.p

    @cached_property
    def null_mask(self) -> int:
        return ((1 << self.z) - 1) << (self.p + self.q)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def role(self, index: int) -> GeneratorRole:
        self._check_index(index)
        if index < self.p:
            return GeneratorRole.PLUS
        if index < self.p + self.q:
            return GeneratorRole.MINUS
        return GeneratorRole.NULL

    def square(self, index: int) -> int:
        """Square of generator `index`: +1, -1 or 0."""
        return self.role(index).square

    def null_indices(self) -> range:
        return range(self.p + self.q, self.n)

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.n:
            raise IndexError(
                f"generator index {index} out of range for signature "
                f"({self.p},{self.q},{self.z})"
            )

    def check_blade(self, mask: int) -> None:
        if not 0 <= mask <= self.full_mask:
            raise IndexError(
                f"blade mask {mask:#x} invalid for signature "
                f"({self.p},{self.q},{self.z})"
            )

    def __str__(self) -> str:
        return f"{self.p},{self.q},{self.z}"


def generator_square(sig: Signature, index: int) -> int:
    """Square of a single generator under `sig` (+1, -1 or 0)."""
    return sig.square(index)


def blade_mul(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """Product of two basis blades in canonical form.

    Returns (coefficient, blade mask) with coefficient in {+1, -1, 0}.
    The sign is (-1)**inversions, where `inversions` counts the pairs
    (x in a, y in b) with x > y -- exactly the adjacent transpositions a
    merge of the two ascending index lists performs -- times the squares
    of the repeated generators.  The coefficient is 0 precisely when the
    blades share a null generator.  Annihilated products are normalised
    to (0, 0).
    """
    sig.check_blade(a)
    sig.check_blade(b)
    shared = a & b
    if shared & sig.null_mask:
        return 0, 0
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    negate = swaps & 1
    if (shared & sig.minus_mask).bit_count() & 1:
        negate ^= 1
    return (-1 if negate else 1), a ^ b


def blade_parts(sig: Signature, mask: int) -> tuple[frozenset, frozenset, frozenset]:
    """Split a blade's index set by generator role: (plus, minus, null)."""
    sig.check_blade(mask)
    members = [i for i in range(sig.n) if (mask >> i) & 1]
    return (
        frozenset(i for i in members if i < sig.p),
        frozenset(i for i in members if sig.p <= i < sig.p + sig.q),
        frozenset(i for i in members if i >= sig.p + sig.q),
    )


def blade_grade(mask: int) -> int:
    return mask.bit_count()


def blade_str(mask: int) -> str:
    """Canonical text form: `1` for the scalar blade, else e.g. `e0*e2`."""
    if mask == 0:
        return "1"
    return "*".join(f"e{i}" for i in range(mask.bit_length()) if (mask >> i) & 1)

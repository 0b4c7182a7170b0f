"""Sparse multivectors over exact rational scalars.

A multivector is a finite linear combination of basis blades with
Fraction coefficients, stored as a mask -> Fraction map with no zero
entries.  All arithmetic is exact, so every algebraic identity in the
test suite is an equality, not an approximation.  Values are immutable
after construction.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .blades import Signature, blade_str


class SignatureMismatchError(ValueError):
    """Operands live in algebras with different signatures."""


def _check_same_sig(a: "Multivector", b: "Multivector") -> None:
    if a.sig != b.sig:
        raise SignatureMismatchError(f"signature mismatch: {a.sig} vs {b.sig}")


class Multivector:
    """Immutable sparse rational multivector."""

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms=None):
        self.sig = sig
        clean: dict[int, Fraction] = {}
        if terms:
            for mask, coeff in terms.items():
                sig.check_blade(mask)
                c = Fraction(coeff)
                if c:
                    clean[mask] = c
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, sig: Signature, terms: dict) -> "Multivector":
        # internal fast path: terms must already be normalised (valid
        # masks, Fraction values, no zeros)
        mv = object.__new__(cls)
        object.__setattr__(mv, "sig", sig)
        object.__setattr__(mv, "_terms", terms)
        return mv

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig)

    @classmethod
    def scalar(cls, sig: Signature, value) -> "Multivector":
        return cls(sig, {0: Fraction(value)})

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff=1) -> "Multivector":
        return cls(sig, {mask: Fraction(coeff)})

    @classmethod
    def generator(cls, sig: Signature, index: int) -> "Multivector":
        sig._check_index(index)
        return cls(sig, {1 << index: Fraction(1)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        """Blade mask -> coefficient map.  Treat as read-only."""
        return self._terms

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        _check_same_sig(self, other)
        out = dict(self._terms)
        for mask, c in other._terms.items():
            s = out.get(mask, 0) + c
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        return Multivector._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            c = Fraction(other)
            if not c:
                return Multivector._raw(self.sig, {})
            return Multivector._raw(
                self.sig, {m: v * c for m, v in self._terms.items()}
            )
        if not isinstance(other, Multivector):
            return NotImplemented
        _check_same_sig(self, other)
        # the blade_mul sign rule, inlined for the hot path (agreement
        # with blade_mul and the bubble-sort oracle is tested exhaustively)
        sig = self.sig
        nullmask = sig.null_mask
        minusmask = sig.minus_mask
        other_terms = other._terms
        out: dict[int, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other_terms.items():
                shared = ma & mb
                if shared & nullmask:
                    continue
                swaps = 0
                t = ma >> 1
                while t:
                    swaps += (t & mb).bit_count()
                    t >>= 1
                if (swaps ^ (shared & minusmask).bit_count()) & 1:
                    c = -ca * cb
                else:
                    c = ca * cb
                mask = ma ^ mb
                acc = out.get(mask)
                if acc is None:
                    out[mask] = c
                else:
                    acc = acc + c
                    if acc:
                        out[mask] = acc
                    else:
                        del out[mask]
        return Multivector._raw(sig, out)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        acc = Multivector.scalar(self.sig, 1)
        for _ in range(exponent):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    # -- structure maps -----------------------------------------------

    def radical_split(self) -> tuple["Multivector", "Multivector"]:
        """Split into (body, rad): blades without / with null generators.

        The body is the non-degenerate-subalgebra component, rad lies in
        the nil radical; body + rad == self.
        """
        nm = self.sig.null_mask
        body = {m: c for m, c in self._terms.items() if not m & nm}
        rad = {m: c for m, c in self._terms.items() if m & nm}
        return Multivector._raw(self.sig, body), Multivector._raw(self.sig, rad)

    def null_support(self) -> frozenset:
        """Null generator indices occurring in the stored terms."""
        nm = self.sig.null_mask
        acc = 0
        for mask in self._terms:
            acc |= mask & nm
        return frozenset(i for i in range(self.sig.n) if (acc >> i) & 1)

    def radical_grade_component(self, i: int) -> "Multivector":
        """Terms whose null part has exactly i generators (i >= 1).

        The radical grading starts at 1; use radical_split for the body.
        """
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"radical grade must be a positive integer, got {i!r}")
        nm = self.sig.null_mask
        picked = {m: c for m, c in self._terms.items() if (m & nm).bit_count() == i}
        return Multivector._raw(self.sig, picked)

    def nilpotency_index(self):
        """Smallest n >= 1 with self**n == 0, or None if there is none.

        The search stops at dim+1, which certifies the None verdict here:
        a nilpotent element of this algebra has index at most z+1.
        """
        power = self
        for k in range(1, self.sig.dim + 2):
            if power.is_zero():
                return k
            if k <= self.sig.dim:
                power = power * self
        return None

    def unipotent_inverse(self) -> "Multivector":
        """Inverse of 1 + x for x in the nil radical, by geometric series.

        Requires the body part to be exactly 1; raises ValueError otherwise.
        """
        body, rad = self.radical_split()
        if body != Multivector.scalar(self.sig, 1):
            raise ValueError("unipotent inverse needs body part exactly 1")
        index = rad.nilpotency_index()
        acc = Multivector.scalar(self.sig, 1)
        term = Multivector.scalar(self.sig, 1)
        for k in range(1, index):
            term = term * rad
            acc = acc - term if k % 2 else acc + term
        return acc

    # -- printing -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mask in sorted(self._terms):
            c = self._terms[mask]
            mag = abs(c)
            if mask == 0:
                body = str(mag)
            elif mag == 1:
                body = blade_str(mask)
            else:
                body = f"{mag}*{blade_str(mask)}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {self})"

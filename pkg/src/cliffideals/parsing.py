"""Text forms: signatures and multivector expressions.

Signature text is either a count triple `p,q,z` or a role string over
{+, -, 0} such as `++-0`; role strings are relabelled to the canonical
generator order and the permutation (user index -> canonical index) is
returned alongside.

Expression grammar (whitespace-insensitive):

    expr     := sign? product (('+' | '-') product)*
    product  := atom ('*' atom)*
    atom     := rational GEN? | GEN | '(' expr ')'
    rational := INT ('/' INT)?

The canonical printed form of a multivector is the flat sum
`c*<blade> +- ...` with the terms in ascending blade-mask order, and it
always parses back to an equal value.  Parenthesised products such as
`(1+e2)*(1-e2)` are accepted on input.  Generators may appear in any
order and may repeat; products are normalised through the algebra, so
`e1*e0` parses to the negated canonical blade and a repeated null
generator annihilates the term.  A `*` between two generators is
mandatory (so multi-digit indices like `e12` stay unambiguous), while a
coefficient may touch its blade (`2e0`).
"""

from __future__ import annotations

from fractions import Fraction

from .blades import Signature
from .multivector import Multivector


class ExprSyntaxError(ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_signature(text: str) -> tuple[Signature, tuple[int, ...]]:
    """Parse signature text; returns (signature, relabelling permutation).

    The permutation maps each input generator position to its canonical
    index; it is the identity for the `p,q,z` form.
    """
    s = text.strip()
    if "," in s:
        parts = [t.strip() for t in s.split(",")]
        if len(parts) != 3:
            raise ValueError(
                f"signature {text!r} must have exactly three counts p,q,z"
            )
        try:
            p, q, z = (int(t) for t in parts)
        except ValueError:
            raise ValueError(f"signature {text!r} has non-integer counts") from None
        sig = Signature(p, q, z)
        return sig, tuple(range(sig.n))
    roles = []
    for ch in s:
        if ch == "+":
            roles.append("+")
        elif ch in "-−":
            roles.append("-")
        elif ch == "0":
            roles.append("0")
        else:
            raise ValueError(
                f"cannot parse signature {text!r}: use 'p,q,z' or a role "
                "string over +, -, 0"
            )
    if not roles:
        raise ValueError("empty signature text")
    p = roles.count("+")
    q = roles.count("-")
    sig = Signature(p, q, len(roles) - p - q)
    seen = {"+": 0, "-": 0, "0": 0}
    offset = {"+": 0, "-": p, "0": p + q}
    perm = []
    for ch in roles:
        perm.append(offset[ch] + seen[ch])
        seen[ch] += 1
    return sig, tuple(perm)


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "e" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("gen", int(text[i + 1 : j]), i))
            i = j
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "+-*/()":
            tokens.append((ch, 0, i))
            i += 1
        elif ch == "−":
            tokens.append(("-", 0, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    return tokens


class _ExprParser:
    def __init__(self, sig: Signature, text: str):
        self.sig = sig
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _next(self) -> tuple[str, int, int]:
        if self.i >= len(self.tokens):
            raise ExprSyntaxError("unexpected end of expression", len(self.text))
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Multivector:
        value = self._expr()
        if self.i < len(self.tokens):
            kind, _, pos = self.tokens[self.i]
            raise ExprSyntaxError(f"unexpected {kind!r} token", pos)
        return value

    def _expr(self) -> Multivector:
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._next()[0] == "-" else 1
        value = self._product() * sign
        while self._peek() in ("+", "-"):
            sign = -1 if self._next()[0] == "-" else 1
            value = value + self._product() * sign
        return value

    def _product(self) -> Multivector:
        value, was_rational = self._atom()
        while True:
            if self._peek() == "*":
                self.i += 1
                nxt, was_rational = self._atom()
                value = value * nxt
            elif self._peek() == "gen" and was_rational:
                # coefficient touching its blade, e.g. 2e0
                nxt, was_rational = self._atom()
                value = value * nxt
            else:
                return value

    def _atom(self) -> tuple[Multivector, bool]:
        kind = self._peek()
        if kind == "(":
            open_pos = self.tokens[self.i][2]
            self.i += 1
            value = self._expr()
            if self._peek() != ")":
                raise ExprSyntaxError("unbalanced parenthesis", open_pos)
            self.i += 1
            return value, False
        if kind == "int":
            return Multivector.scalar(self.sig, self._rational()), True
        if kind == "gen":
            return self._generator(), False
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ExprSyntaxError("expected a term", pos)

    def _rational(self) -> Fraction:
        _, num, _ = self._next()
        if self._peek() == "/":
            slash_pos = self.tokens[self.i][2]
            self.i += 1
            kind, den, pos = self._next()
            if kind != "int":
                raise ExprSyntaxError("expected an integer denominator", pos)
            if den == 0:
                raise ExprSyntaxError("zero denominator", slash_pos + 1)
            return Fraction(num, den)
        return Fraction(num)

    def _generator(self) -> Multivector:
        kind, index, pos = self._next()
        if kind != "gen":
            raise ExprSyntaxError("expected a generator", pos)
        if index >= self.sig.n:
            raise IndexError(
                f"generator index {index} out of range for signature "
                f"{self.sig} (at position {pos})"
            )
        return Multivector.generator(self.sig, index)


def parse_expression(sig: Signature, text: str) -> Multivector:
    """Parse an expression into a multivector over `sig`."""
    return _ExprParser(sig, text).parse()

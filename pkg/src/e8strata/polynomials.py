"""Sparse bivariate polynomials over the rationals, with a small expression parser."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Monomial = tuple[int, int]
Number = Union[int, Fraction]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def graded_lex_key(m: Monomial) -> tuple[int, int]:
    """Sort key for graded lex with x > y (larger key = larger monomial)."""
    return m[0] + m[1], m[0]


class BivariatePoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                a, b = m
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in {m}")
                clean[(int(a), int(b))] = c
        self.terms: dict[Monomial, Fraction] = clean

    # construction

    @classmethod
    def constant(cls, c: Number) -> BivariatePoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Number = 1) -> BivariatePoly:
        return cls({(a, b): c})

    @classmethod
    def x(cls) -> BivariatePoly:
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> BivariatePoly:
        return cls.monomial(0, 1)

    # ring operations

    @staticmethod
    def _coerce(other) -> BivariatePoly:
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariatePoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = BivariatePoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Number) -> BivariatePoly:
        return BivariatePoly({m: v * c for m, v in self.terms.items()})

    def shift(self, a: int, b: int) -> BivariatePoly:
        """Multiply by the monomial x^a y^b."""
        return BivariatePoly({(m[0] + a, m[1] + b): c for m, c in self.terms.items()})

    def diff(self, var: str) -> BivariatePoly:
        if var == "x":
            return BivariatePoly({(a - 1, b): c * a for (a, b), c in self.terms.items() if a})
        if var == "y":
            return BivariatePoly({(a, b - 1): c * b for (a, b), c in self.terms.items() if b})
        raise ValueError(f"unknown variable {var!r}")

    def __call__(self, x: Number, y: Number) -> Fraction:
        return sum((c * Fraction(x) ** a * Fraction(y) ** b for (a, b), c in self.terms.items()), Fraction(0))

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(a + b for a, b in self.terms)

    def order(self) -> int:
        """Lowest total degree of a term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return min(a + b for a, b in self.terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def leading(self) -> tuple[Monomial, Fraction]:
        """Leading term for graded lex with x > y."""
        m = max(self.terms, key=graded_lex_key)
        return m, self.terms[m]

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: graded_lex_key(t[0]), reverse=True))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BivariatePoly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self:
            sign = "-" if c < 0 else "+"
            c = abs(c)
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a:
                factors.append("x" if a == 1 else f"x^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            parts.append((sign, "*".join(factors)))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def monomial_str(m: Monomial) -> str:
    return str(BivariatePoly.monomial(*m))


# --------------------------------------------------------------------------
# Parser
#
#   expr   := term (('+' | '-') term)*
#   term   := factor (('*' | '/') factor)*
#   factor := ('+' | '-') factor | power
#   power  := atom ('^' integer)?
#   atom   := integer | 'x' | 'y' | '(' expr ')'
#
# Division is only allowed by a nonzero constant.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def parse(self) -> BivariatePoly:
        if not self.peek():
            raise ParseError("empty expression", self.pos)
        p = self.expr()
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return p

    def expr(self) -> BivariatePoly:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> BivariatePoly:
        p = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            where = self.pos
            self.pos += 1
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if q.is_zero():
                    raise ParseError("division by zero", where)
                if set(q.terms) != {(0, 0)}:
                    raise ParseError("division by a non-constant", where)
                p = p.scale(1 / q.terms[(0, 0)])
        return p

    def factor(self) -> BivariatePoly:
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            p = self.factor()
            return -p if ch == "-" else p
        return self.power()

    def power(self) -> BivariatePoly:
        p = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.peek()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise ParseError("expected a nonnegative integer exponent", start)
            p = p ** int(self.text[start:self.pos])
        return p

    def atom(self) -> BivariatePoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            self.expect(")")
            return p
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return BivariatePoly.constant(int(self.text[start:self.pos]))
        if ch == "x":
            self.pos += 1
            return BivariatePoly.x()
        if ch == "y":
            self.pos += 1
            return BivariatePoly.y()
        if ch.isalpha():
            raise ParseError(f"unknown variable {ch!r}", self.pos)
        raise ParseError(f"unexpected {ch or 'end of input'!r}", self.pos)


def parse_poly(text: str) -> BivariatePoly:
    return _Parser(text).parse()

"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

Elements are stored as rational coordinate pairs ``(a, b)`` standing for
``a + b*sqrt(d)``.  Nothing here ever touches floating point except
:meth:`QuadExt.__float__`, which exists for display only.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "QuadExt",
    "QFieldError",
    "DiscriminantMismatch",
    "ParseError",
    "is_squarefree",
    "qx",
    "qx_parse",
    "qx_format",
    "qx_sign",
    "qx_floor",
    "qx_linearly_independent_over_Q",
]

RationalLike = Union[int, Fraction]


class QFieldError(ValueError):
    pass


class DiscriminantMismatch(QFieldError):
    def __init__(self, d1: int, d2: int):
        super().__init__(f"cannot combine elements of Q(sqrt({d1})) and Q(sqrt({d2}))")
        self.d1 = d1
        self.d2 = d2


class ParseError(QFieldError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def _check_disc(d: int) -> int:
    if not isinstance(d, int) or d < 2 or not is_squarefree(d):
        raise QFieldError(f"discriminant must be a square-free integer >= 2, got {d!r}")
    return d


def _sign(n: RationalLike) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True)
class QuadExt:
    """The number ``a + b*sqrt(d)``.

    Plain ints and Fractions are promoted on the fly in arithmetic and
    comparisons, so ``x + 1`` and ``x < Fraction(1, 2)`` work as expected.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        _check_disc(self.d)

    @classmethod
    def rational(cls, value: RationalLike, d: int) -> "QuadExt":
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatch(self.d, other.d)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self) -> "QuadExt":
        return self

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadExt":
        n = self.norm()
        # norm vanishes only at zero since sqrt(d) is irrational
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def sign(self) -> int:
        return qx_sign(self)

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def _cmp(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return qx_sign(self - o)

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        return qx_format(self)

    def __repr__(self) -> str:
        return f"QuadExt({qx_format(self)!r}, d={self.d})"


def qx(value, d: int) -> QuadExt:
    """Coerce an int, Fraction, string or QuadExt into Q(sqrt(d))."""
    if isinstance(value, QuadExt):
        if value.d != d:
            raise DiscriminantMismatch(value.d, d)
        return value
    if isinstance(value, str):
        return qx_parse(value, d)
    if isinstance(value, (int, Fraction)):
        return QuadExt.rational(value, d)
    raise TypeError(f"cannot interpret {value!r} as an element of Q(sqrt({d}))")


def qx_sign(x: QuadExt) -> int:
    """Exact sign of ``a + b*sqrt(d)`` by rational case analysis."""
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # a and b*sqrt(d) have opposite signs: the larger magnitude wins
    lhs = x.a * x.a
    rhs = x.b * x.b * x.d
    if lhs > rhs:
        return sa
    return sb


def qx_floor(x: QuadExt) -> int:
    """Largest integer ``n`` with ``n <= x``."""
    # float only seeds the search; the loops below settle it exactly
    n = math.floor(float(x))
    while qx_sign(x - n) < 0:
        n -= 1
    while qx_sign(x - (n + 1)) >= 0:
        n += 1
    return n


def qx_linearly_independent_over_Q(x: QuadExt, y: QuadExt) -> bool:
    if x.d != y.d:
        raise DiscriminantMismatch(x.d, y.d)
    return x.a * y.b - x.b * y.a != 0


# --- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append((m.group(2), None, m.start(2)))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    # expr     := ['+'|'-'] term (('+'|'-') term)*
    # term     := rational | rational '*' 's' | 's'
    # rational := int | int '/' posint | '(' ['+'|'-'] rational ')'
    # int      := ['-'] digits

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            expected = "integer" if kind == "int" else repr(kind)
            self.fail(f"expected {expected}, found {self.describe(tok)}", tok)
        self.i += 1
        return tok

    def describe(self, tok):
        if tok[0] == "end":
            return "end of input"
        if tok[0] == "int":
            return f"integer {tok[1]}"
        return repr(tok[0])

    def fail(self, message, tok):
        raise ParseError(message, self.text, tok[2])

    def expr(self):
        a = Fraction(0)
        b = Fraction(0)
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            ta, tb = self.term()
            a += sign * ta
            b += sign * tb
            kind = self.peek()[0]
            if kind == "end":
                return a, b
            if kind not in ("+", "-"):
                self.fail(f"unexpected {self.describe(self.peek())}", self.peek())
            sign = -1 if self.take()[0] == "-" else 1

    def term(self):
        if self.peek()[0] == "s":
            self.take()
            return Fraction(0), Fraction(1)
        r = self.rational()
        if self.peek()[0] == "*":
            self.take()
            self.take("s")
            return Fraction(0), r
        return r, Fraction(0)

    def rational(self):
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            sign = 1
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
            r = sign * self.rational()
            self.take(")")
            return r
        sign = 1
        if tok[0] == "-":
            self.take()
            sign = -1
        num = self.take("int")[1]
        if self.peek()[0] == "/":
            self.take()
            den_tok = self.take("int")
            if den_tok[1] == 0:
                raise ParseError("zero denominator", self.text, den_tok[2])
            return Fraction(sign * num, den_tok[1])
        return Fraction(sign * num)


def qx_parse(text: str, d: int) -> QuadExt:
    """Parse ``"1/2+1/2*s"``-style text, where ``s`` stands for sqrt(d).

    >>> qx_parse("2/4+2/4*s", 5)
    QuadExt('1/2+1/2*s', d=5)
    """
    _check_disc(d)
    a, b = _Parser(text).expr()
    return QuadExt(a, b, d)


def _format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def qx_format(x: QuadExt) -> str:
    """Canonical text form; zero terms are dropped and ``1*s`` prints as ``s``."""
    if x.b == 0:
        return _format_rational(x.a)
    mag = abs(x.b)
    irr = "s" if mag == 1 else f"{_format_rational(mag)}*s"
    if x.a == 0:
        return irr if x.b > 0 else "-" + irr
    return f"{_format_rational(x.a)}{'+' if x.b > 0 else '-'}{irr}"

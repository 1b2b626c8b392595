"""Exact arithmetic in the Laurent coefficient ring Q[q, 1/q, pi, 1/pi].

Every structure constant and matrix entry in this package is a finite sum
of terms (rational) * q**j * pi**k with integer j, k.  Keeping pi symbolic
means table identities can be checked with zero tolerance; pi only becomes
a float (or mpf) inside :meth:`RingElem.evaluate`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

Rat = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(x).__name__}")


class RingElem:
    """Immutable element of Q[q, 1/q, pi, 1/pi] in canonical form.

    Canonical form: a mapping (q_pow, pi_pow) -> nonzero Fraction; the zero
    element has no terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Rat] | Iterable = ()):
        data: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (j, k), c in items:
            c = _as_fraction(c)
            if c == 0:
                continue
            key = (int(j), int(k))
            tot = data.get(key, Fraction(0)) + c
            if tot == 0:
                data.pop(key, None)
            else:
                data[key] = tot
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def monomial(coef: Rat, q_pow: int = 0, pi_pow: int = 0) -> "RingElem":
        return RingElem({(q_pow, pi_pow): coef})

    @staticmethod
    def rational(num: int, den: int = 1) -> "RingElem":
        return RingElem({(0, 0): Fraction(num, den)})

    @staticmethod
    def qpow(j: int) -> "RingElem":
        return RingElem({(j, 0): Fraction(1)})

    @staticmethod
    def pipow(k: int) -> "RingElem":
        return RingElem({(0, k): Fraction(1)})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def as_monomial(self) -> Optional[tuple[Fraction, int, int]]:
        """(coef, q_pow, pi_pow) if this is a single term, else None."""
        if len(self._terms) != 1:
            return None
        (j, k), c = next(iter(self._terms.items()))
        return c, j, k

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """Yield (q_pow, pi_pow, coef) in canonical (q_pow, pi_pow) order."""
        for (j, k) in sorted(self._terms):
            yield j, k, self._terms[(j, k)]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Optional["RingElem"]:
        if isinstance(other, RingElem):
            return other
        if isinstance(other, (int, Fraction)):
            return RingElem.monomial(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            tot = data.get(key, Fraction(0)) + c
            if tot == 0:
                data.pop(key, None)
            else:
                data[key] = tot
        out = RingElem.__new__(RingElem)
        object.__setattr__(out, "_terms", data)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = RingElem.__new__(RingElem)
        object.__setattr__(out, "_terms", {key: -c for key, c in self._terms.items()})
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data: dict[tuple[int, int], Fraction] = {}
        for (j1, k1), c1 in self._terms.items():
            for (j2, k2), c2 in other._terms.items():
                key = (j1 + j2, k1 + k2)
                tot = data.get(key, Fraction(0)) + c1 * c2
                if tot == 0:
                    data.pop(key, None)
                else:
                    data[key] = tot
        out = RingElem.__new__(RingElem)
        object.__setattr__(out, "_terms", data)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert_monomial() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_monomial(self) -> "RingElem":
        """Inverse of a single-term element; raises on zero or sums."""
        mono = self.as_monomial()
        if mono is None:
            if self.is_zero:
                raise ZeroDivisionError("cannot invert the zero ring element")
            raise ValueError(f"not a monomial, cannot invert directly: {self}")
        c, j, k = mono
        return RingElem.monomial(1 / c, -j, -k)

    def divide_exact(self, other: "RingElem") -> Optional["RingElem"]:
        """Exact quotient self/other in the Laurent ring, or None.

        Units of the ring are exactly the monomials, so divisibility reduces
        to plain polynomial division after shifting minimal exponents to zero.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by the zero ring element")
        if self.is_zero:
            return ZERO
        mono = other.as_monomial()
        if mono is not None:
            return self * other.invert_monomial()
        # Shift both operands into Q[q, pi]; the quotient picks up the
        # difference of the shifts (a pure monomial, hence a unit).
        min_jq = min(j for (j, _k) in self._terms)
        min_jp = min(k for (_j, k) in self._terms)
        min_oq = min(j for (j, _k) in other._terms)
        min_op = min(k for (_j, k) in other._terms)
        num = {(j - min_jq, k - min_jp): c for (j, k), c in self._terms.items()}
        den = {(j - min_oq, k - min_op): c for (j, k), c in other._terms.items()}
        quot = _poly_divide_exact(num, den)
        if quot is None:
            return None
        shifted = {(j + min_jq - min_oq, k + min_jp - min_op): c for (j, k), c in quot.items()}
        return RingElem(shifted)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, q):
        """Numeric value at wave number q with pi replaced by its constant.

        Accepts a float (evaluates in double precision) or an mpmath mpf
        (evaluates at the active mpmath precision).
        """
        if isinstance(q, (int, float)):
            total = 0.0
            pi = math.pi
            for (j, k), c in self._terms.items():
                total += float(c) * float(q) ** j * pi**k
            return total
        import mpmath

        pi = +mpmath.mp.pi
        total = mpmath.mpf(0)
        for (j, k), c in self._terms.items():
            total += mpmath.mpf(c.numerator) / c.denominator * q**j * pi**k
        return total

    # -- comparisons, hashing, repr ----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"RingElem({self})" if self._terms else "RingElem(0)"

    def __str__(self):
        return format_ring(self)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"num": str(c.numerator), "den": str(c.denominator), "q": j, "pi": k}
                for j, k, c in self.terms()
            ]
        }

    @staticmethod
    def from_json_dict(d: dict) -> "RingElem":
        return RingElem(
            {
                (int(t["q"]), int(t["pi"])): Fraction(int(t["num"]), int(t["den"]))
                for t in d["terms"]
            }
        )


ZERO = RingElem()
ONE = RingElem.monomial(1)


def _poly_divide_exact(num: dict, den: dict) -> Optional[dict]:
    """Exact division in Q[q, pi] under lex term order; None if not divisible."""
    lead_den = max(den)
    c_den = den[lead_den]
    rem = dict(num)
    quot: dict[tuple[int, int], Fraction] = {}
    while rem:
        lead = max(rem)
        dj, dk = lead[0] - lead_den[0], lead[1] - lead_den[1]
        if dj < 0 or dk < 0:
            return None
        c = rem[lead] / c_den
        quot[(dj, dk)] = c
        for (j, k), cd in den.items():
            key = (j + dj, k + dk)
            tot = rem.get(key, Fraction(0)) - c * cd
            if tot == 0:
                rem.pop(key, None)
            else:
                rem[key] = tot
    return quot


# ---------------------------------------------------------------------------
# Fraction field
# ---------------------------------------------------------------------------


class FieldElem:
    """Quotient num/den of ring elements; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: RingElem, den: RingElem = ONE):
        if den.is_zero:
            raise ZeroDivisionError("fraction with zero denominator")
        # Normalize: monomial denominators are units and fold into num;
        # otherwise try full exact division to keep intermediates small.
        if den.is_monomial:
            num = num * den.invert_monomial()
            den = ONE
        else:
            quot = num.divide_exact(den)
            if quot is not None:
                num, den = quot, ONE
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @staticmethod
    def from_ring(x: RingElem) -> "FieldElem":
        return FieldElem(x, ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.num, self.den)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.num * other.num, self.den * other.den)

    def invert(self) -> "FieldElem":
        if self.num.is_zero:
            raise ZeroDivisionError("singular elimination pivot: inverting a zero fraction")
        return FieldElem(self.den, self.num)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.invert()

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("FieldElem is unhashable (equality is by cross-multiplication)")

    def to_ring(self) -> Optional[RingElem]:
        """The exact ring value of this fraction, or None if it is not one."""
        return self.num.divide_exact(self.den)

    def __repr__(self):
        if self.den == ONE:
            return f"FieldElem({self.num})"
        return f"FieldElem(({self.num}) / ({self.den}))"


# ---------------------------------------------------------------------------
# Formatting and parsing of the compact text form, e.g. "-q^4/(8pi)".
# ---------------------------------------------------------------------------


def _format_term(c: Fraction, j: int, k: int) -> str:
    num_parts = []
    den_parts = []
    if abs(c.numerator) != 1:
        num_parts.append(str(abs(c.numerator)))
    if c.denominator != 1:
        den_parts.append(str(c.denominator))

    def sym(name: str, power: int, bucket: list[str]) -> None:
        if power == 1:
            bucket.append(name)
        elif power != 0:
            bucket.append(f"{name}^{abs(power)}" if power > 0 else f"{name}^{power}")

    if j >= 0:
        sym("q", j, num_parts)
    else:
        sym("q", -j, den_parts)
    if k >= 0:
        sym("pi", k, num_parts)
    else:
        sym("pi", -k, den_parts)
    num = " ".join(num_parts) if num_parts else "1"
    sign = "-" if c < 0 else ""
    if not den_parts:
        return sign + num
    den = " ".join(den_parts)
    if len(den_parts) > 1 or not den_parts[0].isdigit():
        den = f"({den})"
    return f"{sign}{num}/{den}"


def format_ring(x: RingElem) -> str:
    """Human-readable form: '0', 'q^2', '-q^4/(8 pi)', '1/2 + 1/(128 pi^2)'."""
    if x.is_zero:
        return "0"
    parts = []
    for j, k, c in x.terms():
        t = _format_term(c, j, k)
        if not parts:
            parts.append(t)
        elif t.startswith("-"):
            parts.append("- " + t[1:])
        else:
            parts.append("+ " + t)
    return " ".join(parts)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(pi)|([A-Za-z][A-Za-z0-9]*'?)|(\^-?\d+)|([()+\-*/]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot tokenize {text!r} at position {pos}")
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("pi", None))
        elif m.group(3):
            tokens.append(("name", m.group(3)))
        elif m.group(4):
            tokens.append(("pow", int(m.group(4)[1:])))
        else:
            tokens.append((m.group(5), None))
        pos = m.end()
    return tokens


class _Linear:
    """Value scalar + sum_k vector[k] * symbol_k, linear in the symbols."""

    __slots__ = ("scalar", "vector")

    def __init__(self, scalar: RingElem = ZERO, vector: Optional[dict] = None):
        self.scalar = scalar
        self.vector = vector or {}

    def __add__(self, other: "_Linear") -> "_Linear":
        vec = dict(self.vector)
        for k, v in other.vector.items():
            vec[k] = vec.get(k, ZERO) + v
        return _Linear(self.scalar + other.scalar, vec)

    def scaled(self, factor: RingElem) -> "_Linear":
        return _Linear(self.scalar * factor, {k: v * factor for k, v in self.vector.items()})

    def __mul__(self, other: "_Linear") -> "_Linear":
        if self.vector and other.vector:
            raise ValueError("product of two named symbols is not a linear expression")
        if other.vector:
            return other.scaled(self.scalar)
        return self.scaled(other.scalar)


class _LinearParser:
    """Recursive-descent parser for sums of ring-coefficient * name terms."""

    def __init__(self, tokens: list, names: Optional[set] = None):
        self.tokens = tokens
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> _Linear:
        val = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()!r}")
        return val

    def expr(self) -> _Linear:
        kind, _ = self.peek()
        sign = 1
        if kind in ("+", "-"):
            self.next()
            sign = -1 if kind == "-" else 1
        total = self.term().scaled(RingElem.rational(sign))
        while True:
            kind, _ = self.peek()
            if kind not in ("+", "-"):
                break
            self.next()
            sgn = RingElem.rational(-1 if kind == "-" else 1)
            total = total + self.term().scaled(sgn)
        return total

    def term(self) -> _Linear:
        value = self.factor()
        while True:
            kind, _ = self.peek()
            if kind in ("int", "pi", "name", "("):
                value = value * self.factor()
            elif kind == "*":
                self.next()
                value = value * self.factor()
            elif kind == "/":
                self.next()
                divisor = self.factor()
                if divisor.vector:
                    raise ValueError("cannot divide by a named symbol")
                value = value.scaled(divisor.scalar.invert_monomial())
            else:
                break
        return value

    def factor(self) -> _Linear:
        kind, value = self.next()
        if kind == "int":
            return _Linear(RingElem.rational(value))
        if kind == "pi":
            return _Linear(RingElem.pipow(self.maybe_power()))
        if kind == "name":
            if value == "q":
                return _Linear(RingElem.qpow(self.maybe_power()))
            if self.names is not None and value not in self.names:
                raise ValueError(f"unknown symbol {value!r}")
            return _Linear(ZERO, {value: ONE})
        if kind == "(":
            val = self.expr()
            if self.next()[0] != ")":
                raise ValueError("missing closing parenthesis")
            return val
        raise ValueError(f"unexpected token {kind!r}")

    def maybe_power(self) -> int:
        kind, value = self.peek()
        if kind == "pow":
            self.next()
            return value
        return 1


def parse_ring(text: str) -> RingElem:
    """Parse a pure ring element, e.g. '-q^2/(4pi)' or '1/2 + 1/(128 pi^2)'."""
    val = _LinearParser(_tokenize(text), names=set()).parse()
    if val.vector:
        raise ValueError(f"named symbols are not allowed here: {text!r}")
    return val.scalar


def parse_linear(text: str, names: set) -> dict[str, RingElem]:
    """Parse a linear combination of named symbols with ring coefficients.

    '0' parses to the empty combination; stray constant terms are rejected
    (write them as explicit multiples of the identity symbol instead).
    """
    val = _LinearParser(_tokenize(text), names=names).parse()
    if not val.scalar.is_zero:
        raise ValueError(f"stray constant term in {text!r}; use an explicit symbol")
    return {k: v for k, v in val.vector.items() if not v.is_zero}

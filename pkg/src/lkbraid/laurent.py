"""Exact arithmetic in the ring Z[q^{+-1}, t^{+-1}].

A polynomial is a sparse map from exponent pairs ``(a, b)`` to nonzero
Python integers, standing for ``sum c * q^a * t^b``.  Values are immutable and
hashable; equality is equality of term maps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Exp = tuple[int, int]


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exp, int], Iterable[tuple[Exp, int]], None] = None):
        acc: dict[Exp, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (a, b), c in items:
                key = (int(a), int(b))
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, int]) -> "LaurentPoly2":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "LaurentPoly2":
        return cls._raw({(a, b): c} if c else {})

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly2._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, v in small.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exp, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            m = lp_is_unit_monomial(self)
            if m is None:
                raise ValueError("only unit monomials can be inverted")
            return m.inverse().to_poly() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, da: int, db: int) -> "LaurentPoly2":
        """Multiply by the monomial q^da t^db."""
        return LaurentPoly2._raw({(a + da, b + db): c for (a, b), c in self._terms.items()})

    def evaluate(self, q0, t0) -> Fraction:
        return lp_eval(self, q0, t0)

    def __str__(self):
        return lp_format(self)

    def __repr__(self):
        return f"LaurentPoly2('{lp_format(self)}')"


def _coerce(x) -> Optional[LaurentPoly2]:
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return LaurentPoly2.const(x)
    if isinstance(x, Monomial):
        return x.to_poly()
    return None


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
q = LaurentPoly2.monomial(1, 0)
t = LaurentPoly2.monomial(0, 1)


@dataclass(frozen=True)
class Monomial:
    """A signed unit monomial ``coeff * q^a * t^b`` with coeff in {+1, -1}."""

    a: int
    b: int
    coeff: int = 1

    def __post_init__(self):
        if self.coeff not in (1, -1):
            raise ValueError(f"monomial coefficient must be +1 or -1, got {self.coeff}")

    def to_poly(self) -> LaurentPoly2:
        return LaurentPoly2.monomial(self.a, self.b, self.coeff)

    def inverse(self) -> "Monomial":
        return Monomial(-self.a, -self.b, self.coeff)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b, self.coeff * other.coeff)

    def __str__(self):
        return lp_format(self.to_poly())


def lp_add(x: LaurentPoly2, y: LaurentPoly2) -> LaurentPoly2:
    return x + y


def lp_mul(x: LaurentPoly2, y: LaurentPoly2) -> LaurentPoly2:
    return x * y


def lp_eval(x: LaurentPoly2, q0, t0) -> Fraction:
    """Substitute rational values for q and t."""
    q0, t0 = Fraction(q0), Fraction(t0)
    if q0 == 0 or t0 == 0:
        raise ZeroDivisionError("substitution point must have q != 0 and t != 0")
    total = Fraction(0)
    for (a, b), c in x.items():
        total += c * q0 ** a * t0 ** b
    return total


def lp_lex_compare(m1: Monomial, m2: Monomial) -> int:
    """Compare q^a t^b monomials by a first, then b.  Returns -1, 0 or 1."""
    k1, k2 = (m1.a, m1.b), (m2.a, m2.b)
    return (k1 > k2) - (k1 < k2)


def lp_is_unit_monomial(x: LaurentPoly2) -> Optional[Monomial]:
    if len(x) != 1:
        return None
    ((a, b), c), = x.items()
    if c not in (1, -1):
        return None
    return Monomial(a, b, c)


def lp_div_unit(x: LaurentPoly2, u: LaurentPoly2) -> LaurentPoly2:
    """Exact division by a unit ``+-q^a t^b``."""
    m = lp_is_unit_monomial(u)
    if m is None:
        raise ValueError(f"{u} is not a unit of the ring")
    return x.shift(-m.a, -m.b) * m.coeff


def unit_ratio(x: LaurentPoly2, y: LaurentPoly2) -> Optional[Monomial]:
    """The unit u with x == u * y, if one exists (both nonzero)."""
    if x.is_zero() or y.is_zero() or len(x) != len(y):
        return None
    kx = min(x._terms)
    ky = min(y._terms)
    cx, cy = x._terms[kx], y._terms[ky]
    if cx not in (cy, -cy):
        return None
    m = Monomial(kx[0] - ky[0], kx[1] - ky[1], 1 if cx == cy else -1)
    return m if y * m.to_poly() == x else None


# -- text form ------------------------------------------------------------

def lp_format(x: LaurentPoly2) -> str:
    """Render as e.g. ``-2*q^-1*t^3 + 1``, terms sorted by (a, b) ascending.

    Zero exponents are omitted; every other exponent is written, including 1.
    """
    if x.is_zero():
        return "0"
    parts = []
    for (a, b), c in sorted(x.items()):
        factors = []
        if a:
            factors.append(f"q^{a}")
        if b:
            factors.append(f"t^{b}")
        # the coefficient is always written, so -t q^2 reads -1*q^2*t^1
        body = "*".join([str(abs(c))] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_FACTOR = re.compile(r"^(?:(\d+)|([qt])(?:\^(-?\d+))?)$")


def lp_parse(text: str) -> LaurentPoly2:
    """Parse the grammar produced by :func:`lp_format`.

    Terms are products of an optional integer and powers ``q^k``, ``t^k``
    joined by ``*``; terms are separated by ``+`` or ``-``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    # split on +/- that are not exponent signs
    terms: list[tuple[int, str]] = []
    i, sign, start = 0, 1, 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = start = 1
    while i <= len(s):
        if i == len(s) or (s[i] in "+-" and s[i - 1] != "^"):
            chunk = s[start:i]
            if not chunk:
                raise ValueError(f"malformed polynomial: {text!r}")
            terms.append((sign, chunk))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
            start = i + 1
        i += 1
    acc: dict[Exp, int] = {}
    for sign, chunk in terms:
        coeff, a, b = sign, 0, 0
        for f in chunk.split("*"):
            m = _FACTOR.match(f)
            if not m:
                raise ValueError(f"malformed factor {f!r} in {text!r}")
            if m.group(1) is not None:
                coeff *= int(m.group(1))
            else:
                e = int(m.group(3)) if m.group(3) is not None else 1
                if m.group(2) == "q":
                    a += e
                else:
                    b += e
        acc[(a, b)] = acc.get((a, b), 0) + coeff
    return LaurentPoly2(acc)

"""Exact Laurent polynomials in the three formal variables q, a (alpha), b (beta).

Coefficients are :class:`fractions.Fraction`.  A polynomial is an immutable map
from exponent triples ``(eq, ea, eb)`` to nonzero coefficients; the zero
polynomial is the empty map.

Text form
---------
Each term is written ``c * q^i * a^j * b^k`` where ``c`` is ``num/den`` (or
``num`` when the denominator is 1) and ``i, j, k`` are integers, possibly
negative.  Terms are joined by `` + `` in ascending lexicographic order of
``(i, j, k)``; a negative coefficient keeps its sign inside the term
(``1 * q^1 * a^0 * b^0 + -1 * q^0 * a^0 * b^0``).  Zero prints as ``0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exps = tuple[int, int, int]
Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class LaurentPoly:
    """Immutable Laurent polynomial in q, a, b with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Scalar] | Iterable[tuple[Exps, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, Fraction] = {}
        for exps, coeff in items:
            key = (int(exps[0]), int(exps[1]), int(exps[2]))
            acc[key] = acc.get(key, Fraction(0)) + _as_fraction(coeff)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def monomial(cls, coeff: Scalar = 1, eq: int = 0, ea: int = 0, eb: int = 0) -> LaurentPoly:
        return cls({(eq, ea, eb): coeff})

    @classmethod
    def constant(cls, c: Scalar) -> LaurentPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def sum(cls, polys: Iterable[LaurentPoly]) -> LaurentPoly:
        """Sum of many polynomials in one pass (repeated ``+`` is quadratic)."""
        acc: dict[Exps, Fraction] = {}
        for p in polys:
            for k, v in p._terms.items():
                acc[k] = acc.get(k, 0) + v
        return cls(acc)

    @property
    def terms(self) -> dict[Exps, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(_as_fraction(other))

    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[Exps, Fraction] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, q: Scalar, a: Scalar, b: Scalar) -> Fraction:
        """Exact value at ``(q, a, b)``.

        Raises ZeroDivisionError when a zero base meets a negative exponent.
        """
        q, a, b = _as_fraction(q), _as_fraction(a), _as_fraction(b)
        total = Fraction(0)
        for (i, j, k), c in self._terms.items():
            total += c * q**i * a**j * b**k
        return total

    def monomial_inverse(self) -> LaurentPoly:
        """Reciprocal of a single-term polynomial."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible")
        ((i, j, k), c), = self._terms.items()
        return LaurentPoly.monomial(1 / c, -i, -j, -k)

    def swap_ab(self) -> LaurentPoly:
        """The same polynomial with a and b exchanged."""
        return LaurentPoly({(i, k, j): c for (i, j, k), c in self._terms.items()})

    def coefficient(self, eq: int = 0, ea: int = 0, eb: int = 0) -> Fraction:
        return self._terms.get((eq, ea, eb), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"{_fmt_fraction(c)} * q^{i} * a^{j} * b^{k}" for (i, j, k), c in sorted(self._terms.items())
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; raises ValueError on malformed input."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            parts = [p.strip() for p in chunk.split("*")]
            if len(parts) != 4:
                raise ValueError(f"malformed term: {chunk!r}")
            coeff = Fraction(parts[0])
            exps = []
            for var, part in zip("qab", parts[1:]):
                name, sep, power = part.partition("^")
                if name != var or not sep:
                    raise ValueError(f"expected {var}^k in term {chunk!r}")
                exps.append(int(power))
            terms.append((tuple(exps), coeff))
        return cls(terms)


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1, 1, 0, 0)
A = LaurentPoly.monomial(1, 0, 1, 0)
B = LaurentPoly.monomial(1, 0, 0, 1)


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den`` or ``num``; floats are rejected."""
    text = text.strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"rational must be num/den, got {text!r}")
    return Fraction(text)

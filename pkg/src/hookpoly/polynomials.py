"""Exact univariate integer polynomials.

Coefficients are arbitrary-precision integers stored in ascending degree
order with trailing zeros trimmed, so the zero polynomial is the empty
tuple and the last stored coefficient is always nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"integer coefficient expected, got {value!r}")
    return value


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial over the integers, ascending coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; build with IntPolynomial.of")

    @staticmethod
    def of(coeffs: Iterable[int]) -> "IntPolynomial":
        """Normalizing constructor: validates integers and trims trailing zeros."""
        out = [_as_int(c) for c in coeffs]
        while out and out[-1] == 0:
            out.pop()
        return IntPolynomial(tuple(out))

    @staticmethod
    def constant(value: int) -> "IntPolynomial":
        return IntPolynomial.of([value])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, index: int) -> int:
        """Coefficient of x**index (0 beyond the stored degree)."""
        if index < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[index] if index < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.of(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if isinstance(other, IntPolynomial):
            if self.is_zero or other.is_zero:
                return IntPolynomial()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return IntPolynomial.of(out)
        return NotImplemented

    __rmul__ = __mul__

    def times_x(self, power: int = 1) -> "IntPolynomial":
        """Multiply by x**power."""
        if power < 0:
            raise ValueError("power must be non-negative")
        if self.is_zero or power == 0:
            return self
        return IntPolynomial((0,) * power + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __call__(self, x0: int) -> int:
        return evaluate(self, x0)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        """JSON form {"coeffs": [...]} with decimal strings, ascending degree."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "IntPolynomial":
        if isinstance(obj, str):
            import json

            obj = json.loads(obj)
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("polynomial JSON must be an object with a 'coeffs' field")
        return IntPolynomial.of(int(c) for c in obj["coeffs"])


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def derivative(p: IntPolynomial) -> IntPolynomial:
    """Formal derivative."""
    return p.derivative()


def evaluate(p: IntPolynomial, x0: int) -> int:
    """Exact evaluation at an integer point by Horner's rule."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def interpolate(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Runs Newton's divided differences in exact rational arithmetic and
    raises if the result is not integral, which signals an inconsistency
    in whatever produced the values.
    """
    if not points:
        raise ValueError("at least one interpolation point is required")
    xs = [_as_int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate interpolation nodes")
    dd = [Fraction(_as_int(y)) for _, y in points]
    m = len(xs)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner expansion of the Newton form into monomial coefficients.
    acc: list[Fraction] = []
    for i in range(m - 1, -1, -1):
        new = [Fraction(0)] * (len(acc) + 1)
        for d, c in enumerate(acc):
            new[d + 1] += c
            new[d] -= c * xs[i]
        new[0] += dd[i]
        acc = new
    for c in acc:
        if c.denominator != 1:
            raise ValueError(f"interpolation produced non-integer coefficient {c}")
    return IntPolynomial.of(c.numerator for c in acc)


def combine(
    terms: Sequence[tuple[int, IntPolynomial]], multiply_by_x: bool = False
) -> IntPolynomial:
    """Integer linear combination of polynomials, optionally shifted by x.

    With multiply_by_x set, every term is multiplied by x before summing.
    """
    total = ZERO
    for scalar, poly in terms:
        term = poly * _as_int(scalar)
        if multiply_by_x:
            term = term.times_x()
        total = total + term
    return total

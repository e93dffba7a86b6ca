"""Truncated power series with exact rational coefficients.

A :class:`FormalSeries` is a dense tuple of :class:`fractions.Fraction`
coefficients ``c[0] + c[1] t + ... + c[order-1] t^(order-1)`` in a named
variable ``t`` (e.g. ``"1/N"`` or ``"1/x"``).  Everything at power
``>= order`` is unknown, so ring operations keep the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class VariableMismatchError(ValueError):
    """Operands are series in different variables."""


def _frac(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


@dataclass(frozen=True)
class FormalSeries:
    variable: str
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        coeffs = tuple(_frac(c) for c in self.coeffs[: self.order])
        coeffs = coeffs + (Fraction(0),) * (self.order - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    # constructors ---------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int, variable: str = "t") -> "FormalSeries":
        return cls(variable, tuple(_frac(c) for c in coeffs), order)

    @classmethod
    def constant(cls, value: Scalar, order: int, variable: str = "t") -> "FormalSeries":
        return cls(variable, (_frac(value),), order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Scalar = 1, variable: str = "t") -> "FormalSeries":
        coeffs = [Fraction(0)] * order
        if power < order:
            coeffs[power] = _frac(coeff)
        return cls(variable, tuple(coeffs), order)

    @classmethod
    def zero(cls, order: int, variable: str = "t") -> "FormalSeries":
        return cls(variable, (), order)

    # access ---------------------------------------------------------------

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            raise IndexError(power)
        if power >= self.order:
            raise IndexError(f"coefficient t^{power} is beyond truncation order {self.order}")
        return self.coeffs[power]

    def items(self):
        """(power, coefficient) pairs with non-zero coefficient."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> "FormalSeries":
        return FormalSeries(self.variable, self.coeffs, min(order, self.order))

    def rename(self, variable: str) -> "FormalSeries":
        return FormalSeries(variable, self.coeffs, self.order)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "FormalSeries") -> None:
        if self.variable != other.variable:
            raise VariableMismatchError(f"{self.variable!r} vs {other.variable!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalSeries.constant(other, self.order, self.variable)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        self._check(other)
        order = min(self.order, other.order)
        return FormalSeries(self.variable, tuple(a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])), order)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries(self.variable, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return FormalSeries(self.variable, tuple(c * a for a in self.coeffs), self.order)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _frac(other))
        return NotImplemented

    # substitutions --------------------------------------------------------

    def scale_variable(self, factor: Scalar) -> "FormalSeries":
        """Substitute t -> factor * t."""
        factor = _frac(factor)
        return FormalSeries(self.variable, tuple(c * factor**k for k, c in enumerate(self.coeffs)), self.order)

    def dilate(self, step: int, variable: str | None = None) -> "FormalSeries":
        """Substitute t -> s^step; the result is a series in ``s``."""
        order = self.order * step - (step - 1) if self.order else 0
        coeffs = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return FormalSeries(variable or self.variable, tuple(coeffs), order)

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """Substitute t -> inner(s); ``inner`` must have zero constant term."""
        if inner.coeffs and inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        # inner = O(s), so t^k is known only for k < self.order
        order = min(inner.order, self.order)
        result = FormalSeries.constant(self.coeffs[0] if self.coeffs else 0, order, inner.variable)
        power = FormalSeries.constant(1, order, inner.variable)
        for k in range(1, min(self.order, order)):
            power = series_mul(power, inner)
            if self.coeffs[k]:
                result = result + power * self.coeffs[k]
        return result

    def evaluate(self, t: float) -> float:
        """Horner evaluation of the truncated polynomial at float ``t``."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + float(c)
        return acc


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    if a.variable != b.variable:
        raise VariableMismatchError(f"{a.variable!r} vs {b.variable!r}")
    order = min(a.order, b.order)
    out = [Fraction(0)] * order
    for i, x in enumerate(a.coeffs[:order]):
        if not x:
            continue
        for j, y in enumerate(b.coeffs[: order - i]):
            if y:
                out[i + j] += x * y
    return FormalSeries(a.variable, tuple(out), order)


def series_exp(a: FormalSeries) -> FormalSeries:
    """exp of a series with zero constant term.

    Uses the recurrence n e_n = sum_{k=1}^{n} k a_k e_{n-k} from e' = a' e.
    """
    if a.order and a.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    order = a.order
    e = [Fraction(0)] * order
    if order:
        e[0] = Fraction(1)
    for n in range(1, order):
        acc = sum((k * a.coeffs[k] * e[n - k] for k in range(1, n + 1) if a.coeffs[k]), Fraction(0))
        e[n] = acc / n
    return FormalSeries(a.variable, tuple(e), order)


def series_binomial_pow(exponent: Scalar, order: int, variable: str = "t") -> FormalSeries:
    """(1 - t)^exponent by the generalized binomial theorem."""
    if order < 1:
        raise ValueError("order must be >= 1")
    exponent = _frac(exponent)
    coeffs = [Fraction(1)]
    for k in range(1, order):
        # c_k = c_{k-1} * (k - 1 - exponent) / k
        coeffs.append(coeffs[-1] * (k - 1 - exponent) / k)
    return FormalSeries(variable, tuple(coeffs), order)


def series_substitute_shifted(a: FormalSeries, shift: int, order: int, variable: str = "1/x") -> FormalSeries:
    """Re-expand a series in 1/N as a series in 1/x with N = (x + shift)/2.

    1/N = 2/(x + shift) = (2/x) sum_j (-shift/x)^j, so ``shift = -1`` gives
    2/x + 2/x^2 + ... and ``shift = +1`` gives 2/x - 2/x^2 + ...
    """
    if shift not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    inner = [Fraction(0)] * order
    for j in range(1, order):
        inner[j] = Fraction(2) * Fraction(-shift) ** (j - 1)
    inner_series = FormalSeries(variable, tuple(inner), order)
    return a.truncate(order).compose(inner_series)

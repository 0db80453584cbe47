"""Truncated power series in one variable t with exact rational coefficients.

A series of order N stores the N+1 coefficients of t^0 .. t^N as Fractions.
Arithmetic between series of different orders truncates to the smaller order,
which is recorded in the result; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

DEFAULT_ORDER = 16

Scalar = Union[int, Fraction]


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = (), order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        else:
            del cs[order + 1 :]
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("exponent must be non-negative")
        cs = [Fraction(0)] * (order + 1)
        if k <= order:
            cs[k] = Fraction(coeff)
        return cls(cs, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise IndexError(f"t^{k} lies outside the stored window")
        return self._coeffs[k]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(n + 1)], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self._coeffs[k] - other._coeffs[k] for k in range(n + 1)], n
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self._coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other._coeffs[0] == 0:
            raise ZeroDivisionError(
                "cannot divide by a series with zero constant term"
            )
        n = min(self.order, other.order)
        b0 = other._coeffs[0]
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = self._coeffs[k]
            for j in range(1, k + 1):
                acc -= other._coeffs[j] * out[k - j]
            out.append(acc / b0)
        return TruncatedSeries(out, n)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers: divide one() by the series instead")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pad(self, order: int) -> "TruncatedSeries":
        """Same coefficients viewed at a different order (zero-padded or cut)."""
        return TruncatedSeries(self._coeffs, order)

    # -- substitutions and evaluation --------------------------------------

    def substitute_neg_t(self) -> "TruncatedSeries":
        """The series with t replaced by -t: flips odd coefficients."""
        return TruncatedSeries(
            [-c if k % 2 else c for k, c in enumerate(self._coeffs)], self.order
        )

    def eval_at_one(self) -> tuple[Fraction, bool]:
        """Sum of the stored coefficients, with a polynomial-detection flag.

        The flag is True only when the top stored coefficient vanishes, i.e.
        the window itself witnesses that the series could be a polynomial of
        degree below its order.  A series that fills the whole window gets
        False even if it happens to be a polynomial of higher degree.
        """
        return sum(self._coeffs, Fraction(0)), self._coeffs[-1] == 0

    # -- comparison, hashing, rendering ------------------------------------

    def __eq__(self, other: object) -> bool:
        """Coefficient-wise equality through the smaller of the two orders."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    __hash__ = None  # equality ignores trailing coefficients

    def first_divergence(self, other: "TruncatedSeries") -> int | None:
        """Smallest power at which the two series differ, None if they agree
        through the common order."""
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self._coeffs[k] != other._coeffs[k]:
                return k
        return None

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(c)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    body = mono
                elif c == -1:
                    body = "-" + mono
                else:
                    body = f"{c}{mono}"
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "TruncatedSeries":
        coeffs = [Fraction(s) for s in data["coeffs"]]
        return cls(coeffs, int(data["order"]))


def polynomial(coeffs: Sequence[Scalar], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """A polynomial viewed as a series of the given order."""
    return TruncatedSeries(coeffs, order)


def geometric(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """1/(1-t) to the given order."""
    return TruncatedSeries([1] * (order + 1), order)

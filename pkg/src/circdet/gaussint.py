"""Exact Gaussian-integer arithmetic (Z[i]) on top of Python's unbounded ints."""

from __future__ import annotations

from dataclasses import dataclass


class DivisionNotExact(ArithmeticError):
    """Raised when a Gaussian-integer division would leave a remainder.

    Inside fraction-free elimination every interior division is exact by
    construction, so seeing this error there signals an implementation bug,
    never bad input data.
    """


@dataclass(frozen=True, slots=True)
class GaussInt:
    """A Gaussian integer re + im*i with unbounded integer parts.

    Values are immutable and all operations are pure, so instances can be
    shared freely across threads.  Equality is componentwise; no canonical
    unit normalization is applied.
    """

    re: int
    im: int

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"

    @classmethod
    def from_int(cls, x: int) -> GaussInt:
        return cls(x, 0)

    @staticmethod
    def _coerce(x: int | GaussInt) -> GaussInt | None:
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x, 0)
        return None

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GaussInt(other, 0)
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: int | GaussInt) -> GaussInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other: int | GaussInt) -> GaussInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: int | GaussInt) -> GaussInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(o.re - self.re, o.im - self.im)

    def __mul__(self, other: int | GaussInt) -> GaussInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GaussInt:
        """Raise to a nonnegative integer power by repeated squaring."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative exponents are not defined in Z[i]")
        result = GaussInt(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """The field norm re**2 + im**2 (a nonnegative ordinary integer)."""
        return self.re * self.re + self.im * self.im

    def exact_div(self, other: int | GaussInt) -> GaussInt:
        """Divide by ``other``, requiring the quotient to exist in Z[i].

        Raises ZeroDivisionError for a zero divisor and DivisionNotExact when
        ``other`` does not divide ``self``; it never rounds.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide GaussInt by {type(other).__name__}")
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        # self / o = self * conj(o) / norm(o); both components must divide.
        ur = self.re * o.re + self.im * o.im
        ui = self.im * o.re - self.re * o.im
        qr, rr = divmod(ur, n)
        qi, ri = divmod(ui, n)
        if rr or ri:
            raise DivisionNotExact(f"({self}) is not divisible by ({o}) in Z[i]")
        return GaussInt(qr, qi)

    def to_complex(self) -> complex:
        """Down-convert to a double-precision complex number.

        Raises OverflowError when either part exceeds the double range.
        """
        return complex(float(self.re), float(self.im))

    def to_json(self) -> dict[str, str]:
        """Serialize as decimal strings so unbounded parts survive JSON."""
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: dict[str, str]) -> GaussInt:
        return cls(int(obj["re"]), int(obj["im"]))


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)

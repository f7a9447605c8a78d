"""Exact scalar arithmetic over the rationals and the Gaussian rationals.

A :class:`Scalar` is ``re + im*i`` with both parts stored as normalized
GMP rationals, so equality is structural and every operation is exact.
A :class:`FieldMode` picks the base field and the involution used to build
conjugate transposes; conjugation is only meaningful over the Gaussian
rationals, while the identity involution is allowed over either base.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from gmpy2 import mpq


class FieldBase(Enum):
    RATIONALS = "rationals"
    GAUSSIAN_RATIONALS = "gaussian_rationals"


class Involution(Enum):
    IDENTITY = "identity"
    CONJUGATION = "conjugation"


_Q0 = mpq(0)
_Q1 = mpq(1)


class Scalar:
    """A field element; ``im`` is identically zero for plain rationals.

    Instances are immutable by convention; nothing in the package mutates
    them after construction.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_Q0) else _to_mpq(re)
        self.im = im if type(im) is type(_Q0) else _to_mpq(im)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = _maybe_scalar(other)
        if o is None:
            return NotImplemented
        return _raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _maybe_scalar(other)
        if o is None:
            return NotImplemented
        return _raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _maybe_scalar(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _maybe_scalar(other)
        if o is None:
            return NotImplemented
        if not (self.im or o.im):
            return _raw(self.re * o.re, _Q0)
        return _raw(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_scalar(other)
        # 1/(c+di) = (c-di)/(c^2+d^2); the norm only vanishes at zero
        # because c^2 = -d^2 has no nonzero rational solution.
        if not (self.im or o.im):
            if not o.re:
                raise ZeroDivisionError("scalar division by zero")
            return _raw(self.re / o.re, _Q0)
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("scalar division by zero")
        return _raw(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __neg__(self):
        return _raw(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self):
        return ONE / self

    def conjugate(self):
        return _raw(self.re, -self.im)

    def is_zero(self) -> bool:
        return not (self.re or self.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        o = _maybe_scalar(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- text form ----------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"Scalar({self})"


def _raw(re, im) -> Scalar:
    s = Scalar.__new__(Scalar)
    s.re = re
    s.im = im
    return s


def _to_mpq(v):
    if isinstance(v, float):
        raise TypeError("floats are not exact; use Fractions or strings")
    return mpq(v)


ZERO = _raw(_Q0, _Q0)
ONE = _raw(_Q1, _Q0)
I = _raw(_Q0, _Q1)


def _maybe_scalar(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, int) or isinstance(v, Fraction):
        return _raw(mpq(v), _Q0)
    return None


def as_scalar(v) -> Scalar:
    """Coerce an int or Fraction to a Scalar; floats are rejected."""
    s = _maybe_scalar(v)
    if s is None:
        raise TypeError(f"cannot treat {v!r} as an exact scalar")
    return s


def scalar(re, im=0) -> Scalar:
    """Build a Scalar from ints, Fractions, or a canonical text form."""
    if isinstance(re, str):
        if im != 0:
            raise ValueError("imaginary part must be embedded in the string form")
        return parse_scalar(re)
    return Scalar(re, im)


_RAT = r"\d+(?:/\d+)?"
_REAL_RE = _re.compile(rf"^[+-]?{_RAT}$")
_COMPLEX_RE = _re.compile(rf"^(?P<re>[+-]?{_RAT})(?P<sign>[+-])(?P<im>{_RAT})?\*?i$")
_IMAG_RE = _re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RAT})?\*?i$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q``, ``p/q±r/s*i`` and the shorthands ``i``, ``1+i``, ``2i``."""
    s = text.replace(" ", "")
    if _REAL_RE.match(s):
        return _raw(mpq(s.lstrip("+")), _Q0)
    m = _COMPLEX_RE.match(s) or _IMAG_RE.match(s)
    if m is None:
        raise ValueError(f"malformed scalar literal: {text!r}")
    groups = m.groupdict()
    re_part = mpq((groups.get("re") or "0").lstrip("+"))
    im_part = mpq(groups.get("im") or 1)
    if groups.get("sign") == "-":
        im_part = -im_part
    return _raw(re_part, im_part)


@dataclass(frozen=True)
class FieldMode:
    """A base field paired with the involution defining the * operation."""

    base: FieldBase = FieldBase.RATIONALS
    involution: Involution = Involution.IDENTITY

    def __post_init__(self):
        if (
            self.involution is Involution.CONJUGATION
            and self.base is not FieldBase.GAUSSIAN_RATIONALS
        ):
            raise ValueError("conjugation requires the Gaussian rationals")

    def involve(self, x: Scalar) -> Scalar:
        if self.involution is Involution.CONJUGATION:
            return x.conjugate()
        return x

    def admits(self, x: Scalar) -> bool:
        return self.base is FieldBase.GAUSSIAN_RATIONALS or not x.im

    def to_json(self) -> dict:
        return {"base": self.base.value, "involution": self.involution.value}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldMode":
        return cls(FieldBase(obj["base"]), Involution(obj["involution"]))

    def __str__(self):
        return f"{self.base.value}/{self.involution.value}"


RATIONAL = FieldMode(FieldBase.RATIONALS, Involution.IDENTITY)
GAUSSIAN_IDENTITY = FieldMode(FieldBase.GAUSSIAN_RATIONALS, Involution.IDENTITY)
GAUSSIAN_CONJUGATION = FieldMode(FieldBase.GAUSSIAN_RATIONALS, Involution.CONJUGATION)

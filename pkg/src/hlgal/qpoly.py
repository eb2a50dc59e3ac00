"""Univariate polynomials in q with integer coefficients, exact arithmetic."""

from __future__ import annotations

import json


class QPoly:
    """Immutable integer polynomial; coefficients ascending, normalized."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, *a):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def q_power(k: int) -> "QPoly":
        return QPoly((0,) * k + (1,))

    @staticmethod
    def q_minus_one() -> "QPoly":
        return QPoly((-1, 1))

    @staticmethod
    def term(t: int, r: int) -> "QPoly":
        """q^t (q-1)^r."""
        return QPoly.q_power(t) * QPoly.q_minus_one() ** r

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + QPoly(tuple(-c for c in other.coeffs))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        acc = QPoly.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k; k must keep every exponent nonnegative."""
        if k >= 0:
            return QPoly((0,) * k + self.coeffs)
        if any(c != 0 for c in self.coeffs[: -k]):
            raise ValueError("shift would create negative powers")
        return QPoly(self.coeffs[-k:])

    def divide_exact(self, other: "QPoly") -> "QPoly":
        """Exact division; raises if a remainder is left."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        out = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        while len(rem) >= len(d) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(d):
                break
            lead, top = rem[-1], d[-1]
            if lead % top != 0:
                raise ArithmeticError("non-exact polynomial division")
            c = lead // top
            k = len(rem) - len(d)
            out[k] = c
            for i, dc in enumerate(d):
                rem[k + i] -= c * dc
        if any(rem):
            raise ArithmeticError("non-exact polynomial division")
        return QPoly(out)

    def pretty(self) -> str:
        """Human form, highest degree first: '2q^4 - 2q^3', 'q', '1', '0'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "q" if mag == 1 else "%dq" % mag
            else:
                body = "q^%d" % k if mag == 1 else "%dq^%d" % (mag, k)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "QPoly(%r)" % (list(self.coeffs),)

    def to_jsonable(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable())

    @staticmethod
    def from_jsonable(data: dict) -> "QPoly":
        return QPoly(data["coeffs"])


def leading_data(p: QPoly) -> tuple:
    """(degree, leading coefficient) of a nonzero polynomial."""
    return p.degree(), p.leading_coefficient()

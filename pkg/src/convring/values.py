"""Exact scalar domain: rationals extended by formal log-prime symbols.

A Value is q + sum(c_p * log p) with q and every c_p an exact Fraction.
This closes the scalar domain under everything the library computes — in
particular prime-power logarithms stay symbolic, so identities involving
them are structural equalities, not epsilon comparisons.

Multiplying two log-bearing values is deliberately undefined (it raises
LogProductUndefined): no operation in scope ever needs log*log, and failing
loudly beats inventing semantics for it.
"""

import math
import re
from fractions import Fraction

from . import core

__all__ = ["Value", "LogProductUndefined", "v_add", "v_mul", "v_log", "as_value"]


class LogProductUndefined(ArithmeticError):
    """Raised when a product of two log-bearing values is requested."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Value:
    """Immutable exact scalar: rational part `q` plus log part `logs`.

    `logs` maps prime -> nonzero Fraction coefficient; zero coefficients are
    never stored, so equality is structural on (q, logs).
    """

    __slots__ = ("q", "logs")

    def __init__(self, q=0, logs=None):
        object.__setattr__(self, "q", _as_fraction(q))
        clean = {}
        if logs:
            for p, c in logs.items():
                c = _as_fraction(c)
                if c:
                    clean[p] = c
        object.__setattr__(self, "logs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Value is immutable")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = as_value(other)
        logs = dict(self.logs)
        for p, c in other.logs.items():
            logs[p] = logs.get(p, Fraction(0)) + c
        return Value(self.q + other.q, logs)

    __radd__ = __add__

    def __neg__(self):
        return Value(-self.q, {p: -c for p, c in self.logs.items()})

    def __sub__(self, other):
        return self + (-as_value(other))

    def __rsub__(self, other):
        return as_value(other) + (-self)

    def __mul__(self, other):
        other = as_value(other)
        if self.logs and other.logs:
            raise LogProductUndefined(
                f"product of two log-bearing values: ({self}) * ({other})"
            )
        logs = {p: self.q * c for p, c in other.logs.items()}
        logs.update({p: other.q * c for p, c in self.logs.items()})
        return Value(self.q * other.q, logs)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = as_value(other)
        except TypeError:
            return NotImplemented
        return self.q == other.q and self.logs == other.logs

    def __hash__(self):
        return hash((self.q, frozenset(self.logs.items())))

    def __bool__(self):
        return bool(self.q) or bool(self.logs)

    def is_rational(self):
        return not self.logs

    # -- rendering ----------------------------------------------------

    def render(self):
        """Lossless text form, e.g. "-1", "5/6", "log(2)", "1/2-3*log(5)"."""
        parts = []
        if self.q or not self.logs:
            parts.append(str(self.q))
        for p in sorted(self.logs):
            c = self.logs[p]
            if c == 1:
                parts.append(f"log({p})")
            elif c == -1:
                parts.append(f"-log({p})")
            else:
                parts.append(f"{c}*log({p})")
        out = parts[0]
        for part in parts[1:]:
            out += part if part.startswith("-") else "+" + part
        return out

    _TERM = re.compile(r"^(-?)(?:(\d+(?:/\d+)?)\*)?log\((\d+)\)$")

    @classmethod
    def parse(cls, text):
        """Inverse of render(); round-trips every rendered Value exactly."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty value literal")
        terms, buf = [], ""
        for ch in s:
            if ch in "+-" and buf and not buf.endswith(("*", "/", "+", "-")):
                terms.append(buf)
                buf = "" if ch == "+" else "-"
            else:
                buf += ch
        terms.append(buf)
        q = Fraction(0)
        logs = {}
        for term in terms:
            if "log(" in term:
                m = cls._TERM.match(term)
                if not m:
                    raise ValueError(f"bad log term: {term!r}")
                sign, coeff, p = m.groups()
                c = Fraction(coeff) if coeff else Fraction(1)
                if sign:
                    c = -c
                p = int(p)
                logs[p] = logs.get(p, Fraction(0)) + c
            else:
                q += Fraction(term)
        return cls(q, logs)

    def to_json(self):
        """JSON form with exact string payloads."""
        return {
            "q": str(self.q),
            "L": {str(p): str(self.logs[p]) for p in sorted(self.logs)},
        }

    def to_float(self):
        """Display-only float image; never used in any equality check."""
        return float(self.q) + sum(float(c) * math.log(p) for p, c in self.logs.items())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Value({self.render()!r})"


def as_value(x):
    """Promote an int or Fraction to a Value; Values pass through."""
    if isinstance(x, Value):
        return x
    return Value(_as_fraction(x))


def v_add(a, b):
    """Componentwise sum of two values."""
    return as_value(a) + as_value(b)


def v_mul(a, b):
    """Product; defined only when at most one operand carries a log part."""
    return as_value(a) * as_value(b)


def v_log(n):
    """log n as an exact formal value: sum of r_i * log(p_i); v_log(1) == 0."""
    return Value(0, {p: Fraction(r) for p, r in core.factorize(n)})

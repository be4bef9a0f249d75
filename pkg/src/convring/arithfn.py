"""The Dirichlet convolution ring of arithmetic functions.

An ArithFn is a deterministic map from positive integers to exact Values,
with a transparent memo cache and an advisory multiplicativity certificate.
The ring product is Dirichlet convolution; the unit is the delta function
at 1.  Multiplicativity checks never trust certificates — they recompute.
"""

from fractions import Fraction

from . import core
from .values import LogProductUndefined, Value, as_value, v_log
from .verdict import Verdict

__all__ = [
    "ArithFn",
    "NotInvertible",
    "builtin",
    "BUILTIN_NAMES",
    "conv",
    "inverse",
    "add",
    "hadamard",
    "derivative",
    "is_multiplicative",
    "is_completely_multiplicative",
    "lambek_check",
    "carlitz_check",
]


class NotInvertible(ArithmeticError):
    """Raised for inverse(f) when f(1) == 0."""


class ArithFn:
    """An arithmetic function n >= 1 -> Value.

    mult_class is one of "unknown", "multiplicative",
    "completely-multiplicative".  It is advisory: checks recompute, and the
    cache only ever stores values the evaluator would return anyway, so
    behaviour is identical with or without it.
    """

    __slots__ = ("name", "mult_class", "_eval", "_memo")

    def __init__(self, name, eval_fn, mult_class="unknown"):
        if mult_class not in ("unknown", "multiplicative", "completely-multiplicative"):
            raise ValueError(f"bad mult_class: {mult_class}")
        self.name = name
        self.mult_class = mult_class
        self._eval = eval_fn
        self._memo = {}

    def __call__(self, n):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"arithmetic functions are defined on n >= 1, got {n!r}")
        v = self._memo.get(n)
        if v is None:
            v = as_value(self._eval(n))
            self._memo[n] = v
        return v

    def is_at_least_multiplicative(self):
        return self.mult_class in ("multiplicative", "completely-multiplicative")

    def table(self, upto):
        """[(n, f(n))] for n = 1..upto."""
        return [(n, self(n)) for n in range(1, upto + 1)]

    def __repr__(self):
        return f"ArithFn({self.name!r}, mult_class={self.mult_class!r})"


# -- builtins ----------------------------------------------------------

def _mu(n):
    return core.mobius(n)


def _phi(n):
    # n * prod(1 - 1/p) evaluated exactly as prod p^(r-1) * (p-1)
    out = 1
    for p, r in core.factorize(n):
        out *= p ** (r - 1) * (p - 1)
    return out


def _von_mangoldt(n):
    pairs = core.factorize(n)
    if len(pairs) == 1:
        return Value(0, {pairs[0][0]: 1})
    return Value(0)


def _nu(n):
    return 2 ** core.big_omega(n)


def _tau(n):
    out = 1
    for _, r in core.factorize(n):
        out *= r + 1
    return out


def _power(k):
    return ArithFn(f"pow({k})", lambda n: Fraction(n) ** k, "completely-multiplicative")


_FACTORIES = {
    "u": lambda: ArithFn("u", lambda n: 1 if n == 1 else 0, "completely-multiplicative"),
    "one": lambda: ArithFn("one", lambda n: 1, "completely-multiplicative"),
    "N": lambda: ArithFn("N", lambda n: n, "completely-multiplicative"),
    "mu": lambda: ArithFn("mu", _mu, "multiplicative"),
    "phi": lambda: ArithFn("phi", _phi, "multiplicative"),
    "lambda": lambda: ArithFn("lambda", _von_mangoldt, "unknown"),
    "nu": lambda: ArithFn("nu", _nu, "completely-multiplicative"),
    "tau": lambda: ArithFn("tau", _tau, "multiplicative"),
    "log": lambda: ArithFn("log", v_log, "unknown"),
    "antipode_mult": lambda: ArithFn(
        "antipode_mult", lambda n: n * core.mobius(n), "multiplicative"
    ),
}

BUILTIN_NAMES = tuple(sorted(_FACTORIES)) + ("pow(k)",)


def builtin(name):
    """Construct a builtin by name: u, one, N, pow(k), mu, phi, lambda, nu,
    tau, log, antipode_mult.  Each call returns a fresh instance."""
    factory = _FACTORIES.get(name)
    if factory is not None:
        return factory()
    if name.startswith("pow(") and name.endswith(")"):
        body = name[4:-1]
        try:
            k = int(body)
        except ValueError:
            raise ValueError(f"bad pow exponent: {body!r}") from None
        return _power(k)
    raise ValueError(f"unknown builtin: {name!r}")


# -- ring operations ---------------------------------------------------

def conv(f, g):
    """Dirichlet convolution: (f * g)(n) = sum over d | n of f(d) g(n/d)."""
    def ev(n):
        total = Value(0)
        for d in core.divisors(n):
            total = total + f(d) * g(n // d)
        return total

    mc = (
        "multiplicative"
        if f.is_at_least_multiplicative() and g.is_at_least_multiplicative()
        else "unknown"
    )
    return ArithFn(f"conv({f.name},{g.name})", ev, mc)


def inverse(f):
    """Convolution inverse of f, defined when f(1) != 0.

    Computed by the signed recursion
        f^-1(1) = 1/f(1)
        f^-1(n) = -(1/f(1)) * sum over d | n, d < n of f(n/d) f^-1(d)
    so that conv(f, inverse(f)) is exactly the unit.
    """
    f1 = f(1)
    if not f1:
        raise NotInvertible(f"{f.name}(1) = 0 has no convolution inverse")
    if not f1.is_rational():
        raise NotInvertible(f"{f.name}(1) carries a log part; cannot divide by it")
    lead = Fraction(1) / f1.q

    memo = {1: Value(lead)}

    def ev(n):
        v = memo.get(n)
        if v is not None:
            return v
        total = Value(0)
        for d in core.divisors(n):
            if d < n:
                total = total + f(n // d) * ev(d)
        v = Value(-lead) * total
        memo[n] = v
        return v

    mc = "multiplicative" if f.is_at_least_multiplicative() else "unknown"
    return ArithFn(f"inv({f.name})", ev, mc)


def add(f, g):
    """Pointwise sum."""
    return ArithFn(f"add({f.name},{g.name})", lambda n: f(n) + g(n), "unknown")


def hadamard(f, g):
    """Pointwise (coefficientwise) product (f.g)(n) = f(n) g(n)."""
    if f.mult_class == g.mult_class == "completely-multiplicative":
        mc = "completely-multiplicative"
    elif f.is_at_least_multiplicative() and g.is_at_least_multiplicative():
        mc = "multiplicative"
    else:
        mc = "unknown"
    return ArithFn(f"hadamard({f.name},{g.name})", lambda n: f(n) * g(n), mc)


def derivative(f):
    """Formal derivative (df)(n) = -f(n) * log n, exact in the log symbols.

    Raises LogProductUndefined at evaluation if f(n) carries a log part for
    some n > 1.
    """
    return ArithFn(f"derivative({f.name})", lambda n: -(f(n) * v_log(n)), "unknown")


# -- multiplicativity checks -------------------------------------------

def _pairs(limit, coprime_only):
    n = 2
    while n * n <= limit:
        m = n
        while n * m <= limit:
            if not coprime_only or core.gcd(n, m) == 1:
                yield n, m
            m += 1
        n += 1


def _split_check(f, limit, coprime_only):
    for n, m in _pairs(limit, coprime_only):
        try:
            rhs = f(n) * f(m)
        except LogProductUndefined:
            return Verdict(False, (n, m), f"f({n})*f({m}) is an undefined log product")
        if f(n * m) != rhs:
            return Verdict(False, (n, m), f"f({n * m}) != f({n})*f({m})")
    return Verdict(True, detail=f"all pairs with n*m <= {limit}")


def is_multiplicative(f, limit):
    """Exhaustively test f(nm) == f(n)f(m) over coprime 2 <= n <= m, nm <= limit."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    return _split_check(f, limit, coprime_only=True)


def is_completely_multiplicative(f, limit):
    """Exhaustively test f(nm) == f(n)f(m) over all 2 <= n <= m, nm <= limit."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    return _split_check(f, limit, coprime_only=False)


# -- distributivity characterizations ----------------------------------

def lambek_check(f, g, h, limit):
    """Test f.(g*h) == (f.g)*(f.h) for all n <= limit.

    Passes for every g, h exactly when f is completely multiplicative.
    """
    lhs = hadamard(f, conv(g, h))
    rhs = conv(hadamard(f, g), hadamard(f, h))
    for n in range(1, limit + 1):
        if lhs(n) != rhs(n):
            return Verdict(False, n, f"f.(g*h) != (f.g)*(f.h) at n={n}")
    return Verdict(True, detail=f"all n <= {limit}")


def carlitz_check(f, limit):
    """Test f(n)*tau(n) == (f*f)(n) for all n <= limit.

    Passes exactly when f is completely multiplicative on that range.
    """
    ff = conv(f, f)
    for n in range(1, limit + 1):
        if f(n) * _tau(n) != ff(n):
            return Verdict(False, n, f"f.tau != f*f at n={n}")
    return Verdict(True, detail=f"all n <= {limit}")

"""Bell series: one-prime restrictions of arithmetic functions.

A Bell series collects f(p^k) for a fixed prime p as a truncated power
series with exact rational coefficients.  Dirichlet convolution becomes the
Cauchy product of these series.  The same data, written down the diagonals
of a unit upper-triangular Toeplitz matrix, turns convolution into matrix
multiplication.

Truncation is explicit everywhere: no operation reads or extrapolates past
a series' stated order.
"""

from fractions import Fraction

from . import core
from .arithfn import ArithFn, conv, is_completely_multiplicative
from .values import Value
from .verdict import Verdict

__all__ = [
    "BellSeries",
    "bell_of",
    "cauchy_mul",
    "bell_conv_identity",
    "geometric_bell",
    "recursion_coeffs",
    "rational_expand",
    "specially_multiplicative",
    "product_formula_residual",
    "ToeplitzMatrix",
    "toeplitz_of",
    "toeplitz_mul",
]


def _as_fraction_list(coeffs):
    return tuple(Fraction(c) for c in coeffs)


class BellSeries:
    """Truncated power series [c_0 .. c_order] with c_k = f(p^k).

    p is None for prime-generic series built from raw coefficients (the
    recursion and expansion constructors); series tagged with different
    primes never combine.
    """

    __slots__ = ("p", "order", "coeffs")

    def __init__(self, coeffs, p=None, order=None):
        coeffs = _as_fraction_list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0 or len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        if p is not None and not core.is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("BellSeries is immutable")

    def __eq__(self, other):
        if not isinstance(other, BellSeries):
            return NotImplemented
        return (self.p, self.order, self.coeffs) == (other.p, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.order, self.coeffs))

    def render(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        return " + ".join(parts)

    def to_json(self):
        return {
            "p": self.p,
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BellSeries({self.render()!r}, p={self.p})"


def bell_of(f, p, order):
    """Bell series of f at prime p: coefficients f(p^0) .. f(p^order).

    Rejects log-valued coefficients; Bell series live over the rationals.
    """
    if not core.is_prime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = []
    for k in range(order + 1):
        v = f(p**k)
        if not v.is_rational():
            raise ValueError(f"{f.name}({p}^{k}) carries a log part")
        coeffs.append(v.q)
    return BellSeries(coeffs, p=p)


def cauchy_mul(a, b):
    """Cauchy product truncated to the smaller order; primes must agree."""
    if a.p is not None and b.p is not None and a.p != b.p:
        raise ValueError(f"prime mismatch: {a.p} vs {b.p}")
    order = min(a.order, b.order)
    coeffs = [
        sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(order + 1)
    ]
    return BellSeries(coeffs, p=a.p if a.p is not None else b.p)


def bell_conv_identity(f, g, p, order):
    """Check bell(f*g) == bell(f) . bell(g) coefficientwise up to order."""
    lhs = bell_of(conv(f, g), p, order)
    rhs = cauchy_mul(bell_of(f, p, order), bell_of(g, p, order))
    for k in range(order + 1):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return Verdict(
                False, k, f"coefficient {k}: {lhs.coeffs[k]} != {rhs.coeffs[k]}"
            )
    return Verdict(True, detail=f"orders 0..{order} agree at p={p}")


def geometric_bell(c, order, p=None):
    """The series of a completely multiplicative function with f(p) = c:
    coefficients [1, c, c^2, ...], i.e. the expansion of 1/(1 - c x)."""
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * c)
    return BellSeries(coeffs, p=p)


def recursion_coeffs(f_p, g_p, order):
    """Prime-power values generated by the two-term recursion

        c_0 = 1,  c_1 = f_p,  c_{n+1} = f_p * c_n - g_p * c_{n-1}.
    """
    f_p, g_p = Fraction(f_p), Fraction(g_p)
    coeffs = [Fraction(1)]
    if order >= 1:
        coeffs.append(f_p)
    for _ in range(1, order):
        coeffs.append(f_p * coeffs[-1] - g_p * coeffs[-2])
    return BellSeries(coeffs)


def rational_expand(f_p, g_p, order):
    """Series expansion of 1 / (1 - f_p x + g_p x^2) up to the given order.

    Computed by generic truncated power-series inversion, independently of
    recursion_coeffs — the two must agree.
    """
    denom = [Fraction(1), -Fraction(f_p), Fraction(g_p)]
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(denom) - 1) + 1):
            acc += denom[j] * coeffs[k - j]
        coeffs.append(-acc)
    return BellSeries(coeffs)


def specially_multiplicative(f_on_primes, g, check_limit=200, name=None):
    """Multiplicative function determined by prime data and a control term.

    f(p) comes from f_on_primes (a mapping, a callable, or one constant for
    every prime; unlisted primes default to 0); higher prime powers follow
    f(p^{n+1}) = f(p) f(p^n) - g(p) f(p^{n-1}); composites split
    multiplicatively.  g must be completely multiplicative — this is
    checked up to check_limit, and g(p) is obtained by evaluating g, never
    from a closed form.
    """
    if callable(f_on_primes):
        prime_value = f_on_primes
    elif isinstance(f_on_primes, dict):
        prime_value = lambda p: f_on_primes.get(p, 0)
    else:
        const = Fraction(f_on_primes)
        prime_value = lambda p: const
    ver = is_completely_multiplicative(g, check_limit)
    if not ver:
        raise ValueError(
            f"{g.name} is not completely multiplicative (witness {ver.witness})"
        )
    if g(1) != 1:
        raise ValueError(f"{g.name}(1) != 1")

    def prime_power(p, r):
        if r == 0:
            return Value(1)
        fp = Value(prime_value(p))
        gp = g(p)
        prev, cur = Value(1), fp
        for _ in range(1, r):
            prev, cur = cur, fp * cur - gp * prev
        return cur

    def ev(n):
        out = Value(1)
        for p, r in core.factorize(n):
            out = out * prime_power(p, r)
        return out

    return ArithFn(name or f"specially(g={g.name})", ev, "multiplicative")


def product_formula_residual(f, g, m, n):
    """Residual of the counter-term product formula

        f(mn) = f(m) f(n) - sum over d | gcd(m, n), d > 1 of g(d) f(mn / d^2)

    (the sum includes d = gcd itself).  Zero exactly when the formula holds,
    e.g. for f built by specially_multiplicative with the same g.
    """
    counter = Value(0)
    for d in core.divisors(core.gcd(m, n)):
        if d > 1:
            counter = counter + g(d) * f(m * n // (d * d))
    return f(m * n) - (f(m) * f(n) - counter)


# -- Toeplitz matrix picture -------------------------------------------

class ToeplitzMatrix:
    """Unit upper-triangular Toeplitz matrix over the rationals.

    Rows and columns are indexed 0..K, entry (a, b) = c_{b-a} for b >= a and
    0 below the diagonal, where c_0 = 1.  Row 0 therefore carries the Bell
    coefficients of order K.
    """

    __slots__ = ("p", "K", "diag")

    def __init__(self, diag, p=None, K=None):
        diag = _as_fraction_list(diag)
        if K is None:
            K = len(diag) - 1
        if K < 0 or len(diag) != K + 1:
            raise ValueError("need exactly K+1 diagonal values")
        if diag[0] != 1:
            raise ValueError("diagonal entries must be 1")
        if p is not None and not core.is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "diag", diag)

    def __setattr__(self, name, value):
        raise AttributeError("ToeplitzMatrix is immutable")

    def entry(self, a, b):
        return self.diag[b - a] if b >= a else Fraction(0)

    def rows(self):
        size = self.K + 1
        return [[self.entry(a, b) for b in range(size)] for a in range(size)]

    def first_row(self):
        return self.diag

    @classmethod
    def identity(cls, K, p=None):
        return cls([Fraction(1)] + [Fraction(0)] * K, p=p)

    def __eq__(self, other):
        if not isinstance(other, ToeplitzMatrix):
            return NotImplemented
        return (self.p, self.K, self.diag) == (other.p, other.K, other.diag)

    def __hash__(self):
        return hash((self.p, self.K, self.diag))

    def render(self):
        return "\n".join("\t".join(str(e) for e in row) for row in self.rows())

    def to_json(self):
        return {
            "p": self.p,
            "K": self.K,
            "rows": [[str(e) for e in row] for row in self.rows()],
        }

    def __repr__(self):
        return f"ToeplitzMatrix(diag={[str(c) for c in self.diag]}, p={self.p})"


def toeplitz_of(f, p, K):
    """Matrix image of f restricted to powers of p, entries f(p^{b-a}).

    Requires f(1) == 1 (unit diagonal) and rational values on p-powers.
    """
    series = bell_of(f, p, K)
    if series.coeffs[0] != 1:
        raise ValueError(f"{f.name}(1) != 1")
    return ToeplitzMatrix(series.coeffs, p=p)


def toeplitz_mul(x, y):
    """Full matrix product of two unit-Toeplitz matrices.

    Multiplies row by column, then verifies the result is again unit
    upper-triangular Toeplitz before repacking it.
    """
    if x.p is not None and y.p is not None and x.p != y.p:
        raise ValueError(f"prime mismatch: {x.p} vs {y.p}")
    if x.K != y.K:
        raise ValueError(f"dimension mismatch: {x.K} vs {y.K}")
    size = x.K + 1
    a, b = x.rows(), y.rows()
    prod = [
        [sum((a[i][k] * b[k][j] for k in range(size)), Fraction(0)) for j in range(size)]
        for i in range(size)
    ]
    for i in range(size):
        for j in range(size):
            expected = prod[0][j - i] if j >= i else Fraction(0)
            if prod[i][j] != expected:
                raise AssertionError("product is not unit-Toeplitz")
    return ToeplitzMatrix(prod[0], p=x.p if x.p is not None else y.p)

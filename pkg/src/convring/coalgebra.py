"""Coproducts on the positive integers and their unrenormalized companions.

The coproduct of multiplication splits n over its divisor pairs; the
coproduct of addition splits n over ordered sums.  Each has an
"unrenormalized" variant which is forced to be completely multiplicative
(resp. carries binomial weights): identical off the diagonal, overcounting
on it.  The difference between the two multiplicative coproducts is exactly
the diagonal excess reported by overcounting_report.

All outputs are PairSums: finite integer-weighted formal sums of ordered
pairs.  Everything is combinatorial and exact.
"""

from itertools import product as iter_product
from math import factorial

from . import core
from .verdict import Verdict

__all__ = [
    "PairSum",
    "coprod_add",
    "coprod_mult",
    "coprod_add_unren",
    "coprod_mult_unren",
    "pairsum_mul",
    "antipode_add",
    "antipode_mult",
    "antipode_mult_unren",
    "antipode_identity_check",
    "hom_axiom_check",
    "overcounting_report",
    "kronecker_pairing",
    "z_pairing",
    "duality_check",
    "z_duality_check",
    "coring_expand",
    "coring_check",
    "primitive_elements",
    "counit_check",
    "is_cocommutative",
    "is_coassociative",
    "COPRODUCTS",
]

VARIANTS = ("renormalized", "unrenormalized")


class PairSum:
    """Finite formal Z-linear combination of ordered pairs.

    kind selects the component monoid: "multiplicative" pairs of positive
    integers, "additive" pairs of nonnegative integers.  Zero coefficients
    are never stored.
    """

    __slots__ = ("kind", "terms")

    def __init__(self, kind, terms=None):
        if kind not in ("multiplicative", "additive"):
            raise ValueError(f"bad PairSum kind: {kind!r}")
        lo = 1 if kind == "multiplicative" else 0
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (a, b), c in items:
                if a < lo or b < lo:
                    raise ValueError(f"component ({a},{b}) out of range for {kind} kind")
                if c:
                    clean[(a, b)] = clean.get((a, b), 0) + c
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("PairSum is immutable")

    def items(self):
        """Terms as ((a, b), coeff), sorted by component pair."""
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PairSum):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms.items())))

    def _merge(self, other, sign):
        if not isinstance(other, PairSum) or self.kind != other.kind:
            raise ValueError("PairSum kind mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + sign * c
        return PairSum(self.kind, terms)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def swap(self):
        """Exchange the two components of every pair."""
        return PairSum(self.kind, {(b, a): c for (a, b), c in self.terms.items()})

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}·({a}×{b})" for (a, b), c in self.items())

    def to_json(self):
        return [{"a": a, "b": b, "coeff": c} for (a, b), c in self.items()]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PairSum({self.kind!r}, {self.render()!r})"


# -- the four coproducts -------------------------------------------------

def coprod_add(n):
    """Additive coproduct: all ordered splits a + b = n, coefficients 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PairSum("additive", {(a, n - a): 1 for a in range(n + 1)})


def coprod_mult(n):
    """Multiplicative coproduct: all ordered divisor pairs d x n/d, coefficients 1."""
    return PairSum("multiplicative", {(d, n // d): 1 for d in core.divisors(n)})


def coprod_add_unren(n):
    """Additive coproduct with binomial weights: sum of C(n, a) * (a, n-a)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PairSum("additive", {(a, n - a): core.binomial(n, a) for a in range(n + 1)})


def coprod_mult_unren(n):
    """Completely multiplicative extension of coprod_mult from the primes.

    Splits each prime exponent r_i as a_i + b_i with weight C(r_i, a_i);
    agrees with coprod_mult exactly on squarefree n, overcounts the
    diagonal otherwise.
    """
    pairs = core.factorize(n)
    terms = {}
    for split in iter_product(*(range(r + 1) for _, r in pairs)):
        a = b = coeff = 1
        for (p, r), k in zip(pairs, split):
            a *= p**k
            b *= p ** (r - k)
            coeff *= core.binomial(r, k)
        terms[(a, b)] = terms.get((a, b), 0) + coeff
    return PairSum("multiplicative", terms)


def pairsum_mul(x, y):
    """Componentwise product of two multiplicative-kind PairSums.

    Coefficients multiply and like terms accumulate; this is the product
    under which the unrenormalized coproduct is a homomorphism.
    """
    if x.kind != "multiplicative" or y.kind != "multiplicative":
        raise ValueError("pairsum_mul is defined for multiplicative kind only")
    terms = {}
    for (a1, a2), c in x.terms.items():
        for (b1, b2), d in y.terms.items():
            key = (a1 * b1, a2 * b2)
            terms[key] = terms.get(key, 0) + c * d
    return PairSum("multiplicative", terms)


# -- antipodes -----------------------------------------------------------

def antipode_add(n):
    """Antipode for the additive structure: n -> -n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return -n


def antipode_mult(n):
    """Antipode for the divisor coproduct: n -> n * mu(n)."""
    return n * core.mobius(n)


def antipode_mult_unren(n):
    """Antipode for the unrenormalized coproduct: the grade involution
    (-1)^Omega(n) * n for the prime-content grading."""
    return -n if core.big_omega(n) % 2 else n


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def antipode_identity_check(n, variant):
    """Verify the defining identity sum coeff * S(a) * b == delta(n, 1).

    Renormalized: sum over divisor pairs of S(d) * (n/d).
    Unrenormalized: sum over the weighted coproduct terms of S_unren(a) * b.
    """
    _check_variant(variant)
    if variant == "renormalized":
        total = sum(antipode_mult(d) * (n // d) for d in core.divisors(n))
    else:
        total = sum(
            c * antipode_mult_unren(a) * b
            for (a, b), c in coprod_mult_unren(n).terms.items()
        )
    expected = 1 if n == 1 else 0
    if total == expected:
        return Verdict(True, detail=f"sum {total}")
    return Verdict(False, n, f"sum {total} != {expected}")


def hom_axiom_check(n, m, variant):
    """Compare the coproduct of n*m with the product of the coproducts.

    The renormalized coproduct satisfies this exactly on coprime pairs; the
    unrenormalized one satisfies it for all pairs.  On failure the detail
    reports the terms the coproduct of n*m lacks.
    """
    _check_variant(variant)
    cop = coprod_mult if variant == "renormalized" else coprod_mult_unren
    combined = cop(n * m)
    split = pairsum_mul(cop(n), cop(m))
    if combined == split:
        return Verdict(True, detail="coproduct splits over the product")
    diff = split - combined
    return Verdict(False, (n, m), f"missing {diff.render()}")


def overcounting_report(n):
    """Diagonal excess coprod_mult_unren(n) - coprod_mult(n); empty iff n squarefree."""
    return coprod_mult_unren(n) - coprod_mult(n)


# -- pairings and duality -------------------------------------------------

def kronecker_pairing(n, m):
    """<n|m> = 1 if n == m else 0."""
    return 1 if n == m else 0


def z_pairing(n, m):
    """(n|m): zero off the diagonal, prod r_i! on it.

    The rescaled Kronecker pairing that dualizes integer multiplication
    into the unrenormalized coproduct.
    """
    if n != m:
        return 0
    out = 1
    for _, r in core.factorize(n):
        out *= factorial(r)
    return out


def duality_check(n, m, k, which):
    """Check <n op m | k> == sum over coprod(k) of coeff * <n|a> <m|b>,
    with op/coproduct either both additive or both multiplicative."""
    if which == "multiplicative":
        lhs = kronecker_pairing(n * m, k)
        cop = coprod_mult(k)
    elif which == "additive":
        lhs = kronecker_pairing(n + m, k)
        cop = coprod_add(k)
    else:
        raise ValueError(f"which must be 'additive' or 'multiplicative', got {which!r}")
    rhs = sum(
        c * kronecker_pairing(n, a) * kronecker_pairing(m, b)
        for (a, b), c in cop.terms.items()
    )
    if lhs == rhs:
        return Verdict(True, detail=f"both sides {lhs}")
    return Verdict(False, (n, m, k), f"lhs {lhs} != rhs {rhs}")


def z_duality_check(n, m, k):
    """Check (n*m|k) == sum over coprod_mult_unren(k) of coeff * (n|a)(m|b).

    The z-pairing analogue of duality_check: multiplication is dual to the
    unrenormalized coproduct under the factorial-rescaled pairing.
    """
    lhs = z_pairing(n * m, k)
    rhs = sum(
        c * z_pairing(n, a) * z_pairing(m, b)
        for (a, b), c in coprod_mult_unren(k).terms.items()
    )
    if lhs == rhs:
        return Verdict(True, detail=f"both sides {lhs}")
    return Verdict(False, (n, m, k), f"lhs {lhs} != rhs {rhs}")


# -- co-ring relation ------------------------------------------------------

def coring_expand(n):
    """Build the divisor coproduct by splitting each prime exponent.

    Enumerates r_i' + r_i'' = r_i and emits (prod p^r', prod p^r''); must
    reproduce coprod_mult(n) term for term.
    """
    pairs = core.factorize(n)
    terms = {}
    for split in iter_product(*(range(r + 1) for _, r in pairs)):
        a = b = 1
        for (p, r), k in zip(pairs, split):
            a *= p**k
            b *= p ** (r - k)
        terms[(a, b)] = terms.get((a, b), 0) + 1
    return PairSum("multiplicative", terms)


def coring_check(n):
    """Verdict form of coring_expand(n) == coprod_mult(n)."""
    lhs = coring_expand(n)
    rhs = coprod_mult(n)
    if lhs == rhs:
        return Verdict(True, detail=f"{len(lhs)} terms agree")
    return Verdict(False, n, f"{lhs.render()} != {rhs.render()}")


# -- primitives and structural properties ----------------------------------

def primitive_elements(limit, which):
    """Elements x <= limit with coproduct exactly (unit, x) + (x, unit).

    Multiplicative: the primes.  Additive: just 1.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    if which == "multiplicative":
        cop, unit = coprod_mult, 1
    elif which == "additive":
        cop, unit = coprod_add, 0
    else:
        raise ValueError(f"which must be 'additive' or 'multiplicative', got {which!r}")
    out = []
    for x in range(1, limit + 1):
        want = PairSum(cop(x).kind, {(unit, x): 1, (x, unit): 1})
        if cop(x) == want:
            out.append(x)
    return out


COPRODUCTS = {
    "add": coprod_add,
    "mult": coprod_mult,
    "add-unren": coprod_add_unren,
    "mult-unren": coprod_mult_unren,
}


def _unit_of(ps):
    return 1 if ps.kind == "multiplicative" else 0


def counit_check(n, coproduct):
    """Check (eps x id) and (id x eps) on coproduct(n) both return 1*n,
    eps being the indicator of the monoid unit (1 or 0)."""
    ps = coproduct(n)
    unit = _unit_of(ps)
    left = {b: c for (a, b), c in ps.terms.items() if a == unit}
    right = {a: c for (a, b), c in ps.terms.items() if b == unit}
    if left == {n: 1} and right == {n: 1}:
        return Verdict(True)
    return Verdict(False, n, f"counit contraction gave {left} / {right}")


def is_cocommutative(n, coproduct):
    """True when coproduct(n) is symmetric under swapping pair components."""
    ps = coproduct(n)
    return ps == ps.swap()


def is_coassociative(n, coproduct):
    """Compare both triple expansions of coproduct(n) as weighted triples."""
    ps = coproduct(n)
    left, right = {}, {}
    for (a, b), c in ps.terms.items():
        for (x, y), d in coproduct(a).terms.items():
            left[(x, y, b)] = left.get((x, y, b), 0) + c * d
        for (x, y), d in coproduct(b).terms.items():
            right[(a, x, y)] = right.get((a, x, y), 0) + c * d
    return left == right

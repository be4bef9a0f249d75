"""Command-line interface.

Every subcommand delegates to exactly one library operation and writes TSV
(default) or JSON to stdout.  Function arguments are tiny composition
expressions over the builtins, e.g. "mu", "conv(mu,N)", "inv(one)".

Exit status: 0 on success, 1 when a check subcommand finds a
counterexample, 2 on usage errors.  Identical argv produces byte-identical
output; no environment variables are consulted.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import arithfn, bell, coalgebra, core
from .arithfn import builtin
from .values import LogProductUndefined

__all__ = ["main", "run", "parse_fn_expr", "UsageError"]


class UsageError(Exception):
    pass


# -- expression grammar: name | op(expr) | op(expr, expr) ----------------

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|-?\d+|[(),])")

_UNARY_OPS = {"inv": arithfn.inverse, "derivative": arithfn.derivative}
_BINARY_OPS = {"conv": arithfn.conv, "add": arithfn.add, "hadamard": arithfn.hadamard}


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"bad character in expression at: {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise UsageError(
                f"expected {expected or 'a token'} in expression {self.text!r}"
            )
        self.pos += 1
        return tok

    def expr(self):
        name = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise UsageError(f"expected a name in expression {self.text!r}, got {name!r}")
        if self.peek() != "(":
            return builtin(name)
        self.take("(")
        if name == "pow":
            k = self.take()
            if not re.fullmatch(r"-?\d+", k):
                raise UsageError(f"pow expects an integer exponent, got {k!r}")
            self.take(")")
            return builtin(f"pow({k})")
        if name in _UNARY_OPS:
            inner = self.expr()
            self.take(")")
            return _UNARY_OPS[name](inner)
        if name in _BINARY_OPS:
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(")")
            return _BINARY_OPS[name](left, right)
        raise UsageError(f"unknown operation {name!r} in expression {self.text!r}")


def parse_fn_expr(text):
    """Parse a composition expression into an ArithFn."""
    parser = _Parser(text)
    try:
        fn = parser.expr()
    except ValueError as exc:  # unknown builtin
        raise UsageError(str(exc)) from None
    if parser.peek() is not None:
        raise UsageError(f"trailing input in expression {text!r}")
    return fn


# -- argument helpers -----------------------------------------------------

def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _nonnegative(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _emit(fmt, command, tsv_lines, result):
    if fmt == "json":
        print(json.dumps({"command": command, "result": result}))
    else:
        for line in tsv_lines:
            print(line)


def _table_rows(fn, upto):
    return [(n, fn(n)) for n in range(1, upto + 1)]


def _emit_table(fmt, command, rows):
    tsv = ["n\tf(n)"] + [f"{n}\t{v.render()}" for n, v in rows]
    result = [{"n": n, "value": v.to_json()} for n, v in rows]
    _emit(fmt, command, tsv, result)


def _emit_verdict(fmt, command, verdict):
    witness = verdict.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    result = {"ok": verdict.ok, "witness": witness, "detail": verdict.detail}
    _emit(fmt, command, [str(verdict)], result)
    return 0 if verdict.ok else 1


def _emit_series(fmt, command, series):
    tsv = ["\t".join(str(c) for c in series.coeffs)]
    _emit(fmt, command, tsv, series.to_json())


# -- subcommand handlers ----------------------------------------------------

def _cmd_tabulate(args):
    _emit_table(args.format, "tabulate", _table_rows(parse_fn_expr(args.fn), args.upto))
    return 0


def _cmd_conv(args):
    fn = arithfn.conv(parse_fn_expr(args.f), parse_fn_expr(args.g))
    _emit_table(args.format, "conv", _table_rows(fn, args.upto))
    return 0


def _cmd_inverse(args):
    fn = arithfn.inverse(parse_fn_expr(args.f))
    _emit_table(args.format, "inverse", _table_rows(fn, args.upto))
    return 0


_ANTIPODES = {
    "add": coalgebra.antipode_add,
    "mult": coalgebra.antipode_mult,
    "mult-unren": coalgebra.antipode_mult_unren,
}


def _cmd_antipode(args):
    fn = _ANTIPODES[args.variant]
    start = 0 if args.variant == "add" else 1
    rows = [(n, fn(n)) for n in range(start, args.upto + 1)]
    tsv = ["n\tf(n)"] + [f"{n}\t{s}" for n, s in rows]
    _emit(args.format, "antipode", tsv, [{"n": n, "value": s} for n, s in rows])
    return 0


def _cmd_coprod(args):
    ps = coalgebra.COPRODUCTS[args.variant](args.n)
    _emit(args.format, "coprod", [ps.render()], ps.to_json())
    return 0


def _cmd_overcount(args):
    ps = coalgebra.overcounting_report(args.n)
    _emit(args.format, "overcount", [ps.render()], ps.to_json())
    return 0


def _cmd_check(args):
    what = args.what
    if what == "mult":
        v = arithfn.is_multiplicative(parse_fn_expr(args.fn), args.upto)
    elif what == "complete-mult":
        v = arithfn.is_completely_multiplicative(parse_fn_expr(args.fn), args.upto)
    elif what == "lambek":
        v = arithfn.lambek_check(
            parse_fn_expr(args.fn), parse_fn_expr(args.g), parse_fn_expr(args.h), args.upto
        )
    elif what == "carlitz":
        v = arithfn.carlitz_check(parse_fn_expr(args.fn), args.upto)
    elif what == "hom-axiom":
        v = coalgebra.hom_axiom_check(args.n, args.m, args.variant)
    elif what == "antipode":
        v = coalgebra.antipode_identity_check(args.n, args.variant)
    elif what == "duality":
        v = coalgebra.duality_check(args.n, args.m, args.k, args.variant)
    else:  # coring
        v = coalgebra.coring_check(args.n)
    return _emit_verdict(args.format, f"check {what}", v)


def _cmd_bell(args):
    _emit_series(
        args.format, "bell", bell.bell_of(parse_fn_expr(args.fn), args.prime, args.order)
    )
    return 0


def _cmd_bell_mul(args):
    a = bell.bell_of(parse_fn_expr(args.fn), args.prime, args.order)
    b = bell.bell_of(parse_fn_expr(args.g), args.prime, args.order)
    _emit_series(args.format, "bell-mul", bell.cauchy_mul(a, b))
    return 0


def _cmd_recursion(args):
    _emit_series(
        args.format, "recursion", bell.recursion_coeffs(args.fp, args.gp, args.order)
    )
    return 0


def _cmd_product_formula(args):
    g = parse_fn_expr(args.g)
    f = bell.specially_multiplicative(args.fp, g)
    residual = bell.product_formula_residual(f, g, args.m, args.n)
    _emit(args.format, "product-formula", [residual.render()], residual.to_json())
    return 0


def _cmd_matrix(args):
    m = bell.toeplitz_of(parse_fn_expr(args.fn), args.prime, args.order)
    _emit(args.format, "matrix", m.render().split("\n"), m.to_json())
    return 0


def _cmd_primitives(args):
    found = coalgebra.primitive_elements(args.upto, args.variant)
    _emit(args.format, "primitives", ["\t".join(str(x) for x in found)], found)
    return 0


def _cmd_pnt(args):
    count = core.prime_count(args.x)
    import math

    ratio = count * math.log(args.x) / args.x
    tsv = ["x\tpi(x)\tratio", f"{args.x}\t{count}\t{ratio!r}"]
    _emit(args.format, "pnt", tsv, {"x": args.x, "pi": count, "ratio": ratio})
    return 0


def _cmd_hg_vs_ha(args):
    tsv = ["n\thg_terms\tha_terms\texcess"]
    rows = []
    nonsquarefree = 0
    for n in range(1, args.upto + 1):
        renorm = coalgebra.coprod_mult(n)
        unren = coalgebra.coprod_mult_unren(n)
        excess = unren - renorm
        hg = sum(renorm.terms.values())
        ha = sum(unren.terms.values())
        if excess:
            nonsquarefree += 1
        tsv.append(f"{n}\t{hg}\t{ha}\t{excess.render()}")
        rows.append(
            {"n": n, "hg_terms": hg, "ha_terms": ha, "excess": excess.to_json()}
        )
    result = {"upto": args.upto, "nonsquarefree": nonsquarefree, "rows": rows}
    _emit(args.format, "hg-vs-ha", tsv, result)
    return 0


# -- parser wiring -----------------------------------------------------------

def _add_format(p):
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")


def build_parser():
    top = argparse.ArgumentParser(
        prog="convring",
        description="Exact Dirichlet-convolution ring calculator: tabulation, "
        "coproducts, antipodes, identity checks, Bell series.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tabulate", help="tabulate a function expression")
    p.add_argument("fn")
    p.add_argument("--upto", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_tabulate)

    p = sub.add_parser("conv", help="tabulate the Dirichlet convolution of two expressions")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--upto", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_conv)

    p = sub.add_parser("inverse", help="tabulate the convolution inverse")
    p.add_argument("f")
    p.add_argument("--upto", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_inverse)

    p = sub.add_parser("antipode", help="tabulate an antipode")
    p.add_argument("variant", choices=sorted(_ANTIPODES))
    p.add_argument("--upto", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_antipode)

    p = sub.add_parser("coprod", help="print a coproduct as a pair sum")
    p.add_argument("variant", choices=sorted(coalgebra.COPRODUCTS))
    p.add_argument("n", type=_nonnegative)
    _add_format(p)
    p.set_defaults(handler=_cmd_coprod)

    p = sub.add_parser("overcount", help="diagonal excess of the unrenormalized coproduct")
    p.add_argument("n", type=_positive)
    _add_format(p)
    p.set_defaults(handler=_cmd_overcount)

    p = sub.add_parser("check", help="run an identity check (exit 1 on counterexample)")
    check_sub = p.add_subparsers(dest="what", required=True)
    for what in ("mult", "complete-mult", "carlitz"):
        q = check_sub.add_parser(what)
        q.add_argument("--fn", required=True)
        q.add_argument("--upto", type=_positive, required=True)
        _add_format(q)
    q = check_sub.add_parser("lambek")
    q.add_argument("--fn", required=True)
    q.add_argument("--g", required=True)
    q.add_argument("--h", required=True)
    q.add_argument("--upto", type=_positive, required=True)
    _add_format(q)
    q = check_sub.add_parser("hom-axiom")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--m", type=_positive, required=True)
    q.add_argument("--variant", choices=coalgebra.VARIANTS, required=True)
    _add_format(q)
    q = check_sub.add_parser("antipode")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--variant", choices=coalgebra.VARIANTS, required=True)
    _add_format(q)
    q = check_sub.add_parser("duality")
    q.add_argument("--n", type=_nonnegative, required=True)
    q.add_argument("--m", type=_nonnegative, required=True)
    q.add_argument("--k", type=_nonnegative, required=True)
    q.add_argument("--variant", choices=("additive", "multiplicative"), required=True)
    _add_format(q)
    q = check_sub.add_parser("coring")
    q.add_argument("--n", type=_positive, required=True)
    _add_format(q)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("bell", help="Bell series coefficients of a function at a prime")
    p.add_argument("--fn", required=True)
    p.add_argument("--prime", type=_positive, required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_bell)

    p = sub.add_parser("bell-mul", help="Cauchy product of two Bell series")
    p.add_argument("--fn", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--prime", type=_positive, required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_bell_mul)

    p = sub.add_parser("recursion", help="series from the two-term prime-power recursion")
    p.add_argument("--fp", type=_fraction, required=True)
    p.add_argument("--gp", type=_fraction, required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_recursion)

    p = sub.add_parser(
        "product-formula",
        help="counter-term product formula residual for a recursion-built function",
    )
    p.add_argument("--fp", type=_fraction, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_product_formula)

    p = sub.add_parser("matrix", help="unit-Toeplitz matrix image at a prime")
    p.add_argument("--fn", required=True)
    p.add_argument("--prime", type=_positive, required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("primitives", help="primitive elements of a coproduct up to a bound")
    p.add_argument("--upto", type=_positive, required=True)
    p.add_argument("--variant", choices=("additive", "multiplicative"), required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_primitives)

    p = sub.add_parser("pnt", help="prime count and its prime-number-theorem ratio")
    p.add_argument("--x", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_pnt)

    p = sub.add_parser(
        "hg-vs-ha",
        help="per-n comparison of the renormalized and unrenormalized coproduct weights",
    )
    p.add_argument("--upto", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_hg_vs_ha)

    return top


def run(argv):
    """Parse argv and execute; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"convring: {exc}", file=sys.stderr)
        return 2
    except (LogProductUndefined, arithfn.NotInvertible, ValueError) as exc:
        print(f"convring: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

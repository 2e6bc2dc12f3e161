"""Command-line front end: ``gschur <command> ...``.

Exit codes: 0 ok, 1 a verify suite failed, 2 bad flags, 3 bound exceeded,
4 internal invariant violation (a reproducer is dumped to stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from itertools import product

from . import cache
from .algebra import SchurAlgebra
from .errors import BoundExceededError, InvariantViolation
from .filtration import dim_C, dim_Q, kernel_rank
from .levels import census
from .monoid import Family, enumerate_family, unsafe_bounds
from .rings import parse_ring
from .shapes import enumerate_compositions, validate_composition
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND, EXIT_INVARIANT = 0, 1, 2, 3, 4


class UsageError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def parse_parts(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _ints(seq) -> str:
    return " ".join(str(x) for x in seq)


# commands

def cmd_enumerate(args, out):
    for a in enumerate_family(args.family, args.r):
        out.write(dumps(list(a)) + "\n")
    return EXIT_OK


def cmd_cosets(args, out):
    if args.no_cache:
        payload = cache.compute_table(args.family, args.r, args.n)
    else:
        payload, _ = cache.load_table(args.family, args.r, args.n, args.cache_dir)
    lam, mu = parse_parts(args.lam), parse_parts(args.mu)
    data = json.loads(payload)
    if lam is not None:
        lam = validate_composition(lam, args.r, args.n)
    if mu is not None:
        mu = validate_composition(mu, args.r, args.n)
    data["cosets"] = [c for c in data["cosets"]
                      if (lam is None or tuple(c["lambda"]) == lam)
                      and (mu is None or tuple(c["mu"]) == mu)]
    out.write(dumps(data) + "\n")
    return EXIT_OK


def _algebra(args, ring=None) -> SchurAlgebra:
    return SchurAlgebra(args.family, args.r, args.n, args.side, ring or args.ring)


def cmd_multiply(args, out):
    alg = _algebra(args)
    for name in ("lam", "nu", "mu", "rep1", "rep2"):
        if getattr(args, name) is None:
            raise UsageError(f"multiply requires --{name.replace('lam', 'lambda')}")
    lam, nu, mu = parse_parts(args.lam), parse_parts(args.nu), parse_parts(args.mu)
    x = alg.f(lam, parse_parts(args.rep1), nu)
    y = alg.f(nu, parse_parts(args.rep2), mu)
    out.write(dumps({"left": alg.to_json(x)["terms"], "right": alg.to_json(y)["terms"],
                     "product": alg.to_json(x * y)}) + "\n")
    return EXIT_OK


TABLE_COLUMNS = ["family", "r", "n", "side", "lambda", "nu", "mu", "rep1", "rep2", "rep", "coeff"]


def _table_rows(alg: SchurAlgebra, triple) -> list[list]:
    lam, nu, mu = triple
    rows = []
    for k1 in alg.basis(lam, nu):
        for k2 in alg.basis(nu, mu):
            for k, c in sorted(alg.basis_product(k1, k2).items()):
                coeff = alg.ring(c)
                if coeff == alg.ring(0):
                    continue
                rows.append([alg.family.value, alg.r, alg.n, alg.side, list(lam), list(nu),
                             list(mu), list(k1.rep), list(k2.rep), list(k.rep),
                             alg.ring.format(coeff)])
    return rows


def cmd_table(args, out):
    alg = _algebra(args)
    triples = list(product(alg.compositions, repeat=3))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            chunks = list(pool.map(lambda t: _table_rows(alg, t), triples))
    else:
        chunks = [_table_rows(alg, t) for t in triples]
    rows = [row for chunk in chunks for row in chunk]
    if args.format == "json":
        out.write(dumps([dict(zip(TABLE_COLUMNS, row)) for row in rows]) + "\n")
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for row in rows:
        w.writerow([_ints(x) if isinstance(x, list) else x for x in row])
    out.write(buf.getvalue())
    return EXIT_OK


def cmd_cdim(args, out):
    if args.lam is None:
        raise UsageError("cdim requires --lambda")
    alg = _algebra(args, ring=args.field)
    lam = alg.shape(parse_parts(args.lam))
    res = {
        "family": alg.family.value, "r": alg.r, "n": alg.n, "side": alg.side,
        "lambda": list(lam), "field": alg.ring.name,
        "ambient_dim": len(alg.basis(lam, lam)),
        "kernel_rank": kernel_rank(alg, lam),
        "dim_C": dim_C(alg, lam),
    }
    if args.dim_q:
        res["dim_Q"] = dim_Q(alg, lam)
    out.write(dumps(res) + "\n")
    return EXIT_OK


def cmd_census(args, out):
    n = args.n if args.n is not None else args.r
    records = census(args.family, args.side, args.r, args.p, n, strict=args.strict)
    res = {"family": Family.parse(args.family).value, "side": args.side, "r": args.r,
           "p": args.p, "n": n, "strict": args.strict, "count": len(records)}
    if not args.count_only:
        res["records"] = [rec.to_json() for rec in records]
    out.write(dumps(res) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    families = [args.family] if args.family else list(Family)
    res = run_suite(args.suite, args.r, families)
    out.write(dumps(res.to_json()) + "\n")
    return EXIT_OK if res.ok else EXIT_FAIL


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family(text: str) -> str:
    try:
        return Family.parse(text).value
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _side(text: str) -> str:
    if text.upper() not in ("L", "R"):
        raise argparse.ArgumentTypeError("side must be L or R")
    return text.upper()


def _ring(text: str):
    try:
        return parse_ring(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _field(text: str):
    ring = _ring(text)
    if not ring.is_field:
        raise argparse.ArgumentTypeError("field must be Q or GF(p)")
    return ring


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    def global_flags(p, default):
        p.add_argument("--unsafe-bounds", action="store_true", default=default(False),
                       help="lift the default degree bounds (sym 6, full/rook 5, partial 4)")
        p.add_argument("--threads", type=_positive, default=default(1),
                       help="worker threads for table building")
        p.add_argument("--cache-dir", default=default(None),
                       help=f"coset table cache (default ${cache.ENV_VAR})")

    parser = _Parser(prog="gschur", description="Generalized Schur algebras of transformation monoids.")
    global_flags(parser, lambda v: v)
    # the same flags are accepted after the command; SUPPRESS keeps the top-level values
    shared = argparse.ArgumentParser(add_help=False)
    global_flags(shared, lambda v: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[shared], **kw)

    def common(p, n=True, side=False):
        p.add_argument("--family", type=_family, required=True)
        p.add_argument("--r", type=_positive, required=True)
        if n:
            p.add_argument("--n", type=_positive, required=True)
        if side:
            p.add_argument("--side", type=_side, default="R")

    p = sub.add_parser("enumerate", help="list the monoid elements, one JSON array per line")
    common(p, n=False)

    p = sub.add_parser("cosets", help="double cosets with stabilizer counts (cached)")
    common(p)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("multiply", help="product of two basis elements")
    common(p, side=True)
    p.add_argument("--ring", type=_ring, default=parse_ring("Z"))
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--nu")
    p.add_argument("--mu")
    p.add_argument("--rep1")
    p.add_argument("--rep2")

    p = sub.add_parser("table", help="full multiplication table")
    common(p, side=True)
    p.add_argument("--ring", type=_ring, default=parse_ring("Z"))
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("cdim", help="dimension of the level quotient C^lambda")
    common(p, side=True)
    p.add_argument("--field", type=_field, default=parse_ring("Q"))
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--dim-q", action="store_true", help="also report the dimension of Q^lambda")

    p = sub.add_parser("census", help="data lists indexing the irreducible modules")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--side", type=_side, default="R")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--strict", action="store_true",
                   help="literal reading: no tail choice when s_0 = 0 (full, side L)")

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--family", type=_family, default=None)
    return parser


COMMANDS = {
    "enumerate": cmd_enumerate, "cosets": cmd_cosets, "multiply": cmd_multiply,
    "table": cmd_table, "cdim": cmd_cdim, "census": cmd_census, "verify": cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.cache_dir is None:
        args.cache_dir = cache.default_dir()
    buf = io.StringIO()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", cache.CacheWarning)
            if args.unsafe_bounds:
                with unsafe_bounds():
                    code = COMMANDS[args.command](args, buf)
            else:
                code = COMMANDS[args.command](args, buf)
        for w in caught:
            err.write(f"warning: {w.message}\n")
    except BoundExceededError as e:
        err.write(f"gschur: bound exceeded: {e}\n")
        return EXIT_BOUND
    except InvariantViolation as e:
        err.write(f"gschur: invariant violation: {e}\n")
        err.write("reproducer: " + dumps(getattr(e, "reproducer", {})) + "\n")
        return EXIT_INVARIANT
    except (UsageError, ValueError, TypeError) as e:
        err.write(f"gschur: error: {e}\n")
        return EXIT_USAGE
    out.write(buf.getvalue())
    out.flush()
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))

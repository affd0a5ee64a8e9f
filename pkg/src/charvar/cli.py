"""Command line front end.

    charvar hmu   --genus G --mu "1,1;2"           H_mu(z,w) with its E and A specialisations
    charvar epoly --genus G --mu ...                E-polynomial, cross-checked three ways
    charvar apoly --genus G --mu ...                pure part A(q)
    charvar mhp   --genus G --mu ...                Poincare polynomial candidate in (q,t)
    charvar euler --genus G --mu ...                Euler characteristic (g >= 1)
    charvar count --mult|--add --genus G --mu ... --q P    point count over F_P
    charvar chartab --q P                           character table of GL_2(F_P)
    charvar verify --suite small                    the end-to-end verification suite

Exit status: 0 on success, 1 on a computation error (the error class is
printed), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction

from . import __version__
from .combinat import format_multipartition, parse_multipartition
from .errors import CharvarError, ParseError
from .exact import ZW, LaurentPoly2, RatFun

SCHEMA = 1
log = logging.getLogger("charvar")


class UsageError(Exception):
    pass


def _ratfun_text(f: RatFun, latex: bool) -> str:
    if not latex:
        return f.to_str(ZW)
    num = LaurentPoly2.from_flint(f.num, ZW).to_latex()
    if f.den.is_one():
        return num
    return rf"\frac{{{num}}}{{{LaurentPoly2.from_flint(f.den, ZW).to_latex()}}}"


def _poly_text(p: LaurentPoly2 | None, latex: bool):
    if p is None:
        return None
    return p.to_latex() if latex else p.to_str()


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Report:
    """Ordered payload; `timings` is only filled when requested so output stays byte-stable."""

    def __init__(self, command: str, query: dict, with_timings: bool):
        self.payload = {"schema": SCHEMA, "command": command, "query": query}
        self.checks: dict = {}
        self.timings: dict = {}
        self.with_timings = with_timings
        self._t0 = time.perf_counter()

    def __setitem__(self, key, value):
        self.payload[key] = value

    def timed(self, name, fn, *args, **kwargs):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        self.timings[name] = round(time.perf_counter() - start, 4)
        return out

    def finish(self) -> dict:
        out = dict(self.payload)
        out["checks"] = self.checks
        out["timings"] = self.timings if self.with_timings else {}
        if self.with_timings:
            out["timings"]["total"] = round(time.perf_counter() - self._t0, 4)
        return out


def _query(args) -> dict:
    q = {"genus": args.genus, "mu": format_multipartition(args.mu)}
    if getattr(args, "q", None) is not None:
        q["q"] = args.q
    return q


def _kernel_query(args):
    from .kernel import KernelQuery
    if args.genus is None:
        raise UsageError("--genus is required")
    if args.mu is None:
        raise UsageError("--mu is required")
    return KernelQuery(args.genus, args.mu)


def cmd_hmu(args, rep: Report):
    from .kernel import hmu
    kq = _kernel_query(args)
    res = rep.timed("hmu", hmu, kq)
    latex = args.format == "latex"
    rep["d_mu"] = res.d_mu
    rep["H"] = _ratfun_text(res.value, latex)
    rep["E"] = _poly_text(res.E, latex)
    rep["A"] = _poly_text(res.A, latex)
    rep.checks["polynomial"] = res.polynomial_flag
    rep.checks["symmetric"] = res.value.swap() == res.value
    rep.checks["even"] = res.value.substitute((-1, (1, 0)), (-1, (0, 1))) == res.value
    if res.notes:
        rep["notes"] = res.notes


def cmd_epoly(args, rep: Report):
    from .kernel import check_curious, dim_mu, epoly_routes, hmu
    kq = _kernel_query(args)
    routes = rep.timed("epoly", epoly_routes, kq)
    e = routes["z=u"]
    d = dim_mu(kq) if kq.sizes_agree() else 0
    rep["d_mu"] = d
    rep["H"] = _ratfun_text(hmu(kq).value, args.format == "latex")
    rep["E"] = _poly_text(e, args.format == "latex")
    rep.checks["orientations_agree"] = routes["z=1/u"] == e
    rep.checks["character_sum_route"] = routes["character_sum"] == e
    rep.checks["principal_specialisation_route"] = routes["principal"] == e
    rep.checks["palindromic"] = check_curious(e, d)


def cmd_apoly(args, rep: Report):
    from .kernel import apoly, dim_mu, multiplicity_poly
    kq = _kernel_query(args)
    res = rep.timed("apoly", apoly, kq)
    mult = rep.timed("multiplicity", multiplicity_poly, kq)
    rep["d_mu"] = dim_mu(kq) if kq.sizes_agree() else 0
    rep["A"] = _poly_text(res.value, args.format == "latex")
    rep["quiver_interpretation"] = res.quiver_interpretation
    rep.checks["multiplicity_route"] = mult == res.value
    rep.checks["nonnegative"] = all(c >= 0 for c in res.value.terms.values())


def cmd_mhp(args, rep: Report):
    from .kernel import apoly, check_curious_mhp, dim_mu, epoly, mhp_candidate, mhp_pure_part
    kq = _kernel_query(args)
    h = rep.timed("mhp", mhp_candidate, kq)
    rep["d_mu"] = dim_mu(kq) if kq.sizes_agree() else 0
    rep["MHP"] = _poly_text(h, args.format == "latex")
    pure = mhp_pure_part(h)
    rep["pure_part"] = _poly_text(pure, args.format == "latex")
    if kq.sizes_agree():
        d = dim_mu(kq)
        rep.checks["pure_part_is_shifted_A"] = pure == apoly(kq).value.shift(d // 2)
        rep.checks["t=-1_gives_E"] = h.set_second(-1) == epoly(kq)
        rep.checks["curious_duality"] = check_curious_mhp(h, d)


def cmd_euler(args, rep: Report):
    from .kernel import euler_from_epoly, euler_tilde
    kq = _kernel_query(args)
    closed = rep.timed("closed_form", euler_tilde, kq)
    limit = rep.timed("limit", euler_from_epoly, kq)
    rep["euler"] = _frac_text(closed)
    rep.checks["limit_of_E_agrees"] = limit == closed


def cmd_count(args, rep: Report):
    from .fforacle.counting import count_char_points, count_quiver_points
    from .fforacle.fields import is_prime, pgl_order
    from .fforacle.generic import find_generic_add, find_generic_mult
    from .fforacle.matrices import ConjClassFq
    from .kernel import apoly, dim_mu, epoly
    kq = _kernel_query(args)
    if args.q is None or not is_prime(args.q):
        raise UsageError("--q must be a prime")
    if not kq.sizes_agree():
        raise UsageError("all partitions in --mu must have the same size")
    q, n = args.q, kq.n
    additive = args.add
    if additive:
        assignment = find_generic_add(kq.mu, q)
    else:
        assignment = find_generic_mult(kq.mu, q)
    classes = [ConjClassFq.semisimple(a, q, additive=additive) for a in assignment]
    counter = count_quiver_points if additive else count_char_points
    count = rep.timed("count", counter, kq.g, classes, budget=args.budget, threads=args.threads)
    pgl = pgl_order(n, q)
    d = dim_mu(kq)
    per = Fraction(count, pgl)
    rep["side"] = "additive" if additive else "multiplicative"
    rep["d_mu"] = d
    rep["eigenvalues"] = [[[v, m] for v, m in a] for a in assignment]
    rep["count"] = count
    rep["per_pgl"] = _frac_text(per)
    if additive:
        a = apoly(kq).value
        rep["A"] = _poly_text(a, args.format == "latex")
        rep.checks["matches_q^(d/2)A(q)"] = per == q ** (d // 2) * a.evaluate(q)
    else:
        e = epoly(kq)
        rep["E"] = _poly_text(e, args.format == "latex")
        rep.checks["matches_E(q)"] = per == e.evaluate(q)
    rep.checks["divisible_by_pgl"] = count % pgl == 0


def _cyclo_text(c) -> str:
    if c.is_rational():
        return _frac_text(c.rational())
    return str(c.poly).replace("x", "zeta")


def cmd_chartab(args, rep: Report):
    from .fforacle.fields import is_prime
    from .fforacle.gl2 import gl2_char_table
    if args.q is None or not is_prime(args.q) or args.q == 2:
        raise UsageError("--q must be an odd prime")
    table = rep.timed("table", gl2_char_table, args.q)
    rep.payload["query"] = {"q": args.q}
    rep["zeta_order"] = table.N
    rep["classes"] = [{"label": list(c), "size": table.class_size(c)} for c in table.classes]
    rep["characters"] = [
        {"label": list(chi), "degree": table.degree(chi),
         "values": [_cyclo_text(table.value(chi, c)) for c in table.classes]}
        for chi in table.characters]
    rep.checks["orthogonality"] = table.check_orthogonality()
    rep.checks["column_orthogonality"] = table.check_columns()
    rep.checks["sum_of_squares"] = table.sum_of_squares() == table.group_order
    rep.checks["class_count"] = len(table.classes) == args.q ** 2 - 1


def _emit(report: dict, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
        return
    for key, value in report.items():
        if key in ("schema", "command"):
            continue
        if key == "checks":
            for name, ok in value.items():
                out.write(f"check {name}: {'ok' if ok else 'FAILED'}\n")
        elif key == "timings":
            for name, secs in value.items():
                out.write(f"time {name}: {secs}s\n")
        elif key == "query":
            out.write("query: " + ", ".join(f"{k}={v}" for k, v in value.items()) + "\n")
        elif key in ("classes", "characters"):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + json.dumps(row) + "\n")
        else:
            out.write(f"{key}: {value}\n")


def cmd_verify(args, out) -> int:
    from .verify import run_suite
    results = run_suite(args.suite, threads=args.threads, only=args.only)
    failed = 0
    for r in results:
        out.write(r.line() + "\n")
        out.flush()
        failed += not r.ok
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


COMMANDS = {
    "hmu": cmd_hmu, "epoly": cmd_epoly, "apoly": cmd_apoly, "mhp": cmd_mhp,
    "euler": cmd_euler, "count": cmd_count, "chartab": cmd_chartab,
}


def _mu_arg(text: str):
    try:
        return parse_multipartition(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charvar", description="Character variety and quiver variety invariants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--threads", type=int, default=None, help="bound on worker threads")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("hmu", "epoly", "apoly", "mhp", "euler", "count"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--mu", type=_mu_arg, required=True, help='multipartition, e.g. "1,1;2;2"')
        if name == "count":
            side = p.add_mutually_exclusive_group(required=True)
            side.add_argument("--mult", action="store_true", help="character variety equation")
            side.add_argument("--add", action="store_true", help="quiver variety equation")
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--budget", type=int, default=10 ** 8)
    p = sub.add_parser("chartab", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", choices=("small",), default="small")
    p.add_argument("--only", type=int, nargs="*", default=None, help="run only these check numbers")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    if getattr(args, "genus", 0) is not None and getattr(args, "genus", 0) < 0:
        parser.error("--genus must be non-negative")
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        rep = Report(args.command, _query(args) if args.command != "chartab" else {"q": args.q},
                     args.timings)
        COMMANDS[args.command](args, rep)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"charvar: error: {exc}", file=sys.stderr)
        return 2
    except CharvarError as exc:
        print(f"charvar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(rep.finish(), args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

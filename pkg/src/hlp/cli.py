"""
Command line front end.

    hlp expand --n 3 --lambda 2,1,0 --route all
    hlp psi --n 3 --lambda 3,2,0
    hlp bigpsi --n 3 --lambda 2,1,0 --tableau 1,3/2
    hlp verify --n 4 --max-weight 6
    hlp hasse --ell 3 --n 5

Exit status is 2 for usage errors, 1 when ``verify`` finds a failure and 0
otherwise.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator, Sequence, TextIO

from .affine import AffineElement, one0_xlambda
from .hall_littlewood import ROUTES, HLExpansion, p_route, specialization_check
from .laurent import LaurentPoly
from .perm import EnumerationTooLarge, check_enumeration_size
from .psi import (
    bigpsi_def,
    bigpsi_rec,
    psi_box,
    psi_klostermann,
    psi_macdonald,
    tilde_psi,
    tilde_psi_rec,
)
from .tableaux import Filling, enumerate_fillings, enumerate_ssyt, hasse_dot

__all__ = ["main", "build_parser", "partitions"]


class UsageError(Exception):
    pass


# -- argument parsing ------------------------------------------------------------


def _parse_lambda(text: str, n: int) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"lambda must be a comma-separated list of integers, got {text!r}")
    if any(x < 0 for x in parts):
        raise UsageError("lambda must have nonnegative parts")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise UsageError("lambda must be weakly decreasing")
    while parts and parts[-1] == 0 and len(parts) > n:
        parts = parts[:-1]
    if len(parts) > n:
        raise UsageError(f"lambda has more than n={n} parts")
    return parts + (0,) * (n - len(parts))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hlp", description="Hall-Littlewood polynomials via the affine Hecke algebra")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="monomial expansion of P_lambda(t)")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--lambda", dest="lam", required=True)
    e.add_argument("--route", choices=["macdonald", "hecke", "psi-lift", "all"], default="macdonald")
    e.add_argument("--format", choices=["text", "json", "latex"], default="text")

    s = sub.add_parser("psi", help="table of psi_T over B(lambda)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--format", choices=["text", "json", "latex"], default="text")

    b = sub.add_parser("bigpsi", help="Psi_T as Hecke algebra elements")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--lambda", dest="lam", required=True)
    b.add_argument("--tableau", help="row syntax, e.g. 1,1/3")
    b.add_argument("--method", choices=["def", "rec"], default="def")
    b.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("--n", type=int, default=4, help="largest rank to check")
    v.add_argument("--max-weight", type=int, default=6)

    h = sub.add_parser("hasse", help="DOT digraph of the column poset B(varpi_ell)")
    h.add_argument("--ell", type=int, required=True)
    h.add_argument("--n", type=int, required=True)
    return p


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError("n must be positive")
    try:
        check_enumeration_size(n)
    except EnumerationTooLarge as exc:
        raise UsageError(str(exc))


# -- rendering --------------------------------------------------------------------


def monomial_text(mu: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(mu, 1):
        if e == 1:
            factors.append(f"X{i}")
        elif e:
            factors.append(f"X{i}^{e}")
    return "*".join(factors) or "1"


def monomial_latex(mu: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(mu, 1):
        if e == 1:
            factors.append(f"X_{i}")
        elif e:
            factors.append(f"X_{i}^{{{e}}}")
    return "".join(factors) or "1"


def _latex_poly(c: LaurentPoly) -> str:
    out = []
    for e, k in c.items():
        mag = abs(k)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{{{e}}}"
            body = var if mag == 1 else f"{mag}{var}"
        if not out:
            out.append(body if k > 0 else "-" + body)
        else:
            out.append(("+" if k > 0 else "-") + body)
    return "".join(out) or "0"


def _expansion_text(P: HLExpansion) -> str:
    lines = [f"P_{P.shape}(t), n={P.n}, route={P.route}"]
    for mu, c in P.poly.sorted_items():
        lines.append(f"  {monomial_text(mu)} : {c}")
    return "\n".join(lines)


def _expansion_latex(P: HLExpansion) -> str:
    terms = []
    for mu, c in P.poly.sorted_items():
        coef = "" if c == 1 else f"({_latex_poly(c)})"
        terms.append(coef + monomial_latex(mu))
    shape = ",".join(map(str, P.shape))
    return f"P_{{({shape})}}(t) = " + " + ".join(terms)


# -- subcommands -------------------------------------------------------------------


def cmd_expand(args, out: TextIO) -> int:
    _check_n(args.n)
    lam = _parse_lambda(args.lam, args.n)
    routes = list(ROUTES) if args.route == "all" else [args.route.replace("-", "_")]
    results = [p_route(lam, args.n, r) for r in routes]
    agree = all(r.poly == results[0].poly for r in results)
    checks = [("monic", results[0].is_monic())]
    if len(results) > 1:
        checks.append(("routes agree", agree))
    if args.format == "json":
        data = [r.to_json(checks) for r in results]
        json.dump(data if len(data) > 1 else data[0], out, indent=2)
        out.write("\n")
    elif args.format == "latex":
        out.write(_expansion_latex(results[0]) + "\n")
        if len(results) > 1:
            out.write(f"% routes {', '.join(routes)}: {'agree' if agree else 'DISAGREE'}\n")
    else:
        if len(results) > 1:
            out.write(f"routes {', '.join(routes)}: {'agree' if agree else 'DISAGREE'}\n")
            shown = results if not agree else results[:1]
        else:
            shown = results
        for r in shown:
            out.write(_expansion_text(r) + "\n")
    return 0 if agree else 1


def cmd_psi(args, out: TextIO) -> int:
    _check_n(args.n)
    lam = _parse_lambda(args.lam, args.n)
    rows = [(T, psi_macdonald(T)) for T in enumerate_ssyt(lam, args.n)]
    if args.format == "json":
        json.dump([{"tableau": T.to_json(), "weight": list(T.weight()), "psi": c.to_json()} for T, c in rows], out, indent=2)
        out.write("\n")
    elif args.format == "latex":
        for T, c in rows:
            out.write(f"\\psi_{{\\ytableaushort{{{T.ytableau()}}}}} = {_latex_poly(c)} \\\\\n")
    else:
        width = max((len(str(T)) for T, _ in rows), default=0)
        for T, c in rows:
            out.write(f"{str(T).ljust(width)}  {c}\n")
    return 0


def cmd_bigpsi(args, out: TextIO) -> int:
    _check_n(args.n)
    lam = _parse_lambda(args.lam, args.n)
    if args.tableau:
        try:
            T = Filling.parse(args.tableau, args.n)
        except ValueError as exc:
            raise UsageError(f"bad tableau {args.tableau!r}: {exc}")
        if T.shape != lam:
            raise UsageError(f"tableau {T} does not have shape {lam}")
        tableaux = [T]
    else:
        tableaux = enumerate_ssyt(lam, args.n)
    compute = bigpsi_def if args.method == "def" else bigpsi_rec
    rows = [(T, compute(T)) for T in tableaux]
    if args.format == "json":
        json.dump([{"tableau": T.to_json(), "bigpsi": h.to_json()} for T, h in rows], out, indent=2)
        out.write("\n")
    else:
        width = max((len(str(T)) for T, _ in rows), default=0)
        for T, h in rows:
            out.write(f"{str(T).ljust(width)}  {h}\n")
    return 0


def partitions(n: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most n parts and size <= max_weight, padded to length n."""

    def gen(remaining, cap, k):
        if k == 0:
            yield ()
            return
        for first in range(min(cap, remaining), -1, -1):
            for rest in gen(remaining - first, first, k - 1):
                yield (first,) + rest

    for w in range(max_weight + 1):
        for lam in gen(w, w, n):
            if sum(lam) == w:
                yield lam


def verification_checks(n_max: int, max_weight: int) -> Iterator[tuple[str, Callable[[], bool]]]:
    for n in range(1, n_max + 1):
        for lam in partitions(n, max_weight):
            tag = f"n={n} lambda={lam}"

            def theorem(lam=lam, n=n):
                rhs = AffineElement.zero(n)
                for T in enumerate_ssyt(lam, n):
                    rhs = rhs + AffineElement(n, {T.weight(): bigpsi_def(T)})
                return one0_xlambda(lam, n) == rhs

            def psi_formulas(lam=lam, n=n):
                for T in enumerate_ssyt(lam, n):
                    p = psi_macdonald(T)
                    q = tilde_psi(T)
                    if not (p == psi_box(T) == psi_klostermann(T) == q == tilde_psi_rec(T)):
                        return False
                    if not q.is_polynomial():
                        return False
                return True

            def routes(lam=lam, n=n):
                polys = [p_route(lam, n, r) for r in ROUTES]
                return all(p.poly == polys[0].poly for p in polys) and polys[0].is_monic() and polys[0].poly.is_symmetric()

            def special(lam=lam, n=n):
                return specialization_check(lam, n).ok

            def recursion(lam=lam, n=n):
                for T in enumerate_fillings(lam, n):
                    d = bigpsi_def(T)
                    if d != bigpsi_rec(T) or (not d) == T.is_semistandard():
                        return False
                return True

            yield f"{tag}: 1_0 X^lambda = sum X^T Psi_T", theorem
            yield f"{tag}: psi formulas agree", psi_formulas
            yield f"{tag}: three routes agree", routes
            yield f"{tag}: specializations", special
            yield f"{tag}: Psi definition = recursion", recursion


def cmd_verify(args, out: TextIO) -> int:
    _check_n(args.n)
    if args.max_weight < 0:
        raise UsageError("max-weight must be nonnegative")
    failures = 0
    total = 0
    for name, check in verification_checks(args.n, args.max_weight):
        total += 1
        try:
            ok = check()
        except Exception as exc:  # a raised NotDivisible is a failed check
            ok = False
            print(f"  {name}: {type(exc).__name__}: {exc}", file=sys.stderr)
        failures += not ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
    out.write(f"{total - failures}/{total} checks passed\n")
    return 1 if failures else 0


def cmd_hasse(args, out: TextIO) -> int:
    if not 1 <= args.ell <= args.n:
        raise UsageError(f"ell must lie in [1, n], got ell={args.ell}, n={args.n}")
    out.write(hasse_dot(args.ell, args.n))
    return 0


COMMANDS = {
    "expand": cmd_expand,
    "psi": cmd_psi,
    "bigpsi": cmd_bigpsi,
    "verify": cmd_verify,
    "hasse": cmd_hasse,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    out = out or sys.stdout
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

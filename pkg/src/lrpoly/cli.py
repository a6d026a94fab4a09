"""Command-line interface: coefficient queries and verification suites.

Subcommands: lr, pieri, schur, kostka, classical, verify, verify-involutions.
Partitions are comma-separated positive integers; the empty string is the
empty partition.  Exit codes: 0 success, 2 usage or unsupported input,
3 verification mismatch.  Output is deterministic for fixed flags; the
LRPOLY_THREADS environment variable caps verification parallelism.
"""

import argparse
import json
import os
import sys
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor

from .apoly import APoly
from .shapes import (
    iv,
    size,
    pad,
    contains,
    is_partition,
    is_horizontal_strip,
    apply_rbar,
    lambda_omega,
    all_permutations,
    partitions_of,
    partitions_up_to,
)
from .formal_ring import SignedHSum, h_word, staircase, jacobi_trudi, formal_pieri_terms
from .stable_ring import pieri_stable
from .tableaux import enumerate_k_tableaux, tableau_weight, row_word, apply_word
from .lr import pieri_tableau, kostka, c_theorem, c_corollary, c_alternating
from .double_sym import double_schur_n, c_oracle, classical_lr
from .involutions import (
    classify_bad,
    psi,
    monomial_involution,
    monomial_weight,
    pieri_bad_pair,
    derived_monomial_tableaux,
)


def _partition(text):
    """Parse a comma-separated partition; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    if any(p < 1 for p in parts) or not is_partition(parts):
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    return parts


def _int_vector(text):
    """Parse a comma-separated integer vector (kostka first-index labels)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}")


def _emit(value, fmt):
    if fmt == "json":
        payload = value.to_json() if hasattr(value, "to_json") else value
        print(json.dumps(payload, sort_keys=True))
    else:
        print(value)


def _max_workers():
    try:
        return max(1, int(os.environ.get("LRPOLY_THREADS", "1")))
    except ValueError:
        return 1


def _run_cases(cases):
    """Run (label, fn) pairs, in parallel if allowed; report in given order.

    Each fn returns None on success or a failure message.  Returns the list
    of (label, failure-or-None) in the canonical input order.
    """
    workers = _max_workers()
    if workers == 1:
        return [(label, fn()) for label, fn in cases]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [(label, pool.submit(fn)) for label, fn in cases]
        return [(label, f.result()) for label, f in futures]


def cmd_lr(args):
    lam, mu, nu = args.lam, args.mu, args.nu
    methods = {
        "theorem": lambda: c_theorem(lam, mu, nu),
        "corollary": lambda: c_corollary(lam, mu, nu),
        "alternating": lambda: c_alternating(lam, mu, nu),
        "oracle": lambda: c_oracle(lam, mu, nu),
    }
    if args.method != "all":
        _emit(methods[args.method](), args.format)
        return 0
    values = {name: fn() for name, fn in methods.items()}
    for name in ("theorem", "corollary", "alternating", "oracle"):
        prefix = f"{name}: "
        if args.format == "json":
            print(prefix + json.dumps(values[name].to_json(), sort_keys=True))
        else:
            print(prefix + str(values[name]))
    first = values["theorem"]
    if any((v - first) for v in values.values()):
        print("mismatch between methods", file=sys.stderr)
        return 3
    return 0


def cmd_pieri(args):
    if args.method == "stable":
        result = pieri_stable(args.p, args.e, args.mu)
    else:
        result = pieri_tableau(args.p, args.e, args.mu)
    _emit(result, args.format)
    return 0


def cmd_schur(args):
    _emit(double_schur_n(args.lam, args.n), args.format)
    return 0


def cmd_kostka(args):
    if args.method != "both":
        _emit(kostka(args.kappa, args.mu, args.nu, method=args.method), args.format)
        return 0
    rec = kostka(args.kappa, args.mu, args.nu, method="recursion")
    tab = kostka(args.kappa, args.mu, args.nu, method="tableaux")
    for name, value in (("recursion", rec), ("tableaux", tab)):
        if args.format == "json":
            print(f"{name}: " + json.dumps(value.to_json(), sort_keys=True))
        else:
            print(f"{name}: {value}")
    if rec - tab:
        print("mismatch between methods", file=sys.stderr)
        return 3
    return 0


def cmd_classical(args):
    print(classical_lr(args.lam, args.mu, args.nu))
    return 0


def _suite_ring(w):
    """Free-ring Pieri identity: h_{p,e} * JT(mu) = sum of shifted JTs."""
    cases = []
    for mu in partitions_up_to(w, max_len=3):
        l = len(mu)
        for p in range(1, min(3, w) + 1):
            for e in range(0, 4):

                def check(mu=mu, l=l, p=p, e=e):
                    lhs = SignedHSum.word([(p, e)]) * jacobi_trudi(mu, l=l)
                    rhs = SignedHSum.zero()
                    for m2, b2 in formal_pieri_terms(p, e, mu, staircase(l)):
                        rhs = rhs + jacobi_trudi(m2, b2)
                    if not (lhs - rhs).is_zero():
                        return f"mu={mu} p={p} e={e}"
                    return None

                cases.append((f"ring mu={mu} p={p} e={e}", check))
    return cases


def _suite_pieri(w):
    """Stable vs tableau Pieri agreement and horizontal-strip support."""
    cases = []
    for mu in partitions_up_to(w):
        for p in range(1, min(3, w) + 1):
            for e in range(0, len(mu) + 1):

                def check(mu=mu, p=p, e=e):
                    stable = pieri_stable(p, e, mu)
                    for nu in stable.terms:
                        if not is_horizontal_strip(nu, mu):
                            return f"mu={mu} p={p} e={e}: support at non-strip {nu}"
                    if e < len(mu):
                        tab = pieri_tableau(p, e, mu)
                        if stable - tab:
                            return f"mu={mu} p={p} e={e}: stable != tableau"
                    return None

                cases.append((f"pieri mu={mu} p={p} e={e}", check))
    return cases


def _suite_lr(w):
    """Three-way LR agreement, homogeneity, and classical specialization."""
    cases = []
    for lam in partitions_up_to(w):
        if not lam:
            continue
        for mu in partitions_up_to(w):

            def check(lam=lam, mu=mu):
                for extra in range(size(lam) + 1):
                    for nu in partitions_of(size(mu) + extra):
                        if not contains(nu, mu):
                            if c_theorem(lam, mu, nu):
                                return f"{lam}x{mu}->{nu}: nonzero without containment"
                            continue
                        ct = c_theorem(lam, mu, nu)
                        if ct - c_corollary(lam, mu, nu):
                            return f"{lam}x{mu}->{nu}: theorem != corollary"
                        if ct - c_alternating(lam, mu, nu):
                            return f"{lam}x{mu}->{nu}: theorem != alternating"
                        if ct and not ct.is_homogeneous(
                            size(lam) + size(mu) - size(nu)
                        ):
                            return f"{lam}x{mu}->{nu}: not homogeneous"
                        if ct.at_zero() != classical_lr(lam, mu, nu):
                            return f"{lam}x{mu}->{nu}: classical mismatch"
                return None

            cases.append((f"lr {lam}x{mu}", check))
    return cases


def _psi_report(lam, mu, nu, cap):
    """Check psi on all bad stacked tableaux for one (lam, mu, nu) cell.

    Returns (failure-or-None, {(kappa, row): aggregate bad weight}).
    """
    groups = defaultdict(APoly.zero)
    shapes = set()
    for omega in all_permutations(len(lam)):
        kappa, _ = lambda_omega(lam, omega)
        if all(k >= 0 for k in kappa):
            shapes.add(tuple(kappa))
    for kappa in sorted(shapes):
        for T in enumerate_k_tableaux(kappa, mu, nu, cap=cap):
            cell = classify_bad(T, mu, nu)
            if cell is None:
                continue
            Tt = psi(T, mu, nu)
            expected_shape = tuple(apply_rbar(cell.row, cell.row + 1, kappa))
            if Tt.shape != expected_shape or not Tt.is_valid():
                return f"psi broke shape on:\n{T.to_text()}", groups
            word, yam = apply_word(mu, row_word(Tt))
            if not yam or tuple(word) != tuple(iv(nu)):
                return f"psi broke the row word on:\n{T.to_text()}", groups
            if psi(Tt, mu, nu) != T:
                return f"psi not an involution on:\n{T.to_text()}", groups
            groups[(kappa, cell.row)] += tableau_weight(T, mu, "row")
    for (kappa, i), w in groups.items():
        partner = tuple(apply_rbar(i, i + 1, kappa))
        if w - groups.get((partner, i), APoly.zero()):
            return f"aggregate mismatch kappa={kappa} row={i}", groups
    return None, groups


def _suite_involutions(w, collect=None):
    """psi involution/aggregate checks plus the monomial-level involutions."""
    cases = []
    lams = [l for l in partitions_up_to(min(w, 3)) if l and len(l) <= 2]
    mus = partitions_up_to(min(w, 3))
    for lam in lams:
        for mu in mus:

            def check(lam=lam, mu=mu):
                for extra in range(size(lam) + 1):
                    for nu in partitions_of(size(mu) + extra):
                        if not contains(nu, mu):
                            continue
                        fail, groups = _psi_report(lam, mu, nu, cap=5)
                        if collect is not None:
                            collect.append((lam, mu, nu, groups))
                        if fail:
                            return f"{lam}x{mu}->{nu}: {fail}"
                return None

            cases.append((f"psi {lam}x{mu}", check))

    def check_monomial():
        for mu in partitions_up_to(3):
            if not mu:
                continue
            for p in range(1, 3):
                for e in range(0, len(mu)):
                    for extra in range(p + 1):
                        for nu in partitions_of(size(mu) + extra, max_len=len(mu) + 1):
                            if not contains(nu, mu):
                                continue
                            for U in derived_monomial_tableaux(
                                p, e, mu, nu, vmax=len(mu) + 2
                            ):
                                try:
                                    Ut = monomial_involution(U, mu)
                                except ValueError:
                                    continue
                                if monomial_weight(U, mu) + monomial_weight(Ut, mu):
                                    return f"sign not reversed on {U.to_text()!r}"
                                if monomial_involution(Ut, mu) != U:
                                    return f"not an involution on {U.to_text()!r}"
        return None

    cases.append(("monomial involution", check_monomial))

    def check_bad_pair():
        for mu in partitions_up_to(3):
            if not mu:
                continue
            for p in range(1, 3):
                for e in range(0, len(mu)):
                    ln = len(mu) + 1
                    for nu in _bad_compositions(mu, p):
                        for U in derived_monomial_tableaux(p, e, mu, nu, vmax=ln):
                            Ut = pieri_bad_pair(U, mu)
                            if monomial_weight(U, mu) - monomial_weight(Ut, mu):
                                return f"weight not preserved on {U.to_text()!r}"
        return None

    cases.append(("pieri bad pair", check_bad_pair))
    return cases


def _bad_compositions(mu, p):
    """Compositions nu >= mu with 0 < |nu - mu| <= p that are not horizontal strips."""
    mu = iv(mu)
    ln = len(mu) + 1
    mup = pad(mu, ln)
    out = []

    def rec(prefix, rest):
        if len(prefix) == ln:
            if rest == 0:
                nu = tuple(mup[k] + prefix[k] for k in range(ln))
                while nu and nu[-1] == 0:
                    nu = nu[:-1]
                if not is_horizontal_strip(nu, mu):
                    out.append(nu)
            return
        for k in range(rest + 1):
            rec(prefix + [k], rest - k)

    for total in range(1, p + 1):
        rec([], total)
    return out


_SUITES = {
    "ring": _suite_ring,
    "pieri": _suite_pieri,
    "lr": _suite_lr,
    "involutions": _suite_involutions,
}


def cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    total = 0
    for name in names:
        cases = _SUITES[name](args.max_weight)
        results = _run_cases(cases)
        bad = [(label, msg) for label, msg in results if msg]
        total += len(results)
        failed += len(bad)
        status = "PASS" if not bad else "FAIL"
        print(f"{name}: {status} ({len(results) - len(bad)}/{len(results)} cases)")
        for label, msg in bad:
            print(f"  FAIL {label}: {msg}")
    print(f"total: {total - failed}/{total} passed")
    return 3 if failed else 0


def cmd_verify_involutions(args):
    collected = []
    cases = _suite_involutions(args.max_weight, collect=collected)
    results = _run_cases(cases)
    for lam, mu, nu, groups in collected:
        for (kappa, i), w in sorted(groups.items()):
            print(f"lam={list(lam)} mu={list(mu)} nu={list(nu)} "
                  f"kappa={list(kappa)} row={i}: {w}")
    bad = [(label, msg) for label, msg in results if msg]
    for label, msg in bad:
        print(f"FAIL {label}: {msg}")
    print("PASS" if not bad else "FAIL")
    return 3 if bad else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lrpoly",
        description="Littlewood-Richardson polynomials of double Schur functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("pretty", "json"), default="pretty")

    p = sub.add_parser("lr", help="structure coefficient of s_nu in s_lam * s_mu")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument(
        "--method",
        choices=("theorem", "corollary", "alternating", "oracle", "all"),
        default="theorem",
    )
    add_format(p)
    p.set_defaults(fn=cmd_lr)

    p = sub.add_parser("pieri", help="expansion of h_{p,e} * s_mu")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--method", choices=("stable", "tableau"), default="stable")
    add_format(p)
    p.set_defaults(fn=cmd_pieri)

    p = sub.add_parser("schur", help="double Schur polynomial in n variables")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("kostka", help="coefficient of s_nu in h_{kappa,1} * s_mu")
    p.add_argument("--kappa", type=_int_vector, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--method", choices=("recursion", "tableaux", "both"),
                   default="recursion")
    add_format(p)
    p.set_defaults(fn=cmd_kostka)

    p = sub.add_parser("classical", help="classical Littlewood-Richardson number")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.set_defaults(fn=cmd_classical)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("ring", "pieri", "lr", "involutions", "all"),
                   default="all")
    p.add_argument("--max-weight", type=int, default=3)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("verify-involutions",
                       help="involution suite with per-shape aggregate sums")
    p.add_argument("--max-weight", type=int, default=3)
    p.set_defaults(fn=cmd_verify_involutions)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: generation, verification and export workflows.

Subcommands
-----------
basis        print the highest-weight basis labels and expansions
matrix       representation matrix of a braid word (JSON or text)
check        run one of the structural check suites, exit 0/1
irreducible  commutant dimension at an exact rational point
decompose    highest-weight components of a pure tensor
burau        Burau generator matrices (reduced or unreduced)
lkb-matrix   LKB generator matrices over Z[t, Q]
twist        scalar of the central full twist

Exit codes: 0 = success / all checks pass, 1 = a mathematical check failed,
2 = usage or validation error.  Output is deterministic: fixed orderings
everywhere and randomness only through an explicit --seed.  The worker pool
for independent check items is capped by the BRAIDREP_THREADS environment
variable (default 1, purely sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import braid as braid_mod
from . import decomp as decomp_mod
from . import hwspace as hw_mod
from . import lkb as lkb_mod
from .report import all_passed
from .verma import TensorVec


class UsageError(Exception):
    pass


def _pool_map(fn, items):
    """Run independent check items, merging results in input order."""
    workers = int(os.environ.get("BRAIDREP_THREADS", "1") or "1")
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit(args, payload, text_renderer):
    out = text_renderer() if args.format == "text" else json.dumps(payload)
    stream = open(args.output, "w") if args.output else sys.stdout
    try:
        stream.write(out + "\n")
    finally:
        if args.output:
            stream.close()


def _require(cond, message):
    if not cond:
        raise UsageError(message)


def _parse_rational(text, flag):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("%s expects a rational number, got %r" % (flag, text))


def _matrix_text(rows, labels):
    width = max([len(l) for l in labels] + [1])
    lines = ["  ".join(l.ljust(width) for l in labels)]
    for row in rows:
        lines.append("  ".join(str(x) for x in row))
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------


def cmd_basis(args):
    _require(args.n >= 2, "basis requires --n >= 2")
    _require(args.l >= 0, "basis requires --l >= 0")
    basis = hw_mod.hw_basis(args.n, args.l)
    payload = {
        "n": args.n,
        "l": args.l,
        "labels": [hw_mod.label_str(el.label) for el in basis],
        "vectors": [el.vector.to_json() for el in basis],
    }

    def text():
        return "\n".join("%s = %s" % (hw_mod.label_str(el.label), el.vector)
                         for el in basis)

    _emit(args, payload, text)
    return 0


def cmd_matrix(args):
    _require(args.n >= 2, "matrix requires --n >= 2")
    _require(args.l >= 0, "matrix requires --l >= 0")
    try:
        word = braid_mod.BraidWord.parse(args.n, args.word)
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = hw_mod.rho_matrix(args.n, args.l, word)
    payload = rep.to_json()

    def text():
        return _matrix_text(rep.entries, [hw_mod.label_str(l) for l in rep.basis])

    _emit(args, payload, text)
    return 0


_SUITES = ("braid", "yangbaxter", "equivariance", "phi", "lkb", "burau",
           "splitting", "eigen", "twist")


def _run_suite(suite, n, l, perturb):
    if suite == "braid":
        return braid_mod.check_braid_relations(n, l, perturb=perturb)
    if suite == "yangbaxter":
        return braid_mod.check_yang_baxter(l, perturb=perturb)
    if suite == "equivariance":
        return braid_mod.check_equivariance(n, l)
    if suite == "phi":
        reports = hw_mod.check_phi(n, l)
        reports += hw_mod.check_wmax(n, l)
        if l == 2:
            reports += hw_mod.check_sigma_w(n)
        return reports
    if suite == "lkb":
        reports = lkb_mod.fork_iso_check(n)
        reports += lkb_mod.check_lkb_braid_relations(n)
        return reports
    if suite == "burau":
        return lkb_mod.check_burau(n)
    if suite == "splitting":
        return decomp_mod.check_splitting(n, l)
    if suite == "eigen":
        return decomp_mod.ef1_eigencheck(n, l)
    if suite == "twist":
        scalar = decomp_mod.full_twist_scalar(n, l)
        from .report import CheckReport
        return [CheckReport("full-twist-scalar", {"n": n, "l": l},
                            True, str(scalar))]
    raise UsageError("unknown suite %r" % suite)


def cmd_check(args):
    _require(args.suite in _SUITES,
             "unknown suite %r (choose from %s)" % (args.suite, ", ".join(_SUITES)))
    _require(args.n >= 2, "check requires --n >= 2")
    _require(args.l >= 0, "check requires --l >= 0")
    items = [(args.suite, args.n, args.l, args.perturb)]
    reports = []
    for chunk in _pool_map(lambda it: _run_suite(*it), items):
        reports.extend(chunk)
    payload = [r.to_json() for r in reports]

    def text():
        return "\n".join("%-28s %-30s %s" % (
            r.check, json.dumps(r.params), "pass" if r.passed else "FAIL")
            for r in reports)

    _emit(args, payload, text)
    return 0 if all_passed(reports) else 1


def cmd_irreducible(args):
    _require(args.n >= 2, "irreducible requires --n >= 2")
    _require(args.l >= 0, "irreducible requires --l >= 0")
    if (args.q0 is None) != (args.s0 is None):
        raise UsageError("provide both --q0 and --s0, or neither")
    if args.q0 is None:
        q0, s0 = decomp_mod.random_specialization(args.n, args.l, seed=args.seed)
    else:
        q0 = _parse_rational(args.q0, "--q0")
        s0 = _parse_rational(args.s0, "--s0")
    try:
        dim = decomp_mod.commutant_dimension(args.n, args.l, q0, s0,
                                             seed=args.seed)
    except decomp_mod.GuardedSpecializationError as exc:
        raise UsageError("specialization rejected: guard factor %s vanishes"
                         % exc.factor_name)
    certified = dim == 1
    payload = {
        "check": "irreducible",
        "params": {"n": args.n, "l": args.l, "q0": str(q0), "s0": str(s0)},
        "pass": certified,
        "witness": {"commutant_dimension": dim,
                    "verdict": "irreducible over Q(q,s): certified"
                               if certified else "commutant has dimension > 1"},
    }

    def text():
        return "commutant dimension at (q0=%s, s0=%s): %d -> %s" % (
            q0, s0, dim, payload["witness"]["verdict"])

    _emit(args, payload, text)
    return 0 if certified else 1


def cmd_decompose(args):
    _require(args.n >= 2, "decompose requires --n >= 2")
    try:
        idx = tuple(int(tok) for tok in args.idx.replace(",", " ").split())
    except ValueError:
        raise UsageError("--idx expects integers like '1,0,2'")
    _require(len(idx) == args.n, "--idx must list exactly n entries")
    _require(all(a >= 0 for a in idx), "--idx entries must be >= 0")
    dec = decomp_mod.decompose(TensorVec.pure(idx))
    payload = dec.to_json()

    def text():
        lines = []
        for t, comp in enumerate(dec.components):
            lines.append("F^(%d) component: %s" % (t, comp))
        return "\n".join(lines)

    _emit(args, payload, text)
    return 0


def cmd_burau(args):
    _require(args.n >= 2, "burau requires --n >= 2")
    mats = lkb_mod.burau_matrices(args.n, reduced=not args.unreduced)
    size = args.n - 1 if not args.unreduced else args.n
    labels = ["u%d" % j for j in range(1, args.n)] if not args.unreduced \
        else ["d%d" % j for j in range(1, args.n + 1)]
    payload = [{"generator": i + 1,
                "basis": labels,
                "rows": [[x.to_json() for x in row] for row in mat]}
               for i, mat in enumerate(mats)]

    def text():
        blocks = []
        for i, mat in enumerate(mats):
            blocks.append("sigma_%d:\n%s" % (i + 1, _matrix_text(mat, labels)))
        return "\n\n".join(blocks)

    assert all(len(m) == size for m in mats)
    _emit(args, payload, text)
    return 0


def cmd_lkb_matrix(args):
    _require(args.n >= 2, "lkb-matrix requires --n >= 2")
    gens = range(1, args.n) if args.i is None else [args.i]
    for i in gens:
        _require(1 <= i <= args.n - 1, "--i out of range")
    build = lkb_mod.lkb_sigma if args.positive else lkb_mod.lkb_sigma_inverse
    mats = [build(args.n, i) for i in gens]
    payload = [dict(m.to_json(), generator=i) for i, m in zip(gens, mats)]

    def text():
        blocks = []
        for i, m in zip(gens, mats):
            name = "sigma_%d" % i if args.positive else "sigma_%d^-1" % i
            blocks.append("%s:\n%s" % (
                name, _matrix_text(m.entries, ["F(%d,%d)" % p for p in m.basis])))
        return "\n\n".join(blocks)

    _emit(args, payload, text)
    return 0


def cmd_twist(args):
    _require(args.n >= 2, "twist requires --n >= 2")
    _require(args.l >= 0, "twist requires --l >= 0")
    scalar = decomp_mod.full_twist_scalar(args.n, args.l)
    payload = {"n": args.n, "l": args.l, "scalar": scalar.to_json()}
    _emit(args, payload, lambda: str(scalar))
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Exact braid group representations from quantum sl2 "
                    "Verma modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, l_default=None, word=False):
        p.add_argument("--n", type=int, required=True, help="strand count")
        if l_default is not None:
            p.add_argument("--l", type=int, default=l_default,
                           help="weight-space degree")
        if word:
            p.add_argument("--word", default="",
                           help="braid word, e.g. '1 -2 1'")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None, help="write to file")

    p = sub.add_parser("basis", help="highest-weight basis")
    common(p, l_default=0)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("matrix", help="representation matrix of a braid word")
    common(p, l_default=0, word=True)
    p.set_defaults(fn=cmd_matrix)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--suite", required=True, help=", ".join(_SUITES))
    common(p, l_default=2)
    p.add_argument("--perturb", action="store_true",
                   help="negative control: damage the braiding operator")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("irreducible", help="commutant dimension at a point")
    common(p, l_default=2)
    p.add_argument("--q0", default=None)
    p.add_argument("--s0", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_irreducible)

    p = sub.add_parser("decompose", help="highest-weight components of a tensor")
    common(p, l_default=None)
    p.add_argument("--idx", required=True, help="multi-index, e.g. '1,0,2'")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("burau", help="Burau generator matrices (t = s^-2)")
    common(p, l_default=None)
    p.add_argument("--unreduced", action="store_true")
    p.set_defaults(fn=cmd_burau)

    p = sub.add_parser("lkb-matrix", help="LKB generator matrices over Z[t,Q]")
    common(p, l_default=None)
    p.add_argument("--i", type=int, default=None, help="single generator index")
    p.add_argument("--positive", action="store_true",
                   help="emit sigma_i instead of sigma_i^-1")
    p.set_defaults(fn=cmd_lkb_matrix)

    p = sub.add_parser("twist", help="full twist scalar")
    common(p, l_default=2)
    p.set_defaults(fn=cmd_twist)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems already
        raise exc
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

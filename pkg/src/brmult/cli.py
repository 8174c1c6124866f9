"""Command-line interface.

Results go to standard output (text or JSON), diagnostics to standard
error.  Exit codes: 0 success, 1 verdict violation, 2 input error,
3 resource or truncation-cap failure, 4 genericity failure.
"""

import argparse
import json
import sys

from . import engine, field, ideals, multiplicity, report
from .errors import (
    ExceedsCapError,
    GenericityError,
    InputError,
    PresentationUnavailableError,
    ResourceError,
)
from .modules import SubmoduleOfFree, colength_FM, family_Mabc, module_of_ideal
from .presentation import adjoint_via_presentation, fitt_r1

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_GENERICITY = 4


def _load_module(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read module file: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"module file is not valid JSON: {exc}")
    return SubmoduleOfFree.from_json_dict(obj)


def _emit(data, fmt):
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        _emit_text(data)


def _emit_text(data, prefix=""):
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)):
                print(f"{prefix}{k}:")
                _emit_text(v, prefix + "  ")
            else:
                print(f"{prefix}{k}: {v}")
    elif isinstance(data, list):
        for v in data:
            _emit_text(v, prefix + "- " if not isinstance(v, (dict, list)) else prefix + "  ")
    else:
        print(f"{prefix}{data}")


def _gens_str(I):
    return ", ".join(str(g) for g in I.gens)


def cmd_colength(args):
    I = ideals.Ideal.parse(args.ideal)
    res = ideals.colength(I, cap=args.trunc_cap)
    if res.exceeds_cap:
        raise ExceedsCapError(args.trunc_cap)
    return {"colength": res.value, "certified_at": res.certified_at}


def cmd_order(args):
    return {"order": ideals.Ideal.parse(args.ideal).order()}


def cmd_mult(args):
    I = ideals.Ideal.parse(args.ideal)
    return {
        "multiplicity": ideals.hs_multiplicity(
            I, seed=args.seed, cap=args.trunc_cap, cross_check=args.cross_check
        )
    }


def cmd_br_mult(args):
    M = _load_module(args.module)
    return {
        "br_multiplicity": multiplicity.br_multiplicity(
            M, seed=args.seed, cap=args.trunc_cap
        )
    }


def cmd_br_limit(args):
    M = _load_module(args.module)
    return {
        "br_multiplicity_limit": multiplicity.br_limit_multiplicity(
            M, pmax=args.pmax, cap=args.trunc_cap
        )
    }


def cmd_adjoint(args):
    I = ideals.Ideal.parse(args.ideal)
    via = args.via
    if via is None:
        via = "polyhedral" if I.is_monomial() else "presentation"
    if via == "polyhedral":
        s = I.staircase()
        if s is None:
            raise InputError("polyhedral adjoint needs a monomial ideal")
        adj = s.closure().adjoint().to_ideal()
    else:
        adj = adjoint_via_presentation(I, cap=args.trunc_cap, seed=args.seed)
        s = adj.staircase()
        if s is not None:
            adj = s.to_ideal()  # canonical monomial generators
    return {"adjoint": _gens_str(adj), "via": via}


def cmd_closure(args):
    import os

    if os.path.exists(args.target):
        M = _load_module(args.target)
        plus, status = multiplicity.closure_approx(
            M, seed=args.seed, cap=args.trunc_cap
        )
        return {"status": status, "module": plus.to_json_dict()}
    I = ideals.Ideal.parse(args.target)
    s = I.staircase()
    if s is not None:
        closed = s.closure()
        return {
            "status": "certified",
            "closure": _gens_str(closed.to_ideal()),
            "was_closed": closed == s,
        }
    plus, status = multiplicity.closure_approx(
        module_of_ideal(I), seed=args.seed, cap=args.trunc_cap
    )
    return {
        "status": status,
        "closure": ", ".join(str(c[0]) for c in plus.columns()),
    }


def cmd_fitting(args):
    M = _load_module(args.module)
    if args.k == M.rank:
        Ik = M.max_minors_ideal()
    elif args.k < M.rank:
        Ik = M.fitting_ideal(args.k)
    else:
        # minors of the presentation: Fitt indexing past the rank
        if args.k != M.rank + 1:
            raise InputError(f"supported minor sizes: 0..{M.rank} and rank+1")
        Ik = fitt_r1(M, cap=args.trunc_cap)
    res = ideals.colength(Ik, cap=args.trunc_cap)
    return {
        "k": args.k,
        "generators": _gens_str(Ik),
        "colength": res.value if not res.exceeds_cap else None,
    }


def cmd_report(args):
    M = _load_module(args.module)
    rep = report.report(
        M, seed=args.seed, cap=args.trunc_cap, with_limit=args.with_limit
    )
    return rep.to_dict()


def cmd_mabc(args):
    M, N = family_Mabc(args.a, args.b, args.c)
    I = M.max_minors_ideal()
    return {
        "e_I": ideals.hs_multiplicity(I, seed=args.seed, cap=args.trunc_cap),
        "len_R_I": ideals.colength_value(I, cap=args.trunc_cap),
        "e_M": multiplicity.br_multiplicity(M, seed=args.seed, cap=args.trunc_cap),
        "len_F_M": colength_FM(M, cap=args.trunc_cap),
        "len_F_N": colength_FM(N, cap=args.trunc_cap),
    }


def cmd_mixed(args):
    I = ideals.Ideal.parse(args.ideal1)
    J = ideals.Ideal.parse(args.ideal2)
    return {"mixed_multiplicity": ideals.mixed_multiplicity(I, J, cap=args.trunc_cap)}


def cmd_verify(args):
    summary = report.verify_corpus(
        count=args.corpus_size,
        seed=args.seed,
        colength_bound=args.colength_bound,
        cap=args.trunc_cap,
        hard=args.hard,
    )
    if not args.full:
        summary.pop("reports")
    return summary


def cmd_examples(args):
    return report.example_suite(seed=args.seed, cap=args.trunc_cap)


def _add_globals(p):
    p.add_argument("--char", type=int, default=None, help="field characteristic (0 = rationals)")
    p.add_argument("--trunc-cap", type=int, default=engine.DEFAULT_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser():
    top = argparse.ArgumentParser(prog="brmult")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        _add_globals(p)
        p.set_defaults(fn=fn)
        return p

    p = add("colength", cmd_colength, help="certified colength of an m-primary ideal")
    p.add_argument("ideal")
    p = add("order", cmd_order, help="m-adic order of an ideal")
    p.add_argument("ideal")
    p = add("mult", cmd_mult, help="Hilbert-Samuel multiplicity")
    p.add_argument("ideal")
    p.add_argument("--cross-check", action="store_true")
    p = add("br-mult", cmd_br_mult, help="Buchsbaum-Rim multiplicity via reductions")
    p.add_argument("module")
    p = add("br-limit", cmd_br_limit, help="Buchsbaum-Rim multiplicity via the length limit")
    p.add_argument("module")
    p.add_argument("--pmax", type=int, default=None)
    p = add("adjoint", cmd_adjoint, help="adjoint ideal")
    p.add_argument("ideal")
    p.add_argument("--via", choices=("presentation", "polyhedral"), default=None)
    p = add("closure", cmd_closure, help="integral closure of an ideal or module")
    p.add_argument("target", help="ideal text or module JSON path")
    p = add("fitting", cmd_fitting, help="Fitting ideal I_k of a module")
    p.add_argument("module")
    p.add_argument("--k", type=int, required=True)
    p = add("report", cmd_report, help="full invariant report with theorem verdicts")
    p.add_argument("module")
    p.add_argument("--with-limit", action="store_true")
    p = add("mabc", cmd_mabc, help="invariants of the worked-example family M(a,b,c)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p = add("mixed", cmd_mixed, help="mixed multiplicity of two m-primary ideals")
    p.add_argument("ideal1")
    p.add_argument("ideal2")
    p = add("verify", cmd_verify, help="run the theorem corpus")
    p.add_argument("--corpus-size", type=int, default=100)
    p.add_argument("--colength-bound", type=int, default=25)
    p.add_argument("--hard", type=int, default=0)
    p.add_argument("--full", action="store_true", help="include per-module reports")
    p = add("examples", cmd_examples, help="run the worked-example suite")
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.char is not None:
            field.set_char(args.char)
        result = args.fn(args)
    except (GenericityError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (ExceedsCapError, ResourceError, PresentationUnavailableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(result, args.format)
    if args.command in ("verify", "examples") and not result.get("ok", True):
        return EXIT_VERDICT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

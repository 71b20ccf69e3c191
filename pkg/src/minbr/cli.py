"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 classification preconditions not
met.
"""

import argparse
import sys

from . import corpus
from .certify import (b_family, minimal_br_verdict, smoothable_rank_verdict,
                      verify_limit_certificate, wildness)
from .normalform import NormalFormError, classify_m5
from .report import full_analysis, render
from .tensor import permute
from .tensorio import TensorFileError, parse_family, parse_tensor

_FACTOR_ORDER = {"A": ("A", "B", "C"), "B": ("B", "C", "A"),
                 "C": ("C", "A", "B")}


def _load(spec_str):
    if spec_str.startswith("corpus:"):
        key = spec_str[len("corpus:"):]
        try:
            return corpus.get(key).tensor
        except KeyError as exc:
            raise TensorFileError(str(exc))
    try:
        with open(spec_str) as fh:
            text = fh.read()
    except OSError as exc:
        raise TensorFileError("cannot read %s: %s" % (spec_str, exc))
    return parse_tensor(text)


def _cmd_analyze(args):
    T = _load(args.input)
    if args.factor != "A":
        T = permute(T, _FACTOR_ORDER[args.factor])
    try:
        rep = full_analysis(T, verify_direct=args.verify_direct)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(render(rep))
    return 0


def _cmd_classify(args):
    T = _load(args.input)
    try:
        cls = classify_m5(T)
    except ValueError as exc:
        # includes NormalFormError and precondition failures
        print("classification preconditions not met: %s" % exc,
              file=sys.stderr)
        return 3
    rep = {
        "label": cls.label,
        "p_rank": cls.p_rank,
        "symmetry": {"full": cls.dims.full, "ab": cls.dims.ab,
                     "bc": cls.dims.bc, "ca": cls.dims.ca},
    }
    print(render(rep))
    return 0


def _cmd_certify(args):
    T = _load(args.input)
    rep = {}
    for v in (minimal_br_verdict(T), wildness(T)):
        rep[v.question] = {"answer": v.answer, "rule": v.rule}
    try:
        sv = smoothable_rank_verdict(T)
        rep[sv.question] = {"answer": sv.answer, "rule": sv.rule}
    except AssertionError as exc:
        rep["minimal_smoothable_rank"] = {"answer": "error", "rule": str(exc)}
    fam = None
    if args.family:
        with open(args.family) as fh:
            fam = parse_family(fh.read())
    elif T == corpus.get("T_O58").tensor:
        fam = b_family()
    if fam is not None:
        cert = verify_limit_certificate(fam, T, args.factor)
        rec = {"verified": cert.verified}
        if not cert.verified:
            rec["reason"] = cert.reason
        rep["limit_certificate"] = rec
    print(render(rep))
    return 0


def _cmd_corpus(args):
    if args.action == "list":
        for key in corpus.keys():
            print(key)
        return 0
    entry = corpus.get(args.key)
    rep = {
        "key": entry.key,
        "dims": list(entry.tensor.dims),
        "entries": [[i, j, k, str(v)] for (i, j, k, v) in entry.tensor.entries()],
        "expected": entry.expected,
    }
    print(render(rep))
    return 0


def _parser():
    p = argparse.ArgumentParser(
        prog="minbr",
        description="Exact invariants and certificates for small order-3 "
                    "tensors over the rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full invariant report")
    pa.add_argument("input", help="tensor file path or corpus:KEY")
    pa.add_argument("--factor", choices=("A", "B", "C"), default="A",
                    help="analyze with this factor moved into the first slot")
    pa.add_argument("--verify-direct", action="store_true",
                    help="cross-check the triple intersection against the "
                         "directly assembled linear map")
    pa.set_defaults(func=_cmd_analyze)

    pc = sub.add_parser("classify", help="classify a 5x5x5 tensor")
    pc.add_argument("input")
    pc.set_defaults(func=_cmd_classify)

    pf = sub.add_parser("certify", help="theorem-backed verdicts and "
                                        "limit certificates")
    pf.add_argument("input")
    pf.add_argument("--family", help="polynomial matrix family file")
    pf.add_argument("--factor", choices=("A", "B", "C"), default="A")
    pf.set_defaults(func=_cmd_certify)

    pk = sub.add_parser("corpus", help="browse built-in tensors")
    pk.add_argument("action", choices=("list", "show"))
    pk.add_argument("key", nargs="?")
    pk.set_defaults(func=_cmd_corpus)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    if args.command == "corpus" and args.action == "show" and not args.key:
        print("error: corpus show requires a key", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except TensorFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except KeyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

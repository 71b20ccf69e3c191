"""Full analysis pipeline and deterministic plain-text rendering."""

from fractions import Fraction

from .algebra import adhm_module, compute_111_algebra, gorenstein_check, symmetry_dims
from .certify import minimal_br_verdict, smoothable_rank_verdict, wildness
from .equations import end_closed_check, koszul_p1, strassen_check, triple_111
from .tensor import FACTORS, conciseness, genericity_profile


def full_analysis(T, verify_direct=False):
    """Structured report over a cubic tensor; every value is exact."""
    m = T.m
    out = {"dims": list(T.dims)}
    conc = conciseness(T)
    out["concise"] = {f: conc[f] for f in FACTORS}
    prof = genericity_profile(T)
    out["genericity"] = {
        "max_rank": {f: prof.max_rank[f] for f in FACTORS},
        "corank": {f: prof.corank[f] for f in FACTORS},
        "one_star_generic": prof.one_star_generic,
        "binding": prof.binding,
        "one_generic": prof.one_generic,
        "one_degenerate": prof.one_degenerate,
    }
    st = strassen_check(T)
    out["strassen"] = {f: st[f]["status"] for f in FACTORS}
    ec = end_closed_check(T)
    out["end_closed"] = {f: ec[f]["status"] for f in FACTORS}
    kz = koszul_p1(T)
    out["koszul_p1"] = {k: {"rank": v["rank"], "bound": v["bound"],
                            "minimal_ok": v["minimal_ok"]}
                        for k, v in sorted(kz.items())}
    tri = triple_111(T, verify_direct=verify_direct)
    out["triple_111"] = {"dim": tri.dim, "abundant": tri.abundant,
                         "sharp": tri.sharp, "map_rank": tri.map_rank}
    if verify_direct:
        out["triple_111"]["direct_map_rank"] = tri.direct_map_rank
    if all(conc.values()):
        try:
            alg = compute_111_algebra(T)
            out["algebra_111"] = {
                "dim": alg.dim,
                "gorenstein": gorenstein_check(alg.structure_constants),
                "structure_constants": alg.structure_constants,
            }
        except (ValueError, AssertionError) as exc:
            out["algebra_111"] = {"error": str(exc)}
        sym = symmetry_dims(T)
        out["symmetry"] = {"full": sym.full, "ab": sym.ab, "bc": sym.bc,
                           "ca": sym.ca}
        out["adhm"] = {}
        for f in FACTORS:
            if not prof.generic[f]:
                continue
            try:
                mod = adhm_module(T, f)
            except ValueError as exc:
                out["adhm"][f] = {"error": str(exc)}
                continue
            rec = {"locality": mod.locality}
            if mod.hilbert_module is not None:
                rec["hilbert_module"] = list(mod.hilbert_module)
                rec["hilbert_algebra"] = list(mod.hilbert_algebra)
            out["adhm"][f] = rec
    verdicts = {}
    for v in (minimal_br_verdict(T), wildness(T)):
        verdicts[v.question] = {"answer": v.answer, "rule": v.rule}
    try:
        sv = smoothable_rank_verdict(T)
        verdicts[sv.question] = {"answer": sv.answer, "rule": sv.rule}
    except AssertionError as exc:
        verdicts["minimal_smoothable_rank"] = {"answer": "error",
                                               "rule": str(exc)}
    out["verdicts"] = verdicts
    return out


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return "none"
    return str(v)


def _is_scalar(v):
    return not isinstance(v, (dict, list, tuple))


def _inline(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return _scalar(v)


def render(tree, indent=0):
    """Deterministic key/value text for a nested report structure."""
    lines = []
    pad = "  " * indent
    for key, val in tree.items():
        if isinstance(val, dict):
            if not val:
                lines.append("%s%s: {}" % (pad, key))
                continue
            lines.append("%s%s:" % (pad, key))
            lines.append(render(val, indent + 1))
        elif isinstance(val, (list, tuple)):
            lines.append("%s%s: %s" % (pad, key, _inline(val)))
        else:
            lines.append("%s%s: %s" % (pad, key, _scalar(val)))
    return "\n".join(lines)


def to_jsonable(v):
    """Recursive conversion to JSON-friendly values with exact rationals."""
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    return str(v)

"""Tensor input format: a JSON document with either an entry list or a
slice list.

{
  "dims": [a, b, c],
  "entries": [{"i": 1, "j": 2, "k": 3, "v": "1/2"}, ...]
}

or

{
  "slices": [[["0", "1"], ["1", "0"]], ...]
}

Slices run over the first factor; each is a matrix with rows over the third
factor and columns over the second. Rational values are integers or "p/q"
strings. Duplicate entry positions are rejected.
"""

import json
from fractions import Fraction

from .tensor import Tensor3


class TensorFileError(ValueError):
    pass


def _rat(v, where):
    try:
        if isinstance(v, str):
            return Fraction(v)
        if isinstance(v, int):
            return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise TensorFileError("%s: bad rational %r (%s)" % (where, v, exc))
    raise TensorFileError("%s: values must be integers or 'p/q' strings, "
                          "got %r" % (where, v))


def parse_tensor(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFileError("not valid JSON: line %d column %d: %s"
                              % (exc.lineno, exc.colno, exc.msg))
    if not isinstance(doc, dict):
        raise TensorFileError("top level must be an object")
    if "entries" in doc:
        if "dims" not in doc:
            raise TensorFileError("'dims' is required with 'entries'")
        dims = doc["dims"]
        if (not isinstance(dims, list) or len(dims) != 3
                or not all(isinstance(d, int) and d >= 1 for d in dims)):
            raise TensorFileError("'dims' must be three positive integers")
        seen = set()
        entries = []
        for pos, e in enumerate(doc["entries"]):
            where = "entries[%d]" % pos
            if not isinstance(e, dict) or set(e) != {"i", "j", "k", "v"}:
                raise TensorFileError("%s: expected keys i, j, k, v" % where)
            i, j, k = e["i"], e["j"], e["k"]
            if not all(isinstance(x, int) for x in (i, j, k)):
                raise TensorFileError("%s: indices must be integers" % where)
            if not (1 <= i <= dims[0] and 1 <= j <= dims[1] and 1 <= k <= dims[2]):
                raise TensorFileError("%s: index (%d,%d,%d) out of range"
                                      % (where, i, j, k))
            if (i, j, k) in seen:
                raise TensorFileError("%s: duplicate position (%d,%d,%d)"
                                      % (where, i, j, k))
            seen.add((i, j, k))
            entries.append((i, j, k, _rat(e["v"], where)))
        return Tensor3.from_entries(tuple(dims), entries)
    if "slices" in doc:
        sl = doc["slices"]
        if not isinstance(sl, list) or not sl:
            raise TensorFileError("'slices' must be a non-empty list")
        mats = []
        for si, S in enumerate(sl):
            where = "slices[%d]" % si
            if not isinstance(S, list) or not S or not all(
                    isinstance(row, list) and len(row) == len(S[0]) for row in S):
                raise TensorFileError("%s: must be a rectangular matrix" % where)
            mats.append([[_rat(v, where) for v in row] for row in S])
        rows, cols = len(mats[0]), len(mats[0][0])
        for si, M in enumerate(mats):
            if len(M) != rows or len(M[0]) != cols:
                raise TensorFileError("slices[%d]: shape differs from the "
                                      "first slice" % si)
        return Tensor3.from_a_slices(mats)
    raise TensorFileError("document needs 'entries' or 'slices'")


def parse_family(text):
    """Polynomial matrix family: {"matrices": [[["t", "1"], ...], ...]},
    entries are polynomials in t with rational coefficients."""
    import sympy as sp

    from .polymat import t
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFileError("not valid JSON: line %d column %d: %s"
                              % (exc.lineno, exc.colno, exc.msg))
    if not isinstance(doc, dict) or "matrices" not in doc:
        raise TensorFileError("document needs 'matrices'")
    fam = []
    for mi, M in enumerate(doc["matrices"]):
        where = "matrices[%d]" % mi
        if not isinstance(M, list) or not M:
            raise TensorFileError("%s: must be a matrix" % where)
        rows = []
        for row in M:
            out = []
            for v in row:
                try:
                    expr = sp.sympify(str(v), locals={"t": t}, rational=True)
                except (sp.SympifyError, SyntaxError) as exc:
                    raise TensorFileError("%s: bad polynomial %r (%s)"
                                          % (where, v, exc))
                if expr.free_symbols - {t}:
                    raise TensorFileError("%s: only the variable t is allowed"
                                          % where)
                out.append(expr)
            rows.append(out)
        fam.append(sp.Matrix(rows))
    return fam

"""Built-in library of named test tensors with their known invariants."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .linalg import frac
from .tensor import Tensor3


@dataclass(frozen=True)
class CorpusEntry:
    key: str
    tensor: Tensor3
    expected: dict = field(default_factory=dict)


def structure_tensor(c):
    """Multiplication tensor of an algebra from structure constants
    e_i e_j = sum_k c[i][j][k] e_k."""
    n = len(c)
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = frac(c[i][j][k])
                if v:
                    entries.append((i + 1, j + 1, k + 1, v))
    return Tensor3.from_entries((n, n, n), entries)


def diagonal_algebra(m):
    """Structure constants of Q^m with componentwise product."""
    return [[[Fraction(1) if i == j == k else Fraction(0) for k in range(m)]
             for j in range(m)] for i in range(m)]


def truncated_polynomial_algebra(k):
    """Structure constants of Q[x]/(x^k) in the basis 1, x, .., x^(k-1)."""
    return [[[Fraction(1) if i + j == l else Fraction(0) for l in range(k)]
             for j in range(k)] for i in range(k)]


def square_zero_extension(n):
    """Structure constants of Q[e_1..e_n]/(e)^2 in the basis 1, e_1..e_n."""
    d = n + 1
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for j in range(d):
        c[0][j][j] = Fraction(1)
        c[j][0][j] = Fraction(1)
    c[0][0][0] = Fraction(1)
    return c


def _unit(m):
    return Tensor3.from_entries((m, m, m), [(i, i, i, 1) for i in range(1, m + 1)])


def symmetric_cubic_tensor(monomials, m):
    """Symmetric tensor of a cubic form given as {(i,j,k): coeff} with
    1-based variable indices; each monomial contributes its coefficient at
    every arrangement of its three indices, counted with multiplicity."""
    entries = []
    for (i, j, k), cf in monomials.items():
        for p in permutations((i, j, k)):
            entries.append((p[0], p[1], p[2], cf))
    return Tensor3.from_entries((m, m, m), entries)


def _from_matrix_form(form, m):
    """Tensor from a matrix-space presentation: a map (row, col) -> list of
    (slice index, coefficient), rows over the third factor, columns over the
    second."""
    entries = []
    for (c, b), terms in form.items():
        for (i, v) in terms:
            entries.append((i, b, c, v))
    return Tensor3.from_entries((m, m, m), entries)


def _nf_tensor(x_blocks, u_m, w_m):
    """Slices K_1 = [[Id,0],[0,0]], K_s = [[x_s,0],[0,0]],
    K_m = [[x_m, w_m],[u_m, 0]] assembled into a cubic tensor."""
    n = len(x_blocks[0])
    m = n + 1
    K = []
    for s, x in enumerate(x_blocks):
        M = [[Fraction(0)] * m for _ in range(m)]
        for i in range(n):
            for j in range(n):
                M[i][j] = frac(x[i][j])
        if s == len(x_blocks) - 1:
            for i in range(n):
                M[i][m - 1] = frac(w_m[i])
                M[m - 1][i] = frac(u_m[i])
        K.append(M)
    return Tensor3.from_a_slices(K)


def _e(n, i, j):
    M = [[Fraction(0)] * n for _ in range(n)]
    M[i - 1][j - 1] = Fraction(1)
    return M


def _id(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


_T_M1 = Tensor3.from_entries((5, 5, 5), [
    (1, 1, 1, 1), (1, 2, 2, 1), (1, 3, 3, 1), (1, 4, 4, 1),
    (2, 3, 1, 1),
    (3, 4, 1, 1),
    (4, 4, 2, 1),
    (5, 5, 1, 1), (5, 4, 5, 1),
])

_T_M2 = Tensor3.from_entries((5, 5, 5), [
    (1, 1, 1, 1), (1, 2, 2, 1), (1, 3, 3, 1), (1, 4, 4, 1),
    (2, 3, 1, 1), (2, 4, 2, -1),
    (3, 4, 1, 1),
    (4, 3, 2, 1),
    (5, 5, 1, 1), (5, 4, 5, 1),
])


def _plus(T, extra):
    return Tensor3.from_entries(T.dims, list(T.entries()) + extra)


_T_O58 = _plus(_T_M2, [(5, 1, 2, 1), (5, 3, 4, -1)])
_T_O57 = _T_M2
_T_O56 = _plus(_T_M1, [(5, 2, 2, 1)])
_T_O55 = _plus(_T_M1, [(5, 3, 2, 1)])
_T_O54 = _T_M1
_T_O57_TILDE = _plus(_T_M1, [(5, 5, 2, 1), (5, 1, 2, -1), (5, 3, 3, 1)])
_T_O56_TILDE = _plus(_T_M1, [(5, 5, 2, 1)])

# matrix-space presentations of the same five tensors; rows index the third
# factor, columns the second, slice i collects the coefficient of variable i
MATRIX_FORMS = {
    "T_O58": {
        (1, 1): [(1, 1)], (1, 3): [(2, 1)], (1, 4): [(3, 1)], (1, 5): [(5, 1)],
        (2, 1): [(5, 1)], (2, 2): [(1, 1)], (2, 3): [(4, 1)], (2, 4): [(2, -1)],
        (3, 3): [(1, 1)],
        (4, 3): [(5, -1)], (4, 4): [(1, 1)],
        (5, 4): [(5, 1)],
    },
    "T_O57": {
        (1, 1): [(1, 1)], (1, 3): [(2, 1)], (1, 4): [(3, 1)], (1, 5): [(5, 1)],
        (2, 2): [(1, 1)], (2, 3): [(4, 1)], (2, 4): [(2, -1)],
        (3, 3): [(1, 1)],
        (4, 4): [(1, 1)],
        (5, 4): [(5, 1)],
    },
    "T_O56": {
        (1, 1): [(1, 1)], (1, 3): [(2, 1)], (1, 4): [(3, 1)], (1, 5): [(5, 1)],
        (2, 2): [(1, 1), (5, 1)], (2, 4): [(4, 1)],
        (3, 3): [(1, 1)],
        (4, 4): [(1, 1)],
        (5, 4): [(5, 1)],
    },
    "T_O55": {
        (1, 1): [(1, 1)], (1, 3): [(2, 1)], (1, 4): [(3, 1)], (1, 5): [(5, 1)],
        (2, 2): [(1, 1)], (2, 3): [(5, 1)], (2, 4): [(4, 1)],
        (3, 3): [(1, 1)],
        (4, 4): [(1, 1)],
        (5, 4): [(5, 1)],
    },
    "T_O54": {
        (1, 1): [(1, 1)], (1, 3): [(2, 1)], (1, 4): [(3, 1)], (1, 5): [(5, 1)],
        (2, 2): [(1, 1)], (2, 4): [(4, 1)],
        (3, 3): [(1, 1)],
        (4, 4): [(1, 1)],
        (5, 4): [(5, 1)],
    },
}

_EX_111 = _nf_tensor(
    [_id(4), _e(4, 1, 4), _e(4, 1, 3), _e(4, 3, 4),
     [[Fraction(0)] * 4 for _ in range(4)]],
    u_m=[0, 0, 0, 1], w_m=[1, 0, 0, 0])

_SYM_CUBIC = symmetric_cubic_tensor({(3, 1, 1): 1, (4, 1, 2): 1, (5, 2, 2): 1}, 5)

_W_STATE = Tensor3.from_entries((2, 2, 2), [
    (1, 1, 2, 1), (1, 2, 1, 1), (2, 1, 1, 1)])


def _classification_expected(label, full, ab, bc, ca):
    return {
        "concise": True,
        "one_degenerate": True,
        "triple_dim": 5,
        "sharp": True,
        "minimal_border_rank": "yes",
        "wild": "yes",
        "label": label,
        "symmetry_full": full,
        "symmetry_ab": ab,
        "symmetry_bc": bc,
        "symmetry_ca": ca,
    }


def _build():
    entries = {}
    for m in range(2, 8):
        entries["unit_%d" % m] = CorpusEntry(
            key="unit_%d" % m, tensor=_unit(m),
            expected={"concise": True, "one_generic": True, "triple_dim": m,
                      "minimal_border_rank": "yes", "wild": "no",
                      "minimal_smoothable_rank": "yes"})
    entries["w_state"] = CorpusEntry(
        key="w_state", tensor=_W_STATE,
        expected={"concise": True, "one_generic": True, "triple_dim": 2,
                  "minimal_border_rank": "yes", "wild": "no"})
    entries["T_M1"] = CorpusEntry(
        key="T_M1", tensor=_T_M1,
        expected=_classification_expected("O54", 20, 6, 6, 6))
    entries["T_M2"] = CorpusEntry(
        key="T_M2", tensor=_T_M2,
        expected=_classification_expected("O57", 17, 5, 6, 5))
    entries["T_O58"] = CorpusEntry(
        key="T_O58", tensor=_T_O58,
        expected=_classification_expected("O58", 16, 5, 5, 5))
    entries["T_O57"] = CorpusEntry(
        key="T_O57", tensor=_T_O57,
        expected=_classification_expected("O57", 17, 5, 6, 5))
    entries["T_O56"] = CorpusEntry(
        key="T_O56", tensor=_T_O56,
        expected=_classification_expected("O56", 18, 6, 5, 6))
    entries["T_O55"] = CorpusEntry(
        key="T_O55", tensor=_T_O55,
        expected=_classification_expected("O55", 19, 6, 6, 6))
    entries["T_O54"] = CorpusEntry(
        key="T_O54", tensor=_T_O54,
        expected=_classification_expected("O54", 20, 6, 6, 6))
    entries["T_O57_tilde"] = CorpusEntry(
        key="T_O57_tilde", tensor=_T_O57_TILDE,
        expected=_classification_expected("O57", 17, 5, 5, 6))
    entries["T_O56_tilde"] = CorpusEntry(
        key="T_O56_tilde", tensor=_T_O56_TILDE,
        expected=_classification_expected("O56", 18, 5, 6, 6))
    entries["example_111necessary"] = CorpusEntry(
        key="example_111necessary", tensor=_EX_111,
        expected={"concise": True, "triple_dim": 3, "abundant": False,
                  "minimal_border_rank": "no",
                  "strassen": {"A": "pass", "B": "fail", "C": "fail"},
                  "end_closed": {"A": "pass", "B": "fail", "C": "fail"},
                  "koszul_minimal_ok": True})
    entries["symmetric_cubic"] = CorpusEntry(
        key="symmetric_cubic", tensor=_SYM_CUBIC,
        expected={"concise": True, "one_degenerate": True, "triple_dim": 5,
                  "algebra_dim": 5, "minimal_border_rank": "yes"})
    for k in (2, 3, 4):
        key = "poly_trunc_%d" % k
        entries[key] = CorpusEntry(
            key=key, tensor=structure_tensor(truncated_polynomial_algebra(k)),
            expected={"concise": True, "one_generic": True, "triple_dim": k,
                      "minimal_border_rank": "yes", "wild": "no"})
    entries["dual_numbers_4"] = CorpusEntry(
        key="dual_numbers_4",
        tensor=structure_tensor(square_zero_extension(4)),
        expected={"concise": True, "one_generic": False,
                  "gorenstein": False, "minimal_smoothable_rank": "no"})
    return entries


_ENTRIES = _build()


def get(key):
    if key not in _ENTRIES:
        raise KeyError("unknown corpus key: %s" % key)
    return _ENTRIES[key]


def keys():
    return sorted(_ENTRIES)


def matrix_form_tensor(label):
    """The matrix-space encoding of a classification tensor, as a Tensor3."""
    return _from_matrix_form(MATRIX_FORMS[label], 5)

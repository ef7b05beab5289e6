"""Reproduce the numeric claims of the classification as exact checks."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from . import catalog
from .catalog import abelian, algebra_from_key, heisenberg_even, heisenberg_odd
from .multiplier import (
    d2_matrix,
    d3_matrix,
    exterior_square_dim,
    multiplier_dim,
    multiplier_total_unblocked,
    s_invariant,
    stem_cover,
)
from .superalg import (
    GradedDim,
    LieSuperAlgebra,
    center,
    derived_subalgebra,
    direct_sum,
    intersection,
    is_abelian,
    is_nilpotent,
    lower_central_series,
    quotient,
    structure_equal,
    upper_central_series,
    validate,
)

SCHEMA_VERSION = 1

CITE = {
    "thm3.1": "Theorem 3.1, 'Further, equality holds if and only if $L$ is abelian'",
    "thm3.2(1)": "Theorem 3.2(1), '$K \\subset Z(L)$ be an graded ideal'",
    "thm3.2(2)": "Theorem 3.2(2), '\\dim (L'\\cap K)  \\leq \\frac{1}{2}[(m+n)^2 +(n-m)]'",
    "cor3.3": "Corollary 3.3, '\\dim \\mathcal{M}(L)+ \\dim L'\\leq'",
    "thm3.4": "Theorem 3.4, 'two finite dimensional Lie superalgebras'",
    "thm3.5": "Theorem 3.5, '2m^2-m-1+2mn+n(n+1)/2'",
    "thm3.7": "Theorem 3.7, '2n^{2}-1' and proof 'dim $W=(n^{2} \\mid n^{2}-1)$'",
    "thm3.9": "Theorem 3.9, 'Moreover, if $r+s = 1$'",
    "thm4.1": "Theorem 4.1, 'Moreover,' list",
    "thm4.2": "Theorem 4.2, 'Moreover,' list",
    "thm4.3": "Theorem 4.3, 'Moreover,' list",
    "thm4.5": "Theorem 4.5, 'Moreover, $\\dim \\mathcal{M}(L_{5,0}^{1})=4$'",
    "thm4.6": "Theorem 4.6, 'Moreover,' list",
    "prop4.4": "Proposition 4.4, 'Then for some non-negative integers $p, q$'",
    "prop4.6": "Proposition 4.6, '$\\dim (L^{2})+ \\dim  \\mathcal{M}(L) \\leq$'",
    "lem4.1": "Lemma 4.1, 'no $(m \\mid n)$-dimensional abelian Lie superalgebra'",
    "thm4.9": "Theorem 4.9, 'Then $s(L) =1$ if and only if'",
    "thm4.10": "Theorem 4.10, 'Then $s(L) = 2$ if and only if'",
    "intro": "Introduction, 'Moreover $s(L)=0$ if and only if'",
    "stem": "Introduction, 'we call the stem extension a {\\it stem cover}'",
    "complex": "graded Jacobi identity pushed through the chain complex (d2 o d3 = 0)",
}


@dataclass(frozen=True)
class CheckResult:
    id: str
    citation: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def as_dict(self) -> dict:
        return {"id": self.id, "citation": self.citation, "expected": self.expected,
                "computed": self.computed, "pass": self.passed}


@dataclass(frozen=True)
class Report:
    results: tuple[CheckResult, ...]

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.results)
        return {"total": len(self.results), "passed": passed, "failed": len(self.results) - passed}

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> str:
        payload = {"schema_version": SCHEMA_VERSION,
                   "results": [r.as_dict() for r in self.results],
                   "summary": self.summary}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_table(self) -> str:
        width = max((len(r.id) for r in self.results), default=10)
        lines = [f"{'check':<{width}}  {'expected':>12}  {'computed':>12}  result"]
        for r in self.results:
            lines.append(f"{r.id:<{width}}  {str(r.expected):>12}  {str(r.computed):>12}  "
                         f"{'PASS' if r.passed else 'FAIL'}")
        s = self.summary
        lines.append(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed")
        return "\n".join(lines)


def _check(tag: str, what: str, expected, computed) -> CheckResult:
    return CheckResult(f"{tag}/{what}", CITE[tag], expected, computed)


@lru_cache(maxsize=None)
def _entries():
    return tuple(catalog.all_entries())


def _mult(L: LieSuperAlgebra) -> int:
    return multiplier_dim(L).total


# -- multiplier tables --------------------------------------------------------


def heisenberg_even_formula(m: int, n: int) -> int:
    if m + n >= 2:
        return 2 * m * m - m - 1 + 2 * m * n + n * (n + 1) // 2
    return 0 if (m, n) == (0, 1) else 2


def heisenberg_odd_formula(n: int) -> int:
    return 2 * n * n - 1 if n >= 2 else 2


def multiplier_source(citation: str) -> str:
    """Tag of the first cited statement, e.g. ``"thm4.2"``; that is where the multiplier value lives."""
    head = citation.split(";")[0].split(":")[0].strip()
    return head.replace("Thm ", "thm")


def check_multiplier_tables() -> list[CheckResult]:
    out = []
    for e in _entries():
        ex = e.expected
        if ex is None or ex.multiplier_total is None:
            continue
        tag = multiplier_source(ex.citation)
        if not tag.startswith("thm4"):
            continue
        out.append(_check(tag, f"M({e.key})", ex.multiplier_total, _mult(e.algebra)))
    for m, n in [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (1, 2), (0, 3)]:
        out.append(_check("thm3.5", f"M(H({m},{n}))", heisenberg_even_formula(m, n), _mult(heisenberg_even(m, n))))
    for n in (1, 2, 3):
        out.append(_check("thm3.7", f"M(H_{n})", heisenberg_odd_formula(n), _mult(heisenberg_odd(n))))
    for n in (2, 3):
        graded = multiplier_dim(heisenberg_odd(n)).graded
        out.append(_check("thm3.7", f"graded M(H_{n})", str(GradedDim(n * n, n * n - 1)), str(graded)))
    return out


# -- s-values -------------------------------------------------------------------

S_TWO = ["H(2,0)", "H(1,1)", "H(0,2)", "H(0,1)+A(1|0)", "H(0,1)+A(0|1)", "H_1", "H_1+A(1|0)",
         "L_{4,0}", "H(0,3)", "L_{5,0}^2+A(1|0)", "L_{5,0}^2+A(0|1)"]
S_ZERO = ["H(1,0)", "H(1,0)+A(1|0)", "H(1,0)+A(0|1)", "H(1,0)+A(2|1)"]


def check_classification_s_values() -> list[CheckResult]:
    out = [_check("thm4.9", "s(L_{5,0}^2)", 1, s_invariant(algebra_from_key("L_{5,0}^2")))]
    s_of = {}
    for key in S_TWO:
        s_of[key] = s_invariant(algebra_from_key(key))
        out.append(_check("thm4.10", f"s({key})", 2, s_of[key]))
    for key in S_ZERO:
        s_of[key] = s_invariant(algebra_from_key(key))
        out.append(_check("intro", f"s({key})", 0, s_of[key]))
    zero_keys = sorted(k for k, v in s_of.items() if v == 0)
    out.append(_check("intro", "s=0 exactly on H(1,0)+A instances", sorted(S_ZERO), zero_keys))
    for total in range(2, 6):
        for m in range(total + 1):
            A = abelian(m, total - m)
            out.append(_check("lem4.1", f"s(A({m}|{total - m}))", 2 - total, s_invariant(A)))
    return out


# -- direct sums -----------------------------------------------------------------

def additivity_base() -> list[tuple[str, LieSuperAlgebra]]:
    """Heisenbergs, abelians up to (2|2) and the classified families."""
    heis = ["H(0,1)", "H(1,0)", "H(0,2)", "H(1,1)", "H(0,3)", "H(2,0)", "H(1,2)", "H_1", "H_2", "H_3"]
    out = [(k, algebra_from_key(k)) for k in heis]
    out += [(f"A({m}|{n})", abelian(m, n)) for m in range(3) for n in range(3) if m + n]
    out += [(e.key, e.algebra) for e in _entries() if e.key.startswith("L_") and "+" not in e.key]
    return out


def abelianization_dim(L: LieSuperAlgebra) -> int:
    return L.dim - derived_subalgebra(L).dim


def check_direct_sum_additivity() -> list[CheckResult]:
    base = additivity_base()
    mult = {k: _mult(L) for k, L in base}
    ab = {k: abelianization_dim(L) for k, L in base}
    out = []
    for (ka, A), (kb, B) in combinations_with_replacement(base, 2):
        predicted = mult[ka] + mult[kb] + ab[ka] * ab[kb]
        out.append(_check("thm3.4", f"M({ka}+{kb})", predicted, _mult(direct_sum(A, B))))
    return out


# -- inequalities ----------------------------------------------------------------


def nilpotent_upper_bound(L: LieSuperAlgebra) -> int:
    k = L.dim
    d = derived_subalgebra(L).dim
    return (k + d - 2) * (k - d - 1) // 2 + L.dims.odd + 1


def central_quotient_sides(L: LieSuperAlgebra) -> tuple[int, int]:
    """Both sides of M(L) + dim(L' n K) <= M(L/K) + M(K) + dim(H/H' (x) K/K') for K = Z(L)."""
    K = center(L)
    D = derived_subalgebra(L)
    lhs = _mult(L) + intersection(D, K).dim
    H = quotient(L, K)
    # K is abelian: M(K) is the exterior square and K' = 0
    rhs = _mult(H) + exterior_square_dim(K.dims) + abelianization_dim(H) * K.dim
    return lhs, rhs


def lcs_bound_applies(L: LieSuperAlgebra) -> bool:
    return is_nilpotent(L) and derived_subalgebra(L).dim == 2 and center(L).dim == 1


def lcs_bound_sides(L: LieSuperAlgebra) -> tuple[int, int]:
    lcs = lower_central_series(L)
    L2 = lcs[2] if len(lcs) > 2 else lcs[-1]
    ucs = upper_central_series(L)
    Z2 = ucs[2] if len(ucs) > 2 else ucs[-1]
    lhs = L2.dim + _mult(L)
    rhs = _mult(quotient(L, L2)) + (L.dim - Z2.dim) * L2.dim
    return lhs, rhs


def is_h10_plus_abelian(L: LieSuperAlgebra) -> bool:
    D, Z = derived_subalgebra(L), center(L)
    if D.dims != GradedDim(1, 0) or not Z.contains_subspace(D):
        return False
    # H(p,q) + A has center z + A, so p, q are read off the center
    return (L.dims.even - Z.dims.even, L.dims.odd - Z.dims.odd) == (2, 0)


def check_bounds() -> list[CheckResult]:
    out = []
    algebras = [(e.key, e.algebra) for e in _entries()]
    algebras += [(f"A({m}|{t - m})", abelian(m, t - m)) for t in range(1, 6) for m in range(t + 1)]
    for key, L in algebras:
        M = _mult(L)
        top = exterior_square_dim(L.dims)
        kind = "equality" if M == top else "strict" if M < top else "violated"
        out.append(_check("thm3.1", key, "equality" if is_abelian(L) else "strict", kind))
    for e in _entries():
        L, key = e.algebra, e.key
        M, D, Z = _mult(L), derived_subalgebra(L), center(L)
        top = exterior_square_dim(L.dims)
        out.append(_check("cor3.3", key, True, M + D.dim <= top))
        lhs, rhs = central_quotient_sides(L)
        out.append(_check("thm3.2(1)", key, True, lhs <= rhs))
        out.append(_check("thm3.2(2)", key, True, M + intersection(D, Z).dim <= top))
        if not is_abelian(L) and is_nilpotent(L):
            bound = nilpotent_upper_bound(L)
            out.append(_check("thm3.9", key, True, M <= bound))
            if D.dim == 1:
                out.append(_check("thm3.9", f"equality {key}", is_h10_plus_abelian(L), M == bound))
        if lcs_bound_applies(L):
            lhs, rhs = lcs_bound_sides(L)
            out.append(_check("prop4.6", key, True, lhs <= rhs))
    return out


# -- one dimensional derived algebra ------------------------------------------------------------


def one_dim_derived_normal_form(L: LieSuperAlgebra) -> tuple[str, LieSuperAlgebra] | None:
    """H(p,q) + A or H_p + A matching L's dims, center and derived algebra."""
    D, Z = derived_subalgebra(L), center(L)
    m, n = L.dims.even, L.dims.odd
    if D.dims == GradedDim(1, 0):
        twice_p, q = m - Z.dims.even, n - Z.dims.odd
        if twice_p % 2:
            return None
        p = twice_p // 2
        if p < 0 or q < 0 or p + q < 1:
            return None
        return f"H({p},{q})", direct_sum(heisenberg_even(p, q), abelian(m - 2 * p - 1, n - q))
    if D.dims == GradedDim(0, 1):
        p = m - Z.dims.even
        if p < 1 or n - p - 1 < 0:
            return None
        return f"H_{p}", direct_sum(heisenberg_odd(p), abelian(m - p, n - p - 1))
    return None


def normal_form_s(label: str) -> int:
    if label.startswith("H_"):
        return 3 if int(label[2:]) >= 2 else 2
    p, q = map(int, label[2:-1].split(","))
    return 0 if (p, q) == (1, 0) else 2


def check_structure_theorems() -> list[CheckResult]:
    out = []
    for e in _entries():
        L = e.algebra
        if derived_subalgebra(L).dim != 1:
            continue
        form = one_dim_derived_normal_form(L)
        out.append(_check("prop4.4", f"normal form {e.key}", True,
                          form is not None and structure_equal(L, form[1])))
        if form is not None:
            out.append(_check("prop4.4", f"s({e.key})", normal_form_s(form[0]), s_invariant(L)))
    for key, s in [("H(0,1)", 2), ("H(2,0)", 2), ("H(1,1)", 2), ("H_1", 2), ("H_2", 3)]:
        out.append(_check("prop4.4", f"s({key}) stated", s, s_invariant(algebra_from_key(key))))
    return out


# -- complex and covers ---------------------------------------------------------------


def cover_postconditions(L: LieSuperAlgebra) -> dict[str, bool]:
    sc = stem_cover(L)
    K, W = sc.cover, sc.kernel
    M = multiplier_dim(L)
    return {
        "valid": validate(K).ok,
        "central": center(K).contains_subspace(W),
        "in derived": derived_subalgebra(K).contains_subspace(W),
        "kernel dims": W.dims == M.graded,
        "quotient": structure_equal(quotient(K, W), L),
        "dim K": K.dim == L.dim + M.total,
    }


def check_covers_and_complex() -> list[CheckResult]:
    out = []
    for e in _entries():
        L = e.algebra
        out.append(_check("complex", f"d2.d3=0 {e.key}", True, (d2_matrix(L) @ d3_matrix(L)).is_zero()))
        out.append(_check("complex", f"blocked=unblocked {e.key}", True,
                          multiplier_total_unblocked(L) == _mult(L)))
        for what, ok in cover_postconditions(L).items():
            out.append(_check("stem", f"{what} {e.key}", True, ok))
    for n, expected in [(1, GradedDim(1, 1)), (2, GradedDim(4, 3))]:
        W = stem_cover(heisenberg_odd(n)).kernel
        out.append(_check("thm3.7", f"cover kernel H_{n}", str(expected), str(W.dims)))
    return out


def run_all() -> Report:
    results = (check_multiplier_tables() + check_classification_s_values()
               + check_direct_sum_additivity() + check_bounds()
               + check_structure_theorems() + check_covers_and_complex())
    return Report(tuple(sorted(results, key=lambda r: r.id)))

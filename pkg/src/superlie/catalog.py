"""Named nilpotent Lie superalgebras of small dimension.

Keys:

* ``H(m,n)`` Heisenberg superalgebra with even center, dims (2m+1 | n)
* ``H_n`` Heisenberg superalgebra with odd center, dims (n | n+1)
* ``A(m|n)`` abelian
* ``L_{..}^..`` the algebras of the low-dimensional classification
* ``X+Y`` direct sum of any two keys, e.g. ``H(0,1)+A(1|0)``

Parameterized families take rationals after ``@``:
``L_{2,2}^{a,b}@1/2,1/2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exactlin import as_rational
from .superalg import LieSuperAlgebra, direct_sum


class UnknownAlgebraError(KeyError):
    pass


def heisenberg_even(m: int, n: int) -> LieSuperAlgebra:
    """H(m,n): [x_i, x_{m+i}] = z, [y_j, y_j] = z."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("H(m,n) needs m, n >= 0 and m + n >= 1")
    even = [f"x{i}" for i in range(1, 2 * m + 1)] + ["z"]
    odd = [f"y{j}" for j in range(1, n + 1)]
    brackets = {(f"x{i}", f"x{m + i}"): "z" for i in range(1, m + 1)}
    brackets.update({(f"y{j}", f"y{j}"): "z" for j in range(1, n + 1)})
    return LieSuperAlgebra(even, odd, brackets, name=f"H({m},{n})")


def heisenberg_odd(n: int) -> LieSuperAlgebra:
    """H_n: [x_i, y_i] = z with z odd."""
    if n < 1:
        raise ValueError("H_n needs n >= 1")
    even = [f"x{i}" for i in range(1, n + 1)]
    odd = [f"y{i}" for i in range(1, n + 1)] + ["z"]
    brackets = {(f"x{i}", f"y{i}"): "z" for i in range(1, n + 1)}
    return LieSuperAlgebra(even, odd, brackets, name=f"H_{n}")


def abelian(m: int, n: int) -> LieSuperAlgebra:
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    return LieSuperAlgebra([f"a{i}" for i in range(1, m + 1)], [f"b{i}" for i in range(1, n + 1)],
                           name=f"A({m}|{n})")


def _lin(**coeffs):
    return {k: v for k, v in coeffs.items() if v}


# key -> (even basis, odd basis, arity, bracket builder)
_FAMILIES: dict[str, tuple[list[str], list[str], int, Callable]] = {
    "L_{2,2}^1": (["x0", "y0"], ["x1", "y1"], 0, lambda: {
        ("y0", "y1"): "x1", ("y1", "y1"): "x0"}),
    "L_{2,2}^{a,b}": (["x0", "y0"], ["x1", "y1"], 2, lambda a, b: {
        ("x1", "x1"): "x0", ("y1", "y1"): "y0", ("x1", "y1"): _lin(x0=a, y0=b)}),
    "L_{2,2}^2": (["x0", "y0"], ["x1", "y1"], 0, lambda: {
        ("y0", "x1"): "y1", ("x1", "x1"): "x0"}),
    "L_{1,3}^1": (["x0"], ["x1", "y1", "z1"], 0, lambda: {
        ("x0", "x1"): "y1", ("x0", "y1"): "z1"}),
    "L_{4,0}": (["x0", "y0", "z0", "w0"], [], 0, lambda: {
        ("x0", "y0"): "z0", ("y0", "z0"): "w0"}),
    "L_{5,0}^1": (["x0", "y0", "z0", "v0", "w0"], [], 0, lambda: {
        ("x0", "y0"): "z0", ("x0", "z0"): "v0", ("y0", "w0"): "v0"}),
    "L_{4,1}^1": (["x0", "y0", "z0", "w0"], ["x1"], 0, lambda: {
        ("w0", "z0"): "y0", ("x1", "x1"): "x0", ("y0", "w0"): "x0"}),
    "L_{4,1}^2": (["x0", "y0", "z0", "w0"], ["x1"], 0, lambda: {
        ("x0", "y0"): "z0", ("w0", "y0"): "x0", ("x1", "x1"): "z0"}),
    "L_{5,0}^2": (["x0", "y0", "z0", "v0", "w0"], [], 0, lambda: {
        ("x0", "y0"): "v0", ("y0", "z0"): "w0"}),
    # z0 even, as in the classification argument for this case
    "L_{3,2}^1": (["x0", "y0", "z0"], ["x1", "y1"], 0, lambda: {
        ("y0", "z0"): "x0", ("y0", "y1"): "x1"}),
    "L_{2,3}^1": (["x0", "y0"], ["x1", "y1", "z1"], 0, lambda: {
        ("x0", "y1"): "x1", ("y1", "y1"): "y0", ("z1", "z1"): "y0"}),
    "L_{2,3}^{a,b}": (["x0", "y0"], ["x1", "y1", "z1"], 2, lambda a, b: {
        ("x1", "x1"): "x0", ("y1", "y1"): "y0", ("z1", "z1"): _lin(x0=a, y0=b)}),
    "L_{2,3}^{d,g}": (["x0", "y0"], ["x1", "y1", "z1"], 2, lambda d, g: {
        ("x1", "x1"): "x0", ("y1", "y1"): "y0", ("x1", "z1"): _lin(x0=d, y0=g)}),
    "L_{1,4}^1": (["x0"], ["x1", "y1", "z1", "v1"], 0, lambda: {
        ("x0", "y1"): "x1", ("x0", "v1"): "z1"}),
}

DEFAULT_PARAMS: dict[str, tuple[Fraction, ...]] = {
    "L_{2,2}^{a,b}": (Fraction(1), Fraction(1)),
    "L_{2,3}^{a,b}": (Fraction(1), Fraction(1)),
    "L_{2,3}^{d,g}": (Fraction(1), Fraction(1)),
}

FAMILY_KEYS = tuple(_FAMILIES)


@dataclass(frozen=True)
class Expected:
    citation: str
    multiplier_total: int | None = None
    multiplier_graded: tuple[int, int] | None = None
    s_value: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    params: tuple[Fraction, ...]
    algebra: LieSuperAlgebra = field(repr=False)
    expected: Expected | None = None
    regime: str | None = None


def _fmt_params(params: Sequence[Fraction]) -> str:
    return ",".join(str(p) for p in params)


def named(key: str, params: Sequence = ()) -> CatalogEntry:
    """One of the classified algebras, with published expectations attached when known."""
    if key not in _FAMILIES:
        raise UnknownAlgebraError(f"unknown catalog key {key!r}")
    even, odd, arity, build = _FAMILIES[key]
    params = tuple(as_rational(p) for p in params)
    if not params and arity:
        params = DEFAULT_PARAMS[key]
    if len(params) != arity:
        raise ValueError(f"{key} takes {arity} parameter(s), got {len(params)}")
    label = f"{key}@{_fmt_params(params)}" if arity else key
    alg = LieSuperAlgebra(even, odd, build(*params), name=label)
    regime = None
    if key == "L_{2,2}^{a,b}":
        regime = "ab=1/4" if params[0] * params[1] == Fraction(1, 4) else "ab!=1/4"
    return CatalogEntry(label, params, alg, EXPECTED.get(key), regime)


_H_EVEN = re.compile(r"^H\((\d+),(\d+)\)$")
_H_ODD = re.compile(r"^H_(\d+)$")
_ABELIAN = re.compile(r"^A\((\d+)\|(\d+)\)$")


def _split_sum(key: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in key:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def algebra_from_key(key: str) -> LieSuperAlgebra:
    """Resolve any catalog-style key (including ``X+Y`` sums and ``@params``)."""
    key = key.replace(" ", "").replace("⊕", "+")
    parts = _split_sum(key)
    if len(parts) > 1:
        alg = algebra_from_key(parts[0])
        for p in parts[1:]:
            alg = direct_sum(alg, algebra_from_key(p))
        alg.name = key
        return alg
    if m := _H_EVEN.match(key):
        return heisenberg_even(int(m[1]), int(m[2]))
    if m := _H_ODD.match(key):
        return heisenberg_odd(int(m[1]))
    if m := _ABELIAN.match(key):
        return abelian(int(m[1]), int(m[2]))
    base, _, tail = key.partition("@")
    params = [p for p in tail.split(",") if p] if tail else []
    try:
        return named(base, params).algebra
    except ValueError as exc:
        raise UnknownAlgebraError(str(exc)) from None


# Multiplier values and s-values asserted by the classification.
T31 = "Thm 3.1: 'equality holds if and only if $L$ is abelian'"
T35 = "Thm 3.5: '2m^2-m-1+2mn+n(n+1)/2'"
T37 = "Thm 3.7: '2n^{2}-1' / 'dim $W=(n^{2} \\mid n^{2}-1)$'"
T41 = "Thm 4.1: 'Moreover,' list"
T42 = "Thm 4.2: 'Moreover,' list"
T43 = "Thm 4.3: 'Moreover,' list"
T45 = "Thm 4.5: 'Moreover, $\\dim \\mathcal{M}(L_{5,0}^{1})=4$'"
T46 = "Thm 4.6: 'Moreover,' list"
T49 = "Thm 4.9: 'Then $s(L) =1$ if and only if'"
T410 = "Thm 4.10: 'Then $s(L) = 2$ if and only if'"
S0 = "Intro: 'Moreover $s(L)=0$ if and only if'"

EXPECTED: dict[str, Expected] = {
    "L_{2,2}^1": Expected(T42, 2),
    "L_{2,2}^{a,b}": Expected(T42, 1),
    "L_{2,2}^2": Expected(T43, 2),
    "L_{1,3}^1": Expected(T43, 3),
    "L_{4,0}": Expected(T43 + "; " + T410, 2, s_value=2),
    "L_{5,0}^1": Expected(T45, 4),
    "L_{4,1}^1": Expected(T45, 4),
    "L_{4,1}^2": Expected(T45, 4),
    "L_{5,0}^2": Expected(T46 + "; " + T49, 6, s_value=1),
    "L_{3,2}^1": Expected(T46, 6),
    "L_{2,3}^1": Expected(T46, 4),
    "L_{2,3}^{a,b}": Expected(T46, 4),
    "L_{2,3}^{d,g}": Expected(T46, 4),
    "L_{1,4}^1": Expected(T46, 6),
}

_BASE_EXPECTED: dict[str, Expected] = {
    "H(0,1)": Expected(T41, 0),
    "H(1,0)": Expected(T41 + "; " + S0, 2, s_value=0),
    "H(0,2)": Expected(T41 + "; " + T410, 2, s_value=2),
    "H(1,1)": Expected(T43 + "; " + T410, 3, s_value=2),
    "H(0,3)": Expected(T43 + "; " + T410, 5, s_value=2),
    "H(2,0)": Expected(T35 + "; " + T410, 5, s_value=2),
    "H(1,2)": Expected(T35 + "; " + T410, 7, s_value=2),
    "H_1": Expected(T41 + "; " + T37 + "; " + T410, 2, (1, 1), s_value=2),
    "H_2": Expected(T37, 7, (4, 3)),
    "H_3": Expected(T37, 17, (9, 8)),
    "H(0,1)+A(1|0)": Expected(T41 + "; " + T410, 1, s_value=2),
    "H(0,1)+A(0|1)": Expected(T41 + "; " + T410, 2, s_value=2),
    "H(1,0)+A(1|0)": Expected(T42 + "; " + S0, 4, s_value=0),
    "H(1,0)+A(0|1)": Expected(T42 + "; " + S0, 5, s_value=0),
    "H(0,2)+A(1|0)": Expected(T42 + "; " + T410, 4, s_value=2),
    "H_1+A(1|0)": Expected(T42 + "; " + T410, 4, s_value=2),
    "L_{5,0}^2+A(1|0)": Expected(T410, s_value=2),
    "L_{5,0}^2+A(0|1)": Expected(T410, s_value=2),
}

_BASE_ORDER = ["H(0,1)", "H(1,0)", "H(0,2)", "H(1,1)", "H(0,3)", "H(2,0)", "H(1,2)",
               "H_1", "H_2", "H_3",
               "H(0,1)+A(1|0)", "H(0,1)+A(0|1)", "H(1,0)+A(1|0)", "H(1,0)+A(0|1)",
               "H(0,2)+A(1|0)", "H_1+A(1|0)", "L_{5,0}^2+A(1|0)", "L_{5,0}^2+A(0|1)"]

_FAMILY_INSTANCES: list[tuple[str, tuple]] = [
    ("L_{2,2}^1", ()),
    ("L_{2,2}^{a,b}", (Fraction(1, 2), Fraction(1, 2))),
    ("L_{2,2}^{a,b}", (Fraction(1), Fraction(1))),
    ("L_{2,2}^2", ()),
    ("L_{1,3}^1", ()),
    ("L_{4,0}", ()),
    ("L_{5,0}^1", ()),
    ("L_{4,1}^1", ()),
    ("L_{4,1}^2", ()),
    ("L_{5,0}^2", ()),
    ("L_{3,2}^1", ()),
    ("L_{2,3}^1", ()),
    ("L_{2,3}^{a,b}", (Fraction(1), Fraction(1))),
    ("L_{2,3}^{d,g}", (Fraction(1), Fraction(1))),
    ("L_{1,4}^1", ()),
]


def all_entries() -> list[CatalogEntry]:
    """Deterministic list of every algebra the verification harness uses."""
    out = []
    for key in _BASE_ORDER:
        alg = algebra_from_key(key)
        alg.name = key
        out.append(CatalogEntry(key, (), alg, _BASE_EXPECTED[key]))
    out.extend(named(k, p) for k, p in _FAMILY_INSTANCES)
    return out


def entry(key: str) -> CatalogEntry:
    """Catalog entry by key; unlisted but well-formed keys get no expectations."""
    for e in all_entries():
        if e.key == key:
            return e
    base = key.partition("@")[0]
    if base in _FAMILIES and "+" not in key:
        params = key.partition("@")[2]
        return named(base, [p for p in params.split(",") if p])
    return CatalogEntry(key, (), algebra_from_key(key))

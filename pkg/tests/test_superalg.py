import pytest

from superlie.catalog import abelian, algebra_from_key, heisenberg_even, heisenberg_odd, named
from superlie.superalg import (
    AlgebraFormatError,
    GradedDim,
    LieSuperAlgebra,
    NotNilpotentError,
    Parity,
    SkewSymmetryError,
    Subspace,
    bracket,
    center,
    derived_subalgebra,
    direct_sum,
    is_ideal,
    is_nilpotent,
    lower_central_series,
    nilpotency_class,
    quotient,
    structure_equal,
    upper_central_series,
    validate,
)


def dims(series):
    return [s.dims for s in series]


def test_parity_and_graded_dim():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert Parity.EVEN + Parity.ODD == Parity.ODD
    assert GradedDim(2, 3).total == 5
    assert str(GradedDim(4, 3)) == "(4 | 3)"


def test_duplicate_names_rejected():
    with pytest.raises(AlgebraFormatError):
        LieSuperAlgebra(["x", "y"], ["x"])


def test_even_square_must_vanish():
    with pytest.raises(SkewSymmetryError):
        LieSuperAlgebra(["x"], [], {("x", "x"): {"x": 1}})


def test_both_orientations_must_agree():
    ok = LieSuperAlgebra(["x", "y", "z"], [], {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}})
    assert validate(ok).ok
    with pytest.raises(SkewSymmetryError):
        LieSuperAlgebra(["x", "y", "z"], [], {("x", "y"): {"z": 1}, ("y", "x"): {"z": 1}})


def test_validation_examples():
    assert validate(heisenberg_even(1, 0)).ok
    bad = LieSuperAlgebra(["x"], ["y"], {("y", "y"): {"x": 1}, ("x", "y"): {"y": 1}})
    kinds = {(v.kind, v.witness) for v in validate(bad).violations}
    assert ("jacobi", ("y", "y", "y")) in kinds
    graded = LieSuperAlgebra([], ["y"], {("y", "y"): {"y": 1}})
    assert any(v.kind == "grading" for v in validate(graded).violations)


def test_bracket_examples():
    H = heisenberg_even(1, 0)
    assert bracket(H, H.basis_vector("x1"), H.basis_vector("x2")) == H.basis_vector("z")
    assert bracket(H, H.basis_vector("x2"), H.basis_vector("x1")) == tuple(-c for c in H.basis_vector("z"))
    H1 = heisenberg_odd(1)
    assert bracket(H1, H1.basis_vector("x1"), H1.basis_vector("y1")) == H1.basis_vector("z")
    u = H.vector({"x1": 2, "x2": -3})
    assert not any(bracket(H, u, u))


def test_odd_skew_symmetry_sign():
    H = heisenberg_even(0, 1)
    y = H.basis_vector("y1")
    assert bracket(H, y, y) == H.basis_vector("z")


def test_derived_and_center_examples():
    assert derived_subalgebra(heisenberg_even(1, 0)).dims == GradedDim(1, 0)
    assert derived_subalgebra(abelian(3, 2)).dims == GradedDim(0, 0)
    L = named("L_{5,0}^2").algebra
    D = derived_subalgebra(L)
    assert D.dims == GradedDim(2, 0)
    assert D.same_as(Subspace.span(L, [L.basis_vector("v0"), L.basis_vector("w0")]))
    assert center(heisenberg_even(2, 3)).dims == GradedDim(1, 0)
    assert center(heisenberg_odd(3)).dims == GradedDim(0, 1)
    assert derived_subalgebra(heisenberg_odd(2)).dims == GradedDim(0, 1)
    assert center(abelian(2, 3)).dims == GradedDim(2, 3)


def test_central_series_examples():
    assert dims(lower_central_series(heisenberg_even(1, 0))) == [GradedDim(3, 0), GradedDim(1, 0), GradedDim(0, 0)]
    L40 = named("L_{4,0}").algebra
    assert dims(lower_central_series(L40)) == [GradedDim(4, 0), GradedDim(2, 0), GradedDim(1, 0), GradedDim(0, 0)]
    assert nilpotency_class(L40) == 3
    assert dims(lower_central_series(abelian(2, 2))) == [GradedDim(2, 2), GradedDim(0, 0)]
    assert dims(upper_central_series(heisenberg_even(1, 0))) == [GradedDim(0, 0), GradedDim(1, 0), GradedDim(3, 0)]
    assert dims(upper_central_series(abelian(1, 1))) == [GradedDim(0, 0), GradedDim(1, 1)]
    assert upper_central_series(named("L_{5,0}^1").algebra)[1].dims == GradedDim(1, 0)
    assert nilpotency_class(abelian(0, 3)) == 1
    assert nilpotency_class(abelian(0, 0)) == 0


def test_non_nilpotent():
    L = LieSuperAlgebra(["x", "y"], [], {("x", "y"): {"y": 1}})
    assert validate(L).ok
    assert not is_nilpotent(L)
    with pytest.raises(NotNilpotentError):
        nilpotency_class(L)


def test_quotients():
    L = named("L_{5,0}^2").algebra
    Q = quotient(L, Subspace.span(L, [L.basis_vector("v0")]))
    assert Q.dims == GradedDim(4, 0)
    assert derived_subalgebra(Q).dims == GradedDim(1, 0)
    assert center(Q).dims == GradedDim(2, 0)  # H(1,0) + A(1|0) pattern
    H = heisenberg_even(0, 1)
    assert structure_equal(quotient(H, center(H)), abelian(0, 1))
    A = abelian(2, 1)
    assert structure_equal(quotient(A, Subspace.span(A, [A.basis_vector("a1")])), abelian(1, 1))


def test_quotient_needs_ideal():
    L = heisenberg_even(1, 0)
    I = Subspace.span(L, [L.basis_vector("x1")])
    ok, witness = is_ideal(I)
    assert not ok and witness is not None
    with pytest.raises(ValueError):
        quotient(L, I)


def test_direct_sum():
    S = direct_sum(heisenberg_even(0, 1), abelian(1, 0))
    assert S.dims == GradedDim(2, 1)
    assert validate(S).ok
    A, B = heisenberg_odd(1), named("L_{4,0}").algebra
    assert derived_subalgebra(direct_sum(A, B)).dims == derived_subalgebra(A).dims + derived_subalgebra(B).dims
    assert structure_equal(abelian(1, 1), direct_sum(abelian(1, 0), abelian(0, 1)))


def test_structure_equal():
    assert structure_equal(abelian(2, 2), abelian(2, 2))
    assert not structure_equal(heisenberg_even(1, 0), abelian(3, 0))


def test_subspace_rejects_inhomogeneous():
    L = heisenberg_even(0, 1)
    with pytest.raises(ValueError):
        Subspace.span(L, [L.vector({"z": 1, "y1": 1})])


def test_sum_key_matches_explicit_sum():
    assert structure_equal(algebra_from_key("H(1,0)+A(0|1)"), direct_sum(heisenberg_even(1, 0), abelian(0, 1)))

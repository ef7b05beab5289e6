from fractions import Fraction

import pytest

from superlie.catalog import (
    UnknownAlgebraError,
    abelian,
    algebra_from_key,
    all_entries,
    entry,
    heisenberg_even,
    heisenberg_odd,
    named,
)
from superlie.superalg import GradedDim, center, derived_subalgebra, is_nilpotent, nilpotency_class, validate

ENTRIES = all_entries()


def test_heisenberg_constructors():
    H = heisenberg_even(1, 0)
    assert H.dims == GradedDim(3, 0)
    assert len(H.structure) == 1
    H01 = heisenberg_even(0, 1)
    assert H01.dims == GradedDim(1, 1)
    assert H01.basis_bracket(H01.index("y1"), H01.index("y1")) == H01.basis_vector("z")
    assert heisenberg_odd(1).dims == GradedDim(1, 2)


def test_abelian_constructor():
    assert abelian(0, 0).dim == 0
    A = abelian(2, 1)
    assert validate(A).ok and nilpotency_class(A) <= 1
    assert derived_subalgebra(abelian(5, 5)).dims == GradedDim(0, 0)


def test_named_examples():
    assert named("L_{5,0}^2").expected.multiplier_total == 6
    e = named("L_{2,2}^{a,b}", ["1/2", "1/2"])
    assert e.regime == "ab=1/4" and e.expected.multiplier_total == 1
    assert named("L_{2,2}^{a,b}", [1, 1]).regime == "ab!=1/4"
    assert named("L_{4,0}").expected.multiplier_total == 2
    assert named("L_{2,3}^{a,b}").params == (Fraction(1), Fraction(1))


def test_unknown_and_bad_arity():
    with pytest.raises(UnknownAlgebraError):
        named("L_{9,9}")
    with pytest.raises(ValueError):
        named("L_{2,2}^{a,b}", [1])
    with pytest.raises(UnknownAlgebraError):
        algebra_from_key("nonsense")


def test_list_contents():
    keys = {e.key for e in ENTRIES}
    assert entry("H(0,1)").expected.multiplier_total == 0
    assert entry("H(0,1)+A(0|1)").expected.multiplier_total == 2
    assert {"L_{2,2}^{a,b}@1/2,1/2", "L_{2,2}^{a,b}@1,1", "L_{1,4}^1", "H_3"} <= keys
    assert len(keys) == len(ENTRIES)


@pytest.mark.parametrize("e", ENTRIES, ids=[e.key for e in ENTRIES])
def test_every_entry_validates_and_is_nilpotent(e):
    assert validate(e.algebra).ok
    assert is_nilpotent(e.algebra)
    if e.expected is not None:
        assert e.expected.citation


def test_documented_structure():
    assert center(named("L_{5,0}^1").algebra).dims == GradedDim(1, 0)
    assert center(named("L_{4,0}").algebra).dims == GradedDim(1, 0)
    # two dimensional center: the classification text says otherwise, see the notes
    assert center(named("L_{2,2}^2").algebra).dims == GradedDim(1, 1)


def test_key_parsing():
    assert algebra_from_key("H(1,0) ⊕ A(0|1)").dims == GradedDim(3, 1)
    assert algebra_from_key("L_{2,2}^{a,b}@1/3,3").name == "L_{2,2}^{a,b}@1/3,3"
    assert algebra_from_key("A(2|1)+A(0|1)").dims == GradedDim(2, 2)

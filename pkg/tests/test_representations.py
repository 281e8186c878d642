import pytest

from qhopf.errors import StructureValidationError
from qhopf.graded import TensorElement
from qhopf.representations import (
    apply_rep_on_leg,
    regular_representation,
    supertrace,
    validate_representation,
)


def test_regular_representation_valid(e1, e3):
    for entry in (e1, e3):
        A = entry.structure.algebra
        reg = regular_representation(A)  # validates on construction
        assert reg.dim == A.dim


def test_corrupted_matrix_rejected(e3):
    A = e3.structure.algebra
    reg = e3.representations["regular"]
    matrices = [[row[:] for row in m] for m in reg.matrices]
    matrices[1][0][0] = matrices[1][0][0] + A.field.one()
    with pytest.raises(StructureValidationError):
        validate_representation(matrices, reg.carrier_parity, A)


def test_grading_violation_rejected(e4):
    A = e4.structure.algebra
    one, zero = A.field.one(), A.field.zero()
    # theta is odd, so its matrix may not have an even-to-even entry
    matrices = [[[one, zero], [zero, one]],
                [[one, zero], [zero, zero]]]
    with pytest.raises(StructureValidationError):
        validate_representation(matrices, (0, 1), A)


def test_trivial_rep_collapses_like_counit(e2):
    H = e2.structure
    triv = e2.representations["trivial"]
    end = triv.matrix_algebra()
    collapsed = apply_rep_on_leg(H.phi, 1, triv)
    # a 1-dim trivial leg carries exactly the counit values
    expected = H.phi.apply_maps([(1, H.counit)])
    assert {(k[0], k[2]): v for k, v in collapsed.coeffs.items()} == \
        dict(expected.coeffs)


def test_rep_on_leg_entrywise(e1):
    H = e1.structure
    reg = e1.representations["regular"]
    mixed = apply_rep_on_leg(H.r, 1, reg)
    # cross-check every entry against the matrix of the original leg
    d = reg.dim
    A = H.algebra
    expected = {}
    for (i, j), c in H.r.coeffs.items():
        m = reg.matrices[j]
        for p in range(d):
            for q in range(d):
                if not m[p][q].is_zero():
                    key = (i, p * d + q)
                    expected[key] = expected.get(key, A.field.zero()) + c * m[p][q]
    assert mixed.coeffs == {k: v for k, v in expected.items() if not v.is_zero()}


def test_rep_on_unit_tensor(e1):
    H = e1.structure
    reg = e1.representations["regular"]
    mixed = apply_rep_on_leg(H.unit_tensor(2), 1, reg)
    end = reg.matrix_algebra()
    assert mixed == TensorElement.unit((H.algebra, end))


def test_supertrace_linearity(e4):
    reg = e4.representations["regular"]
    H = e4.structure
    A = H.algebra
    x, y = A.basis_element(0), A.basis_element(1)
    lhs = reg.supertrace_of(x + y.scale(3))
    assert lhs == reg.supertrace_of(x) + A.field.from_int(3) * reg.supertrace_of(y)

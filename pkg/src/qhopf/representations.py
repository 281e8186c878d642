"""Even graded representations, supertraces, and representation legs.

A representation stores one matrix of scalars per algebra basis element,
acting on a graded carrier.  Only even representations are admitted: the
matrix of a parity-p basis element maps parity-r vectors into the
parity-(r+p) component.  That is exactly the condition under which the
supertrace is graded-cyclic.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .errors import StructureValidationError
from .graded import (
    AlgebraElement,
    BaseAlgebra,
    LinearMap,
    MatrixSpaceAlgebra,
    TensorElement,
)
from .scalars import FieldDescriptor, Scalar

Matrix = List[List[Scalar]]


def supertrace(matrix: Matrix, carrier_parity: Sequence[int]) -> Scalar:
    """sum_i (-1)^{parity(v_i)} M[i][i]."""
    if len(matrix) != len(carrier_parity) or any(len(r) != len(matrix) for r in matrix):
        raise StructureValidationError("supertrace needs a square matrix on the carrier")
    field = matrix[0][0].field
    acc = field.zero()
    for i, p in enumerate(carrier_parity):
        acc = acc - matrix[i][i] if p else acc + matrix[i][i]
    return acc


class Representation:
    """An even algebra homomorphism into matrices over a graded carrier."""

    def __init__(self, algebra: BaseAlgebra, carrier_parity: Sequence[int],
                 matrices: Sequence[Matrix], name: str = "", validate: bool = True):
        self.algebra = algebra
        self.carrier_parity = tuple(carrier_parity)
        self.matrices = [
            [row[:] for row in m] for m in matrices]
        self.name = name
        self._matrix_algebra: Optional[MatrixSpaceAlgebra] = None
        self._leg_map: Optional[LinearMap] = None
        if validate:
            self._validate()

    @property
    def dim(self) -> int:
        return len(self.carrier_parity)

    @property
    def field(self) -> FieldDescriptor:
        return self.algebra.field

    def _validate(self):
        A, d = self.algebra, self.dim
        if len(self.matrices) != A.dim:
            raise StructureValidationError("one matrix per basis element required")
        for idx, m in enumerate(self.matrices):
            if len(m) != d or any(len(row) != d for row in m):
                raise StructureValidationError(
                    f"matrix for {A.labels[idx]} is not {d}x{d}")
            p = A.parity[idx]
            for i in range(d):
                for j in range(d):
                    if not m[i][j].is_zero() and \
                       (self.carrier_parity[i] - self.carrier_parity[j]) % 2 != p:
                        raise StructureValidationError(
                            f"grading violation in the matrix of {A.labels[idx]}")
        ident = self._identity()
        if self.matrix_of(A.unit()) != ident:
            raise StructureValidationError("the unit must act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = _mat_mul(self.matrices[i], self.matrices[j], self.field)
                if prod != self.matrix_of(A.basis_element(i) * A.basis_element(j)):
                    raise StructureValidationError(
                        "not a homomorphism at "
                        f"({A.labels[i]}, {A.labels[j]})")

    def _identity(self) -> Matrix:
        z, o = self.field.zero(), self.field.one()
        return [[o if i == j else z for j in range(self.dim)] for i in range(self.dim)]

    def matrix_of(self, x: AlgebraElement) -> Matrix:
        d, z = self.dim, self.field.zero()
        out = [[z for _ in range(d)] for _ in range(d)]
        for idx, c in x.coeffs.items():
            m = self.matrices[idx]
            for i in range(d):
                for j in range(d):
                    if not m[i][j].is_zero():
                        out[i][j] = out[i][j] + c * m[i][j]
        return out

    def supertrace_of(self, x: AlgebraElement) -> Scalar:
        return supertrace(self.matrix_of(x), self.carrier_parity)

    # -- representation legs on tensors --------------------------------------

    def matrix_algebra(self) -> MatrixSpaceAlgebra:
        if self._matrix_algebra is None:
            self._matrix_algebra = MatrixSpaceAlgebra(
                self.carrier_parity, self.field, name=f"End({self.name or 'V'})")
        return self._matrix_algebra

    def matrix_as_element(self, m: Matrix) -> AlgebraElement:
        end = self.matrix_algebra()
        d = self.dim
        return AlgebraElement(end, {i * d + j: m[i][j]
                                    for i in range(d) for j in range(d)
                                    if not m[i][j].is_zero()})

    def leg_map(self) -> LinearMap:
        """The representation as a parity-preserving map into End(V)."""
        if self._leg_map is None:
            end = self.matrix_algebra()
            images = [TensorElement.of(self.matrix_as_element(m))
                      for m in self.matrices]
            self._leg_map = LinearMap(self.algebra, (end,), images,
                                      name=f"rep:{self.name or 'V'}")
        return self._leg_map

    def element_as_matrix(self, x: AlgebraElement) -> Matrix:
        """Inverse of matrix_as_element for elements of End(V)."""
        d, z = self.dim, self.field.zero()
        out = [[z for _ in range(d)] for _ in range(d)]
        for idx, c in x.coeffs.items():
            i, j = divmod(idx, d)
            out[i][j] = c
        return out

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra == other.algebra
                and self.carrier_parity == other.carrier_parity
                and self.matrices == other.matrices)

    def __repr__(self):
        return f"Representation({self.name or '?'}, dim={self.dim})"


def apply_rep_on_leg(x: TensorElement, leg: int, rep: Representation) -> TensorElement:
    """Replace a symbolic tensor leg by its matrix image under the
    representation; the leg then lives over End(V) with matrix units as basis."""
    return x.apply_maps([(leg, rep.leg_map())])


def _mat_mul(a: Matrix, b: Matrix, field: FieldDescriptor) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[field.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c.is_zero():
                continue
            for j in range(m):
                if not b[t][j].is_zero():
                    out[i][j] = out[i][j] + c * b[t][j]
    return out


def validate_representation(matrices: Sequence[Matrix],
                            carrier_parity: Sequence[int],
                            algebra: BaseAlgebra, name: str = "") -> Representation:
    """Build a representation, verifying the homomorphism and grading rules."""
    return Representation(algebra, carrier_parity, matrices, name=name, validate=True)


def regular_representation(algebra: BaseAlgebra, name: str = "regular") -> Representation:
    """Left multiplication on the algebra itself; always even and faithful
    to the structure constants."""
    d, z = algebra.dim, algebra.field.zero()
    matrices = []
    for i in range(d):
        m = [[z for _ in range(d)] for _ in range(d)]
        for j in range(d):
            for k, c in algebra.mul_basis(i, j).items():
                m[k][j] = c
        matrices.append(m)
    return Representation(algebra, algebra.parity, matrices, name=name)


def trivial_representation(counit: LinearMap, name: str = "trivial") -> Representation:
    """The one-dimensional representation given by the counit."""
    algebra = counit.source
    matrices = [[[counit(algebra.basis_element(i))]] for i in range(algebra.dim)]
    return Representation(algebra, (0,), matrices, name=name)

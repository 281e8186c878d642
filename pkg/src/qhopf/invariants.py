"""Adjoint and anti-adjoint actions, their invariants, invariant forms,
and the module-morphism construction.

The adjoint action of a on b is  sum a_(1) b S(a_(2)) (-1)^{[b][a_(2)]},
the anti-adjoint action is       sum S(a_(1)) b a_(2) (-1)^{[b][a_(1)]};
signs depend on the parity of b, so inhomogeneous b is split into its
even and odd parts and all solution spaces are computed per parity,
returned with deterministic echelon-form bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from .errors import NotInvariantError, OddElementError
from .graded import AlgebraElement
from .linalg import nullspace
from .quasihopf import QuasiHopfStructure
from .representations import Matrix, Representation, _mat_mul
from .scalars import Scalar


@dataclass
class LinearForm:
    """A linear form given by its values on the basis."""

    structure: QuasiHopfStructure
    values: Tuple[Scalar, ...]
    name: str = ""

    def __call__(self, x: AlgebraElement) -> Scalar:
        acc = self.structure.algebra.field.zero()
        for i, c in x.coeffs.items():
            acc = acc + c * self.values[i]
        return acc

    def is_even(self) -> bool:
        par = self.structure.algebra.parity
        return all(self.values[i].is_zero() for i in range(len(self.values))
                   if par[i] == 1)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.values == other.values


@dataclass
class GradedSubspace:
    """Homogeneous spanning elements, split by parity."""

    even: List[AlgebraElement] = dataclass_field(default_factory=list)
    odd: List[AlgebraElement] = dataclass_field(default_factory=list)

    def vectors(self) -> List[AlgebraElement]:
        return list(self.even) + list(self.odd)

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)


# ---------------------------------------------------------------------------
# actions


def adjoint_action(H: QuasiHopfStructure, a: AlgebraElement,
                   b: AlgebraElement) -> AlgebraElement:
    A = H.algebra
    acc = A.zero()
    for pb, bpart in b.homogeneous_parts():
        for i, ca in a.coeffs.items():
            for (k1, k2), d in H.coproduct.on_basis(i).coeffs.items():
                term = (A.basis_element(k1) * bpart * H.s_basis(k2)).scale(ca * d)
                if pb * A.parity[k2] % 2:
                    term = -term
                acc = acc + term
    return acc


def anti_adjoint_action(H: QuasiHopfStructure, a: AlgebraElement,
                        b: AlgebraElement) -> AlgebraElement:
    A = H.algebra
    acc = A.zero()
    for pb, bpart in b.homogeneous_parts():
        for i, ca in a.coeffs.items():
            for (k1, k2), d in H.coproduct.on_basis(i).coeffs.items():
                term = (H.s_basis(k1) * bpart * A.basis_element(k2)).scale(ca * d)
                if pb * A.parity[k1] % 2:
                    term = -term
                acc = acc + term
    return acc


def is_invariant_element(H: QuasiHopfStructure, c: AlgebraElement) -> bool:
    A = H.algebra
    return all((adjoint_action(H, A.basis_element(i), c)
                - c.scale(H.eps(A.basis_element(i)))).is_zero()
               for i in range(A.dim))


def is_pseudo_invariant_element(H: QuasiHopfStructure, c: AlgebraElement) -> bool:
    A = H.algebra
    return all((anti_adjoint_action(H, A.basis_element(i), c)
                - c.scale(H.eps(A.basis_element(i)))).is_zero()
               for i in range(A.dim))


# ---------------------------------------------------------------------------
# solution spaces


def _graded_nullspace(H: QuasiHopfStructure, condition) -> GradedSubspace:
    """Solve condition(basis_a_index, candidate) == 0 for all a, separately on
    the even and odd coordinates.  ``condition`` must be linear in the
    candidate element."""
    A = H.algebra
    field = A.field
    out = GradedSubspace()
    for target_parity, bucket in ((0, out.even), (1, out.odd)):
        idx = [j for j in range(A.dim) if A.parity[j] == target_parity]
        if not idx:
            continue
        rows: List[List[Scalar]] = []
        for i in range(A.dim):
            block = [[field.zero()] * len(idx) for _ in range(A.dim)]
            for t, j in enumerate(idx):
                image = condition(i, A.basis_element(j))
                for k, c in image.coeffs.items():
                    block[k][t] = c
            rows.extend(block)
        for vec in nullspace(rows, len(idx), field):
            bucket.append(AlgebraElement(
                A, {idx[t]: vec[t] for t in range(len(idx))}))
    return out


def invariant_subspace(H: QuasiHopfStructure) -> GradedSubspace:
    """Solutions of the adjoint-invariance condition; always contains beta."""
    return _graded_nullspace(
        H, lambda i, c: adjoint_action(H, H.basis_element(i), c)
        - c.scale(H.eps(H.basis_element(i))))


def pseudo_invariant_subspace(H: QuasiHopfStructure) -> GradedSubspace:
    """Solutions of the anti-adjoint-invariance condition; contains alpha."""
    return _graded_nullspace(
        H, lambda i, c: anti_adjoint_action(H, H.basis_element(i), c)
        - c.scale(H.eps(H.basis_element(i))))


def is_central(H: QuasiHopfStructure, x: AlgebraElement
               ) -> Tuple[bool, Optional[Tuple[str, AlgebraElement]]]:
    """True when x commutes with every basis element; otherwise the first
    failing commutator is the witness."""
    A = H.algebra
    for i in range(A.dim):
        b = A.basis_element(i)
        comm = x * b - b * x
        if not comm.is_zero():
            return False, (A.labels[i], comm)
    return True, None


def center(H: QuasiHopfStructure) -> GradedSubspace:
    return _graded_nullspace(
        H, lambda i, c: c * H.basis_element(i) - H.basis_element(i) * c)


# ---------------------------------------------------------------------------
# linear forms


def _form_nullspace(H: QuasiHopfStructure, action) -> List[LinearForm]:
    A = H.algebra
    field = A.field
    rows: List[List[Scalar]] = []
    for i in range(A.dim):
        eps_a = H.eps(A.basis_element(i))
        for j in range(A.dim):
            acted = action(A.basis_element(i), A.basis_element(j))
            row = [field.zero()] * A.dim
            for k, c in acted.coeffs.items():
                row[k] = row[k] + c
            row[j] = row[j] - eps_a
            rows.append(row)
    return [LinearForm(H, tuple(vec)) for vec in nullspace(rows, A.dim, field)]


def invariant_linear_forms(H: QuasiHopfStructure) -> List[LinearForm]:
    """Forms with xi(Ad a . b) = eps(a) xi(b) for all a, b."""
    return _form_nullspace(H, lambda a, b: adjoint_action(H, a, b))


def pseudo_invariant_linear_forms(H: QuasiHopfStructure) -> List[LinearForm]:
    return _form_nullspace(H, lambda a, b: anti_adjoint_action(H, a, b))


def is_invariant_form(H: QuasiHopfStructure, xi: LinearForm) -> bool:
    A = H.algebra
    for i in range(A.dim):
        eps_a = H.eps(A.basis_element(i))
        for j in range(A.dim):
            lhs = xi(adjoint_action(H, A.basis_element(i), A.basis_element(j)))
            if lhs != eps_a * xi.values[j]:
                return False
    return True


def is_pseudo_invariant_form(H: QuasiHopfStructure, xi: LinearForm) -> bool:
    A = H.algebra
    for i in range(A.dim):
        eps_a = H.eps(A.basis_element(i))
        for j in range(A.dim):
            lhs = xi(anti_adjoint_action(H, A.basis_element(i), A.basis_element(j)))
            if lhs != eps_a * xi.values[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# the module structure on linear maps V -> W


def module_action(H: QuasiHopfStructure, V: Representation, W: Representation,
                  a: AlgebraElement, f: Matrix, f_parity: int) -> Matrix:
    """(a . f)(v) = sum a_(1) f(S(a_(2)) v) (-1)^{[f][a_(2)]} as matrices."""
    A, field = H.algebra, H.algebra.field
    out = [[field.zero()] * V.dim for _ in range(W.dim)]
    for i, ca in a.coeffs.items():
        for (k1, k2), d in H.coproduct.on_basis(i).coeffs.items():
            m = _mat_mul(_mat_mul(W.matrix_of(A.basis_element(k1)), f, field),
                         V.matrix_of(H.s_basis(k2)), field)
            coeff = ca * d
            if f_parity * A.parity[k2] % 2:
                coeff = -coeff
            for p in range(W.dim):
                for q in range(V.dim):
                    if not m[p][q].is_zero():
                        out[p][q] = out[p][q] + coeff * m[p][q]
    return out


def _map_entries(V: Representation, W: Representation, parity: int):
    """Matrix positions of the given parity as a map f: V -> W."""
    return [(p, q) for p in range(W.dim) for q in range(V.dim)
            if (W.carrier_parity[p] - V.carrier_parity[q]) % 2 == parity]


def invariant_maps(H: QuasiHopfStructure, V: Representation,
                   W: Representation) -> Tuple[List[Matrix], List[Matrix]]:
    """Bases of the invariant maps in l(V, W), split as (even, odd)."""
    A, field = H.algebra, H.algebra.field
    results: List[List[Matrix]] = []
    for parity in (0, 1):
        entries = _map_entries(V, W, parity)
        if not entries:
            results.append([])
            continue
        rows: List[List[Scalar]] = []
        for i in range(A.dim):
            a = A.basis_element(i)
            eps_a = H.eps(a)
            blocks = []
            for (p0, q0) in entries:
                f = [[field.zero()] * V.dim for _ in range(W.dim)]
                f[p0][q0] = field.one()
                acted = module_action(H, V, W, a, f, parity)
                blocks.append(acted)
            for p in range(W.dim):
                for q in range(V.dim):
                    row = [blocks[t][p][q] for t in range(len(entries))]
                    for t, (p0, q0) in enumerate(entries):
                        if (p0, q0) == (p, q):
                            row[t] = row[t] - eps_a
                    rows.append(row)
        basis = []
        for vec in nullspace(rows, len(entries), field):
            f = [[field.zero()] * V.dim for _ in range(W.dim)]
            for t, (p0, q0) in enumerate(entries):
                f[p0][q0] = vec[t]
            basis.append(f)
        results.append(basis)
    return results[0], results[1]


def is_invariant_map(H: QuasiHopfStructure, V: Representation, W: Representation,
                     f: Matrix, f_parity: int) -> bool:
    A = H.algebra
    for i in range(A.dim):
        a = A.basis_element(i)
        acted = module_action(H, V, W, a, f, f_parity)
        eps_a = H.eps(a)
        for p in range(W.dim):
            for q in range(V.dim):
                if acted[p][q] != eps_a * f[p][q]:
                    return False
    return True


def module_morphism_from_invariant(f: Matrix, H: QuasiHopfStructure,
                                   V: Representation, W: Representation) -> Matrix:
    """Project an even invariant f in l(V, W) to a module homomorphism:

        ftilde(v) = sum S(X) alpha Y . f(S(Z) v)   over the coassociator.

    Verified postconditions: ftilde intertwines the two actions, recovers f
    through beta . ftilde = f, and the inverse-coassociator expression
    agrees."""
    A, field = H.algebra, H.algebra.field
    if any(not f[p][q].is_zero() and
           (W.carrier_parity[p] - V.carrier_parity[q]) % 2 == 1
           for p in range(W.dim) for q in range(V.dim)):
        raise OddElementError("odd map: the projection needs an even f")
    if not is_invariant_map(H, V, W, f, 0):
        raise NotInvariantError("not invariant under the l(V, W) action")

    out = [[field.zero()] * V.dim for _ in range(W.dim)]
    for (x, y, z), c in H.phi.coeffs.items():
        pre = W.matrix_of(H.s_basis(x) * H.alpha * A.basis_element(y))
        post = V.matrix_of(H.s_basis(z))
        m = _mat_mul(_mat_mul(pre, f, field), post, field)
        for p in range(W.dim):
            for q in range(V.dim):
                if not m[p][q].is_zero():
                    out[p][q] = out[p][q] + c * m[p][q]

    alt = [[field.zero()] * V.dim for _ in range(W.dim)]
    for (x, y, z), c in H.phi_inv.coeffs.items():
        pre = W.matrix_of(A.basis_element(x))
        post = V.matrix_of(H.s_basis(y) * H.alpha * A.basis_element(z))
        m = _mat_mul(_mat_mul(pre, f, field), post, field)
        for p in range(W.dim):
            for q in range(V.dim):
                if not m[p][q].is_zero():
                    alt[p][q] = alt[p][q] + c * m[p][q]
    if alt != out:
        raise NotInvariantError(
            "coassociator and inverse-coassociator projections disagree")

    for i in range(A.dim):
        b = A.basis_element(i)
        if _mat_mul(W.matrix_of(b), out, field) != \
           _mat_mul(out, V.matrix_of(b), field):
            raise NotInvariantError(
                f"projection does not intertwine the action of {A.labels[i]}")
    if _mat_mul(W.matrix_of(H.beta), out, field) != f:
        raise NotInvariantError("beta times the projection does not recover f")
    return out


# ---------------------------------------------------------------------------
# bilinear forms


def invariant_bilinear_forms(H: QuasiHopfStructure, V: Representation,
                             W: Representation) -> List[Matrix]:
    """Bilinear forms with  sum (a_(1) v, a_(2) w) (-1)^{[v][a_(2)]}
    = eps(a) (v, w);  returned as matrices B[i][j] = (v_i, w_j)."""
    A, field = H.algebra, H.algebra.field
    n = V.dim * W.dim
    rows: List[List[Scalar]] = []
    for idx in range(A.dim):
        a = A.basis_element(idx)
        eps_a = H.eps(a)
        for i in range(V.dim):
            for j in range(W.dim):
                row = [field.zero()] * n
                for (k1, k2), d in H.coproduct.on_basis(idx).coeffs.items():
                    mv = V.matrix_of(A.basis_element(k1))
                    mw = W.matrix_of(A.basis_element(k2))
                    coeff = d
                    if V.carrier_parity[i] * A.parity[k2] % 2:
                        coeff = -coeff
                    for p in range(V.dim):
                        if mv[p][i].is_zero():
                            continue
                        for q in range(W.dim):
                            if not mw[q][j].is_zero():
                                row[p * W.dim + q] = row[p * W.dim + q] + \
                                    coeff * mv[p][i] * mw[q][j]
                row[i * W.dim + j] = row[i * W.dim + j] - eps_a
                rows.append(row)
    out = []
    for vec in nullspace(rows, n, field):
        out.append([[vec[i * W.dim + j] for j in range(W.dim)]
                    for i in range(V.dim)])
    return out

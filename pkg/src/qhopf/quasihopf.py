"""Quasi-Hopf (super)algebra structures and the exhaustive axiom verifier.

A structure bundles a graded algebra with a coproduct, counit, antipode,
coassociator ``phi`` (with inverse), canonical elements ``alpha``/``beta``,
and an optional universal R-matrix.  Construction checks shapes only; the
mathematical axioms are checked by the ``verify_*`` functions, which return
reports with exact witnesses, never raising on a failed identity.

Axioms quantified over the whole algebra are checked on basis elements:
every identity involved is linear in the quantified element.
"""

from __future__ import annotations

import time
from typing import Callable, Dict, List, Optional, Tuple

from .errors import (
    NoRMatrixError,
    NoSolutionError,
    PostconditionError,
    StructureValidationError,
)
from .graded import (
    AlgebraElement,
    BaseAlgebra,
    GradedAlgebra,
    LinearMap,
    TensorElement,
    check_antihomomorphism,
)
from .linalg import invert, nullspace, solve_affine
from .report import AxiomCheck, AxiomReport
from .scalars import Scalar


def reindex(t: TensorElement, spec: str) -> TensorElement:
    """Leg placement by subscript string: slot i of the result carries the
    tensor's factor spec[i].  reindex(phi, "132") applies the graded twist
    to the last two legs; reindex(r, "21") is the flip of a rank-2 tensor."""
    return t.permute(tuple(int(c) - 1 for c in spec))


class QuasiHopfStructure:
    """The data (A, coproduct, counit, antipode, phi, alpha, beta [, R])."""

    def __init__(self, algebra: GradedAlgebra, coproduct: LinearMap,
                 counit: LinearMap, antipode: LinearMap,
                 phi: TensorElement, phi_inv: TensorElement,
                 alpha: Optional[AlgebraElement], beta: Optional[AlgebraElement],
                 r: Optional[TensorElement] = None,
                 r_inv: Optional[TensorElement] = None,
                 antipode_inv: Optional[LinearMap] = None,
                 name: str = ""):
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self.phi = phi
        self.phi_inv = phi_inv
        self.alpha = alpha
        self.beta = beta
        self.r = r
        self.r_inv = r_inv
        self.name = name
        self._shape_check()
        if antipode_inv is None:
            m = invert(antipode.as_matrix(), algebra.field)
            antipode_inv = None if m is None else LinearMap.from_matrix(
                algebra, m, name="antipode_inv")
        self.antipode_inv = antipode_inv
        self._s_cache: Dict[int, AlgebraElement] = {}

    def _shape_check(self):
        a = self.algebra
        if self.coproduct.target_rank != 2 or self.coproduct.source is not a:
            raise StructureValidationError("coproduct must map the algebra to rank 2")
        if self.counit.target_rank != 0:
            raise StructureValidationError("counit must map to scalars")
        if self.antipode.target_rank != 1:
            raise StructureValidationError("antipode must map the algebra to itself")
        for t, rk in ((self.phi, 3), (self.phi_inv, 3)):
            if t.rank != rk or any(leg is not a for leg in t.legs):
                raise StructureValidationError("coassociator must be rank 3 over A")
        for el in (self.alpha, self.beta):
            if el is not None and el.algebra is not a:
                raise StructureValidationError("canonical elements must live in A")
        if (self.r is None) != (self.r_inv is None):
            raise StructureValidationError("R and its inverse come together")
        if self.r is not None and (self.r.rank != 2 or self.r_inv.rank != 2):
            raise StructureValidationError("R must have rank 2")

    # -- basic maps on elements -------------------------------------------

    def basis_element(self, i: int) -> AlgebraElement:
        return self.algebra.basis_element(i)

    def delta(self, x: AlgebraElement) -> TensorElement:
        return self.coproduct(x)

    def delta_t(self, x: AlgebraElement) -> TensorElement:
        return self.coproduct(x).swap()

    def eps(self, x: AlgebraElement) -> Scalar:
        return self.counit(x)

    def s(self, x: AlgebraElement) -> AlgebraElement:
        return self.antipode(x)

    def s_basis(self, i: int) -> AlgebraElement:
        out = self._s_cache.get(i)
        if out is None:
            out = self.antipode(self.algebra.basis_element(i))
            self._s_cache[i] = out
        return out

    def s_inv(self, x: AlgebraElement) -> AlgebraElement:
        if self.antipode_inv is None:
            raise StructureValidationError("the antipode is not invertible")
        return self.antipode_inv(x)

    def delta_left(self, x: AlgebraElement) -> TensorElement:
        """(coproduct (x) 1) of the coproduct."""
        return self.delta(x).apply_maps([(0, self.coproduct)])

    def delta_right(self, x: AlgebraElement) -> TensorElement:
        """(1 (x) coproduct) of the coproduct."""
        return self.delta(x).apply_maps([(1, self.coproduct)])

    # -- common tensors ------------------------------------------------------

    def legs(self, rank: int) -> Tuple[BaseAlgebra, ...]:
        return (self.algebra,) * rank

    def unit_tensor(self, rank: int) -> TensorElement:
        return TensorElement.unit(self.legs(rank))

    def r13(self) -> TensorElement:
        return self.r.embed((0, 2), self.legs(3))

    def r12(self) -> TensorElement:
        return self.r.embed((0, 1), self.legs(3))

    def r23(self) -> TensorElement:
        return self.r.embed((1, 2), self.legs(3))

    def require_r(self):
        if self.r is None:
            raise NoRMatrixError(f"{self.name or 'structure'} has no R-matrix")

    # -- copies ------------------------------------------------------------------

    def with_data(self, **kw) -> "QuasiHopfStructure":
        base = dict(algebra=self.algebra, coproduct=self.coproduct,
                    counit=self.counit, antipode=self.antipode,
                    phi=self.phi, phi_inv=self.phi_inv, alpha=self.alpha,
                    beta=self.beta, r=self.r, r_inv=self.r_inv,
                    antipode_inv=self.antipode_inv, name=self.name)
        base.update(kw)
        return QuasiHopfStructure(**base)

    def __eq__(self, other):
        if not isinstance(other, QuasiHopfStructure):
            return NotImplemented
        return (self.algebra == other.algebra
                and self.coproduct == other.coproduct
                and self.counit == other.counit
                and self.antipode == other.antipode
                and self.phi == other.phi and self.phi_inv == other.phi_inv
                and self.alpha == other.alpha and self.beta == other.beta
                and self.r == other.r and self.r_inv == other.r_inv)

    def __repr__(self):
        return f"QuasiHopfStructure({self.name or self.algebra!r})"


# ---------------------------------------------------------------------------
# verification


def _run(report: AxiomReport, axiom: str, fn: Callable[[], Tuple[bool, object, Optional[str]]]):
    t0 = time.perf_counter()
    passed, witness, element = fn()
    report.add(AxiomCheck(axiom, passed, witness=witness, element=element,
                          seconds=time.perf_counter() - t0))


def _per_basis(H: QuasiHopfStructure, diff):
    """Run an element-quantified identity over the basis; first failure wins."""
    def fn():
        for i in range(H.algebra.dim):
            d = diff(i)
            if not d.is_zero():
                return False, d, H.algebra.labels[i]
        return True, None, None
    return fn


def _tensor_eq(lhs_fn, rhs_fn):
    def fn():
        d = lhs_fn() - rhs_fn()
        return (d.is_zero(), None if d.is_zero() else d, None)
    return fn


def _all_zero(*diff_fns):
    """Conjunction of several exact equalities; witness is the first nonzero."""
    def fn():
        for diff_fn in diff_fns:
            d = diff_fn()
            if not d.is_zero():
                return False, d, None
        return True, None, None
    return fn


def verify_quasi_bialgebra(H: QuasiHopfStructure) -> AxiomReport:
    """Quasi-bialgebra axioms: hom properties of the coproduct and counit,
    invertibility and evenness of the coassociator, quasi-coassociativity,
    the pentagon identity, and all counit identities."""
    report = AxiomReport(f"{H.name or 'structure'}:quasi-bialgebra")
    A = H.algebra

    def coproduct_unit():
        d = H.delta(A.unit()) - H.unit_tensor(2)
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "coproduct-unit", coproduct_unit)

    def coproduct_hom():
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = H.delta(A.basis_element(i) * A.basis_element(j))
                rhs = H.delta(A.basis_element(i)) * H.delta(A.basis_element(j))
                if lhs != rhs:
                    return False, lhs - rhs, f"({A.labels[i]}, {A.labels[j]})"
        return True, None, None
    _run(report, "coproduct-homomorphism", coproduct_hom)

    def counit_hom():
        if H.eps(A.unit()) != A.field.one():
            return False, H.eps(A.unit()), "unit"
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = H.eps(A.basis_element(i) * A.basis_element(j))
                rhs = H.eps(A.basis_element(i)) * H.eps(A.basis_element(j))
                if lhs != rhs:
                    return False, lhs - rhs, f"({A.labels[i]}, {A.labels[j]})"
        return True, None, None
    _run(report, "counit-homomorphism", counit_hom)

    unit3 = H.unit_tensor(3)
    _run(report, "coassociator-invertible", _all_zero(
        lambda: H.phi * H.phi_inv - unit3,
        lambda: H.phi_inv * H.phi - unit3))

    def phi_even():
        ok = H.phi.is_even() and H.phi_inv.is_even()
        return ok, None if ok else H.phi, None
    _run(report, "coassociator-even", phi_even)

    _run(report, "quasi-coassociativity", _per_basis(
        H, lambda i: H.delta_right(A.basis_element(i))
        - H.phi_inv * H.delta_left(A.basis_element(i)) * H.phi))

    def pentagon():
        legs4 = H.legs(4)
        lhs = H.phi.apply_maps([(0, H.coproduct)]) * \
            H.phi.apply_maps([(2, H.coproduct)])
        rhs = H.phi.embed((0, 1, 2), legs4) * \
            H.phi.apply_maps([(1, H.coproduct)]) * \
            H.phi.embed((1, 2, 3), legs4)
        d = lhs - rhs
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "pentagon", pentagon)

    def counit_coproduct():
        for i in range(A.dim):
            a = A.basis_element(i)
            for leg in (0, 1):
                d = H.delta(a).apply_maps([(leg, H.counit)]).as_element() - a
                if not d.is_zero():
                    return False, d, A.labels[i]
        return True, None, None
    _run(report, "counit-coproduct", counit_coproduct)

    unit2 = H.unit_tensor(2)
    _run(report, "counit-coassociator", _tensor_eq(
        lambda: H.phi.apply_maps([(1, H.counit)]), lambda: unit2))
    _run(report, "counit-coassociator-outer", _all_zero(
        lambda: H.phi.apply_maps([(0, H.counit)]) - unit2,
        lambda: H.phi.apply_maps([(2, H.counit)]) - unit2))
    return report


def _antipode_alpha_diff(H: QuasiHopfStructure, i: int,
                         alpha: AlgebraElement) -> AlgebraElement:
    """sum S(a_(1)) alpha a_(2) - eps(a) alpha at a = basis i (alpha even)."""
    A = H.algebra
    acc = A.zero()
    for (k1, k2), d in H.coproduct.on_basis(i).coeffs.items():
        acc = acc + (H.s_basis(k1) * alpha * A.basis_element(k2)).scale(d)
    return acc - alpha.scale(H.eps(A.basis_element(i)))


def _antipode_beta_diff(H: QuasiHopfStructure, i: int,
                        beta: AlgebraElement) -> AlgebraElement:
    """sum a_(1) beta S(a_(2)) - eps(a) beta at a = basis i (beta even)."""
    A = H.algebra
    acc = A.zero()
    for (k1, k2), d in H.coproduct.on_basis(i).coeffs.items():
        acc = acc + (A.basis_element(k1) * beta * H.s_basis(k2)).scale(d)
    return acc - beta.scale(H.eps(A.basis_element(i)))


def _phi_sandwich_inv(H: QuasiHopfStructure, beta: AlgebraElement,
                      alpha: AlgebraElement) -> AlgebraElement:
    """sum Xbar beta S(Ybar) alpha Zbar over the inverse coassociator."""
    A = H.algebra
    acc = A.zero()
    for (x, y, z), c in H.phi_inv.coeffs.items():
        acc = acc + (A.basis_element(x) * beta * H.s_basis(y)
                     * alpha * A.basis_element(z)).scale(c)
    return acc


def _phi_sandwich(H: QuasiHopfStructure, alpha: AlgebraElement,
                  beta: AlgebraElement) -> AlgebraElement:
    """sum S(X) alpha Y beta S(Z) over the coassociator."""
    A = H.algebra
    acc = A.zero()
    for (x, y, z), c in H.phi.coeffs.items():
        acc = acc + (H.s_basis(x) * alpha * A.basis_element(y)
                     * beta * H.s_basis(z)).scale(c)
    return acc


def verify_antipode_axioms(H: QuasiHopfStructure) -> AxiomReport:
    """Antipode axioms with the canonical elements, plus the derived counit
    consequences."""
    report = AxiomReport(f"{H.name or 'structure'}:antipode")
    A = H.algebra

    t0 = time.perf_counter()
    anti = check_antihomomorphism(H.antipode)
    anti.seconds = time.perf_counter() - t0
    report.add(anti)

    _run(report, "antipode-unit", _tensor_eq(
        lambda: H.s(A.unit()), lambda: A.unit()))

    def canonical_even():
        if H.alpha is None or H.beta is None:
            return False, None, "missing"
        ok = H.alpha.is_even() and H.beta.is_even()
        return ok, None, None
    _run(report, "canonical-even", canonical_even)
    if H.alpha is None or H.beta is None:
        return report

    _run(report, "antipode-alpha", _per_basis(
        H, lambda i: _antipode_alpha_diff(H, i, H.alpha)))
    _run(report, "antipode-beta", _per_basis(
        H, lambda i: _antipode_beta_diff(H, i, H.beta)))
    _run(report, "coassociator-antipode-inv", _tensor_eq(
        lambda: _phi_sandwich_inv(H, H.beta, H.alpha), lambda: A.unit()))
    _run(report, "coassociator-antipode", _tensor_eq(
        lambda: _phi_sandwich(H, H.alpha, H.beta), lambda: A.unit()))

    def counit_canonical():
        v = H.eps(H.alpha) * H.eps(H.beta)
        return v == A.field.one(), v, None
    _run(report, "counit-canonical", counit_canonical)

    def counit_antipode():
        for i in range(A.dim):
            d = H.eps(H.s_basis(i)) - H.eps(A.basis_element(i))
            if not d.is_zero():
                return False, d, A.labels[i]
        return True, None, None
    _run(report, "counit-antipode", counit_antipode)
    return report


def verify_quasitriangular(H: QuasiHopfStructure) -> AxiomReport:
    """R-matrix axioms: invertibility, evenness, counits, the intertwining
    of the coproduct with its flip, and both coassociator-decorated hexagons."""
    H.require_r()
    report = AxiomReport(f"{H.name or 'structure'}:quasitriangular")
    A = H.algebra
    unit2 = H.unit_tensor(2)

    _run(report, "r-invertible", _all_zero(
        lambda: H.r * H.r_inv - unit2,
        lambda: H.r_inv * H.r - unit2))

    def r_even():
        ok = H.r.is_even() and H.r_inv.is_even()
        return ok, None if ok else H.r, None
    _run(report, "r-even", r_even)

    _run(report, "counit-r", _all_zero(
        lambda: H.r.apply_maps([(0, H.counit)]).as_element() - A.unit(),
        lambda: H.r.apply_maps([(1, H.counit)]).as_element() - A.unit()))

    _run(report, "r-intertwines-coproduct", _per_basis(
        H, lambda i: H.delta_t(A.basis_element(i)) * H.r
        - H.r * H.delta(A.basis_element(i))))

    def hexagon_left():
        lhs = H.r.apply_maps([(0, H.coproduct)])
        rhs = reindex(H.phi_inv, "231") * H.r13() * reindex(H.phi, "132") \
            * H.r23() * H.phi_inv
        d = lhs - rhs
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "hexagon-left", hexagon_left)

    def hexagon_right():
        lhs = H.r.apply_maps([(1, H.coproduct)])
        rhs = reindex(H.phi, "312") * H.r13() * reindex(H.phi_inv, "213") \
            * H.r12() * H.phi
        d = lhs - rhs
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "hexagon-right", hexagon_right)
    return report


def verify_quasi_ybe(H: QuasiHopfStructure) -> AxiomReport:
    """The coassociator-decorated Yang-Baxter equation."""
    H.require_r()
    report = AxiomReport(f"{H.name or 'structure'}:quasi-ybe")

    def qybe():
        lhs = H.r12() * reindex(H.phi_inv, "231") * H.r13() \
            * reindex(H.phi, "132") * H.r23() * H.phi_inv
        rhs = reindex(H.phi_inv, "321") * H.r23() * reindex(H.phi, "312") \
            * H.r13() * reindex(H.phi_inv, "213") * H.r12()
        d = lhs - rhs
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "quasi-yang-baxter", qybe)
    return report


def verify_structure(H: QuasiHopfStructure) -> AxiomReport:
    """Run every verifier that applies; never short-circuits on failure."""
    report = AxiomReport(f"{H.name or 'structure'}:all")
    report.extend(verify_quasi_bialgebra(H))
    report.extend(verify_antipode_axioms(H))
    if H.r is not None:
        report.extend(verify_quasitriangular(H))
        report.extend(verify_quasi_ybe(H))
    return report


# ---------------------------------------------------------------------------
# solving for the canonical elements


def solve_canonical_elements(H: QuasiHopfStructure
                             ) -> List[Tuple[AlgebraElement, AlgebraElement]]:
    """All (alpha, beta) pairs completing (coproduct, counit, antipode, phi)
    to a quasi-Hopf structure, both elements even.

    The two per-element axioms are linear in alpha resp. beta separately,
    while the two coassociator axioms couple them bilinearly.  We therefore
    solve the beta condition first, then for each basis vector of the beta
    space solve the remaining axioms as an affine-linear system in alpha.
    Every returned pair is re-verified.
    """
    A = H.algebra
    field = A.field
    even_idx = [i for i in range(A.dim) if A.parity[i] == 0]
    ncols = len(even_idx)

    def element_from(vec) -> AlgebraElement:
        return AlgebraElement(A, {even_idx[t]: vec[t] for t in range(ncols)})

    def rows_of(diff_fn) -> List[List[Scalar]]:
        """Matrix rows of a linear condition over the even coordinates."""
        rows = [[field.zero()] * ncols for _ in range(A.dim)]
        for t, j in enumerate(even_idx):
            image = diff_fn(A.basis_element(j))
            for k, c in image.coeffs.items():
                rows[k][t] = c
        return rows

    # beta: sum a_(1) beta S(a_(2)) = eps(a) beta for every basis a
    beta_rows: List[List[Scalar]] = []
    for i in range(A.dim):
        beta_rows.extend(rows_of(lambda b: _antipode_beta_diff(H, i, b)))
    beta_space = nullspace(beta_rows, ncols, field)

    results: List[Tuple[AlgebraElement, AlgebraElement]] = []
    for bvec in beta_space:
        beta0 = element_from(bvec)
        rows: List[List[Scalar]] = []
        rhs: List[Scalar] = []
        for i in range(A.dim):
            block = rows_of(lambda a: _antipode_alpha_diff(H, i, a))
            rows.extend(block)
            rhs.extend([field.zero()] * A.dim)
        for sandwich in (lambda a: _phi_sandwich_inv(H, beta0, a),
                         lambda a: _phi_sandwich(H, a, beta0)):
            rows.extend(rows_of(sandwich))
            unit_vec = [field.zero()] * A.dim
            unit_vec[next(iter(A.unit_coeffs))] = field.one()
            rhs.extend(unit_vec)
        particular, kernel = solve_affine(rows, rhs, ncols, field)
        if particular is None:
            continue
        candidates = [particular] + [
            [p + h for p, h in zip(particular, hvec)] for hvec in kernel]
        for avec in candidates:
            alpha0 = element_from(avec)
            candidate = H.with_data(alpha=alpha0, beta=beta0)
            if not verify_antipode_axioms(candidate).passed:
                raise PostconditionError(
                    "solved canonical elements failed re-verification")
            results.append((alpha0, beta0))
    if not results:
        raise NoSolutionError(
            "no canonical elements: the data does not extend to a quasi-Hopf structure")
    return results

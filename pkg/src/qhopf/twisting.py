"""Gauge transformations (twists) of quasi-Hopf structures.

A twistor is an invertible even rank-2 tensor F with the counit property
(eps (x) 1)F = 1 = (1 (x) eps)F.  Twisting replaces

    coproduct_F(a) = F coproduct(a) F^{-1}
    phi_F  = (F (x) 1) (coproduct (x) 1)F . phi . (1 (x) coproduct)F^{-1} (1 (x) F^{-1})
    alpha_F = sum S(fbar_i) alpha fbar^i        (from F^{-1})
    beta_F  = sum f_i beta S(f^i)               (from F)
    r_F  = F^T r F^{-1}

with the antipode unchanged, and produces another quasi-Hopf structure;
the result is re-verified eagerly by default, which doubles as an engine
self-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotInvertibleError, PostconditionError, StructureValidationError
from .graded import AlgebraElement, TensorElement
from .linalg import solve_affine
from .quasihopf import AxiomReport, QuasiHopfStructure, verify_structure, _run


def invert_tensor(t: TensorElement) -> Optional[TensorElement]:
    """Two-sided inverse of a tensor under the graded product, or None."""
    legs = t.legs
    keys = []
    index = {}
    sizes = [leg.dim for leg in legs]

    def all_keys(prefix, depth):
        if depth == len(sizes):
            index[tuple(prefix)] = len(keys)
            keys.append(tuple(prefix))
            return
        for i in range(sizes[depth]):
            all_keys(prefix + [i], depth + 1)
    all_keys([], 0)

    field = legs[0].field
    n = len(keys)
    rows = [[field.zero()] * n for _ in range(n)]
    for col, key in enumerate(keys):
        basis_tensor = TensorElement(legs, {key: field.one()})
        image = t * basis_tensor
        for k, c in image.coeffs.items():
            rows[index[k]][col] = c
    unit = TensorElement.unit(legs)
    rhs = [field.zero()] * n
    for k, c in unit.coeffs.items():
        rhs[index[k]] = c
    particular, _ = solve_affine(rows, rhs, n, field)
    if particular is None:
        return None
    inv = TensorElement(legs, {keys[i]: particular[i] for i in range(n)})
    if t * inv != unit or inv * t != unit:
        return None
    return inv


@dataclass
class Twistor:
    f: TensorElement
    f_inv: TensorElement
    name: str = "F"

    def flip(self) -> TensorElement:
        return self.f.swap()


def validate_twistor(f: TensorElement, H: QuasiHopfStructure,
                     f_inv: Optional[TensorElement] = None,
                     name: str = "F") -> Twistor:
    """Check invertibility (solving for the inverse when not supplied),
    the counit property on both legs, and evenness."""
    if f.rank != 2 or any(leg is not H.algebra for leg in f.legs):
        raise StructureValidationError("a twistor is a rank-2 tensor over A")
    unit2 = H.unit_tensor(2)
    if f_inv is None:
        f_inv = invert_tensor(f)
        if f_inv is None:
            raise NotInvertibleError(f"twistor {name} is not invertible")
    if f * f_inv != unit2 or f_inv * f != unit2:
        raise NotInvertibleError(f"twistor {name}: supplied inverse is wrong")
    one = H.algebra.unit()
    for leg in (0, 1):
        if f.apply_maps([(leg, H.counit)]).as_element() != one:
            raise StructureValidationError(
                f"twistor {name}: counit property fails on leg {leg + 1}")
    if not f.is_even() or not f_inv.is_even():
        raise StructureValidationError(f"twistor {name} must be even")
    return Twistor(f, f_inv, name)


def identity_twistor(H: QuasiHopfStructure, name: str = "identity") -> Twistor:
    unit2 = H.unit_tensor(2)
    return Twistor(unit2, unit2, name)


def twisted_alpha(H: QuasiHopfStructure, F: Twistor) -> AlgebraElement:
    """sum S(fbar_i) alpha fbar^i over the inverse twistor."""
    acc = H.algebra.zero()
    for (i, j), c in F.f_inv.coeffs.items():
        acc = acc + (H.s_basis(i) * H.alpha * H.basis_element(j)).scale(c)
    return acc


def twisted_beta(H: QuasiHopfStructure, F: Twistor) -> AlgebraElement:
    """sum f_i beta S(f^i) over the twistor."""
    acc = H.algebra.zero()
    for (i, j), c in F.f.coeffs.items():
        acc = acc + (H.basis_element(i) * H.beta * H.s_basis(j)).scale(c)
    return acc


def twist_structure(H: QuasiHopfStructure, F: Twistor,
                    verify: bool = True) -> QuasiHopfStructure:
    """The twisted quasi-Hopf structure; re-verified eagerly unless opted out."""
    A = H.algebra
    from .graded import LinearMap  # local to keep module imports flat

    images = [F.f * H.delta(A.basis_element(i)) * F.f_inv for i in range(A.dim)]
    coproduct_f = LinearMap(A, (A, A), images, name="coproduct_F")

    legs3 = H.legs(3)
    f_left = F.f.embed((0, 1), legs3)
    cop_f = F.f.apply_maps([(0, H.coproduct)])
    cop_finv = F.f_inv.apply_maps([(1, H.coproduct)])
    finv_right = F.f_inv.embed((1, 2), legs3)
    phi_f = f_left * cop_f * H.phi * cop_finv * finv_right

    finv_left = F.f_inv.embed((0, 1), legs3)
    cop_finv_l = F.f_inv.apply_maps([(0, H.coproduct)])
    cop_f_r = F.f.apply_maps([(1, H.coproduct)])
    f_right = F.f.embed((1, 2), legs3)
    phi_f_inv = f_right * cop_f_r * H.phi_inv * cop_finv_l * finv_left

    r_f = r_f_inv = None
    if H.r is not None:
        r_f = F.f.swap() * H.r * F.f_inv
        r_f_inv = F.f * H.r_inv * F.f_inv.swap()

    twisted = QuasiHopfStructure(
        algebra=A, coproduct=coproduct_f, counit=H.counit, antipode=H.antipode,
        phi=phi_f, phi_inv=phi_f_inv,
        alpha=twisted_alpha(H, F), beta=twisted_beta(H, F),
        r=r_f, r_inv=r_f_inv, antipode_inv=H.antipode_inv,
        name=f"{H.name or 'structure'}^{F.name}")
    if verify:
        report = verify_structure(twisted)
        if not report.passed:
            failed = ", ".join(c.axiom for c in report.failures())
            raise PostconditionError(
                f"twisted structure failed verification: {failed}")
    return twisted


def check_twisted_canonical_identities(H: QuasiHopfStructure,
                                       F: Twistor) -> AxiomReport:
    """The canonical elements are recovered from their twisted versions:
    beta = sum fbar_i beta_F S(fbar^i) and alpha = sum S(f_i) alpha_F f^i."""
    report = AxiomReport(f"{H.name or 'structure'}:twisted-canonical")
    alpha_f, beta_f = twisted_alpha(H, F), twisted_beta(H, F)

    def beta_recovery():
        acc = H.algebra.zero()
        for (i, j), c in F.f_inv.coeffs.items():
            acc = acc + (H.basis_element(i) * beta_f * H.s_basis(j)).scale(c)
        d = acc - H.beta
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "twist-beta-recovery", beta_recovery)

    def alpha_recovery():
        acc = H.algebra.zero()
        for (i, j), c in F.f.coeffs.items():
            acc = acc + (H.s_basis(i) * alpha_f * H.basis_element(j)).scale(c)
        d = acc - H.alpha
        return d.is_zero(), None if d.is_zero() else d, None
    _run(report, "twist-alpha-recovery", alpha_recovery)
    return report

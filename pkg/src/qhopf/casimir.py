"""Central-element constructors and the twist-invariance verifier.

Given an even invariant c1 (resp. even pseudo-invariant c2), central
elements are built through the coassociator:

    C1 = sum Xbar c1 S(Ybar) alpha Zbar  =  sum S(X) alpha Y c1 S(Z)
    C2 = sum S(X) c2 Y beta S(Z)         =  sum Xbar beta S(Ybar) c2 Zbar

In the quasi-triangular case the u-operator

    u = sum S(Y beta S(Z)) S(e^i) alpha e_i X  (-1)^{[e_i] + [X]}

implements the square of the antipode by conjugation, and supertrace
forms against a representation produce whole families of central elements
from powers of R^T R.  Every constructor checks its postconditions
(centrality, conjugation, recovery, agreement of paired formulas) and
raises on violation; where two printed formulas exist for one object both
are computed and compared.  The twist-invariance verifier recomputes all
of these inside a twisted structure and asserts exact equality with the
untwisted values.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import (
    AntipodeNotInvertibleError,
    NotInvariantError,
    OddElementError,
    PostconditionError,
)
from .graded import AlgebraElement, TensorElement
from .invariants import (
    LinearForm,
    invariant_subspace,
    is_central,
    is_invariant_element,
    is_invariant_form,
    is_pseudo_invariant_element,
    is_pseudo_invariant_form,
    pseudo_invariant_subspace,
)
from .quasihopf import QuasiHopfStructure, _run
from .report import AxiomReport
from .representations import Representation, apply_rep_on_leg
from .twisting import Twistor, check_twisted_canonical_identities, twist_structure


# ---------------------------------------------------------------------------
# C1 and C2


def build_C1(H: QuasiHopfStructure, c1: AlgebraElement) -> AlgebraElement:
    """Central element attached to an even invariant; both coassociator
    expressions are computed and must agree, and C1 beta = beta C1 = c1."""
    A = H.algebra
    if not c1.is_even():
        raise OddElementError("odd element: C1 needs an even invariant")
    if not is_invariant_element(H, c1):
        raise NotInvariantError("not invariant under the adjoint action")
    via_inv = A.zero()
    for (x, y, z), c in H.phi_inv.coeffs.items():
        via_inv = via_inv + (A.basis_element(x) * c1 * H.s_basis(y)
                             * H.alpha * A.basis_element(z)).scale(c)
    via_phi = A.zero()
    for (x, y, z), c in H.phi.coeffs.items():
        via_phi = via_phi + (H.s_basis(x) * H.alpha * A.basis_element(y)
                             * c1 * H.s_basis(z)).scale(c)
    if via_inv != via_phi:
        raise PostconditionError("the two C1 expressions disagree")
    central, witness = is_central(H, via_inv)
    if not central:
        raise PostconditionError(f"C1 is not central: [{witness[0]}] fails")
    if via_inv * H.beta != c1 or H.beta * via_inv != c1:
        raise PostconditionError("C1 beta does not recover c1")
    return via_inv


def build_C2(H: QuasiHopfStructure, c2: AlgebraElement) -> AlgebraElement:
    """Mirror of build_C1 for an even pseudo-invariant; C2 alpha = alpha C2 = c2."""
    A = H.algebra
    if not c2.is_even():
        raise OddElementError("odd element: C2 needs an even pseudo-invariant")
    if not is_pseudo_invariant_element(H, c2):
        raise NotInvariantError("not invariant under the anti-adjoint action")
    via_phi = A.zero()
    for (x, y, z), c in H.phi.coeffs.items():
        via_phi = via_phi + (H.s_basis(x) * c2 * A.basis_element(y)
                             * H.beta * H.s_basis(z)).scale(c)
    via_inv = A.zero()
    for (x, y, z), c in H.phi_inv.coeffs.items():
        via_inv = via_inv + (A.basis_element(x) * H.beta * H.s_basis(y)
                             * c2 * A.basis_element(z)).scale(c)
    if via_phi != via_inv:
        raise PostconditionError("the two C2 expressions disagree")
    central, witness = is_central(H, via_phi)
    if not central:
        raise PostconditionError(f"C2 is not central: [{witness[0]}] fails")
    if via_phi * H.alpha != c2 or H.alpha * via_phi != c2:
        raise PostconditionError("C2 alpha does not recover c2")
    return via_phi


def quadratic_invariants(H: QuasiHopfStructure, omega: TensorElement
                         ) -> Tuple[AlgebraElement, AlgebraElement]:
    """From an even rank-2 tensor commuting with the coproduct:
    c1 = sum w_i beta S(w^i) is invariant, c2 = sum S(w_i) alpha w^i is
    pseudo-invariant."""
    A = H.algebra
    if not omega.is_even():
        raise OddElementError("omega must be even")
    for i in range(A.dim):
        d = H.delta(A.basis_element(i))
        if d * omega != omega * d:
            raise NotInvariantError(
                f"omega does not commute with the coproduct at {A.labels[i]}")
    c1 = A.zero()
    c2 = A.zero()
    for (i, j), w in omega.coeffs.items():
        c1 = c1 + (A.basis_element(i) * H.beta * H.s_basis(j)).scale(w)
        c2 = c2 + (H.s_basis(i) * H.alpha * A.basis_element(j)).scale(w)
    if not is_invariant_element(H, c1):
        raise PostconditionError("quadratic c1 failed the invariance check")
    if not is_pseudo_invariant_element(H, c2):
        raise PostconditionError("quadratic c2 failed the pseudo-invariance check")
    return c1, c2


# ---------------------------------------------------------------------------
# the u-operator


def u_operator(H: QuasiHopfStructure) -> AlgebraElement:
    """u = sum S(Y beta S(Z)) S(e^i) alpha e_i X (-1)^{[e_i]+[X]};
    conjugation by u implements the antipode squared."""
    H.require_r()
    A = H.algebra
    u = A.zero()
    for (x, y, z), cphi in H.phi.coeffs.items():
        left = H.s(A.basis_element(y) * H.beta * H.s_basis(z))
        for (i, j), cr in H.r.coeffs.items():
            term = (left * H.s_basis(j) * H.alpha * A.basis_element(i)
                    * A.basis_element(x)).scale(cphi * cr)
            if (A.parity[i] + A.parity[x]) % 2:
                term = -term
            u = u + term
    for i in range(A.dim):
        a = A.basis_element(i)
        if H.s(H.s(a)) * u != u * a:
            raise PostconditionError(
                f"u does not conjugate the antipode squared at {A.labels[i]}")
    if H.s(H.s(u)) != u:
        raise PostconditionError("u is not fixed by the antipode squared")
    return u


def u_inverse(H: QuasiHopfStructure) -> AlgebraElement:
    """u^{-1} = sum S^{-1}(X) S^{-1}(alpha ebar^i) ebar_i Y beta S(Z)
    (-1)^{[ebar_i]}, from the inverse R-matrix."""
    H.require_r()
    if H.antipode_inv is None:
        raise AntipodeNotInvertibleError("the antipode is not invertible")
    A = H.algebra
    uinv = A.zero()
    for (x, y, z), cphi in H.phi.coeffs.items():
        tail = A.basis_element(y) * H.beta * H.s_basis(z)
        for (i, j), cr in H.r_inv.coeffs.items():
            term = (H.s_inv(A.basis_element(x))
                    * H.s_inv(H.alpha * A.basis_element(j))
                    * A.basis_element(i) * tail).scale(cphi * cr)
            if A.parity[i] % 2:
                term = -term
            uinv = uinv + term
    if H.s(H.s(uinv)) != uinv:
        raise PostconditionError("u inverse is not fixed by the antipode squared")
    u = u_operator(H)
    one = A.unit()
    if u * uinv != one or uinv * u != one:
        raise PostconditionError("u inverse does not invert u")
    return uinv


# ---------------------------------------------------------------------------
# the identity suite


def _exchange_identities(H: QuasiHopfStructure, report: AxiomReport) -> None:
    """Four exchange identities moving an element across coassociator
    contractions, checked as rank-2 tensor equalities for every basis a."""
    A = H.algebra
    legs2 = H.legs(2)

    def pair(u_el: AlgebraElement, v_el: AlgebraElement, coeff) -> TensorElement:
        return TensorElement.of(u_el, v_el).scale(coeff)

    def check(name, lhs_fn, rhs_fn):
        def fn():
            for i in range(A.dim):
                d = lhs_fn(i) - rhs_fn(i)
                if not d.is_zero():
                    return False, d, A.labels[i]
            return True, None, None
        _run(report, name, fn)

    def lhs_phi_beta(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (x, y, z), c in H.phi.coeffs.items():
            coeff = -c if (A.parity[i] * A.parity[x]) % 2 else c
            acc = acc + pair(A.basis_element(x) * a,
                             A.basis_element(y) * H.beta * H.s_basis(z), coeff)
        return acc

    def rhs_phi_beta(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (l1, l2, l3), d in H.delta_left(a).coeffs.items():
            for (x, y, z), c in H.phi.coeffs.items():
                coeff = d * c
                if (A.parity[l2] * A.parity[x]) % 2:
                    coeff = -coeff
                acc = acc + pair(
                    A.basis_element(l1) * A.basis_element(x),
                    A.basis_element(l2) * A.basis_element(y) * H.beta
                    * H.s_basis(z) * H.s_basis(l3), coeff)
        return acc
    check("exchange-phi-beta", lhs_phi_beta, rhs_phi_beta)

    def lhs_phi_alpha(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (x, y, z), c in H.phi.coeffs.items():
            coeff = -c if (A.parity[i] * A.parity[z]) % 2 else c
            acc = acc + pair(H.s_basis(x) * H.alpha * A.basis_element(y),
                             a * A.basis_element(z), coeff)
        return acc

    def rhs_phi_alpha(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (r1, r2, r3), d in H.delta_right(a).coeffs.items():
            for (x, y, z), c in H.phi.coeffs.items():
                coeff = d * c
                if (A.parity[r2] * A.parity[z]) % 2:
                    coeff = -coeff
                acc = acc + pair(
                    H.s_basis(r1) * H.s_basis(x) * H.alpha
                    * A.basis_element(y) * A.basis_element(r2),
                    A.basis_element(z) * A.basis_element(r3), coeff)
        return acc
    check("exchange-phi-alpha", lhs_phi_alpha, rhs_phi_alpha)

    def lhs_phiinv_alpha(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (x, y, z), c in H.phi_inv.coeffs.items():
            acc = acc + pair(a * A.basis_element(x),
                             H.s_basis(y) * H.alpha * A.basis_element(z), c)
        return acc

    def rhs_phiinv_alpha(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (l1, l2, l3), d in H.delta_left(a).coeffs.items():
            for (x, y, z), c in H.phi_inv.coeffs.items():
                coeff = d * c
                if (A.parity[x] * ((A.parity[l1] + A.parity[l2]) % 2)) % 2:
                    coeff = -coeff
                acc = acc + pair(
                    A.basis_element(x) * A.basis_element(l1),
                    H.s_basis(l2) * H.s_basis(y) * H.alpha
                    * A.basis_element(z) * A.basis_element(l3), coeff)
        return acc
    check("exchange-phiinv-alpha", lhs_phiinv_alpha, rhs_phiinv_alpha)

    def lhs_phiinv_beta(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (x, y, z), c in H.phi_inv.coeffs.items():
            acc = acc + pair(A.basis_element(x) * H.beta * H.s_basis(y),
                             A.basis_element(z) * a, c)
        return acc

    def rhs_phiinv_beta(i):
        a = A.basis_element(i)
        acc = TensorElement(legs2, {})
        for (r1, r2, r3), d in H.delta_right(a).coeffs.items():
            for (x, y, z), c in H.phi_inv.coeffs.items():
                coeff = d * c
                if (((A.parity[r2] + A.parity[r3]) % 2) * A.parity[z]) % 2:
                    coeff = -coeff
                acc = acc + pair(
                    A.basis_element(r1) * A.basis_element(x) * H.beta
                    * H.s_basis(y) * H.s_basis(r2),
                    A.basis_element(r3) * A.basis_element(z), coeff)
        return acc
    check("exchange-phiinv-beta", lhs_phiinv_beta, rhs_phiinv_beta)


def identity_suite(H: QuasiHopfStructure,
                   F: Optional[Twistor] = None) -> AxiomReport:
    """Exchange identities for every basis element, the u-operator identities
    when an R-matrix is present, and the twisted-canonical recoveries when a
    twistor is supplied.  All equalities are exact."""
    report = AxiomReport(f"{H.name or 'structure'}:identities")
    A = H.algebra
    _exchange_identities(H, report)

    if H.r is not None:
        u = u_operator(H)

        def alpha_u():
            rhs = A.zero()
            for (i, j), c in H.r.coeffs.items():
                term = (H.s_basis(j) * H.alpha * A.basis_element(i)).scale(c)
                if A.parity[i] % 2:
                    term = -term
                rhs = rhs + term
            d = H.s(H.alpha) * u - rhs
            return d.is_zero(), None if d.is_zero() else d, None
        _run(report, "antipode-alpha-u", alpha_u)

        if H.antipode_inv is not None:
            def u_rinv_alpha():
                acc = A.zero()
                for (i, j), c in H.r_inv.coeffs.items():
                    term = (H.s_inv(H.alpha * A.basis_element(j))
                            * A.basis_element(i)).scale(c)
                    if A.parity[i] % 2:
                        term = -term
                    acc = acc + term
                d = u * acc - H.alpha
                return d.is_zero(), None if d.is_zero() else d, None
            _run(report, "u-alpha-rinv", u_rinv_alpha)

        def u_su_central():
            prod = u * H.s(u)
            if prod != H.s(u) * u:
                return False, prod - H.s(u) * u, None
            central, witness = is_central(H, prod)
            return central, None if central else witness[1], \
                None if central else witness[0]
        _run(report, "u-su-central", u_su_central)

        def su_sbeta():
            rhs = A.zero()
            for (i, j), c in H.r.coeffs.items():
                rhs = rhs + (A.basis_element(i) * H.beta * H.s_basis(j)).scale(c)
            d = H.s(u) * H.s(H.beta) - rhs
            return d.is_zero(), None if d.is_zero() else d, None
        _run(report, "su-sbeta-r", su_sbeta)

        _run(report, "s-squared-u", lambda: (
            (H.s(H.s(u)) - u).is_zero(),
            None if (H.s(H.s(u)) - u).is_zero() else H.s(H.s(u)) - u, None))

        def u_conjugation():
            for i in range(A.dim):
                a = A.basis_element(i)
                d = H.s(H.s(a)) * u - u * a
                if not d.is_zero():
                    return False, d, A.labels[i]
            return True, None, None
        _run(report, "u-conjugation", u_conjugation)

    if F is not None:
        report.extend(check_twisted_canonical_identities(H, F))
    return report


# ---------------------------------------------------------------------------
# central elements from forms and the trace families


def central_from_theta(H: QuasiHopfStructure, theta: TensorElement,
                       xi: LinearForm, mirror: bool = False) -> AlgebraElement:
    """Central element from a rank-3 tensor commuting with the iterated
    coproduct and an even invariant form:  C = sum a_i xi(b_i beta S(c_i)).
    The mirror variant pairs a pseudo-invariant form on the other side:
    Cbar = sum xi(S(a_i) alpha b_i) c_i."""
    A = H.algebra
    if not xi.is_even():
        raise NotInvariantError("form not invariant/even: odd values present")
    for i in range(A.dim):
        a = A.basis_element(i)
        if not mirror:
            it = H.delta_right(a)
        else:
            it = H.delta_left(a)
        if it * theta != theta * it:
            raise NotInvariantError(
                "theta does not centralize the iterated coproduct at "
                f"{A.labels[i]}")
    if not mirror and not is_invariant_form(H, xi):
        raise NotInvariantError("form not invariant")
    if mirror and not is_pseudo_invariant_form(H, xi):
        raise NotInvariantError("form not pseudo-invariant")
    out = A.zero()
    for (i, j, k), t in theta.coeffs.items():
        if not mirror:
            value = xi(A.basis_element(j) * H.beta * H.s_basis(k))
            out = out + A.basis_element(i).scale(t * value)
        else:
            value = xi(H.s_basis(i) * H.alpha * A.basis_element(j))
            out = out + A.basis_element(k).scale(t * value)
    central, witness = is_central(H, out)
    if not central:
        raise PostconditionError(
            f"central_from_theta output fails at [{witness[0]}]")
    return out


def trace_forms(H: QuasiHopfStructure, rep: Representation
                ) -> Tuple[LinearForm, LinearForm]:
    """The supertrace forms  xi(a) = Str(u S^{-1}(alpha) a)  and
    xibar(a) = Str(u^{-1} S(beta) a); invariant resp. pseudo-invariant."""
    H.require_r()
    if H.antipode_inv is None:
        raise AntipodeNotInvertibleError("trace forms need an invertible antipode")
    A = H.algebra
    u, uinv = u_operator(H), u_inverse(H)
    pre = u * H.s_inv(H.alpha)
    pre_bar = uinv * H.s(H.beta)
    xi = LinearForm(H, tuple(
        rep.supertrace_of(pre * A.basis_element(i)) for i in range(A.dim)),
        name=f"trace:{rep.name}")
    xibar = LinearForm(H, tuple(
        rep.supertrace_of(pre_bar * A.basis_element(i)) for i in range(A.dim)),
        name=f"trace-bar:{rep.name}")
    if not is_invariant_form(H, xi):
        raise PostconditionError("the supertrace form is not invariant")
    if not is_pseudo_invariant_form(H, xibar):
        raise PostconditionError("the mirror supertrace form is not pseudo-invariant")
    return xi, xibar


def rtr_power(H: QuasiHopfStructure, m: int) -> TensorElement:
    """(R^T R)^m; negative powers use the inverse R-matrix."""
    H.require_r()
    unit2 = H.unit_tensor(2)
    if m >= 0:
        base = H.r.swap() * H.r
    else:
        base = H.r_inv * H.r_inv.swap()
        m = -m
    out = unit2
    for _ in range(m):
        out = out * base
    return out


def casimir_Cm(H: QuasiHopfStructure, rep: Representation, m: int
               ) -> Tuple[AlgebraElement, AlgebraElement]:
    """The trace-type central element family from omega = (R^T R)^m:

        C_m    from  theta    = phi^{-1} (omega (x) 1) phi
        Cbar_m from  thetabar = phi (1 (x) omega) phi^{-1}

    paired with the supertrace forms of the representation."""
    omega = rtr_power(H, m)
    legs3 = H.legs(3)
    theta = H.phi_inv * omega.embed((0, 1), legs3) * H.phi
    theta_bar = H.phi * omega.embed((1, 2), legs3) * H.phi_inv
    xi, xibar = trace_forms(H, rep)
    cm = central_from_theta(H, theta, xi)
    cmbar = central_from_theta(H, theta_bar, xibar, mirror=True)
    return cm, cmbar


def casimir_from_omega_rep(H: QuasiHopfStructure, rep: Representation,
                           omega_rep: TensorElement,
                           mirror: bool = False) -> AlgebraElement:
    """Central element from a represented rank-2 tensor: one leg symbolic,
    one leg a matrix over the carrier.

    Forward: omega_rep in A (x) End(V) commuting with (1 (x) pi)(coproduct);
    C = sum Str(u S^{-1}(alpha) B_i beta S(c_i)) a_i over
    theta = phi^{-1}(omega (x) 1)phi with the middle leg represented.
    Mirror: omega_rep in End(V) (x) A commuting with (pi (x) 1)(coproduct);
    the construction runs through phi (1 (x) omega) phi^{-1}."""
    H.require_r()
    if H.antipode_inv is None:
        raise AntipodeNotInvertibleError("trace constructions need the inverse antipode")
    A, field = H.algebra, H.algebra.field
    end = rep.matrix_algebra()
    rep_leg_index = 1 if not mirror else 0
    expected = (A, end) if not mirror else (end, A)
    if omega_rep.legs != expected:
        raise NotInvariantError("represented omega has the wrong leg layout")

    for i in range(A.dim):
        d = H.delta(A.basis_element(i))
        dr = apply_rep_on_leg(d, rep_leg_index, rep)
        if dr * omega_rep != omega_rep * dr:
            raise NotInvariantError(
                f"intertwining condition fails at {A.labels[i]}")

    d = rep.dim
    out = A.zero()
    if not mirror:
        legs3 = (A, end, A)
        theta = apply_rep_on_leg(H.phi_inv, 1, rep) \
            * omega_rep.embed((0, 1), legs3) \
            * apply_rep_on_leg(H.phi, 1, rep)
        pre = rep.matrix_of(u_operator(H) * H.s_inv(H.alpha))
        post_cache = {}
        for (i, e, k), t in theta.coeffs.items():
            p, q = divmod(e, d)
            post = post_cache.get(k)
            if post is None:
                post = rep.matrix_of(H.beta * H.s_basis(k))
                post_cache[k] = post
            # Str(pre . E[p,q] . post) = sum_s (+-) pre[s][p] post[q][s]
            acc = field.zero()
            for s in range(d):
                v = pre[s][p] * post[q][s]
                acc = acc - v if rep.carrier_parity[s] else acc + v
            out = out + A.basis_element(i).scale(t * acc)
    else:
        # omega_rep lives in End(V) (x) A; inside the sandwich it occupies
        # the middle and last legs of phi (1 (x) omega) phi^{-1}
        legs3 = (A, end, A)
        theta = apply_rep_on_leg(H.phi, 1, rep) \
            * omega_rep.embed((1, 2), legs3) \
            * apply_rep_on_leg(H.phi_inv, 1, rep)
        tail = u_inverse(H) * H.s(H.beta)
        for (i, e, k), t in theta.coeffs.items():
            p, q = divmod(e, d)
            pre = rep.matrix_of(tail * H.s_basis(i) * H.alpha)
            # Str(pre . E[p,q]) = (+-) pre[q][p]
            v = pre[q][p]
            if rep.carrier_parity[q]:
                v = -v
            out = out + A.basis_element(k).scale(t * v)
    central, witness = is_central(H, out)
    if not central:
        raise PostconditionError(
            f"represented casimir fails centrality at [{witness[0]}]")
    return out


@dataclass
class CasimirCheck:
    name: str
    element: AlgebraElement
    central: bool = True
    agreement: bool = True
    twist_invariant: Optional[bool] = None
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.central and self.agreement and self.twist_invariant is not False


@dataclass
class CasimirReport:
    subject: str
    twistor: Optional[str] = None
    checks: List[CasimirCheck] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CasimirCheck]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "twistor": self.twistor,
            "passed": self.passed,
            "checks": [{
                "name": c.name,
                "element": c.element.to_dict(),
                "central": c.central,
                "agreement": c.agreement,
                "twist_invariant": c.twist_invariant,
                **({"witness": str(c.witness)} if c.witness is not None else {}),
            } for c in self.checks],
        }


def twisted_c1(H: QuasiHopfStructure, F: Twistor,
               c1: AlgebraElement) -> AlgebraElement:
    """c1^F = sum f_i c1 S(f^i): the invariant transported to the twisted
    structure."""
    acc = H.algebra.zero()
    for (i, j), c in F.f.coeffs.items():
        acc = acc + (H.basis_element(i) * c1 * H.s_basis(j)).scale(c)
    return acc


def twisted_c2(H: QuasiHopfStructure, F: Twistor,
               c2: AlgebraElement) -> AlgebraElement:
    """c2^F = sum S(fbar_i) c2 fbar^i."""
    acc = H.algebra.zero()
    for (i, j), c in F.f_inv.coeffs.items():
        acc = acc + (H.s_basis(i) * c2 * H.basis_element(j)).scale(c)
    return acc


def verify_twist_invariance(H: QuasiHopfStructure, F: Twistor,
                            powers: Sequence[int] = (-1, 0, 1, 2),
                            reps: Optional[Dict[str, Representation]] = None
                            ) -> CasimirReport:
    """Recompute every central-element construction inside the twisted
    structure and assert exact equality with the untwisted values:

    * C1 from each even invariant (transported by the twistor),
    * C2 from each even pseudo-invariant,
    * the u-operator,
    * C_m and Cbar_m for the configured powers and representations.

    Any inequality is recorded with the exact difference element."""
    HF = twist_structure(H, F, verify=True)
    report = CasimirReport(subject=H.name or "structure", twistor=F.name)

    for t, c1 in enumerate(invariant_subspace(H).even):
        base = build_C1(H, c1)
        c1f = twisted_c1(H, F, c1)
        if not is_invariant_element(HF, c1f):
            report.checks.append(CasimirCheck(
                f"C1[inv:{t}]", base, agreement=False,
                witness="transported invariant fails invariance"))
            continue
        twisted = build_C1(HF, c1f)
        same = twisted == base
        report.checks.append(CasimirCheck(
            f"C1[inv:{t}]", base, twist_invariant=same,
            witness=None if same else twisted - base))

    for t, c2 in enumerate(pseudo_invariant_subspace(H).even):
        base = build_C2(H, c2)
        c2f = twisted_c2(H, F, c2)
        if not is_pseudo_invariant_element(HF, c2f):
            report.checks.append(CasimirCheck(
                f"C2[pinv:{t}]", base, agreement=False,
                witness="transported pseudo-invariant fails its invariance"))
            continue
        twisted = build_C2(HF, c2f)
        same = twisted == base
        report.checks.append(CasimirCheck(
            f"C2[pinv:{t}]", base, twist_invariant=same,
            witness=None if same else twisted - base))

    if H.r is not None:
        u = u_operator(H)
        uf = u_operator(HF)
        report.checks.append(CasimirCheck(
            "u", u, twist_invariant=(uf == u),
            witness=None if uf == u else uf - u))
        if reps:
            for rep_name in sorted(reps):
                rep = reps[rep_name]
                for m in powers:
                    cm, cmbar = casimir_Cm(H, rep, m)
                    cmf, cmbarf = casimir_Cm(HF, rep, m)
                    ok = cmf == cm
                    report.checks.append(CasimirCheck(
                        f"Cm[m={m},rep={rep_name}]", cm, twist_invariant=ok,
                        witness=None if ok else cmf - cm))
                    ok_bar = cmbarf == cmbar
                    report.checks.append(CasimirCheck(
                        f"Cmbar[m={m},rep={rep_name}]", cmbar,
                        twist_invariant=ok_bar,
                        witness=None if ok_bar else cmbarf - cmbar))
    return report

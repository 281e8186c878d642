"""A 27-dimensional small quantum group at a primitive cube root of unity.

Generators E, F, K with

    K E = q^2 E K,   K F = q^{-2} F K,   E F - F E = (K - K^{-1})/(q - q^{-1}),
    E^3 = F^3 = 0,   K^3 = 1,            q = z  (primitive cube root of 1),

ordered basis E^a F^b K^c, 0 <= a, b, c < 3, over the cyclotomic field of
order 3.  The Hopf structure used here is

    coproduct(E) = E (x) K + 1 (x) E,    coproduct(F) = F (x) 1 + K^{-1} (x) F,
    antipode(E) = -E K^{-1},             antipode(F) = -K F,

with trivial coassociator and alpha = beta = 1.  The R-matrix is found by
scanning the standard exponent conventions

    R = (1/3) sum_{n,i,j} (q - q^{-1})^n / [n]! *
            q^{g n(n-1)/2 + d n(i-j) + c i j}  E^n K^i (x) F^n K^j

over small (g, d, c) and keeping the first candidate that satisfies the
intertwining property and both hexagons exactly; its inverse is solved
inside the 81-dimensional monomial span.  Everything is verified by the
generic axiom checker before the entry is returned.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .catalog import CatalogEntry
from .errors import StructureValidationError
from .graded import (
    AlgebraElement,
    GradedAlgebra,
    GradedBasis,
    LinearMap,
    StructureConstants,
    TensorElement,
)
from .linalg import solve_affine
from .quasihopf import QuasiHopfStructure, verify_structure
from .representations import trivial_representation
from .scalars import FieldDescriptor, QQ, Scalar
from .twisting import identity_twistor

C3 = FieldDescriptor.cyclotomic(3)


def _monomial_label(a: int, b: int, c: int) -> str:
    parts = []
    for letter, power in (("E", a), ("F", b), ("K", c)):
        if power == 1:
            parts.append(letter)
        elif power > 1:
            parts.append(f"{letter}^{power}")
    return "*".join(parts) if parts else "1"


class _WordReducer:
    """Rewrites words in E, F, K to normal order E^a F^b K^c with exact
    cyclotomic coefficients."""

    def __init__(self):
        self.q = C3.generator()
        self.lam = (self.q - self.q.inv()).inv()  # 1/(q - q^{-1})
        self._cache: Dict[Tuple[str, ...], Dict[Tuple[int, int, int], Scalar]] = {}

    def reduce(self, word: Tuple[str, ...]) -> Dict[Tuple[int, int, int], Scalar]:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        result = self._reduce(word)
        self._cache[word] = result
        return result

    def _reduce(self, word: Tuple[str, ...]) -> Dict[Tuple[int, int, int], Scalar]:
        rank = {"E": 0, "F": 1, "K": 2}
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if rank[a] <= rank[b]:
                continue
            head, tail = word[:i], word[i + 2:]
            if (a, b) == ("K", "E"):
                return _scaled(self.reduce(head + ("E", "K") + tail), self.q ** 2)
            if (a, b) == ("K", "F"):
                return _scaled(self.reduce(head + ("F", "K") + tail), self.q ** -2)
            # F E = E F - lam K + lam K^2
            out: Dict[Tuple[int, int, int], Scalar] = {}
            _accumulate(out, self.reduce(head + ("E", "F") + tail), C3.one())
            _accumulate(out, self.reduce(head + ("K",) + tail), -self.lam)
            _accumulate(out, self.reduce(head + ("K", "K") + tail), self.lam)
            return out
        # normal ordered: truncate powers
        a = sum(1 for ch in word if ch == "E")
        b = sum(1 for ch in word if ch == "F")
        c = sum(1 for ch in word if ch == "K") % 3
        if a >= 3 or b >= 3:
            return {}
        return {(a, b, c): C3.one()}

    def word_of(self, a: int, b: int, c: int) -> Tuple[str, ...]:
        return ("E",) * a + ("F",) * b + ("K",) * c


def _scaled(table: Dict, s: Scalar) -> Dict:
    return {k: s * v for k, v in table.items()}


def _accumulate(acc: Dict, table: Dict, s: Scalar) -> None:
    for k, v in table.items():
        cur = acc.get(k)
        val = s * v
        acc[k] = val if cur is None else cur + val


@lru_cache(maxsize=1)
def _build_algebra() -> Tuple[GradedAlgebra, _WordReducer]:
    red = _WordReducer()
    triples = list(itertools.product(range(3), repeat=3))
    labels = tuple(_monomial_label(*t) for t in triples)
    index = {t: i for i, t in enumerate(triples)}
    basis = GradedBasis(labels, (0,) * 27, index[(0, 0, 0)])
    entries = {}
    for t1 in triples:
        w1 = red.word_of(*t1)
        for t2 in triples:
            prod = red.reduce(w1 + red.word_of(*t2))
            for t3, coeff in prod.items():
                if not coeff.is_zero():
                    entries[(index[t1], index[t2], index[t3])] = coeff
    algebra = GradedAlgebra(basis, StructureConstants(entries), C3,
                            name="uqsl2(3)")
    return algebra, red


def _element(A: GradedAlgebra, table: Dict[Tuple[int, int, int], Scalar]) -> AlgebraElement:
    return AlgebraElement(A, {A.index_of(_monomial_label(*t)): c
                              for t, c in table.items()})


def _tensor_power(t: TensorElement, n: int, unit: TensorElement) -> TensorElement:
    out = unit
    for _ in range(n):
        out = out * t
    return out


def _build_maps(A: GradedAlgebra, red: _WordReducer):
    q = red.q
    E = _element(A, {(1, 0, 0): C3.one()})
    F = _element(A, {(0, 1, 0): C3.one()})
    K = _element(A, {(0, 0, 1): C3.one()})
    Kinv = _element(A, {(0, 0, 2): C3.one()})
    one = A.unit()
    unit2 = TensorElement.unit((A, A))

    dE = TensorElement.of(E, K) + TensorElement.of(one, E)
    dF = TensorElement.of(F, one) + TensorElement.of(Kinv, F)
    dK = TensorElement.of(K, K)
    cop_images = []
    eps_images = []
    s_images = []
    sE = -(E * Kinv)
    sF = -(K * F)
    sK = Kinv
    for a, b, c in itertools.product(range(3), repeat=3):
        img = _tensor_power(dK, c, _tensor_power(
            dF, b, _tensor_power(dE, a, unit2)))
        cop_images.append(img)
        eps = C3.one() if (a == 0 and b == 0) else C3.zero()
        eps_images.append(TensorElement((), {(): eps} if not eps.is_zero() else {}))
        # antihomomorphism on the ordered word: S(K)^c S(F)^b S(E)^a
        s_el = one
        for _ in range(c):
            s_el = s_el * sK
        for _ in range(b):
            s_el = s_el * sF
        for _ in range(a):
            s_el = s_el * sE
        s_images.append(TensorElement.of(s_el))
    coproduct = LinearMap(A, (A, A), cop_images, name="coproduct")
    counit = LinearMap(A, (), eps_images, name="counit")
    antipode = LinearMap(A, (A,), s_images, name="antipode")
    return coproduct, counit, antipode


def _r_candidate(A: GradedAlgebra, red: _WordReducer,
                 g: int, d: int, c: int) -> TensorElement:
    q = red.q
    third = C3.from_rational(QQ(1, 3))
    coeffs: Dict[Tuple[int, int], Scalar] = {}
    qfact = [C3.one(), C3.one(), -C3.one()]  # [0]!, [1]!, [2]! at q = z
    for n in range(3):
        base = ((q - q.inv()) ** n) * qfact[n].inv() * q ** (g * (n * (n - 1) // 2))
        for i in range(3):
            for j in range(3):
                coeff = third * base * q ** (d * n * (i - j) + c * i * j)
                left = A.index_of(_monomial_label(n, 0, i))
                right = A.index_of(_monomial_label(0, n, j))
                key = (left, right)
                coeffs[key] = coeffs.get(key, C3.zero()) + coeff
    return TensorElement((A, A), coeffs)


def _invert_in_monomial_span(r: TensorElement, A: GradedAlgebra
                             ) -> Optional[TensorElement]:
    """Solve r * x = 1 inside span{E^n K^i (x) F^m K^j}; the span is closed
    under the product, so the inverse lives there when it exists."""
    left_keys = [A.index_of(_monomial_label(n, 0, i))
                 for n in range(3) for i in range(3)]
    right_keys = [A.index_of(_monomial_label(0, m, j))
                  for m in range(3) for j in range(3)]
    keys = [(l, r_) for l in left_keys for r_ in right_keys]
    pos = {k: t for t, k in enumerate(keys)}
    n = len(keys)
    rows = [[C3.zero()] * n for _ in range(n)]
    for col, key in enumerate(keys):
        image = r * TensorElement((A, A), {key: C3.one()})
        for k, coeff in image.coeffs.items():
            if k not in pos:
                return None
            rows[pos[k]][col] = coeff
    unit = TensorElement.unit((A, A))
    rhs = [C3.zero()] * n
    for k, coeff in unit.coeffs.items():
        rhs[pos[k]] = coeff
    particular, _ = solve_affine(rows, rhs, n, C3)
    if particular is None:
        return None
    inv = TensorElement((A, A), {keys[t]: particular[t] for t in range(n)})
    if r * inv != unit or inv * r != unit:
        return None
    return inv


def _search_r(H: QuasiHopfStructure, red: _WordReducer
              ) -> Tuple[TensorElement, TensorElement]:
    A = H.algebra
    gens = [A.index_of("E"), A.index_of("F"), A.index_of("K")]
    for g, d, c in itertools.product((0, 1, 2), (1, 2, 0), (1, 2)):
        r = _r_candidate(A, red, g, d, c)
        ok = True
        for idx in gens:
            a = A.basis_element(idx)
            if H.delta_t(a) * r != r * H.delta(a):
                ok = False
                break
        if not ok:
            continue
        lhs = r.apply_maps([(0, H.coproduct)])
        if lhs != r.embed((0, 2), H.legs(3)) * r.embed((1, 2), H.legs(3)):
            continue
        rhs = r.apply_maps([(1, H.coproduct)])
        if rhs != r.embed((0, 2), H.legs(3)) * r.embed((0, 1), H.legs(3)):
            continue
        r_inv = _invert_in_monomial_span(r, A)
        if r_inv is None:
            continue
        return r, r_inv
    raise StructureValidationError(
        "no R-matrix convention passed the quantum-group hexagons")


def build_small_uqsl2() -> CatalogEntry:
    A, red = _build_algebra()
    coproduct, counit, antipode = _build_maps(A, red)
    unit3 = TensorElement.unit((A, A, A))
    H0 = QuasiHopfStructure(
        algebra=A, coproduct=coproduct, counit=counit, antipode=antipode,
        phi=unit3, phi_inv=unit3, alpha=A.unit(), beta=A.unit(),
        name="small-uqsl2")
    r, r_inv = _search_r(H0, red)
    H = H0.with_data(r=r, r_inv=r_inv)
    report = verify_structure(H)
    if not report.passed:
        failed = ", ".join(ch.axiom for ch in report.failures())
        raise StructureValidationError(f"small-uqsl2 failed verification: {failed}")
    twistors = {"identity": identity_twistor(H)}
    reps = {"trivial": trivial_representation(H.counit)}
    return CatalogEntry("small-uqsl2", H, twistors, reps,
                        notes="small quantum group at a primitive cube root of "
                              "unity; R-matrix convention selected by exact "
                              "verification")

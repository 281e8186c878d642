"""Z2-graded finite-dimensional algebra substrate.

A :class:`GradedAlgebra` is a basis with parities plus sparse structure
constants, validated at construction (associativity, unit law, parity
compatibility).  Elements and tensors are sparse dictionaries of exact
scalars; every tensor operation carries the Koszul signs implied by the
graded tensor product rule

    (a (x) b)(a' (x) b') = (-1)^{[b][a']} (aa' (x) bb') ,

extended to arbitrary ranks.  Tensor legs may live over different graded
algebras; this is how matrix-valued legs (a representation applied to one
leg) are supported without a second sign calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    BasisMismatchError,
    InvalidPermutationError,
    OddMapError,
    RankMismatchError,
    StructureValidationError,
)
from .report import AxiomCheck
from .scalars import FieldDescriptor, Scalar

Key = Tuple[int, ...]


def _clean(coeffs: Mapping) -> dict:
    return {k: v for k, v in coeffs.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# bases and structure constants


@dataclass(frozen=True)
class GradedBasis:
    """Ordered basis labels with parities in {0,1}; the unit is a basis element."""

    labels: Tuple[str, ...]
    parity: Tuple[int, ...]
    unit_index: int

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise StructureValidationError("basis labels must be distinct")
        if len(self.labels) != len(self.parity):
            raise StructureValidationError("labels and parities differ in length")
        if any(p not in (0, 1) for p in self.parity):
            raise StructureValidationError("parities must be 0 or 1")
        if not 0 <= self.unit_index < len(self.labels):
            raise StructureValidationError("unit index out of range")
        if self.parity[self.unit_index] != 0:
            raise StructureValidationError("the unit must be even")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureValidationError(f"unknown basis label {label!r}") from None


@dataclass(frozen=True)
class StructureConstants:
    """Sparse multiplication table: entries[(i, j, k)] is the coefficient of
    basis k in the product (basis i)(basis j)."""

    entries: Mapping[Tuple[int, int, int], Scalar]

    def table(self) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
        out: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for (i, j, k), c in self.entries.items():
            if not c.is_zero():
                out.setdefault((i, j), {})[k] = c
        return out


class BaseAlgebra:
    """Shared interface for graded algebras used as tensor legs."""

    field: FieldDescriptor
    labels: Tuple[str, ...]
    parity: Tuple[int, ...]
    unit_coeffs: Dict[int, Scalar]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        raise NotImplementedError

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, {i: self.field.one()})

    def unit(self) -> "AlgebraElement":
        return AlgebraElement(self, dict(self.unit_coeffs))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def element(self, coeffs: Mapping[Union[int, str], Union[Scalar, int]]) -> "AlgebraElement":
        out: Dict[int, Scalar] = {}
        for k, v in coeffs.items():
            idx = k if isinstance(k, int) else self.index_of(k)
            s = v if isinstance(v, Scalar) else self.field.from_int(v)
            if not s.is_zero():
                out[idx] = out.get(idx, self.field.zero()) + s
        return AlgebraElement(self, _clean(out))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureValidationError(f"unknown basis label {label!r}") from None


class GradedAlgebra(BaseAlgebra):
    """A validated unital associative Z2-graded algebra given by structure
    constants.  Validation runs at construction: parity compatibility,
    two-sided unit law, and associativity on every basis triple."""

    def __init__(self, basis: GradedBasis, constants: StructureConstants,
                 field: FieldDescriptor, validate: bool = True, name: str = ""):
        self.basis = basis
        self.field = field
        self.labels = basis.labels
        self.parity = basis.parity
        self.name = name
        self._mul = constants.table()
        self.unit_coeffs = {basis.unit_index: field.one()}
        if validate:
            self._validate()

    def mul_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        return self._mul.get((i, j), {})

    def _mul_dict_basis(self, x: Dict[int, Scalar], j: int) -> Dict[int, Scalar]:
        acc: Dict[int, Scalar] = {}
        for i, c in x.items():
            for k, d in self.mul_basis(i, j).items():
                s = acc.get(k)
                acc[k] = c * d if s is None else s + c * d
        return _clean(acc)

    def _mul_basis_dict(self, i: int, y: Dict[int, Scalar]) -> Dict[int, Scalar]:
        acc: Dict[int, Scalar] = {}
        for j, c in y.items():
            for k, d in self.mul_basis(i, j).items():
                s = acc.get(k)
                acc[k] = c * d if s is None else s + c * d
        return _clean(acc)

    def _validate(self):
        d = self.dim
        u = self.basis.unit_index
        for (i, j), prods in self._mul.items():
            pij = (self.parity[i] + self.parity[j]) % 2
            for k, c in prods.items():
                if self.parity[k] != pij:
                    raise StructureValidationError(
                        f"parity violation in product {self.labels[i]}*{self.labels[j]}"
                        f" -> {self.labels[k]}")
        for i in range(d):
            if self.mul_basis(u, i) != {i: self.field.one()} or \
               self.mul_basis(i, u) != {i: self.field.one()}:
                raise StructureValidationError(
                    f"unit law fails at basis element {self.labels[i]}")
        for i in range(d):
            for j in range(d):
                ij = self.mul_basis(i, j)
                for l in range(d):
                    left = self._mul_dict_basis(ij, l)
                    right = self._mul_basis_dict(i, self.mul_basis(j, l))
                    if left != right:
                        raise StructureValidationError(
                            "associativity fails at "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[l]})")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.labels == other.labels and self.parity == other.parity
                and self.basis.unit_index == other.basis.unit_index
                and self.field == other.field and self._mul == other._mul)

    def __hash__(self):
        return hash((self.labels, self.parity, self.field))

    def __repr__(self):
        return f"GradedAlgebra({self.name or ','.join(self.labels)})"


class MatrixSpaceAlgebra(BaseAlgebra):
    """End(V) for a graded carrier V, with the matrix-unit basis E[i,j].
    The parity of E[i,j] is parity(v_i) + parity(v_j); products are the
    usual delta rule, generated on demand."""

    def __init__(self, carrier_parity: Sequence[int], field: FieldDescriptor,
                 name: str = ""):
        self.carrier_parity = tuple(carrier_parity)
        self.field = field
        self.name = name
        d = len(self.carrier_parity)
        self.carrier_dim = d
        self.labels = tuple(f"E[{i},{j}]" for i in range(d) for j in range(d))
        self.parity = tuple((self.carrier_parity[i] + self.carrier_parity[j]) % 2
                            for i in range(d) for j in range(d))
        self.unit_coeffs = {i * d + i: field.one() for i in range(d)}

    def mul_basis(self, a: int, b: int) -> Dict[int, Scalar]:
        d = self.carrier_dim
        i, j = divmod(a, d)
        k, l = divmod(b, d)
        if j != k:
            return {}
        return {i * d + l: self.field.one()}

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, MatrixSpaceAlgebra):
            return NotImplemented
        return self.carrier_parity == other.carrier_parity and self.field == other.field

    def __hash__(self):
        return hash((self.carrier_parity, self.field))

    def __repr__(self):
        return f"MatrixSpaceAlgebra(dim={self.carrier_dim})"


# ---------------------------------------------------------------------------
# elements


class AlgebraElement:
    """Sparse linear combination of basis elements, zero coefficients stripped."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: BaseAlgebra, coeffs: Mapping[int, Scalar]):
        self.algebra = algebra
        self.coeffs = _clean(coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous elements (zero counts as even), else None."""
        ps = {self.algebra.parity[i] for i in self.coeffs}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def is_even(self) -> bool:
        return self.parity() == 0

    def even_part(self) -> "AlgebraElement":
        par = self.algebra.parity
        return AlgebraElement(self.algebra,
                              {i: c for i, c in self.coeffs.items() if par[i] == 0})

    def odd_part(self) -> "AlgebraElement":
        par = self.algebra.parity
        return AlgebraElement(self.algebra,
                              {i: c for i, c in self.coeffs.items() if par[i] == 1})

    def homogeneous_parts(self) -> List[Tuple[int, "AlgebraElement"]]:
        parts = []
        for p, part in ((0, self.even_part()), (1, self.odd_part())):
            if not part.is_zero():
                parts.append((p, part))
        return parts

    def _check_same(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise BasisMismatchError("elements of different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        acc = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = acc.get(i)
            acc[i] = c if s is None else s + c
        return AlgebraElement(self.algebra, acc)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, s: Union[Scalar, int]) -> "AlgebraElement":
        if isinstance(s, int):
            s = self.algebra.field.from_int(s)
        if s.is_zero():
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {i: s * c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check_same(other)
        alg = self.algebra
        acc: Dict[int, Scalar] = {}
        for i, c in self.coeffs.items():
            for j, d in other.coeffs.items():
                cd = c * d
                for k, e in alg.mul_basis(i, j).items():
                    s = acc.get(k)
                    acc[k] = cd * e if s is None else s + cd * e
        return AlgebraElement(alg, acc)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset((i, v) for i, v in self.coeffs.items()))

    def to_dict(self) -> Dict[str, str]:
        return {self.algebra.labels[i]: str(c)
                for i, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{self.algebra.labels[i]}"
                          for i, c in sorted(self.coeffs.items()))


# ---------------------------------------------------------------------------
# tensors


class TensorElement:
    """Sparse graded tensor; each leg may live over its own algebra."""

    __slots__ = ("legs", "coeffs")

    def __init__(self, legs: Sequence[BaseAlgebra], coeffs: Mapping[Key, Scalar]):
        self.legs = tuple(legs)
        self.coeffs = _clean(coeffs)

    @property
    def rank(self) -> int:
        return len(self.legs)

    @property
    def field(self) -> FieldDescriptor:
        return self.legs[0].field if self.legs else None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def unit(legs: Sequence[BaseAlgebra]) -> "TensorElement":
        acc = {(): legs[0].field.one()}
        for leg in legs:
            nxt: Dict[Key, Scalar] = {}
            for key, c in acc.items():
                for i, u in leg.unit_coeffs.items():
                    nxt[key + (i,)] = c * u
            acc = nxt
        return TensorElement(legs, acc)

    @staticmethod
    def of(*factors: AlgebraElement) -> "TensorElement":
        """The plain tensor product a1 (x) a2 (x) ... of elements."""
        legs = tuple(f.algebra for f in factors)
        acc: Dict[Key, Scalar] = {(): factors[0].algebra.field.one()}
        for f in factors:
            nxt: Dict[Key, Scalar] = {}
            for key, c in acc.items():
                for i, d in f.coeffs.items():
                    nxt[key + (i,)] = c * d
            acc = nxt
        return TensorElement(legs, acc)

    def key_parity(self, key: Key) -> int:
        return sum(self.legs[t].parity[key[t]] for t in range(len(key))) % 2

    def is_even(self) -> bool:
        return all(self.key_parity(k) == 0 for k in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- linear structure --------------------------------------------------

    def _check_legs(self, other: "TensorElement"):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")
        for a, b in zip(self.legs, other.legs):
            if a is not b and a != b:
                raise BasisMismatchError("tensor legs over different algebras")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_legs(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = acc.get(k)
            acc[k] = c if s is None else s + c
        return TensorElement(self.legs, acc)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.legs, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, s: Union[Scalar, int]) -> "TensorElement":
        if isinstance(s, int):
            s = self.legs[0].field.from_int(s)
        if s.is_zero():
            return TensorElement(self.legs, {})
        return TensorElement(self.legs, {k: s * c for k, c in self.coeffs.items()})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    # -- graded product ------------------------------------------------------

    def __mul__(self, other):
        """Componentwise graded product: the Koszul sign exponent for basis
        keys K (left) and L (right) is sum over i < j of parity(L_i)*parity(K_j)."""
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check_legs(other)
        r = self.rank
        legs = self.legs
        parities = [leg.parity for leg in legs]
        acc: Dict[Key, Scalar] = {}
        for kx, cx in self.coeffs.items():
            # suffix[i] = parity(K_{i+1}) + ... + parity(K_{r-1})
            suffix = [0] * (r + 1)
            for t in range(r - 1, -1, -1):
                suffix[t] = suffix[t + 1] + parities[t][kx[t]]
            for ky, cy in other.coeffs.items():
                exp = sum(parities[t][ky[t]] * suffix[t + 1] for t in range(r))
                coeff = cx * cy
                if exp % 2:
                    coeff = -coeff
                partial: Dict[Key, Scalar] = {(): coeff}
                for t in range(r):
                    prods = legs[t].mul_basis(kx[t], ky[t])
                    if not prods:
                        partial = {}
                        break
                    nxt: Dict[Key, Scalar] = {}
                    for key, c in partial.items():
                        for k, e in prods.items():
                            nxt[key + (k,)] = c * e
                    partial = nxt
                for key, c in partial.items():
                    s = acc.get(key)
                    acc[key] = c if s is None else s + c
        return TensorElement(legs, acc)

    # -- permutations ---------------------------------------------------------

    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """Graded leg permutation: output leg j carries input leg perm[j];
        the sign counts inverted pairs of odd legs."""
        r = self.rank
        perm = tuple(perm)
        if sorted(perm) != list(range(r)):
            raise InvalidPermutationError(f"{perm} is not a permutation of 0..{r - 1}")
        legs = tuple(self.legs[p] for p in perm)
        parities = [leg.parity for leg in self.legs]
        acc: Dict[Key, Scalar] = {}
        for key, c in self.coeffs.items():
            exp = 0
            for a in range(r):
                for b in range(a + 1, r):
                    if perm[a] > perm[b]:
                        exp += parities[perm[a]][key[perm[a]]] * \
                               parities[perm[b]][key[perm[b]]]
            newkey = tuple(key[p] for p in perm)
            val = -c if exp % 2 else c
            s = acc.get(newkey)
            acc[newkey] = val if s is None else s + val
        return TensorElement(legs, acc)

    def swap(self) -> "TensorElement":
        """The graded twist on a rank-2 tensor."""
        return self.permute((1, 0))

    # -- multiplication map ---------------------------------------------------

    def merge(self, i: int, j: int) -> "TensorElement":
        """Multiply adjacent legs i and j = i+1 together (rank drops by one)."""
        if j != i + 1:
            raise RankMismatchError(
                "only adjacent legs can be merged; permute first")
        if not 0 <= i < self.rank - 1:
            raise RankMismatchError("leg out of range")
        a, b = self.legs[i], self.legs[j]
        if a is not b and a != b:
            raise BasisMismatchError("merged legs must share one algebra")
        legs = self.legs[:i] + self.legs[i + 1:]
        acc: Dict[Key, Scalar] = {}
        for key, c in self.coeffs.items():
            for k, e in a.mul_basis(key[i], key[j]).items():
                newkey = key[:i] + (k,) + key[j + 1:]
                ce = c * e
                s = acc.get(newkey)
                acc[newkey] = ce if s is None else s + ce
        return TensorElement(legs, acc)

    def merge_all(self) -> AlgebraElement:
        """Collapse all legs with the product map, left to right."""
        out = self
        while out.rank > 1:
            out = out.merge(0, 1)
        return out.as_element()

    # -- maps on legs -----------------------------------------------------------

    def apply_maps(self, assignments: Sequence[Tuple[int, "LinearMap"]]) -> "TensorElement":
        """Apply parity-preserving linear maps to the indicated legs, identity
        elsewhere.  Because the maps are even, no Koszul signs arise."""
        for leg, m in assignments:
            if not 0 <= leg < self.rank:
                raise RankMismatchError(f"leg {leg} out of range for rank {self.rank}")
            if not m.parity_preserving:
                raise OddMapError(
                    "only parity-preserving maps may be applied on legs")
        out = self
        for leg, m in sorted(assignments, key=lambda lm: -lm[0]):
            src = out.legs[leg]
            if m.source is not src and m.source != src:
                raise BasisMismatchError("map source does not match the leg algebra")
            legs = out.legs[:leg] + m.target_legs + out.legs[leg + 1:]
            acc: Dict[Key, Scalar] = {}
            for key, c in out.coeffs.items():
                img = m.images[key[leg]]
                for ikey, d in img.coeffs.items():
                    newkey = key[:leg] + ikey + key[leg + 1:]
                    cd = c * d
                    s = acc.get(newkey)
                    acc[newkey] = cd if s is None else s + cd
            out = TensorElement(legs, acc)
        return out

    # -- embedding ----------------------------------------------------------------

    def embed(self, slots: Sequence[int], legs: Sequence[BaseAlgebra]) -> "TensorElement":
        """Place this tensor's legs at the given (strictly increasing) slots
        of a larger tensor, units elsewhere.  Units are even, so no signs."""
        slots = tuple(slots)
        if len(slots) != self.rank or list(slots) != sorted(set(slots)):
            raise InvalidPermutationError("slots must be strictly increasing")
        legs = tuple(legs)
        for t, s in enumerate(slots):
            if not 0 <= s < len(legs):
                raise RankMismatchError("slot out of range")
            if legs[s] is not self.legs[t] and legs[s] != self.legs[t]:
                raise BasisMismatchError("slot algebra does not match tensor leg")
        slot_of = {s: t for t, s in enumerate(slots)}
        acc: Dict[Key, Scalar] = {}
        for key, c in self.coeffs.items():
            partial: Dict[Key, Scalar] = {(): c}
            for pos in range(len(legs)):
                nxt: Dict[Key, Scalar] = {}
                if pos in slot_of:
                    for pkey, pc in partial.items():
                        nxt[pkey + (key[slot_of[pos]],)] = pc
                else:
                    for pkey, pc in partial.items():
                        for i, u in legs[pos].unit_coeffs.items():
                            nxt[pkey + (i,)] = pc * u
                partial = nxt
            for k, v in partial.items():
                s = acc.get(k)
                acc[k] = v if s is None else s + v
        return TensorElement(legs, acc)

    # -- conversions -----------------------------------------------------------------

    def as_element(self) -> AlgebraElement:
        if self.rank != 1:
            raise RankMismatchError("only rank-1 tensors convert to elements")
        return AlgebraElement(self.legs[0], {k[0]: c for k, c in self.coeffs.items()})

    def as_scalar(self, field: FieldDescriptor) -> Scalar:
        if self.rank != 0:
            raise RankMismatchError("only rank-0 tensors convert to scalars")
        return self.coeffs.get((), field.zero())

    # -- equality ----------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.rank != other.rank:
            return False
        if any(a is not b and a != b for a, b in zip(self.legs, other.legs)):
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for key, c in sorted(self.coeffs.items()):
            label = "(x)".join(self.legs[t].labels[key[t]] for t in range(self.rank))
            terms.append(f"{c}*[{label}]")
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# linear maps


class LinearMap:
    """A linear map from one algebra into a tensor power, stored as the image
    of every basis element.  ``parity_preserving`` is computed from the data."""

    def __init__(self, source: BaseAlgebra, target_legs: Sequence[BaseAlgebra],
                 images: Sequence[TensorElement], name: str = ""):
        self.source = source
        self.target_legs = tuple(target_legs)
        self.images = list(images)
        self.name = name
        if len(self.images) != source.dim:
            raise StructureValidationError(
                f"map {name or '?'} needs one image per basis element")
        for img in self.images:
            if img.rank != len(self.target_legs):
                raise StructureValidationError(f"map {name or '?'}: image rank mismatch")
        self.parity_preserving = all(
            img.key_parity(key) == source.parity[i]
            for i, img in enumerate(self.images)
            for key in img.coeffs)

    @property
    def target_rank(self) -> int:
        return len(self.target_legs)

    def __call__(self, x: AlgebraElement):
        """Linear extension; rank-1 images collapse to an element, rank-0 to a scalar."""
        if x.algebra is not self.source and x.algebra != self.source:
            raise BasisMismatchError("element does not belong to the map's source")
        legs = self.target_legs
        acc: Dict[Key, Scalar] = {}
        for i, c in x.coeffs.items():
            for key, d in self.images[i].coeffs.items():
                cd = c * d
                s = acc.get(key)
                acc[key] = cd if s is None else s + cd
        out = TensorElement(legs, acc)
        if self.target_rank == 1:
            return out.as_element()
        if self.target_rank == 0:
            return out.coeffs.get((), self.source.field.zero())
        return out

    def on_basis(self, i: int) -> TensorElement:
        return self.images[i]

    # -- rank 1 -> 1 helpers ----------------------------------------------

    def as_matrix(self) -> List[List[Scalar]]:
        """Column j is the image of basis element j (rank-1 maps only)."""
        assert self.target_rank == 1
        d, z = self.source.dim, self.source.field.zero()
        m = [[z for _ in range(d)] for _ in range(d)]
        for j, img in enumerate(self.images):
            for (i,), c in img.coeffs.items():
                m[i][j] = c
        return m

    @staticmethod
    def from_matrix(source: BaseAlgebra, matrix: List[List[Scalar]],
                    name: str = "") -> "LinearMap":
        images = []
        for j in range(source.dim):
            images.append(TensorElement(
                (source,), {(i,): matrix[i][j] for i in range(source.dim)}))
        return LinearMap(source, (source,), images, name=name)

    def compose(self, inner: "LinearMap", name: str = "") -> "LinearMap":
        """self after inner, for rank 1 -> 1 maps."""
        assert self.target_rank == 1 and inner.target_rank == 1
        images = [TensorElement.of(self(inner(inner.source.basis_element(i))))
                  for i in range(inner.source.dim)]
        return LinearMap(inner.source, (self.target_legs[0],), images,
                         name=name or f"{self.name}.{inner.name}")

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source == other.source and self.target_legs == other.target_legs
                and self.images == other.images)

    def __repr__(self):
        return f"LinearMap({self.name or '?'}: 1 -> {self.target_rank})"


def identity_map(algebra: BaseAlgebra, name: str = "id") -> LinearMap:
    return LinearMap(algebra, (algebra,),
                     [TensorElement((algebra,), {(i,): algebra.field.one()})
                      for i in range(algebra.dim)], name=name)


def check_antihomomorphism(s_map: LinearMap, name: str = "antipode-antihomomorphism") -> AxiomCheck:
    """Check the graded rule S(ab) = (-1)^{[a][b]} S(b) S(a) on all basis pairs."""
    alg = s_map.source
    for i in range(alg.dim):
        for j in range(alg.dim):
            ab = alg.basis_element(i) * alg.basis_element(j)
            lhs = s_map(ab)
            rhs = s_map(alg.basis_element(j)) * s_map(alg.basis_element(i))
            if alg.parity[i] * alg.parity[j] % 2:
                rhs = -rhs
            if lhs != rhs:
                return AxiomCheck(name, False, witness=lhs - rhs,
                                  element=f"({alg.labels[i]}, {alg.labels[j]})")
    return AxiomCheck(name, True)

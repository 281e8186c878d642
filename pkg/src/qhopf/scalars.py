"""Exact scalar arithmetic over the engine's coefficient fields.

Three field kinds are supported, selected by a :class:`FieldDescriptor`:

* ``rationals`` -- plain fractions,
* ``cyclotomic(n)`` -- the field obtained by adjoining a primitive n-th
  root of unity ``z``, elements stored as polynomials in ``z`` reduced
  modulo the n-th cyclotomic polynomial,
* ``rational-functions(q)`` -- rational functions in one indeterminate,
  stored as a coprime numerator/denominator pair with monic denominator.

Every representation is canonical, so two scalars are equal exactly when
their stored payloads are equal.  There is no floating point anywhere;
every identity check downstream reduces to "is this payload empty/zero".

>>> F = FieldDescriptor.rationals()
>>> str(F.parse("1/2") + F.parse("1/3"))
'5/6'
>>> C4 = FieldDescriptor.cyclotomic(4)
>>> str(C4.parse("z") * C4.parse("z^2"))   # z^3 = -z mod z^2+1
'-z'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import FieldMismatchError, NotInvertibleError, ScalarSyntaxError

try:  # gmpy2 gives a large constant-factor speedup; fractions is the fallback
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

_QQ0 = QQ(0)
_QQ1 = QQ(1)

Poly = Tuple  # dense coefficients, constant term first, no trailing zeros


# ---------------------------------------------------------------------------
# polynomial helpers over QQ


def _ptrim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _ptrim((a[i] if i < len(a) else _QQ0) + (b[i] if i < len(b) else _QQ0)
                  for i in range(n))


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_QQ0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        for j, d in enumerate(b):
            out[i + j] += c * d
    return _ptrim(out)


def _pdivmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_QQ0] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        off = len(a) - len(b)
        q[off] = f
        for i, c in enumerate(b):
            a[off + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return _ptrim(q), _ptrim(a)


def _pmonic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (_QQ1,), ()
    t0, t1 = (), (_QQ1,)
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pneg(_pmul(q, s1)))
        t0, t1 = t1, _padd(t0, _pneg(_pmul(q, t1)))
    if r0 and r0[-1] != 1:
        lead = r0[-1]
        r0 = tuple(c / lead for c in r0)
        s0 = tuple(c / lead for c in s0)
        t0 = tuple(c / lead for c in t0)
    return r0, s0, t0


def _ppow(a: Poly, n: int) -> Poly:
    out = (_QQ1,)
    base = a
    while n:
        if n & 1:
            out = _pmul(out, base)
        base = _pmul(base, base)
        n >>= 1
    return out


def cyclotomic_polynomial(n: int) -> Poly:
    """Coefficients of the n-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(4) == (QQ(1), QQ(0), QQ(1))
    True
    """
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    # x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    num = _ptrim([-_QQ1] + [_QQ0] * (n - 1) + [_QQ1])
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, cyclotomic_polynomial(d))
            assert not rem
    return num


# ---------------------------------------------------------------------------
# field descriptors

RATIONALS = "rationals"
CYCLOTOMIC = "cyclotomic"
RATIONAL_FUNCTIONS = "rational-functions"


@dataclass(frozen=True)
class FieldDescriptor:
    """Selects one of the supported exact coefficient fields."""

    kind: str
    order: Optional[int] = None          # cyclotomic order n >= 1
    indeterminate: Optional[str] = None  # rational-function variable name

    def __post_init__(self):
        if self.kind == RATIONALS:
            pass
        elif self.kind == CYCLOTOMIC:
            if self.order is None or self.order < 1:
                raise ValueError("cyclotomic order must be a positive integer")
        elif self.kind == RATIONAL_FUNCTIONS:
            if not self.indeterminate or not self.indeterminate.isidentifier():
                raise ValueError("indeterminate must be a nonempty identifier")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(RATIONALS)

    @classmethod
    def cyclotomic(cls, order: int) -> "FieldDescriptor":
        return cls(CYCLOTOMIC, order=order)

    @classmethod
    def rational_functions(cls, indeterminate: str = "q") -> "FieldDescriptor":
        return cls(RATIONAL_FUNCTIONS, indeterminate=indeterminate)

    @property
    def modulus(self) -> Poly:
        assert self.kind == CYCLOTOMIC
        cache = FieldDescriptor.__dict__.get("_moduli")
        if cache is None:
            cache = {}
            setattr(FieldDescriptor, "_moduli", cache)
        if self.order not in cache:
            cache[self.order] = cyclotomic_polynomial(self.order)
        return cache[self.order]

    @property
    def generator_name(self) -> Optional[str]:
        if self.kind == CYCLOTOMIC:
            return "z"
        if self.kind == RATIONAL_FUNCTIONS:
            return self.indeterminate
        return None

    # -- element constructors -----------------------------------------

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        return self.from_rational(QQ(n))

    def from_rational(self, r) -> "Scalar":
        r = QQ(r)
        if self.kind == RATIONALS:
            return Scalar(self, r)
        if self.kind == CYCLOTOMIC:
            return Scalar(self, _ptrim((r,)))
        return Scalar(self, (_ptrim((r,)), (_QQ1,)))

    def generator(self) -> "Scalar":
        """The root of unity ``z`` or the indeterminate, as a scalar."""
        if self.kind == CYCLOTOMIC:
            return self._from_poly((_QQ0, _QQ1))
        if self.kind == RATIONAL_FUNCTIONS:
            return Scalar(self, ((_QQ0, _QQ1), (_QQ1,)))
        raise ValueError("the rationals have no generator")

    def _from_poly(self, p: Poly) -> "Scalar":
        assert self.kind == CYCLOTOMIC
        _, rem = _pdivmod(_ptrim(p), self.modulus)
        return Scalar(self, rem)

    def parse(self, text: str) -> "Scalar":
        return parse_scalar(text, self)

    def __str__(self):
        if self.kind == CYCLOTOMIC:
            return f"cyclotomic({self.order})"
        if self.kind == RATIONAL_FUNCTIONS:
            return f"rational-functions({self.indeterminate})"
        return "rationals"


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """An exact field element in canonical form.

    Supports ``+ - * /``, unary ``-``, powers with integer exponents and
    exact equality.  Mixing scalars from different fields raises
    :class:`FieldMismatchError`.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value):
        self.field = field
        self.value = value

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        if self.field.kind == RATIONALS:
            return self.value == 0
        if self.field.kind == CYCLOTOMIC:
            return not self.value
        return not self.value[0]

    def is_one(self) -> bool:
        return self == self.field.one()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if f.kind == RATIONALS:
            return Scalar(f, self.value + other.value)
        if f.kind == CYCLOTOMIC:
            return Scalar(f, _padd(self.value, other.value))
        (n1, d1), (n2, d2) = self.value, other.value
        return _ratfun(f, _padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.kind == RATIONALS:
            return Scalar(f, -self.value)
        if f.kind == CYCLOTOMIC:
            return Scalar(f, _pneg(self.value))
        n, d = self.value
        return Scalar(f, (_pneg(n), d))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if f.kind == RATIONALS:
            return Scalar(f, self.value * other.value)
        if f.kind == CYCLOTOMIC:
            _, rem = _pdivmod(_pmul(self.value, other.value), f.modulus)
            return Scalar(f, rem)
        (n1, d1), (n2, d2) = self.value, other.value
        return _ratfun(f, _pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        """Multiplicative inverse; raises :class:`NotInvertibleError` at zero."""
        if self.is_zero():
            raise NotInvertibleError("not invertible: zero scalar")
        f = self.field
        if f.kind == RATIONALS:
            return Scalar(f, 1 / self.value)
        if f.kind == CYCLOTOMIC:
            g, s, _ = _pxgcd(self.value, f.modulus)
            if len(g) != 1:  # cannot happen: cyclotomic polynomials are irreducible
                raise NotInvertibleError("not invertible modulo the cyclotomic polynomial")
            _, rem = _pdivmod(tuple(c / g[0] for c in s), f.modulus)
            return Scalar(f, rem)
        n, d = self.value
        return _ratfun(f, d, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.is_zero()

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return f"Scalar({self})"


def _ratfun(field: FieldDescriptor, num: Poly, den: Poly) -> Scalar:
    """Canonicalize a rational function: coprime, monic denominator."""
    if not den:
        raise NotInvertibleError("not invertible: zero denominator")
    if not num:
        return Scalar(field, ((), (_QQ1,)))
    g = _pgcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = tuple(c / lead for c in num)
        den = tuple(c / lead for c in den)
    return Scalar(field, (num, den))


# ---------------------------------------------------------------------------
# rendering


def _render_q(c) -> str:
    c = QQ(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_poly(p: Poly, var: str, shift: int = 0) -> str:
    """Render sum of c_i * var^(i+shift), highest power first."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        e = i + shift
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _render_q(mag)
        else:
            head = "" if mag == 1 else _render_q(mag) + "*"
            body = head + (var if e == 1 else f"{var}^{e}")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def render_scalar(x: Scalar) -> str:
    f = x.field
    if f.kind == RATIONALS:
        return _render_q(x.value)
    if f.kind == CYCLOTOMIC:
        return _render_poly(x.value, "z")
    num, den = x.value
    if den == (_QQ1,):
        return _render_poly(num, f.indeterminate)
    nz = [i for i, c in enumerate(den) if c != 0]
    if len(nz) == 1:  # monomial denominator: render as a Laurent polynomial
        return _render_poly(tuple(c / den[nz[0]] for c in num),
                            f.indeterminate, shift=-nz[0])
    return (f"({_render_poly(num, f.indeterminate)})"
            f"/({_render_poly(den, f.indeterminate)})")


# ---------------------------------------------------------------------------
# parsing

_TOKEN_OPS = "+-*/^()"


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ScalarSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    """Recursive descent over:  expr := term (('+'|'-') term)*,
    term := factor (('*'|'/') factor)*,  factor := '-' factor | atom,
    atom := INT ('/' INT)? | NAME ('^' ('-')? INT)? | '(' expr ')'.
    """

    def __init__(self, text: str, field: FieldDescriptor):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ScalarSyntaxError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Scalar:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ScalarSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ScalarSyntaxError("not invertible: division by zero", pos)
                value = value / rhs
        return value

    def factor(self) -> Scalar:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        return self.atom()

    def atom(self) -> Scalar:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            result = self.field.from_int(int(value))
            if self.peek()[0] == "/" and self.tokens[self.pos + 1][0] == "int":
                self.take()
                dkind, dval, dpos = self.take("int")
                if int(dval) == 0:
                    raise ScalarSyntaxError("not invertible: zero denominator", dpos)
                result = self.field.from_rational(QQ(int(value), int(dval)))
            return result
        if kind == "name":
            self.take()
            if value != self.field.generator_name:
                raise ScalarSyntaxError(
                    f"token {value!r} does not belong to the field {self.field}", pos)
            base = self.field.generator()
            if self.peek()[0] == "^":
                self.take()
                sign = 1
                if self.peek()[0] == "-":
                    self.take()
                    sign = -1
                ekind, eval_, _ = self.take("int")
                return base ** (sign * int(eval_))
            return base
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ScalarSyntaxError(f"unexpected token {value!r}", pos)


def parse_scalar(text: str, field: FieldDescriptor) -> Scalar:
    """Parse a scalar string into canonical form.

    >>> str(parse_scalar("-3/4", FieldDescriptor.rationals()))
    '-3/4'
    >>> str(parse_scalar("q^2 - q^-1", FieldDescriptor.rational_functions("q")))
    'q^2 - q^-1'
    >>> str(parse_scalar("z + 1", FieldDescriptor.cyclotomic(3)))
    'z + 1'
    """
    return _Parser(text, field).parse()

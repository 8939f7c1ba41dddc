"""Base rings and exact multivariate polynomials over them.

A BaseRing is a field (QQ or GF(p)) or a polynomial ring in named variables
over such a field.  RingElements are kept in expanded canonical form as a
monomial-to-coefficient map; printing and parsing round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, UnsupportedOperationError
from .fields import GF, QQ, PrimeField, RationalField


class BaseRing:
    """QQ, GF(p), or a polynomial ring in named variables over one of those."""

    def __init__(self, field, variables=()):
        if not isinstance(field, (RationalField, PrimeField)):
            raise InputError("coefficient field must be QQ or GF(p)")
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError("duplicate variable names")
        self.field = field
        self.variables = variables
        self.characteristic = field.characteristic

    @property
    def is_field(self) -> bool:
        return not self.variables

    @property
    def kind(self) -> str:
        base = "QQ" if isinstance(self.field, RationalField) else f"GF({self.field.p})"
        if not self.variables:
            return base
        return f"{base}[{','.join(self.variables)}]"

    def __eq__(self, other):
        return (
            isinstance(other, BaseRing)
            and other.field == self.field
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return self.kind

    # -- element constructors

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.constant(1)

    def constant(self, value) -> "RingElement":
        c = self.field(value)
        if self.field.is_zero(c):
            return RingElement(self, {})
        return RingElement(self, {(0,) * len(self.variables): c})

    def variable(self, name: str) -> "RingElement":
        if name not in self.variables:
            raise InputError(f"unknown variable {name!r} in {self.kind}")
        expo = tuple(1 if v == name else 0 for v in self.variables)
        return RingElement(self, {expo: self.field.one})

    def element(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise InputError("ring element from a different ring")
            return value
        return self.constant(value)


def ring_from_literal(text: str) -> BaseRing:
    """Parse 'QQ', 'GF(7)', 'QQ[s,u]', 'GF(5)[s]'."""
    text = text.strip()
    vars_part = ()
    if "[" in text:
        base, _, rest = text.partition("[")
        if not rest.endswith("]"):
            raise InputError(f"malformed ring literal {text!r}")
        vars_part = tuple(v.strip() for v in rest[:-1].split(",") if v.strip())
        text = base.strip()
    if text == "QQ":
        return BaseRing(QQ, vars_part)
    if text.startswith("GF(") and text.endswith(")"):
        return BaseRing(GF(int(text[3:-1])), vars_part)
    raise InputError(f"unknown ring literal {text!r}")


class RingElement:
    """A polynomial in canonical expanded form (constants included)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: BaseRing, coeffs: dict):
        self.ring = ring
        self.coeffs = {e: c for e, c in coeffs.items() if not ring.field.is_zero(c)}

    # -- predicates

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.coeffs)

    @property
    def is_unit(self) -> bool:
        """Unit of the base ring: a nonzero constant."""
        return bool(self.coeffs) and self.is_constant

    def constant_value(self):
        if not self.coeffs:
            return self.ring.field.zero
        if not self.is_constant:
            raise InputError("not a constant")
        return next(iter(self.coeffs.values()))

    # -- arithmetic

    def _check(self, other) -> "RingElement":
        other = self.ring.element(other)
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        f = self.ring.field
        for e, c in other.coeffs.items():
            out[e] = f.add(out.get(e, f.zero), c)
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return RingElement(self.ring, {e: f.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = f.add(out.get(e, f.zero), f.mul(c1, c2))
        return RingElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative power of a ring element")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse_unit(self) -> "RingElement":
        if not self.is_unit:
            raise InputError("not a unit")
        return self.ring.constant(self.ring.field.inv(self.constant_value()))

    def divide_by_unit(self, unit: "RingElement") -> "RingElement":
        return self * unit.inverse_unit()

    def unit_quotient(self, other: "RingElement") -> "RingElement | None":
        """A unit c with self == c * other, if one exists."""
        if other.is_zero:
            return self.ring.one() if self.is_zero else None
        if self.is_zero:
            return None
        lead_o = max(other.coeffs)
        lead_s = max(self.coeffs)
        if lead_o != lead_s:
            return None
        f = self.ring.field
        c = f.mul(self.coeffs[lead_s], f.inv(other.coeffs[lead_o]))
        if (self.ring.constant(c) * other) == self:
            return self.ring.constant(c)
        return None

    def try_divide(self, divisor: "RingElement") -> "RingElement | None":
        """Exact quotient self / divisor, or None when it does not divide."""
        if divisor.is_zero:
            return None
        f = self.ring.field
        lead = max(divisor.coeffs, key=lambda e: (sum(e), e))
        lead_c = divisor.coeffs[lead]
        rem = dict(self.coeffs)
        quo = {}
        while rem:
            e = max(rem, key=lambda t: (sum(t), t))
            diff = tuple(a - b for a, b in zip(e, lead))
            if any(d < 0 for d in diff):
                return None
            c = f.mul(rem[e], f.inv(lead_c))
            quo[diff] = c
            for e2, c2 in divisor.coeffs.items():
                tgt = tuple(a + b for a, b in zip(diff, e2))
                val = f.sub(rem.get(tgt, f.zero), f.mul(c, c2))
                if f.is_zero(val):
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = val
        return RingElement(self.ring, quo)

    # -- evaluation

    def evaluate(self, point: dict):
        """Evaluate at a rational point: {variable: field constant}."""
        f = self.ring.field
        missing = [v for v in self.ring.variables if v not in point]
        if missing:
            raise InputError(f"point does not assign variables {missing}")
        total = f.zero
        for e, c in self.coeffs.items():
            term = c
            for name, k in zip(self.ring.variables, e):
                if k:
                    term = f.mul(term, pow_field(f, f(point[name]), k))
            total = f.add(total, term)
        return total

    # -- comparisons and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.coeffs.items()))))

    def __str__(self):
        if not self.coeffs:
            return "0"
        f = self.ring.field
        terms = []
        for e in sorted(self.coeffs, key=lambda t: (sum(t), t), reverse=True):
            c = self.coeffs[e]
            factors = []
            for name, k in zip(self.ring.variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                terms.append(f.format(c))
            elif c == f.one:
                terms.append("*".join(factors))
            elif isinstance(f, RationalField) and c == -f.one:
                terms.append("-" + "*".join(factors))
            else:
                terms.append(f.format(c) + "*" + "*".join(factors))
        out = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out

    def __repr__(self):
        return f"<{self} in {self.ring.kind}>"


def pow_field(f, a, k: int):
    out = f.one
    while k:
        if k & 1:
            out = f.mul(out, a)
        a = f.mul(a, a)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# a small expression parser for ring elements


class _Tok:
    def __init__(self, kind, value):
        self.kind = kind
        self.value = value


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            toks.append(_Tok(ch, ch))
            i += 1
        else:
            raise InputError(f"unexpected character {ch!r} in ring element")
    toks.append(_Tok("end", None))
    return toks


class _PolyParser:
    """expr := term (('+'|'-') term)*; term := factor (('*'|juxtaposition|'/') factor)*;
    factor := atom ['^' int]; atom := number | variable | '(' expr ')' | '-' factor."""

    def __init__(self, ring: BaseRing, text: str):
        self.ring = ring
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind and tok.kind != kind:
            raise InputError(f"expected {kind}, got {tok.kind}")
        self.pos += 1
        return tok

    def parse(self) -> RingElement:
        out = self.expr()
        if self.peek().kind != "end":
            raise InputError(f"trailing input in ring element at token {self.peek().kind}")
        return out

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind == "/":
                self.take()
                divisor = self.factor()
                if not divisor.is_unit:
                    raise InputError("division only by nonzero constants")
                value = value.divide_by_unit(divisor)
            elif kind in ("name", "num", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            return -self.factor()
        atom = self.atom()
        if self.peek().kind == "^":
            self.take()
            sign = 1
            if self.peek().kind == "-":
                raise InputError("negative exponents are not ring elements")
            k = self.take("num").value
            atom = atom ** (sign * k)
        return atom

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.ring.constant(tok.value)
        if tok.kind == "name":
            return self.ring.variable(tok.value)
        if tok.kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise InputError(f"unexpected token {tok.kind} in ring element")


def parse_element(ring: BaseRing, text: str) -> RingElement:
    return _PolyParser(ring, text).parse()

"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is an immutable tuple of ``(exponent, coefficient)``
terms with strictly decreasing exponents; the empty tuple is zero. Python
operators are wired to the ordinal operations, so ``a + b`` is ordinal
(non-commutative) addition and ``a * b`` the ordinal product.
"""
from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Tuple, Union

from .errors import OrdinalDomainError, OrdinalOverflow, ParseError

MAX_COEFF = 2**63 - 1

Term = Tuple["Ordinal", int]


def _check_coeff(c: int) -> int:
    if c > MAX_COEFF:
        raise OrdinalOverflow(f"coefficient {c} exceeds 64-bit range")
    return c


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Term] = ()):
        terms = tuple(terms)
        prev = None
        for exp, coeff in terms:
            if not isinstance(exp, Ordinal):
                raise TypeError("exponent must be an Ordinal")
            if not isinstance(coeff, int) or coeff < 1:
                raise OrdinalDomainError(f"coefficient must be a positive integer, got {coeff!r}")
            _check_coeff(coeff)
            if prev is not None and cmp(prev, exp) <= 0:
                raise OrdinalDomainError("exponents must be strictly decreasing")
            prev = exp
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Ordinal is immutable")

    @classmethod
    def _raw(cls, terms: Tuple[Term, ...]) -> "Ordinal":
        # trusted constructor for already-canonical term tuples
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # --- python protocol -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = nat(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if isinstance(other, int):
            other = nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.terms))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return add(self, _coerce(other))

    def __radd__(self, other):
        return add(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __rmul__(self, other):
        return mul(_coerce(other), self)

    def __pow__(self, n):
        if isinstance(n, int):
            return pow_nat(self, n)
        return NotImplemented

    def __repr__(self):
        return f"Ordinal({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # --- convenience -------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def __int__(self):
        if not self.is_finite:
            raise OrdinalDomainError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0


def _coerce(x: Union[Ordinal, int]) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int):
        return nat(x)
    raise TypeError(f"cannot use {type(x).__name__} as an ordinal")


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((ZERO, 1),))
OMEGA = Ordinal._raw(((ONE, 1),))


def nat(n: int) -> Ordinal:
    if n < 0:
        raise OrdinalDomainError("ordinals are non-negative")
    if n == 0:
        return ZERO
    return Ordinal._raw(((ZERO, _check_coeff(n)),))


def cmp(a: Ordinal, b: Ordinal) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def degree(a: Ordinal) -> Ordinal:
    if not a.terms:
        raise OrdinalDomainError("degree of 0 is undefined")
    return a.terms[0][0]


def is_omega_power(a: Ordinal) -> bool:
    if not a.terms:
        raise OrdinalDomainError("0 is not compared against omega powers")
    return len(a.terms) == 1 and a.terms[0][1] == 1


def omega_pow(e: Ordinal) -> Ordinal:
    return Ordinal._raw(((e, 1),))


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead_exp, lead_coeff = b.terms[0]
    kept = []
    for exp, coeff in a.terms:
        c = cmp(exp, lead_exp)
        if c > 0:
            kept.append((exp, coeff))
        elif c == 0:
            lead_coeff = _check_coeff(lead_coeff + coeff)
            break
        else:
            break
    kept.append((lead_exp, lead_coeff))
    kept.extend(b.terms[1:])
    return Ordinal._raw(tuple(kept))


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    deg_a = degree(a)
    out = []
    for exp, coeff in b.terms:
        if exp.terms:
            out.append((add(deg_a, exp), coeff))
        else:
            # finite tail n: a*n = lead*n followed by a's lower terms
            lead_exp, lead_coeff = a.terms[0]
            out.append((lead_exp, _check_coeff(lead_coeff * coeff)))
            out.extend(a.terms[1:])
    return Ordinal._raw(tuple(out))


def pow_nat(a: Ordinal, n: int) -> Ordinal:
    if n < 0:
        raise OrdinalDomainError("negative exponent")
    result, base = ONE, a
    # square-and-multiply is valid: ordinal multiplication is associative
    # and powers of a single ordinal commute with each other
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def pow_omega(a: Ordinal) -> Ordinal:
    """``a ** omega``."""
    if not a.terms:
        return ZERO
    if a == ONE:
        return ONE
    if a.is_finite:
        return OMEGA
    return omega_pow(mul(degree(a), OMEGA))


def below_omega_omega_omega(a: Ordinal) -> bool:
    """True iff every exponent of an exponent of ``a`` is finite."""
    return all(ee.is_finite for e, _ in a.terms for ee, _ in e.terms)


# --- text syntax --------------------------------------------------------------


def to_text(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    return " + ".join(_term_text(e, c) for e, c in a.terms)


def _term_text(exp: Ordinal, coeff: int) -> str:
    if not exp.terms:
        return str(coeff)
    if exp == ONE:
        base = "w"
    elif exp.is_finite:
        base = f"w^{int(exp)}"
    else:
        base = f"w^({to_text(exp)})"
    return base if coeff == 1 else f"{base}*{coeff}"


class _TextParser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def fail(self, msg):
        raise ParseError(msg, position=self.i)

    def peek(self, k=1):
        return self.s[self.i:self.i + k]

    def expect(self, tok):
        if not self.s.startswith(tok, self.i):
            self.fail(f"expected {tok!r}")
        self.i += len(tok)

    def number(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        digits = self.s[self.i:j]
        if not digits:
            self.fail("expected a number")
        if len(digits) > 1 and digits[0] == "0":
            self.fail("leading zero")
        self.i = j
        return int(digits)

    def ordinal(self) -> Ordinal:
        if self.peek() == "0" and not self.s[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return ZERO
        terms = [self.term()]
        while self.peek(3) == " + ":
            self.i += 3
            start = self.i
            t = self.term()
            if cmp(terms[-1][0], t[0]) <= 0:
                self.i = start
                self.fail("exponents must be strictly decreasing")
            terms.append(t)
        return Ordinal._raw(tuple(terms))

    def term(self) -> Term:
        if self.peek() != "w":
            n = self.number()
            if n == 0:
                self.fail("zero coefficient")
            return (ZERO, _check_coeff(n))
        self.i += 1
        exp = ONE
        if self.peek() == "^":
            self.i += 1
            if self.peek() == "(":
                self.i += 1
                start = self.i
                exp = self.ordinal()
                if exp.is_finite:
                    self.i = start
                    self.fail("finite exponent must not be parenthesised")
                self.expect(")")
            else:
                k = self.number()
                if k < 2:
                    self.fail("exponent 0 or 1 is not canonical")
                exp = nat(k)
        coeff = 1
        if self.peek() == "*":
            self.i += 1
            coeff = self.number()
            if coeff < 2:
                self.fail("coefficient below 2 must be omitted")
        return (exp, _check_coeff(coeff))


def parse_text(text: str) -> Ordinal:
    p = _TextParser(text)
    value = p.ordinal()
    if p.i != len(text):
        p.fail("trailing input")
    return value

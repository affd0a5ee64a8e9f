"""Exact two-parameter arithmetic.

`RatFun` is a reduced fraction of integer polynomials in two generators,
backed by flint's multivariate gcd.  `LaurentPoly2` is the dict-of-terms
type used for results and serialization.  Variable names only matter when
printing; internally the generators are positional (first, second).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

import flint

from .errors import NotPolynomial, OddParity, ParseError, ZeroDenominator

_CTX = flint.fmpz_mpoly_ctx.get(("x0", "x1"), "lex")


def _terms(p) -> dict:
    """Monomials of a flint polynomial with plain int exponents and coefficients."""
    return {(int(a), int(b)): int(c) for (a, b), c in p.to_dict().items()}
_ZERO = _CTX.from_dict({})
_ONE = _CTX.constant(1)

ZW = ("z", "w")
QT = ("q", "t")


def _poly(d: Mapping) -> "flint.fmpz_mpoly":
    return _CTX.from_dict({k: int(v) for k, v in d.items() if v})


def _shift_terms(terms: Mapping):
    """Split Laurent integer terms into (polynomial dict, min exponents)."""
    if not terms:
        return {}, (0, 0)
    ma = min(a for a, _ in terms)
    mb = min(b for _, b in terms)
    return {(a - ma, b - mb): c for (a, b), c in terms.items()}, (ma, mb)


def _monomial_poly(a: int, b: int):
    return _CTX.from_dict({(a, b): 1})


class RatFun:
    """Element of Q(x0, x1) kept as num/den, gcd-reduced, den with positive leading coefficient."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, _reduced: bool = False):
        if isinstance(num, RatFun):
            num, den2 = num.num, num.den
            den = den2 if den is None else den2 * _coerce_poly(den)
        elif isinstance(num, Fraction):
            den = _CTX.constant(num.denominator) * (_coerce_poly(den) if den is not None else _ONE)
            num = _CTX.constant(num.numerator)
        else:
            num = _coerce_poly(num)
            den = _ONE if den is None else _coerce_poly(den)
        self._hash = None
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDenominator("denominator is zero")
        self.num, self.den = _reduce(num, den)

    # constructors
    @classmethod
    def const(cls, c) -> "RatFun":
        return cls(Fraction(c))

    @classmethod
    def gen(cls, i: int) -> "RatFun":
        return cls(_CTX.gen(i), _ONE, _reduced=True)

    @classmethod
    def monomial(cls, c, a: int, b: int) -> "RatFun":
        """c * x0^a * x1^b with a, b possibly negative."""
        c = Fraction(c)
        num = _CTX.from_dict({(max(a, 0), max(b, 0)): c.numerator}) if c else _ZERO
        den = _CTX.from_dict({(max(-a, 0), max(-b, 0)): c.denominator})
        return cls(num, den)

    @classmethod
    def from_terms(cls, terms: Mapping) -> "RatFun":
        """Build from a Laurent dict {(a, b): rational}."""
        terms = {k: Fraction(v) for k, v in terms.items() if v}
        if not terms:
            return cls(_ZERO, _ONE, _reduced=True)
        lcm = 1
        for v in terms.values():
            lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
        ints = {k: int(v * lcm) for k, v in terms.items()}
        shifted, (ma, mb) = _shift_terms(ints)
        num = _poly(shifted) * _monomial_poly(max(ma, 0), max(mb, 0))
        den = _CTX.constant(lcm) * _monomial_poly(max(-ma, 0), max(-mb, 0))
        return cls(num, den)

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(int(self.num.coefficient(0)) if not self.num.is_zero() else 0,
                        int(self.den.coefficient(0)))

    def is_polynomial_denominator(self) -> bool:
        """True when the reduced denominator is a single monomial."""
        return len(self.den.to_dict()) == 1

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num + other.num, _ONE, _reduced=True)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return RatFun(self.num * other.den + other.num * self.den, self.den * other.den, _reduced=True)._fix_sign()
        d1 = self.den / g
        d2 = other.den / g
        return RatFun(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RatFun(_ZERO, _ONE, _reduced=True)
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num * other.num, _ONE, _reduced=True)
        # cross-cancel so the product is reduced without a big gcd
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n = (self.num / g1) * (other.num / g2)
        d = (self.den / g2) * (other.den / g1)
        return RatFun(n, d, _reduced=True)._fix_sign()

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        return RatFun(self.den, self.num, _reduced=True)._fix_sign()

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num ** e, self.den ** e, _reduced=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(_terms(self.num).items())),
                               tuple(sorted(_terms(self.den).items()))))
        return self._hash

    def _fix_sign(self):
        if self.den.leading_coefficient() < 0:
            self.num, self.den = -self.num, -self.den
        return self

    # substitutions
    def substitute(self, x_image, y_image) -> "RatFun":
        """Substitute Laurent monomials: each image is (coef, (a, b)) meaning coef*x0^a*x1^b.

        A zero coefficient sends the generator to 0.
        """
        n_terms, n_shift = _subst_terms(self.num, x_image, y_image)
        d_terms, d_shift = _subst_terms(self.den, x_image, y_image)
        if not d_terms:
            raise ZeroDenominator("denominator vanishes under substitution")
        da, db = n_shift[0] - d_shift[0], n_shift[1] - d_shift[1]
        num = _poly(n_terms) * _monomial_poly(max(da, 0), max(db, 0))
        den = _poly(d_terms) * _monomial_poly(max(-da, 0), max(-db, 0))
        return RatFun(num, den)

    def adams(self, d: int) -> "RatFun":
        """x0 -> x0^d, x1 -> x1^d."""
        if d == 1:
            return self
        return RatFun(_inflate(self.num, d), _inflate(self.den, d), _reduced=True)

    def swap(self) -> "RatFun":
        return self.substitute((1, (0, 1)), (1, (1, 0)))

    def evaluate(self, x, y=0) -> Fraction:
        den = _eval_poly(self.den, Fraction(x), Fraction(y))
        if den == 0:
            raise ZeroDenominator("denominator vanishes at the evaluation point")
        return _eval_poly(self.num, Fraction(x), Fraction(y)) / den

    def as_polynomial(self, names=ZW) -> "LaurentPoly2":
        return as_polynomial(self, names)

    def to_str(self, names=ZW) -> str:
        num = LaurentPoly2.from_flint(self.num, names)
        if self.den.is_one():
            return num.to_str()
        den = LaurentPoly2.from_flint(self.den, names)
        return f"({num.to_str()})/({den.to_str()})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFun({self.to_str()})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _coerce_poly(x):
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, int):
        return _CTX.constant(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, int):
        return RatFun(_CTX.constant(x), _ONE, _reduced=True)
    if isinstance(x, Fraction):
        return RatFun(x)
    return NotImplemented


def _reduce(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _inflate(p, d):
    return _CTX.from_dict({(a * d, b * d): c for (a, b), c in _terms(p).items()})


def _subst_terms(p, x_image, y_image):
    (cx, (xa, xb)), (cy, (ya, yb)) = x_image, y_image
    out: dict = {}
    for (i, j), c in _terms(p).items():
        if (cx == 0 and i) or (cy == 0 and j):
            continue
        key = (i * xa + j * ya, i * xb + j * yb)
        out[key] = out.get(key, 0) + int(c) * (cx ** i) * (cy ** j)
    out = {k: v for k, v in out.items() if v}
    return _shift_terms(out)


def _eval_poly(p, x: Fraction, y: Fraction) -> Fraction:
    total = Fraction(0)
    for (i, j), c in _terms(p).items():
        total += int(c) * x ** int(i) * y ** int(j)
    return total


def normalize(f: RatFun) -> RatFun:
    """Canonical reduced form (RatFun values are kept reduced, so this re-checks it)."""
    if f.den.is_zero():
        raise ZeroDenominator("denominator is zero")
    return RatFun(f.num, f.den)


def ratfun(num, den=1) -> RatFun:
    """Convenience constructor from RatFun/int/Fraction numerator and denominator."""
    return _coerce_any(num) / _coerce_any(den)


def _coerce_any(x) -> RatFun:
    if isinstance(x, LaurentPoly2):
        return x.to_ratfun()
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__}")
    return c


Z = RatFun.gen(0)
W = RatFun.gen(1)
ONE = RatFun.const(1)
ZERO = RatFun.const(0)


class LaurentPoly2:
    """Laurent polynomial in two named variables with rational coefficients."""

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping | None = None, names=ZW):
        self.terms = {(int(a), int(b)): Fraction(c) for (a, b), c in (terms or {}).items() if c}
        self.names = tuple(names)

    @classmethod
    def from_flint(cls, p, names=ZW, shift=(0, 0)):
        return cls({(a + shift[0], b + shift[1]): int(c) for (a, b), c in _terms(p).items()}, names)

    @classmethod
    def constant(cls, c, names=ZW):
        return cls({(0, 0): c}, names)

    def to_ratfun(self) -> RatFun:
        return RatFun.from_terms(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, a: int, b: int = 0) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def rename(self, names) -> "LaurentPoly2":
        return LaurentPoly2(self.terms, names)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly2.constant(other, self.names)
        if isinstance(other, LaurentPoly2):
            return other
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly2(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -v for k, v in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a + a2, b + b2)
                out[k] = out.get(k, 0) + c * c2
        return LaurentPoly2(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = LaurentPoly2.constant(1, self.names)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x, y=0) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x ** a * y ** b for (a, b), c in self.terms.items()), Fraction(0))

    def invert_first(self) -> "LaurentPoly2":
        """x -> 1/x (used for palindromicity)."""
        return LaurentPoly2({(-a, b): c for (a, b), c in self.terms.items()}, self.names)

    def shift(self, a: int, b: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(x + a, y + b): c for (x, y), c in self.terms.items()}, self.names)

    def restrict_second(self, b: int) -> "LaurentPoly2":
        """Terms whose second exponent equals b, with that variable removed."""
        return LaurentPoly2({(x, 0): c for (x, y), c in self.terms.items() if y == b}, self.names)

    def set_second(self, value) -> "LaurentPoly2":
        """Evaluate the second variable at an integer (e.g. t=-1)."""
        value = Fraction(value)
        out: dict = {}
        for (a, b), c in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + c * value ** b
        return LaurentPoly2(out, self.names)

    def is_univariate(self) -> bool:
        return all(b == 0 for _, b in self.terms)

    def min_exponent(self) -> int:
        return min((a for a, _ in self.terms), default=0)

    def max_exponent(self) -> int:
        return max((a for a, _ in self.terms), default=0)

    def univariate_coeffs(self) -> list:
        """Coefficient list [c_0, c_1, ...] for an honest univariate polynomial."""
        if not self.is_univariate() or self.min_exponent() < 0:
            raise NotPolynomial("not a polynomial in the first variable")
        out = [Fraction(0)] * (self.max_exponent() + 1 if self.terms else 0)
        for (a, _), c in self.terms.items():
            out[a] = c
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def to_str(self) -> str:
        return serialize(self)

    def to_latex(self) -> str:
        return serialize(self, latex=True)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"LaurentPoly2({serialize(self)})"


def _fmt_monomial(a: int, b: int, names, latex: bool) -> list:
    parts = []
    for e, name in ((a, names[0]), (b, names[1])):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif latex:
            parts.append(f"{name}^{{{e}}}")
        else:
            parts.append(f"{name}^{e}")
    return parts


def serialize(p: LaurentPoly2, latex: bool = False) -> str:
    """Stable text: terms by descending exponent pair, `^` exponents, `p/r` coefficients."""
    if not p.terms:
        return "0"
    out = []
    for (a, b), c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _fmt_monomial(a, b, p.names, latex)
        if latex:
            coef = "" if (c == 1 and mono) else (
                str(c.numerator) if c.denominator == 1 else f"\\frac{{{c.numerator}}}{{{c.denominator}}}")
            body = coef + " ".join(mono) if coef else " ".join(mono)
        else:
            coef = "" if (c == 1 and mono) else str(c)
            body = "*".join(([coef] if coef else []) + mono)
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def parse_laurent(text: str, names=ZW) -> LaurentPoly2:
    """Inverse of `serialize` for the plain-text form."""
    s = text.replace(" ", "")
    if s == "0":
        return LaurentPoly2({}, names)
    # split on +/- that are not exponent signs
    tokens = re.findall(r"([+-]?)((?:[^+-]|(?<=\^)-)+)", s)
    if not tokens or "".join(sg + body for sg, body in tokens) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    terms: dict = {}
    for sign, body in tokens:
        coef = Fraction(1)
        a = b = 0
        for factor in body.split("*"):
            m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(-?\d+))?", factor)
            if m:
                e = int(m.group(2)) if m.group(2) else 1
                if m.group(1) == names[0]:
                    a += e
                elif m.group(1) == names[1]:
                    b += e
                else:
                    raise ParseError(f"unknown variable {m.group(1)!r}")
            else:
                try:
                    coef *= Fraction(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad coefficient {factor!r}") from exc
        if sign == "-":
            coef = -coef
        terms[(a, b)] = terms.get((a, b), 0) + coef
    return LaurentPoly2(terms, names)


def parse_ratfun(text: str, names=ZW) -> RatFun:
    m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\((.*)\)\s*", text)
    if m:
        return parse_laurent(m.group(1), names).to_ratfun() / parse_laurent(m.group(2), names).to_ratfun()
    return parse_laurent(text, names).to_ratfun()


def as_polynomial(f: RatFun, names=ZW) -> LaurentPoly2:
    """Return f as a Laurent polynomial, or raise NotPolynomial."""
    d = _terms(f.den)
    if len(d) != 1:
        raise NotPolynomial(f"denominator {LaurentPoly2.from_flint(f.den, names)} is not a unit")
    ((a, b), c), = d.items()
    c = Fraction(int(c))
    return LaurentPoly2({(x - a, y - b): Fraction(int(v)) / c for (x, y), v in _terms(f.num).items()}, names)


def substitute_halfpowers(f: RatFun, images, names=QT) -> LaurentPoly2:
    """Substitute z, w by Laurent monomials in (u, t) and rewrite in q = u^2.

    `images` is a pair ((c1, (u1, t1)), (c2, (u2, t2))) meaning
    z -> c1 u^u1 t^t1 and w -> c2 u^u2 t^t2.  Every surviving u exponent must
    be even; an odd one raises OddParity.
    """
    g = f.substitute(*images)
    p = as_polynomial(g, ("u", names[1]))
    out = {}
    for (a, b), c in p.terms.items():
        if a % 2:
            raise OddParity(f"odd power u^{a} after substitution")
        out[(a // 2, b)] = c
    return LaurentPoly2(out, names)


def substitute_halfpowers_ratfun(f: RatFun, images) -> RatFun:
    """Like substitute_halfpowers but for a genuine fraction; result in (q, t) as a RatFun."""
    g = f.substitute(*images)
    for part in (g.num, g.den):
        if any(a % 2 for a, _ in part.to_dict()):
            raise OddParity("odd power of u in a reduced fraction")
    return RatFun(_deflate_first(g.num), _deflate_first(g.den), _reduced=True)


def _deflate_first(p):
    return _CTX.from_dict({(a // 2, b): c for (a, b), c in _terms(p).items()})


def univariate(coeffs: Iterable, name="q") -> LaurentPoly2:
    return LaurentPoly2({(i, 0): c for i, c in enumerate(coeffs)}, (name, "t"))

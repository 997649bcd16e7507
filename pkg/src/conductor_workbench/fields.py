"""Exact coefficient fields for the power-series base ring.

Two kinds are supported: the prime field F_p (elements are plain ints in
``range(p)``) and the rational function field F_p(t) (elements are canonical
fractions of dense polynomials).  Both are exposed through the same small
"domain" protocol -- ``zero``, ``one``, ``add``, ``mul``, ... -- so that the
series layer never has to know which coefficients it is working with.
Equality of elements is plain ``==`` on the canonical representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Dense polynomials over F_p: ascending coefficient tuples, no trailing zeros.
# The zero polynomial is the empty tuple.

Poly = tuple

def poly_trim(c: list, p: int) -> Poly:
    while c and c[-1] % p == 0:
        c.pop()
    return tuple(x % p for x in c)


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return poly_trim(out, p)


def poly_neg(a: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in a)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out, p)


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    for k in range(len(rem) - len(b), -1, -1):
        coeff = (rem[k + len(b) - 1] * inv_lead) % p
        if coeff:
            q[k] = coeff
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - coeff * y) % p
    return poly_trim(q, p), poly_trim(rem, p)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = tuple((x * inv_lead) % p for x in a)  # monic normalization
    return a


def poly_str(a: Poly, var: str) -> str:
    if not a:
        return "0"
    terms = []
    for j in range(len(a) - 1, -1, -1):
        c = a[j]
        if not c:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}{var}" if j == 1 else f"{head}{var}^{j}")
    return " + ".join(terms)


@dataclass(frozen=True)
class PrimeField:
    """F_p with elements represented as ints in range(p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"characteristic {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def render(self, a) -> str:
        return str(a % self.p)

    def __str__(self):
        return f"F_{self.p}"


class RatFunc(NamedTuple):
    """Canonical fraction num/den of F_p[t] polynomials: gcd 1, den monic."""

    num: Poly
    den: Poly


@dataclass(frozen=True)
class RationalFunctionField:
    """F_p(t): exact rational functions in one variable over a prime field."""

    p: int
    var: str = "t"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"characteristic {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> RatFunc:
        return RatFunc((), (1,))

    @property
    def one(self) -> RatFunc:
        return RatFunc((1,), (1,))

    @property
    def t(self) -> RatFunc:
        return RatFunc((0, 1), (1,))

    def make(self, num: Poly, den: Poly) -> RatFunc:
        p = self.p
        num = poly_trim(list(num), p)
        den = poly_trim(list(den), p)
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            return RatFunc((), (1,))
        if den != (1,):
            g = poly_gcd(num, den, p)
            if len(g) > 1:
                num = poly_divmod(num, g, p)[0]
                den = poly_divmod(den, g, p)[0]
            lead = den[-1]
            if lead != 1:
                inv = pow(lead, -1, p)
                num = tuple((x * inv) % p for x in num)
                den = tuple((x * inv) % p for x in den)
        return RatFunc(num, den)

    def from_int(self, n: int) -> RatFunc:
        n %= self.p
        return RatFunc((n,), (1,)) if n else RatFunc((), (1,))

    def from_poly(self, coeffs) -> RatFunc:
        return self.make(poly_trim(list(coeffs), self.p), (1,))

    def add(self, a: RatFunc, b: RatFunc) -> RatFunc:
        p = self.p
        if a.den == b.den:
            return self.make(poly_add(a.num, b.num, p), a.den)
        num = poly_add(poly_mul(a.num, b.den, p), poly_mul(b.num, a.den, p), p)
        return self.make(num, poly_mul(a.den, b.den, p))

    def sub(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.add(a, self.neg(b))

    def neg(self, a: RatFunc) -> RatFunc:
        return RatFunc(poly_neg(a.num, self.p), a.den)

    def mul(self, a: RatFunc, b: RatFunc) -> RatFunc:
        p = self.p
        if not a.num or not b.num:
            return RatFunc((), (1,))
        return self.make(poly_mul(a.num, b.num, p), poly_mul(a.den, b.den, p))

    def inv(self, a: RatFunc) -> RatFunc:
        if not a.num:
            raise ZeroDivisionError("inverse of 0 in rational function field")
        return self.make(a.den, a.num)

    def div(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: RatFunc) -> bool:
        return not a.num

    def render(self, a: RatFunc) -> str:
        if not a.num:
            return "0"
        num = poly_str(a.num, self.var)
        if a.den == (1,):
            return num
        den = poly_str(a.den, self.var)
        return f"({num})/({den})"

    def __str__(self):
        return f"F_{self.p}({self.var})"


CoefficientField = PrimeField | RationalFunctionField

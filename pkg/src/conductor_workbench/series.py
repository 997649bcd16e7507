"""The base discrete valuation ring: truncated power series over an exact field.

Elements of ``BaseDVR`` store exactly ``precision`` coefficients of a power
series in the uniformizer.  On top of the fixed storage each element carries a
*known precision*: the number of leading coefficients that are guaranteed to
agree with the mathematically exact value.  Construction from explicit
coefficients yields fully exact elements (``prec is None``); sums and
differences of exact elements stay exact; products are exact while their true
degree fits under the precision cap; exact division by a valuation-``v``
element leaves the top ``v`` coefficients unknown.  Any operation whose result
would depend on unknown coefficients raises :class:`PrecisionError` rather
than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDivisibleError, PrecisionError, ValidationError
from .fields import CoefficientField


@dataclass(frozen=True)
class AtLeast:
    """Sentinel valuation bound: "the valuation is >= n" (element is 0 at precision)."""

    n: int

    def __str__(self):
        return f">={self.n}"


@dataclass(frozen=True, eq=True)
class BaseDVR:
    """kappa[[pi]] truncated at pi^precision, with exact coefficient arithmetic."""

    field: CoefficientField
    precision: int = 32
    symbol: str = "pi"

    def __post_init__(self):
        if self.precision < 1:
            raise ValidationError("precision must be >= 1")

    def with_precision(self, n: int) -> "BaseDVR":
        return BaseDVR(self.field, n, self.symbol)

    # -- constructors -------------------------------------------------------

    def element(self, coeffs, prec=None) -> "LocalRingElement":
        """Build an element from field coefficients (ascending powers of pi).

        Coefficients beyond the precision are dropped; if any dropped one is
        nonzero the result is only known modulo pi^precision.
        """
        N = self.precision
        K = self.field
        coeffs = list(coeffs)
        if len(coeffs) > N:
            tail = coeffs[N:]
            coeffs = coeffs[:N]
            if any(not K.is_zero(c) for c in tail):
                prec = N if prec is None else min(prec, N)
        coeffs += [K.zero] * (N - len(coeffs))
        return LocalRingElement(self, tuple(coeffs), prec)

    def zero(self) -> "LocalRingElement":
        return self.element([])

    def one(self) -> "LocalRingElement":
        return self.element([self.field.one])

    def from_int(self, n: int) -> "LocalRingElement":
        return self.element([self.field.from_int(n)])

    def from_field(self, c) -> "LocalRingElement":
        return self.element([c])

    def pi(self, power: int = 1) -> "LocalRingElement":
        if power < 0:
            raise ValidationError("negative powers of the uniformizer are not ring elements")
        return self.element([self.field.zero] * power + [self.field.one])

    def unknown_zero(self, prec: int) -> "LocalRingElement":
        """An element that is 0 modulo pi^prec with nothing known beyond."""
        return LocalRingElement(self, (self.field.zero,) * self.precision, max(prec, 0))

    # -- ring-with-valuation protocol (shared with ExtensionData) -----------

    def val(self, x: "LocalRingElement"):
        return x.valuation()

    def div(self, x, y):
        return x.divide(y)

    def is_exact_zero(self, x) -> bool:
        return x.is_exact_zero()

    def render(self, x) -> str:
        return x.render()

    def __str__(self):
        return f"{self.field}[[{self.symbol}]]/{self.symbol}^{self.precision}"


class LocalRingElement:
    """A truncated power series: ``coeffs[j]`` is the coefficient of pi^j.

    ``prec is None`` means the element is exact (all unstored coefficients are
    zero); otherwise coefficients at indices >= prec are unknown and stored as
    zero.
    """

    __slots__ = ("ring", "coeffs", "prec")

    def __init__(self, ring: BaseDVR, coeffs: tuple, prec=None):
        N = ring.precision
        if len(coeffs) != N:
            raise ValidationError(f"element must carry exactly {N} coefficients")
        if prec is not None:
            prec = max(0, min(prec, N))
            K = ring.field
            if any(not K.is_zero(c) for c in coeffs[prec:]):
                coeffs = coeffs[:prec] + (K.zero,) * (N - prec)
        self.ring = ring
        self.coeffs = coeffs
        self.prec = prec

    # -- precision bookkeeping ----------------------------------------------

    @property
    def known_precision(self) -> int:
        return self.ring.precision if self.prec is None else self.prec

    def is_exact_zero(self) -> bool:
        K = self.ring.field
        return self.prec is None and all(K.is_zero(c) for c in self.coeffs)

    def valuation(self):
        """Least index with a nonzero known coefficient, or None if there is none."""
        K = self.ring.field
        for j in range(self.known_precision):
            if not K.is_zero(self.coeffs[j]):
                return j
        return None

    def is_zero_at_precision(self) -> bool:
        return self.valuation() is None

    def _support(self):
        K = self.ring.field
        return [j for j, c in enumerate(self.coeffs) if not K.is_zero(c)]

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValidationError("elements belong to different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, LocalRingElement):
            return NotImplemented
        self._check_ring(other)
        K = self.ring.field
        prec = _min_prec(self.prec, other.prec)
        coeffs = tuple(K.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        return LocalRingElement(self.ring, coeffs, prec)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.field
        return LocalRingElement(self.ring, tuple(K.neg(c) for c in self.coeffs), self.prec)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, LocalRingElement):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, LocalRingElement):
            return NotImplemented
        self._check_ring(other)
        ring = self.ring
        K = ring.field
        N = ring.precision
        if self.is_exact_zero() or other.is_exact_zero():
            return ring.zero()
        sup_a = self._support()
        sup_b = other._support()
        out = [K.zero] * N
        top = -1
        for i in sup_a:
            ci = self.coeffs[i]
            for j in sup_b:
                k = i + j
                if k < N:
                    out[k] = K.add(out[k], K.mul(ci, other.coeffs[j]))
                top = max(top, k)
        if self.prec is None and other.prec is None:
            prec = None if top < N else N
        else:
            va = sup_a[0] if sup_a else self.known_precision
            vb = sup_b[0] if sup_b else other.known_precision
            prec = min(self.known_precision + vb, other.known_precision + va, N)
        return LocalRingElement(ring, tuple(out), prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValidationError("negative powers are not ring elements")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_down(self, k: int) -> "LocalRingElement":
        """Divide by pi^k, assuming the first k coefficients vanish."""
        K = self.ring.field
        if any(not K.is_zero(c) for c in self.coeffs[:k]):
            raise NotDivisibleError("element is not divisible by the requested power of pi")
        coeffs = self.coeffs[k:] + (K.zero,) * k
        prec = None if self.prec is None else max(self.prec - k, 0)
        return LocalRingElement(self.ring, coeffs, prec)

    def unit_inverse(self) -> "LocalRingElement":
        """Inverse of a unit (valuation 0), known to the full stored precision."""
        K = self.ring.field
        N = self.ring.precision
        if K.is_zero(self.coeffs[0]):
            raise NotDivisibleError("unit_inverse requires a unit (valuation 0)")
        inv0 = K.inv(self.coeffs[0])
        out = [inv0] + [K.zero] * (N - 1)
        for k in range(1, self.known_precision):
            acc = K.zero
            for j in range(1, k + 1):
                if not K.is_zero(self.coeffs[j]):
                    acc = K.add(acc, K.mul(self.coeffs[j], out[k - j]))
            out[k] = K.neg(K.mul(acc, inv0))
        prec = self.known_precision
        return LocalRingElement(self.ring, tuple(out), prec)

    def divide(self, other: "LocalRingElement") -> "LocalRingElement":
        """Exact division in the valuation ring; the quotient loses v(other) precision."""
        self._check_ring(other)
        v = other.valuation()
        if v is None:
            if other.is_exact_zero():
                raise ZeroDivisionError("division by zero")
            raise PrecisionError(
                "divisor is 0 modulo the working precision; its valuation is unknown")
        if self.is_exact_zero():
            return self.ring.zero()
        vs = self.valuation()
        if vs is None:
            # 0 at known precision: quotient is 0 modulo pi^(prec - v)
            return self.ring.unknown_zero(self.known_precision - v)
        if vs < v:
            raise NotDivisibleError("dividend has smaller valuation than divisor")
        sup = other._support()
        if other.prec is None and len(sup) == 1:
            # dividing by an exact monomial c*pi^v is a shift and a unit scale,
            # which keeps exact elements exact
            K = self.ring.field
            return self.shift_down(v) * self.ring.from_field(K.inv(other.coeffs[v]))
        return self.shift_down(v) * other.shift_down(v).unit_inverse()

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LocalRingElement) and self.ring == other.ring
                and self.coeffs == other.coeffs and self.prec == other.prec)

    def __hash__(self):
        return hash((self.ring, self.coeffs, self.prec))

    def render(self) -> str:
        K = self.ring.field
        sym = self.ring.symbol
        terms = []
        for j in self._support():
            c = K.render(self.coeffs[j])
            if "/" in c or "+" in c or ("*" in c and j > 0):
                c = f"({c})"
            if j == 0:
                terms.append(c)
            else:
                pi = sym if j == 1 else f"{sym}^{j}"
                terms.append(pi if c == "1" else f"{c}*{pi}")
        body = " + ".join(terms) if terms else "0"
        if self.prec is not None:
            body += f" + O({sym}^{self.prec})"
        return body

    def __repr__(self):
        return self.render()


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def dvr_valuation(x: LocalRingElement):
    """Valuation of a truncated series: an int, or ``AtLeast(N)`` when x is 0 mod pi^N.

    The sentinel is returned both for the exact zero and for elements that
    merely vanish at the working precision; in either case the statement
    "valuation >= N" is true.
    """
    v = x.valuation()
    if v is None:
        return AtLeast(x.known_precision)
    return v

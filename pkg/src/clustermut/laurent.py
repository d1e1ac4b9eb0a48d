"""Exact multivariate polynomial and Laurent-value arithmetic.

Values live over a fixed set of variables x1..xr with unbounded integer
coefficients.  A monomial is stored as a single packed integer: the total
degree in the top field, then the exponents of x1..xr in decreasing
significance.  Plain integer comparison of packed keys is therefore the
graded-lexicographic order (degree first, x1 breaking ties), and adding two
keys multiplies the monomials.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator

from .errors import DimensionMismatchError, DomainError, ExactDivisionError

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
FIELD_LIMIT = 1 << FIELD_BITS


def pack_monomial(exponents: Iterable[int]) -> int:
    """Pack an exponent vector into a single ordered key."""
    key = 0
    deg = 0
    n = 0
    for e in exponents:
        if e < 0:
            raise DomainError(f"negative exponent {e}")
        key = (key << FIELD_BITS) | e
        deg += e
        n += 1
    if deg >= FIELD_LIMIT:
        raise DomainError(f"total degree {deg} exceeds packing capacity")
    return (deg << (FIELD_BITS * n)) | key


def unpack_monomial(key: int, r: int) -> tuple[int, ...]:
    exps = []
    for _ in range(r):
        exps.append(key & FIELD_MASK)
        key >>= FIELD_BITS
    return tuple(reversed(exps))


def monomial_degree(key: int, r: int) -> int:
    return key >> (FIELD_BITS * r)


def monomial_divides(a: int, b: int, r: int) -> bool:
    """True when monomial a divides monomial b (fieldwise a <= b)."""
    for _ in range(r + 1):
        if (a & FIELD_MASK) > (b & FIELD_MASK):
            return False
        a >>= FIELD_BITS
        b >>= FIELD_BITS
    return True


def monomial_gcd(keys: Iterable[int], r: int) -> int:
    mins = None
    for key in keys:
        exps = unpack_monomial(key, r)
        mins = exps if mins is None else tuple(map(min, mins, exps))
    if mins is None:
        raise DomainError("gcd of empty monomial set")
    return pack_monomial(mins)


def monomial_lcm(a: int, b: int, r: int) -> int:
    return pack_monomial(tuple(map(max, unpack_monomial(a, r), unpack_monomial(b, r))))


class Polynomial:
    """Sparse integer polynomial; terms map packed monomial -> coefficient.

    Instances are treated as immutable after construction.
    """

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[int, int]):
        self.r = r
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> "Polynomial":
        return cls(r, {})

    @classmethod
    def constant(cls, r: int, c: int) -> "Polynomial":
        return cls(r, {0: c} if c else {})

    @classmethod
    def variable(cls, r: int, i: int) -> "Polynomial":
        if not 0 <= i < r:
            raise DomainError(f"variable index {i} out of range for r={r}")
        return cls(r, {pack_monomial(tuple(1 if j == i else 0 for j in range(r))): 1})

    @classmethod
    def from_terms(cls, r: int, terms: dict[tuple[int, ...], int]) -> "Polynomial":
        packed = {}
        for exps, c in terms.items():
            if len(exps) != r:
                raise DimensionMismatchError(f"exponent vector {exps} not length {r}")
            if c:
                key = pack_monomial(exps)
                packed[key] = packed.get(key, 0) + c
        return cls(r, {k: c for k, c in packed.items() if c})

    # -- inspection ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.r == other.r
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self.terms.items())))

    def terms_sorted(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order as (exponents, coefficient)."""
        for key in sorted(self.terms, reverse=True):
            yield unpack_monomial(key, self.r), self.terms[key]

    def leading_key(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        return max(self.terms)

    def degree(self) -> int:
        return monomial_degree(self.leading_key(), self.r)

    def content_monomial(self) -> int:
        """The largest monomial dividing every term (packed)."""
        return monomial_gcd(self.terms, self.r)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.r != other.r:
            raise DimensionMismatchError(f"variable counts differ: {self.r} vs {other.r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        return Polynomial(self.r, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.r)
        shift = FIELD_BITS * self.r
        if (max(self.terms) >> shift) + (max(other.terms) >> shift) >= FIELD_LIMIT:
            raise DomainError("product degree exceeds packing capacity")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Polynomial(self.r, out)

    def shift(self, monomial_key: int) -> "Polynomial":
        """Multiply by a single monomial (packed key)."""
        return Polynomial(self.r, {k + monomial_key: c for k, c in self.terms.items()})

    def unshift(self, monomial_key: int) -> "Polynomial":
        """Divide by a monomial that divides every term."""
        if not all(monomial_divides(monomial_key, k, self.r) for k in self.terms):
            raise ExactDivisionError("monomial does not divide all terms")
        return Polynomial(self.r, {k - monomial_key: c for k, c in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.constant(self.r, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.r)
        return Polynomial(self.r, {k: c * v for k, v in self.terms.items()})

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient q with q * divisor == self, by leading-term elimination.

        Raises ExactDivisionError when the division is inexact.
        """
        self._check(divisor)
        if not divisor.terms:
            raise DomainError("division by zero polynomial")
        if not self.terms:
            return Polynomial.zero(self.r)
        lead_key = divisor.leading_key()
        lead_c = divisor.terms[lead_key]
        rem = dict(self.terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot: dict[int, int] = {}
        r = self.r
        while heap:
            key = -heapq.heappop(heap)
            c = rem.get(key)
            if not c:
                continue
            if not monomial_divides(lead_key, key, r) or c % lead_c:
                raise ExactDivisionError("nonzero remainder in polynomial division")
            qk = key - lead_key
            qc = c // lead_c
            quot[qk] = qc
            for dk, dc in divisor.terms.items():
                kk = qk + dk
                v = rem.get(kk, 0) - qc * dc
                if v:
                    rem[kk] = v
                    heapq.heappush(heap, -kk)
                else:
                    rem.pop(kk, None)
        return Polynomial(self.r, quot)

    # -- text ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self.r}, {self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(
            format_term(exps, c) for exps, c in self.terms_sorted()
        )


def format_term(exps: tuple[int, ...], coeff: int) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


class LaurentValue:
    """A cluster variable: numerator polynomial over a monomial denominator.

    Always kept in reduced form (no monomial common to numerator and
    denominator).  Construct through :func:`laurent_normalize` or the class
    helpers; instances are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: int):
        self.num = num
        self.den = den

    @property
    def r(self) -> int:
        return self.num.r

    @classmethod
    def variable(cls, r: int, i: int) -> "LaurentValue":
        return cls(Polynomial.variable(r, i), 0)

    @classmethod
    def one(cls, r: int) -> "LaurentValue":
        return cls(Polynomial.constant(r, 1), 0)

    def den_exponents(self) -> tuple[int, ...]:
        return unpack_monomial(self.den, self.r)

    def is_unit_denominator(self) -> bool:
        return self.den == 0

    def key(self) -> tuple:
        """Hashable identity key (deterministic, order-independent)."""
        return (self.den, frozenset(self.num.terms.items()))

    def sort_key(self) -> tuple:
        return (self.den, tuple(sorted(self.num.terms.items())))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentValue)
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self) -> int:
        return hash(self.key())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentValue") -> "LaurentValue":
        self.num._check(other.num)
        lcm = monomial_lcm(self.den, other.den, self.r)
        num = self.num.shift(lcm - self.den) + other.num.shift(lcm - other.den)
        return laurent_normalize(num, lcm)

    def __mul__(self, other: "LaurentValue") -> "LaurentValue":
        return laurent_normalize(self.num * other.num, self.den + other.den)

    def __pow__(self, n: int) -> "LaurentValue":
        if n < 0:
            raise DomainError("negative Laurent power unsupported")
        result = LaurentValue.one(self.r)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other: "LaurentValue") -> "LaurentValue":
        """Exact division; the quotient must again be a Laurent value."""
        self.num._check(other.num)
        a_content = self.num.content_monomial()
        b_content = other.num.content_monomial()
        quot = self.num.unshift(a_content).exact_div(other.num.unshift(b_content))
        num = quot.shift(other.den + a_content)
        return laurent_normalize(num, self.den + b_content)

    # -- text ---------------------------------------------------------

    def to_text(self) -> str:
        """Canonical display, e.g. ``(x2+1)/x1`` or ``(x1+x2+1)/(x1*x2)``."""
        num_terms = list(self.num.terms_sorted())
        num_str = "+".join(format_term(e, c) for e, c in num_terms)
        if self.den == 0:
            return num_str
        if len(num_terms) > 1:
            num_str = f"({num_str})"
        den_exps = self.den_exponents()
        den_str = format_term(den_exps, 1)
        if sum(1 for e in den_exps if e) > 1 or any(e > 1 for e in den_exps):
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"

    def __repr__(self) -> str:
        return f"LaurentValue({self.to_text()!r})"


def laurent_normalize(num: Polynomial, den) -> LaurentValue:
    """Reduce num/den by their common monomial factor.

    ``den`` may be a packed key or an exponent tuple.
    """
    if not num:
        raise DomainError("Laurent value with zero numerator")
    if not isinstance(den, int):
        den = pack_monomial(den)
    r = num.r
    den_exps = unpack_monomial(den, r)
    if not any(den_exps):
        return LaurentValue(num, 0)
    mins = unpack_monomial(num.content_monomial(), r)
    common = tuple(min(a, b) for a, b in zip(mins, den_exps))
    if any(common):
        g = pack_monomial(common)
        num = num.unshift(g)
        den = pack_monomial(tuple(d - c for d, c in zip(den_exps, common)))
        return LaurentValue(num, den)
    return LaurentValue(num, den)


# Function-style aliases for the operator methods --------------------------

def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.exact_div(b)

"""Exact arithmetic in k = F_{p^d} and the truncated Witt ring W(k)/p^n.

Degree-one rings use plain ints modulo p^n.  Extension rings use length-d
tuples of ints modulo p^n (low coefficient first) against a deterministically
chosen irreducible modulus, so identical parameters always produce identical
element encodings and enumeration order.  n = 1 is the residue field, n = 2
is the W_2 the rest of the package works over; higher n is used internally
by the division-polynomial oracle only.

All values are immutable and every operation is pure, so rings are safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class RingError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_rem(u, v, p):
    """Remainder of u by monic v over F_p (coefficient lists, low first)."""
    u = [c % p for c in u]
    while len(u) >= len(v):
        if u[-1] == 0:
            u.pop()
            continue
        c = u[-1]
        shift = len(u) - len(v)
        for i in range(len(v)):
            u[shift + i] = (u[shift + i] - c * v[i]) % p
        u.pop()
    while len(u) > 1 and u[-1] == 0:
        u.pop()
    return u


def _is_irreducible(tail, p):
    """tail = (c_0,...,c_{d-1}) of the monic x^d + c_{d-1}x^{d-1} + ... + c_0.

    Trial division by every monic polynomial of degree 1..d//2; exhaustive and
    cheap at the field sizes this package touches.
    """
    d = len(tail)
    poly = list(tail) + [1]
    for deg in range(1, d // 2 + 1):
        for div_tail in product(range(p), repeat=deg):
            div = list(div_tail) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldParams:
    """Description of F_{p^d}: an odd prime p, degree d, and the modulus.

    modulus holds the non-leading coefficients (c_0,...,c_{d-1}) of the monic
    irreducible x^d + c_{d-1}x^{d-1} + ... + c_0 over F_p.
    """

    p: int
    d: int
    modulus: tuple

    @property
    def q(self) -> int:
        return self.p ** self.d


def make_field(p: int, d: int = 1) -> FieldParams:
    """F_{p^d} with the lexicographically least monic irreducible modulus.

    Candidate moduli are ordered by their printed coefficient sequence
    (c_{d-1},...,c_0), so e.g. F_25 gets x^2 + 2.  Degree one always yields
    the polynomial x itself.
    """
    if not is_prime(p):
        raise RingError(f"p must be prime, got {p}")
    if p == 2:
        raise RingError("p must be odd")
    if d < 1:
        raise RingError(f"degree must be >= 1, got {d}")
    if d == 1:
        return FieldParams(p, 1, (0,))
    for desc in product(range(p), repeat=d):
        tail = tuple(reversed(desc))  # store low coefficient first
        if _is_irreducible(tail, p):
            return FieldParams(p, d, tail)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class PrimeRing:
    """Z/p^n with the field/Witt interface shared with ExtensionRing.

    Elements are plain ints in [0, p^n).  The Frobenius lift on W(F_p) is the
    identity, matching sigma = id on the prime field.
    """

    def __init__(self, params: FieldParams, n: int = 1):
        if params.d != 1:
            raise RingError("PrimeRing requires degree 1")
        self.params = params
        self.p = params.p
        self.d = 1
        self.n = n
        self.modulus_int = params.p ** n
        self.size = self.modulus_int

    def __repr__(self):
        return f"PrimeRing(p={self.p}, n={self.n})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def elements(self):
        return range(self.modulus_int)

    def from_int(self, c: int):
        return c % self.modulus_int

    def add(self, x, y):
        return (x + y) % self.modulus_int

    def sub(self, x, y):
        return (x - y) % self.modulus_int

    def neg(self, x):
        return (-x) % self.modulus_int

    def mul(self, x, y):
        return (x * y) % self.modulus_int

    def pow(self, x, e: int):
        return pow(x, e, self.modulus_int)

    def is_unit(self, x) -> bool:
        return x % self.p != 0

    def inv(self, x):
        if not self.is_unit(x):
            raise RingError(f"{x} is not a unit mod {self.modulus_int}")
        return pow(x, -1, self.modulus_int)

    def residue_field(self) -> "PrimeRing":
        return self if self.n == 1 else PrimeRing(self.params, 1)

    def reduce(self, x):
        """Image in the residue field F_p."""
        return x % self.p

    def lift(self, a):
        """Canonical (coefficientwise) lift of a residue field element."""
        return a % self.modulus_int

    def div_p(self, x):
        """x/p for x in pR; meaningful modulo p^(n-1)."""
        if x % self.p != 0:
            raise RingError(f"{x} is not divisible by p")
        return x // self.p

    def teichmuller(self, a):
        """Multiplicative lift of a in F_p: for Z/p^n just iterate a^(p)."""
        x = self.lift(a)
        for _ in range(self.n - 1):
            x = pow(x, self.p, self.modulus_int)
        return x

    def frobenius(self, x):
        if self.n == 1:
            return x  # x^p = x on the prime field
        if self.n == 2:
            return x  # unique Frobenius lift on W_2(F_p) is the identity
        raise RingError("frobenius only defined for n <= 2")

    def frobenius_inv(self, x):
        return self.frobenius(x)


class ExtensionRing:
    """(Z/p^n)[t]/(modulus) realizing W(F_{p^d})/p^n, elements as d-tuples.

    The modulus is the field's irreducible polynomial lifted coefficientwise;
    for n = 1 this is just F_{p^d}.  Enumeration is lexicographic on the
    coefficient tuple, low coefficient first.
    """

    def __init__(self, params: FieldParams, n: int = 1):
        self.params = params
        self.p = params.p
        self.d = params.d
        self.n = n
        self.modulus_int = params.p ** n
        self.mod_poly = params.modulus
        self.size = self.modulus_int ** self.d
        self._field = None

    def __repr__(self):
        return f"ExtensionRing(p={self.p}, d={self.d}, n={self.n})"

    @property
    def zero(self):
        return (0,) * self.d

    @property
    def one(self):
        return (1,) + (0,) * (self.d - 1)

    def elements(self):
        return (t for t in product(range(self.modulus_int), repeat=self.d))

    def from_int(self, c: int):
        return (c % self.modulus_int,) + (0,) * (self.d - 1)

    def add(self, x, y):
        m = self.modulus_int
        return tuple((a + b) % m for a, b in zip(x, y))

    def sub(self, x, y):
        m = self.modulus_int
        return tuple((a - b) % m for a, b in zip(x, y))

    def neg(self, x):
        m = self.modulus_int
        return tuple((-a) % m for a in x)

    def mul(self, x, y):
        d, m, mod = self.d, self.modulus_int, self.mod_poly
        out = [0] * (2 * d - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    out[i + j] += a * b
        for k in range(2 * d - 2, d - 1, -1):
            c = out[k] % m
            if c:
                for i in range(d):
                    out[k - d + i] -= c * mod[i]
        return tuple(c % m for c in out[:d])

    def pow(self, x, e: int):
        acc = self.one
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def is_unit(self, x) -> bool:
        return any(c % self.p for c in x)

    def inv(self, x):
        if not self.is_unit(x):
            raise RingError(f"{x} is not a unit")
        # inverse in the residue field, then Hensel digits up to p^n
        fld = self.residue_field()
        y0 = fld.pow(self.reduce(x), self.params.q - 2)
        y = self.lift(y0)
        for _ in range(self.n - 1):
            # y <- y(2 - xy)
            y = self.mul(y, self.sub(self.add(self.one, self.one), self.mul(x, y)))
        return y

    def residue_field(self) -> "ExtensionRing":
        if self.n == 1:
            return self
        if self._field is None:
            self._field = ExtensionRing(self.params, 1)
        return self._field

    def reduce(self, x):
        p = self.p
        return tuple(c % p for c in x)

    def lift(self, a):
        m = self.modulus_int
        return tuple(c % m for c in a)

    def div_p(self, x):
        p = self.p
        if any(c % p for c in x):
            raise RingError(f"{x} is not divisible by p")
        return tuple(c // p for c in x)

    def teichmuller(self, a):
        x = self.lift(a)
        for _ in range(self.n - 1):
            x = self.pow(x, self.params.q)
        return x

    def frobenius(self, x):
        """sigma: the x -> x^p automorphism (n=1) or its unique W_2 lift."""
        if self.n == 1:
            return self.pow(x, self.p)
        if self.n == 2:
            # x = teich(a) + p*lift(b); sigma(x) = teich(a^p) + p*lift(b^p)
            fld = self.residue_field()
            a = self.reduce(x)
            b = self.reduce(self.div_p(self.sub(x, self.teichmuller(a))))
            head = self.teichmuller(fld.pow(a, self.p))
            tail = self.lift(fld.pow(b, self.p))
            p = self.p
            m = self.modulus_int
            return tuple((h + p * t) % m for h, t in zip(head, tail))
        raise RingError("frobenius only defined for n <= 2")

    def frobenius_inv(self, x):
        """sigma^(-1); on the field this is a -> a^(p^(d-1))."""
        if self.n == 1:
            return self.pow(x, self.p ** (self.d - 1))
        if self.n == 2:
            y = x
            for _ in range(self.d - 1):
                y = self.frobenius(y)
            return y
        raise RingError("frobenius_inv only defined for n <= 2")


def ring_for(params: FieldParams, n: int = 1):
    """The shared constructor: ints for d = 1, tuples otherwise."""
    if params.d == 1:
        return PrimeRing(params, n)
    return ExtensionRing(params, n)


def fq(params: FieldParams):
    """The residue field F_{p^d}."""
    return ring_for(params, 1)


def w2(params: FieldParams):
    """W(F_{p^d})/p^2."""
    return ring_for(params, 2)


def frobenius(ring, x):
    return ring.frobenius(x)


def teichmuller(ring, a):
    return ring.teichmuller(a)

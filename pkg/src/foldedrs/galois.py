"""Exact arithmetic in prime fields F_q and the extension F_q[X]/(X^(q-1) - gamma).

The extension is always built on the binomial X^(q-1) - gamma for a generator
gamma of F_q*; that binomial is irreducible precisely because gamma is
primitive, so the quotient ring is a field of size q^(q-1).  Extension
elements are stored as their reduced representative, a coefficient vector of
length q-1 over F_q.

Base fields are restricted to odd primes q >= 3.  All values are immutable
after construction and every operation is a pure function, so everything in
this module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import functools


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """The prime field F_q for an odd prime q >= 3."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if not _is_prime(q):
            raise ValueError(f"field modulus {q} is not prime")
        if q < 3 or q % 2 == 0:
            raise ValueError(f"field modulus must be an odd prime >= 3, got {q}")
        self.q = q

    def element(self, value: int) -> "FieldElem":
        return FieldElem(value % self.q, self)

    def zero(self) -> "FieldElem":
        return FieldElem(0, self)

    def one(self) -> "FieldElem":
        return FieldElem(1, self)

    def elements(self):
        """All field elements, in value order."""
        for v in range(self.q):
            yield FieldElem(v, self)

    @property
    def size(self) -> int:
        return self.q

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class FieldElem:
    """An element of a PrimeField.  Supports +, -, *, /, ** and comparison.

    Mixing elements of different fields is a contract violation and raises.
    Plain ints are coerced into the element's field.
    """

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.q
        self.field = field

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("cannot mix elements of different fields")
            return other
        if isinstance(other, int):
            return FieldElem(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElem(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.field)

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        return FieldElem(pow(self.value, exp, self.field.q), self.field)

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return FieldElem(pow(self.value, self.field.q - 2, self.field.q), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.q
        return (
            isinstance(other, FieldElem)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"F{self.field.q}({self.value})"


def find_primitive_element(field: PrimeField) -> FieldElem:
    """Smallest generator of the multiplicative group F_q*.

    gamma has order exactly q-1 iff gamma^((q-1)/p) != 1 for every prime
    p dividing q-1.  The smallest such gamma is returned, so the result is
    deterministic for a given q.
    """
    q = field.q
    factors = _prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return field.element(g)
    raise ArithmeticError(f"no generator found for F_{q}*")  # unreachable for prime q


# ---------------------------------------------------------------------------
# Polynomial helpers over F_q on plain coefficient lists (low degree first).
# These back the irreducibility test and extension-field scalar arithmetic;
# the UniPoly class in the poly module is the public polynomial type.
# ---------------------------------------------------------------------------


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _ptrim(out)


def _pdivmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    quo = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], q - 2, q)
    for top in range(len(a) - 1, len(b) - 2, -1):
        c = a[top] * inv_lead % q
        if c:
            quo[top - len(b) + 1] = c
            shift = top - len(b) + 1
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % q
    return _ptrim(quo), _ptrim(a)


def _pmod(a: list[int], b: list[int], q: int) -> list[int]:
    return _pdivmod(a, b, q)[1]


def _pgcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, q)
    if a:
        inv = pow(a[-1], q - 2, q)
        a = [c * inv % q for c in a]
    return a


def _ppow_mod(base: list[int], exp: int, mod: list[int], q: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, q)
    while exp:
        if exp & 1:
            result = _pmod(_pmul(result, base, q), mod, q)
        base = _pmod(_pmul(base, base, q), mod, q)
        exp >>= 1
    return result


def _psub(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _ptrim([(x - y) % q for x, y in zip(a, b)])


def _pext_euclid_inverse(a: list[int], mod: list[int], q: int) -> list[int]:
    """Inverse of a modulo mod over F_q, by the extended euclidean algorithm."""
    if not a:
        raise ZeroDivisionError("inverse of zero in extension field")
    r0, r1 = list(mod), _pmod(a, mod, q)
    s0, s1 = [], [1]
    while r1:
        quo, rem = _pdivmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1, q), q)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible (gcd not constant)")
    inv_r = pow(r0[0], q - 2, q)
    return _ptrim([c * inv_r % q for c in s0])


def is_irreducible(p) -> bool:
    """Whether a nonzero univariate polynomial over a prime field is irreducible.

    Uses the distinct-degree criterion: p of degree n is irreducible iff
    gcd(X^(q^d) - X, p) is constant for every d <= n/2 and X^(q^n) = X mod p.
    Accepts a UniPoly over a PrimeField.

    Raises ValueError for zero or constant input.
    """
    field = p.field
    if not isinstance(field, PrimeField):
        raise TypeError("irreducibility test is defined over prime fields")
    q = field.q
    coeffs = [c.value for c in p.coeffs]
    deg = len(coeffs) - 1
    if deg < 1:
        raise ValueError("irreducibility is undefined for zero or constant polynomials")
    inv_lead = pow(coeffs[-1], q - 2, q)
    coeffs = [c * inv_lead % q for c in coeffs]
    x = [0, 1]
    u = list(x)
    for d in range(1, deg + 1):
        u = _ppow_mod(u, q, coeffs, q)
        if d <= deg // 2:
            if len(_pgcd(_psub(u, x, q), coeffs, q)) != 1:
                return False
    return u == _pmod(x, coeffs, q)


class ExtField:
    """The extension field F_q[X]/(X^(q-1) - gamma) with gamma primitive in F_q."""

    __slots__ = ("base", "gamma", "dim")

    def __init__(self, base: PrimeField, gamma: FieldElem | None = None):
        self.base = base
        if gamma is None:
            gamma = find_primitive_element(base)
        if gamma.field != base:
            raise ValueError("gamma must live in the base field")
        q = base.q
        factors = _prime_factors(q - 1)
        if any(pow(gamma.value, (q - 1) // p, q) == 1 for p in factors):
            raise ValueError(f"{gamma.value} does not generate F_{q}*")
        self.gamma = gamma
        self.dim = q - 1

    @property
    def size(self) -> int:
        return self.base.q ** self.dim

    @property
    def modulus(self):
        """The defining polynomial X^(q-1) - gamma as a UniPoly over the base."""
        from .poly import UniPoly

        coeffs = [(-self.gamma.value) % self.base.q] + [0] * (self.dim - 1) + [1]
        return UniPoly.from_ints(self.base, coeffs)

    def _modulus_coeffs(self) -> list[int]:
        return [(-self.gamma.value) % self.base.q] + [0] * (self.dim - 1) + [1]

    def element(self, coeffs) -> "ExtFieldElem":
        """Element from base-field coefficients of its representative, low degree first."""
        vals = [getattr(c, "value", c) % self.base.q for c in coeffs]
        if len(vals) > self.dim:
            vals = _pmod(vals, self._modulus_coeffs(), self.base.q)
        vals = vals + [0] * (self.dim - len(vals))
        return ExtFieldElem(tuple(vals), self)

    def zero(self) -> "ExtFieldElem":
        return ExtFieldElem((0,) * self.dim, self)

    def one(self) -> "ExtFieldElem":
        return ExtFieldElem((1,) + (0,) * (self.dim - 1), self)

    def embed(self, a: FieldElem) -> "ExtFieldElem":
        """The image of a base-field element under F_q -> F_q[X]/(E)."""
        if a.field != self.base:
            raise ValueError("element is not in the base field")
        return ExtFieldElem((a.value,) + (0,) * (self.dim - 1), self)

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.gamma == self.gamma
        )

    def __hash__(self):
        return hash(("ExtField", self.base.q, self.gamma.value))

    def __repr__(self):
        return f"ExtField(F_{self.base.q}[X]/(X^{self.dim} - {self.gamma.value}))"


class ExtFieldElem:
    """An element of an ExtField, stored as its length q-1 coefficient vector."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple[int, ...], field: ExtField):
        self.coeffs = coeffs
        self.field = field

    @property
    def rep_degree(self) -> int:
        """Degree of the representative polynomial (-1 for zero)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def _coerce(self, other) -> "ExtFieldElem":
        if isinstance(other, ExtFieldElem):
            if other.field != self.field:
                raise ValueError("cannot mix elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element([other])
        if isinstance(other, FieldElem):
            return self.field.embed(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q = self.field.base.q
        return ExtFieldElem(tuple((a + b) % q for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q = self.field.base.q
        return ExtFieldElem(tuple((a - b) % q for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        q = self.field.base.q
        return ExtFieldElem(tuple(-a % q for a in self.coeffs), self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q = self.field.base.q
        dim = self.field.dim
        gamma = self.field.gamma.value
        prod = [0] * (2 * dim - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(o.coeffs):
                    prod[i + j] += ai * bj
        # fold with X^dim = gamma
        out = prod[:dim]
        for t in range(dim, 2 * dim - 1):
            out[t - dim] += gamma * prod[t]
        return ExtFieldElem(tuple(v % q for v in out), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "ExtFieldElem":
        base_q = self.field.base.q
        inv = _pext_euclid_inverse(
            _ptrim(list(self.coeffs)), self.field._modulus_coeffs(), base_q
        )
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def frobenius(self) -> "ExtFieldElem":
        """The q-th power map; on representatives it scales coefficient i by gamma^i."""
        q = self.field.base.q
        gamma = self.field.gamma.value
        g = 1
        out = []
        for c in self.coeffs:
            out.append(c * g % q)
            g = g * gamma % q
        return ExtFieldElem(tuple(out), self.field)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.element([other])
        return (
            isinstance(other, ExtFieldElem)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.base.q))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Ext{self.field.base.q}({list(self.coeffs)})"


def ext_invert(a: ExtFieldElem) -> ExtFieldElem:
    """Multiplicative inverse in the extension field; raises on zero input."""
    return a.inverse()


@functools.cache
def standard_extension(q: int) -> ExtField:
    """The canonical extension F_q[X]/(X^(q-1) - gamma) with the smallest primitive gamma."""
    field = PrimeField(q)
    return ExtField(field, find_primitive_element(field))

"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is stored as an integer vector of length phi(N) (coordinates with
respect to the power basis 1, z, ..., z^(phi(N)-1), reduced modulo the N-th
cyclotomic polynomial) together with a positive integer denominator.  Vector
and denominator are kept gcd-normalized, so equal values at the same order
have identical representations.  Scalars of different orders are compared and
combined by lifting both to the lcm order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

_CYCLO: dict[int, list[int]] = {}
_REDUCE: dict[int, list[tuple[int, ...]]] = {}
_POWERS: dict[int, list[tuple[int, ...]]] = {}


def _poly_div_exact_int(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; divisor has leading coefficient 1.
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    assert all(c == 0 for c in num)
    return q


def cyclotomic_polynomial(order: int) -> list[int]:
    """Integer coefficients of the order-th cyclotomic polynomial, ascending."""
    if order in _CYCLO:
        return _CYCLO[order]
    if order < 1:
        raise ValueError("order must be a positive integer")
    if order == 1:
        poly = [-1, 1]
    else:
        num = [0] * (order + 1)
        num[0] = -1
        num[order] = 1
        for d in range(1, order):
            if order % d == 0:
                num = _poly_div_exact_int(num, cyclotomic_polynomial(d))
        poly = num
    _CYCLO[order] = poly
    return poly


def _tables(order: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    # Power tables: x^k mod Phi_order for k in [0, max(order, 2*deg-1)).
    if order in _POWERS:
        return _REDUCE[order], _POWERS[order]
    poly = cyclotomic_polynomial(order)
    deg = len(poly) - 1
    top = [-c for c in poly[:deg]]  # x^deg reduces to this vector
    powers: list[list[int]] = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    for _ in range(max(order, 2 * deg - 1)):
        powers.append(list(cur))
        carry = cur[deg - 1]
        nxt = [0] + cur[: deg - 1]
        if carry:
            for t in range(deg):
                nxt[t] += carry * top[t]
        cur = nxt
    ptuple = [tuple(v) for v in powers]
    _POWERS[order] = ptuple
    _REDUCE[order] = ptuple[deg : 2 * deg - 1] if deg > 1 else []
    return _REDUCE[order], _POWERS[order]


def phi_degree(order: int) -> int:
    """Degree of Q(zeta_order) over Q."""
    return len(cyclotomic_polynomial(order)) - 1


def reduction_expansion_bound(order: int) -> int:
    """Bound rho with max|coords(u*v)| <= rho * max|u| * max|v| for integer vectors."""
    deg = phi_degree(order)
    reduce_rows, _ = _tables(order)
    tail = sum(max((abs(c) for c in row), default=0) for row in reduce_rows)
    return deg * (1 + tail)


class Cyclotomic:
    """An element of Q(zeta_order), stored exactly."""

    __slots__ = ("order", "num", "den")
    __hash__ = None  # equality spans orders; hashing would be inconsistent

    def __init__(self, order: int, num: tuple[int, ...], den: int = 1):
        deg = phi_degree(order)
        if len(num) != deg:
            raise ValueError(f"need {deg} coordinates for order {order}, got {len(num)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = tuple(-c for c in num)
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.order = order
        self.num = tuple(num)
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> Cyclotomic:
        return cls(order, (0,) * phi_degree(order), 1)

    @classmethod
    def one(cls, order: int = 1) -> Cyclotomic:
        return cls(order, (1,) + (0,) * (phi_degree(order) - 1), 1)

    @classmethod
    def from_int(cls, value: int, order: int = 1) -> Cyclotomic:
        return cls(order, (value,) + (0,) * (phi_degree(order) - 1), 1)

    @classmethod
    def from_fraction(cls, value, order: int = 1) -> Cyclotomic:
        value = Fraction(value)
        pad = (0,) * (phi_degree(order) - 1)
        return cls(order, (value.numerator,) + pad, value.denominator)

    @classmethod
    def coerce(cls, value) -> Cyclotomic:
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, int):
            return cls.from_int(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic scalar")

    # -- order handling ---------------------------------------------------

    def lift(self, target: int) -> Cyclotomic:
        """Rewrite in Q(zeta_target); target must be a multiple of self.order."""
        if self.order == target:
            return self
        if target % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} into order {target}")
        step = target // self.order
        _, powers = _tables(target)
        deg = phi_degree(target)
        acc = [0] * deg
        for t, c in enumerate(self.num):
            if c:
                row = powers[t * step]
                for k in range(deg):
                    if row[k]:
                        acc[k] += c * row[k]
        return Cyclotomic(target, tuple(acc), self.den)

    def _common(self, other: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if self.order == other.order:
            return self, other
        target = lcm(self.order, other.order)
        return self.lift(target), other.lift(target)

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other) -> bool:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, tuple(-c for c in self.num), self.den)

    def __add__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        if a.den == 1 and b.den == 1:
            return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.num, b.num)), 1)
        return Cyclotomic(
            a.order,
            tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return Cyclotomic.coerce(other) + (-self)

    def __mul__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        deg = len(a.num)
        if deg == 1:
            return Cyclotomic(a.order, (a.num[0] * b.num[0],), a.den * b.den)
        conv = [0] * (2 * deg - 1)
        for i, ai in enumerate(a.num):
            if ai:
                for j, bj in enumerate(b.num):
                    if bj:
                        conv[i + j] += ai * bj
        reduce_rows, _ = _tables(a.order)
        out = conv[:deg]
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                row = reduce_rows[k - deg]
                for t in range(deg):
                    if row[t]:
                        out[t] += c * row[t]
        return Cyclotomic(a.order, tuple(out), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero")
        deg = len(self.num)
        if deg == 1:
            return Cyclotomic(self.order, (self.den,), self.num[0])
        # Extended Euclid in Q[x]: s*self + t*Phi = const, so s/const inverts self.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = [Fraction(c, self.den) for c in self.num]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) <= 1:
                break
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("inverse of zero")
        c = r1[0]
        coeffs = [si / c for si in s1] + [Fraction(0)] * deg
        den = 1
        for f in coeffs[:deg]:
            den = lcm(den, f.denominator)
        return Cyclotomic(self.order, tuple(int(f * den) for f in coeffs[:deg]), den)

    def __truediv__(self, other) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Cyclotomic:
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = Cyclotomic.one(base.order)
        cur = base
        while k:
            if k & 1:
                out = out * cur
            cur = cur * cur
            k >>= 1
        return out

    # -- queries ---------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def multiplicative_order(self):
        """Smallest k >= 1 with self**k == 1, or None if not a root of unity."""
        if not any(self.num):
            return None
        one = Cyclotomic.one(self.order)
        cur = self
        for k in range(1, 2 * self.order + 1):
            if cur == one:
                return k
            cur = cur * self
        return None

    def pretty(self) -> str:
        if not any(self.num):
            return "0"
        parts = []
        for t, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            if t == 0:
                parts.append(str(q))
            else:
                mag = "" if abs(q) == 1 else f"{abs(q)}*"
                sign = "-" if q < 0 else ""
                parts.append(f"{sign}{mag}" + ("z" if t == 1 else f"z^{t}"))
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s if self.order == 1 else f"{s} [z=zeta_{self.order}]"

    def __repr__(self) -> str:
        return f"Cyclotomic({self.pretty()!r})"

    def to_json(self) -> dict:
        coeffs = []
        for c in self.num:
            q = Fraction(c, self.den)
            coeffs.append([str(q.numerator), str(q.denominator)])
        return {"order": self.order, "coeffs": coeffs}


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] -= f * bi
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_unity(order: int, exponent: int = 1) -> Cyclotomic:
    """zeta_order ** exponent, exactly."""
    _, powers = _tables(order)
    return Cyclotomic(order, powers[exponent % order], 1)


def cyc_from_json(obj: dict) -> Cyclotomic:
    order = int(obj["order"])
    deg = phi_degree(order)
    coeffs = obj["coeffs"]
    if len(coeffs) != deg:
        raise ValueError(f"order {order} needs {deg} coefficients, got {len(coeffs)}")
    fracs = [Fraction(int(n), int(d)) for n, d in coeffs]
    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    return Cyclotomic(order, tuple(int(f * den) for f in fracs), den)


def q_int(n: int, omega: Cyclotomic) -> Cyclotomic:
    """The q-integer (n)_omega = 1 + omega + ... + omega**(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    acc = Cyclotomic.zero(omega.order)
    cur = Cyclotomic.one(omega.order)
    for _ in range(n):
        acc = acc + cur
        cur = cur * omega
    return acc


def q_factorial(n: int, omega: Cyclotomic) -> Cyclotomic:
    """The q-factorial (n)_omega! = (n)_omega (n-1)_omega ... (1)_omega."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    acc = Cyclotomic.one(omega.order)
    for k in range(1, n + 1):
        acc = acc * q_int(k, omega)
    return acc

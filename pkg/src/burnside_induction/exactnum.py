"""Exact scalars: rationals, polynomials over Q, reduced rational functions in Q(t).

Rationals are :class:`fractions.Fraction`. Polynomials and rational functions
are immutable and kept in canonical form, so ``==`` is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class SingularMatrixError(ArithmeticError):
    pass


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def fmt_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    c = [Fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Dense polynomial over Q; ``coeffs[i]`` is the coefficient of t**i.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[fmt_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{fmt_rational(abs(c))}*{mono}"
            else:
                body = fmt_rational(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return Polynomial.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        out = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        if len(rem) - 1 < db:
            return Polynomial(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lb
            quo[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Polynomial(quo), Polynomial(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.lead
        return Polynomial(c / lc for c in self.coeffs)

    def integer_primitive(self) -> tuple[int, ...]:
        """Primitive integer polynomial proportional to self, positive leading coefficient."""
        if self.is_zero():
            return ()
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return tuple(i // g for i in ints)


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (low degree first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, computed with a primitive remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x, y = list(a.integer_primitive()), list(b.integer_primitive())
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_prem(x, y)
        x, y = y, (_int_primitive(r) if r else [])
    return Polynomial(x).monic()


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.const(x)


class RationalFunction:
    """Element of Q(t), stored with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial.const(1)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num = Polynomial(c / lc for c in num.coeffs)
            den = Polynomial(c / lc for c in den.coeffs)
        self.num, self.den = num, den

    @staticmethod
    def _coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, Polynomial)):
            return RationalFunction(x)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!s}, {self.den!s})"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = object.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

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
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def regular_at(self, x: Scalar) -> bool:
        return self.den(x) != 0

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise PoleError(f"{self} has a pole at {fmt_rational(x)}")
        return self.num(x) / d

    def taylor(self, order: int) -> list[Fraction]:
        """Power-series coefficients at t = 0 up to and including t**order."""
        d = self.den.coeffs
        if d[0] == 0:
            raise PoleError("denominator vanishes at 0")
        n = self.num.coeffs
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = n[k] if k < len(n) else Fraction(0)
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d[0])
        return out


def rf_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_regular_at(f: RationalFunction, x: Scalar) -> bool:
    return f.regular_at(x)


def rf_eval(f: RationalFunction, x: Scalar) -> Fraction:
    return f(x)


def _is_upper_triangular(A: Sequence[Sequence]) -> bool:
    return all(not A[i][j] for i in range(len(A)) for j in range(i))


def _back_substitute(U, rhs, n: int, m: int):
    X = [[None] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        piv = U[i][i]
        if not piv:
            raise SingularMatrixError("singular matrix")
        for c in range(m):
            acc = rhs[i][c]
            for j in range(i + 1, n):
                if U[i][j]:
                    acc = acc - U[i][j] * X[j][c]
            X[i][c] = acc / piv
    return X


def _bareiss(M: list[list], n: int, exact_div) -> list[list]:
    """In-place fraction-free forward elimination on an augmented n-row matrix."""
    ncols = len(M[0])
    prev = None
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if M[i][k]), None)
        if pivot_row is None:
            raise SingularMatrixError("singular matrix")
        if pivot_row != k:
            M[k], M[pivot_row] = M[pivot_row], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            a = M[i][k]
            row = M[i]
            for j in range(k + 1, ncols):
                v = row[j] * pk - a * M[k][j]
                row[j] = v if prev is None else exact_div(v, prev)
            row[k] = 0 * pk
        prev = pk
    return M


def mat_solve(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    """Solve ``A X = B`` exactly over Q or Q(t).

    Entries may be ints, Fractions, Polynomials or RationalFunctions. Upper
    triangular systems are solved by back substitution; everything else goes
    through Bareiss elimination on a row-scaled copy with integer (resp.
    polynomial) entries.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("A must be square")
    if len(B) != n:
        raise ValueError("row count mismatch between A and B")
    m = len(B[0]) if n else 0
    if n == 0:
        return []
    symbolic = any(
        isinstance(x, (Polynomial, RationalFunction)) for row in (*A, *B) for x in row
    )

    if not symbolic:
        if _is_upper_triangular(A):
            if all(A[i][i] == 1 for i in range(n)) and all(
                type(x) is int for row in (*A, *B) for x in row
            ):
                # unitriangular integer system: stay in Z
                X = [[0] * m for _ in range(n)]
                for i in range(n - 1, -1, -1):
                    Ai = A[i]
                    nz = [j for j in range(i + 1, n) if Ai[j]]
                    for c in range(m):
                        X[i][c] = B[i][c] - sum(Ai[j] * X[j][c] for j in nz)
                return X
            A_ =[[Fraction(x) for x in row] for row in A]
            B_ = [[Fraction(x) for x in row] for row in B]
            return _back_substitute(A_, B_, n, m)
        M = []
        for i in range(n):
            row = [Fraction(x) for x in (*A[i], *B[i])]
            den = reduce(lcm, (x.denominator for x in row), 1)
            M.append([int(x * den) for x in row])
        _bareiss(M, n, lambda a, b: a // b)
        U = [[Fraction(x) for x in row[:n]] for row in M]
        R = [[Fraction(x) for x in row[n:]] for row in M]
        return _back_substitute(U, R, n, m)

    M = []
    for i in range(n):
        row = [RationalFunction._coerce(x) for x in (*A[i], *B[i])]
        scale = Polynomial.const(1)
        for x in row:
            if x.den.degree > 0:
                scale = scale * x.den.exact_div(poly_gcd(scale, x.den))
        polys = [x.num * scale.exact_div(x.den) for x in row]
        den = reduce(lcm, (c.denominator for q in polys for c in q.coeffs), 1)
        M.append([_ZPoly([int(c * den) for c in q.coeffs]) for q in polys])
    _bareiss(M, n, _ZPoly.exact_div)
    U = [[RationalFunction(Polynomial(x.c)) for x in row[:n]] for row in M]
    R = [[RationalFunction(Polynomial(x.c)) for x in row[n:]] for row in M]
    return _back_substitute(U, R, n, m)


class _ZPoly:
    """Bare integer polynomial used inside Bareiss elimination over Z[t]."""

    __slots__ = ("c",)

    def __init__(self, c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __mul__(self, other):
        if isinstance(other, int):
            return _ZPoly([x * other for x in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return _ZPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _ZPoly(out)

    __rmul__ = __mul__

    def __sub__(self, other):
        a, b = self.c, other.c
        n = max(len(a), len(b))
        return _ZPoly([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])

    def exact_div(self, other):
        r = list(self.c)
        d = other.c
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        if len(r) < len(d):
            if r:
                raise ArithmeticError("inexact polynomial division")
            return _ZPoly([])
        q = [0] * (len(r) - len(d) + 1)
        lead = d[-1]
        for k in range(len(q) - 1, -1, -1):
            coef, rem = divmod(r[k + len(d) - 1], lead)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = coef
            if coef:
                for j, y in enumerate(d):
                    r[k + j] -= coef * y
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return _ZPoly(q)


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    inner = len(B)
    cols = len(B[0]) if inner else 0
    out = []
    for row in A:
        new = []
        for c in range(cols):
            acc = 0
            for k in range(inner):
                if row[k] and B[k][c]:
                    acc = acc + row[k] * B[k][c]
            new.append(acc)
        out.append(new)
    return out


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]

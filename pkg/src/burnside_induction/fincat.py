"""Finite categories given by hom-set sizes and an isomorphism partition.

Only ``zeta[x][y] = |C(x, y)|`` and the isomorphism classes are stored; every
invariant computed here (skeletal Möbius inversion, weightings, Euler
characteristic, series Euler characteristic) depends on nothing else.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Hashable, Sequence

from .exactnum import (
    Polynomial,
    RationalFunction,
    SingularMatrixError,
    fmt_rational,
    identity,
    mat_mul,
    mat_solve,
)
from .poset import Poset


class NoSkeletalInversion(ArithmeticError):
    """The zeta function is not invertible in the isomorphism-invariant algebra."""


class NotInLocalization(ArithmeticError):
    """The nerve generating function has a pole at t = -1."""


class FinCat:
    def __init__(
        self,
        objects: Sequence[Hashable],
        zeta: Sequence[Sequence[int]],
        iso_classes: Sequence[Sequence[int]] | None = None,
        ei: bool | None = None,
    ):
        self.objects = list(objects)
        n = len(self.objects)
        self.zeta = [[int(v) for v in row] for row in zeta]
        if len(self.zeta) != n or any(len(r) != n for r in self.zeta):
            raise ValueError("zeta must be square with one row per object")
        if iso_classes is None:
            iso_classes = [[i] for i in range(n)]
        self.iso_classes = [sorted(c) for c in iso_classes]
        self.ei = ei
        self._validate()

    def _validate(self) -> None:
        n = len(self.objects)
        flat = sorted(i for c in self.iso_classes for i in c)
        if flat != list(range(n)):
            raise ValueError("iso_classes must partition the objects")
        if any(self.zeta[i][i] < 1 for i in range(n)):
            raise ValueError("every object needs an identity morphism")
        cls = self.class_index
        for x in range(n):
            for y in range(n):
                rx, ry = self.iso_classes[cls[x]][0], self.iso_classes[cls[y]][0]
                if self.zeta[x][y] != self.zeta[rx][ry]:
                    raise ValueError("zeta is not constant on isomorphism classes")

    @property
    def class_index(self) -> list[int]:
        out = [0] * len(self.objects)
        for c, members in enumerate(self.iso_classes):
            for i in members:
                out[i] = c
        return out

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        return f"<FinCat objects={len(self)} iso_classes={len(self.iso_classes)}>"

    def opposite(self) -> "FinCat":
        n = len(self)
        zt = [[self.zeta[y][x] for y in range(n)] for x in range(n)]
        return FinCat(self.objects, zt, self.iso_classes, self.ei)

    def to_json(self) -> str:
        return json.dumps(
            {"objects": [str(o) for o in self.objects], "zeta": self.zeta, "iso_classes": self.iso_classes},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "FinCat":
        d = json.loads(text)
        return cls(d["objects"], d["zeta"], d["iso_classes"], d.get("ei"))


def from_poset(P: Poset) -> FinCat:
    return FinCat(P.labels, P.zeta(), ei=True)


def one_object(n: int, is_group: bool = True) -> FinCat:
    """One object with ``n`` endomorphisms (a monoid; EI iff it is a group)."""
    return FinCat(["*"], [[n]], ei=is_group or n == 1)


def discrete(m: int) -> FinCat:
    return FinCat(list(range(m)), identity(m), ei=True)


def idempotent_e(C: FinCat) -> list[list[Fraction]]:
    n = len(C)
    cls = C.class_index
    size = [len(C.iso_classes[c]) for c in cls]
    return [[Fraction(1, size[x]) if cls[x] == cls[y] else Fraction(0) for y in range(n)] for x in range(n)]


def skeletal_nu(C: FinCat) -> list[list[Fraction]]:
    """Inverse of zeta inside e M(C) e.

    Inverts zeta on one representative per isomorphism class and spreads each
    entry uniformly over the corresponding pair of classes.
    """
    reps = [c[0] for c in C.iso_classes]
    k = len(reps)
    zs = [[C.zeta[a][b] for b in reps] for a in reps]
    try:
        mu = mat_solve(zs, identity(k))
    except SingularMatrixError as exc:
        raise NoSkeletalInversion("skeleton has a singular zeta matrix") from exc
    cls = C.class_index
    sizes = [len(c) for c in C.iso_classes]
    n = len(C)
    nu = [
        [Fraction(mu[cls[x]][cls[y]]) / (sizes[cls[x]] * sizes[cls[y]]) for y in range(n)]
        for x in range(n)
    ]
    e = idempotent_e(C)
    assert mat_mul(nu, C.zeta) == e and mat_mul(C.zeta, nu) == e
    return nu


def skeletal_weighting(C: FinCat) -> dict:
    nu = skeletal_nu(C)
    k = [sum(row, Fraction(0)) for row in nu]
    assert all(sum(C.zeta[x][y] * k[y] for y in range(len(C))) == 1 for x in range(len(C)))
    return dict(zip(C.objects, k))


def skeletal_coweighting(C: FinCat) -> dict:
    nu = skeletal_nu(C)
    n = len(C)
    k = [sum((nu[x][y] for x in range(n)), Fraction(0)) for y in range(n)]
    assert all(sum(k[x] * C.zeta[x][y] for x in range(n)) == 1 for y in range(n))
    return dict(zip(C.objects, k))


def euler_char(C: FinCat) -> Fraction:
    return sum((v for row in skeletal_nu(C) for v in row), Fraction(0))


def series_generating(C: FinCat) -> RationalFunction:
    """Sum over n of the number of non-degenerate n-simplices in the nerve, times t**n.

    Computed in closed form as 1^T (I - (zeta - I) t)^{-1} 1 over Q(t).
    """
    n = len(C)
    if n == 0:
        return RationalFunction(0)
    t = Polynomial.t()
    A = [
        [(Polynomial.const(1) if x == y else Polynomial()) - (C.zeta[x][y] - (x == y)) * t for y in range(n)]
        for x in range(n)
    ]
    X = mat_solve(A, [[1] for _ in range(n)])
    total = RationalFunction(0)
    for row in X:
        total = total + row[0]
    return total


def series_euler(C: FinCat) -> Fraction:
    f = series_generating(C)
    if not f.regular_at(-1):
        raise NotInLocalization(f"f_C = {f} has a pole at -1")
    return f(-1)


def nerve_count(C: FinCat, n: int) -> int:
    """1^T (zeta - I)^n 1: chains of n composable non-identity morphisms."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = len(C)
    D = [[C.zeta[x][y] - (x == y) for y in range(m)] for x in range(m)]
    v = [1] * m
    for _ in range(n):
        v = [sum(D[x][y] * v[y] for y in range(m)) for x in range(m)]
    return sum(v)


def format_weights(w: dict) -> dict[str, str]:
    return {str(k): fmt_rational(v) for k, v in w.items()}

"""Finite posets: Möbius function, Euler characteristics, augmentations and intervals."""

from __future__ import annotations

import json
from typing import Any, Callable, Hashable, Sequence

import numpy as np

from .exactnum import identity, mat_solve

TOP = "+inf"
BOTTOM = "-inf"


class PosetError(ValueError):
    pass


class Poset:
    """An immutable finite poset on ``labels`` with relation matrix ``leq``.

    ``compare(a, b)`` decides ``a <= b`` for labels that are not (yet) in the
    poset; interval queries use it when the reference element lies outside.
    """

    def __init__(self, labels: Sequence[Hashable], leq, compare: Callable[[Any, Any], bool] | None = None, validate: bool = True):
        self.labels = list(labels)
        self.leq = np.array(leq, dtype=bool).reshape(len(self.labels), len(self.labels))
        self.compare = compare
        if validate:
            self._validate()

    @classmethod
    def from_relation(cls, labels: Sequence[Hashable], compare: Callable[[Any, Any], bool]) -> "Poset":
        n = len(labels)
        leq = [[compare(labels[i], labels[j]) for j in range(n)] for i in range(n)]
        return cls(labels, leq, compare=compare)

    def _validate(self) -> None:
        L = self.leq
        n = len(self.labels)
        if n == 0:
            return
        if not L.diagonal().all():
            raise PosetError("relation is not reflexive")
        if (L & L.T & ~np.eye(n, dtype=bool)).any():
            raise PosetError("relation is not antisymmetric")
        if ((L.astype(np.int64) @ L.astype(np.int64) > 0) & ~L).any():
            raise PosetError("relation is not transitive")

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<Poset with {len(self)} elements>"

    def position(self, label) -> int:
        return self.labels.index(label)

    def linear_extension(self) -> list[int]:
        below = self.leq.sum(axis=0)
        return sorted(range(len(self)), key=lambda i: (below[i], i))

    def zeta(self) -> list[list[int]]:
        return self.leq.astype(int).tolist()

    def covers(self) -> list[tuple[int, int]]:
        L = self.leq
        n = len(self)
        strict = L & ~np.eye(n, dtype=bool)
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        cov = strict & ~two_step
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]

    def to_json(self, label_fn: Callable[[Any], Any] = str) -> str:
        return json.dumps(
            {"labels": [label_fn(x) for x in self.labels], "covers": self.covers()},
            sort_keys=True,
        )


def mobius(P: Poset) -> list[list[int]]:
    """Möbius function as a matrix indexed like ``P.labels``.

    Solves ``zeta * mu = identity`` by back substitution on zeta written in a
    linear extension, where it is unitriangular.
    """
    n = len(P)
    if n == 0:
        return []
    ext = P.linear_extension()
    Z = [[int(P.leq[a, b]) for b in ext] for a in ext]
    M = mat_solve(Z, identity(n))
    out = [[0] * n for _ in range(n)]
    for i, a in enumerate(ext):
        for j, b in enumerate(ext):
            out[a][b] = M[i][j]
    return out


def mobius_column(P: Poset, label) -> dict:
    """``{x: mu(x, label)}`` from a single triangular solve."""
    ext = P.linear_extension()
    Z = [[int(P.leq[a, b]) for b in ext] for a in ext]
    target = P.position(label)
    rhs = [[int(a == target)] for a in ext]
    X = mat_solve(Z, rhs)
    return {P.labels[a]: X[i][0] for i, a in enumerate(ext)}


def mobius_row(P: Poset, label) -> dict:
    """``{y: mu(label, y)}``."""
    dual = Poset(P.labels, P.leq.T, compare=None, validate=False)
    return mobius_column(dual, label)


def augment_top(P: Poset, label: Hashable = TOP) -> Poset:
    if label in P.labels:
        raise PosetError(f"label {label!r} already present")
    n = len(P)
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = P.leq
    leq[:, n] = True
    return Poset([*P.labels, label], leq, compare=P.compare, validate=False)


def augment_bottom(P: Poset, label: Hashable = BOTTOM) -> Poset:
    if label in P.labels:
        raise PosetError(f"label {label!r} already present")
    n = len(P)
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[1:, 1:] = P.leq
    leq[0, :] = True
    return Poset([label, *P.labels], leq, compare=P.compare, validate=False)


def euler_char(P: Poset) -> int:
    return sum(sum(row) for row in mobius(P))


def reduced_euler_char(P: Poset) -> int:
    return euler_char(P) - 1


def chain_count(P: Poset, n: int) -> int:
    """Number of strict chains x0 < x1 < ... < xn."""
    if n < 0:
        raise ValueError("chain length must be non-negative")
    m = len(P)
    strict = (P.leq & ~np.eye(m, dtype=bool)).astype(object)
    ending = np.ones(m, dtype=object)
    for _ in range(n):
        ending = strict.T.dot(ending) if m else ending
    return int(sum(ending))


def chain_euler_char(P: Poset) -> int:
    """Alternating sum of chain counts; finite because chains have length < |P|."""
    return sum((-1) ** k * chain_count(P, k) for k in range(len(P)))


def induced(P: Poset, keep: Sequence[int]) -> Poset:
    idx = list(keep)
    return Poset([P.labels[i] for i in idx], P.leq[np.ix_(idx, idx)], compare=P.compare, validate=False)


def interval(P: Poset, element, mode: str) -> Poset:
    """Elements of P strictly above (``>``), strictly below (``<``), weakly above
    (``>=``) or weakly below (``<=``) ``element``."""
    if mode not in (">", "<", ">=", "<="):
        raise ValueError(f"unknown interval mode {mode!r}")
    if element in P.labels:
        i = P.position(element)
        up = P.leq[i, :]
        down = P.leq[:, i]
        eq = np.zeros(len(P), dtype=bool)
        eq[i] = True
    else:
        if P.compare is None:
            raise PosetError("reference element outside the poset and no comparison available")
        up = np.array([P.compare(element, x) for x in P.labels], dtype=bool)
        down = np.array([P.compare(x, element) for x in P.labels], dtype=bool)
        eq = up & down
    mask = {">": up & ~eq, "<": down & ~eq, ">=": up, "<=": down}[mode]
    return induced(P, [i for i in range(len(P)) if mask[i]])


def chain(n: int) -> Poset:
    return Poset(list(range(n)), [[i <= j for j in range(n)] for i in range(n)])


def antichain(n: int) -> Poset:
    return Poset(list(range(n)), np.eye(n, dtype=bool))


def boolean_lattice(k: int) -> Poset:
    labels = list(range(2**k))
    return Poset.from_relation(labels, lambda a, b: a & ~b == 0)

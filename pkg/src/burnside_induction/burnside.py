"""The rational Burnside ring of a permutation group.

Elements are stored in the transitive basis ``[G/H]``, keyed by the number of
the conjugacy class of H. Coordinates in the primitive idempotent basis are
exactly the mark vectors, so converting between the two bases is a
triangular solve against the table of marks.
"""

from __future__ import annotations

import json
import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactnum import fmt_rational, mat_solve
from .permgroup import GroupError, PermGroup, Subgroup, SubgroupClass

_TOM_CACHE: "weakref.WeakKeyDictionary[PermGroup, TableOfMarks]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class TableOfMarks:
    group: PermGroup
    classes: tuple[SubgroupClass, ...]
    marks: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self.marks for v in row)
        lines = [" ".join(str(v).rjust(width) for v in row) for row in self.marks]
        return "\n".join(lines)


def table_of_marks(G: PermGroup) -> TableOfMarks:
    """``marks[i][j] = |(G/H_i)^{K_j}|`` over class representatives in canonical order."""
    tom = _TOM_CACHE.get(G)
    if tom is None:
        classes = tuple(G.conjugacy_classes_of_subgroups())
        reps = [c.representative for c in classes]
        marks = tuple(
            tuple(G.marks(H, K) if K.order <= H.order and H.order % K.order == 0 else 0 for K in reps)
            for H in reps
        )
        tom = TableOfMarks(G, classes, marks)
        _TOM_CACHE[G] = tom
    return tom


class BurnsideElement:
    """A Q-linear combination of transitive G-sets ``[G/H]``."""

    __slots__ = ("group", "coords")

    def __init__(self, group: PermGroup, coords: Mapping[int, Fraction | int] | None = None):
        self.group = group
        self.coords = {k: Fraction(v) for k, v in (coords or {}).items() if v != 0}

    @classmethod
    def transitive(cls, G: PermGroup, H: Subgroup) -> "BurnsideElement":
        return cls(G, {G.class_of(H).number: 1})

    @classmethod
    def zero(cls, G: PermGroup) -> "BurnsideElement":
        return cls(G)

    @classmethod
    def one(cls, G: PermGroup) -> "BurnsideElement":
        return cls.transitive(G, G.whole)

    def _same(self, other: "BurnsideElement") -> None:
        if other.group is not self.group:
            raise GroupError("Burnside elements over different groups")

    def __eq__(self, other) -> bool:
        return isinstance(other, BurnsideElement) and other.group is self.group and other.coords == self.coords

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._same(other)
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, 0) + v
        return BurnsideElement(self.group, out)

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.group, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "BurnsideElement":
        return BurnsideElement(self.group, {k: c * v for k, v in self.coords.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same(other)
        a, b = marks_of(self), marks_of(other)
        return from_idempotent_coords(self.group, [x * y for x, y in zip(a, b)])

    def coefficient(self, cls: SubgroupClass | Subgroup) -> Fraction:
        if isinstance(cls, Subgroup):
            cls = self.group.class_of(cls)
        return self.coords.get(cls.number, Fraction(0))

    def terms(self) -> list[tuple[SubgroupClass, Fraction]]:
        classes = self.group.conjugacy_classes_of_subgroups()
        return [(classes[k], self.coords[k]) for k in sorted(self.coords)]

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for cls, c in self.terms():
            parts.append(f"{fmt_rational(c)}[G/H{cls.number}]")
        return " + ".join(parts)

    def to_records(self) -> list[dict]:
        out = []
        for cls, c in self.terms():
            H = cls.representative
            out.append(
                {
                    "subgroup_class_key": subgroup_key(H),
                    "generators": [str(g) for g in H.generators],
                    "order": H.order,
                    "index": self.group.order // H.order,
                    "class_size": cls.size,
                    "coefficient": fmt_rational(c),
                }
            )
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_records(), sort_keys=True)


def subgroup_key(H: Subgroup) -> str:
    """Canonical key: the sorted element list in cycle notation."""
    return ";".join(str(g) for g in H.elements)


def marks_of(x: BurnsideElement) -> list[Fraction]:
    tom = table_of_marks(x.group)
    n = len(tom.classes)
    out = [Fraction(0)] * n
    for h, c in x.coords.items():
        row = tom.marks[h]
        for k in range(n):
            if row[k]:
                out[k] += c * row[k]
    return out


def to_idempotent_coords(x: BurnsideElement) -> list[Fraction]:
    return marks_of(x)


def from_idempotent_coords(G: PermGroup, v: Sequence[Fraction | int]) -> BurnsideElement:
    tom = table_of_marks(G)
    n = len(tom.classes)
    if len(v) != n:
        raise ValueError(f"expected {n} coordinates, got {len(v)}")
    MT = [[Fraction(tom.marks[h][k]) for h in range(n)] for k in range(n)]
    sol = mat_solve(MT, [[Fraction(x)] for x in v])
    return BurnsideElement(G, {h: sol[h][0] for h in range(n)})


def primitive_idempotent(G: PermGroup, cls: SubgroupClass | int) -> BurnsideElement:
    k = cls if isinstance(cls, int) else cls.number
    n = len(table_of_marks(G).classes)
    return from_idempotent_coords(G, [int(i == k) for i in range(n)])


def translate(H: Subgroup, target: PermGroup) -> Subgroup:
    """The same set of permutations viewed as a subgroup of ``target``."""
    mask = 0
    for g in H.elements:
        i = target.index.get(g)
        if i is None:
            raise GroupError(f"{g} is not an element of the target group")
        mask |= 1 << i
    return Subgroup(target, mask)


def restrict(x: BurnsideElement, K: PermGroup | Subgroup) -> BurnsideElement:
    """Restriction to a subgroup: decompose each G/H into K-orbits.

    The orbit of gH has stabilizer K ∩ gHg^-1, which realizes the Mackey
    double coset formula.
    """
    G = x.group
    if isinstance(K, Subgroup):
        if K.parent is not G:
            raise GroupError("K is not a subgroup of this group")
        Ksub, KG = K, G.as_group(K)
    else:
        KG, Ksub = K, _embed(K, G)
    classes = G.conjugacy_classes_of_subgroups()
    mul = G.mul
    k_idx = Ksub.indices
    out: dict[int, Fraction] = {}
    for h, c in x.coords.items():
        H = classes[h].representative
        coset_of = [0] * G.order
        for r in G.coset_reps(H):
            for e in H.indices:
                coset_of[mul[r][e]] = r
        seen: set[int] = set()
        for r in G.coset_reps(H):
            if r in seen:
                continue
            orbit = {coset_of[mul[k][r]] for k in k_idx}
            seen |= orbit
            stab = Subgroup(G, Ksub.mask & G.conjugate(H, r).mask)
            cls = KG.class_of(translate(stab, KG)).number
            out[cls] = out.get(cls, 0) + c
    return BurnsideElement(KG, out)


def _embed(KG: PermGroup, G: PermGroup) -> Subgroup:
    return translate(KG.whole, G)


def induce(x: BurnsideElement, G: PermGroup) -> BurnsideElement:
    """Induction ``[K/L] -> [G/L]``."""
    KG = x.group
    _embed(KG, G)
    classes = KG.conjugacy_classes_of_subgroups()
    out: dict[int, Fraction] = {}
    for l, c in x.coords.items():
        L = translate(classes[l].representative, G)
        n = G.class_of(L).number
        out[n] = out.get(n, 0) + c
    return BurnsideElement(G, out)


def collection_idempotent(G: PermGroup, members: Iterable[Subgroup]) -> BurnsideElement:
    """Sum of the primitive idempotents of the classes making up a conjugation-closed set."""
    masks = {H.mask for H in members}
    classes = G.conjugacy_classes_of_subgroups()
    v = []
    for cls in classes:
        inside = [K.mask in masks for K in cls.members]
        if any(inside) and not all(inside):
            raise GroupError("collection is not closed under conjugation")
        v.append(int(all(inside)))
    return from_idempotent_coords(G, v)

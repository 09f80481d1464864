"""Finite permutation groups with full element enumeration.

Elements of a :class:`PermGroup` are sorted lexicographically by their image
arrays, and a subgroup is stored as a bitmask over those element indices.
Sorting indices therefore sorts image arrays, so the canonical key of a
subgroup is simply its sorted index tuple.

Composition convention: ``(g * h)(x) = g(h(x))``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 10000


class GroupError(ValueError):
    pass


class OrderCapExceeded(GroupError):
    pass


def default_order_cap() -> int:
    return int(os.environ.get("BURNSIDE_ORDER_CAP", DEFAULT_ORDER_CAP))


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, (*cyc[1:], cyc[0])):
                if not 0 <= a < degree:
                    raise GroupError(f"point {a} out of range for degree {degree}")
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, degree: int, text: str) -> "Permutation":
        """Parse a product of disjoint cycles such as ``"(0 1)(2 3)"``."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(degree)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise GroupError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", c.strip())]
            for c in re.findall(r"\(([^)]*)\)", text)
        ]
        seen = [p for c in cycles for p in c]
        if len(seen) != len(set(seen)):
            raise GroupError(f"cycles are not disjoint: {text!r}")
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _closure(gens: Sequence[Permutation], degree: int, cap: int) -> list[Permutation]:
    e = Permutation.identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    return sorted(seen)


class PermGroup:
    """A finite permutation group with every element enumerated."""

    def __init__(self, generators: Sequence[Permutation], degree: int, order_cap: int | None = None, name: str | None = None):
        for g in generators:
            if g.degree != degree:
                raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
        cap = default_order_cap() if order_cap is None else order_cap
        self.degree = degree
        self.generators = tuple(generators)
        self.elements: list[Permutation] = _closure(self.generators, degree, cap)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.name = name
        self.order_cap = cap
        assert factorial(degree) % self.order == 0

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} order={self.order} degree={self.degree}>"

    def __len__(self) -> int:
        return self.order

    # -- multiplication data -------------------------------------------------

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        E = np.array([g.images for g in self.elements], dtype=np.int64).reshape(self.order, self.degree)
        radix = np.int64(self.degree)
        weights = radix ** np.arange(self.degree - 1, -1, -1, dtype=np.int64)
        codes = E @ weights
        order = np.argsort(codes)
        sorted_codes = codes[order]
        out = np.empty((self.order, self.order), dtype=np.int64)
        for i in range(self.order):
            comp = E[i][E]
            out[i] = order[np.searchsorted(sorted_codes, comp @ weights)]
        return out

    @cached_property
    def mul(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def inv(self) -> list[int]:
        return [self.index[g.inverse()] for g in self.elements]

    @cached_property
    def element_orders(self) -> list[int]:
        mul = self.mul
        out = []
        for i in range(self.order):
            k, x = 1, i
            while x != 0:
                x = mul[x][i]
                k += 1
            out.append(k)
        return out

    def conj_index(self, g: int, h: int) -> int:
        """Index of g h g^-1."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    # -- subgroups -----------------------------------------------------------

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1)

    def closure_mask(self, gen_indices: Iterable[int], start_mask: int = 1) -> int:
        gens = list(gen_indices)
        mul = self.mul
        mask = start_mask
        frontier = _indices(start_mask)
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    def subgroup(self, gens: Iterable[Permutation | int]) -> "Subgroup":
        idx = [g if isinstance(g, int) else self.index[g] for g in gens]
        return Subgroup(self, self.closure_mask(idx))

    def subgroup_from_elements(self, elements: Iterable[Permutation]) -> "Subgroup":
        mask = 0
        for g in elements:
            mask |= 1 << self.index[g]
        H = Subgroup(self, mask)
        if self.closure_mask(H.indices, 1) != mask:
            raise GroupError("element set is not closed under multiplication")
        return H

    @cached_property
    def _subgroup_data(self) -> tuple[list["Subgroup"], dict[int, int]]:
        cyclic: dict[int, int] = {}
        for i in range(self.order):
            m = self.closure_mask([i])
            cyclic.setdefault(m, i)
        cyc_gens = [(m, g) for m, g in cyclic.items()]
        found: dict[int, tuple[int, ...]] = {m: (g,) for m, g in cyc_gens}
        queue = list(found)
        while queue:
            mask = queue.pop()
            gens = found[mask]
            for cmask, g in cyc_gens:
                if cmask & ~mask == 0:
                    continue
                joined = self.closure_mask((*gens, g), mask)
                if joined not in found:
                    found[joined] = (*gens, g)
                    queue.append(joined)
        subs = [Subgroup(self, m) for m in found]
        subs.sort(key=lambda H: (H.order, H.key))
        for H in subs:
            H.__dict__["gens"] = found[H.mask]
        return subs, {H.mask: i for i, H in enumerate(subs)}

    def all_subgroups(self) -> list["Subgroup"]:
        return list(self._subgroup_data[0])

    def canonical(self, H: "Subgroup") -> "Subgroup":
        """The cached subgroup object equal to H (carries a short generating set)."""
        subs, where = self._subgroup_data
        return subs[where[H.mask]]

    def conjugate(self, H: "Subgroup", g: int) -> "Subgroup":
        """g H g^-1 for an element index g."""
        mask = 0
        for h in H.indices:
            mask |= 1 << self.conj_index(g, h)
        return Subgroup(self, mask)

    @cached_property
    def _class_data(self) -> tuple[list["SubgroupClass"], dict[int, int]]:
        where: dict[int, int] = {}
        classes: list[SubgroupClass] = []
        for H in self.all_subgroups():
            if H.mask in where:
                continue
            orbit = {H.mask}
            frontier = [H]
            while frontier:
                nxt = []
                for K in frontier:
                    for g in self.generators:
                        J = self.conjugate(K, self.index[g])
                        if J.mask not in orbit:
                            orbit.add(J.mask)
                            nxt.append(J)
                frontier = nxt
            members = sorted((self.canonical(Subgroup(self, m)) for m in orbit), key=lambda K: K.key)
            cls = SubgroupClass(group=self, number=len(classes), representative=members[0], members=tuple(members))
            for m in orbit:
                where[m] = cls.number
            classes.append(cls)
        return classes, where

    def conjugacy_classes_of_subgroups(self) -> list["SubgroupClass"]:
        return list(self._class_data[0])

    def class_of(self, H: "Subgroup") -> "SubgroupClass":
        classes, where = self._class_data
        return classes[where[H.mask]]

    def centralizer(self, H: "Subgroup") -> "Subgroup":
        self._check(H)
        gens = H.gens
        mul = self.mul
        mask = 0
        for g in range(self.order):
            if all(mul[g][h] == mul[h][g] for h in gens):
                mask |= 1 << g
        return Subgroup(self, mask)

    def normalizer(self, H: "Subgroup") -> "Subgroup":
        self._check(H)
        gens = H.gens
        mask = 0
        for g in range(self.order):
            if all(H.mask >> self.conj_index(g, h) & 1 for h in gens):
                mask |= 1 << g
        return Subgroup(self, mask)

    def is_normal(self, H: "Subgroup", in_: "Subgroup | None" = None) -> bool:
        ambient = self.whole if in_ is None else in_
        gens = H.gens
        return all(
            H.mask >> self.conj_index(g, h) & 1 for g in ambient.indices for h in gens
        )

    def subgroups_of(self, H: "Subgroup") -> list["Subgroup"]:
        return [K for K in self.all_subgroups() if K.mask & ~H.mask == 0]

    def p_core(self, H: "Subgroup", p: int) -> "Subgroup":
        """Largest normal p-subgroup of H: the intersection of its Sylow p-subgroups."""
        if not is_prime(p):
            raise GroupError(f"{p} is not prime")
        self._check(H)
        n = H.order
        sylow = 1
        while n % p == 0:
            n //= p
            sylow *= p
        mask = H.mask
        for K in self.subgroups_of(H):
            if K.order == sylow:
                mask &= K.mask
        return Subgroup(self, mask)

    def is_cyclic(self, H: "Subgroup") -> bool:
        orders = self.element_orders
        return any(orders[h] == H.order for h in H.indices)

    def element_classes(self) -> list[tuple[int, int]]:
        """Conjugacy classes of elements as (least element index, class size)."""
        seen = [False] * self.order
        out = []
        gen_idx = [self.index[g] for g in self.generators]
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gen_idx:
                        y = self.conj_index(g, x)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            for x in orbit:
                seen[x] = True
            out.append((i, len(orbit)))
        return out

    def fixed_points(self, g: int, H: "Subgroup") -> int:
        """Number of cosets xH fixed by the element with index g."""
        self._check(H)
        mul, inv = self.mul, self.inv
        count = sum(1 for x in range(self.order) if H.mask >> mul[mul[inv[x]][g]][x] & 1)
        return count // H.order

    def coset_reps(self, H: "Subgroup") -> list[int]:
        """Least element index of each left coset gH."""
        seen = 0
        reps = []
        mul = self.mul
        for g in range(self.order):
            if seen >> g & 1:
                continue
            reps.append(g)
            for h in H.indices:
                seen |= 1 << mul[g][h]
        return reps

    def marks(self, H: "Subgroup", K: "Subgroup") -> int:
        """|(G/H)^K|: cosets gH with K contained in g H g^-1."""
        kg = K.gens
        mul, inv = self.mul, self.inv
        count = 0
        for g in range(self.order):
            gi = inv[g]
            if all(H.mask >> mul[mul[gi][k]][g] & 1 for k in kg):
                count += 1
        return count // H.order

    # -- subgroup as a group in its own right ---------------------------------

    def as_group(self, H: "Subgroup") -> "PermGroup":
        self._check(H)
        gens = H.generators
        return PermGroup(gens, self.degree, order_cap=self.order_cap)

    def _check(self, H: "Subgroup") -> None:
        if H.parent is not self:
            raise GroupError("subgroup belongs to a different group")


def _indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: PermGroup
    mask: int

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} gens={[str(g) for g in self.generators]}>"

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(_indices(self.mask))

    @property
    def key(self) -> tuple[int, ...]:
        return self.indices

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def elements(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.indices]

    @cached_property
    def gens(self) -> tuple[int, ...]:
        """A small generating set, as element indices (chosen greedily)."""
        G = self.parent
        found: list[int] = []
        mask = 1
        for i in reversed(self.indices):
            if not mask >> i & 1:
                found.append(i)
                mask = G.closure_mask(found, mask)
        return tuple(found)

    @property
    def generators(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.gens if i != 0]

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self.mask != other.mask and self <= other

    def __contains__(self, g: Permutation | int) -> bool:
        i = g if isinstance(g, int) else self.parent.index.get(g)
        return i is not None and bool(self.mask >> i & 1)

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.mask & other.mask)


@dataclass(frozen=True, eq=False)
class SubgroupClass:
    group: PermGroup
    number: int
    representative: Subgroup
    members: tuple[Subgroup, ...] = field(repr=False)

    @property
    def key(self) -> tuple[int, ...]:
        return self.representative.key

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return self.representative.order

    def __repr__(self) -> str:
        return f"<SubgroupClass #{self.number} order={self.order} size={self.size}>"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def generate(gens: Sequence[Permutation], degree: int, order_cap: int | None = None) -> PermGroup:
    return PermGroup(gens, degree, order_cap=order_cap)


def _cycle(degree: int, pts: Sequence[int]) -> Permutation:
    return Permutation.from_cycles(degree, [pts])


def _q8_regular() -> list[Permutation]:
    # quaternion units as (sign, unit) with unit in 1,i,j,k
    units = [(s, u) for u in "1ijk" for s in (1, -1)]
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def left(x):
        out = []
        for s, u in units:
            t, w = table[(x, u)]
            out.append(units.index((s * t, w)))
        return Permutation(tuple(out))

    return [left("i"), left("j")]


def named_group(spec: str, order_cap: int | None = None) -> PermGroup:
    """Build a group from ``S<n>``, ``A<n>``, ``C<n>``, ``D<2n>``, ``Q8``, ``V4``
    or ``perm:<degree>:<gen>;<gen>;...``."""
    spec = spec.strip()
    if spec.startswith("perm:"):
        parts = spec.split(":", 2)
        if len(parts) != 3 or not parts[1].isdigit():
            raise GroupError(f"malformed explicit group spec: {spec!r}")
        degree = int(parts[1])
        gens = [Permutation.parse(degree, g) for g in parts[2].split(";") if g.strip()]
        return PermGroup(gens, degree, order_cap=order_cap, name=spec)
    m = re.fullmatch(r"([SACD])(\d+)|(Q8)|(V4)", spec)
    if not m:
        raise GroupError(f"unknown group: {spec!r}")
    if m.group(3):
        return PermGroup(_q8_regular(), 8, order_cap=order_cap, name="Q8")
    if m.group(4):
        gens = [Permutation.parse(4, "(0 1)(2 3)"), Permutation.parse(4, "(0 2)(1 3)")]
        return PermGroup(gens, 4, order_cap=order_cap, name="V4")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise GroupError(f"unknown group: {spec!r}")
    if kind == "S":
        gens = [] if n < 2 else [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
        return PermGroup(gens, n, order_cap=order_cap, name=spec)
    if kind == "A":
        gens = [_cycle(n, [0, 1, i]) for i in range(2, n)]
        return PermGroup(gens, n, order_cap=order_cap, name=spec)
    if kind == "C":
        gens = [] if n < 2 else [_cycle(n, list(range(n)))]
        return PermGroup(gens, n, order_cap=order_cap, name=spec)
    # dihedral group of order n acting on n/2 points
    if n % 2:
        raise GroupError(f"dihedral order must be even: {spec!r}")
    k = n // 2
    if k == 1:
        return PermGroup([_cycle(2, [0, 1])], 2, order_cap=order_cap, name=spec)
    if k == 2:
        return named_group("V4", order_cap)
    rot = _cycle(k, list(range(k)))
    refl = Permutation(tuple((-i) % k for i in range(k)))
    return PermGroup([rot, refl], k, order_cap=order_cap, name=spec)


def corpus_group_names(max_order: int = 48) -> list[str]:
    """Named constructions of order at most ``max_order``."""
    names = []
    for n in range(1, 10):
        if factorial(n) <= max_order:
            names.append(f"S{n}")
        if n >= 1 and max(1, factorial(n) // 2) <= max_order:
            names.append(f"A{n}")
    names += [f"C{n}" for n in range(1, max_order + 1)]
    names += [f"D{n}" for n in range(2, max_order + 1, 2)]
    if max_order >= 8:
        names.append("Q8")
    return names

"""Exhaustive submodule lattices and structure theory built on them.

Enumeration seeds with all cyclic submodules Rx and closes the family under
pairwise joins; every submodule is a finite sum of cyclic ones, so the
result is complete.  The canonical order is (size, member tuple), and all
vertex numbering downstream derives from it.

Also here: socle, Goldie dimension, composition length, isomorphism counting
for simple modules via annihilator hom-counts, the double-simple-image
search, and the prime radical of a finite ring (= Jacobson radical,
computed as the intersection of the maximal left ideals).
"""

from __future__ import annotations

import numpy as np

from .caps import Caps
from .errors import CapExceeded, ConstructionError, StructureError
from .modules import (
    FiniteModule,
    Submodule,
    bits_of,
    close_subset,
    cyclic_members,
    quotient,
    regular_module,
    submodule_generated,
)
from .rings import FiniteRing


def meet(a: Submodule, b: Submodule) -> Submodule:
    if a.module is not b.module:
        raise ConstructionError("meet of submodules of different modules")
    common = a.bits & b.bits
    return Submodule(a.module, [i for i in a.members if (common >> i) & 1])


def join(a: Submodule, b: Submodule) -> Submodule:
    if a.module is not b.module:
        raise ConstructionError("join of submodules of different modules")
    return submodule_generated(a.module, set(a.members) | set(b.members))


class Lattice:
    """All submodules of a module, in canonical order, with meet/join."""

    def __init__(self, module: FiniteModule, subs: list[Submodule]):
        self.module = module
        self.subs = tuple(sorted(subs, key=lambda s: s.key))
        self._pos = {s.bits: i for i, s in enumerate(self.subs)}
        self.zero_index = self._pos[1]
        self.full_index = self._pos[bits_of(range(module.size))]
        self._lengths: list[int] | None = None

    def __len__(self) -> int:
        return len(self.subs)

    def position(self, sub: Submodule) -> int:
        return self._pos[sub.bits]

    def leq(self, i: int, j: int) -> bool:
        a, b = self.subs[i].bits, self.subs[j].bits
        return a & b == a

    def meet_index(self, i: int, j: int) -> int:
        return self._pos[self.subs[i].bits & self.subs[j].bits]

    def join_index(self, i: int, j: int) -> int:
        un = self.subs[i].bits | self.subs[j].bits
        got = self._pos.get(un)
        if got is not None:
            return got
        a, b = self.subs[i], self.subs[j]
        mem = np.unique(self.module.add[np.ix_(a.members, b.members)])
        return self._pos[bits_of(mem)]

    # -- structural predicates ------------------------------------------

    def nontrivial_indices(self) -> list[int]:
        return [i for i in range(len(self.subs)) if i != self.zero_index and i != self.full_index]

    def atom_indices(self) -> list[int]:
        out = []
        for i, s in enumerate(self.subs):
            if s.size == 1:
                continue
            if not any(
                t.size > 1 and t.size < s.size and t.bits & s.bits == t.bits for t in self.subs
            ):
                out.append(i)
        return out

    def maximal_indices(self) -> list[int]:
        full = self.subs[self.full_index].bits
        out = []
        for i, s in enumerate(self.subs):
            if s.bits == full:
                continue
            if not any(
                t.bits != full and t.bits != s.bits and s.bits & t.bits == s.bits for t in self.subs
            ):
                out.append(i)
        return out

    def is_simple(self, i: int) -> bool:
        return i in set(self.atom_indices())

    def is_maximal(self, i: int) -> bool:
        return i in set(self.maximal_indices())

    def is_essential(self, i: int) -> bool:
        s = self.subs[i]
        if s.size == 1:
            return len(self.subs) == 1
        return all(t.size == 1 or (t.bits & s.bits) != 1 for t in self.subs)

    def is_uniform(self, i: int) -> bool:
        s = self.subs[i]
        if s.size == 1:
            return False
        inside = [t for t in self.subs if t.size > 1 and t.bits & s.bits == t.bits]
        return all(a.bits & b.bits != 1 for a in inside for b in inside)

    def is_chain(self) -> bool:
        return all(
            self.leq(i, j) or self.leq(j, i)
            for i in range(len(self.subs))
            for j in range(i + 1, len(self.subs))
        )

    # -- socle, length, Goldie dimension ---------------------------------

    def socle_index(self) -> int:
        atoms = self.atom_indices()
        if not atoms:
            return self.zero_index
        acc = atoms[0]
        for a in atoms[1:]:
            acc = self.join_index(acc, a)
        return acc

    def chain_lengths(self) -> list[int]:
        """Longest-chain length from 0 up to each submodule."""
        if self._lengths is None:
            order = range(len(self.subs))  # canonical order is size-ascending
            lengths = [0] * len(self.subs)
            for i in order:
                best = 0
                for j in order:
                    if j != i and self.leq(j, i) and self.subs[j].size < self.subs[i].size:
                        best = max(best, lengths[j] + 1)
                lengths[i] = best
            self._lengths = lengths
        return self._lengths

    def composition_length(self) -> int:
        return self.chain_lengths()[self.full_index]

    def length_of(self, i: int) -> int:
        return self.chain_lengths()[i]

    def goldie_dimension(self) -> tuple[int, tuple[int, ...]]:
        """Greedy u-basis: uniform submodules kept while the sum stays direct."""
        kept: list[int] = []
        acc = self.zero_index
        for i in range(len(self.subs)):
            if self.subs[i].size == 1 or not self.is_uniform(i):
                continue
            if self.subs[i].bits & self.subs[acc].bits == 1:
                kept.append(i)
                acc = self.join_index(acc, i)
        if kept and not self.is_essential(acc):
            raise StructureError("greedy uniform family is not essential")
        return len(kept), tuple(kept)


def enumerate_submodules(module: FiniteModule, caps: Caps | None = None) -> Lattice:
    caps = caps or Caps()
    known: dict[int, np.ndarray] = {}
    for x in range(module.size):
        mem = cyclic_members(module, x)
        known.setdefault(bits_of(mem), mem)
    worklist = list(known.items())
    while worklist:
        fresh: list[tuple[int, np.ndarray]] = []
        snapshot = list(known.items())
        for bits_a, mem_a in worklist:
            for bits_b, mem_b in snapshot:
                un = bits_a | bits_b
                if un == bits_a or un == bits_b or un in known:
                    continue
                mem_j = np.unique(module.add[np.ix_(mem_a, mem_b)])
                bj = bits_of(mem_j)
                if bj not in known:
                    known[bj] = mem_j
                    fresh.append((bj, mem_j))
                    if len(known) > caps.max_submodules:
                        raise CapExceeded(
                            f"more than {caps.max_submodules} submodules; raise the cap to proceed"
                        )
        worklist = fresh
    return Lattice(module, [Submodule(module, mem) for mem in known.values()])


# -- simple-module isomorphism counting --------------------------------------


def is_simple_module(module: FiniteModule) -> bool:
    if module.size < 2:
        return False
    return all(cyclic_members(module, x).size == module.size for x in range(1, module.size))


def whole_submodule(module: FiniteModule) -> Submodule:
    return Submodule(module, range(module.size))


def _check_simple_sub(s: Submodule) -> None:
    if s.size < 2:
        raise StructureError("zero submodule is not simple")
    for x in s.members:
        if x and cyclic_members(s.module, x).size != s.size:
            raise StructureError("submodule is not simple")


def hom_count_simples(s: Submodule, t: Submodule) -> int:
    """#Hom(S, T) for simple S, T over a common ring.

    A hom is determined by the image of one fixed nonzero generator s, and
    the valid images are exactly {t : ann(s) t = 0}.
    """
    if s.module.ring is not t.module.ring:
        raise ConstructionError("hom count needs modules over the same ring")
    _check_simple_sub(s)
    _check_simple_sub(t)
    gen = next(x for x in s.members if x)
    ann = np.flatnonzero(s.module.act[:, gen] == 0)  # nonempty: 0 annihilates
    tmem = np.array(t.members)
    killed = (t.module.act[np.ix_(ann, tmem)] == 0).all(axis=0)
    return int(np.count_nonzero(killed))


def iso_count_simples(s: Submodule, t: Submodule) -> int:
    """|Iso(S, T)|: every nonzero hom between simples is an isomorphism."""
    return hom_count_simples(s, t) - 1


def end_size(s: Submodule) -> int:
    return hom_count_simples(s, s)


def simples_isomorphic(s: Submodule, t: Submodule) -> bool:
    return iso_count_simples(s, t) > 0


def count_iso_simple(s_mod: FiniteModule, t_mod: FiniteModule) -> int:
    """|Iso(S, T)| for standalone simple modules over the same ring."""
    for m in (s_mod, t_mod):
        if not is_simple_module(m):
            raise StructureError("count_iso_simple needs simple modules")
    return iso_count_simples(whole_submodule(s_mod), whole_submodule(t_mod))


# -- double simple image ------------------------------------------------------


def find_double_simple_image(
    module: FiniteModule, lattice: Lattice | None = None, caps: Caps | None = None
) -> dict | None:
    """First kernel K (canonical order) such that M/K contains a direct pair
    of isomorphic simple submodules; None when no quotient does."""
    caps = caps or Caps()
    lattice = lattice or enumerate_submodules(module, caps)
    for k_idx, kernel in enumerate(lattice.subs):
        if k_idx == lattice.full_index:
            continue
        quot, _ = quotient(module, kernel, caps=caps)
        lat_q = enumerate_submodules(quot, caps)
        atoms = [lat_q.subs[i] for i in lat_q.atom_indices()]
        for ai in range(len(atoms)):
            for bi in range(ai + 1, len(atoms)):
                if simples_isomorphic(atoms[ai], atoms[bi]):
                    return {
                        "kernel": kernel,
                        "quotient": quot,
                        "pair": (atoms[ai], atoms[bi]),
                    }
    return None


# -- prime radical -------------------------------------------------------------


def ideal_product(module: FiniteModule, a_members, b_members) -> np.ndarray:
    """Members of the (left ideal) additive closure of {a*b} inside a regular module."""
    ring = module.ring
    a = np.array(sorted(int(x) for x in a_members))
    b = np.array(sorted(int(x) for x in b_members))
    prods = np.unique(ring.mul[np.ix_(a, b)])
    return close_subset(module, prods)


def prime_radical(
    ring: FiniteRing, caps: Caps | None = None, lattice: Lattice | None = None
) -> Submodule:
    """Prime radical of a finite ring: the intersection of all maximal left
    ideals (finite rings are left Artinian, so this equals the Jacobson and
    prime radicals).  Postconditions checked: the result is a nilpotent
    two-sided ideal annihilating every minimal left ideal."""
    caps = caps or Caps()
    if lattice is None:
        lattice = enumerate_submodules(regular_module(ring, caps), caps)
    reg = lattice.module
    acc = lattice.subs[lattice.full_index].bits
    for i in lattice.maximal_indices():
        acc &= lattice.subs[i].bits
    rad = lattice.subs[lattice._pos[acc]]
    mem = np.array(rad.members)
    two_sided = set(int(v) for v in ring.mul[mem, :].ravel()) <= set(rad.members)
    if not two_sided:
        raise ConstructionError("radical is not a two-sided ideal")
    power = rad.members
    for _ in range(ring.size):
        if len(power) == 1:
            break
        power = tuple(int(x) for x in ideal_product(reg, power, rad.members))
    if len(power) != 1:
        raise ConstructionError("radical is not nilpotent")
    for i in lattice.atom_indices():
        amem = np.array(lattice.subs[i].members)
        if ring.mul[np.ix_(mem, amem)].any():
            raise ConstructionError("radical does not annihilate a minimal left ideal")
    return rad

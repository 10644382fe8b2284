"""Finite left modules over table-backed rings, and their submodules.

A module is a carrier 0..m-1 with an addition table and an action table
act[r, x]; index 0 is the module zero.  Submodules are stored as bitsets
over the carrier (Python ints) together with the sorted member tuple and a
greedily chosen generator list, so identity, meets and containment are
cheap bit operations.
"""

from __future__ import annotations

import numpy as np

from .caps import Caps
from .errors import CapExceeded, ConstructionError
from .rings import TABLE_DTYPE, FiniteRing


class FiniteModule:
    def __init__(
        self,
        ring: FiniteRing,
        add: np.ndarray,
        act: np.ndarray,
        labels: list[str] | None = None,
        meta: dict | None = None,
        caps: Caps | None = None,
    ):
        caps = caps or Caps()
        m = add.shape[0]
        if m > caps.max_module_size:
            raise CapExceeded(f"module size {m} exceeds cap {caps.max_module_size}")
        if add.shape != (m, m) or act.shape != (ring.size, m):
            raise ConstructionError("module table shapes inconsistent")
        self.ring = ring
        self.size = m
        self.add = np.ascontiguousarray(add, dtype=TABLE_DTYPE)
        self.act = np.ascontiguousarray(act, dtype=TABLE_DTYPE)
        self.labels = labels
        self.meta = meta or {}
        self._verify(caps)
        self.add.flags.writeable = False
        self.act.flags.writeable = False

    def _verify(self, caps: Caps) -> None:
        m, n = self.size, self.ring.size
        add, act, radd, rmul = self.add, self.act, self.ring.add, self.ring.mul
        for t in (add, act):
            if t.min() < 0 or t.max() >= m:
                raise ConstructionError("module table entry out of range")
        idx = np.arange(m, dtype=TABLE_DTYPE)
        if not np.array_equal(add[0], idx):
            raise ConstructionError("index 0 is not the module zero")
        if not np.array_equal(add, add.T):
            raise ConstructionError("module addition not commutative")
        if not (add == 0).any(axis=1).all():
            raise ConstructionError("some module element has no additive inverse")
        if not np.array_equal(act[1], idx):
            raise ConstructionError("unity does not act as identity")
        if max(m, n) <= caps.verify_exhaustive:
            ok = (
                np.array_equal(add[add], add[:, add])
                and np.array_equal(act[:, add], add[act[:, :, None], act[:, None, :]])
                and np.array_equal(act[radd], add[act[:, None, :], act[None, :, :]])
                and np.array_equal(act[rmul], act[:, act])
            )
        else:
            rng = np.random.default_rng(0)
            r, s = rng.integers(0, n, size=(2, caps.verify_samples))
            x, y, z = rng.integers(0, m, size=(3, caps.verify_samples))
            ok = (
                np.array_equal(add[add[x, y], z], add[x, add[y, z]])
                and np.array_equal(act[r, add[x, y]], add[act[r, x], act[r, y]])
                and np.array_equal(act[radd[r, s], x], add[act[r, x], act[s, x]])
                and np.array_equal(act[rmul[r, s], x], act[r, act[s, x]])
            )
        if not ok:
            raise ConstructionError("module axiom check failed")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def __repr__(self) -> str:
        kind = self.meta.get("kind", "module")
        return f"FiniteModule({kind}, m={self.size}, ring={self.ring.backend_tag})"


def bits_of(members) -> int:
    b = 0
    for x in members:
        b |= 1 << int(x)
    return b


def members_of(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


class Submodule:
    """A submodule of a fixed ambient module, identified by its bitset."""

    __slots__ = ("module", "bits", "members", "_gens")

    def __init__(self, module: FiniteModule, members):
        self.module = module
        self.members = tuple(int(x) for x in members)
        self.bits = bits_of(self.members)
        self._gens = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def key(self) -> tuple:
        return (len(self.members), self.members)

    @property
    def gens(self) -> tuple[int, ...]:
        """Greedy minimal generator list: smallest element not yet generated."""
        if self._gens is None:
            gens: list[int] = []
            have = 1  # bitset {0}
            for x in self.members:
                if not (have >> x) & 1:
                    gens.append(x)
                    have = bits_of(close_subset(self.module, gens))
            self._gens = tuple(gens)
        return self._gens

    def contains(self, other: "Submodule") -> bool:
        return other.bits & self.bits == other.bits

    def is_zero(self) -> bool:
        return self.bits == 1

    def describe(self) -> str:
        gens = ",".join(self.module.label(g) for g in self.gens)
        return f"<{gens}>" if gens else "<0>"

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.module is other.module and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"Submodule(size={self.size}, gens={list(self.gens)})"


def close_subset(module: FiniteModule, seed) -> np.ndarray:
    """Smallest add- and action-closed subset containing seed and 0."""
    m = module.size
    in_set = np.zeros(m, dtype=bool)
    in_set[0] = True
    seed = [int(x) for x in seed]
    if seed:
        in_set[seed] = True
    frontier = np.flatnonzero(in_set)
    while frontier.size:
        cur = np.flatnonzero(in_set)
        sums = module.add[np.ix_(frontier, cur)].ravel()
        acted = module.act[:, frontier].ravel()
        cand = np.concatenate([sums, acted])
        cand = np.unique(cand[~in_set[cand]])
        if cand.size == 0:
            break
        in_set[cand] = True
        frontier = cand
    return np.flatnonzero(in_set)


def submodule_generated(module: FiniteModule, gens) -> Submodule:
    return Submodule(module, close_subset(module, gens))


def cyclic_members(module: FiniteModule, x: int) -> np.ndarray:
    """Rx for a unital action; already add- and action-closed."""
    return np.unique(module.act[:, x])


# -- constructions ---------------------------------------------------------


def regular_module(ring: FiniteRing, caps: Caps | None = None) -> FiniteModule:
    return FiniteModule(
        ring, ring.add, ring.mul, labels=ring.labels, meta={"kind": "regular"}, caps=caps
    )


def direct_sum(m1: FiniteModule, m2: FiniteModule, caps: Caps | None = None) -> FiniteModule:
    caps = caps or Caps()
    if m1.ring is not m2.ring:
        raise ConstructionError("direct sum needs modules over the same ring")
    s1, s2 = m1.size, m2.size
    m = s1 * s2
    if m > caps.max_module_size:
        raise CapExceeded(f"direct sum size {m} exceeds cap {caps.max_module_size}")
    idx = np.arange(m)
    I1, I2 = idx // s2, idx % s2
    add = s2 * m1.add[np.ix_(I1, I1)].astype(np.int64) + m2.add[np.ix_(I2, I2)]
    act = s2 * m1.act[:, I1].astype(np.int64) + m2.act[:, I2]
    labels = [f"({m1.label(int(I1[i]))}|{m2.label(int(I2[i]))})" for i in range(m)]
    return FiniteModule(m1.ring, add, act, labels, {"kind": "direct_sum"}, caps=caps)


def quotient(
    module: FiniteModule, kernel, caps: Caps | None = None
) -> tuple[FiniteModule, np.ndarray]:
    """Quotient by a submodule; returns (module, projection index map).

    Coset representatives are the minimal member index per coset, so the
    quotient is deterministic.
    """
    members = kernel.members if isinstance(kernel, Submodule) else tuple(int(x) for x in kernel)
    mem = np.array(sorted(members), dtype=np.int64)
    closed = close_subset(module, mem)
    if not np.array_equal(closed, mem):
        raise ConstructionError("kernel is not a submodule")
    rep = module.add[:, mem].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.full(module.size, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    proj = pos[rep]
    add = proj[module.add[np.ix_(reps, reps)]]
    act = proj[module.act[:, reps]]
    labels = [module.label(int(r)) + "~" for r in reps]
    q = FiniteModule(module.ring, add, act, labels, {"kind": "quotient"}, caps=caps)
    return q, proj


def custom_module(
    ring: FiniteRing,
    add,
    act,
    labels: list[str] | None = None,
    caps: Caps | None = None,
) -> FiniteModule:
    return FiniteModule(ring, np.asarray(add), np.asarray(act), labels, {"kind": "custom"}, caps=caps)


def submodule_as_module(sub: Submodule, caps: Caps | None = None) -> FiniteModule:
    """The submodule re-indexed as a standalone module over the same ring."""
    parent = sub.module
    mem = np.array(sub.members, dtype=np.int64)
    pos = np.full(parent.size, -1, dtype=np.int64)
    pos[mem] = np.arange(len(mem))
    add = pos[parent.add[np.ix_(mem, mem)]]
    act = pos[parent.act[:, mem]]
    if add.min() < 0 or act.min() < 0:
        raise ConstructionError("member set is not closed")
    labels = [parent.label(int(x)) for x in mem]
    return FiniteModule(parent.ring, add, act, labels, {"kind": "submodule"}, caps=caps)

"""Finite unital rings as element-indexed operation tables.

Every ring, however it was built, is reduced to the same semantic model:
index 0 is the additive zero, index 1 the unity, and two n x n tables give
addition and multiplication.  Structured builders (matrix, triangular,
product, polynomial quotient) produce tables identical to naive arithmetic
on the structured elements and then renumber so zero/one land on 0/1.

Ring axioms are verified exhaustively at construction up to a configurable
carrier size (default 256) and on a deterministic random sample above it.
"""

from __future__ import annotations

import numpy as np

from .caps import Caps
from .errors import CapExceeded, ConstructionError
from .fields import FiniteField, SubfieldEmbedding, is_prime, subfield

TABLE_DTYPE = np.int16


class FiniteRing:
    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        backend_tag: str,
        labels: list[str] | None = None,
        meta: dict | None = None,
        caps: Caps | None = None,
    ):
        caps = caps or Caps()
        n = add.shape[0]
        if n > caps.max_ring_size:
            raise CapExceeded(f"ring size {n} exceeds cap {caps.max_ring_size}")
        if add.shape != (n, n) or mul.shape != (n, n):
            raise ConstructionError("tables must be square and same size")
        self.size = n
        self.add = np.ascontiguousarray(add, dtype=TABLE_DTYPE)
        self.mul = np.ascontiguousarray(mul, dtype=TABLE_DTYPE)
        self.zero = 0
        self.one = 1
        self.backend_tag = backend_tag
        self.labels = labels
        self.meta = meta or {}
        self._verify(caps)
        self.add.flags.writeable = False
        self.mul.flags.writeable = False

    # -- axioms ----------------------------------------------------------

    def _verify(self, caps: Caps) -> None:
        n, add, mul = self.size, self.add, self.mul
        if n < 2:
            raise ConstructionError("a unital ring needs distinct 0 and 1")
        for t in (add, mul):
            if t.min() < 0 or t.max() >= n:
                raise ConstructionError("table entry out of range")
        idx = np.arange(n, dtype=TABLE_DTYPE)
        if not (np.array_equal(add[0], idx) and np.array_equal(add[:, 0], idx)):
            raise ConstructionError("index 0 is not the additive identity")
        if not (np.array_equal(mul[1], idx) and np.array_equal(mul[:, 1], idx)):
            raise ConstructionError("index 1 is not the unity")
        if not np.array_equal(add, add.T):
            raise ConstructionError("addition not commutative")
        if not (add == 0).any(axis=1).all():
            raise ConstructionError("some element has no additive inverse")
        if n <= caps.verify_exhaustive:
            ok = (
                np.array_equal(add[add], add[:, add])
                and np.array_equal(mul[mul], mul[:, mul])
                and np.array_equal(mul[:, add], add[mul[:, :, None], mul[:, None, :]])
                and np.array_equal(mul[add], add[mul[:, None, :], mul[None, :, :]])
            )
        else:
            rng = np.random.default_rng(0)
            i, j, k = rng.integers(0, n, size=(3, caps.verify_samples))
            ok = (
                np.array_equal(add[add[i, j], k], add[i, add[j, k]])
                and np.array_equal(mul[mul[i, j], k], mul[i, mul[j, k]])
                and np.array_equal(mul[i, add[j, k]], add[mul[i, j], mul[i, k]])
                and np.array_equal(mul[add[i, j], k], add[mul[i, k], mul[j, k]])
            )
        if not ok:
            raise ConstructionError("associativity/distributivity check failed")

    # -- conveniences ------------------------------------------------------

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def element(self, i: int) -> "RingElement":
        return RingElement(self, i)

    def neg(self, i: int) -> int:
        return int(np.flatnonzero(self.add[i] == 0)[0])

    def is_division_ring(self) -> bool:
        for a in range(1, self.size):
            xs = np.flatnonzero(self.mul[a] == 1)
            if not any(self.mul[x, a] == 1 for x in xs):
                return False
        return True

    def __repr__(self) -> str:
        return f"FiniteRing({self.backend_tag}, n={self.size})"


class RingElement:
    """Thin operator wrapper over a ring index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: FiniteRing, index: int):
        if not 0 <= index < ring.size:
            raise ValueError("element index out of range")
        self.ring = ring
        self.index = index

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other.index
        return int(other)

    def __add__(self, other):
        return RingElement(self.ring, int(self.ring.add[self.index, self._coerce(other)]))

    def __mul__(self, other):
        return RingElement(self.ring, int(self.ring.mul[self.index, self._coerce(other)]))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __eq__(self, other):
        return isinstance(other, RingElement) and other.ring is self.ring and other.index == self.index

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __repr__(self):
        return f"<{self.ring.label(self.index)}>"


def _relabel_unity(add: np.ndarray, mul: np.ndarray, one_raw: int, labels: list[str]):
    """Swap indices so the unity sits at 1 (zero is at 0 by construction)."""
    n = add.shape[0]
    if one_raw == 1:
        return add, mul, labels
    perm = np.arange(n, dtype=TABLE_DTYPE)
    perm[one_raw], perm[1] = 1, one_raw
    inv = perm  # a transposition is its own inverse
    add2 = perm[add[inv][:, inv]]
    mul2 = perm[mul[inv][:, inv]]
    labels2 = [labels[inv[i]] for i in range(n)]
    return add2, mul2, labels2


# -- builders -------------------------------------------------------------


def ring_zmod(n: int, caps: Caps | None = None) -> FiniteRing:
    if n < 2:
        raise ConstructionError("modulus must be >= 2")
    i = np.arange(n)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return FiniteRing(add, mul, "zmod", [str(v) for v in range(n)], {"n": n}, caps=caps)


def ring_from_field(field: FiniteField, caps: Caps | None = None) -> FiniteRing:
    labels = [field.label(i) for i in range(field.size)]
    meta = {"p": field.p, "k": field.k, "modulus": list(field.modulus)}
    return FiniteRing(field.add_table(), field.mul_table(), "gf", labels, meta, caps=caps)


def ring_matrix(field: FiniteField, m: int, caps: Caps | None = None) -> FiniteRing:
    caps = caps or Caps()
    q = field.size
    n = q ** (m * m)
    if n > caps.max_ring_size:
        raise CapExceeded(f"matrix ring size {n} exceeds cap {caps.max_ring_size}")
    fa, fm = field.add_table(), field.mul_table()
    # entries of element i, row-major: E[i, r, c]
    idx = np.arange(n)
    E = np.zeros((n, m, m), dtype=np.int64)
    for t in range(m * m):
        E[:, t // m, t % m] = idx % q
        idx = idx // q
    weights = q ** np.arange(m * m)

    def encode(entries: np.ndarray) -> np.ndarray:
        flat = entries.reshape(entries.shape[:-2] + (m * m,))
        return flat @ weights

    addE = fa[E[:, None], E[None, :]]
    mulE = np.zeros((n, n, m, m), dtype=np.int64)
    for r in range(m):
        for c in range(m):
            acc = np.zeros((n, n), dtype=np.int64)
            for s in range(m):
                term = fm[E[:, r, s][:, None], E[:, s, c][None, :]]
                acc = fa[acc, term]
            mulE[:, :, r, c] = acc
    one_raw = int(encode(np.eye(m, dtype=np.int64)))
    labels = [
        "[" + ",".join("[" + ",".join(field.label(int(E[i, r, c])) for c in range(m)) + "]" for r in range(m)) + "]"
        for i in range(n)
    ]
    add, mul, labels = _relabel_unity(encode(addE), encode(mulE), one_raw, labels)
    meta = {"p": field.p, "k": field.k, "m": m, "q": q}
    return FiniteRing(add, mul, "matrix", labels, meta, caps=caps)


def ring_triangular(delta: FiniteField, j: int, caps: Caps | None = None) -> FiniteRing:
    """Matrices [[a, b], [0, c]] with a, b in delta and c in its degree-j subfield."""
    caps = caps or Caps()
    emb = subfield(delta, j)
    q, w = delta.size, emb.subfield.size
    n = q * q * w
    if n > caps.max_ring_size:
        raise CapExceeded(f"triangular ring size {n} exceeds cap {caps.max_ring_size}")
    fa, fm = delta.add_table(), delta.mul_table()
    sa, sm = emb.subfield.add_table(), emb.subfield.mul_table()
    embarr = np.array(emb.image, dtype=np.int64)
    idx = np.arange(n)
    A = idx % q
    B = (idx // q) % q
    C = idx // (q * q)
    add = (
        fa[A[:, None], A[None, :]].astype(np.int64)
        + q * fa[B[:, None], B[None, :]].astype(np.int64)
        + q * q * sa[C[:, None], C[None, :]].astype(np.int64)
    )
    mul = (
        fm[A[:, None], A[None, :]].astype(np.int64)
        + q * fa[fm[A[:, None], B[None, :]], fm[B[:, None], embarr[C][None, :]]].astype(np.int64)
        + q * q * sm[C[:, None], C[None, :]].astype(np.int64)
    )
    one_raw = 1 + q * q * 1  # a=1, b=0, c=1
    labels = [
        f"[[{delta.label(int(A[i]))},{delta.label(int(B[i]))}],[0,{delta.label(int(embarr[C[i]]))}]]"
        for i in range(n)
    ]
    add, mul, labels = _relabel_unity(add, mul, one_raw, labels)
    meta = {"p": delta.p, "k": delta.k, "q": q, "subfield_degree": j, "subfield_size": w}
    return FiniteRing(add, mul, "triangular", labels, meta, caps=caps)


def ring_product(r1: FiniteRing, r2: FiniteRing, caps: Caps | None = None) -> FiniteRing:
    caps = caps or Caps()
    n1, n2 = r1.size, r2.size
    n = n1 * n2
    if n > caps.max_ring_size:
        raise CapExceeded(f"product ring size {n} exceeds cap {caps.max_ring_size}")
    idx = np.arange(n)
    I1, I2 = idx // n2, idx % n2
    add = r2.size * r1.add[I1[:, None], I1[None, :]].astype(np.int64) + r2.add[I2[:, None], I2[None, :]]
    mul = r2.size * r1.mul[I1[:, None], I1[None, :]].astype(np.int64) + r2.mul[I2[:, None], I2[None, :]]
    one_raw = 1 * n2 + 1
    labels = [f"({r1.label(int(I1[i]))},{r2.label(int(I2[i]))})" for i in range(n)]
    add, mul, labels = _relabel_unity(add, mul, one_raw, labels)
    meta = {"left": r1.backend_tag, "right": r2.backend_tag}
    return FiniteRing(add, mul, "product", labels, meta, caps=caps)


# -- polynomial quotients over monomial ideals -----------------------------


def parse_monomial(text: str, variables: list[str]) -> tuple[int, ...]:
    """Parse "x^2", "x*y", "y" into an exponent vector over the given variables."""
    expo = [0] * len(variables)
    for factor in text.replace(" ", "").split("*"):
        if not factor:
            raise ConstructionError(f"empty factor in monomial {text!r}")
        name, _, power = factor.partition("^")
        if name not in variables:
            raise ConstructionError(f"unknown variable {name!r} in monomial {text!r}")
        e = int(power) if power else 1
        if e < 1:
            raise ConstructionError(f"exponent must be positive in {text!r}")
        expo[variables.index(name)] += e
    if sum(expo) == 0:
        raise ConstructionError(f"monomial {text!r} is constant")
    return tuple(expo)


def _divisible(mono: tuple[int, ...], gen: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(mono, gen))


def ring_poly_quot(
    p: int,
    relations: list[str],
    variables: list[str] | None = None,
    caps: Caps | None = None,
) -> FiniteRing:
    """F_p[vars] / (monomial relations), e.g. F_2[x]/(x^3) or F_2[x,y]/(x^2,x*y,y^2).

    The quotient must be finite dimensional; an unbounded monomial basis is
    reported as a closure failure.
    """
    caps = caps or Caps()
    if not is_prime(p):
        raise ConstructionError(f"coefficient characteristic {p} is not prime")
    if variables is None:
        variables = sorted({f for rel in relations for f in rel.replace(" ", "").split("*") for f in [f.partition("^")[0]]})
    gens = [parse_monomial(r, variables) for r in relations]
    nv = len(variables)
    # finite quotient iff every variable is nilpotent, i.e. some relation is a
    # pure power of it; otherwise the monomial basis never closes
    for v, name in enumerate(variables):
        if not any(g[v] > 0 and all(e == 0 for t, e in enumerate(g) if t != v) for g in gens):
            raise ConstructionError(f"closure failure: no pure power of {name!r} among relations")
    # basis monomials: complement of the monomial ideal, found by BFS from 1
    basis: list[tuple[int, ...]] = []
    seen = set()
    frontier = [(0,) * nv]
    while frontier:
        mono = frontier.pop(0)
        if mono in seen or any(_divisible(mono, g) for g in gens):
            continue
        seen.add(mono)
        basis.append(mono)
        for v in range(nv):
            nxt = tuple(e + (1 if t == v else 0) for t, e in enumerate(mono))
            if nxt not in seen:
                frontier.append(nxt)
    basis.sort(key=lambda mo: (sum(mo), mo))
    bpos = {mo: t for t, mo in enumerate(basis)}
    nb = len(basis)
    n = p**nb
    if n > caps.max_ring_size:
        raise CapExceeded(f"quotient ring size {n} exceeds cap {caps.max_ring_size}")
    # product of basis monomials: basis position or -1 when it falls in the ideal
    prod = np.full((nb, nb), -1, dtype=np.int64)
    for s in range(nb):
        for t in range(nb):
            mono = tuple(a + b for a, b in zip(basis[s], basis[t]))
            if not any(_divisible(mono, g) for g in gens):
                prod[s, t] = bpos[mono]
    idx = np.arange(n)
    D = np.zeros((n, nb), dtype=np.int64)
    rest = idx.copy()
    for t in range(nb):
        D[:, t] = rest % p
        rest //= p
    weights = p ** np.arange(nb)
    add = ((D[:, None, :] + D[None, :, :]) % p) @ weights
    mulD = np.zeros((n, n, nb), dtype=np.int64)
    for s in range(nb):
        for t in range(nb):
            u = prod[s, t]
            if u >= 0:
                mulD[:, :, u] += D[:, s][:, None] * D[:, t][None, :]
    mul = (mulD % p) @ weights

    def mono_label(mo: tuple[int, ...]) -> str:
        if sum(mo) == 0:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(variables, mo) if e)

    labels = []
    for i in range(n):
        parts = [
            (mono_label(basis[t]) if (c == 1 and sum(basis[t]) > 0) else
             (str(c) if sum(basis[t]) == 0 else f"{c}{mono_label(basis[t])}"))
            for t, c in enumerate(D[i])
            if c
        ]
        labels.append("+".join(parts) if parts else "0")
    meta = {"p": p, "variables": list(variables), "relations": list(relations), "basis_dim": nb}
    return FiniteRing(add, mul, "poly_quot", labels, meta, caps=caps)


def ring_from_tables(
    add: list[list[int]] | np.ndarray,
    mul: list[list[int]] | np.ndarray,
    labels: list[str] | None = None,
    caps: Caps | None = None,
) -> FiniteRing:
    return FiniteRing(np.asarray(add), np.asarray(mul), "table", labels, caps=caps)


def quotient_ring(ring: FiniteRing, ideal_members: list[int], caps: Caps | None = None) -> FiniteRing:
    """Quotient by a two-sided ideal given as its full member list."""
    members = sorted(set(int(x) for x in ideal_members))
    mem = np.array(members)
    if 0 not in members:
        raise ConstructionError("ideal must contain 0")
    closed_add = set(int(v) for v in ring.add[np.ix_(mem, mem)].ravel()) <= set(members)
    closed_mul = set(int(v) for v in ring.mul[:, mem].ravel()) <= set(members) and set(
        int(v) for v in ring.mul[mem, :].ravel()
    ) <= set(members)
    if not (closed_add and closed_mul):
        raise ConstructionError("member set is not a two-sided ideal")
    rep = np.arange(ring.size, dtype=np.int64)
    for x in range(ring.size):
        rep[x] = int(ring.add[x, mem].min())
    reps = np.unique(rep)
    pos = np.full(ring.size, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    add = pos[rep[ring.add[np.ix_(reps, reps)]]]
    mul = pos[rep[ring.mul[np.ix_(reps, reps)]]]
    labels = [ring.label(int(r)) + "~" for r in reps]
    meta = {"of": ring.backend_tag, "ideal_size": len(members)}
    return FiniteRing(add, mul, "table", labels, meta, caps=caps)

"""Finite posets, bound sets, and total lattices.

Elements are dense indices 0..n-1 everywhere; labels exist for I/O only.
Order data is a read-only boolean matrix ``leq`` with ``leq[i, j]`` meaning
``i <= j``.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BadParameter,
    CycleDetected,
    DuplicateLabel,
    NotALattice,
    UnknownLabel,
)

BOTTOM_LABEL = "⊥*"
TOP_LABEL = "⊤*"
RESERVED_LABELS = frozenset((BOTTOM_LABEL, TOP_LABEL))


def _frozen(arr):
    arr.flags.writeable = False
    return arr


def _check_labels(labels):
    if not labels:
        raise BadParameter("carrier must be nonempty")
    seen = set()
    for lbl in labels:
        if lbl in seen:
            raise DuplicateLabel(lbl)
        if lbl in RESERVED_LABELS:
            raise BadParameter(f"label {lbl!r} is reserved for adjoined bounds")
        seen.add(lbl)


class Poset:
    """A finite partially ordered set."""

    def __init__(self, labels, leq):
        labels = tuple(labels)
        leq = np.array(leq, dtype=bool)
        if leq.shape != (len(labels), len(labels)):
            raise BadParameter("order matrix shape does not match label count")
        self.labels = labels
        self.leq = _frozen(leq)

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def indices(self, labels):
        return tuple(self.index(x) for x in labels)

    @cached_property
    def covers(self):
        """covers[i, j] iff j covers i: i < j with nothing strictly between."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        return _frozen(strict & ~(strict @ strict))

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and bool((self.leq == other.leq).all())
        )

    def __repr__(self):
        rels = " ".join(
            f"{self.labels[i]}<{self.labels[j]}"
            for i in range(self.n)
            for j in range(self.n)
            if self.covers[i, j]
        )
        return f"Poset({' '.join(self.labels)}; {rels})"


def _arc_path(arcs, src, dst):
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while prev[u] is not None:
                u = prev[u]
                path.append(u)
            return path[::-1]
        for a, b in arcs:
            if a == u and b not in prev:
                prev[b] = u
                queue.append(b)
    return [src, dst]


def make_poset(labels, relation):
    """Reflexive-transitive closure of ``relation`` over ``labels``.

    Accepts cover relations and full orders alike; rejects inputs whose
    closure breaks antisymmetry, reporting a witness cycle.
    """
    labels = tuple(labels)
    _check_labels(labels)
    n = len(labels)
    idx = {lbl: i for i, lbl in enumerate(labels)}
    reach = np.eye(n, dtype=bool)
    arcs = []
    for x, y in relation:
        if x not in idx:
            raise UnknownLabel(x)
        if y not in idx:
            raise UnknownLabel(y)
        reach[idx[x], idx[y]] = True
        arcs.append((idx[x], idx[y]))
    for k in range(n):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    sym = reach & reach.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = (int(v) for v in np.argwhere(sym)[0])
        forth = _arc_path(arcs, i, j)
        back = _arc_path(arcs, j, i)
        cycle = forth + back[1:-1] if len(back) > 2 else forth
        raise CycleDetected(labels[k] for k in cycle)
    return Poset(labels, reach)


def upper_bounds(p, a, b):
    """U(a, b): every x with a <= x and b <= x."""
    return frozenset(np.flatnonzero(p.leq[a] & p.leq[b]).tolist())


def lower_bounds(p, a, b):
    """L(a, b): every x with x <= a and x <= b."""
    return frozenset(np.flatnonzero(p.leq[:, a] & p.leq[:, b]).tolist())


def least_of(p, members):
    """The member of ``members`` below all others, or None."""
    for x in members:
        if all(p.leq[x, y] for y in members):
            return int(x)
    return None


def greatest_of(p, members):
    for x in members:
        if all(p.leq[y, x] for y in members):
            return int(x)
    return None


@dataclass(frozen=True)
class PlosReport:
    """Outcome of the bound-property check, with a witness on failure."""

    ok: bool
    side: str | None = None
    witness: tuple | None = None
    bound_set: frozenset | None = None

    def __bool__(self):
        return self.ok


def is_plos(p):
    """Check the lower and upper bound properties.

    Every nonempty U(x, y) needs a least element and every nonempty L(x, y)
    a greatest one; the first offending pair is reported together with its
    bound set.
    """
    for a in range(p.n):
        for b in range(a, p.n):
            ups = upper_bounds(p, a, b)
            if ups and least_of(p, ups) is None:
                return PlosReport(False, "upper", (a, b), ups)
            lows = lower_bounds(p, a, b)
            if lows and greatest_of(p, lows) is None:
                return PlosReport(False, "lower", (a, b), lows)
    return PlosReport(True)


class Lattice:
    """A finite lattice: a poset with total join and meet tables."""

    def __init__(self, poset, join, meet):
        self.poset = poset
        self.join = _frozen(np.array(join, dtype=np.int64))
        self.meet = _frozen(np.array(meet, dtype=np.int64))

    @property
    def labels(self):
        return self.poset.labels

    @property
    def n(self):
        return self.poset.n

    @property
    def leq(self):
        return self.poset.leq

    def index(self, label):
        return self.poset.index(label)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.poset == other.poset
            and bool((self.join == other.join).all())
            and bool((self.meet == other.meet).all())
        )

    def __repr__(self):
        return f"Lattice({self.poset!r})"


def validate_lattice(p):
    """Totalize sup and inf over ``p``, failing at the first pair without both."""
    n = p.n
    join = np.full((n, n), -1, dtype=np.int64)
    meet = np.full((n, n), -1, dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            sup = least_of(p, upper_bounds(p, a, b))
            inf = greatest_of(p, lower_bounds(p, a, b))
            if sup is None or inf is None:
                raise NotALattice((a, b))
            join[a, b] = join[b, a] = sup
            meet[a, b] = meet[b, a] = inf
    return Lattice(p, join, meet)


def named_lattice(kind, size=None):
    """A standard lattice: ``chain k``, ``M n``, ``N5``, or ``boolean k``."""
    if kind == "N5":
        if size is not None:
            raise BadParameter("N5 takes no size parameter")
        rel = (("0", "x"), ("x", "z"), ("z", "1"), ("0", "y"), ("y", "1"))
        return validate_lattice(make_poset(("0", "x", "z", "y", "1"), rel))
    if size is None or size < 1:
        raise BadParameter(f"{kind!r} needs a size parameter >= 1")
    if kind == "chain":
        labels = tuple(f"c{i + 1}" for i in range(size))
        rel = tuple(zip(labels, labels[1:]))
        return validate_lattice(make_poset(labels, rel))
    if kind == "M":
        if size < 2:
            raise BadParameter("M needs n >= 2 atoms")
        atoms = tuple(f"a{i + 1}" for i in range(size))
        rel = tuple(("0", a) for a in atoms) + tuple((a, "1") for a in atoms)
        return validate_lattice(make_poset(("0",) + atoms + ("1",), rel))
    if kind == "boolean":
        m = 1 << size
        labels = tuple(format(s, f"0{size}b") for s in range(m))
        bits = np.arange(m)
        leq = (bits[:, None] & bits[None, :]) == bits[:, None]
        return validate_lattice(Poset(labels, leq))
    raise BadParameter(f"unknown lattice kind {kind!r}")


def is_distributive(lat):
    """Brute-force check of x ^ (y v z) = (x ^ y) v (x ^ z) over all triples."""
    jn, mt = lat.join, lat.meet
    for x in range(lat.n):
        for y in range(lat.n):
            for z in range(lat.n):
                if mt[x, jn[y, z]] != jn[mt[x, y], mt[x, z]]:
                    return False
    return True


def is_modular(lat):
    """Brute-force check of x <= z implies x v (y ^ z) = (x v y) ^ z."""
    jn, mt, leq = lat.join, lat.meet, lat.leq
    for x in range(lat.n):
        for z in range(lat.n):
            if not leq[x, z]:
                continue
            for y in range(lat.n):
                if jn[x, mt[y, z]] != mt[jn[x, y], z]:
                    return False
    return True

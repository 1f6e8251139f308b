"""Partitions, congruence generation and recognition, and quotient structures.

A congruence on a partial lattice is an equivalence relation E whose
generated congruence on the two-point extension restricts back to E. All
quotient operations are computed through that extension.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, NotACongruence
from .extension import two_point_extension
from .order import Poset, validate_lattice
from .plattice import UNDEF, validate_partial_lattice


class Partition:
    """Equivalence relation as a canonical block structure.

    Blocks are numbered by least member, so partitions of the same carrier
    compare equal exactly when their ``block_of`` tuples do, and sorting by
    ``block_of`` is a total order.
    """

    __slots__ = ("n", "block_of", "blocks")

    def __init__(self, block_of):
        first = {}
        canon = tuple(first.setdefault(b, len(first)) for b in block_of)
        self.block_of = canon
        self.n = len(canon)
        blocks = [[] for _ in range(len(first))]
        for i, b in enumerate(canon):
            blocks[b].append(i)
        self.blocks = tuple(tuple(block) for block in blocks)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def full(cls, n):
        if n < 1:
            raise BadParameter("carrier must be nonempty")
        return cls([0] * n)

    @classmethod
    def from_blocks(cls, n, blocks):
        """Partition from explicit blocks; unlisted elements become singletons."""
        block_of = [None] * n
        for b, members in enumerate(blocks):
            for i in members:
                if not 0 <= i < n:
                    raise BadParameter(f"element {i} outside carrier of size {n}")
                if block_of[i] is not None:
                    raise BadParameter(f"element {i} appears in two blocks")
                block_of[i] = b
        for i in range(n):
            if block_of[i] is None:
                block_of[i] = ("singleton", i)
        return cls(block_of)

    @classmethod
    def union_closure(cls, first, second):
        """Equivalence closure of the union of two partitions."""
        if first.n != second.n:
            raise BadParameter("partition carrier mismatch")
        parent = list(range(first.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (first, second):
            for block in p.blocks:
                for a, b in zip(block, block[1:]):
                    parent[find(a)] = find(b)
        return cls([find(i) for i in range(first.n)])

    def relates(self, i, j):
        return self.block_of[i] == self.block_of[j]

    def block_containing(self, i):
        return self.blocks[self.block_of[i]]

    def meet(self, other):
        """Common refinement."""
        if self.n != other.n:
            raise BadParameter("partition carrier mismatch")
        return Partition(list(zip(self.block_of, other.block_of)))

    def restrict(self, indices):
        """Partition induced on the listed elements, reindexed to 0..k-1."""
        return Partition([self.block_of[i] for i in indices])

    def refines(self, other):
        seen = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if seen.setdefault(mine, theirs) != theirs:
                return False
        return True

    def render(self, labels):
        return "|".join(" ".join(labels[i] for i in block) for block in self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.block_of == other.block_of

    def __hash__(self):
        return hash(self.block_of)

    def __lt__(self, other):
        return self.block_of < other.block_of

    def __repr__(self):
        body = "|".join(" ".join(str(i) for i in block) for block in self.blocks)
        return f"Partition({body})"


def generate_congruence(lat, seed):
    """Least congruence of a total lattice containing the seed partition.

    Fixpoint closure over a worklist: each newly identified pair (a, b)
    forces (a v c, b v c) and (a ^ c, b ^ c) for every c. At most n - 1
    merges can happen, so termination is immediate.
    """
    if seed.n != lat.n:
        raise BadParameter("seed partitions a different carrier")
    n = lat.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = deque()
    for block in seed.blocks:
        pending.extend(zip(block, block[1:]))
    join, meet = lat.join, lat.meet
    while pending:
        a, b = pending.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[ra] = rb
        for c in range(n):
            pending.append((int(join[a, c]), int(join[b, c])))
            pending.append((int(meet[a, c]), int(meet[b, c])))
    return Partition([find(i) for i in range(n)])


@dataclass(frozen=True)
class CongruenceWitness:
    """Generated congruence on the extension plus its restriction."""

    theta: Partition
    restriction: Partition
    is_congruence: bool
    extension: object

    def __bool__(self):
        return self.is_congruence


def is_congruence_on_partial(lat, e):
    """Decide whether ``e`` is a congruence of the partial lattice.

    Lifts ``e`` along the two-point extension with the adjoined bounds as
    singletons, generates the congruence there, and compares the restriction
    with ``e`` itself.
    """
    if e.n != lat.n:
        raise BadParameter("partition carrier mismatch")
    ext = two_point_extension(lat)
    lifted = Partition.from_blocks(
        ext.star.n, [tuple(ext.embed[i] for i in block) for block in e.blocks]
    )
    theta = generate_congruence(ext.star, lifted)
    restriction = theta.restrict(ext.embed)
    return CongruenceWitness(theta, restriction, restriction == e, ext)


def all_congruences(lat):
    """Every congruence of a total lattice, sorted.

    Principal congruences are generated for each pair, then the set is closed
    under pairwise join (generation over the blockwise union) until stable.
    This avoids filtering the Bell-number space of all partitions.
    """
    n = lat.n
    found = {Partition.identity(n)}
    work = deque()
    for a in range(n):
        for b in range(a + 1, n):
            principal = generate_congruence(lat, Partition.from_blocks(n, [(a, b)]))
            if principal not in found:
                found.add(principal)
                work.append(principal)
    while work:
        theta = work.popleft()
        for other in list(found):
            joined = generate_congruence(lat, Partition.union_closure(theta, other))
            if joined not in found:
                found.add(joined)
                work.append(joined)
    return tuple(sorted(found))


def all_partial_congruences(lat):
    """Restrictions to the carrier of all congruences of the extension."""
    ext = two_point_extension(lat)
    return tuple(sorted({theta.restrict(ext.embed) for theta in all_congruences(ext.star)}))


def con_is_closed_under_meets(lat):
    """Common refinements of congruences must again be congruences."""
    cons = set(all_partial_congruences(lat))
    return all(p.meet(q) in cons for p in cons for q in cons)


DEFINED = "defined"
UNDEFINED_TOP_SINGLETON = "undefined_top_singleton"
ALPHA = "alpha"


@dataclass(frozen=True)
class JoinCase:
    """Which branch a class join lands in, with the chosen representative
    when the adjoined top is identified with a carrier element."""

    kind: str
    block: int | None = None
    alpha: int | None = None


def _require_congruence(lat, e, witness):
    w = witness if witness is not None else is_congruence_on_partial(lat, e)
    if not w.is_congruence:
        raise NotACongruence(w)
    return w


def _carrier_hits(ext, star_class):
    """Source indices of the star-class members that lie in the carrier."""
    hits = [ext.source_index(s) for s in star_class]
    return sorted(h for h in hits if h is not None)


def _class_cell(lat, e, w, star_table, a, b):
    """Theta-class of a star operation value intersected with the carrier,
    reported as a block id of ``e``, or None when the intersection is empty."""
    ext = w.extension
    value = int(star_table[ext.embed[a], ext.embed[b]])
    hits = _carrier_hits(ext, w.theta.block_containing(value))
    if not hits:
        return None
    block = e.block_of[hits[0]]
    assert all(e.block_of[h] == block for h in hits), "class must hit one block"
    return block


def quotient(lat, e, witness=None):
    """Quotient partial lattice: blocks of ``e`` with class operations.

    A class join is the generated-congruence class of a star join
    intersected with the carrier when that intersection is nonempty,
    undefined otherwise; meets dually. Every representative pair is
    evaluated, so well-definedness is asserted rather than assumed, and the
    result passes the axiom validator.
    """
    w = _require_congruence(lat, e, witness)
    star = w.extension.star
    m = len(e.blocks)
    labels = tuple(f"[{lat.labels[block[0]]}]" for block in e.blocks)
    jt = np.full((m, m), UNDEF, dtype=np.int64)
    mt = np.full((m, m), UNDEF, dtype=np.int64)
    for table, out in ((star.join, jt), (star.meet, mt)):
        for p in range(m):
            for q in range(p, m):
                results = {
                    _class_cell(lat, e, w, table, a, b)
                    for a in e.blocks[p]
                    for b in e.blocks[q]
                }
                assert len(results) == 1, "class operation depends on representatives"
                value = results.pop()
                out[p, q] = out[q, p] = UNDEF if value is None else value
    return validate_partial_lattice(labels, jt, mt)


def quotient_join_case(lat, e, a, b, witness=None):
    """Classify the class join of [a] and [b].

    Defined with value [a v b] when the join exists; otherwise undefined when
    the adjoined top forms a singleton class, or the class of the least
    carrier element identified with the top.
    """
    w = _require_congruence(lat, e, witness)
    if lat.join[a, b] != UNDEF:
        return JoinCase(DEFINED, int(e.block_of[int(lat.join[a, b])]))
    ext = w.extension
    assert ext.added_top is not None, "an undefined join forces an adjoined top"
    hits = _carrier_hits(ext, w.theta.block_containing(ext.added_top))
    if not hits:
        return JoinCase(UNDEFINED_TOP_SINGLETON)
    alpha = hits[0]
    return JoinCase(ALPHA, int(e.block_of[alpha]), alpha)


def lattice_quotient(lat, theta):
    """Quotient of a total lattice by a congruence.

    Blocks are ordered by comparability of representatives, which is
    well-defined for lattice congruences; the result is validated as a
    lattice.
    """
    m = len(theta.blocks)
    leq = np.zeros((m, m), dtype=bool)
    for p in range(m):
        for q in range(m):
            leq[p, q] = any(
                lat.leq[x, y] for x in theta.blocks[p] for y in theta.blocks[q]
            )
    labels = tuple(f"[{lat.labels[block[0]]}]" for block in theta.blocks)
    return validate_lattice(Poset(labels, leq))

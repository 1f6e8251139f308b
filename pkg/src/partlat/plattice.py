"""Partial lattices: axiom validation, induced order, and the poset correspondence.

Operation tables are n x n integer arrays whose cells hold element indices,
with ``UNDEF`` marking an undefined cell. A compound term such as
``(i v j) v k`` counts as defined only when every intermediate value is.
"""

from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolation, BadParameter, NotPlos, UnknownLabel
from .order import (
    Lattice,
    Poset,
    _check_labels,
    _frozen,
    greatest_of,
    is_plos,
    least_of,
    lower_bounds,
    upper_bounds,
)

UNDEF = -1

BOTH_TOTAL = "both_total"
JOIN_PARTIAL = "join_partial"
MEET_PARTIAL = "meet_partial"
BOTH_PARTIAL = "both_partial"


class PartialLattice:
    """Partial algebra (L, v, ^) with strongly idempotent, commutative,
    associative operations tied together by the duality conditions."""

    def __init__(self, labels, join, meet):
        self.labels = tuple(labels)
        self.join = _frozen(np.array(join, dtype=np.int64))
        self.meet = _frozen(np.array(meet, dtype=np.int64))

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

    def __eq__(self, other):
        return (
            isinstance(other, PartialLattice)
            and self.labels == other.labels
            and bool((self.join == other.join).all())
            and bool((self.meet == other.meet).all())
        )

    def __repr__(self):
        defined = int((self.join != UNDEF).sum() + (self.meet != UNDEF).sum())
        return f"PartialLattice({' '.join(self.labels)}; {defined} defined cells)"


def _as_table(n, table):
    if isinstance(table, np.ndarray):
        return np.array(table, dtype=np.int64)
    arr = np.full((n, n), UNDEF, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            v = table[i][j]
            arr[i, j] = UNDEF if v is None else v
    return arr


def _compound(t, outer_first, i, j, k):
    if outer_first:  # (i . j) . k
        ij = t[i, j]
        return UNDEF if ij == UNDEF else int(t[ij, k])
    jk = t[j, k]  # i . (j . k)
    return UNDEF if jk == UNDEF else int(t[i, jk])


def validate_partial_lattice(labels, join, meet):
    """Check the partial lattice axioms and return the validated structure.

    Checks run cheapest first: strong idempotency, strong commutativity, the
    duality conditions, then strong associativity. The first violated axiom
    is reported with a witness tuple.
    """
    labels = tuple(labels)
    _check_labels(labels)
    n = len(labels)
    jt = _as_table(n, join)
    mt = _as_table(n, meet)
    for t, name in ((jt, "join"), (mt, "meet")):
        if t.shape != (n, n):
            raise BadParameter(f"{name} table shape does not match carrier")
        bad = (t < UNDEF) | (t >= n)
        if bad.any():
            i, j = (int(v) for v in np.argwhere(bad)[0])
            raise BadParameter(f"{name}[{i},{j}] is not an element index")
    for i in range(n):
        if jt[i, i] != i or mt[i, i] != i:
            raise AxiomViolation("idempotency", (i,), labels[i])
    for i in range(n):
        for j in range(i + 1, n):
            if jt[i, j] != jt[j, i] or mt[i, j] != mt[j, i]:
                raise AxiomViolation("commutativity", (i, j))
    for i in range(n):
        for j in range(n):
            if jt[i, j] == i and mt[i, j] != j:
                raise AxiomViolation("duality", (i, j), "join gives i but meet is not j")
            if mt[i, j] == i and jt[i, j] != j:
                raise AxiomViolation("duality", (i, j), "meet gives i but join is not j")
    for t, name in ((jt, "join"), (mt, "meet")):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if _compound(t, True, i, j, k) != _compound(t, False, i, j, k):
                        raise AxiomViolation("associativity", (i, j, k), name)
    return PartialLattice(labels, jt, mt)


def induced_order(lat):
    """The order x <= y iff x v y = y (equivalently x ^ y = x)."""
    n = lat.n
    p = Poset(lat.labels, lat.join == np.arange(n)[None, :])
    assert is_plos(p), "induced order must satisfy both bound properties"
    return p


def from_plos(p):
    """Canonical partial lattice on ``p``: sup where U(x, y) is nonempty and
    inf where L(x, y) is, everything else undefined."""
    report = is_plos(p)
    if not report:
        raise NotPlos(report)
    n = p.n
    jt = np.full((n, n), UNDEF, dtype=np.int64)
    mt = np.full((n, n), UNDEF, dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            ups = upper_bounds(p, a, b)
            if ups:
                jt[a, b] = jt[b, a] = least_of(p, ups)
            lows = lower_bounds(p, a, b)
            if lows:
                mt[a, b] = mt[b, a] = greatest_of(p, lows)
    return PartialLattice(p.labels, jt, mt)


def lp_roundtrip(lat):
    """Whether from_plos(induced_order(lat)) reproduces lat cell for cell."""
    return from_plos(induced_order(lat)) == lat


def pl_roundtrip(p):
    """Whether induced_order(from_plos(p)) reproduces p matrix for matrix."""
    return induced_order(from_plos(p)) == p


@dataclass(frozen=True)
class IdentityReport:
    """Result of scanning one of the fixed identity schemas."""

    schema: str | None
    mode: str
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _check_mode(mode):
    if mode not in ("weak", "strong"):
        raise BadParameter(f"unknown identity mode {mode!r}")


def check_absorption(lat, mode="weak"):
    """Scan (x v y) ^ x and (x ^ y) v x against the bare x.

    Weak mode requires equality whenever the compound side happens to be
    defined; strong mode also requires it to be defined for every pair, since
    the right side always is.
    """
    _check_mode(mode)
    schemas = (
        ("absorption_join", lat.join, lat.meet),
        ("absorption_meet", lat.meet, lat.join),
    )
    for schema, inner, outer in schemas:
        for x in range(lat.n):
            for y in range(lat.n):
                xy = inner[x, y]
                lhs = UNDEF if xy == UNDEF else int(outer[xy, x])
                if lhs == UNDEF:
                    if mode == "strong":
                        return IdentityReport(schema, mode, False, (x, y))
                elif lhs != x:
                    return IdentityReport(schema, mode, False, (x, y))
    return IdentityReport(None, mode, True)


def check_distributivity(lat, mode="strong"):
    """Scan x ^ (y v z) against (x ^ y) v (x ^ z), and the dual schema."""
    _check_mode(mode)
    schemas = (
        ("distributive_meet_over_join", lat.join, lat.meet),
        ("distributive_join_over_meet", lat.meet, lat.join),
    )
    for schema, jn, mt in schemas:
        for x in range(lat.n):
            for y in range(lat.n):
                for z in range(lat.n):
                    yz = jn[y, z]
                    lhs = UNDEF if yz == UNDEF else int(mt[x, yz])
                    xy, xz = mt[x, y], mt[x, z]
                    rhs = UNDEF if UNDEF in (xy, xz) else int(jn[xy, xz])
                    if mode == "strong" and (lhs == UNDEF) != (rhs == UNDEF):
                        return IdentityReport(schema, mode, False, (x, y, z))
                    if lhs != UNDEF and rhs != UNDEF and lhs != rhs:
                        return IdentityReport(schema, mode, False, (x, y, z))
    return IdentityReport(None, mode, True)


def is_total(lat):
    """Classify which of the two operations have undefined cells."""
    join_partial = bool((lat.join == UNDEF).any())
    meet_partial = bool((lat.meet == UNDEF).any())
    if join_partial and meet_partial:
        return BOTH_PARTIAL
    if join_partial:
        return JOIN_PARTIAL
    if meet_partial:
        return MEET_PARTIAL
    return BOTH_TOTAL


def from_lattice(k):
    """View a total lattice as a partial lattice with everywhere-defined tables."""
    return PartialLattice(k.labels, k.join, k.meet)


def to_lattice(lat):
    """Repackage a total partial lattice as a Lattice."""
    if is_total(lat) != BOTH_TOTAL:
        raise BadParameter("operations are not total")
    return Lattice(induced_order(lat), lat.join, lat.meet)


def antichain(n):
    """The n-element antichain: only diagonal cells are defined."""
    if n < 1:
        raise BadParameter("antichain needs n >= 1")
    labels = tuple(f"a{i + 1}" for i in range(n))
    diag = np.full((n, n), UNDEF, dtype=np.int64)
    np.fill_diagonal(diag, np.arange(n))
    return PartialLattice(labels, diag, diag)

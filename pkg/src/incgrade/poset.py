"""Finite posets: construction with validation, segments, maximal chains,
connected components, chain-length bound, automorphisms, and chain
transitivity.

Elements carry stable 0-based indices in input order. The order relation
is stored as a dense boolean matrix, always reflexively and transitively
closed. All set-valued results come back in a deterministic order so they
can be frozen into golden tests.
"""

from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptyPosetError,
    NotComparableError,
)


class Poset:
    """Immutable finite poset over labeled, indexed elements.

    leq must already be reflexive, antisymmetric, and transitive; use
    poset_from_covers or poset_from_relation to close an arbitrary input
    relation first.
    """

    def __init__(self, elements, leq):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise EmptyPosetError("poset needs at least one element")
        seen = set()
        for label in elements:
            if label in seen:
                raise DuplicateLabelError(f"duplicate label {label!r}")
            seen.add(label)
        n = len(elements)
        matrix = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("leq must be an n x n matrix")
        for i in range(n):
            if not matrix[i][i]:
                raise ValueError(f"relation not reflexive at {elements[i]!r}")
            for j in range(n):
                if i != j and matrix[i][j] and matrix[j][i]:
                    raise CycleError(
                        f"{elements[i]!r} and {elements[j]!r} are mutually comparable")
                for k in range(n):
                    if matrix[i][j] and matrix[j][k] and not matrix[i][k]:
                        raise ValueError("relation not transitive")
        self.elements = elements
        self.leq = matrix
        self.n = n
        self.covers = self._compute_covers()

    def _compute_covers(self):
        covers = []
        for i in range(self.n):
            for j in range(self.n):
                if i == j or not self.leq[i][j]:
                    continue
                if any(self.leq[i][z] and self.leq[z][j]
                       for z in range(self.n) if z != i and z != j):
                    continue
                covers.append((i, j))
        return tuple(sorted(covers))

    def index_of(self, label):
        return self.elements.index(str(label))

    def comparable_pairs(self):
        """All (x, y) with x below-or-equal y, in lexicographic order."""
        return tuple((i, j) for i in range(self.n) for j in range(self.n)
                     if self.leq[i][j])

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.leq == other.leq

    def __hash__(self):
        return hash((self.elements, self.leq))

    def __repr__(self):
        return f"Poset({list(self.elements)}, covers={list(self.covers)})"


def _close(n, edges):
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"index pair ({i}, {j}) out of range")
        leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def poset_from_covers(labels, covers):
    """Build a poset from cover pairs; the relation is their
    reflexive-transitive closure."""
    labels = tuple(labels)
    return Poset(labels, _close(len(labels), covers))


def poset_from_relation(labels, relation):
    """Build a poset from an arbitrary (pre-closure) relation."""
    return poset_from_covers(labels, relation)


def poset_from_json(obj):
    """Read {"elements": [...], "covers": [[i,j],...]} or
    {"elements": [...], "relation": [[i,j],...]}."""
    labels = obj["elements"]
    if "covers" in obj:
        return poset_from_covers(labels, [tuple(p) for p in obj["covers"]])
    if "relation" in obj:
        return poset_from_relation(labels, [tuple(p) for p in obj["relation"]])
    raise ValueError("poset JSON needs a 'covers' or 'relation' key")


def poset_to_json(p):
    return {"elements": list(p.elements),
            "covers": [list(c) for c in p.covers]}


def subposet(p, indices):
    """Induced subposet on the given indices, kept in the given order."""
    indices = list(indices)
    labels = [p.elements[i] for i in indices]
    leq = [[p.leq[a][b] for b in indices] for a in indices]
    return Poset(labels, leq)


def segment(p, x, z):
    """The interval [x, z] = {y : x below y below z} with induced order."""
    if not p.leq[x][z]:
        raise NotComparableError(
            f"{p.elements[x]!r} is not below {p.elements[z]!r}")
    members = [y for y in range(p.n) if p.leq[x][y] and p.leq[y][z]]
    return subposet(p, members)


def maximal_chains(p):
    """All maximal chains as ascending index tuples, lexicographic order.

    A maximal chain is saturated, so it walks cover edges from a minimal
    element to a maximal one.
    """
    minimal = [i for i in range(p.n)
               if not any(p.leq[j][i] for j in range(p.n) if j != i)]
    upper = {i: [j for (a, j) in p.covers if a == i] for i in range(p.n)}
    chains = []

    def extend(chain):
        nexts = upper[chain[-1]]
        if not nexts:
            chains.append(tuple(chain))
            return
        for j in nexts:
            chain.append(j)
            extend(chain)
            chain.pop()

    for start in minimal:
        extend([start])
    return tuple(sorted(chains))


def connected_components(p):
    """Partition of indices under zig-zag comparability, each component
    sorted, components ordered by least index."""
    parent = list(range(p.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(p.n):
        for j in range(p.n):
            if p.leq[i][j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(p.n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(groups[root]) for root in sorted(groups))


def component_index(p):
    """Map each element index to the index of its connected component."""
    owner = [0] * p.n
    for c, members in enumerate(connected_components(p)):
        for i in members:
            owner[i] = c
    return tuple(owner)


def linear_extension(p):
    """A topological order of the indices (least available index first)."""
    remaining = set(range(p.n))
    order = []
    while remaining:
        ready = [i for i in remaining
                 if all(j not in remaining or j == i
                        for j in range(p.n) if p.leq[j][i])]
        pick = min(ready)
        order.append(pick)
        remaining.remove(pick)
    return tuple(order)


def bound(p):
    """Number of elements in a longest chain."""
    longest = [1] * p.n
    for i in linear_extension(p):
        below = [longest[j] for j in range(p.n) if j != i and p.leq[j][i]]
        if below:
            longest[i] = 1 + max(below)
    return max(longest)


def _signatures(p):
    """Per-element invariants preserved by every automorphism."""
    height = [1] * p.n
    for i in linear_extension(p):
        below = [height[j] for j in range(p.n) if j != i and p.leq[j][i]]
        if below:
            height[i] = 1 + max(below)
    depth = [1] * p.n
    for i in reversed(linear_extension(p)):
        above = [depth[j] for j in range(p.n) if j != i and p.leq[i][j]]
        if above:
            depth[i] = 1 + max(above)
    up = [sum(1 for j in range(p.n) if j != i and p.leq[i][j]) for i in range(p.n)]
    down = [sum(1 for j in range(p.n) if j != i and p.leq[j][i]) for i in range(p.n)]
    cup = [sum(1 for (a, _) in p.covers if a == i) for i in range(p.n)]
    cdown = [sum(1 for (_, b) in p.covers if b == i) for i in range(p.n)]
    return [(height[i], depth[i], up[i], down[i], cup[i], cdown[i])
            for i in range(p.n)]


def automorphisms(p):
    """The full automorphism group as permutation tuples, sorted, so the
    identity comes first. Backtracking with signature pruning."""
    sig = _signatures(p)
    candidates = [[j for j in range(p.n) if sig[j] == sig[i]]
                  for i in range(p.n)]
    found = []
    image = [-1] * p.n
    used = [False] * p.n

    def assign(i):
        if i == p.n:
            found.append(tuple(image))
            return
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for k in range(i):
                if (p.leq[i][k] != p.leq[j][image[k]]
                        or p.leq[k][i] != p.leq[image[k]][j]):
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                assign(i + 1)
                used[j] = False
                image[i] = -1

    assign(0)
    return tuple(sorted(found))


def is_chain_transitive(p):
    """Whether Aut(P) acts transitively on the maximal chains.

    Returns (True, table) with table[(i, j)] = an automorphism mapping
    chain i onto chain j, or (False, (i, j)) for an unreachable pair.
    An order automorphism maps an ascending chain to an ascending chain,
    so image tuples compare elementwise.
    """
    chains = maximal_chains(p)
    auts = automorphisms(p)
    table = {}
    for i, src in enumerate(chains):
        for j, dst in enumerate(chains):
            witness = None
            for sigma in auts:
                if tuple(sigma[x] for x in src) == dst:
                    witness = sigma
                    break
            if witness is None:
                return False, (i, j)
            table[(i, j)] = witness
    return True, table

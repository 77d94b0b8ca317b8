"""Finite groups by Cayley table, elementary grading maps theta, their
homogeneous components, counting of distinct gradings, equivalence with
witnesses, and classification with a Burnside cross-check.

theta assigns a group element to each poset element; the pair (x, y) then
carries the degree theta_x^{-1} theta_y, and the component of degree g is
spanned by the basis elements of the pairs graded g.
"""

import itertools
import json
import os

from .errors import (
    BudgetExceededError,
    InvalidGroupError,
    MismatchError,
    NotComparableError,
    VerificationError,
)
from .poset import automorphisms, component_index, connected_components

DEFAULT_BUDGET = 10 ** 6


def enumeration_budget(budget=None):
    """Effective enumeration budget: explicit arg, else the
    INCGRADE_MAX_BUDGET environment variable, else the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("INCGRADE_MAX_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


class FiniteGroup:
    """Finite group given by element names and a full Cayley table.

    table[a][b] is the index of the product a*b. The constructor checks
    the group axioms on the whole table and locates identity and inverses.
    """

    def __init__(self, names, table):
        self.names = tuple(str(v) for v in names)
        m = len(self.names)
        if m == 0:
            raise InvalidGroupError("a group needs at least one element")
        if len(set(self.names)) != m:
            raise InvalidGroupError("element names must be distinct")
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        if len(self.table) != m or any(len(row) != m for row in self.table):
            raise InvalidGroupError("Cayley table must be square")
        for row in self.table:
            if any(not 0 <= v < m for v in row):
                raise InvalidGroupError("Cayley table entry out of range")
        identity = None
        for e in range(m):
            if all(self.table[e][a] == a and self.table[a][e] == a
                   for a in range(m)):
                identity = e
                break
        if identity is None:
            raise InvalidGroupError("no identity element")
        self.identity = identity
        inverse = [None] * m
        for a in range(m):
            for b in range(m):
                if self.table[a][b] == identity and self.table[b][a] == identity:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise InvalidGroupError(f"no inverse for {self.names[a]!r}")
        self.inverse = tuple(inverse)
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if (self.table[self.table[a][b]][c]
                            != self.table[a][self.table[b][c]]):
                        raise InvalidGroupError(
                            "multiplication is not associative")

    @property
    def order(self):
        return len(self.names)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def index_of(self, name):
        try:
            return self.names.index(str(name))
        except ValueError:
            raise InvalidGroupError(f"unknown group element {name!r}") from None

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.names == other.names and self.table == other.table

    def __hash__(self):
        return hash((self.names, self.table))

    def __repr__(self):
        return f"FiniteGroup({list(self.names)})"


def cyclic_group(n):
    if n < 1:
        raise InvalidGroupError("cyclic group order must be positive")
    names = ["1"] + ["h" if k == 1 else f"h^{k}" for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(names, table)


def _cycle_name(perm):
    """Cycle notation over 1-based points, '1' for the identity."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        cycles.append(cycle)
    if not cycles:
        return "1"
    return "".join("(" + "".join(str(v + 1) for v in c) + ")" for c in cycles)


def symmetric_group(n):
    if not 1 <= n <= 4:
        raise InvalidGroupError("symmetric groups supported up to S4")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    names = [_cycle_name(p) for p in perms]
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms]
             for p in perms]
    return FiniteGroup(names, table)


def product_group(a, b):
    """Direct product; element names joined with '|'."""
    names = [f"{x}|{y}" for x in a.names for y in b.names]
    m = b.order
    table = [[(a.table[i // m][k // m]) * m + b.table[i % m][k % m]
              for k in range(a.order * m)]
             for i in range(a.order * m)]
    return FiniteGroup(names, table)


def group_from_spec(spec):
    """Parse 'C<n>', 'S<n>' (n <= 4), products like 'C2xC2', or a JSON
    Cayley table {"names": [...], "table": [[...]]}."""
    spec = str(spec).strip()
    if spec.startswith("{"):
        try:
            obj = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise InvalidGroupError(f"bad group JSON: {exc}") from None
        return FiniteGroup(obj["names"], obj["table"])
    factors = spec.split("x")
    built = None
    for part in factors:
        part = part.strip()
        if len(part) < 2 or part[0] not in "CS" or not part[1:].isdigit():
            raise InvalidGroupError(f"unrecognized group spec {part!r}")
        n = int(part[1:])
        atom = cyclic_group(n) if part[0] == "C" else symmetric_group(n)
        built = atom if built is None else product_group(built, atom)
    return built


class GradedComponent:
    """Homogeneous component of one degree: the comparable pairs whose
    grade equals that degree."""

    def __init__(self, grading, degree, basis):
        self.grading = grading
        self.degree = degree
        self.basis = tuple(basis)

    def __repr__(self):
        name = self.grading.group.names[self.degree]
        return f"GradedComponent({name!r}, {list(self.basis)})"


class GradingMap:
    """A map theta from poset elements to group elements, as indices."""

    def __init__(self, poset, group, theta):
        theta = tuple(int(v) for v in theta)
        if len(theta) != poset.n:
            raise MismatchError("theta length must equal the poset size")
        if any(not 0 <= v < group.order for v in theta):
            raise InvalidGroupError("theta value out of group range")
        self.poset = poset
        self.group = group
        self.theta = theta

    def grade_of_pair(self, x, y):
        if not self.poset.leq[x][y]:
            raise NotComparableError(
                f"({self.poset.elements[x]!r}, {self.poset.elements[y]!r}) "
                "is not a comparable pair")
        g = self.group
        return g.mul(g.inv(self.theta[x]), self.theta[y])

    def support(self):
        """The realized degrees, ascending by element index."""
        return tuple(sorted({self.grade_of_pair(x, y)
                             for (x, y) in self.poset.comparable_pairs()}))

    def component_basis(self, g):
        pairs = [(x, y) for (x, y) in self.poset.comparable_pairs()
                 if self.grade_of_pair(x, y) == g]
        return GradedComponent(self, g, pairs)

    def components(self):
        """Map from degree to basis pairs, realized degrees only."""
        out = {}
        for (x, y) in self.poset.comparable_pairs():
            out.setdefault(self.grade_of_pair(x, y), []).append((x, y))
        return {g: tuple(pairs) for g, pairs in sorted(out.items())}

    def compose_with_automorphism(self, sigma):
        """theta after sigma^{-1}, the right action used in transport."""
        sigma = tuple(sigma)
        inv = [0] * len(sigma)
        for i, v in enumerate(sigma):
            inv[v] = i
        return GradingMap(self.poset, self.group,
                          [self.theta[inv[x]] for x in range(self.poset.n)])

    def shift(self, shifts):
        """Left-multiply by one group element per connected component."""
        owner = component_index(self.poset)
        return GradingMap(
            self.poset, self.group,
            [self.group.mul(shifts[owner[x]], self.theta[x])
             for x in range(self.poset.n)])

    def restrict(self, sub, indices):
        """The grading induced on a subposet built from these indices."""
        return GradingMap(sub, self.group, [self.theta[i] for i in indices])

    def names(self):
        return [self.group.names[v] for v in self.theta]

    def __eq__(self, other):
        if not isinstance(other, GradingMap):
            return NotImplemented
        return (self.poset == other.poset and self.group == other.group
                and self.theta == other.theta)

    def __hash__(self):
        return hash((self.poset, self.group, self.theta))

    def __repr__(self):
        return f"GradingMap({self.names()})"


def grading_from_json(poset, obj):
    """Read {"group": "C3", "theta": ["1", "h", "h^2", "1"]}."""
    group = group_from_spec(obj["group"])
    theta = [group.index_of(name) for name in obj["theta"]]
    return GradingMap(poset, group, theta)


def grading_to_json(grading, group_spec=None):
    out = {"theta": grading.names()}
    if group_spec is not None:
        out = {"group": group_spec, "theta": grading.names()}
    return out


class EquivalenceWitness:
    """Certificate that mu equals the shift of theta composed with a poset
    automorphism: mu(x) = shifts[component(x)] * theta(sigma^{-1}(x))."""

    def __init__(self, shifts, sigma):
        self.shifts = tuple(shifts)
        self.sigma = tuple(sigma)

    def check(self, theta, mu):
        moved = theta.compose_with_automorphism(self.sigma).shift(self.shifts)
        return moved == mu

    def __repr__(self):
        return f"EquivalenceWitness(shifts={list(self.shifts)}, sigma={list(self.sigma)})"


def equivalent(theta, mu):
    """Witness that the two gradings are equivalent, or None.

    For each poset automorphism the candidate shift of each connected
    component is forced by the value at one anchor element, then checked
    globally.
    """
    if theta.poset != mu.poset or theta.group != mu.group:
        raise MismatchError("gradings live over different posets or groups")
    poset, group = theta.poset, theta.group
    comps = connected_components(poset)
    for sigma in automorphisms(poset):
        moved = theta.compose_with_automorphism(sigma)
        shifts = []
        ok = True
        for members in comps:
            anchor = members[0]
            h = group.mul(mu.theta[anchor], group.inv(moved.theta[anchor]))
            if any(group.mul(h, moved.theta[x]) != mu.theta[x]
                   for x in members):
                ok = False
                break
            shifts.append(h)
        if ok:
            return EquivalenceWitness(shifts, sigma)
    return None


def count_distinct_gradings(poset, group, verify=False, budget=None):
    """|G|^(n-k) with n elements and k connected components.

    With verify=True, enumerates every theta, groups the maps by the orbit
    of the per-component left shift action, and checks the orbit count
    against the formula.
    """
    k = len(connected_components(poset))
    expected = group.order ** (poset.n - k)
    if verify:
        total = group.order ** poset.n
        limit = enumeration_budget(budget)
        if total > limit:
            raise BudgetExceededError(
                f"{total} maps exceed the enumeration budget {limit}")
        owner = component_index(poset)
        anchor = {}
        for c, members in enumerate(connected_components(poset)):
            anchor[c] = members[0]
        canon = set()
        for theta in itertools.product(range(group.order), repeat=poset.n):
            canon.add(tuple(
                group.mul(group.inv(theta[anchor[owner[x]]]), theta[x])
                for x in range(poset.n)))
        if len(canon) != expected:
            raise VerificationError(
                f"orbit enumeration found {len(canon)}, formula gives {expected}")
    return expected


def burnside_class_count(poset, group):
    """Number of equivalence classes by Burnside's lemma over the pairs
    (h, sigma) with h a per-component shift and sigma a poset automorphism.

    theta is fixed by (h, sigma) when theta(x) = h_{c(x)} theta(sigma^{-1} x)
    for all x. Along each cycle of sigma the values of theta are forced from
    one free choice, and the closure condition is that the shifts met around
    the cycle multiply to the identity, so the fixed count is a product of
    |G| or 0 per cycle.
    """
    comps = connected_components(poset)
    owner = component_index(poset)
    auts = automorphisms(poset)
    k = len(comps)

    def cycles_of(sigma):
        seen = [False] * poset.n
        out = []
        for start in range(poset.n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = sigma[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = sigma[nxt]
            out.append(cycle)
        return out

    total = 0
    for sigma in auts:
        cycles = cycles_of(sigma)
        for shifts in itertools.product(range(group.order), repeat=k):
            fixed = 1
            for cycle in cycles:
                acc = shifts[owner[cycle[0]]]
                for t in range(len(cycle) - 1, 0, -1):
                    acc = group.mul(acc, shifts[owner[cycle[t]]])
                if acc != group.identity:
                    fixed = 0
                    break
                fixed *= group.order
            total += fixed
    denom = (group.order ** k) * len(auts)
    count, rem = divmod(total, denom)
    if rem:
        raise VerificationError("Burnside sum is not divisible by the group order")
    return count


def classify_gradings(poset, group, budget=None):
    """One representative per equivalence class, each the lexicographically
    least map in its class; the count is cross-checked against Burnside.
    """
    total = group.order ** poset.n
    limit = enumeration_budget(budget)
    if total > limit:
        raise BudgetExceededError(
            f"{total} maps exceed the enumeration budget {limit}")
    comps = connected_components(poset)
    owner = component_index(poset)
    auts = automorphisms(poset)
    k = len(comps)
    seen = set()
    reps = []
    for theta in itertools.product(range(group.order), repeat=poset.n):
        if theta in seen:
            continue
        reps.append(GradingMap(poset, group, theta))
        for sigma in auts:
            inv = [0] * poset.n
            for i, v in enumerate(sigma):
                inv[v] = i
            moved = tuple(theta[inv[x]] for x in range(poset.n))
            for shifts in itertools.product(range(group.order), repeat=k):
                seen.add(tuple(group.mul(shifts[owner[x]], moved[x])
                               for x in range(poset.n)))
    expected = burnside_class_count(poset, group)
    if len(reps) != expected:
        raise VerificationError(
            f"orbit enumeration found {len(reps)} classes, Burnside gives {expected}")
    return reps

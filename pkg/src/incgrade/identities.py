"""Multilinear graded polynomial identities of an elementary grading:
evaluation of multilinear polynomials, per-multidegree identity slices as
exact nullspaces, slice comparison between gradings, reduction of the
whole-poset slice to maximal chains, monomial identities, and the
separation probe for chain-transitive posets.

A multidegree (g_1, ..., g_m) fixes the degree of each variable; the
multilinear polynomials of that type live in the m!-dimensional span of
the monomials x_{pi(1)} ... x_{pi(m)}. Substituting basis elements of the
matching components is enough to decide identities, so a slice is the
nullspace of a finite 0/1 evaluation matrix whose rows are streamed into
an incremental row reduction.
"""

import itertools
from fractions import Fraction

from .errors import (
    CapExceededError,
    DegreeMismatchError,
    MismatchError,
    NotChainTransitiveError,
)
from .algebra import IncidenceFunction, convolve, e_basis
from .grading import GradingMap, classify_gradings
from .linalg import (
    RationalMatrix,
    RowReducer,
    format_rational,
    parse_rational,
    nullspace,
    subspace_equal,
    subspace_intersect,
)
from .poset import bound, is_chain_transitive, maximal_chains, subposet

DEGREE_CAP = 4


def _check_cap(m, cap):
    cap = DEGREE_CAP if cap is None else cap
    if m > cap:
        raise CapExceededError(f"multidegree length {m} exceeds the cap {cap}")


def lex_permutations(m):
    """The m! permutations of (1..m) in lexicographic order."""
    return tuple(itertools.permutations(range(1, m + 1)))


class MultilinearPolynomial:
    """Multilinear polynomial of one multidegree: a rational combination
    of the monomials x_{pi(1)} ... x_{pi(m)} over permutations pi."""

    def __init__(self, group, multidegree, terms):
        self.group = group
        self.multidegree = tuple(int(g) for g in multidegree)
        m = len(self.multidegree)
        if m < 1:
            raise DegreeMismatchError("multidegree must have length >= 1")
        valid = set(lex_permutations(m))
        cleaned = {}
        for perm, coeff in terms.items():
            perm = tuple(int(v) for v in perm)
            if perm not in valid:
                raise DegreeMismatchError(f"{perm} is not a permutation of 1..{m}")
            coeff = Fraction(coeff)
            if coeff:
                cleaned[perm] = coeff
        self.terms = cleaned

    @property
    def m(self):
        return len(self.multidegree)

    def coefficient_vector(self):
        """Coefficients over the lexicographically ordered monomials."""
        perms = lex_permutations(self.m)
        return [self.terms.get(p, Fraction(0)) for p in perms]

    def __repr__(self):
        names = [self.group.names[g] for g in self.multidegree]
        return f"MultilinearPolynomial(type={names}, {len(self.terms)} terms)"


def polynomial_from_json(group, obj):
    """Read {"multidegree": ["h","1"], "terms": [{"perm": [2,1],
    "coeff": "-1"}, ...]} with 1-based permutations."""
    multidegree = [group.index_of(name) for name in obj["multidegree"]]
    terms = {}
    for item in obj["terms"]:
        perm = tuple(int(v) for v in item["perm"])
        terms[perm] = terms.get(perm, Fraction(0)) + parse_rational(item["coeff"])
    return MultilinearPolynomial(group, multidegree, terms)


def polynomial_to_json(poly):
    return {
        "multidegree": [poly.group.names[g] for g in poly.multidegree],
        "terms": [{"perm": list(perm), "coeff": format_rational(coeff)}
                  for perm, coeff in sorted(poly.terms.items())],
    }


class Substitution:
    """One comparable pair per variable, pair i meant for degree g_i."""

    def __init__(self, pairs):
        self.pairs = tuple((int(x), int(y)) for x, y in pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"Substitution({list(self.pairs)})"


def evaluate(poly, grading, sub):
    """Value of the polynomial at the substitution, by exact convolution.

    The substitution must match the polynomial's multidegree: pair i must
    carry degree g_i in the grading.
    """
    if len(sub) != poly.m:
        raise DegreeMismatchError(
            f"substitution has {len(sub)} pairs, polynomial needs {poly.m}")
    for (x, y), g in zip(sub.pairs, poly.multidegree):
        if grading.grade_of_pair(x, y) != g:
            raise DegreeMismatchError(
                f"pair ({x}, {y}) has the wrong degree for its slot")
    poset = grading.poset
    out = IncidenceFunction(poset, {})
    for perm, coeff in poly.terms.items():
        term = e_basis(poset, *sub.pairs[perm[0] - 1])
        for j in perm[1:]:
            term = convolve(term, e_basis(poset, *sub.pairs[j - 1]))
        out = out + coeff * term
    return out


class IdentitySlice:
    """All identities of one multidegree: the canonical echelon basis of
    coefficient vectors (over the lex-ordered monomials) that vanish under
    every substitution."""

    def __init__(self, grading, multidegree, basis):
        self.grading = grading
        self.multidegree = tuple(multidegree)
        self.basis = basis

    @property
    def dimension(self):
        return self.basis.nrows

    def contains_vector(self, vector):
        reducer = RowReducer(self.basis.ncols)
        for row in self.basis.rows:
            reducer.add(row)
        return reducer.contains(vector)

    def contains_polynomial(self, poly):
        if tuple(poly.multidegree) != self.multidegree:
            raise DegreeMismatchError("polynomial has a different multidegree")
        return self.contains_vector(poly.coefficient_vector())

    def __repr__(self):
        names = [self.grading.group.names[g] for g in self.multidegree]
        return f"IdentitySlice(type={names}, dim={self.dimension})"


# Slices depend only on the per-position basis pair lists, so they are
# memoized on (poset, bases); representatives sharing component patterns
# reuse each other's work.
_SLICE_CACHE = {}


def _slice_matrix(poset, bases):
    key = (poset, bases)
    hit = _SLICE_CACHE.get(key)
    if hit is not None:
        return hit
    m = len(bases)
    perms = tuple(itertools.permutations(range(m)))
    fact = len(perms)
    reducer = RowReducer(fact)
    for pairs in itertools.product(*bases):
        if reducer.rank == fact:
            break
        by_output = {}
        for idx, perm in enumerate(perms):
            cur = pairs[perm[0]][0]
            alive = True
            for pos in perm:
                u, v = pairs[pos]
                if u != cur:
                    alive = False
                    break
                cur = v
            if alive:
                start = pairs[perm[0]][0]
                by_output.setdefault((start, cur), set()).add(idx)
        for hits in by_output.values():
            row = [Fraction(1) if i in hits else Fraction(0)
                   for i in range(fact)]
            reducer.add(row)
    result = nullspace(reducer.matrix())
    _SLICE_CACHE[key] = result
    return result


def identity_slice(grading, multidegree, cap=None):
    """Nullspace of the evaluation map for one multidegree.

    Rows are substitutions (one basis pair per variable) crossed with
    output pairs; columns are the m! monomials. A degree with an empty
    component admits no substitutions, so the slice is the full space.
    """
    multidegree = tuple(multidegree)
    _check_cap(len(multidegree), cap)
    bases = tuple(tuple(grading.component_basis(g).basis)
                  for g in multidegree)
    return IdentitySlice(grading, multidegree,
                         _slice_matrix(grading.poset, bases))


def _support_alphabet(*gradings):
    alphabet = set()
    for grading in gradings:
        alphabet.update(grading.support())
    return tuple(sorted(alphabet))


def slices_equal_upto(theta, mu, d, cap=None):
    """Compare all slices of the two gradings up to degree d.

    Returns (True, None) or (False, first differing multidegree). Only
    multidegrees over the union of the two supports matter: any other
    degree has an empty component on both sides, giving equal full slices.
    """
    if theta.poset != mu.poset or theta.group != mu.group:
        raise MismatchError("gradings live over different posets or groups")
    _check_cap(d, cap)
    alphabet = _support_alphabet(theta, mu)
    for m in range(1, d + 1):
        for multidegree in itertools.product(alphabet, repeat=m):
            a = identity_slice(theta, multidegree, cap=cap)
            b = identity_slice(mu, multidegree, cap=cap)
            if a.basis != b.basis:
                return False, multidegree
    return True, None


def verify_chain_reduction(grading, multidegree, cap=None):
    """Check that the whole-poset slice equals the intersection of the
    slices of the grading restricted to each maximal chain.

    Returns (equal, report) with the dimensions of the whole slice, each
    chain slice, and the intersection.
    """
    multidegree = tuple(multidegree)
    _check_cap(len(multidegree), cap)
    whole = identity_slice(grading, multidegree, cap=cap)
    chains = maximal_chains(grading.poset)
    chain_dims = []
    meet = None
    for chain in chains:
        sub = subposet(grading.poset, chain)
        restricted = grading.restrict(sub, chain)
        piece = identity_slice(restricted, multidegree, cap=cap)
        chain_dims.append(piece.dimension)
        meet = piece.basis if meet is None else subspace_intersect(
            meet, piece.basis)
    equal = subspace_equal(whole.basis, meet)
    report = {
        "whole_dimension": whole.dimension,
        "chain_dimensions": chain_dims,
        "intersection_dimension": meet.nrows,
        "equal": equal,
    }
    return equal, report


def monomial_identities(grading, d, cap=None):
    """All degree tuples (g_1..g_m), m <= d, whose single monomial
    x_1 ... x_m vanishes under every substitution.

    x_1 ... x_m is not an identity exactly when basis pairs can be chained
    left to right through the components, so a reachability sweep decides
    each tuple without building products.
    """
    _check_cap(d, cap)
    poset, group = grading.poset, grading.group
    components = {g: grading.component_basis(g).basis
                  for g in range(group.order)}
    identities = set()
    for m in range(1, d + 1):
        for word in itertools.product(range(group.order), repeat=m):
            reach = set(range(poset.n))
            for g in word:
                reach = {v for (u, v) in components[g] if u in reach}
                if not reach:
                    break
            if not reach:
                identities.add(word)
    return identities


def chain_transitivity_identity_check(poset, group, d=None, budget=None):
    """Probe the separation of inequivalent gradings by monomial
    identities on a chain-transitive poset.

    For every pair of class representatives, compares their monomial
    identity sets up to degree d (default: the chain-length bound of the
    poset). Pairs whose sets coincide are reported as findings; separation
    at this depth is not guaranteed, so coinciding pairs are reported
    rather than treated as errors.
    """
    transitive, witness = is_chain_transitive(poset)
    if not transitive:
        i, j = witness
        raise NotChainTransitiveError(
            f"no automorphism maps maximal chain {i} onto {j}")
    if d is None:
        d = bound(poset)
    reps = classify_gradings(poset, group, budget=budget)
    signatures = [frozenset(monomial_identities(rep, d, cap=d))
                  for rep in reps]
    unseparated = []
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if signatures[i] == signatures[j]:
                unseparated.append((reps[i], reps[j]))
    report = {
        "degree": d,
        "classes": len(reps),
        "pairs_checked": len(reps) * (len(reps) - 1) // 2,
        "unseparated": unseparated,
        "separated": not unseparated,
    }
    return report

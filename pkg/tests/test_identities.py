import itertools
import random
from fractions import Fraction

import pytest

from incgrade.corpus import corpus_posets
from incgrade.errors import (
    CapExceededError,
    DegreeMismatchError,
    NotChainTransitiveError,
)
from incgrade.grading import GradingMap, cyclic_group, equivalent, group_from_spec
from incgrade.identities import (
    MultilinearPolynomial,
    Substitution,
    chain_transitivity_identity_check,
    evaluate,
    identity_slice,
    lex_permutations,
    monomial_identities,
    polynomial_from_json,
    polynomial_to_json,
    slices_equal_upto,
    verify_chain_reduction,
)
from incgrade.poset import automorphisms, maximal_chains, subposet

from util import monomial_vanishes_by_products, random_grading

CORPUS = corpus_posets()


def gm(poset, group, names):
    return GradingMap(poset, group, [group.index_of(v) for v in names])


def trivial_grading(poset):
    return GradingMap(poset, group_from_spec("C1"), [0] * poset.n)


def poly_from_vector(group, multidegree, vector):
    perms = lex_permutations(len(multidegree))
    return MultilinearPolynomial(group, multidegree, dict(zip(perms, vector)))


def commutator_product(group):
    # [x1, x2][x3, x4] expanded over the lex-ordered monomials.
    return MultilinearPolynomial(group, (group.identity,) * 4, {
        (1, 2, 3, 4): 1,
        (1, 2, 4, 3): -1,
        (2, 1, 3, 4): -1,
        (2, 1, 4, 3): 1,
    })


class TestPolynomials:
    def test_lex_permutation_order(self):
        assert lex_permutations(3) == (
            (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))

    def test_zero_coefficients_dropped(self):
        g = cyclic_group(2)
        poly = MultilinearPolynomial(g, (0, 0), {(1, 2): 1, (2, 1): 0})
        assert poly.terms == {(1, 2): Fraction(1)}
        assert poly.coefficient_vector() == [1, 0]

    def test_bad_permutation_rejected(self):
        g = cyclic_group(2)
        with pytest.raises(DegreeMismatchError):
            MultilinearPolynomial(g, (0, 0), {(1, 1): 1})

    def test_json_round_trip(self):
        g = cyclic_group(2)
        poly = MultilinearPolynomial(
            g, (1, 0), {(2, 1): Fraction(-1), (1, 2): Fraction(1, 2)})
        back = polynomial_from_json(g, polynomial_to_json(poly))
        assert back.multidegree == poly.multidegree
        assert back.terms == poly.terms


class TestEvaluate:
    def test_commutator_on_chain(self):
        p = CORPUS["c2"]
        theta = trivial_grading(p)
        poly = poly_from_vector(theta.group, (0, 0), [1, -1])
        value = evaluate(poly, theta, Substitution([(0, 1), (1, 1)]))
        assert value(0, 1) == 1
        assert value.support() == ((0, 1),)

    def test_substitution_length_checked(self):
        p = CORPUS["c2"]
        theta = trivial_grading(p)
        poly = poly_from_vector(theta.group, (0, 0), [1, -1])
        with pytest.raises(DegreeMismatchError):
            evaluate(poly, theta, Substitution([(0, 0)]))

    def test_substitution_degree_checked(self):
        p = CORPUS["c2"]
        g = cyclic_group(2)
        theta = gm(p, g, ["1", "h"])
        poly = poly_from_vector(g, (g.index_of("h"),), [1])
        with pytest.raises(DegreeMismatchError):
            evaluate(poly, theta, Substitution([(0, 0)]))


class TestIdentitySlice:
    def test_two_chain_trivial_grading_has_no_degree_two_identities(self):
        theta = trivial_grading(CORPUS["c2"])
        assert identity_slice(theta, (0, 0)).dimension == 0

    def test_empty_component_gives_full_slice(self):
        p = CORPUS["c2"]
        g = cyclic_group(3)
        theta = gm(p, g, ["1", "h"])
        missing = g.index_of("h^2")
        assert identity_slice(theta, (missing,)).dimension == 1
        assert identity_slice(theta, (missing, missing)).dimension == 2

    def test_singleton_component_squares_to_zero(self):
        p = CORPUS["example"]
        g = cyclic_group(3)
        theta = gm(p, g, ["1", "1", "h", "1"])
        h = g.index_of("h")
        assert theta.component_basis(h).basis == ((1, 2),)
        assert identity_slice(theta, (h, h)).dimension == 2

    def test_contains_polynomial_checks_multidegree(self):
        theta = trivial_grading(CORPUS["c2"])
        s = identity_slice(theta, (0, 0))
        poly = poly_from_vector(theta.group, (0,), [1])
        with pytest.raises(DegreeMismatchError):
            s.contains_polynomial(poly)

    def test_degree_cap(self):
        theta = trivial_grading(CORPUS["c2"])
        with pytest.raises(CapExceededError):
            identity_slice(theta, (0,) * 5)
        assert identity_slice(theta, (0,) * 5, cap=5).dimension >= 0

    def test_commutator_product_is_an_identity_on_two_chain(self):
        # The algebra of a 2-chain is 2x2 upper triangular matrices.
        theta = trivial_grading(CORPUS["c2"])
        s = identity_slice(theta, (0, 0, 0, 0))
        assert s.contains_polynomial(commutator_product(theta.group))

    def test_commutator_product_fails_on_three_chain(self):
        theta = trivial_grading(CORPUS["c3"])
        s = identity_slice(theta, (0, 0, 0, 0))
        assert not s.contains_polynomial(commutator_product(theta.group))

    def test_slice_members_vanish_on_random_substitutions(self):
        rng = random.Random(50)
        g = cyclic_group(2)
        for name in ("c3", "diamond", "example"):
            theta = random_grading(rng, CORPUS[name], g)
            for multidegree in [(0, 0), (0, 1), (1, 1), (0, 0, 1)]:
                s = identity_slice(theta, multidegree)
                bases = [theta.component_basis(d).basis for d in multidegree]
                if any(not b for b in bases):
                    continue
                for row in s.basis.rows:
                    poly = poly_from_vector(g, multidegree, row)
                    for _ in range(50):
                        sub = Substitution([rng.choice(b) for b in bases])
                        assert evaluate(poly, theta, sub).is_zero()

    def test_vectors_outside_slice_have_witnesses(self):
        # Anything the nullspace rejects must fail on some substitution.
        theta = trivial_grading(CORPUS["c2"])
        s = identity_slice(theta, (0, 0))
        bases = [theta.component_basis(0).basis] * 2
        for vector in ([1, 0], [0, 1], [1, 1]):
            assert not s.contains_vector([Fraction(v) for v in vector])
            poly = poly_from_vector(theta.group, (0, 0), vector)
            hits = [sub for sub in itertools.product(*bases)
                    if not evaluate(poly, theta, Substitution(sub)).is_zero()]
            assert hits


class TestSliceComparison:
    def test_equal_to_itself(self):
        rng = random.Random(51)
        theta = random_grading(rng, CORPUS["example"], cyclic_group(3))
        assert slices_equal_upto(theta, theta, 2) == (True, None)

    def test_first_difference_reported(self):
        p = CORPUS["c2"]
        g = cyclic_group(2)
        theta = gm(p, g, ["1", "1"])
        mu = gm(p, g, ["1", "h"])
        equal, where = slices_equal_upto(theta, mu, 1)
        assert not equal
        assert where == (g.index_of("h"),)

    def test_equivalent_gradings_share_all_slices(self):
        rng = random.Random(52)
        p = CORPUS["diamond"]
        g = cyclic_group(2)
        auts = automorphisms(p)
        for _ in range(5):
            theta = random_grading(rng, p, g)
            sigma = rng.choice(auts)
            shift = [rng.randrange(g.order)]
            mu = theta.compose_with_automorphism(sigma).shift(shift)
            assert equivalent(theta, mu) is not None
            assert slices_equal_upto(theta, mu, 2) == (True, None)

    def test_inequivalent_gradings_can_share_all_slices(self):
        # Swapping the degrees of the two isolated strict pairs gives a
        # grading nobody can reach by shifts or automorphisms, yet every
        # slice up to degree 3 agrees.
        p = CORPUS["example"]
        g = cyclic_group(3)
        theta = gm(p, g, ["1", "h", "h^2", "1"])
        mu = gm(p, g, ["1", "h^2", "h", "1"])
        assert equivalent(theta, mu) is None
        assert slices_equal_upto(theta, mu, 3) == (True, None)

    def test_degree_cap(self):
        theta = trivial_grading(CORPUS["c2"])
        with pytest.raises(CapExceededError):
            slices_equal_upto(theta, theta, 5)


class TestChainReduction:
    def test_single_chain_is_trivial(self):
        rng = random.Random(53)
        theta = random_grading(rng, CORPUS["c3"], cyclic_group(2))
        equal, report = verify_chain_reduction(theta, (0, 0))
        assert equal
        assert report["chain_dimensions"] == [report["whole_dimension"]]
        assert report["intersection_dimension"] == report["whole_dimension"]

    def test_worked_example_dimensions(self):
        # theta = (1, h, h^2, 1) on the N-shaped poset, degree type (1, 1).
        # By hand: the whole slice is 0; the chains through the middle both
        # keep only the commutator, the outer chain kills it.
        p = CORPUS["example"]
        g = cyclic_group(3)
        theta = gm(p, g, ["1", "h", "h^2", "1"])
        equal, report = verify_chain_reduction(theta, (0, 0))
        assert equal
        assert report["whole_dimension"] == 0
        assert report["chain_dimensions"] == [0, 1, 1]
        assert report["intersection_dimension"] == 0

    def test_random_gradings_on_diamond(self):
        rng = random.Random(54)
        g = cyclic_group(2)
        for _ in range(5):
            theta = random_grading(rng, CORPUS["diamond"], g)
            for multidegree in [(0, 0), (0, 0, 0), (0, 1, 1)]:
                equal, report = verify_chain_reduction(theta, multidegree)
                assert equal, report

    def test_whole_slice_lies_in_every_chain_slice(self):
        rng = random.Random(55)
        p = CORPUS["example"]
        g = cyclic_group(3)
        theta = random_grading(rng, p, g)
        multidegree = (0, 0)
        whole = identity_slice(theta, multidegree)
        for chain in maximal_chains(p):
            restricted = theta.restrict(subposet(p, chain), chain)
            piece = identity_slice(restricted, multidegree)
            for row in whole.basis.rows:
                assert piece.contains_vector(row)


class TestMonomialIdentities:
    def test_trivial_grading_has_none(self):
        theta = trivial_grading(CORPUS["c2"])
        assert monomial_identities(theta, 3) == set()

    def test_two_chain_square_of_top_degree(self):
        p = CORPUS["c2"]
        g = cyclic_group(2)
        theta = gm(p, g, ["1", "h"])
        h = g.index_of("h")
        assert monomial_identities(theta, 2) == {(h, h)}

    def test_three_chain_alternating_word_survives(self):
        # With theta = (1, h, 1) the word h,1,h chains through the middle:
        # e12 followed by e22 followed by e23 is nonzero.
        p = CORPUS["c3"]
        g = cyclic_group(2)
        theta = gm(p, g, ["1", "h", "1"])
        h = g.index_of("h")
        found = monomial_identities(theta, 3)
        assert (h, h, h) in found
        assert (h, g.identity, h) not in found

    def test_matches_product_oracle(self):
        rng = random.Random(56)
        cases = [
            (CORPUS["c2"], cyclic_group(2)),
            (CORPUS["c3"], cyclic_group(2)),
            (CORPUS["example"], cyclic_group(3)),
        ]
        for p, g in cases:
            theta = random_grading(rng, p, g)
            found = monomial_identities(theta, 3)
            for m in range(1, 4):
                for word in itertools.product(range(g.order), repeat=m):
                    assert (word in found) == monomial_vanishes_by_products(
                        theta, word)

    def test_degree_cap(self):
        theta = trivial_grading(CORPUS["c2"])
        with pytest.raises(CapExceededError):
            monomial_identities(theta, 5)


class TestTransitivityProbe:
    def test_two_chain_classes_separate(self):
        report = chain_transitivity_identity_check(
            CORPUS["c2"], cyclic_group(2))
        assert report["classes"] == 2
        assert report["pairs_checked"] == 1
        assert report["separated"]
        assert report["unseparated"] == []

    def test_singleton_poset(self):
        report = chain_transitivity_identity_check(
            CORPUS["c1"], cyclic_group(3))
        assert report["classes"] == 1
        assert report["pairs_checked"] == 0
        assert report["separated"]

    def test_three_chain_has_one_blind_pair(self):
        # (1,1,h) and (1,h,h) both make exactly the words with at most one
        # h-letter nonzero, so monomial identities cannot tell them apart.
        p = CORPUS["c3"]
        g = cyclic_group(2)
        report = chain_transitivity_identity_check(p, g)
        assert report["degree"] == 3
        assert report["classes"] == 4
        assert len(report["unseparated"]) == 1
        a, b = report["unseparated"][0]
        assert {a.theta, b.theta} == {(0, 0, 1), (0, 1, 1)}
        assert equivalent(a, b) is None
        sig_a = monomial_identities(a, 3)
        sig_b = monomial_identities(b, 3)
        assert sig_a == sig_b
        for word in sorted(sig_a):
            assert monomial_vanishes_by_products(a, word)
            assert monomial_vanishes_by_products(b, word)

    def test_diamond_blind_pairs(self):
        p = CORPUS["diamond"]
        g = cyclic_group(2)
        report = chain_transitivity_identity_check(p, g)
        got = {frozenset((a.theta, b.theta))
               for a, b in report["unseparated"]}
        assert got == {
            frozenset({(0, 0, 0, 1), (0, 0, 1, 1)}),
            frozenset({(0, 0, 0, 1), (0, 1, 1, 1)}),
            frozenset({(0, 0, 1, 0), (0, 1, 1, 0)}),
            frozenset({(0, 0, 1, 1), (0, 1, 1, 1)}),
        }
        for a, b in report["unseparated"]:
            assert equivalent(a, b) is None

    def test_requires_chain_transitivity(self):
        with pytest.raises(NotChainTransitiveError):
            chain_transitivity_identity_check(
                CORPUS["example"], cyclic_group(2))
        with pytest.raises(NotChainTransitiveError):
            chain_transitivity_identity_check(
                CORPUS["c2_disjoint_c3"], cyclic_group(2))

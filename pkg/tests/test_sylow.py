"""Sylow/Hall machinery tests against brute-force subgroup oracles."""

import math

import pytest

from treescale.acceptance import all_subgroups, find_conjugator
from treescale.errors import PreconditionError
from treescale.perm import PermGroup, Permutation
from treescale.supernat import prime_factors, valuation
from treescale.sylow import (SylowBasis, are_permutable, basis_normaliser,
                             core_commensurability_check, corpus, fitting,
                             is_normal_in, is_p_normal, p_core,
                             p_part_of_order, pi_core, subgroup_index,
                             sylow_basis, sylow_of_symmetric, sylow_subgroup,
                             verify_hall_covering)

V4 = PermGroup(4, ["(1 2)(3 4)", "(1 3)(2 4)"])


class TestSylowSubgroup:
    def test_sym4_two(self):
        assert sylow_subgroup(PermGroup.symmetric(4), 2).order() == 8

    def test_prime_not_dividing(self):
        assert sylow_subgroup(PermGroup.symmetric(4), 5).order() == 1

    def test_alt4_is_klein(self):
        p = sylow_subgroup(PermGroup.alternating(4), 2)
        assert p.element_set() == V4.element_set()

    def test_orders_across_corpus(self):
        for _, g in corpus():
            for p in (2, 3, 5, 7):
                assert sylow_subgroup(g, p).order() == p_part_of_order(g, p)

    def test_deterministic(self):
        a = sylow_subgroup(PermGroup.symmetric(4), 2)
        b = sylow_subgroup(PermGroup.symmetric(4), 2)
        assert a.generators == b.generators

    def test_conjugates_are_reachable(self):
        g = PermGroup.symmetric(4)
        p = sylow_subgroup(g, 3)
        other = p.conjugate(Permutation.parse("(1 4)", 4))
        assert find_conjugator(g, p, other) is not None

    def test_generic_algorithm_refuses_huge_groups(self):
        from treescale.errors import EnumerationBoundError
        with pytest.raises(EnumerationBoundError):
            sylow_subgroup(PermGroup.symmetric(15), 2)


class TestSylowOfSymmetric:
    def test_two_blocks(self):
        f = sylow_of_symmetric(6, 3)
        assert {g.cycle_string() for g in f.generators} == {"(1 2 3)", "(4 5 6)"}
        assert f.order() == 9
        # elementary abelian: commuting generators, exponent 3
        assert all(x.order() in (1, 3) for x in f.elements())

    def test_trivial_when_p_large(self):
        assert sylow_of_symmetric(4, 5).order() == 1

    def test_wreath_on_nine(self):
        f = sylow_of_symmetric(9, 3)
        assert f.order() == 81
        assert f.is_transitive()

    @pytest.mark.parametrize("k", range(1, 16))
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_order_is_p_part_of_factorial(self, k, p):
        expected = p ** valuation(math.factorial(k), p)
        assert sylow_of_symmetric(k, p).order() == expected

    @pytest.mark.parametrize("k", range(3, 8))
    def test_conjugate_to_generic_sylow(self, k):
        g = PermGroup.symmetric(k)
        for p in prime_factors(math.factorial(k)):
            built = sylow_of_symmetric(k, p)
            generic = sylow_subgroup(g, p)
            assert find_conjugator(g, built, generic) is not None


class TestCores:
    def test_p_core_sym4(self):
        assert p_core(PermGroup.symmetric(4), 2).element_set() == V4.element_set()
        assert p_core(PermGroup.symmetric(4), 3).order() == 1

    def test_p_core_of_p_group(self):
        d8 = PermGroup.dihedral(4)
        assert p_core(d8, 2).same_subgroup(d8)

    def test_p_core_contains_all_normal_p_subgroups(self):
        for _, g in corpus():
            for p in prime_factors(g.order()):
                core_set = p_core(g, p).element_set()
                for sub in all_subgroups(g):
                    n = len(sub)
                    if n == p ** valuation(n, p) and all(
                            x * s * x.inverse() in sub
                            for x in g.generators for s in sub):
                        assert sub <= core_set

    def test_pi_core_full(self):
        s4 = PermGroup.symmetric(4)
        assert pi_core(s4, {2, 3}).same_subgroup(s4)

    def test_fitting_sym4(self):
        assert fitting(PermGroup.symmetric(4)).element_set() == V4.element_set()

    def test_fitting_of_nilpotent(self):
        for g in (PermGroup.dihedral(4), PermGroup.cyclic(6)):
            assert fitting(g).same_subgroup(g)

    def test_p_normality(self):
        assert is_p_normal(PermGroup.alternating(4), 2)
        assert not is_p_normal(PermGroup.symmetric(4), 2)
        assert is_p_normal(PermGroup.dihedral(4), 2)


class TestBasis:
    def test_sym4_basis(self):
        basis = sylow_basis(PermGroup.symmetric(4))
        assert {p: m.order() for p, m in basis.members.items()} == {2: 8, 3: 3}
        assert basis.violations() == []

    def test_sym3xc3_basis(self):
        g = PermGroup(6, ["(1 2)", "(1 2 3)", "(4 5 6)"])
        basis = sylow_basis(g)
        assert {p: m.order() for p, m in basis.members.items()} == {2: 2, 3: 9}
        assert basis.violations() == []

    def test_nilpotent_basis_members_normal(self):
        g = PermGroup.cyclic(6)
        basis = sylow_basis(g)
        for member in basis.members.values():
            assert is_normal_in(member, g)

    def test_refuses_insoluble(self):
        with pytest.raises(PreconditionError):
            sylow_basis(PermGroup.alternating(5))

    def test_permutability_probe(self):
        s4 = PermGroup.symmetric(4)
        basis = sylow_basis(s4)
        assert are_permutable(basis.members[2], basis.members[3])


class TestBasisNormaliser:
    def test_sym4(self):
        s4 = PermGroup.symmetric(4)
        n = basis_normaliser(s4, sylow_basis(s4))
        assert n.order() == 2
        gen, = n.generators
        assert gen.order() == 2 and len(gen.cycles()) == 1  # a transposition

    def test_nilpotent_gives_whole_group(self):
        g = PermGroup.dihedral(4)
        assert basis_normaliser(g, sylow_basis(g)).same_subgroup(g)

    def test_sym3_explicit_basis(self):
        s3 = PermGroup.symmetric(3)
        basis = SylowBasis(s3, {2: PermGroup(3, ["(1 2)"]),
                                3: PermGroup(3, ["(1 2 3)"])})
        n = basis_normaliser(s3, basis)
        assert n.order() == 2
        assert Permutation.parse("(1 2)", 3) in n


class TestHallCovering:
    def test_sym4_alt4(self):
        s4 = PermGroup.symmetric(4)
        assert verify_hall_covering(s4, sylow_basis(s4), PermGroup.alternating(4))

    def test_nilpotent_trivial_kernel(self):
        g = PermGroup.cyclic(6)
        assert verify_hall_covering(g, sylow_basis(g), PermGroup.trivial(6))

    def test_precondition_failure_is_error(self):
        s4 = PermGroup.symmetric(4)
        with pytest.raises(PreconditionError):
            verify_hall_covering(s4, sylow_basis(s4), V4)


class TestCoreCommensurability:
    def test_sym4_alt4(self):
        assert core_commensurability_check(
            PermGroup.symmetric(4), PermGroup.alternating(4), [{2}])

    def test_reflexive(self):
        s4 = PermGroup.symmetric(4)
        assert core_commensurability_check(s4, s4, [{2}, {3}])

    def test_klein_kernel(self):
        assert core_commensurability_check(PermGroup.symmetric(4), V4, [{2}, {3}])

    def test_rejects_non_normal(self):
        with pytest.raises(PreconditionError):
            core_commensurability_check(
                PermGroup.symmetric(4), PermGroup(4, ["(1 2)"]), [{2}])

    def test_rejects_overlapping_sets(self):
        s4 = PermGroup.symmetric(4)
        with pytest.raises(PreconditionError):
            core_commensurability_check(s4, s4, [{2, 3}, {3}])


class TestIndex:
    def test_examples(self):
        s4 = PermGroup.symmetric(4)
        assert subgroup_index(s4, PermGroup.alternating(4)).render() == "2"
        assert subgroup_index(s4, s4).render() == "1"
        assert subgroup_index(s4, PermGroup(4, ["(1 2 3)"])).render() == "2^3"

    def test_rejects_non_subgroup(self):
        with pytest.raises(PreconditionError):
            subgroup_index(PermGroup.alternating(4), PermGroup(4, ["(1 2)"]))


def test_corpus_orders_and_solubility():
    expected = {"sym3": 6, "sym4": 24, "alt4": 12, "c6": 6, "d8": 8,
                "d12": 12, "sym3xc3": 18, "q8": 8, "v4": 4}
    groups = dict(corpus())
    assert {name: g.order() for name, g in groups.items()} == expected
    assert all(g.is_soluble() for g in groups.values())
    q8 = groups["q8"]
    assert q8.is_nilpotent()
    assert sum(1 for x in q8.elements() if x.order() == 2) == 1

"""Presented abelian groups: constructions and their universal properties."""

import random

import pytest

from preordgrp import fgabelian as ab
from preordgrp.errors import ValidationError
from preordgrp.intmat import IntMatrix

Z = ab.make_group(1, [])
Z2 = ab.make_group(1, [[2]])
Z4 = ab.make_group(1, [[4]])
ZZ = ab.make_group(2, [])


def rand_group(rng):
    r = rng.randint(0, 3)
    nrel = rng.randint(0, 2)
    return ab.make_group(
        r, [[rng.randint(-4, 4) for _ in range(r)] for _ in range(nrel)]
    )


def rand_mor(rng, dom, cod, tries=40):
    for _ in range(tries):
        rows = [[rng.randint(-4, 4) for _ in range(cod.rank)] for _ in range(dom.rank)]
        try:
            return ab.make_morphism(dom, cod, rows)
        except ValidationError:
            continue
    return ab.zero_morphism(dom, cod)


class TestGroupsAndElements:
    def test_element_eq_mod_torsion(self):
        assert ab.element_eq(Z2, (1,), (3,))
        assert not ab.element_eq(Z2, (1,), (2,))
        assert ab.element_eq(Z, (5,), (5,))
        assert not ab.element_eq(Z, (5,), (4,))

    def test_make_group_rejects_bad_shapes(self):
        with pytest.raises(ValidationError):
            ab.make_group(-1, [])
        with pytest.raises(ValidationError):
            ab.make_group(2, [[1]])

    def test_is_trivial(self):
        assert ab.is_trivial(ab.zero_group())
        assert ab.is_trivial(ab.make_group(1, [[1]]))
        assert not ab.is_trivial(Z2)


class TestMorphisms:
    def test_validation_requires_relations_to_map(self):
        with pytest.raises(ValidationError):
            ab.make_morphism(Z2, Z, [[1]])
        f = ab.make_morphism(Z2, Z4, [[2]])
        assert ab.apply(f, (1,)) == (2,)

    def test_compose_is_matrix_product(self):
        f = ab.make_morphism(Z, Z, [[2]])
        g = ab.make_morphism(Z, Z, [[3]])
        assert ab.compose(f, g).matrix.to_rows() == ((6,),)

    def test_morphism_eq_is_congruence(self):
        f = ab.make_morphism(Z, Z2, [[1]])
        g = ab.make_morphism(Z, Z2, [[3]])
        assert ab.morphism_eq(f, g)
        assert not ab.morphism_eq(f, ab.make_morphism(Z, Z2, [[2]]))


class TestKernelCokernel:
    def test_kernel_of_injection_is_zero(self):
        f = ab.make_morphism(Z, Z, [[2]])
        K, incl = ab.kernel(f)
        assert K.rank == 0
        assert ab.is_injective(f)

    def test_kernel_of_quotient_is_even_integers(self):
        qm = ab.make_morphism(Z, Z2, [[1]])
        K, incl = ab.kernel(qm)
        assert K.rank == 1 and K.relations.rows == 0
        img = incl.matrix.row(0)
        assert img in {(2,), (-2,)}

    def test_cokernel_of_times_two(self):
        f = ab.make_morphism(Z, Z, [[2]])
        Q, proj = ab.cokernel(f)
        assert Q == Z2
        assert ab.is_surjective(proj)

    def test_cokernel_of_zero_is_identity_target(self):
        f = ab.zero_morphism(Z, Z)
        Q, proj = ab.cokernel(f)
        assert Q == Z

    def test_universal_properties_random(self):
        rng = random.Random(424242)
        for _ in range(200):
            A, B = rand_group(rng), rand_group(rng)
            f = rand_mor(rng, A, B)
            K, k = ab.kernel(f)
            assert ab.morphism_eq(ab.compose(k, f), ab.zero_morphism(K, B))
            assert ab.is_injective(k)
            assert ab.factorization_unique_through(k)
            C = rand_group(rng)
            g = rand_mor(rng, C, A)
            if ab.morphism_eq(ab.compose(g, f), ab.zero_morphism(C, B)):
                phi = ab.factor_through_injection(g, k)
                assert phi is not None
                assert ab.morphism_eq(ab.compose(phi, k), g)
            Q, q = ab.cokernel(f)
            assert ab.morphism_eq(ab.compose(f, q), ab.zero_morphism(A, Q))
            assert ab.is_surjective(q)
            h = rand_mor(rng, B, C)
            if ab.morphism_eq(ab.compose(f, h), ab.zero_morphism(A, C)):
                psi = ab.factor_through_surjection(h, q)
                assert psi is not None
                assert ab.morphism_eq(ab.compose(q, psi), h)


class TestSubgroupsQuotients:
    def test_subgroup_of_z_is_gcd(self):
        S, incl = ab.subgroup_generated(Z, [[4], [6]])
        assert S.rank == 1 and S.relations.rows == 0
        assert incl.matrix.row(0) in {(2,), (-2,)}

    def test_subgroup_empty_generators(self):
        S, incl = ab.subgroup_generated(Z, [])
        assert S.rank == 0

    def test_torsion_subgroup_presentation(self):
        # <2> inside Z/4 is a cyclic group of order 2
        S, incl = ab.subgroup_generated(Z4, [[2]])
        assert S.rank == 1
        assert S.relations.to_rows() == ((2,),)
        assert ab.element_eq(Z4, incl.matrix.row(0), (2,))

    def test_quotient(self):
        S, incl = ab.subgroup_generated(ZZ, [[1, 0]])
        Q, proj = ab.quotient_by_subgroup(ZZ, incl)
        assert Q.relations.to_rows() == ((1, 0),)
        assert ab.is_surjective(proj)

    def test_subgroup_inclusions_are_injective_random(self):
        rng = random.Random(7)
        for _ in range(100):
            g = rand_group(rng)
            gens = [
                [rng.randint(-4, 4) for _ in range(g.rank)]
                for _ in range(rng.randint(0, 3))
            ]
            S, incl = ab.subgroup_generated(g, gens)
            assert ab.is_injective(incl)
            # each original generator factors through the inclusion
            for row in gens:
                alpha = ab.make_morphism(Z, g, [row])
                assert ab.factor_through_injection(alpha, incl) is not None


class TestDirectSum:
    def test_z_plus_z2(self):
        ds = ab.direct_sum(Z, Z2)
        assert ds.group.rank == 2
        assert ds.group.relations.to_rows() == ((0, 2),)
        assert ab.morphism_eq(
            ab.compose(ds.inj_left, ds.proj_left), ab.identity_morphism(Z)
        )
        assert ab.morphism_eq(
            ab.compose(ds.inj_right, ds.proj_right), ab.identity_morphism(Z2)
        )
        assert ab.morphism_eq(
            ab.compose(ds.inj_left, ds.proj_right), ab.zero_morphism(Z, Z2)
        )


class TestFactorizations:
    def test_through_injection(self):
        _, i2 = ab.subgroup_generated(Z, [[2]])
        six = ab.make_morphism(Z, Z, [[6]])
        phi = ab.factor_through_injection(six, i2)
        assert phi is not None
        assert ab.morphism_eq(ab.compose(phi, i2), six)
        assert ab.factor_through_injection(ab.make_morphism(Z, Z, [[5]]), i2) is None

    def test_through_surjection(self):
        beta = ab.make_morphism(Z, Z2, [[1]])
        pr4 = ab.make_morphism(Z, Z4, [[1]])
        psi = ab.factor_through_surjection(beta, pr4)
        assert psi is not None
        assert ab.morphism_eq(ab.compose(pr4, psi), beta)
        # through x2 there is no factorization: 1 is not in the image
        times2 = ab.make_morphism(Z, Z, [[2]])
        assert ab.factor_through_surjection(beta, times2) is None

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoalg import (
    MonomialIdeal,
    analyze,
    betti_ideal,
    betti_multigraded,
    decompose,
    depth_of,
    full_report,
    reg_of,
    validate,
)
from monoalg.errors import (
    InvalidCharacteristicError,
    NotHomogeneousError,
    NotSimplicialError,
)
from monoalg.homology import check_characteristic, matrix_rank
from monoalg.sweep import random_simplicial_instance
from conftest import NONSIMPLICIAL_GENS
from oracles import taylor_euler_matches

exponents = st.lists(st.integers(0, 3), min_size=2, max_size=4)


def small_ideals(draw_vars, draw_gens):
    return st.integers(2, 4).flatmap(
        lambda d: st.lists(
            st.lists(st.integers(0, 3), min_size=d, max_size=d).filter(any),
            min_size=1, max_size=4, unique_by=tuple))


class TestMatrixRank:
    def test_rational_vs_mod(self):
        mat = [[2, 4], [1, 2]]
        assert matrix_rank(mat, 0) == 1
        assert matrix_rank(mat, 3) == 1
        # rank can drop in finite characteristic
        assert matrix_rank([[2]], 0) == 1
        assert matrix_rank([[2]], 2) == 0

    def test_characteristic_validation(self):
        check_characteristic(0)
        check_characteristic(2)
        check_characteristic(101)
        for bad in (1, 4, 6, -3, 9):
            with pytest.raises(InvalidCharacteristicError):
                check_characteristic(bad)


class TestBettiFixtures:
    def test_koszul_three_variables(self):
        table = betti_ideal(
            MonomialIdeal.from_gens(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
        assert table.entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
        assert reg_of(table) == 1
        assert depth_of(table, 3) == 1

    def test_complete_intersection(self):
        table = betti_ideal(MonomialIdeal.from_gens(2, [(2, 0), (0, 1)]))
        assert table.entries == {(0, 1): 1, (0, 2): 1, (1, 3): 1}
        assert reg_of(table) == 2
        assert depth_of(table, 2) == 1

    def test_unit(self):
        table = betti_ideal(MonomialIdeal.unit(3))
        assert table.entries == {(0, 0): 1}
        assert reg_of(table) == 0
        assert depth_of(table, 3) == 3

    def test_principal_single_variable(self):
        table = betti_ideal(MonomialIdeal.from_gens(1, [(5,)]))
        assert table.entries == {(0, 5): 1}
        assert depth_of(table, 1) == 1

    def test_two_skew_squares(self):
        # <x^2, y^2>: complete intersection, one linear syzygy in degree 4
        table = betti_ideal(MonomialIdeal.from_gens(2, [(2, 0), (0, 2)]))
        assert table.entries == {(0, 2): 2, (1, 4): 1}
        assert reg_of(table) == 3


class TestBettiInvariants:
    def test_beta_zero_matches_minimal_generators(self):
        ideal = MonomialIdeal.from_gens(3, [(2, 1, 0), (0, 2, 1), (1, 0, 2)])
        multi = betti_multigraded(ideal)
        degree_zero = {b for (i, b) in multi if i == 0}
        assert degree_zero == set(ideal.gens)
        assert all(multi[(0, b)] == 1 for b in degree_zero)

    def test_variable_permutation_invariance(self):
        gens = [(2, 1, 0), (0, 2, 1), (1, 0, 2), (1, 1, 1)]
        base = betti_ideal(MonomialIdeal.from_gens(3, gens))
        for perm in itertools.permutations(range(3)):
            permuted = [tuple(g[p] for p in perm) for g in gens]
            table = betti_ideal(MonomialIdeal.from_gens(3, permuted))
            assert table.entries == base.entries

    @given(small_ideals(None, None))
    @settings(max_examples=60, deadline=None)
    def test_taylor_euler_characteristic(self, gens):
        ideal = MonomialIdeal.from_gens(len(gens[0]), gens)
        multi = betti_multigraded(ideal)
        probes = {b for (_, b) in multi}
        probes.add(tuple(max(g[k] for g in ideal.gens) + 1
                         for k in range(ideal.num_vars)))
        for probe in probes:
            assert taylor_euler_matches(ideal.gens, multi, probe)

    def test_homological_index_bound(self):
        ideal = MonomialIdeal.from_gens(4, [(1, 1, 0, 0), (0, 1, 1, 0),
                                            (0, 0, 1, 1), (1, 0, 0, 1)])
        for (i, _b) in betti_multigraded(ideal):
            assert i <= 3


class TestAnalyze:
    def test_example(self, sec3):
        report = analyze(sec3)
        assert report.regularity == 2
        assert report.degree == 8
        assert report.codim == 4
        assert report.eg_bound == 4
        assert report.eg_holds
        assert report.depth == 1
        regs = {reg + deg for (_c, reg, deg) in report.witnesses}
        assert regs == {2}

    def test_free(self):
        report = analyze(validate([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
        assert report.regularity == 0
        assert report.degree == 1
        assert report.codim == 0
        assert report.depth == 3
        assert report.eg_holds

    def test_quartic_equality_case(self, quartic):
        report = analyze(quartic)
        assert report.regularity == 2
        assert report.degree == 4
        assert report.codim == 2
        assert report.eg_bound == 2
        assert report.eg_holds

    def test_rejects_not_homogeneous(self):
        with pytest.raises(NotHomogeneousError):
            analyze(validate([(2,), (3,)]))

    def test_rejects_not_simplicial(self):
        with pytest.raises(NotSimplicialError):
            analyze(validate(NONSIMPLICIAL_GENS))

    def test_rejects_bad_characteristic(self, sec3):
        with pytest.raises(InvalidCharacteristicError):
            analyze(sec3, 4)

    def test_characteristic_independence_when_buchsbaum(self, sec3):
        r0 = analyze(sec3, 0)
        r2 = analyze(sec3, 2)
        assert r0 == r2

    def test_randomized_consistency(self):
        rng = random.Random(4242)
        produced = 0
        while produced < 30:
            inst = random_simplicial_instance(
                rng, rng.randint(1, 3), rng.randint(1, 5), rng.randint(0, 3))
            if inst is None:
                continue
            produced += 1
            dec = decompose(inst)
            report = analyze(inst, 0, dec)
            props = full_report(inst, dec)
            assert report.eg_bound == report.degree - report.codim
            assert report.eg_holds == (report.regularity <= report.eg_bound)
            if any([props.seminormal, props.normal, props.cohen_macaulay,
                    props.buchsbaum, props.gorenstein]):
                assert report.eg_holds, inst.generators
            if props.buchsbaum:
                assert analyze(inst, 2, dec) == report

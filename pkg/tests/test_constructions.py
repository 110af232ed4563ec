import itertools
import random

import numpy as np
import pytest

from conftest import assert_tensor_matches_oracle

from cohconf.core import Graph, is_association_scheme, verify_coherence
from cohconf.constructions import (
    Design,
    block_graph,
    disjoint_union_complete,
    distance_partition,
    fano_incidence_graph,
    heawood_line_scheme,
    line_graph,
    orbital_config,
    paley_graph,
    paley_tournament,
    petersen_graph,
    srg_parameters,
    steiner_triple_system,
    triangular_graph,
)
from cohconf.errors import BadModulus, BadOrder, Disconnected, NotCoherent
from cohconf.spectra import SrgParams, complement_params, stratum_dimensions, MultiplicityPattern
from cohconf.wl import from_graph, wl_closure


def brute_force_common_neighbours(g: Graph):
    a = g.adjacency
    lam, mu = set(), set()
    for i in range(g.n):
        for j in range(g.n):
            if i == j:
                continue
            common = int((a[i] & a[j]).sum())
            (lam if a[i, j] else mu).add(common)
    return lam, mu


def test_paley5_is_c5():
    g = paley_graph(5)
    assert srg_parameters(g) == SrgParams(5, 2, 0, 1)
    lam, mu = brute_force_common_neighbours(g)
    assert lam == {0} and mu == {1}


def test_paley13():
    g = paley_graph(13)
    assert srg_parameters(g) == SrgParams(13, 6, 2, 3)


def test_paley_self_complementary_params():
    for q in (5, 13):
        p = srg_parameters(paley_graph(q))
        assert complement_params(p) == p


def test_paley_bad_modulus():
    with pytest.raises(BadModulus):
        paley_graph(7)
    with pytest.raises(BadModulus):
        paley_graph(9)   # prime power, not prime
    with pytest.raises(BadModulus):
        paley_tournament(5)


def test_paley_tournament7():
    part = paley_tournament(7)
    cc = verify_coherence(part)
    assert cc.rank == 3
    assert cc.converse[1] == 2
    assert cc.valencies == (1, 3, 3)
    # joint domination: for (u,v) in any class, |{w : u->w, v->w}| = 1
    assert cc.intersection_number(1, 2, 1) == 1
    assert cc.intersection_number(1, 2, 2) == 1


def test_paley_tournament3():
    cc = verify_coherence(paley_tournament(3))
    assert cc.rank == 3 and cc.valencies == (1, 1, 1)


def test_triangular_graphs():
    assert srg_parameters(triangular_graph(5)) == SrgParams(10, 6, 3, 4)
    assert srg_parameters(triangular_graph(5).complement()) == SrgParams(10, 3, 0, 1)
    assert srg_parameters(triangular_graph(6)) == SrgParams(15, 8, 4, 4)
    assert srg_parameters(triangular_graph(7)) == SrgParams(21, 10, 5, 4)
    lam, mu = brute_force_common_neighbours(triangular_graph(6))
    assert lam == {4} and mu == {4}


def test_petersen():
    assert srg_parameters(petersen_graph()) == SrgParams(10, 3, 0, 1)


def test_sts_small():
    fano = steiner_triple_system(7)
    assert len(fano.blocks) == 7
    sts13 = steiner_triple_system(13)
    assert len(sts13.blocks) == 26
    for v in (7, 9, 13, 15, 19, 21, 25, 27):
        d = steiner_triple_system(v)
        assert len(d.blocks) == v * (v - 1) // 6
        assert d.block_size == 3
        # Design.__post_init__ has already verified exact pair coverage;
        # re-check independently here
        cover = {}
        for b in d.blocks:
            for pair in itertools.combinations(b, 2):
                cover[pair] = cover.get(pair, 0) + 1
        assert len(cover) == v * (v - 1) // 2
        assert set(cover.values()) == {1}


def test_sts_bad_order():
    for v in (8, 11, 6, 5):
        with pytest.raises(BadOrder):
            steiner_triple_system(v)


def test_design_validation():
    with pytest.raises(ValueError):
        Design(7, ((0, 1, 2), (0, 1, 3)))  # pair (0,1) covered twice


def test_block_graph_sts13():
    bg = block_graph(steiner_triple_system(13))
    assert srg_parameters(bg) == SrgParams(26, 15, 8, 9)
    cc = verify_coherence(from_graph(bg).to_partition())
    assert stratum_dimensions(cc) == MultiplicityPattern.of(1, 12, 13)


def test_block_graph_sts7_complete():
    bg = block_graph(steiner_triple_system(7))
    assert bg.n == 7
    assert bg.adjacency.sum() == 7 * 6  # K7: every two Fano lines meet


def test_block_graph_sts9():
    bg = block_graph(steiner_triple_system(9))
    p = srg_parameters(bg)
    assert p is not None and p.n == 12
    lam, mu = brute_force_common_neighbours(bg)
    assert len(lam) == 1 and len(mu) == 1


def test_heawood_line_scheme():
    cc = heawood_line_scheme()
    assert cc.n == 21 and cc.rank == 4
    assert tuple(cc.valencies[i] for i in cc.off_diagonal_classes()) == (4, 8, 8)
    assert is_association_scheme(cc)
    assert stratum_dimensions(cc) == MultiplicityPattern.of(1, 6, 6, 8)
    # exact eigenvalue 1 + sqrt(2) of the valency-4 class, measured numerically
    evs = np.linalg.eigvalsh(cc.class_matrix(cc.off_diagonal_classes()[0]).astype(float))
    assert min(abs(evs - (1 + np.sqrt(2)))) < 1e-9
    assert_tensor_matches_oracle(cc)


def test_fano_incidence_graph():
    g = fano_incidence_graph()
    assert g.n == 14
    assert set(g.degree_sequence()) == {3}


def test_disjoint_union():
    g = disjoint_union_complete(5, 3)
    assert g.n == 15 and set(g.degree_sequence()) == {2}
    g2 = disjoint_union_complete(3, 2)
    assert srg_parameters(g2) == SrgParams(6, 1, 0, 0)
    g3 = disjoint_union_complete(1, 4)
    assert g3.n == 4 and set(g3.degree_sequence()) == {3}


def test_line_graph_k4():
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    lg = line_graph(k4)
    t4 = triangular_graph(4)
    assert lg.n == t4.n == 6
    assert set(lg.degree_sequence()) == {4}
    assert np.array_equal(lg.adjacency, t4.adjacency)


def test_distance_partition_petersen():
    col = distance_partition(petersen_graph())
    cc = verify_coherence(col.to_partition())
    assert cc.rank == 3


def test_distance_partition_path_not_coherent():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotCoherent):
        verify_coherence(distance_partition(g).to_partition())


def test_distance_partition_disconnected():
    with pytest.raises(Disconnected):
        distance_partition(disjoint_union_complete(2, 3))


def test_orbital_configs():
    cyc = orbital_config([[1, 2, 3, 4, 0]], 5)
    assert cyc.r == 5
    assert verify_coherence(cyc).is_homogeneous
    dihedral = orbital_config([[1, 2, 3, 4, 0], [0, 4, 3, 2, 1]], 5)
    assert dihedral.r == 3
    sym = orbital_config([[1, 0, 2, 3], [1, 2, 3, 0]], 4)
    assert sym.r == 2


def test_orbital_configs_random_generators():
    rng = random.Random(777)
    for _ in range(50):
        degree = rng.randint(2, 12)
        gens = []
        for _ in range(rng.randint(1, 3)):
            perm = list(range(degree))
            rng.shuffle(perm)
            gens.append(perm)
        cc = verify_coherence(orbital_config(gens, degree))
        assert cc.rank >= 1


def test_orbital_rejects_non_permutation():
    with pytest.raises(ValueError):
        orbital_config([[0, 0, 1]], 3)


def test_constructed_srgs_close_to_rank3():
    for g in (paley_graph(5), paley_graph(13), triangular_graph(5), triangular_graph(6),
              petersen_graph(), block_graph(steiner_triple_system(9))):
        cc = wl_closure(from_graph(g))
        assert cc.rank == 3

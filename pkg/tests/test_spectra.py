from fractions import Fraction

import numpy as np
import pytest

from cohconf.core import verify_coherence
from cohconf.constructions import (
    disjoint_union_complete,
    heawood_line_scheme,
    paley_graph,
    petersen_graph,
    srg_parameters,
    triangular_graph,
)
from cohconf.errors import (
    NegativeDiscriminant,
    NonIntegralMultiplicity,
    NotHomogeneous,
)
from cohconf.exactnum import QuadraticNumber
from cohconf.spectra import (
    MultiplicityPattern,
    SpectralTable,
    SrgParams,
    basic_feasibility,
    perron_check,
    srg_spectrum,
    stratum_dimensions,
    trace_identities,
)
from cohconf.wl import from_graph


def eig_multiplicities(adjacency: np.ndarray, tol: float = 1e-7) -> tuple[int, ...]:
    """Oracle: numpy eigendecomposition clustered into multiplicities."""
    evs = np.sort(np.linalg.eigvalsh(adjacency.astype(float)))
    sizes, start = [], 0
    for i in range(1, len(evs)):
        if evs[i] - evs[i - 1] > tol:
            sizes.append(i - start)
            start = i
    sizes.append(len(evs) - start)
    return tuple(sorted(sizes))


def test_srg_spectrum_petersen():
    spec = srg_spectrum(SrgParams(10, 3, 0, 1))
    assert (spec.k, spec.f, spec.g, spec.conference) == (3, 5, 4, False)
    assert spec.r == QuadraticNumber(1) and spec.s == QuadraticNumber(-2)
    # oracle: numerical spectrum of the constructed graph
    assert eig_multiplicities(petersen_graph().adjacency) == (1, 4, 5)


def test_srg_spectrum_paley13_conference():
    spec = srg_spectrum(SrgParams(13, 6, 2, 3))
    assert spec.conference and spec.f == spec.g == 6
    assert spec.r == QuadraticNumber(Fraction(-1, 2), Fraction(1, 2), 13)
    assert eig_multiplicities(paley_graph(13).adjacency) == (1, 6, 6)


def test_srg_spectrum_infeasible():
    with pytest.raises(NonIntegralMultiplicity):
        srg_spectrum(SrgParams(26, 10, 8, 9))
    with pytest.raises(NegativeDiscriminant):
        srg_spectrum(SrgParams(10, 2, 5, 5))


def test_spectrum_invariants_exact():
    # k + f r + g s = 0 and k^2 + f r^2 + g s^2 = n k, exactly
    for p in (SrgParams(10, 3, 0, 1), SrgParams(13, 6, 2, 3), SrgParams(15, 6, 1, 3),
              SrgParams(26, 15, 8, 9), SrgParams(57, 14, 1, 4), SrgParams(6, 1, 0, 0)):
        spec = srg_spectrum(p)
        zero = spec.k + spec.f * spec.r + spec.g * spec.s
        assert zero == QuadraticNumber(0)
        sq = spec.k * spec.k + spec.f * (spec.r * spec.r) + spec.g * (spec.s * spec.s)
        assert sq == QuadraticNumber(p.n * p.k)


def test_basic_feasibility_examples():
    v = basic_feasibility(SrgParams(15, 6, 1, 3))
    assert v and v.spectrum.pattern() == MultiplicityPattern.of(1, 5, 9)
    assert basic_feasibility(SrgParams(57, 14, 1, 4)).feasible
    bad = basic_feasibility(SrgParams(10, 3, 3, 4))
    assert not bad and "counting identity" in bad.reason
    assert not basic_feasibility(SrgParams(26, 10, 8, 9))
    # degenerate union cases stay feasible
    union = basic_feasibility(SrgParams(6, 1, 0, 0))
    assert union and union.degenerate
    cocktail = basic_feasibility(SrgParams(12, 10, 8, 10))
    assert cocktail and cocktail.degenerate


def test_conference_iff_equal_multiplicities_up_to_200():
    # brute-force all feasible parameter tuples with n <= 200
    checked = 0
    for n in range(5, 201):
        for k in range(1, n - 1):
            for lam in range(0, k):
                num = k * (k - lam - 1)
                den = n - k - 1
                if num % den:
                    continue
                mu = num // den
                if mu > k:
                    continue
                try:
                    spec = srg_spectrum(SrgParams(n, k, lam, mu))
                except (NonIntegralMultiplicity, NegativeDiscriminant):
                    continue
                assert (spec.f == spec.g) == spec.conference, (n, k, lam, mu)
                checked += 1
    assert checked > 500


def test_stratum_dimensions_examples():
    pet = verify_coherence(from_graph(petersen_graph()).to_partition())
    assert stratum_dimensions(pet) == MultiplicityPattern.of(1, 4, 5)
    heawood = heawood_line_scheme()
    assert stratum_dimensions(heawood) == MultiplicityPattern.of(1, 6, 6, 8)
    # trivial rank-2 scheme on n points
    import cohconf.core as core

    cell = np.ones((8, 8), dtype=np.int64)
    np.fill_diagonal(cell, 0)
    triv = verify_coherence(core.RelationPartition(8, 2, cell))
    assert stratum_dimensions(triv) == MultiplicityPattern.of(1, 7)


def test_stratum_dimensions_stable_across_draws():
    pet = verify_coherence(from_graph(petersen_graph()).to_partition())
    assert stratum_dimensions(pet, seed=123, draws=5) == MultiplicityPattern.of(1, 4, 5)
    for seed in range(5):
        assert stratum_dimensions(pet, seed=seed) == MultiplicityPattern.of(1, 4, 5)


def test_stratum_dimensions_match_exact_multiplicities():
    # five independent draws agree, and the measured dims equal exact (1,f,g)
    for g in (petersen_graph(), paley_graph(13), triangular_graph(6), triangular_graph(7)):
        params = srg_parameters(g)
        spec = srg_spectrum(params)
        cc = verify_coherence(from_graph(g).to_partition())
        assert stratum_dimensions(cc, draws=5) == spec.pattern()
    assert stratum_dimensions(heawood_line_scheme(), draws=5) == MultiplicityPattern.of(1, 6, 6, 8)


def test_seed_env_override(monkeypatch):
    from cohconf.spectra import resolve_seed

    assert resolve_seed(41) == 41
    monkeypatch.setenv("COHCONF_SEED", "977")
    assert resolve_seed() == 977
    assert resolve_seed(41) == 41          # explicit argument wins
    monkeypatch.delenv("COHCONF_SEED")
    assert resolve_seed() == 0
    pet = verify_coherence(from_graph(petersen_graph()).to_partition())
    monkeypatch.setenv("COHCONF_SEED", "31415")
    assert stratum_dimensions(pet) == MultiplicityPattern.of(1, 4, 5)


def test_stratum_dimensions_directed_symmetrizes():
    from cohconf.constructions import paley_tournament

    cc = verify_coherence(paley_tournament(7))
    assert stratum_dimensions(cc) == MultiplicityPattern.of(1, 6)


def test_stratum_requires_homogeneous_and_commutative():
    import cohconf.core as core
    from cohconf.wl import wl_closure

    hetero = wl_closure(from_graph(core.Graph.from_edges(3, [(0, 1), (1, 2)])))
    assert not hetero.is_homogeneous
    with pytest.raises(NotHomogeneous):
        stratum_dimensions(hetero)


def test_trace_identities_paley13():
    spec = srg_spectrum(SrgParams(13, 6, 2, 3))
    table = SpectralTable.from_srg(SrgParams(13, 6, 2, 3), spec)
    cc = verify_coherence(from_graph(paley_graph(13)).to_partition())
    assert trace_identities(table, cc)


def test_trace_identities_petersen_and_corruption():
    p = SrgParams(10, 3, 0, 1)
    table = SpectralTable.from_srg(p)
    assert trace_identities(table)
    bad = SpectralTable.build(
        10, (3, 6),
        [(5, (QuadraticNumber(1), QuadraticNumber(-2))),
         (5, (QuadraticNumber(-2), QuadraticNumber(1)))],
    )
    verdict = trace_identities(bad)
    assert not verdict
    assert "multiplicities sum to 11" in verdict.first_failure


def test_trace_identities_wrong_eigenvalue():
    bad = SpectralTable.build(
        10, (3, 6),
        [(5, (QuadraticNumber(1), QuadraticNumber(-2))),
         (4, (QuadraticNumber(-1), QuadraticNumber(0)))],
    )
    verdict = trace_identities(bad)
    assert not verdict and verdict.failures


def test_trace_identities_mixed_radicands_fail_gracefully():
    # a claimed table whose eigenvalues come from different quadratic fields
    # must be judged, not rejected with an arithmetic error
    bad = SpectralTable.build(
        10, (3, 6),
        [(5, (QuadraticNumber(0, 1, 2), QuadraticNumber(0, 1, 3))),
         (4, (QuadraticNumber(0, -1, 2), QuadraticNumber(0, -1, 3)))],
    )
    verdict = trace_identities(bad)
    assert not verdict
    assert any("sqrt" in f for f in verdict.failures)


def test_perron_union_of_triangles():
    g = disjoint_union_complete(5, 3)
    cc = verify_coherence(from_graph(g).to_partition())
    verdicts = {v.class_index: v for v in perron_check(cc)}
    by_valency = {cc.valencies[i]: v for i, v in verdicts.items()}
    assert by_valency[2].components == 5          # the K3 edge class
    assert by_valency[12].components == 1
    assert by_valency[12].dominant


def test_perron_petersen_and_c5():
    pet = verify_coherence(from_graph(petersen_graph()).to_partition())
    for v in perron_check(pet):
        assert v.components == 1 and v.dominant
        assert v.max_other_modulus < v.valency
    c5 = verify_coherence(from_graph(paley_graph(5)).to_partition())
    for v in perron_check(c5):
        assert v.components == 1 and v.dominant


def test_perron_bipartite_not_dominant():
    import cohconf.core as core

    c4 = core.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    from cohconf.wl import wl_closure

    cc = wl_closure(from_graph(c4))
    edge_class = [i for i in cc.off_diagonal_classes() if cc.valencies[i] == 2][0]
    verdict = [v for v in perron_check(cc) if v.class_index == edge_class][0]
    assert verdict.components == 1
    assert verdict.bipartite and not verdict.dominant

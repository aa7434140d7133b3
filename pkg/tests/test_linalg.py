import numpy as np
import pytest

from forcekit.forcing import Rule
from forcekit.graphs import build_family, connected_components, parse_family
from forcekit.linalg import (
    PatternMatrix,
    PatternMismatchError,
    kernel_basis,
    matrix_to_text,
    numerical_rank,
    rank_lower_bound_check,
    sample_pattern_matrix,
    shifted_singular_matrix,
    support_implies_failed,
    support_zero_set,
    weighted_laplacian,
)

from conftest import seeded_random_graph


def fam(text):
    return build_family(parse_family(text))


def pattern_of(entries, tol=1e-12):
    n = entries.shape[0]
    return {(i, j) for i in range(n) for j in range(i + 1, n)
            if abs(entries[i, j]) > tol}


class TestSampling:
    def test_empty_graph_gives_diagonal(self):
        m = sample_pattern_matrix(fam("empty:3"), seed=1)
        assert pattern_of(m.entries) == set()
        assert np.count_nonzero(m.entries - np.diag(np.diag(m.entries))) == 0

    def test_p2_offdiagonal_nonzero(self):
        m = sample_pattern_matrix(fam("path:2"), seed=2)
        assert abs(m.entries[0, 1]) >= 0.5

    @pytest.mark.parametrize("seed", range(8))
    def test_pattern_roundtrip(self, seed):
        g = seeded_random_graph(seed, 3 + seed % 6)
        m = sample_pattern_matrix(g, seed)
        assert pattern_of(m.entries) == set(g.edges())

    def test_deterministic_per_seed(self):
        g = fam("wheel:6")
        a = sample_pattern_matrix(g, 7).entries
        b = sample_pattern_matrix(g, 7).entries
        assert np.array_equal(a, b)

    def test_edge_magnitudes_in_band(self):
        m = sample_pattern_matrix(fam("complete:6"), seed=3)
        off = [abs(m.entries[i, j]) for i, j in pattern_of(m.entries)]
        assert all(0.5 <= v <= 2.0 for v in off)

    def test_shifted_matrix_is_singular_same_pattern(self):
        for seed in range(6):
            g = seeded_random_graph(seed + 100, 5)
            m = shifted_singular_matrix(g, seed)
            assert pattern_of(m.entries) == set(g.edges())
            assert len(kernel_basis(m)) >= 1


class TestValidation:
    def test_rejects_asymmetric(self):
        g = fam("path:2")
        with pytest.raises(PatternMismatchError):
            PatternMatrix(g, np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_rejects_zero_at_edge(self):
        g = fam("path:2")
        with pytest.raises(PatternMismatchError):
            PatternMatrix(g, np.zeros((2, 2)))

    def test_rejects_nonzero_at_nonedge(self):
        g = fam("empty:2")
        with pytest.raises(PatternMismatchError):
            PatternMatrix(g, np.array([[0.0, 1.0], [1.0, 0.0]]))

    def test_rejects_wrong_shape(self):
        with pytest.raises(PatternMismatchError):
            PatternMatrix(fam("path:3"), np.zeros((2, 2)))


class TestLaplacian:
    def test_c4_unit_weights_spectrum(self):
        m = weighted_laplacian(fam("cycle:4"), seed=0, weight_range=(1.0, 1.0))
        eig = np.sort(np.linalg.eigvalsh(m.entries))
        assert np.allclose(eig, [0.0, 2.0, 2.0, 4.0], atol=1e-9)

    @pytest.mark.parametrize("text,comps", [
        ("wheel:7", 1), ("cycle:3+path:2", 2), ("empty:3", 3),
        ("path:3+path:4+cycle:3", 3),
    ])
    def test_nullity_counts_components(self, text, comps):
        g = fam(text)
        assert len(connected_components(g)) == comps
        m = weighted_laplacian(g, seed=4)
        assert len(kernel_basis(m)) == comps
        assert m.psd

    @pytest.mark.parametrize("seed", range(6))
    def test_psd_certified(self, seed):
        g = seeded_random_graph(seed + 50, 8)
        m = weighted_laplacian(g, seed)
        eig = np.linalg.eigvalsh(m.entries)
        norm = np.linalg.norm(m.entries)
        assert eig.min() >= -1e-10 * max(norm, 1.0)


class TestKernelBasis:
    def test_connected_laplacian_spans_ones(self):
        m = weighted_laplacian(fam("wheel:6"), seed=1)
        basis = kernel_basis(m)
        assert len(basis) == 1
        v = basis[0]
        assert np.allclose(v, v[0] * np.ones_like(v), atol=1e-9)

    def test_identity_has_trivial_kernel(self):
        m = PatternMatrix(fam("empty:4"), np.eye(4))
        assert kernel_basis(m) == []

    def test_diagonal_zero_entry(self):
        m = PatternMatrix(fam("empty:3"), np.diag([2.0, 0.0, -1.0]))
        basis = kernel_basis(m)
        assert len(basis) == 1
        assert support_zero_set(basis[0]) == 0b101

    def test_zero_matrix_full_kernel(self):
        m = PatternMatrix(fam("empty:2"), np.zeros((2, 2)))
        assert len(kernel_basis(m)) == 2

    def test_orthonormal(self):
        m = weighted_laplacian(fam("empty:3+path:2"), seed=9)
        basis = np.array(kernel_basis(m))
        assert np.allclose(basis @ basis.T, np.eye(len(basis)), atol=1e-9)


class TestSupportImpliesFailed:
    def test_random_samples_on_c5(self):
        g = fam("cycle:5")
        for seed in range(50):
            rep = support_implies_failed(g, sample_pattern_matrix(g, seed),
                                         Rule.STANDARD, trials=5, seed=seed)
            assert rep.passed

    def test_singular_matrices_on_families(self):
        for text in ("cycle:5", "path:7", "wheel:6", "biclique:3,2",
                     "halfgraph:3"):
            g = fam(text)
            for seed in range(20):
                rep = support_implies_failed(
                    g, shifted_singular_matrix(g, seed), Rule.STANDARD,
                    trials=5, seed=seed)
                assert rep.passed, (text, seed)

    def test_laplacians_under_psd_rule(self):
        for text in ("cycle:6", "complete:4", "cycle:3+path:2",
                     "empty:2+path:3"):
            g = fam(text)
            for seed in range(20):
                rep = support_implies_failed(g, weighted_laplacian(g, seed),
                                             Rule.PSD, trials=5, seed=seed)
                assert rep.passed, (text, seed)

    def test_isolated_vertex_certificate(self):
        # diag(0, 1) on two isolated vertices: kernel e1, zero set {1}
        g = fam("empty:2")
        m = PatternMatrix(g, np.diag([0.0, 1.0]))
        rep = support_implies_failed(g, m, Rule.STANDARD, trials=3, seed=0)
        assert rep.passed

    def test_wrong_graph_rejected(self):
        m = sample_pattern_matrix(fam("path:3"), 0)
        with pytest.raises(PatternMismatchError):
            support_implies_failed(fam("cycle:3"), m, Rule.STANDARD)

    def test_psd_rule_needs_psd_matrix(self):
        g = fam("path:3")
        with pytest.raises(PatternMismatchError):
            support_implies_failed(g, sample_pattern_matrix(g, 0), Rule.PSD)


class TestRankBound:
    def test_paths_nearly_full_rank(self):
        spec = parse_family("path:8")
        g = build_family(spec)
        for seed in range(20):
            rep = rank_lower_bound_check(spec, sample_pattern_matrix(g, seed))
            assert rep.passed

    def test_complete_graphs(self):
        spec = parse_family("complete:5")
        g = build_family(spec)
        for seed in range(20):
            rep = rank_lower_bound_check(spec, shifted_singular_matrix(g, seed))
            assert rep.passed

    def test_c6_laplacian(self):
        spec = parse_family("cycle:6")
        m = weighted_laplacian(build_family(spec), seed=2)
        assert numerical_rank(m) == 5
        assert rank_lower_bound_check(spec, m).passed  # 5 >= mr = 4


class TestSerialization:
    def test_text_round_trip(self):
        m = sample_pattern_matrix(fam("wheel:5"), seed=3)
        text = matrix_to_text(m)
        back = np.array([[float(x) for x in line.split()]
                         for line in text.strip().splitlines()])
        assert np.array_equal(back, m.entries)

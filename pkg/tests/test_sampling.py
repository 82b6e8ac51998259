from chipfiring.bijection import enumerate_spanning_trees
from chipfiring.rng import derive_seed
from chipfiring.sampling import sample_tree, sample_trees


def test_tree_graph_always_returns_its_only_tree(p4):
    whole = frozenset({0, 1, 2})
    for seed in range(25):
        assert sample_tree(p4, 0, None, seed) == whole


def test_fixed_seed_is_reproducible(k4):
    assert sample_tree(k4, 0, None, 7) == sample_tree(k4, 0, None, 7)
    first = sample_trees(k4, 0, None, 99, 50)
    second = sample_trees(k4, 0, None, 99, 50)
    assert first == second


def test_samples_are_spanning_trees(k5):
    trees = set(enumerate_spanning_trees(k5))
    report = sample_trees(k5, 0, None, 3, 200)
    assert all(t in trees for t in report.trees)


def test_batch_uses_derived_seeds(k4):
    report = sample_trees(k4, 0, None, 123, 1)
    assert report.trees[0] == sample_tree(k4, 0, None, derive_seed(123, 0))
    assert sum(report.counts.values()) == 1


def test_banana_frequencies_are_balanced(b2):
    n = 10000
    hits = {0: 0, 1: 0}
    for seed in range(n):
        (edge,) = sample_tree(b2, 0, None, seed)
        hits[edge] += 1
    for edge in (0, 1):
        assert 0.47 <= hits[edge] / n <= 0.53


def test_k3_chi_square_below_critical(k3):
    n = 9000
    report = sample_trees(k3, 0, None, 5, n)
    assert len(report.counts) == 3
    expected = n / 3
    statistic = sum((c - expected) ** 2 / expected for c in report.counts.values())
    assert statistic < 13.8  # alpha = 0.001 at 2 dof

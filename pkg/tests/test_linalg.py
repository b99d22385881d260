"""Exact sparse vectors, incremental row echelon spans, kernel extraction."""

import random

from toruslie import rat
from toruslie.linalg import SpanBasis, SparseVec, kernel_of_map


def rand_vec(rng, keys, density=0.6):
    return SparseVec.make({k: rat(rng.randint(-4, 4))
                           for k in keys if rng.random() < density})


def test_sparsevec_drops_zeros():
    v = SparseVec.make({"a": rat(0), "b": rat(3), "c": rat(-1, 2)})
    assert "a" not in v
    assert v["b"] == 3
    assert v["c"] == rat(-1, 2)


def test_sparsevec_add_scaled_cancels():
    v = SparseVec.make({1: rat(2), 2: rat(5)})
    w = SparseVec.make({1: rat(1), 3: rat(7)})
    v.add_scaled(rat(-2), w)
    assert 1 not in v
    assert v == SparseVec.make({2: rat(5), 3: rat(-14)})


def test_sparsevec_scaled_by_zero_is_empty():
    v = SparseVec.make({1: rat(2)})
    assert not v.scaled(0)
    assert v.scaled(rat(1, 2)) == SparseVec.make({1: rat(1)})


def test_spanbasis_rank_and_contains():
    span = SpanBasis()
    assert span.insert(SparseVec.make({1: rat(1), 2: rat(1)}))
    assert span.insert(SparseVec.make({2: rat(1), 3: rat(1)}))
    # dependent on the first two
    assert not span.insert(SparseVec.make({1: rat(1), 3: rat(-1)}))
    assert span.rank == 2
    assert span.contains(SparseVec.make({1: rat(2), 2: rat(2)}))
    assert not span.contains(SparseVec.make({3: rat(1)}))


def test_spanbasis_rows_stay_fully_reduced():
    rng = random.Random(0)
    keys = list(range(8))
    for _ in range(25):
        span = SpanBasis()
        for _ in range(6):
            span.insert(rand_vec(rng, keys))
        pivots = set(span.pivots)
        for pivot, idx in span.pivots.items():
            row = span.rows[idx]
            assert row[pivot] == 1
            # no other pivot key appears in any row
            for key in row:
                assert key == pivot or key not in pivots


def test_spanbasis_membership_closed_under_combination():
    rng = random.Random(1)
    keys = list(range(6))
    for _ in range(20):
        vecs = [rand_vec(rng, keys) for _ in range(4)]
        span = SpanBasis()
        for v in vecs:
            span.insert(v)
        combo = SparseVec()
        for v in vecs:
            combo.add_scaled(rat(rng.randint(-3, 3)), v)
        assert span.contains(combo)
        assert not span.reduce(combo)


def test_spanbasis_restricted_projects_rows():
    span = SpanBasis()
    span.insert(SparseVec.make({1: rat(1), 10: rat(4)}))
    span.insert(SparseVec.make({2: rat(1), 10: rat(-1)}))
    low = span.restricted(lambda k: k < 10)
    assert low.rank == 2
    assert low.contains(SparseVec.make({1: rat(3)}))


def test_kernel_of_map_known_matrix():
    # map sends e1 -> f, e2 -> f, e3 -> 0; kernel is e1 - e2 and e3
    def image_of(key):
        return {} if key == 3 else {"f": rat(1)}

    kernel = kernel_of_map([1, 2, 3], image_of)
    assert len(kernel) == 2
    span = SpanBasis()
    for vec in kernel:
        span.insert(vec)
    assert span.contains(SparseVec.make({1: rat(1), 2: rat(-1)}))
    assert span.contains(SparseVec.make({3: rat(1)}))
    assert not span.contains(SparseVec.make({1: rat(1)}))


def test_kernel_of_map_rank_nullity_and_annihilation():
    rng = random.Random(2)
    in_keys = list(range(7))
    out_keys = list("abcd")
    for _ in range(20):
        cols = {k: rand_vec(rng, out_keys) for k in in_keys}
        kernel = kernel_of_map(in_keys, lambda k: cols[k])
        span = SpanBasis()
        for k in in_keys:
            span.insert(cols[k])
        assert span.rank + len(kernel) == len(in_keys)
        for vec in kernel:
            image = SparseVec()
            for k, c in vec.items():
                image.add_scaled(c, cols[k])
            assert not image

"""GF(2) rank and homology dimensions against a naive set-based oracle."""

import random

import pytest

from skylink.errors import IntegrityError
from skylink.gf2 import SparseBitMatrix, homology_dims, multiply, rank

from oracles import naive_rank


def random_matrix(rng, rows, cols, density=0.3):
    bits = []
    for _ in range(rows):
        row = 0
        for c in range(cols):
            if rng.random() < density:
                row |= 1 << c
        bits.append(row)
    return SparseBitMatrix.from_bit_rows(rows, cols, bits)


def as_sets(m):
    return [{c for c in range(m.col_count) if r >> c & 1} for r in m.bit_rows()]


def test_rank_trivial_cases():
    assert rank(SparseBitMatrix.zeros(0, 0)) == 0
    assert rank(SparseBitMatrix.zeros(4, 7)) == 0
    assert rank(SparseBitMatrix.identity(5)) == 5


def test_rank_matches_naive_oracle():
    rng = random.Random(11)
    for _ in range(25):
        m = random_matrix(rng, 64, 64, rng.uniform(0.02, 0.6))
        assert rank(m) == naive_rank(as_sets(m))


def test_rank_equals_transpose_rank():
    rng = random.Random(5)
    for _ in range(20):
        m = random_matrix(rng, rng.randint(1, 40), rng.randint(1, 40))
        assert rank(m) == rank(m.transpose())


def test_rank_invariant_under_row_permutation_and_xor():
    rng = random.Random(7)
    for _ in range(20):
        m = random_matrix(rng, 24, 31)
        rows = m.bit_rows()
        rng.shuffle(rows)
        assert rank(SparseBitMatrix.from_bit_rows(24, 31, rows)) == rank(m)
        i, j = rng.sample(range(24), 2)
        rows[i] ^= rows[j]
        assert rank(SparseBitMatrix.from_bit_rows(24, 31, rows)) == rank(m)


def test_representation_threshold():
    dense = SparseBitMatrix.from_bit_rows(2, 8, [0b1, 0b10])
    assert dense.is_dense()
    sparse = SparseBitMatrix.from_entries(1000, 1000, [(0, 0), (999, 999)])
    assert not sparse.is_dense()
    assert sparse.entry(999, 999) == 1
    assert rank(sparse) == 2


def test_from_entries_xor_semantics():
    m = SparseBitMatrix.from_entries(1, 4, [(0, 2), (0, 2)])
    assert m.nnz() == 0


def test_homology_dims_zero_maps():
    z_in = SparseBitMatrix.zeros(0, 4)
    z_out = SparseBitMatrix.zeros(4, 0)
    assert homology_dims(z_in, z_out) == 4


def test_homology_dims_identity_out():
    d_out = SparseBitMatrix.identity(3)
    d_in = SparseBitMatrix.zeros(0, 3)
    assert homology_dims(d_in, d_out) == 0


def test_homology_dims_dimension_mismatch():
    with pytest.raises(IntegrityError):
        homology_dims(SparseBitMatrix.zeros(2, 3), SparseBitMatrix.zeros(4, 2))


def test_homology_dims_rejects_nonzero_composition():
    d_in = SparseBitMatrix.identity(2)
    d_out = SparseBitMatrix.identity(2)
    with pytest.raises(IntegrityError):
        homology_dims(d_in, d_out)


def kernel_basis(m):
    """Rows spanning ker(v -> v*M), via elimination on an augmented copy."""
    rows = m.bit_rows()
    n = m.row_count
    aug = [(rows[i], 1 << i) for i in range(n)]
    pivots = {}
    kernel = []
    for row, tag in aug:
        while row:
            low = row & -row
            if low in pivots:
                prow, ptag = pivots[low]
                row ^= prow
                tag ^= ptag
            else:
                pivots[low] = (row, tag)
                break
        else:
            kernel.append(tag)
    return kernel


def test_homology_dims_random_chain_pairs_match_naive():
    rng = random.Random(23)
    for _ in range(20):
        dim_mid = rng.randint(1, 20)
        dim_next = rng.randint(0, 20)
        dim_prev = rng.randint(0, 20)
        d_out = random_matrix(rng, dim_mid, dim_next, 0.3)
        kern = kernel_basis(d_out)
        rows_in = []
        for _ in range(dim_prev):
            acc = 0
            for k in kern:
                if rng.random() < 0.5:
                    acc ^= k
            rows_in.append(acc)
        d_in = SparseBitMatrix.from_bit_rows(dim_prev, dim_mid, rows_in)
        got = homology_dims(d_in, d_out)
        expect = (dim_mid - naive_rank(as_sets(d_out))) - naive_rank(as_sets(d_in))
        assert got == expect


def test_multiply_matches_definition():
    rng = random.Random(3)
    a = random_matrix(rng, 5, 6)
    b = random_matrix(rng, 6, 4)
    prod = multiply(a, b)
    for i in range(5):
        for j in range(4):
            acc = 0
            for k in range(6):
                acc ^= a.entry(i, k) & b.entry(k, j)
            assert prod.entry(i, j) == acc


def test_inputs_never_mutated_by_rank():
    m = SparseBitMatrix.from_bit_rows(3, 3, [0b111, 0b101, 0b011])
    before = m.bit_rows()
    rank(m)
    assert m.bit_rows() == before

import pytest

from nfakit.boolmat import (
    BoolMatrix,
    DimensionMismatchError,
    identity,
    mul,
    mul_calls,
    power,
    reset_mul_calls,
    set_default_method,
)

from conftest import seeded


def random_matrix(rng, dim):
    return BoolMatrix(dim, tuple(rng.getrandbits(dim) for _ in range(dim)))


def test_identity_dim_1():
    assert identity(1).rows == (1,)


def test_identity_dim_3():
    m = identity(3)
    assert [[m.get(i, j) for j in range(3)] for i in range(3)] == [
        [True, False, False],
        [False, True, False],
        [False, False, True],
    ]


def test_identity_law_random():
    rng = seeded(101)
    for _ in range(20):
        dim = rng.randint(1, 24)
        a = random_matrix(rng, dim)
        assert mul(identity(dim), a) == a
        assert mul(a, identity(dim)) == a


def test_mul_zero_annihilates():
    rng = seeded(102)
    zero = BoolMatrix(6, (0,) * 6)
    a = random_matrix(rng, 6)
    assert mul(zero, a) == zero
    assert mul(a, zero) == zero


def test_mul_chain_shifts_superdiagonal():
    # single path 0 -> 1 -> ... -> 4; squaring composes two steps
    dim = 5
    chain = BoolMatrix(dim, tuple(1 << (i + 1) if i + 1 < dim else 0 for i in range(dim)))
    squared = mul(chain, chain)
    expected = BoolMatrix(dim, tuple(1 << (i + 2) if i + 2 < dim else 0 for i in range(dim)))
    assert squared == expected


def test_mul_matches_scalar_reference():
    rng = seeded(103)
    for _ in range(30):
        a = random_matrix(rng, 8)
        b = random_matrix(rng, 8)
        assert mul(a, b, method="packed") == mul(a, b, method="naive")


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mul(identity(2), identity(3))


def test_mul_unknown_method():
    with pytest.raises(ValueError):
        mul(identity(2), identity(2), method="blas")


def test_default_method_is_configurable():
    a = BoolMatrix(2, (0b10, 0b01))
    set_default_method("naive")
    try:
        assert mul(a, a) == mul(a, a, method="packed")
    finally:
        set_default_method("packed")
    with pytest.raises(ValueError):
        set_default_method("fancy")


def test_power_zero_is_identity():
    rng = seeded(104)
    a = random_matrix(rng, 7)
    assert power(a, 0) == identity(7)


def test_power_one_is_input():
    rng = seeded(105)
    a = random_matrix(rng, 7)
    assert power(a, 1) == a


def test_power_13_matches_repeated_mul():
    rng = seeded(106)
    a = random_matrix(rng, 8)
    expected = a
    for _ in range(12):
        expected = mul(expected, a)
    assert power(a, 13) == expected


def test_power_rejects_bad_exponents():
    a = identity(3)
    with pytest.raises(ValueError):
        power(a, -1)
    with pytest.raises(ValueError):
        power(a, 1 << 64)
    assert power(a, (1 << 64) - 1) == a


def test_associativity_random():
    rng = seeded(107)
    for _ in range(40):
        dim = rng.randint(1, 32)
        a, b, c = (random_matrix(rng, dim) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))


def test_power_additivity_random():
    rng = seeded(108)
    for _ in range(25):
        dim = rng.randint(1, 16)
        a = random_matrix(rng, dim)
        x, y = rng.randint(0, 64), rng.randint(0, 64)
        assert power(a, x + y) == mul(power(a, x), power(a, y))


def layered_reach(rows, dim, source, steps):
    """Independent oracle: states reachable in exactly `steps` transitions."""
    layer = {source}
    for _ in range(steps):
        layer = {j for i in layer for j in range(dim) if rows[i] >> j & 1}
    return layer


def test_power_encodes_exact_path_lengths():
    rng = seeded(109)
    for _ in range(15):
        dim = rng.randint(1, 20)
        rows = []
        for _ in range(dim):
            row = 0
            for _ in range(rng.randint(0, 3)):
                row |= 1 << rng.randrange(dim)
            rows.append(row)
        m = BoolMatrix(dim, tuple(rows))
        for t in range(11):
            mt = power(m, t)
            for source in range(dim):
                expected = layered_reach(rows, dim, source, t)
                got = {j for j in range(dim) if mt.rows[source] >> j & 1}
                assert got == expected


def test_padding_stays_clean():
    rng = seeded(110)
    for _ in range(20):
        dim = rng.randint(1, 33)
        a = random_matrix(rng, dim)
        b = random_matrix(rng, dim)
        for m in (mul(a, b), power(a, rng.randint(0, 20)), identity(dim)):
            assert all(row >> dim == 0 for row in m.rows)


def test_mul_counter():
    reset_mul_calls()
    a = identity(4)
    mul(a, a)
    mul(a, a)
    assert mul_calls() == 2
    reset_mul_calls()
    assert mul_calls() == 0


def test_matrix_invariants_enforced():
    with pytest.raises(ValueError):
        BoolMatrix(0, ())
    with pytest.raises(ValueError):
        BoolMatrix(2, (1,))
    with pytest.raises(ValueError):
        BoolMatrix(2, (0b100, 0))
    with pytest.raises(ValueError):
        BoolMatrix(2, (-1, 0))
    m = identity(2)
    with pytest.raises(IndexError):
        m.get(2, 0)

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cliffideals import (
    GENERATOR_CAP,
    GeneratorRole,
    Signature,
    blade_grade,
    blade_mul,
    blade_parts,
    blade_str,
    generator_square,
)
from cliffideals.oracle import oracle_blade_mul

from helpers import signatures_up_to


class TestSignature:
    def test_role_partition(self):
        sig = Signature(2, 3, 1)
        roles = [sig.role(i) for i in range(sig.n)]
        assert roles.count(GeneratorRole.PLUS) == 2
        assert roles.count(GeneratorRole.MINUS) == 3
        assert roles.count(GeneratorRole.NULL) == 1
        assert roles == sorted(roles, key=lambda r: [1, -1, 0].index(r.square))

    def test_canonical_blocks(self):
        sig = Signature(1, 2, 3)
        assert sig.role(0) is GeneratorRole.PLUS
        assert sig.role(1) is GeneratorRole.MINUS
        assert sig.role(2) is GeneratorRole.MINUS
        assert all(sig.role(i) is GeneratorRole.NULL for i in range(3, 6))
        assert list(sig.null_indices()) == [3, 4, 5]

    def test_dim(self):
        assert Signature(1, 1, 1).dim == 8
        assert Signature(0, 0, 0).dim == 1

    def test_cap(self):
        Signature(8, 8, 0)  # exactly at the cap
        with pytest.raises(ValueError):
            Signature(8, 8, 1)
        assert GENERATOR_CAP == 16

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            Signature(-1, 0, 0)

    def test_index_errors(self):
        sig = Signature(1, 1, 1)
        with pytest.raises(IndexError):
            sig.role(3)
        with pytest.raises(IndexError):
            generator_square(sig, -1)


class TestGeneratorSquare:
    def test_plus(self):
        assert generator_square(Signature(1, 1, 1), 0) == 1

    def test_minus(self):
        assert generator_square(Signature(1, 1, 1), 1) == -1

    def test_null(self):
        assert generator_square(Signature(1, 1, 1), 2) == 0


class TestBladeMul:
    def test_square_plus(self):
        sig = Signature(1, 1, 1)
        assert blade_mul(sig, 0b001, 0b001) == (1, 0)

    def test_single_transposition(self):
        sig = Signature(1, 1, 1)
        assert blade_mul(sig, 0b010, 0b001) == (-1, 0b011)

    def test_null_annihilates(self):
        sig = Signature(1, 1, 1)
        assert blade_mul(sig, 0b100, 0b100) == (0, 0)

    def test_mixed_blades(self):
        # (e0e1)*(e1e2): the sorted index word (0,1,1,2) needs no swaps
        # and contracts e1*e1 = -1, so the product is -e0e2
        sig = Signature(1, 1, 1)
        assert blade_mul(sig, 0b011, 0b110) == (-1, 0b101)
        assert oracle_blade_mul(sig, 0b011, 0b110) == (-1, 0b101)

    def test_identity_blade(self):
        sig = Signature(2, 0, 1)
        for mask in range(sig.dim):
            assert blade_mul(sig, 0, mask) == (1, mask)
            assert blade_mul(sig, mask, 0) == (1, mask)

    def test_mask_out_of_range(self):
        sig = Signature(1, 0, 0)
        with pytest.raises(IndexError):
            blade_mul(sig, 0b10, 0b01)


class TestBladeParts:
    def test_full_blade(self):
        sig = Signature(1, 1, 1)
        assert blade_parts(sig, 0b111) == ({0}, {1}, {2})

    def test_scalar_blade(self):
        sig = Signature(1, 1, 1)
        assert blade_parts(sig, 0) == (frozenset(), frozenset(), frozenset())

    def test_role_partition(self):
        sig = Signature(2, 0, 1)
        assert blade_parts(sig, 0b101) == ({0}, frozenset(), {2})

    def test_grade(self):
        assert blade_grade(0b1011) == 3
        sig = Signature(2, 1, 1)
        i, j, k = blade_parts(sig, 0b1011)
        assert len(i) + len(j) + len(k) == blade_grade(0b1011)


class TestBladeStr:
    def test_forms(self):
        assert blade_str(0) == "1"
        assert blade_str(0b1) == "e0"
        assert blade_str(0b111) == "e0*e1*e2"
        assert blade_str(1 << 12) == "e12"


def test_anticommutation_small_exhaustive():
    # distinct generators anticommute in every signature with n <= 4
    for sig in signatures_up_to(4):
        for i in range(sig.n):
            for j in range(sig.n):
                if i == j:
                    continue
                ci, mi = blade_mul(sig, 1 << i, 1 << j)
                cj, mj = blade_mul(sig, 1 << j, 1 << i)
                assert mi == mj and ci == -cj


def test_squares_small_exhaustive():
    for sig in signatures_up_to(4):
        for i in range(sig.n):
            expected = generator_square(sig, i)
            coeff, mask = blade_mul(sig, 1 << i, 1 << i)
            assert coeff == expected
            assert mask == 0


def test_associativity_exhaustive_tiny():
    for sig in signatures_up_to(3):
        for a in range(sig.dim):
            for b in range(sig.dim):
                cab, mab = blade_mul(sig, a, b)
                for c in range(sig.dim):
                    cbc, mbc = blade_mul(sig, b, c)
                    if cab:
                        left_c, left_m = blade_mul(sig, mab, c)
                        left = (cab * left_c, left_m)
                    else:
                        left = (0, 0)
                    if left[0] == 0:
                        left = (0, 0)
                    if cbc:
                        right_c, right_m = blade_mul(sig, a, mbc)
                        right = (cbc * right_c, right_m)
                    else:
                        right = (0, 0)
                    if right[0] == 0:
                        right = (0, 0)
                    assert left == right, (sig, a, b, c)


def test_associativity_randomized_large():
    # exhaustive coverage stops at five generators; sample triples above
    import random

    rng = random.Random(73)
    for sig in signatures_up_to(8, min_total=6):
        dim = sig.dim
        for _ in range(120):
            a, b, c = rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)
            cab, mab = blade_mul(sig, a, b)
            cbc, mbc = blade_mul(sig, b, c)
            left = (0, 0)
            if cab:
                c2, m2 = blade_mul(sig, mab, c)
                if c2:
                    left = (cab * c2, m2)
            right = (0, 0)
            if cbc:
                c3, m3 = blade_mul(sig, a, mbc)
                if c3:
                    right = (cbc * c3, m3)
            assert left == right, (sig, a, b, c)


@settings(max_examples=300)
@given(
    sig=st.sampled_from(signatures_up_to(6)),
    data=st.data(),
)
def test_blade_mul_matches_oracle(sig, data):
    a = data.draw(st.integers(0, sig.dim - 1))
    b = data.draw(st.integers(0, sig.dim - 1))
    assert blade_mul(sig, a, b) == oracle_blade_mul(sig, a, b)

"""Montgomery core, divider, CRT, and discrete-log scanner tests.

Expected values are either frozen outputs of independent oracles (naive
big-integer arithmetic, linear scans) or trivial identities.
"""

import pytest
from hypothesis import given, settings, strategies as st

from dualphe import modmath as mm
from dualphe.cycles import CycleLedger
from dualphe.errors import (
    DlogNotFound,
    EvenModulus,
    InvalidParams,
    LengthMismatch,
    NotCoprime,
    NotInvertible,
    OperandOutOfRange,
    ResidueOutOfRange,
    WidthTooSmall,
)


@pytest.fixture
def ctx13():
    return mm.mont_context_new(13, 4)


@pytest.fixture
def ctx23():
    return mm.mont_context_new(23, 5)


class TestContext:
    def test_constants_m13(self, ctx13):
        assert ctx13.r == 16
        assert ctx13.r_inv == 9
        assert (ctx13.r * ctx13.r_inv) % 13 == 1

    def test_constants_m3(self):
        ctx = mm.mont_context_new(3, 2)
        assert ctx.r == 4
        assert ctx.r_inv == 1

    def test_even_modulus_rejected(self):
        with pytest.raises(EvenModulus):
            mm.mont_context_new(12, 4)

    def test_width_too_small(self):
        with pytest.raises(WidthTooSmall):
            mm.mont_context_new(13, 3)

    def test_tiny_modulus_rejected(self):
        with pytest.raises(InvalidParams):
            mm.mont_context_new(1, 4)


class TestMontMul:
    def test_example(self, ctx13):
        # oracle: (7 * 11 * inv(16)) mod 13 = 4
        assert mm.mont_mul(ctx13, 7, 11) == 4

    def test_r_cancels(self, ctx13):
        r_mod = 16 % 13
        for a in range(13):
            assert mm.mont_mul(ctx13, a, r_mod) == a

    def test_zero(self, ctx13):
        assert mm.mont_mul(ctx13, 0, 5) == 0

    def test_operand_range(self, ctx13):
        with pytest.raises(OperandOutOfRange):
            mm.mont_mul(ctx13, 13, 5)
        with pytest.raises(OperandOutOfRange):
            mm.mont_mul(ctx13, 5, 14)

    @pytest.mark.parametrize("m,k", [(3, 2), (13, 4), (23, 5), (101, 7), (251, 8), (257, 9)])
    def test_exhaustive_against_oracle(self, m, k):
        ctx = mm.mont_context_new(m, k)
        r_inv = ctx.r_inv
        for x in range(m):
            for y in range(m):
                assert mm.mont_mul(ctx, x, y) == (x * y * r_inv) % m

    @given(st.integers(min_value=1, max_value=2**48),
           st.integers(min_value=0, max_value=2**49),
           st.integers(min_value=0, max_value=2**49))
    @settings(max_examples=200, deadline=None)
    def test_random_against_oracle(self, m_seed, x, y):
        m = (m_seed * 2 + 1) | 1
        if m < 3:
            m = 3
        ctx = mm.mont_context_new(m, m.bit_length())
        x %= m
        y %= m
        assert mm.mont_mul(ctx, x, y) == (x * y * ctx.r_inv) % m


class TestDomainConversion:
    def test_to_mont_example(self, ctx13):
        assert mm.to_mont(ctx13, 7) == (7 * 16) % 13  # = 8

    def test_zero(self, ctx13):
        assert mm.to_mont(ctx13, 0) == 0

    def test_round_trip(self, ctx13):
        for x in range(13):
            assert mm.from_mont(ctx13, mm.to_mont(ctx13, x)) == x

    def test_product_in_domain(self, ctx13):
        for x in range(13):
            for y in range(13):
                z = mm.mont_mul(ctx13, mm.to_mont(ctx13, x), mm.to_mont(ctx13, y))
                assert mm.from_mont(ctx13, z) == (x * y) % 13


class TestModMul:
    def test_matches_plain_product(self, ctx23):
        for x in range(23):
            for y in range(23):
                assert mm.mod_mul(ctx23, x, y) == (x * y) % 23


class TestMontExp:
    def test_example(self, ctx23):
        assert mm.mont_exp(ctx23, 5, 6) == 8

    def test_zero_exponent(self, ctx23):
        assert mm.mont_exp(ctx23, 5, 0) == 1

    def test_zero_base(self, ctx23):
        assert mm.mont_exp(ctx23, 0, 3) == 0

    def test_against_pow(self, ctx23):
        for y in range(23):
            for x in range(32):
                assert mm.mont_exp(ctx23, y, x) == pow(y, x, 23)

    def test_base_out_of_range(self, ctx23):
        with pytest.raises(OperandOutOfRange):
            mm.mont_exp(ctx23, 23, 2)

    def test_exponent_too_wide(self, ctx23):
        with pytest.raises(OperandOutOfRange):
            mm.mont_exp(ctx23, 5, 32)

    def test_data_independent_cost(self, ctx23):
        # same cycle charge whatever the exponent: the loop never early-exits
        charges = set()
        for exponent in (0, 1, 21, 31):
            ledger = CycleLedger()
            mm.mont_exp(ctx23, 5, exponent, ledger=ledger)
            charges.add(ledger.total_cycles)
        assert len(charges) == 1

    def test_single_multiplier_costs_double(self, ctx23):
        one, two = CycleLedger(), CycleLedger()
        mm.mont_exp(ctx23, 5, 6, ledger=one, multipliers=1)
        mm.mont_exp(ctx23, 5, 6, ledger=two, multipliers=2)
        assert one.total_cycles == 2 * two.total_cycles


class TestModDiv:
    def test_example(self, ctx23):
        # oracle: 14 * 6^(23-2) mod 23 = 10
        assert mm.mod_div(ctx23, 14, 6) == 10

    def test_identity_divisor(self, ctx23):
        for a in range(23):
            assert mm.mod_div(ctx23, a, 1) == a

    def test_zero_divisor(self, ctx23):
        with pytest.raises(NotInvertible):
            mm.mod_div(ctx23, 5, 0)

    def test_non_coprime_divisor(self):
        ctx = mm.mont_context_new(15, 4)
        with pytest.raises(NotInvertible):
            mm.mod_div(ctx, 7, 5)

    def test_agrees_with_fermat(self, ctx23):
        for a in range(23):
            for b in range(1, 23):
                r = mm.mod_div(ctx23, a, b)
                assert r == (a * pow(b, 21, 23)) % 23
                assert (r * b) % 23 == a

    @given(st.integers(min_value=2, max_value=2**40))
    @settings(max_examples=100, deadline=None)
    def test_random_modulus(self, seed):
        import random

        rng = random.Random(seed)
        m = rng.randrange(3, 1 << 40) | 1
        ctx = mm.mont_context_new(m, m.bit_length())
        a = rng.randrange(0, m)
        b = rng.randrange(1, m)
        from math import gcd

        if gcd(b, m) != 1:
            with pytest.raises(NotInvertible):
                mm.mod_div(ctx, a, b)
        else:
            assert (mm.mod_div(ctx, a, b) * b) % m == a


class TestCrt:
    def test_basis_partials(self):
        basis = mm.crt_basis_new([3, 5])
        assert basis.product == 15
        for (q, inv), d in zip(basis.partials, basis.moduli):
            assert (q * inv) % d == 1

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            mm.crt_basis_new([2, 4])

    def test_single_modulus_basis(self):
        basis = mm.crt_basis_new([15])
        assert basis.product == 15
        assert mm.crt_recombine((7,), basis) == 7

    @pytest.mark.parametrize("m,expected", [(7, (1, 2)), (0, (0, 0)), (14, (2, 4))])
    def test_reduce_examples(self, m, expected):
        assert mm.mod_reduce_vector(m, mm.crt_basis_new([3, 5])) == expected

    @pytest.mark.parametrize("residues,expected", [((1, 2), 7), ((0, 0), 0), ((2, 4), 14)])
    def test_recombine_examples(self, residues, expected):
        # oracle: linear scan over 0..14 for the matching value
        basis = mm.crt_basis_new([3, 5])
        assert mm.crt_recombine(residues, basis) == expected

    def test_recombine_matches_scan_oracle(self):
        basis = mm.crt_basis_new([3, 7])
        for residues in [(r1, r2) for r1 in range(3) for r2 in range(7)]:
            scan = next(m for m in range(21)
                        if (m % 3, m % 7) == residues)
            assert mm.crt_recombine(residues, basis) == scan

    @pytest.mark.parametrize("moduli", [(3, 5), (3, 5, 7), (8, 9, 11), (2, 3, 5, 7)])
    def test_round_trip(self, moduli):
        basis = mm.crt_basis_new(moduli)
        for m in range(basis.product):
            assert mm.crt_recombine(mm.mod_reduce_vector(m, basis), basis) == m

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            mm.crt_recombine((1,), mm.crt_basis_new([3, 5]))

    def test_residue_out_of_range(self):
        with pytest.raises(ResidueOutOfRange):
            mm.crt_recombine((1, 5), mm.crt_basis_new([3, 5]))


class TestDlogSmall:
    def test_example(self, ctx23):
        assert mm.dlog_small(ctx23, 5, 8, 22) == 6

    def test_identity(self, ctx23):
        assert mm.dlog_small(ctx23, 5, 1, 22) == 0

    def test_bound_too_low(self, ctx23):
        with pytest.raises(DlogNotFound):
            mm.dlog_small(ctx23, 5, 8, 3)

    def test_inverts_exp(self, ctx23):
        # ord(5) mod 23 is 22
        for e in range(22):
            assert mm.dlog_small(ctx23, 5, mm.mont_exp(ctx23, 5, e), 22) == e


class TestLedger:
    def test_conservation(self, ctx23):
        ledger = CycleLedger()
        mm.mont_mul(ctx23, 3, 4, ledger=ledger)
        mm.mont_exp(ctx23, 5, 6, ledger=ledger)
        mm.mod_div(ctx23, 14, 6, ledger=ledger)
        mm.dlog_small(ctx23, 5, 8, 22, ledger=ledger)
        assert ledger.total_cycles == sum(ledger.per_op.values())
        assert set(ledger.per_op) == {"mont_mul", "mont_exp", "mod_div", "dlog"}

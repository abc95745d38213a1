import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclic_lrc.gf import (FieldElement, FieldError, FieldSpec, baby_step_giant_step, discrete_log,
                           element_from_json, element_to_json, factorize, field_from_json,
                           field_to_json, generator, is_in_subfield, make_field,
                           mul_polynomial_basis, solve_quadratic, subfield_codes, subfield_embedding,
                           subfield_mask, trace_to_prime)

from oracles import brute_primitive_moduli, naive_field_mul

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)]


class TestMakeField:
    def test_documented_moduli(self):
        assert make_field(2, 2).modulus == (1, 1, 1)
        assert make_field(3, 1).modulus == (1, 1)
        assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
    def test_modulus_is_first_primitive(self, p, e):
        assert make_field(p, e).modulus == brute_primitive_moduli(p, e)[0]

    def test_deterministic(self):
        assert make_field(5, 3) == make_field(5, 3)

    @pytest.mark.parametrize("p,e", [(4, 1), (1, 1), (2, 0), (2, 25)])
    def test_rejects(self, p, e):
        with pytest.raises(FieldError):
            make_field(p, e)

    def test_largest_needed_field(self):
        f = make_field(5, 6)
        assert f.order == 15625
        assert generator(f).order() == 15624


class TestArithmetic:
    def test_f4_examples(self):
        f = make_field(2, 2)
        w = generator(f)
        assert w * w**2 == f.one()
        assert w + w**2 == f.one()

    @pytest.mark.parametrize("p,e", SMALL)
    def test_inv_one(self, p, e):
        f = make_field(p, e)
        assert f.one().inverse() == f.one()

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            make_field(3, 2).zero().inverse()

    def test_mixed_fields(self):
        with pytest.raises(FieldError):
            make_field(2, 2).one() + make_field(2, 3).one()

    def test_negative_power(self):
        f = make_field(3, 2)
        x = generator(f)
        assert x ** -3 * x**3 == f.one()

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 1), (3, 2), (2, 5), (5, 2), (7, 1), (2, 6)])
    def test_axioms_exhaustive(self, p, e):
        f = make_field(p, e)
        a = f.elements()
        A, B = np.meshgrid(a, a, indexing="ij")
        add, mul = f.add(A, B), f.mul(A, B)
        assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
        assert np.all(f.add(A, 0) == A) and np.all(f.mul(A, 1) == A)
        assert np.all(f.add(a, f.neg(a)) == 0)
        assert np.all(f.mul(a[1:], f.inv(a[1:])) == 1)
        # table product agrees with schoolbook multiplication
        for x, y in itertools.islice(itertools.product(range(f.order), repeat=2), 0, None, 7):
            expected = naive_field_mul(p, f.modulus, x, y) if e > 1 else (x * y) % p
            assert int(f.mul(x, y)) == expected
        # associativity and distributivity over a grid
        c = a[:: max(1, len(a) // 8)]
        X, Y, Z = np.meshgrid(a, a, c, indexing="ij")
        assert np.array_equal(f.mul(f.mul(X, Y), Z), f.mul(X, f.mul(Y, Z)))
        assert np.array_equal(f.add(f.add(X, Y), Z), f.add(X, f.add(Y, Z)))
        assert np.array_equal(f.mul(X, f.add(Y, Z)), f.add(f.mul(X, Y), f.mul(X, Z)))

    @given(st.sampled_from([(5, 6), (2, 12), (3, 7), (13, 2)]), st.data())
    def test_axioms_random(self, pe, data):
        f = make_field(*pe)
        x, y, z = (data.draw(st.integers(0, f.order - 1)) for _ in range(3))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert int(f.mul(x, y)) == mul_polynomial_basis(f, x, y)
        if x:
            assert f.mul(x, f.inv(x)) == 1
        assert f.sub(f.add(x, y), y) == x


class TestGenerator:
    def test_f4(self):
        w = generator(make_field(2, 2))
        assert w != w.field.one() and w**3 == w.field.one()

    def test_f25(self):
        f = make_field(5, 2)
        pi = generator(f)
        assert pi**24 == f.one()
        assert pi**12 == -f.one()

    def test_f7_with_modulus_x_minus_3(self):
        f = FieldSpec(7, 1, (4, 1))
        assert generator(f).value == 3

    @pytest.mark.parametrize("p,e", SMALL + [(5, 6), (2, 12)])
    def test_exact_order(self, p, e):
        f = make_field(p, e)
        g = generator(f)
        N = f.n_mult
        assert g**N == f.one()
        for prime in factorize(N):
            assert g ** (N // prime) != f.one()


class TestDiscreteLog:
    def test_examples(self):
        f = make_field(5, 2)
        pi = generator(f)
        assert discrete_log(f.one()) == 0
        assert discrete_log(pi**3) == 3
        assert discrete_log(-f.one()) == 12

    def test_zero(self):
        with pytest.raises(FieldError):
            discrete_log(make_field(3, 2).zero())
        with pytest.raises(FieldError):
            baby_step_giant_step(make_field(3, 2).zero())

    @given(st.sampled_from([(2, 4), (5, 2), (5, 6), (2, 12), (3, 9), (2, 16)]), st.integers(0, 10**9))
    def test_dlog_of_power(self, pe, k):
        f = make_field(*pe)
        x = generator(f) ** k
        assert discrete_log(x) == k % f.n_mult

    @given(st.sampled_from([(2, 4), (5, 2), (5, 6), (2, 17)]), st.data())
    def test_bsgs_agrees_with_tables(self, pe, data):
        f = make_field(*pe)
        x = FieldElement(f, data.draw(st.integers(1, f.order - 1)))
        assert baby_step_giant_step(x) == discrete_log(x)


class TestSubfield:
    def test_examples(self):
        f = make_field(2, 4)
        g = generator(f)
        for x in (f.zero(), f.one()):
            assert is_in_subfield(x, 4) and is_in_subfield(x, 2)
        assert is_in_subfield(g**5, 4)
        assert not is_in_subfield(g, 4)

    def test_invalid_order(self):
        with pytest.raises(FieldError):
            is_in_subfield(make_field(2, 4).one(), 8)
        with pytest.raises(FieldError):
            subfield_mask(make_field(2, 4), 3)

    @pytest.mark.parametrize("p,e,d", [(2, 4, 2), (2, 6, 3), (3, 4, 2), (5, 6, 2), (5, 6, 3)])
    def test_mask_and_codes(self, p, e, d):
        f = make_field(p, e)
        q = p**d
        mask = subfield_mask(f, q)
        assert mask.sum() == q
        assert sorted(subfield_codes(f, q)) == sorted(np.flatnonzero(mask))

    def test_prime_subfield_identity(self):
        emb = subfield_embedding(make_field(5, 1), make_field(5, 4))
        for v in range(5):
            assert emb(FieldElement(emb.base, v)).value == v

    def test_f4_into_f16(self):
        base, big = make_field(2, 2), make_field(2, 4)
        emb = subfield_embedding(base, big)
        # roots of x^2 + x + 1 in F_16, by scan
        roots = [v for v in range(16)
                 if int(big.add(big.add(big.mul(v, v), v), 1)) == 0]
        g = generator(big)
        assert sorted(roots) == sorted([(g**5).value, (g**10).value])
        assert emb(generator(base)) == min((g**5, g**10), key=discrete_log)

    @pytest.mark.parametrize("base_pe,big_pe", [((2, 2), (2, 4)), ((2, 3), (2, 6)), ((2, 4), (2, 8)),
                                                ((3, 2), (3, 4)), ((2, 2), (2, 6))])
    def test_embedding_is_ring_isomorphism(self, base_pe, big_pe):
        base, big = make_field(*base_pe), make_field(*big_pe)
        emb = subfield_embedding(base, big)
        img = emb.forward
        a = base.elements()
        A, B = np.meshgrid(a, a, indexing="ij")
        assert np.array_equal(img[base.mul(A, B)], big.mul(img[A], img[B]))
        assert np.array_equal(img[base.add(A, B)], big.add(img[A], img[B]))
        assert len(set(img.tolist())) == base.order
        assert np.all(subfield_mask(big, base.order)[img])
        for v in a:
            assert emb.to_base(emb.to_big(FieldElement(base, int(v)))).value == v

    def test_to_base_outside(self):
        emb = subfield_embedding(make_field(2, 2), make_field(2, 4))
        with pytest.raises(FieldError):
            emb.to_base(generator(emb.big))


class TestTraceAndQuadratic:
    def test_trace_f4(self):
        f = make_field(2, 2)
        w = generator(f)
        assert trace_to_prime(f.zero()).value == 0
        assert trace_to_prime(w).value == 1
        assert trace_to_prime(f.one()).value == 0

    @pytest.mark.parametrize("p,e", [(2, 4), (3, 3), (5, 2), (2, 6)])
    def test_trace_lands_in_prime_field(self, p, e):
        f = make_field(p, e)
        for v in range(f.order):
            t = trace_to_prime(FieldElement(f, v))
            assert t**p == t and t.value < p

    def test_examples(self):
        f2 = make_field(2, 1)
        assert solve_quadratic(f2.zero(), f2.zero()) == [f2.zero()]
        assert solve_quadratic(f2.one(), f2.one()) == []
        f4 = make_field(2, 2)
        w = generator(f4)
        assert solve_quadratic(f4.one(), w) == []
        f16 = make_field(2, 4)
        w16 = subfield_embedding(f4, f16)(w)
        assert len(solve_quadratic(f16.one(), w16)) == 2

    @pytest.mark.parametrize("e", [2, 3, 4])
    def test_char2_trace_criterion(self, e):
        f = make_field(2, e)
        for a1 in range(1, f.order):
            for a0 in range(f.order):
                A1, A0 = FieldElement(f, a1), FieldElement(f, a0)
                solvable = trace_to_prime(A0 / (A1 * A1)).value == 0
                assert bool(solve_quadratic(A1, A0)) == solvable


def test_geometric_subgroup_sum():
    """With y = z^(N/M) of order M: sum_{i<M} y^(ik) is M*1 when M | k, else 0."""
    for p in (2, 3, 5, 7, 11, 13):
        for e in range(1, 7):
            if p**e > 4096:
                break
            f = make_field(p, e)
            for N in (d for d in range(1, 64) if f.n_mult % d == 0):
                z = (generator(f) ** (f.n_mult // N)).value
                for M in (m for m in range(1, N + 1) if N % m == 0):
                    y = int(f.power(z, N // M))
                    ik = np.arange(N)[:, None] * np.arange(M)[None, :]
                    totals = f.sum(f.power(y, ik), axis=1)
                    expected = np.where(np.arange(N) % M == 0, M % p, 0)
                    assert np.array_equal(totals, expected)


class TestJson:
    def test_round_trip(self):
        f = make_field(5, 6)
        assert field_from_json(field_to_json(f)) == f
        x = generator(f) ** 1234
        assert element_from_json(f, element_to_json(x)) == x
        assert len(element_to_json(x)) == 6

    def test_bad_modulus(self):
        with pytest.raises(FieldError):
            field_from_json({"p": 2, "e": 2, "modulus": [1, 1, 0]})

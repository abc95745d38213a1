import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclic_lrc.codes import (CodeError, build_code, code_from_json, code_to_json, constacyclic_shift,
                              dual_generator, encode, evaluation_matrix, generator_matrix,
                              is_codeword, load_code, multiplicative_order, parity_check_columns,
                              save_code, syndromes)
from cyclic_lrc.constructions import construct, prop3_witness
from cyclic_lrc.gf import make_field, subfield_codes
from cyclic_lrc.poly import Poly, x_n_minus
from cyclic_lrc.verify.linalg import rank

from oracles import all_codewords

F16 = make_field(2, 4)


@pytest.fixture(scope="module")
def q4():
    return build_code(F16, 4, 15, 0, [0, 3, 6, 9, 12, 1, 4, 5])


@pytest.fixture(scope="module")
def q5m2():
    code, _, _ = construct("thm4", 5, 2)
    return code


class TestBuild:
    def test_q4_generator(self, q4):
        assert (q4.n, q4.k) == (15, 7)
        w = int(F16.exp(5))  # a primitive element of F_4 inside F_16
        forms = []
        for omega in (w, int(F16.mul(w, w))):
            quad = Poly(F16, [omega, 1, 1])
            lin = Poly(F16, [omega, 1])
            forms.append(x_n_minus(F16, 5, 1) * quad * lin)
        assert q4.g in forms
        assert q4.is_cyclic

    def test_full_root_set(self):
        code = build_code(make_field(5, 2), 5, 6, 21, range(6))
        assert code.k == 0
        assert code.g == x_n_minus(code.big_field, 6, code.lam)

    def test_thm4_small(self, q5m2):
        assert (q5m2.n, q5m2.k) == (6, 2)
        assert not q5m2.is_cyclic
        f = q5m2.big_field
        assert q5m2.lam.value in subfield_codes(f, 5)
        assert x_n_minus(f, 6, q5m2.lam).divrem(q5m2.g)[1].is_zero()
        assert q5m2.theta_exp == (2 - 5) % f.n_mult

    def test_not_frobenius_closed(self):
        with pytest.raises(CodeError, match="Frobenius"):
            build_code(F16, 4, 15, 0, [1])

    def test_gcd(self):
        with pytest.raises(CodeError):
            build_code(F16, 4, 6, 0, [0])

    def test_lambda_outside_subfield(self):
        with pytest.raises(CodeError):
            build_code(F16, 4, 5, 1, [0])

    def test_multiplicative_order(self):
        assert multiplicative_order(4, 15) == 2
        assert multiplicative_order(5, 3906) == 6
        assert multiplicative_order(8, 585) == 4


@pytest.mark.parametrize("q", [2, 4])
def test_frobenius_closure_iff_subfield(q):
    """Every subset of [0, 15) is accepted exactly when it is a union of q-cyclotomic cosets."""
    rng = np.random.default_rng(q)
    def closed(R):
        return all((q * i) % 15 in R for i in R)
    for _ in range(200):
        R = set(np.flatnonzero(rng.random(15) < 0.3).tolist()) or {0}
        try:
            build_code(F16, q, 15, 0, sorted(R))
            ok = True
        except CodeError:
            ok = False
        assert ok == closed(R)


class TestDual:
    def test_zero_code_dual(self):
        code = build_code(make_field(5, 2), 5, 6, 21, range(6))
        hbar, lam_inv = dual_generator(code)
        assert hbar == Poly.one(code.big_field)
        assert lam_inv == code.lam.inverse()

    @pytest.mark.parametrize("family,q,m", [("thm_even", 4, None), ("prop3", 7, None),
                                             ("thm_odd", 13, None), ("thm4", 5, 2), ("thm3", 8, 2)])
    def test_degree(self, family, q, m):
        code, _, _ = construct(family, q, m)
        hbar, _ = dual_generator(code)
        assert hbar.degree == code.k and hbar.is_monic()

    def test_rows_orthogonal_exhaustive(self, q4):
        f = q4.big_field
        hbar, _ = dual_generator(q4)
        G = generator_matrix(q4)
        # the dual is the lambda^-1-constacyclic code generated by hbar
        dual_rows = np.zeros((q4.n - q4.k, q4.n), dtype=np.int64)
        for i in range(q4.n - q4.k):
            dual_rows[i, i:i + len(hbar.codes)] = hbar.codes
        assert not np.any(f.dot(G[:, None, :], dual_rows[None, :, :], axis=-1))
        words = all_codewords(q4)
        assert not np.any(f.dot(words[:, None, :], dual_rows[None, :, :], axis=-1))


class TestShift:
    def test_rotation_when_cyclic(self, q4):
        w = np.arange(15) % 4
        assert np.array_equal(constacyclic_shift(w, q4), np.roll(w, 1))

    @given(st.lists(st.integers(0, 4), min_size=6, max_size=6))
    def test_n_shifts_scale_by_lambda(self, q5m2, coeffs):
        f = q5m2.big_field
        S = subfield_codes(f, 5)
        w = S[np.array(coeffs)]
        v = w
        for _ in range(6):
            v = constacyclic_shift(v, q5m2)
        assert np.array_equal(v, f.mul(q5m2.lam.value, w))

    def test_shift_preserves_membership(self, q5m2):
        for c in all_codewords(q5m2):
            assert is_codeword(q5m2, constacyclic_shift(c, q5m2))

    def test_length_mismatch(self, q4):
        with pytest.raises(CodeError):
            constacyclic_shift(np.zeros(14, dtype=np.int64), q4)


class TestEncode:
    def test_trivial_messages(self, q4):
        assert not np.any(encode(q4, []))
        assert np.array_equal(encode(q4, [1]), q4.g.padded(15))

    def test_too_long(self, q4):
        with pytest.raises(CodeError):
            encode(q4, [1] * 8)

    def test_random_messages_are_codewords(self):
        rng = np.random.default_rng(5)
        for family, q, m in (("thm_even", 4, None), ("thm4", 5, 2), ("thm_odd", 13, None)):
            code, _, _ = construct(family, q, m)
            S = subfield_codes(code.big_field, q)
            for _ in range(1000 // 3 + 1):
                msg = S[rng.integers(0, q, size=code.k)]
                c = encode(code, msg)
                assert is_codeword(code, c)
                assert is_codeword(code, c, method="roots")

    def test_injective(self, q5m2):
        words = {tuple(encode(q5m2, [a, b])) for a in subfield_codes(q5m2.big_field, 5)
                 for b in subfield_codes(q5m2.big_field, 5)}
        assert len(words) == 25


class TestMembership:
    def test_examples(self, q4):
        assert is_codeword(q4, np.zeros(15, dtype=np.int64))
        assert is_codeword(q4, q4.g.padded(15))
        bumped = q4.g.padded(15).copy()
        bumped[int(q4.g.degree) + 1] = F16.add(bumped[int(q4.g.degree) + 1], 1)
        assert not is_codeword(q4, bumped)

    def test_prop3_witness(self):
        code, _, _ = construct("prop3", 7)
        assert is_codeword(code, prop3_witness(7).dense())

    def test_non_subfield_word(self, q4):
        w = np.zeros(15, dtype=np.int64)
        w[0] = int(F16.exp(1))
        assert not is_codeword(q4, w)

    def test_methods_agree_random(self):
        rng = np.random.default_rng(0)
        code, _, _ = construct("thm_even", 4)
        S = subfield_codes(code.big_field, 4)
        for _ in range(300):
            w = S[rng.integers(0, 4, size=15)] * (rng.random(15) < 0.4)
            assert is_codeword(code, w) == is_codeword(code, w, method="roots")


class TestParityCheck:
    def test_single_orbit_row(self):
        code = build_code(F16, 2, 15, 0, [0])
        H = parity_check_columns(code, [0])
        assert np.all(H == 1)
        w = np.zeros(15, dtype=np.int64)
        w[[2, 7]] = 1
        assert is_codeword(code, w)

    def test_q4_kernel_is_code(self, q4):
        f = q4.big_field
        H = parity_check_columns(q4)
        words = all_codewords(q4)
        assert len({w.tobytes() for w in words}) == 4**7
        assert not np.any(f.dot(words[:, None, :], H[None, :, :], axis=-1))
        Hfull = evaluation_matrix(q4, q4.root_exponents)
        assert rank(f, Hfull) == 15 - 7

    def test_rank_q13(self):
        code, _, _ = construct("thm_odd", 13)
        assert rank(code.big_field, evaluation_matrix(code, code.root_exponents)) == code.n - code.k

    def test_orbit_coverage_enforced(self, q4):
        with pytest.raises(CodeError):
            parity_check_columns(q4, [0])
        with pytest.raises(CodeError):
            parity_check_columns(q4, [2])

    def test_syndrome_zero_for_witness(self):
        code, w, _ = construct("thm3", 8, 2)
        assert not np.any(syndromes(code, w.dense(), code.root_exponents))


@pytest.mark.parametrize("family,q,m", [("thm_even", 4, None), ("thm4", 5, 2), ("thm3", 8, 2)])
def test_dimension_by_enumeration(family, q, m):
    code, _, _ = construct(family, q, m)
    words = all_codewords(code)
    assert len({w.tobytes() for w in words}) == q**code.k


class TestJson:
    @pytest.mark.parametrize("family,q,m", [("thm_even", 4, None), ("thm4", 5, 2), ("remark", 19, None)])
    def test_round_trip_bit_exact(self, family, q, m, tmp_path):
        code, _, params = construct(family, q, m)
        path = tmp_path / "code.json"
        save_code(code, path, params.claims())
        text = path.read_text()
        again, claims = load_code(path)
        assert again.g == code.g and again.lam == code.lam and again.n == code.n
        assert claims == params.claims()
        save_code(again, path, claims)
        assert path.read_text() == text

    def test_key_order(self, q4):
        assert list(code_to_json(q4)) == ["base", "q", "big_field", "n", "theta_exp", "lambda", "g", "roots"]

    def test_tampered_generator(self, q4):
        data = code_to_json(q4)
        data["g"][0] = [1, 1, 0, 0]
        with pytest.raises(CodeError):
            code_from_json(data)

    def test_truncated_file(self, q4, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(code_to_json(q4))[:40])
        with pytest.raises(CodeError):
            load_code(path)

    def test_missing_key(self, q4):
        data = code_to_json(q4)
        del data["roots"]
        with pytest.raises(CodeError):
            code_from_json(data)

import random
from fractions import Fraction

import pytest

from conftest import cached_builtin as builtin_algebra
from conftest import random_polynomial
from liecontract.builders import borel_decomposition
from liecontract.contract import (ContractionWeights, contract, contract_algebra,
                                  highest_component_central, t_degree)
from liecontract.exterior import MultiVector, schouten_square
from liecontract.invariants import char_invariants
from liecontract.lie import (algebra_index, lie_poisson_bivector,
                             subalgebra_on_indices)
from liecontract.polyring import Polynomial, parse_polynomial

EHF = ["e", "h", "f"]


def sl2():
    return builtin_algebra("sl2")


def casimir():
    return parse_polynomial("-1/2*h^2 - 2*e*f", EHF)


class TestWeights:
    def test_total(self):
        assert ContractionWeights((0, 1, 2)).total == 3

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ContractionWeights((0, -1))


class TestContract:
    def test_split_weights(self):
        res = contract_algebra(sl2(), ContractionWeights((1, 0, 1)))
        assert res.valid
        expected = MultiVector(3, 2, {(0, 1): parse_polynomial("-2*e", EHF),
                                      (1, 2): parse_polynomial("-2*f", EHF)})
        assert res.pi_tilde == expected
        assert res.contracted.bracket_pair(0, 2) == {}

    def test_borel_weights(self):
        res = contract_algebra(sl2(), ContractionWeights((0, 0, 1)))
        assert res.valid
        assert res.contracted.bracket_pair(1, 0) == {0: 2}
        assert res.contracted.bracket_pair(1, 2) == {2: -2}
        assert res.contracted.bracket_pair(0, 2) == {}

    def test_invalid_weights_report_pair(self):
        res = contract_algebra(sl2(), ContractionWeights((0, 1, 0)))
        assert not res.valid
        assert res.offending == ((0, 2), -1)
        assert res.pi_tilde is None and res.contracted is None

    def test_limit_is_poisson_for_valid_contractions(self):
        rng = random.Random(17)
        L = builtin_algebra("sl3")
        count = 0
        while count < 8:
            w = ContractionWeights(tuple(rng.randint(0, 2) for _ in range(L.n)))
            res = contract_algebra(L, w)
            if not res.valid:
                continue
            assert schouten_square(res.pi_tilde).is_zero
            count += 1

    def test_rank_never_grows(self):
        L = sl2()
        rank0 = L.n - algebra_index(L)
        for w in [(1, 0, 1), (0, 0, 1), (0, 1, 1)]:
            res = contract_algebra(L, ContractionWeights(w))
            assert res.valid
            rank1 = L.n - algebra_index(res.contracted)
            assert rank1 <= rank0

    def test_pi_t_at_one_recovers_original(self):
        L = builtin_algebra("sp4")
        w = borel_decomposition(L)
        res = contract_algebra(L, w)
        assert res.pi_t.at_one() == lie_poisson_bivector(L)

    def test_level_grading_of_borel_sl3_is_valid(self):
        # graded pieces: Cartan at level 0, simple roots at 1, their sum at 2
        L = builtin_algebra("sl3")
        rd = L.root_data
        B = subalgebra_on_indices(L, sorted(rd.positive + rd.cartan))
        levels = {"e1": 1, "e2": 1, "e12": 2, "h1": 0, "h2": 0}
        w = ContractionWeights(tuple(levels[lab] for lab in B.labels))
        res = contract_algebra(B, w)
        assert res.valid

    def test_non_bivector_rejected(self):
        with pytest.raises(ValueError):
            contract(MultiVector(3, 1, {(0,): Polynomial.const(3, 1)}),
                     ContractionWeights((0, 0, 0)))

    def test_nonlinear_coefficients_supported(self):
        # quadratic coefficient: monomial weight 2, frame shift 2, power 0
        x = Polynomial.variable(2, 0)
        pi = MultiVector(2, 2, {(0, 1): x * x})
        res = contract(pi, ContractionWeights((1, 1)))
        assert res.valid
        assert res.pi_tilde == pi
        assert res.contracted is None


class TestTDegree:
    def test_split_weights(self):
        d, top = t_degree(casimir(), ContractionWeights((1, 0, 1)))
        assert (d, top) == (2, parse_polynomial("-2*e*f", EHF))

    def test_borel_weights(self):
        d, top = t_degree(casimir(), ContractionWeights((0, 0, 1)))
        assert (d, top) == (1, parse_polynomial("-2*e*f", EHF))

    def test_weight_zero(self):
        d, top = t_degree(parse_polynomial("h", EHF), ContractionWeights((3, 0, 2)))
        assert (d, top) == (0, parse_polynomial("h", EHF))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            t_degree(Polynomial.zero(3), ContractionWeights((0, 0, 0)))

    def test_multiplicative(self):
        rng = random.Random(23)
        w = ContractionWeights((2, 0, 1))
        done = 0
        while done < 30:
            p = random_polynomial(rng, 3)
            q = random_polynomial(rng, 3)
            if p.is_zero or q.is_zero:
                continue
            dp, tp = t_degree(p, w)
            dq, tq = t_degree(q, w)
            dpq, tpq = t_degree(p * q, w)
            assert dpq == dp + dq
            assert tpq == tp * tq
            done += 1


class TestHighestComponentCentral:
    def test_casimir_borel_weights(self):
        res = contract_algebra(sl2(), ContractionWeights((0, 0, 1)))
        assert highest_component_central(casimir(), res)

    def test_casimir_split_weights(self):
        res = contract_algebra(sl2(), ContractionWeights((1, 0, 1)))
        assert highest_component_central(casimir(), res)

    def test_constant(self):
        res = contract_algebra(sl2(), ContractionWeights((0, 0, 1)))
        assert highest_component_central(Polynomial.const(3, 7), res)

    def test_non_central_input_rejected(self):
        res = contract_algebra(sl2(), ContractionWeights((0, 0, 1)))
        with pytest.raises(ValueError):
            highest_component_central(parse_polynomial("e", EHF), res)

    def test_randomized_invariants(self):
        # polynomials in the Casimir stay central, and so do their tops
        rng = random.Random(55)
        L = sl2()
        res = contract_algebra(L, borel_decomposition(L))
        C = casimir()
        for _ in range(10):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
            H = (Polynomial.const(3, coeffs[0]) + C * coeffs[1]
                 + C * C * coeffs[2])
            if H.is_zero:
                continue
            assert highest_component_central(H, res)


def test_contracted_structure_constants_match_bivector():
    for name in ("sl3", "sp4"):
        L = builtin_algebra(name)
        res = contract_algebra(L, borel_decomposition(L))
        pi2 = lie_poisson_bivector(res.contracted)
        assert pi2 == res.pi_tilde


def test_generator_degree_sum_boundaries():
    # sum of t-degrees equals the weight total for the Borel split
    for name in ("sl2", "sl3", "sp4"):
        L = builtin_algebra(name)
        w = borel_decomposition(L)
        gs = char_invariants(L)
        total = sum(t_degree(g, w)[0] for g in gs.gens)
        assert total == w.total

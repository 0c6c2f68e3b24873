import random
from fractions import Fraction as F

import pytest

from nnspectra.core import (
    JordanSpec,
    RationalMatrix,
    Spectrum,
    companion_matrix,
    poly_from_roots,
    solve,
)
from nnspectra.errors import SpectrumMismatchError
from nnspectra.jcfcert import (
    enumerate_jordan_forms,
    integer_partitions,
    jordan_spec,
    rational_spectrum_of,
    segre_from_weyr,
    verify_certificate,
    weyr_sequence,
    weyr_sequence_float,
)

from conftest import random_invertible, random_jordan_spec


class TestWeyr:
    def test_single_j2(self):
        A = RationalMatrix([[1, 0], [1, 1]])
        assert weyr_sequence(A, 1) == (1, 2)

    def test_diagonal(self):
        assert weyr_sequence(RationalMatrix.identity(2), 1) == (2,)

    def test_companion_is_nonderogatory(self):
        # (x+2)^2 (x-3): companion has a single 2x2 block at -2
        C = companion_matrix(poly_from_roots([F(-2), F(-2), F(3)]))
        assert weyr_sequence(C, -2) == (1, 2)
        assert weyr_sequence(C, 3) == (1,)

    def test_non_eigenvalue_is_empty(self):
        assert weyr_sequence(RationalMatrix.identity(2), 5) == ()

    def test_weakly_increasing_and_stabilizes_at_multiplicity(self):
        rng = random.Random(2)
        for _ in range(10):
            spec = random_jordan_spec(rng, rng.randint(2, 5))
            J = spec.jordan_matrix()
            for value, sizes in spec.blocks:
                w = weyr_sequence(J, value)
                assert all(a < b for a, b in zip(w, w[1:]))
                assert w[-1] == sum(sizes)


class TestSegreWeyrConjugacy:
    def test_roundtrip(self):
        rng = random.Random(4)
        for _ in range(20):
            spec = random_jordan_spec(rng, rng.randint(1, 6))
            for value, sizes in spec.blocks:
                assert segre_from_weyr(spec.weyr_at(value)) == sizes


class TestJordanSpecOf:
    def test_worked_5x5_diagonalizable(self):
        C = RationalMatrix(
            [
                ["0", "1", "0", "0", "0"],
                ["11/2", "0", "1", "0", "0"],
                ["63/25", "0", "0", "1/2", "1/2"],
                ["9/100", "0", "67/50", "0", "2"],
                ["9/100", "0", "67/50", "2", "0"],
            ]
        )
        spectrum = Spectrum.from_values(["14/5", "11/5", "-1", "-2", "-2"])
        j = jordan_spec(C, spectrum)
        assert j.is_diagonal

    def test_direct_sum_with_j2(self):
        spec = JordanSpec.from_map({F(-2): [2], F(1): [1], F(4): [1]})
        J = spec.jordan_matrix()
        assert jordan_spec(J, spec.spectrum()) == spec

    def test_plant_and_recover(self):
        rng = random.Random(8)
        for _ in range(25):
            spec = random_jordan_spec(rng, rng.randint(2, 6))
            J = spec.jordan_matrix()
            S = random_invertible(rng, spec.order)
            A = solve(S, J @ S)  # S^-1 J S
            assert jordan_spec(A, spec.spectrum()) == spec

    def test_spectrum_mismatch_reports_residual(self):
        A = RationalMatrix.identity(2)
        with pytest.raises(SpectrumMismatchError) as err:
            jordan_spec(A, Spectrum.from_values([1, 2]))
        assert err.value.residual is not None


class TestEnumerate:
    def test_worked_list_has_two_forms(self):
        s = Spectrum.from_values(["14/5", "11/5", -1, -2, -2])
        forms = enumerate_jordan_forms(s)
        assert len(forms) == 2
        assert forms[0].sizes_at(-2) == (2,)  # reverse-lex: (2) before (1,1)
        assert forms[1].sizes_at(-2) == (1, 1)

    def test_all_simple_single_form(self):
        assert len(enumerate_jordan_forms(Spectrum.from_values([3, 1, 0]))) == 1

    def test_triple_multiplicity(self):
        assert integer_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
        forms = enumerate_jordan_forms(Spectrum.from_values([-2, -2, -2]))
        assert len(forms) == 3

    def test_count_is_product_of_partition_counts(self):
        s = Spectrum.from_values([5, 1, 1, -2, -2, -2])
        assert len(enumerate_jordan_forms(s)) == len(integer_partitions(2)) * len(
            integer_partitions(3)
        )


class TestVerifyCertificate:
    def test_pass_case(self):
        C = RationalMatrix(
            [
                ["0", "1", "0", "0", "0"],
                ["9", "0", "1", "0", "0"],
                ["433/100", "0", "0", "1/2", "1/2"],
                ["227/100", "0", "499/100", "0", "2"],
                ["227/100", "0", "499/100", "2", "0"],
            ]
        )
        spectrum = Spectrum.from_values(["19/5", "27/10", "-2", "-2", "-5/2"])
        diag = JordanSpec.from_map([(v, [1] * m) for v, m in spectrum.pairs])
        cert = verify_certificate(C, spectrum, diag)
        assert cert.verdict
        assert all(c.passed for c in cert.checks)

    def test_fail_at_weyr(self):
        A = RationalMatrix([[1, 0], [1, 1]])
        spectrum = Spectrum.from_values([1, 1])
        diag = JordanSpec.from_map({F(1): [1, 1]})
        cert = verify_certificate(A, spectrum, diag)
        assert not cert.verdict
        failing = [c.name for c in cert.checks if not c.passed]
        assert any(name.startswith("weyr@") for name in failing)

    def test_fail_is_verdict_not_error(self):
        A = RationalMatrix([[0, 1], [0, 0]])
        cert = verify_certificate(
            A, Spectrum.from_values([5, 5]), JordanSpec.from_map({F(5): [2]})
        )
        assert not cert.verdict

    def test_json_shape(self):
        A = RationalMatrix([[2]])
        cert = verify_certificate(
            A, Spectrum.from_values([2]), JordanSpec.from_map({F(2): [1]})
        )
        blob = cert.to_json()
        assert blob["verdict"] == "pass"
        assert blob["schema"] == 1


class TestRationalSpectrumOf:
    def test_recovers_planted(self):
        values = [F(3), F(-1, 2), F(-1, 2)]
        C = companion_matrix(poly_from_roots(values))
        assert rational_spectrum_of(C) == Spectrum.from_values(values)

    def test_irrational_returns_none(self):
        A = RationalMatrix([[0, 2], [1, 0]])  # roots +-sqrt(2)
        assert rational_spectrum_of(A) is None


class TestFloatWeyr:
    def test_marked_estimate_matches_exact_on_rational_input(self):
        spec = JordanSpec.from_map({F(2): [2, 1]})
        J = spec.jordan_matrix()
        from nnspectra.core import to_float

        assert weyr_sequence_float(to_float(J), 2.0) == weyr_sequence(J, 2)

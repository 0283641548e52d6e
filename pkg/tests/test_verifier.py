import itertools

import numpy as np
import pytest

from cyclecover import _kernels
from cyclecover.core import OrientationFamily, Tournament, UNCYCLED_SUBSET
from cyclecover.cycling import construct_family
from cyclecover.verifier import (
    check_all_orderings,
    check_increasing,
    check_weak,
    run_check,
)
from conftest import (
    count_uncovered_by_inclusion_exclusion,
    oracle_check_increasing,
    oracle_check_weak,
    random_family,
)


def transitive_family(n):
    return OrientationFamily(n, (Tournament.transitive(n),))


class TestCheckIncreasing:
    def test_construction_ok(self):
        assert check_increasing(construct_family(5, 3), 3) is None

    def test_transitive_witness(self):
        w = check_increasing(transitive_family(4), 3)
        assert w.kind == UNCYCLED_SUBSET
        assert w.vertices == (0, 1, 2)

    def test_construction_33_3(self):
        fam = construct_family(33, 3)
        assert len(fam.rounds) == 5
        assert check_increasing(fam, 3) is None

    def test_witness_is_lex_first(self, rng):
        for _ in range(60):
            n = int(rng.integers(5, 12))
            k = int(rng.integers(3, 6))
            fam = random_family(rng, n, int(rng.integers(0, 3)))
            w = check_increasing(fam, k)
            expected = oracle_check_increasing(fam, k)
            assert (w.vertices if w else None) == expected

    def test_kernel_matches_fallback(self, rng):
        for _ in range(40):
            n = int(rng.integers(5, 14))
            k = int(rng.integers(3, 6))
            fam = random_family(rng, n, int(rng.integers(1, 4)))
            bits = np.stack([t.bits for t in fam.rounds])
            assert _kernels.scan_increasing(n, k, bits) == _kernels.scan_increasing(
                n, k, bits, force_python=True
            )

    def test_counting_oracle_agreement(self, rng):
        fam = construct_family(16, 4)
        assert count_uncovered_by_inclusion_exclusion(fam, 4) == 0
        for _ in range(10):
            fam = random_family(rng, 10, 2)
            uncovered = count_uncovered_by_inclusion_exclusion(fam, 4)
            assert (uncovered == 0) == (check_increasing(fam, 4) is None)

    def test_validation(self):
        with pytest.raises(ValueError):
            check_increasing(transitive_family(4), 2)
        with pytest.raises(ValueError):
            check_increasing(transitive_family(4), 5)


class TestCheckWeak:
    def test_increasing_implies_weak(self):
        fam = construct_family(9, 4)
        assert check_increasing(fam, 4) is None
        assert check_weak(fam, 4) is None

    def test_transitive_witness(self):
        w = check_weak(transitive_family(5), 4)
        assert w is not None
        assert w.vertices == (0, 1, 2, 3)

    def test_matches_factorial_oracle(self, rng):
        for _ in range(25):
            n = int(rng.integers(5, 8))
            k = int(rng.integers(3, min(n, 6) + 1))
            fam = random_family(rng, n, int(rng.integers(1, 3)))
            w = check_weak(fam, k)
            assert (w.vertices if w else None) == oracle_check_weak(fam, k)

    def test_equals_increasing_at_k3(self, rng):
        for _ in range(40):
            fam = random_family(rng, int(rng.integers(4, 9)), int(rng.integers(0, 3)))
            wi = check_increasing(fam, 3)
            ww = check_weak(fam, 3)
            assert (wi is None) == (ww is None)
            if wi is not None:
                assert wi.vertices == ww.vertices


class TestCheckAllOrderings:
    def test_equals_increasing_at_k3(self, rng):
        for _ in range(40):
            fam = random_family(rng, int(rng.integers(4, 9)), int(rng.integers(0, 3)))
            wi = check_increasing(fam, 3)
            wa = check_all_orderings(fam, 3)
            assert (wi is None) == (wa is None)
            if wi is not None:
                assert wi.vertices == wa.vertices

    def test_construction_is_not_a_w_family(self):
        # the increasing-cycle construction covers only the increasing
        # ordering; some other cyclic ordering goes uncovered
        w = check_all_orderings(construct_family(9, 4), 4)
        assert w is not None
        assert w.vertices == (0, 1, 2, 3)
        assert w.detail["ordering"] == [0, 1, 3, 2]


class TestRelations:
    def test_implication_chain(self, rng):
        for _ in range(30):
            n = int(rng.integers(5, 9))
            k = int(rng.integers(3, 6))
            if k > n:
                continue
            fam = random_family(rng, n, int(rng.integers(1, 4)))
            if check_all_orderings(fam, k) is None:
                assert check_weak(fam, k) is None
            if check_increasing(fam, k) is None:
                assert check_weak(fam, k) is None

    def test_appending_rounds_is_monotone(self, rng):
        for _ in range(20):
            n = int(rng.integers(5, 9))
            fam = random_family(rng, n, 2)
            extended = OrientationFamily(
                n, fam.rounds + (Tournament.transitive(n),)
            )
            for check in (check_increasing, check_weak, check_all_orderings):
                if check(fam, 3) is None:
                    assert check(extended, 3) is None


class TestRunCheck:
    def test_ok_document(self):
        doc = run_check(construct_family(5, 3), 3, "increasing")
        assert doc["status"] == "ok"
        assert doc["subsets_checked"] == 10
        assert doc["rounds"] == 2

    def test_fail_document_counts_to_witness(self):
        doc = run_check(transitive_family(4), 3, "increasing")
        assert doc["status"] == "fail"
        assert doc["subsets_checked"] == 1
        assert doc["witness"]["vertices"] == [0, 1, 2]

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            run_check(transitive_family(4), 3, "sampled")

"""The seven acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (run pytest with ``-s`` or read the
captured output) and asserts exact equality throughout; the two criteria
with stated runtime budgets also assert them.
"""

from bottsam import selftest


def report(index, result):
    print(result.line(index))
    assert result.passed, result.detail
    return result


def test_criterion_1_delta_integrals():
    result = report(1, selftest.check_delta_integrals(seed=0))
    assert result.seconds < 120.0, f"budget exceeded: {result.seconds:.1f}s"


def test_criterion_2_generator_products():
    report(2, selftest.check_generator_products(seed=0))


def test_criterion_3_billey_identity():
    result = report(3, selftest.check_billey_suite())
    assert result.seconds < 30.0, f"budget exceeded: {result.seconds:.1f}s"


def test_criterion_4_reduced_word_independence():
    report(4, selftest.check_reduced_word_independence())


def test_criterion_5_origin_ring_homomorphism():
    report(5, selftest.check_origin_homomorphism())


def test_criterion_6_expansion_roundtrip():
    report(6, selftest.check_expansion_roundtrip(seed=0))


def test_criterion_7_a2_golden_file():
    report(7, selftest.check_golden_file())

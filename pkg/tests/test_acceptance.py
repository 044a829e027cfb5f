"""Exit criteria, one test each.

Each criterion is a plain function raising ``AssertionError`` on failure,
so the module also runs standalone: ``python tests/test_acceptance.py``
prints one PASS/FAIL line per criterion.  Under pytest the same lines
appear in the terminal summary.
"""
import itertools
import random
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from borderidx import (  # noqa: E402
    Cone,
    LinearWeight,
    Polynomial,
    RationalGF,
    StanleyDecomposition,
    bounding_box,
    check_admissible,
    clears_denominator,
    expand,
    higher_border,
    ind_gf,
    ind_gf_2d,
    index_table,
    order_ideal_from_generators,
    order_ideal_from_partition,
    pn_closed,
    pn_derivative_oracle,
    pn_series_oracle,
    validate_partition,
    verify_ind_gf,
)
from borderidx.decomposition import border_anchored_decomposition  # noqa: E402
from borderidx.index import higher_border_by_multiples  # noqa: E402
from borderidx.sampling import random_partition, random_weight  # noqa: E402

from conftest import GOLDEN_ROWS, random_corpus  # noqa: E402

RESULTS: dict[str, str] = {}


def example_ideal():
    return order_ideal_from_generators(2, [(2, 0), (0, 2)])


def economic_expression():
    mono = lambda a, b: Polynomial.monomial((a, b))  # noqa: E731
    p2 = RationalGF(mono(0, 3) * (Polynomial.constant(2) - mono(1, 1)), (2, 2))
    in_y1 = lambda a, b: RationalGF(mono(a, b), (2, 0))  # noqa: E731
    return p2 + in_y1(1, 2) + RationalGF.polynomial(mono(1, 1)) + in_y1(2, 1) + in_y1(3, 0)


def timed(limit_s):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            fn()
            elapsed = time.perf_counter() - start
            assert elapsed < limit_s, f"took {elapsed:.2f}s, limit {limit_s}s"
            return elapsed

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


@timed(1.0)
def criterion_1_golden_matrix():
    """index table of the 5-element staircase on (7,7) equals all 64 entries"""
    table = index_table(example_ideal(), (7, 7))
    assert table.rows() == GOLDEN_ROWS


@timed(1.0)
def criterion_2_golden_gf():
    """index GF equals the economic-decomposition expression and expands to the matrix"""
    O = example_ideal()
    g = ind_gf(O).gf
    assert g == economic_expression()
    series = expand(g, (7, 7))
    got = [[series[a, b] for a in range(8)] for b in range(7, -1, -1)]
    assert got == GOLDEN_ROWS


@timed(30.0)
def criterion_3_closed_form_theorem():
    """P_n closed form equals the series oracle for 100+ rational weights on (6,...,6)"""
    rng = random.Random(2024)
    checked = 0
    for k in range(100):
        n = k % 5
        w = random_weight(rng, n, bound=1000)
        bounds = (6,) * n
        assert expand(pn_closed(w), bounds) == pn_series_oracle(w, bounds), w
        checked += 1
    for k in range(25):
        n = k % 5
        w = LinearWeight([rng.randint(0, 6) for _ in range(n)], rng.randint(0, 9))
        bounds = (6,) * n
        series = pn_series_oracle(w, bounds)
        assert expand(pn_closed(w), bounds) == series
        assert pn_derivative_oracle(w, bounds) == series, w
        checked += 1
    assert checked >= 100


@timed(60.0)
def criterion_4_oracle_sweep():
    """50 random ideals (dims 1-4, <= 60 elements) verify to corner+3 and clear (1-y)^2"""
    corpus = random_corpus(4, 50, max_dim=4, max_elements=60)
    assert {O.dim for O in corpus} == {1, 2, 3, 4}
    for O in corpus:
        assert 1 <= len(O) <= 60
        g = ind_gf(O)
        bounds = [m + 3 for m in bounding_box(O).corner]
        report = verify_ind_gf(g, O, bounds)
        assert report, (O, report)
        assert clears_denominator(g.gf, (2,) * O.dim)


def criterion_5_route_agreement():
    """two-variable formula equals the general construction for 50 random partitions"""
    rng = random.Random(55)
    for _ in range(50):
        lam = random_partition(rng, max_parts=6, max_part=6)
        assert len(lam) <= 6 and lam[0] <= 6
        assert ind_gf_2d(lam) == ind_gf(order_ideal_from_partition(lam)), lam


def criterion_6_lemma_suite():
    """border layers, subadditivity and linear growth, exhaustively within corner+4"""
    for O in random_corpus(4, 50, max_dim=4, max_elements=60):
        corner = bounding_box(O).corner
        bounds = tuple(m + 4 for m in corner)
        table = index_table(O, bounds)
        v = table.values
        box = list(itertools.product(*(range(b + 1) for b in bounds)))

        # layers 0..5 pairwise disjoint, covering every box point of index <= 5,
        # and the iterative layers match the multiples-of-degree description
        layers = [higher_border(O, k, check=False) for k in range(6)]
        for k, layer in enumerate(layers):
            assert layer == higher_border_by_multiples(O, k)
        for a, b in itertools.combinations(layers, 2):
            assert not (a & b)
        union = set().union(*layers)
        for alpha in box:
            if v[alpha] <= 5:
                assert alpha in union
        for k, layer in enumerate(layers):
            inside = (a for a in layer if all(x <= b for x, b in zip(a, bounds)))
            assert all(v[a] == k for a in inside)

        # ind(t + t') <= |t| + ind(t') for all t, t' with t + t' in the box
        for t in box:
            rest = tuple(slice(0, b - x + 1) for b, x in zip(bounds, t))
            shifted = tuple(slice(x, b + 1) for b, x in zip(bounds, t))
            assert np.all(v[shifted] <= sum(t) + v[rest])

        # past the corner in direction i the index climbs by exactly one per step;
        # chains of such steps give ind(a + beta) = ind(a) + |beta| for beta on S
        for i, m in enumerate(corner):
            lo = [slice(None)] * O.dim
            hi = [slice(None)] * O.dim
            lo[i], hi[i] = slice(m + 1, -1), slice(m + 2, None)
            assert np.all(v[tuple(hi)] - v[tuple(lo)] == 1)
        # and directly: every alpha, every beta supported where alpha is past the corner
        # (beta_i = 0 allowed, so this covers every nonempty S at once)
        for alpha in box:
            room = [b - a if a > m else 0 for a, m, b in zip(alpha, corner, bounds)]
            if not any(a > m for a, m in zip(alpha, corner)):
                continue
            for beta in itertools.product(*(range(r + 1) for r in room)):
                end = tuple(a + b for a, b in zip(alpha, beta))
                assert v[end] == v[alpha] + sum(beta), (O, alpha, beta)


def criterion_7_negative_controls():
    """the inadmissible decomposition is falsified; the O-plus-border decomposition double-counts"""
    O = example_ideal()
    bad = StanleyDecomposition(
        2, [Cone((0, 3), (0, 1)), Cone((1, 2), (0,)), Cone((1, 1), (0,)), Cone((3, 0), (0,))]
    )
    assert validate_partition(bad, O)
    verdict = check_admissible(bad, O, (8, 8))
    assert verdict.status == "falsified"
    cone, beta, base, got = verdict.witness
    assert cone == Cone((1, 1), (0,)) and base == 1 and got == 1 and sum(beta) == 1
    report = validate_partition(border_anchored_decomposition(O), O)
    assert not report and report.reason == "cones overlap"


CRITERIA = [
    criterion_1_golden_matrix,
    criterion_2_golden_gf,
    criterion_3_closed_form_theorem,
    criterion_4_oracle_sweep,
    criterion_5_route_agreement,
    criterion_6_lemma_suite,
    criterion_7_negative_controls,
]


def _run(fn):
    start = time.perf_counter()
    try:
        fn()
    except AssertionError as exc:
        RESULTS[fn.__name__] = f"FAIL {fn.__name__}: {exc}"
        raise
    RESULTS[fn.__name__] = f"PASS {fn.__name__} ({time.perf_counter() - start:.2f}s) - {fn.__doc__}"


def test_criterion_1_golden_matrix():
    _run(criterion_1_golden_matrix)


def test_criterion_2_golden_gf():
    _run(criterion_2_golden_gf)


def test_criterion_3_closed_form_theorem():
    _run(criterion_3_closed_form_theorem)


def test_criterion_4_oracle_sweep():
    _run(criterion_4_oracle_sweep)


def test_criterion_5_route_agreement():
    _run(criterion_5_route_agreement)


def test_criterion_6_lemma_suite():
    _run(criterion_6_lemma_suite)


def test_criterion_7_negative_controls():
    _run(criterion_7_negative_controls)


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        try:
            _run(fn)
        except AssertionError:
            failed += 1
        print(RESULTS[fn.__name__])
    sys.exit(1 if failed else 0)

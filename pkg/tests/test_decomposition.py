import itertools
import random

import pytest

from borderidx import (
    Cone,
    OrderIdeal,
    Polynomial,
    RationalGF,
    StanleyDecomposition,
    assemble_ind_gf,
    bounding_box,
    check_admissible,
    clears_denominator,
    cone_disjoint,
    enlarged_box_decomposition,
    expand,
    ind_gf,
    ind_gf_2d,
    index_by_divisor,
    index_table,
    order_ideal_from_partition,
    pn_closed,
    LinearWeight,
    validate_partition,
    verify_ind_gf,
)
from borderidx.decomposition import (
    border_anchored_decomposition,
    literal_box_border_decomposition,
)
from borderidx.sampling import random_partition

from conftest import random_corpus

X, Y = 0, 1  # direction indices of y1, y2

ECONOMIC = StanleyDecomposition(
    2,
    [
        Cone((0, 3), (X, Y)),
        Cone((1, 2), (X,)),
        Cone((1, 1)),
        Cone((2, 1), (X,)),
        Cone((3, 0), (X,)),
    ],
)
INADMISSIBLE = StanleyDecomposition(
    2,
    [Cone((0, 3), (X, Y)), Cone((1, 2), (X,)), Cone((1, 1), (X,)), Cone((3, 0), (X,))],
)


def p1(b):
    return RationalGF(Polynomial(1, {(0,): b, (1,): 1 - b}), (2,))


def economic_expression():
    """y2^3 P2(1,1;1) + y1 y2^2 P1(y1;1;1) + y1 y2 + y1^2 y2 P1(y1;1;1) + y1^3 P1(y1;1;1).

    P1(y;1;1) = 1/(1-y)^2 and P2(y1,y2;1,1;1) = (1 - y1 y2)/((1-y1)(1-y2))^2,
    written out by hand.
    """
    mono = lambda a, b: Polynomial.monomial((a, b))  # noqa: E731
    p2 = RationalGF(mono(0, 3) * (Polynomial.constant(2) - mono(1, 1)), (2, 2))
    in_y1 = lambda a, b: RationalGF(mono(a, b), (2, 0))  # noqa: E731
    return p2 + in_y1(1, 2) + RationalGF.polynomial(mono(1, 1)) + in_y1(2, 1) + in_y1(3, 0)


def test_cone_disjoint_examples():
    assert cone_disjoint(Cone((3, 0), (X,)), Cone((0, 3), (Y,)))
    assert not cone_disjoint(Cone((3, 2), (X, Y)), Cone((2, 3), (X, Y)))
    assert (3, 3) in Cone((3, 2), (X, Y)) and (3, 3) in Cone((2, 3), (X, Y))
    assert not cone_disjoint(Cone((1, 1), (X,)), Cone((1, 1), (X,)))


def test_cone_disjoint_brute_force():
    rng = random.Random(0)
    for _ in range(300):
        n = rng.randint(1, 3)
        cones = [
            Cone([rng.randint(0, 3) for _ in range(n)], [i for i in range(n) if rng.random() < 0.5])
            for _ in range(2)
        ]
        box = itertools.product(*(range(8) for _ in range(n)))
        shared = any(p in cones[0] and p in cones[1] for p in box)
        assert cone_disjoint(*cones) == (not shared)


def test_validate_economic(ex_ideal):
    assert validate_partition(ECONOMIC, ex_ideal)
    missing = StanleyDecomposition(2, [c for c in ECONOMIC if c.anchor != (1, 1)])
    report = validate_partition(missing, ex_ideal)
    assert not report and report.reason == "coverage fails"
    assert report.witness == ((1, 1), 0)
    doubled = StanleyDecomposition(2, list(ECONOMIC) + [ECONOMIC.cones[0]])
    assert validate_partition(doubled, ex_ideal).reason == "cones overlap"


def test_validate_rejects_anchor_inside(ex_ideal):
    d = StanleyDecomposition(2, list(ECONOMIC) + [Cone((1, 0))])
    report = validate_partition(d, ex_ideal)
    assert report.reason == "anchor inside the order ideal" and report.witness == (1, 0)


def test_admissibility(ex_ideal):
    assert check_admissible(ECONOMIC, ex_ideal, (8, 8)).status == "sampled_ok"
    box = enlarged_box_decomposition(ex_ideal)
    assert check_admissible(box, ex_ideal, (8, 8)).status == "proved"
    assert check_admissible(box, ex_ideal, (8, 8), force_sampling=True).status == "sampled_ok"
    verdict = check_admissible(INADMISSIBLE, ex_ideal, (8, 8))
    assert verdict.status == "falsified"
    cone, beta, base, got = verdict.witness
    assert cone == Cone((1, 1), (X,)) and beta == (1, 0) and (base, got) == (1, 1)


def test_all_singletons_vacuous(ex_ideal):
    pts = [p for p in itertools.product(range(4), range(4)) if p not in ex_ideal]
    d = StanleyDecomposition(2, [Cone(p) for p in pts])
    assert check_admissible(d, ex_ideal, (3, 3)).status == "proved"
    assert check_admissible(d, ex_ideal, (3, 3), force_sampling=True).status == "sampled_ok"


def test_enlarged_box_example(ex_ideal):
    d = enlarged_box_decomposition(ex_ideal)
    expected = {
        Cone((3, 3), (X, Y)),
        Cone((3, 0), (X,)), Cone((3, 1), (X,)), Cone((3, 2), (X,)),
        Cone((0, 3), (Y,)), Cone((1, 3), (Y,)), Cone((2, 3), (Y,)),
        Cone((1, 1)), Cone((2, 1)), Cone((1, 2)), Cone((2, 2)),
    }
    assert len(d) == 11 and set(d) == expected
    assert validate_partition(d, ex_ideal)


def test_enlarged_box_small():
    d = enlarged_box_decomposition(OrderIdeal(2, frozenset({(0, 0)})))
    assert set(d) == {Cone((1, 1), (X, Y)), Cone((1, 0), (X,)), Cone((0, 1), (Y,))}
    line = enlarged_box_decomposition(OrderIdeal(1, frozenset({(0,), (1,), (2,)})))
    assert list(line) == [Cone((3,), (0,))]


def test_assemble_economic(ex_ideal):
    g = assemble_ind_gf(ECONOMIC, ex_ideal)
    assert g.gf == economic_expression()
    assert verify_ind_gf(g, ex_ideal, (7, 7))


def test_assemble_line():
    O = OrderIdeal(1, frozenset({(0,)}))
    g = assemble_ind_gf(StanleyDecomposition(1, [Cone((1,), (0,))]), O)
    assert g.gf == RationalGF(Polynomial.monomial((1,)), (2,))


def test_assemble_origin():
    O = OrderIdeal(2, frozenset({(0, 0)}))
    g = assemble_ind_gf(enlarged_box_decomposition(O), O)
    assert g.gf == pn_closed(LinearWeight([1, 1], 0))
    assert g.gf.reduce().numerator == Polynomial(2, {(1, 0): 1, (0, 1): 1, (1, 1): -2})


def test_ind_gf_examples(ex_ideal):
    assert ind_gf(ex_ideal) == economic_expression()
    for n in (1, 2, 3):
        O = OrderIdeal(n, frozenset({(0,) * n}))
        assert ind_gf(O) == pn_closed(LinearWeight.unit(n, 0))
    O = OrderIdeal(1, frozenset({(0,), (1,), (2,)}))
    assert list(expand(ind_gf(O).gf, (6,)).coeffs) == [0, 0, 0, 1, 2, 3, 4]


def test_ind_gf_2d_examples(ex_ideal):
    assert ind_gf_2d((3, 1, 1)) == ind_gf(ex_ideal)
    assert ind_gf_2d((1,)) == pn_closed(LinearWeight([1, 1], 0))
    O = order_ideal_from_partition((2, 2))
    assert verify_ind_gf(ind_gf_2d((2, 2)), O, (5, 5))


def test_verify_detects_fault(ex_ideal):
    g = ind_gf(ex_ideal).gf
    (alpha, c), *_ = g.numerator.sorted_terms()
    bad = RationalGF(g.numerator + Polynomial.monomial(alpha), g.den)
    report = verify_ind_gf(bad, ex_ideal, (7, 7))
    assert not report and report.witness == alpha
    assert report.expected == index_by_divisor(ex_ideal, alpha)


def test_double_counting_guards(ex_ideal):
    report = validate_partition(border_anchored_decomposition(ex_ideal), ex_ideal)
    assert not report and report.reason == "cones overlap"
    literal = literal_box_border_decomposition(ex_ideal)
    assert Cone((3, 2), (X, Y)) in literal.cones and Cone((2, 3), (X, Y)) in literal.cones
    assert not validate_partition(literal, ex_ideal)


CORPUS = random_corpus(21, 25)


@pytest.mark.parametrize("O", CORPUS, ids=lambda O: f"dim{O.dim}n{len(O)}")
def test_box_decomposition_on_corpus(O):
    d = enlarged_box_decomposition(O)
    assert validate_partition(d, O)
    assert check_admissible(d, O, [m + 3 for m in bounding_box(O).corner]).status == "proved"
    g = ind_gf(O)
    assert clears_denominator(g.gf, (2,) * O.dim)
    assert verify_ind_gf(g, O, [m + 3 for m in bounding_box(O).corner])


def test_strip_growth_2d():
    rng = random.Random(8)
    for _ in range(30):
        lam = random_partition(rng)
        m = len(lam)
        table = index_table(order_ideal_from_partition(lam), (m + 5, lam[0] + 5))
        v = table.values
        for i in range(m, m + 5):
            assert all(v[i + 1, j] == v[i, j] + 1 for j in range(lam[0] + 6))
        for j in range(lam[0], lam[0] + 5):
            assert all(v[i, j + 1] == v[i, j] + 1 for i in range(m + 6))


@pytest.mark.parametrize("seed", range(10))
def test_routes_agree(seed):
    lam = random_partition(random.Random(seed))
    assert ind_gf_2d(lam) == ind_gf(order_ideal_from_partition(lam))

import random
from fractions import Fraction

import pytest

from hopfdiff.exactlin import Mat
from hopfdiff.lie import (
    FinLie,
    LieAction,
    adjoint_lie_action,
    check_lie_crossed_hom,
    check_lie_diffop,
    derived_lie_action,
    diffop_from_endo,
    endo_from_diffop,
    is_lie_endo,
    lie_endo_bijection,
    lie_graph_check,
    semidirect,
    trivial_lie_action,
)

F = Fraction


def aff1():
    return FinLie.from_pairs(["a", "b"], {(0, 1): [0, 1]}, "aff1")


def sl2():
    return FinLie.from_pairs(
        ["e", "f", "h"], {(0, 1): [0, 0, 1], (0, 2): [-2, 0, 0], (1, 2): [0, 2, 0]},
        "sl2")


def test_finlie_validates_jacobi():
    # [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 + [a,b] + 0 = c for this table
    with pytest.raises(ValueError):
        FinLie.from_pairs(["a", "b", "c"],
                          {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0], (1, 2): [0, 0, 0]})


def test_action_validation_rejects_non_derivations():
    g = aff1()
    with pytest.raises(ValueError):
        LieAction(g, g, [Mat.identity(2), Mat.zero(2, 2)])


def test_zero_map_is_crossed_hom():
    g = aff1()
    assert check_lie_crossed_hom(Mat.zero(2, 2), adjoint_lie_action(g))
    assert check_lie_crossed_hom(Mat.zero(2, 2), trivial_lie_action(g, g))


def test_minus_id_is_diffop():
    for g in (aff1(), sl2()):
        minus = Mat(g.dim, g.dim, [-(F(1) if i == j else F(0))
                                   for i in range(g.dim) for j in range(g.dim)])
        assert check_lie_diffop(g, minus)
        assert check_lie_diffop(g, Mat.zero(g.dim, g.dim))


def test_hand_checked_crossed_hom_on_aff1():
    # d(a) = b, d(b) = 0 against the adjoint action: d[a,b] = d(b) = 0 and
    # ad_a(d b) - ad_b(d a) + [d a, d b] = 0 - [b,b] + 0 = 0
    g = aff1()
    d = Mat.from_cols([[0, 1], [0, 0]])
    assert check_lie_crossed_hom(d, adjoint_lie_action(g))


def test_endo_family_on_aff1():
    g = aff1()
    for beta in (F(0), F(1), F(-1, 2), F(3)):
        f = Mat.from_cols([[1, beta], [0, 1]])
        assert is_lie_endo(g, f)
        assert check_lie_diffop(g, diffop_from_endo(f))


def test_bijection_translations():
    g = sl2()
    ident = Mat.identity(3)
    zero = Mat.zero(3, 3)
    assert diffop_from_endo(ident).entries == zero.entries
    assert endo_from_diffop(zero) == ident
    verdicts = lie_endo_bijection(g, [zero, diffop_from_endo(ident)])
    assert all(v for _, v in verdicts)


def test_derived_action_cases():
    g = aff1()
    adj = adjoint_lie_action(g)
    # d = 0 reproduces the action
    derived = derived_lie_action(Mat.zero(2, 2), adj)
    assert all(m1 == m2 for m1, m2 in zip(derived.phi, adj.phi))
    # d = -id cancels the adjoint action entirely
    minus = Mat(2, 2, [F(-1), F(0), F(0), F(-1)])
    derived = derived_lie_action(minus, adj)
    assert all(m == Mat.zero(2, 2) for m in derived.phi)
    # the hand-checked crossed homomorphism gives exact matrices:
    # phi_d(a) = ad_a + [b, .], so a -> [a,a]+[b,a] = -b and b -> [a,b] = b
    d = Mat.from_cols([[0, 1], [0, 0]])
    derived = derived_lie_action(d, adj)
    assert derived.phi[0] == Mat.from_cols([[F(0), F(-1)], [F(0), F(1)]])
    assert derived.phi[1] == Mat.from_cols([[F(0), F(-1)], [F(0), F(0)]])


def test_derived_action_requires_crossed_hom():
    g = aff1()
    with pytest.raises(ValueError):
        derived_lie_action(Mat.identity(2), adjoint_lie_action(g))


def test_semidirect_trivial_action_is_direct_sum():
    g, h = aff1(), sl2()
    sd = semidirect(trivial_lie_action(g, h))
    assert sd.dim == 5
    # cross brackets vanish
    for i in range(3):
        for j in range(3, 5):
            assert not any(sd.bracket_tensor[i][j])


def test_semidirect_one_dim_action_is_nonabelian():
    g1 = FinLie.from_pairs(["x"], {}, "k")
    h1 = FinLie.from_pairs(["u"], {}, "k")
    sd = semidirect(LieAction(g1, h1, [Mat.from_cols([[1]])]))
    # [u, x] = -phi(x)(u) = -u
    assert sd.bracket_tensor[0][1] == [F(-1), F(0)]


def test_semidirect_adjoint_passes_jacobi():
    g = sl2()
    sd = semidirect(adjoint_lie_action(g))
    assert sd.dim == 6  # construction validates Jacobi exhaustively


def test_graph_characterization_matches_direct_check():
    g = aff1()
    adj = adjoint_lie_action(g)
    rng = random.Random(11)
    pool = [F(0), F(1), F(-1), F(1, 2), F(2)]
    agree = 0
    for _ in range(60):
        d = Mat(2, 2, [rng.choice(pool) for _ in range(4)])
        res = lie_graph_check(d, adj)
        assert res.agrees_with_direct_check
        agree += res.closed
    assert 0 < agree < 60  # both verdicts exercised


def test_graph_of_zero_map_is_factor():
    g = sl2()
    res = lie_graph_check(Mat.zero(3, 3), adjoint_lie_action(g))
    assert res.closed and len(res.basis) == 3

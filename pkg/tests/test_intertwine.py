import random
from fractions import Fraction
from math import factorial

import pytest

from fiblucas.derivops import Derivation
from fiblucas.exactnum import binomial
from fiblucas.intertwine import (
    AF,
    AL,
    ROUTES,
    LinearSubstitution,
    alpha,
    b_sequence,
    check_intertwining,
    psi,
    solve_recurrence_af,
    solve_recurrence_al,
)
from fiblucas.polyring import Poly


def g(n):
    return Poly.gen(n)


# ---- recurrence solvers -------------------------------------------------


def test_solve_recurrence_al_with_constant_forcing():
    # (n-2) x_n = n (x_{n-1} + 1) telescopes to x_n = n(n-2)
    ones = [Fraction(1)] * 21
    xs = solve_recurrence_al(2, ones, 20)
    assert xs[0] == 0
    for j, n in enumerate(range(2, 21)):
        assert xs[j] == n * (n - 2)


def test_solve_recurrence_al_matches_direct_iteration():
    rng = random.Random(42)
    for a in (0, 1, 3):
        gseq = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(25)]
        closed = solve_recurrence_al(a, gseq, 24)
        direct = [Fraction(0)]
        for n in range(a + 1, 25):
            direct.append(n * (direct[-1] + gseq[n - 1]) / (n - a))
        assert closed == direct


def test_solve_recurrence_al_chained_gives_second_coefficient():
    ones = [Fraction(1)] * 21
    first = [Fraction(0)] * 21
    vals = solve_recurrence_al(2, ones, 20)
    first[2:] = vals
    second = solve_recurrence_al(4, first, 20)
    for j, n in enumerate(range(4, 21)):
        assert second[j] == Fraction(n - 4) * binomial(n, 2) * (3 * n - 7) / 2


def test_solve_recurrence_af_with_constant_forcing():
    ones = [Fraction(1)] * 21
    xs = solve_recurrence_af(2, ones, 20)
    assert xs[0] == 0
    for j, n in enumerate(range(2, 21)):
        assert xs[j] == Fraction((n - 1) * (n - 2), 2)


def test_solve_recurrence_af_matches_direct_iteration():
    rng = random.Random(43)
    for s in (2, 4, 5):
        gseq = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(25)]
        closed = solve_recurrence_af(s, gseq, 24)
        direct = [Fraction(0)]
        for n in range(s + 1, 25):
            direct.append(n * (direct[-1] / (n - s) + gseq[n - 1] / (n - s + 2)))
        assert closed == direct


def test_solve_recurrence_af_chained_gives_second_coefficient():
    first = [Fraction((n - 1) * (n - 2), 2) for n in range(21)]
    second = solve_recurrence_af(4, first, 20)
    for j, n in enumerate(range(4, 21)):
        assert second[j] == Fraction((n - 4) * (n - 3) * (n - 2) * n, 6)


def test_solve_recurrence_af_requires_s_at_least_two():
    with pytest.raises(ValueError):
        solve_recurrence_af(1, [Fraction(1)] * 5, 4)


def test_solvers_out_of_range():
    assert solve_recurrence_al(5, [Fraction(1)] * 6, 4) == []
    assert solve_recurrence_af(5, [Fraction(1)] * 6, 4) == []


# ---- b sequences ---------------------------------------------------------


def test_b_sequence_al_golden():
    assert b_sequence(AL, 7) == [
        Fraction(1),
        Fraction(1),
        Fraction(3, 4),
        Fraction(19, 36),
        Fraction(211, 576),
        Fraction(1217, 4800),
        Fraction(30307, 172800),
    ]


def test_b_sequence_af_golden():
    assert b_sequence(AF, 7) == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 6),
        Fraction(7, 144),
        Fraction(13, 960),
        Fraction(107, 28800),
        Fraction(409, 403200),
    ]


def test_b_sequence_normalization():
    assert b_sequence(AL, 1) == [Fraction(1)]
    with pytest.raises(ValueError):
        b_sequence(AL, 0)
    with pytest.raises(ValueError):
        b_sequence("XY", 3)


def test_b_recurrence_identities():
    b_al = b_sequence(AL, 13)
    for n in range(1, 13):
        total = sum(
            Fraction((-1) ** (n - i)) * b_al[i] / factorial(n - i) ** 2
            for i in range(n + 1)
        )
        assert total == 0, n
    b_af = b_sequence(AF, 13)
    for n in range(1, 13):
        total = sum(
            Fraction((-1) ** (n - i))
            * b_af[i]
            / (factorial(n - i) * factorial(n - i + 1))
            for i in range(n + 1)
        )
        assert total == 0, n


# ---- alpha coefficients --------------------------------------------------


AL_FORMULAS = {
    1: lambda n: Fraction(n * (n - 2)),
    2: lambda n: Fraction((n - 4) * binomial(n, 2) * (3 * n - 7), 2),
    3: lambda n: Fraction(
        (n - 6) * binomial(n, 3) * (19 * n ** 2 - 141 * n + 254), 6
    ),
    4: lambda n: Fraction(
        (n - 8)
        * binomial(n, 4)
        * (211 * n ** 3 - 3258 * n ** 2 + 16481 * n - 27306),
        24,
    ),
    5: lambda n: Fraction(
        (n - 10)
        * binomial(n, 5)
        * (
            3651 * n ** 4
            - 96550 * n ** 3
            + 946185 * n ** 2
            - 4071950 * n
            + 6492024
        ),
        120,
    ),
}

AF_FORMULAS = {
    1: lambda n: Fraction((n - 1) * (n - 2), 2),
    2: lambda n: Fraction((n - 4) * (n - 3) * (n - 2) * n, 6),
    3: lambda n: Fraction(
        (n - 1) * n * (n - 4) * (n - 5) * (7 * n - 17) * (n - 6), 144
    ),
    4: lambda n: Fraction(
        (n - 8)
        * (39 * n ** 2 - 296 * n + 545)
        * (n - 7)
        * (n - 6)
        * (n - 2)
        * (n - 1)
        * n,
        2880,
    ),
}


def test_alpha_al_matches_printed_formulas():
    for s, formula in AL_FORMULAS.items():
        for n in range(1, 21):
            assert alpha(AL, n, s) == formula(n), (n, s)


def test_alpha_af_matches_printed_formulas():
    for s, formula in AF_FORMULAS.items():
        for n in range(1, 21):
            assert alpha(AF, n, s) == formula(n), (n, s)


def test_alpha_three_routes_agree():
    for kind in (AL, AF):
        for s in range(1, 7):
            for n in range(s, 21):
                values = {alpha(kind, n, s, route) for route in ROUTES}
                assert len(values) == 1, (kind, n, s)


def test_alpha_boundary_condition():
    for kind in (AL, AF):
        for s in range(1, 7):
            for route in ROUTES:
                assert alpha(kind, 2 * s, s, route) == 0, (kind, s, route)


def test_alpha_first_coefficient_values():
    assert alpha(AL, 3, 1) == 3  # the x_3 -> x_3 + 3 x_1 image
    assert alpha(AF, 3, 1) == 1


def test_alpha_argument_validation():
    with pytest.raises(ValueError):
        alpha(AL, 4, 0)
    with pytest.raises(ValueError):
        alpha(AL, -1, 1)
    with pytest.raises(ValueError):
        alpha(AL, 4, 1, route="magic")


# ---- substitutions and the intertwining check ----------------------------


def test_psi_al_golden_images():
    sub = psi(AL, 6)
    assert sub.image(0) == g(0)
    assert sub.image(1) == g(1)
    assert sub.image(2) == g(2)
    assert sub.image(3) == g(3) + 3 * g(1)
    assert sub.image(4) == g(4) + 8 * g(2)
    assert sub.image(5) == g(5) + 15 * g(3) + 40 * g(1)
    assert sub.image(6) == g(6) + 24 * g(4) + 165 * g(2)


def test_psi_af_golden_images():
    sub = psi(AF, 5)
    assert sub.image(0) == g(1)
    assert sub.image(1) == g(2)
    assert sub.image(2) == g(3)
    assert sub.image(3) == g(4) + g(2)
    assert sub.image(4) == g(5) + 3 * g(3)
    assert sub.image(5) == g(6) + 6 * g(4) + 5 * g(2)


def test_psi_leading_terms():
    al = psi(AL, 12)
    af = psi(AF, 12)
    for n in range(13):
        assert al.image(n).coefficient({n: 1}) == 1
        assert af.image(n).coefficient({n + 1: 1}) == 1


@pytest.mark.parametrize("route", ROUTES)
def test_psi_identical_across_routes(route):
    base = psi(AL, 10)
    other = psi(AL, 10, route=route)
    for n in range(11):
        assert base.image(n) == other.image(n)


def test_check_intertwining_success():
    rep = check_intertwining(
        psi(AL, 12), Derivation.appell(), Derivation.lucas(), 12, kind=AL
    )
    assert rep == {
        "kind": AL,
        "n_max": 12,
        "ok": True,
        "first_mismatch": None,
        "lhs": None,
        "rhs": None,
    }
    rep = check_intertwining(
        psi(AF, 12), Derivation.appell(), Derivation.fibonacci(), 12, kind=AF
    )
    assert rep["ok"] and rep["first_mismatch"] is None


def test_check_intertwining_identity_map_mismatch():
    identity_map = LinearSubstitution({n: g(n) for n in range(5)})
    rep = check_intertwining(
        identity_map, Derivation.appell(), Derivation.lucas(), 3, kind="identity"
    )
    assert not rep["ok"]
    assert rep["first_mismatch"] == 3
    assert rep["lhs"] == (3 * g(2)).to_json()
    assert rep["rhs"] == (3 * g(2) - 3 * g(0)).to_json()


def test_linear_substitution_validation():
    with pytest.raises(ValueError, match="degree 1"):
        LinearSubstitution({0: g(0) ** 2})
    with pytest.raises(ValueError, match="degree 1"):
        LinearSubstitution({0: Poly.x()})
    with pytest.raises(ValueError, match="degree 1"):
        LinearSubstitution({0: g(0) + 1})
    sub = LinearSubstitution({0: g(0), 1: Fraction(1, 2) * g(3)})
    assert sub.image(1) == Fraction(1, 2) * g(3)
    with pytest.raises(ValueError, match="x7"):
        sub.image(7)
    assert sub.defined_range() == [0, 1]


def test_psi_applies_to_polynomials():
    sub = psi(AL, 3)
    p = g(1) * g(3) - g(2) ** 2  # not Appell-kernel; just exercises apply
    assert sub.apply(p) == g(1) * (g(3) + 3 * g(1)) - g(2) ** 2


def test_psi_transports_random_appell_kernel_elements():
    # x_0 and the cubic discriminant invariant generate Appell-kernel
    # elements; their AL images must land in the Lucas kernel
    t = Poly.term
    core = (
        t(6, {0: 1, 1: 1, 2: 1, 3: 1})
        + t(3, {1: 2, 2: 2})
        + t(-4, {1: 3, 3: 1})
        + t(-4, {0: 1, 2: 3})
        + t(-1, {0: 2, 3: 2})
    )
    appell = Derivation.appell()
    lucas = Derivation.lucas()
    sub = psi(AL, 3)
    rng = random.Random(99)
    for _ in range(20):
        p = Poly.zero()
        for _ in range(rng.randint(1, 3)):
            c = Fraction(rng.randint(-5, 5))
            p = p + c * g(0) ** rng.randint(0, 2) * core ** rng.randint(0, 2)
        assert appell(p) == 0
        assert lucas(sub.apply(p)) == 0

import pytest

from lattice_gap import elimination as E
from lattice_gap.errors import RangeError
from lattice_gap.jacobsthal import primorial

from _oracles import trial_primes

EXPECTED_CHAIN = [
    (8, 256, "kanold", 38044224),
    (8, 34, "primorial", 705600),
    (7, 26, "primorial", 419904),
    (6, 22, "primorial", 304704),
]


def test_bound_chain_frozen():
    chain = E.bound_chain()
    got = [(s.omega_max, s.g_bound, s.source, s.n_max) for s in chain.steps]
    assert got == EXPECTED_CHAIN
    assert chain.final.omega_max == 6
    assert chain.final.n_max == 304704


def test_bound_chain_shrinks():
    steps = E.bound_chain().steps
    for prev, cur in zip(steps, steps[1:]):
        assert cur.n_max <= prev.n_max
        assert cur.omega_max <= prev.omega_max


def test_chain_start_self_consistency():
    # omega = 9 is already impossible: the smallest nine-factor modulus
    # outgrows the range its own gap bound allows, and so is omega = 10
    assert primorial(9) > (24 * (2**9 + 1)) ** 2
    assert primorial(10) > (24 * (2**10 + 1)) ** 2
    assert primorial(8) <= (24 * (2**8 + 1)) ** 2


def test_d_max_from():
    assert E.d_max_from(304704) == 552
    assert E.d_max_from(552**2) == 552
    assert E.d_max_from(552**2 - 1) == 551
    assert E.d_max_from(1) == 1
    with pytest.raises(RangeError):
        E.d_max_from(0)


def test_eliminate_d3():
    rep = E.eliminate_d(3)
    assert rep.p_max == 291
    assert rep.admissible_a == (1,)
    assert rep.N == 1
    assert rep.class_counts == {1: 28, 2: 32}
    assert rep.forced_lower_bound == 28
    assert rep.eliminated


def test_eliminate_d4():
    rep = E.eliminate_d(4)
    assert rep.p_max == 384
    assert rep.admissible_a == (1,)
    assert rep.class_counts == {1: 35, 3: 40}
    assert rep.forced_lower_bound == 35
    assert rep.eliminated


def test_eliminate_d12_closed_interval():
    # 12a in [d, 5d] keeps the endpoint units 1 and 5
    rep = E.eliminate_d(12)
    assert rep.admissible_a == (1, 5)
    assert rep.N == 2
    assert rep.class_counts == {1: 40, 5: 47, 7: 47, 11: 44}
    assert rep.forced_lower_bound == 84
    assert rep.eliminated


def test_eliminate_d11_admissible():
    assert E.eliminate_d(11).admissible_a == (1, 2, 3, 4)


def test_eliminate_matches_trial_division():
    import math

    for d in (5, 7, 9):
        rep = E.eliminate_d(d)
        counts = {r: 0 for r in range(1, d) if math.gcd(r, d) == 1}
        for p in trial_primes(rep.p_max):
            if p % d in counts:
                counts[p % d] += 1
        assert rep.class_counts == counts
        assert rep.forced_lower_bound == sum(sorted(counts.values())[: rep.N])


def test_eliminate_strict_d3():
    rep = E.eliminate_d(3, formula="strict")
    assert rep.p_max == 24
    assert rep.class_counts == {1: 3, 2: 5}
    assert rep.forced_lower_bound == 3
    assert not rep.eliminated


def test_eliminate_arguments():
    with pytest.raises(RangeError):
        E.eliminate_d(2)
    with pytest.raises(ValueError):
        E.eliminate_d(5, formula="loose")
    with pytest.raises(RangeError):
        E.eliminate_all(2)


def test_eliminate_all_paper_full_range():
    sweep = E.eliminate_all(552)
    assert len(sweep.reports) == 550
    assert sweep.all_eliminated
    assert all(r.forced_lower_bound >= 7 for r in sweep.reports)
    assert [r.d for r in sweep.reports] == list(range(3, 553))


def test_eliminate_all_strict_full_range():
    sweep = E.eliminate_all(552, formula="strict")
    assert not sweep.all_eliminated
    failures = [r.d for r in sweep.reports if not r.eliminated]
    assert len(failures) == 339
    assert failures[:12] == [3, 4, 5, 6, 7, 8, 9, 13, 14, 15, 16, 17]


def test_odd_case_bound():
    assert E.odd_case_bound() == 121
    # the bound is tight: 120 satisfies the inequality, 121 does not
    assert E._doubling_exceeds_exp(120)
    assert not E._doubling_exceeds_exp(121)

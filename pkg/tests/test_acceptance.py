"""Acceptance gate: one test per criterion, in order.

1. The five decks of the 5-cell two-row base shape, bit-exact.
2. The published multiset collision and near-collision at n = 3, 4.
3. Census of sizes 5..10 finds zero collision classes in both modes.
4. Round-trip reconstruction for all of sizes 5..10, inductively only.
5. Classification of every tableau at n = 1..4.
6. Constructed common-minor pair verified for n = 4..40.
7. Exact determining-submultiset sizes for n = 5..8 against the
   quantifier-explicit oracle at n = 5, 6.
8. Shape recovery, max location, and deck reduction suites, exhaustive.
9. Census serialization identical across 1, 2, and 8 workers.
"""

from collections import Counter
from itertools import combinations

from tabrec.census import (
    census,
    compute_H1_exact,
    differential_check,
    involution_count,
    suite_deck_reduction,
    suite_max_location,
    suite_shape_recovery,
    verify_proposition,
)
from tabrec.cli import run
from tabrec.core import StandardTableau, enumerate_syt_all
from tabrec.reconstruct import Unique, reconstruct_from_set
import tabrec.reconstruct
from tabrec.taquin import minor_multiset, minor_set


def text(s):
    return StandardTableau.from_text(s)


BASE_DECKS = {
    "1 2 3 / 4 5": (
        "deck k=1 n=5 size=2",
        "1 2 / 3 4",
        "1 2 3 / 4",
    ),
    "1 2 4 / 3 5": (
        "deck k=1 n=5 size=4",
        "1 2 / 3 4",
        "1 3 / 2 4",
        "1 2 3 / 4",
        "1 2 4 / 3",
    ),
    "1 2 5 / 3 4": (
        "deck k=1 n=5 size=3",
        "1 2 / 3 4",
        "1 2 4 / 3",
        "1 3 4 / 2",
    ),
    "1 3 4 / 2 5": (
        "deck k=1 n=5 size=3",
        "1 3 / 2 4",
        "1 2 3 / 4",
        "1 3 4 / 2",
    ),
    "1 3 5 / 2 4": (
        "deck k=1 n=5 size=3",
        "1 3 / 2 4",
        "1 2 4 / 3",
        "1 3 4 / 2",
    ),
}


def test_01_five_base_decks_bit_exact(capsys):
    seen = []
    for tableau_text, lines in BASE_DECKS.items():
        expected = "\n".join(lines)
        assert minor_set(text(tableau_text), 1).to_text() == expected
        status = run(["minors", "--tableau", tableau_text])
        assert status == 0
        assert capsys.readouterr().out == expected + "\n"
        seen.append(frozenset(lines[1:]))
    assert len(set(seen)) == 5
    print("PASS five base decks bit-exact and pairwise distinct")


def test_02_published_multiset_collisions_bit_exact():
    square_a = minor_multiset(text("1 2 / 3 4"), 1)
    square_b = minor_multiset(text("1 3 / 2 4"), 1)
    assert square_a == square_b
    assert square_a.to_text() == (
        "deck k=1 n=4 size=2\n1 2 / 3 x2\n1 3 / 2 x2"
    )

    hook_a = minor_multiset(text("1 2 / 3"), 1)
    hook_b = minor_multiset(text("1 3 / 2"), 1)
    assert hook_a != hook_b
    assert hook_a.support() == hook_b.support()
    assert hook_a.to_text() == "deck k=1 n=3 size=2\n1 / 2 x2\n1 2 x1"
    assert hook_b.to_text() == "deck k=1 n=3 size=2\n1 / 2 x1\n1 2 x2"
    print("PASS published multiset collision and near-collision bit-exact")


def test_03_census_five_through_ten_no_collisions():
    for n in range(5, 11):
        for mode in ("set", "multiset"):
            report = census(n, 1, mode)
            assert report.classes == (), (n, mode)
            assert report.total == involution_count(n)
    assert involution_count(10) == 9496
    print("PASS census 5..10 has zero collision classes in both modes")


def test_04_round_trip_inductive_only(monkeypatch):
    def boom(deck):
        raise AssertionError("exhaustive fallback invoked at n >= 5")

    monkeypatch.setattr(tabrec.reconstruct, "_exhaustive_set", boom)
    for n in range(5, 11):
        for t in enumerate_syt_all(n):
            outcome = reconstruct_from_set(minor_set(t, 1))
            assert outcome == Unique(t), t.to_text()
    print("PASS round-trip reconstruction 5..10 via the inductive pipeline")


def test_05_small_size_classification():
    one = differential_check(1)
    assert (one.total, one.set_unique, one.multiset_unique) == (1, 1, 1)
    assert one.set_ambiguous == one.multiset_ambiguous == ()

    two = differential_check(2)
    both = (text("1 / 2"), text("1 2"))
    assert two.set_ambiguous == two.multiset_ambiguous == (both,)
    assert two.set_unique == two.multiset_unique == 0

    three = differential_check(3)
    assert three.set_ambiguous == ((text("1 2 / 3"), text("1 3 / 2")),)
    assert three.multiset_ambiguous == ()
    assert (three.set_unique, three.multiset_unique) == (2, 4)

    four = differential_check(4)
    square_pair = (text("1 2 / 3 4"), text("1 3 / 2 4"))
    assert four.set_ambiguous == four.multiset_ambiguous == (square_pair,)
    assert four.set_unique == four.multiset_unique == 8
    unique_shapes = {
        t.shape for t in enumerate_syt_all(4) if t not in square_pair
    }
    assert unique_shapes == {(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)}

    for report in (one, two, three, four):
        assert report.violations == ()
    print("PASS classification at n = 1..4 matches the published account")


def test_06_common_minor_pair_verified_through_forty():
    for n in range(4, 41):
        report = verify_proposition(n)
        assert report.common >= report.bound_claimed == n // 2 + 1
    print("PASS constructed pairs share > n/2 common minors for n = 4..40")


def h1_by_definition(n):
    multisets = [
        minor_multiset(t, 1).counter() for t in enumerate_syt_all(n)
    ]
    for m in range(1, n + 1):
        for i, whole in enumerate(multisets):
            cards = sorted(whole.elements(), key=StandardTableau.sort_key)
            for combo in {
                frozenset(Counter(c).items())
                for c in combinations(cards, m)
            }:
                chosen = Counter(dict(combo))
                if any(
                    j != i and chosen <= other
                    for j, other in enumerate(multisets)
                ):
                    break
            else:
                continue
            break
        else:
            return m
    return n + 1


def test_07_exact_submultiset_bound():
    values = {n: compute_H1_exact(n) for n in range(5, 9)}
    for n, value in values.items():
        assert value >= n // 2 + 2, (n, value)
    assert values[5] == h1_by_definition(5)
    assert values[6] == h1_by_definition(6)
    print("PASS exact determining-submultiset sizes for n = 5..8")


def test_08_stepwise_property_suites():
    assert suite_shape_recovery(10) == []
    assert suite_max_location(10) == []
    assert suite_deck_reduction(10) == []
    print("PASS shape, max-location, and reduction suites exhaustively clean")


def test_09_census_deterministic_serialization():
    for mode in ("set", "multiset"):
        reports = [census(8, 1, mode, jobs=j) for j in (1, 2, 8)]
        assert len({r.to_text() for r in reports}) == 1
        assert len({r.to_json() for r in reports}) == 1
    print("PASS census serialization byte-identical across 1, 2, 8 workers")

import itertools
import random

import pytest

from tropfront.bruteforce import brute_local_upper_bounds, brute_nondominated
from tropfront.cones import (
    ApexSet,
    GeneratorSet,
    complementary_apices,
    irreducible_components,
    is_extremal_apex,
    is_extremal_inner,
    min_unit,
    new_extremals,
    trivial_generators,
)
from tropfront.core import INF, NEG_INF, embed_outcome, normalize, scalar_shift


def embedded(*vectors):
    return tuple(embed_outcome(v) for v in vectors)


class TestContainers:
    def test_generator_set_is_canonical(self):
        a = GeneratorSet(2, [(0, 1, 2), (0, 0, 0)])
        b = GeneratorSet(2, [(0, 0, 0), (0, 1, 2), (0, 0, 0)])
        assert a == b and len(a) == 2

    def test_generator_set_rejects_bad_points(self):
        with pytest.raises(ValueError):
            GeneratorSet(2, [(1, 0, 0)])  # 0th coordinate not zero
        with pytest.raises(ValueError):
            GeneratorSet(2, [(0, INF, 0)])  # min-side value on the max side
        with pytest.raises(ValueError):
            GeneratorSet(2, [(0, 0)])  # wrong length

    def test_apex_set_always_carries_units(self):
        apices = ApexSet(2, [(0, 1, 2)])
        assert trivial_generators(2) <= set(apices.points)
        assert apices.nontrivial() == ((0, 1, 2),)

    def test_apex_set_rejects_bad_points(self):
        with pytest.raises(ValueError):
            ApexSet(2, [(0, NEG_INF, 1)])
        with pytest.raises(ValueError):
            ApexSet(2, [(2, 1, 1)])  # not normalized
        with pytest.raises(ValueError):
            ApexSet(2, [(INF, 1, INF)])  # infinite 0th coordinate, not a unit

    def test_initial_state(self):
        apices = ApexSet.initial(3)
        assert set(apices.points) == trivial_generators(3) | {min_unit(0, 3)}
        assert apices.nontrivial() == ((0, INF, INF, INF),)


class TestContains:
    G = GeneratorSet(2, embedded((0, 0), (-3, 2)))

    def test_dominated_point_is_inside(self):
        assert self.G.contains((0, 1, 1))

    def test_outside_point(self):
        # componentwise check against both generators: (-4, 0) escapes each sector
        assert not self.G.contains((0, -4, 0))

    def test_shift_invariance(self):
        x = (0, 1, 1)
        assert self.G.contains(scalar_shift(7, x)) == self.G.contains(x)

    def test_requires_finite_point(self):
        with pytest.raises(ValueError):
            self.G.contains((0, INF, 0))

    def test_support_zero_generator_covers_everything(self):
        everything = GeneratorSet(2, [(0, NEG_INF, NEG_INF)])
        assert everything.contains((0, -100, -100))


class TestExtremalApex:
    def test_rejected_candidate(self):
        gens = GeneratorSet(3, embedded((3, 0, 0), (0, 3, 3), (1, 2, 2)))
        assert not is_extremal_apex((0, 3, 2, 3), gens)

    def test_accepted_apex(self):
        gens = GeneratorSet(3, embedded((3, 0, 0), (0, 3, 3)))
        assert is_extremal_apex((0, 3, 3, INF), gens)

    def test_trivial_unit_by_fiat(self):
        gens = GeneratorSet(3, embedded((3, 0, 0)))
        assert is_extremal_apex((INF, 0, INF, INF), gens)

    def test_malformed_apex(self):
        gens = GeneratorSet(2, embedded((0, 0)))
        with pytest.raises(ValueError):
            is_extremal_apex((0, NEG_INF, 1), gens)
        with pytest.raises(ValueError):
            is_extremal_apex((INF, 1, INF), gens)


class TestExtremalInner:
    def test_dominated_point(self):
        pool = [(0, 3, 2, INF), (0, 3, 2, 3)]
        assert not is_extremal_inner((0, 3, 2, 3), pool)

    def test_extremal_point(self):
        pool = [(0, 3, 3, INF), (0, 3, INF, 3), (0, 0, INF, INF)] + sorted(
            trivial_generators(3)
        )
        assert is_extremal_inner((0, 0, INF, INF), pool)

    def test_literal_equality_is_excluded(self):
        # a scaled duplicate must be normalized away first; two distinct
        # scalings of the same point kill each other
        b = (0, 1, 2)
        pool = [b, scalar_shift(5, b)]
        assert not is_extremal_inner(b, pool)
        assert not is_extremal_inner(scalar_shift(5, b), pool)
        assert is_extremal_inner(b, [b])

    def test_trivial_unit_by_fiat(self):
        assert is_extremal_inner((INF, 0, INF), [(0, -5, INF)])


class TestNewExtremals:
    def test_first_insertion(self):
        apices = ApexSet.initial(3)
        out = new_extremals(GeneratorSet(3), apices, (0, 3, 0, 0))
        assert set(out.points) == trivial_generators(3) | {
            (0, 3, INF, INF),
            (0, INF, 0, INF),
            (0, INF, INF, 0),
        }

    def test_second_insertion(self):
        gens = GeneratorSet(3, [(0, 3, 0, 0)])
        apices = ApexSet(
            3, [(0, 3, INF, INF), (0, INF, 0, INF), (0, INF, INF, 0)]
        )
        out = new_extremals(gens, apices, (0, 0, 3, 3))
        survivors = trivial_generators(3) | {(0, INF, 0, INF), (0, INF, INF, 0)}
        assert set(out.points) == survivors | {
            (0, 3, 3, INF),
            (0, 3, INF, 3),
            (0, 0, INF, INF),
        }

    def test_dominated_insertion_changes_nothing(self):
        # every apex satisfies the new sector inequality, so no pairs form
        gens = GeneratorSet(2, [(0, 0, 0)])
        apices = ApexSet(2, [(0, 0, INF), (0, INF, 0)])
        out = new_extremals(gens, apices, (0, 1, 1))
        assert out == apices

    def test_survivors_stay_extremal(self):
        log = []
        gens = GeneratorSet(3, [(0, 3, 0, 0)])
        apices = ApexSet(3, [(0, 3, INF, INF), (0, INF, 0, INF), (0, INF, INF, 0)])
        out = new_extremals(gens, apices, (0, 0, 3, 3), candidate_log=log)
        enlarged = log[0].generators
        assert all(is_extremal_apex(a, enlarged) for a in out.points)
        assert set(log[0].kept) <= set(out.points)

    def test_input_validation(self):
        gens = GeneratorSet(2)
        apices = ApexSet.initial(2)
        with pytest.raises(ValueError):
            new_extremals(gens, apices, (1, 0, 0))  # 0th coordinate not zero
        with pytest.raises(ValueError):
            new_extremals(gens, apices, (0, INF, 0))  # INF entry


class TestComplementaryApices:
    def test_two_criteria_worked_example(self):
        gens = GeneratorSet(2, [(0, 1, NEG_INF), (0, 0, 0), (0, -3, 2)])
        apices = complementary_apices(gens)
        assert set(apices.nontrivial()) == {(0, 1, 0), (0, 0, 2), (0, -3, INF)}

    def test_insertion_order_does_not_matter(self):
        pts = [(0, 1, NEG_INF), (0, 0, 0), (0, -3, 2)]
        expected = complementary_apices(GeneratorSet(2, pts))
        for perm in itertools.permutations(pts):
            apices = ApexSet.initial(2)
            done = GeneratorSet(2)
            for h in perm:
                apices = new_extremals(done, apices, h)
                done = done.added(h)
            assert apices == expected

    def test_matches_brute_force_on_random_clouds(self):
        rng = random.Random(4711)
        for _ in range(120):
            d = rng.randint(1, 4)
            size = rng.randint(1, 12)
            cloud = {tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(size)}
            gens = GeneratorSet(d, [embed_outcome(z) for z in cloud])
            got = {a[1:] for a in complementary_apices(gens).nontrivial()}
            expected = brute_local_upper_bounds(brute_nondominated(cloud))
            assert got == expected

    def test_membership_duality(self):
        # a real point is outside the sector union exactly when it lies
        # strictly below some nontrivial apex
        rng = random.Random(1105)
        for _ in range(25):
            d = rng.randint(1, 3)
            gens = []
            for _ in range(rng.randint(0, 4)):
                g = [0]
                for _ in range(d):
                    g.append(NEG_INF if rng.random() < 0.2 else rng.randint(-3, 3))
                gens.append(tuple(g))
            G = GeneratorSet(d, gens)
            nontrivial = complementary_apices(G).nontrivial()
            for coords in itertools.product(range(-4, 5), repeat=d):
                x = (0, *coords)
                below_some_apex = any(
                    all(x[j] < a[j] for j in range(1, d + 1)) for a in nontrivial
                )
                assert G.contains(x) != below_some_apex


class TestIrreducibleComponents:
    def test_square_free_example(self):
        assert irreducible_components({(1, 1, 0), (0, 1, 1)}) == {
            (INF, 1, INF),
            (1, INF, 1),
        }

    def test_univariate_power(self):
        assert irreducible_components({(2,)}) == {(2,)}

    def test_unit_ideal(self):
        assert irreducible_components({(0, 0)}) == set()

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            irreducible_components(set())

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            irreducible_components({(1, -1)})

    @staticmethod
    def _in_ideal(v, gens):
        return any(all(g[j] <= v[j] for j in range(len(v))) for g in gens)

    @staticmethod
    def _in_component(v, comp):
        return any(comp[j] != INF and v[j] >= comp[j] for j in range(len(v)))

    def test_components_intersect_to_the_ideal(self):
        # membership check over a box that covers all exponents, plus
        # irredundancy of every component
        rng = random.Random(2718)
        for _ in range(40):
            d = rng.randint(1, 3)
            gens = {
                tuple(rng.randint(0, 4) for _ in range(d))
                for _ in range(rng.randint(1, 5))
            }
            comps = irreducible_components(gens)
            top = max((max(g) for g in gens), default=0) + 1
            box = list(itertools.product(range(top + 1), repeat=d))
            for v in box:
                assert self._in_ideal(v, gens) == all(
                    self._in_component(v, c) for c in comps
                )
            for dropped in comps:
                rest = comps - {dropped}
                assert any(
                    all(self._in_component(v, c) for c in rest)
                    and not self._in_component(v, dropped)
                    for v in box
                ), "component is redundant"

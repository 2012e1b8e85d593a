import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emptysimplex.simplex import (
    VRepSimplex, check_certificate, facet_volumes, first_lattice_class,
    functional_from_certificate, is_empty, lattice_classes_in_simplex, tuple_of_vrep,
    vrep_of_tuple, width,
)
from emptysimplex.torus import equivalent, make_tuple, orbit

from test_torus import primitive_tuples

WIDE4 = make_tuple(101, (100, 6, 14, 17, 65))
FIRST = make_tuple(41, (40, 4, 23, 25, 31))


class TestVrep:
    def test_table_vectors(self):
        assert tuple_of_vrep(VRepSimplex((6, 14, 17, 65))) == WIDE4
        assert tuple_of_vrep(VRepSimplex((4, 23, 25, -10))) == FIRST
        assert tuple_of_vrep(VRepSimplex((1, 1, 1, 1))).entries == (2, 1, 1, 1, 1)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            VRepSimplex((0, 0, 0, 1))

    def test_back_to_vrep(self):
        assert vrep_of_tuple(WIDE4).v == (6, 14, 17, 65)
        s = vrep_of_tuple(make_tuple(5, (1, 1, 1, 1, 1)))
        assert s.determinant == 5
        assert tuple_of_vrep(s).entries == (4, 4, 4, 4, 4)

    def test_no_unit_entry(self):
        u = make_tuple(6, (2, 3, 1, 0, 0))
        assert vrep_of_tuple(u)  # slot 2 is a unit
        with pytest.raises(ValueError, match="unimodular"):
            vrep_of_tuple(make_tuple(6, (2, 3, 2, 3, 2)))

    @given(primitive_tuples(max_d=60))
    def test_round_trip(self, u):
        try:
            s = vrep_of_tuple(u)
        except ValueError:
            return
        assert sum(s.v) == u.modulus + 1
        assert equivalent(tuple_of_vrep(s), u)


class TestEmptiness:
    def test_white_quadruple(self):
        assert lattice_classes_in_simplex(make_tuple(2, (1, 1, 1, 1))) == []

    def test_d2_nonempty(self):
        u = make_tuple(2, (1, 1, 0, 0, 0))
        assert lattice_classes_in_simplex(u) == [1]
        assert not is_empty(u)
        assert first_lattice_class(u) == 1

    def test_trivial(self):
        assert lattice_classes_in_simplex(make_tuple(1, (0,) * 5)) == []

    def test_table_entries(self):
        assert is_empty(WIDE4)
        assert is_empty(FIRST)

    def test_brute_representatives(self):
        u = make_tuple(12, (11, 1, 3, 4, 5))
        expected = [k for k in range(1, 12) if sum(k * x % 12 for x in u) == 12]
        assert lattice_classes_in_simplex(u) == expected

    @settings(max_examples=40)
    @given(primitive_tuples(max_d=20))
    def test_orbit_invariant(self, u):
        verdict = is_empty(u)
        assert all(is_empty(t) == verdict for t in orbit(u))

    @given(primitive_tuples(max_d=60), st.integers(1, 59))
    def test_k_complement_sums(self, u, k):
        D = u.modulus
        if k >= D:
            return
        rk = [k * x % D for x in u.entries]
        rc = [(D - k) * x % D for x in u.entries]
        z = sum(1 for x in rk if x)
        assert sum(rk) + sum(rc) == z * D


class TestWidth:
    def test_wide4(self):
        res = width(WIDE4)
        assert res.width == 4
        assert check_certificate(WIDE4, res.certificate) == 4

    def test_first_entry(self):
        assert width(FIRST).width == 3

    def test_opposite_pair(self):
        u = make_tuple(9, (1, 8, 0, 0, 0))
        res = width(u)
        assert res.width == 1
        assert check_certificate(u, res.certificate) == 1

    def test_cap(self):
        res = width(WIDE4, cap=3)
        assert res.capped and res.label() == ">3" and res.certificate is None

    def test_brute_minimum(self):
        # independent search over all lambda in {0..k}^5 without the min-0 normalization
        for u in (FIRST, make_tuple(47, (-1, 3, 5, 13, 27))):
            D = u.modulus
            best = min(
                max(lam) - min(lam)
                for lam in itertools.product(range(5), repeat=5)
                if len(set(lam)) > 1 and sum(a * b for a, b in zip(lam, u)) % D == 0
            )
            assert width(u).width == best

    @settings(max_examples=25)
    @given(primitive_tuples(max_d=15))
    def test_orbit_invariant(self, u):
        w = width(u).width
        for t in list(orbit(u))[:50]:
            assert width(t).width == w

    def test_rejects_constant_certificate(self):
        with pytest.raises(ValueError):
            check_certificate(WIDE4, (1, 1, 1, 1, 1))


class TestFacets:
    def test_prime(self):
        assert facet_volumes(make_tuple(179, (-1, 3, 5, 79, 93))) == (1,) * 5

    def test_composite(self):
        u = make_tuple(6, (5, 1, 2, 4, 0))
        assert facet_volumes(u) == (1, 1, 2, 2, 6)
        assert not is_empty(u)

    def test_trivial(self):
        assert facet_volumes(make_tuple(1, (0,) * 5)) == (1,) * 5


class TestFunctional:
    def test_width_one(self):
        s = VRepSimplex((1, 2, 3, 0))
        u = tuple_of_vrep(s)
        lam = (1, 1, 0, 0, 0)
        assert sum(a * b for a, b in zip(lam, u)) % u.modulus == 0
        f = functional_from_certificate(s, lam)
        vals = [f(x) for x in s.vertices()]
        assert max(vals) - min(vals) == 1

    def test_wide4(self):
        s = VRepSimplex((6, 14, 17, 65))
        lam = width(tuple_of_vrep(s)).certificate
        f = functional_from_certificate(s, lam)
        # independent exact solve: f(e_j) = lam_j, f(v) = lam_0
        c0 = Fraction(sum(l * x for l, x in zip(lam[1:], s.v)) - lam[0], 101)
        assert c0.denominator == 1 and f.constant == c0
        assert sorted(f(x) for x in s.vertices()) == sorted(lam)
        assert {f(x) for x in s.vertices()} <= set(range(5))
        assert max(f(x) for x in s.vertices()) - min(f(x) for x in s.vertices()) == 4

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            functional_from_certificate(VRepSimplex((6, 14, 17, 65)), (2, 2, 2, 2, 2))

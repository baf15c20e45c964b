from fractions import Fraction
from math import comb, factorial
import unittest

import ddt

from components.errors import OutOfRangeError, ShapeError, ValidationError
from components.polytope import (MinkowskiSums, SupportSet, VolumeForm, convex_hull, dilate, interior_lattice_points,
                                 is_subset, minkowski_sum, mixed_volume, standard_simplex, translate, volume,
                                 volume_polynomial, volume_polynomial_by_interpolation)
from tests.testing import FOURFOLD_SUPPORTS, random_lattice_points, seeded

CUBE_FACETS = [convex_hull([(0, a, b) for a in (0, 1) for b in (0, 1)]),
               convex_hull([(a, 0, b) for a in (0, 1) for b in (0, 1)]),
               convex_hull([(a, b, 0) for a in (0, 1) for b in (0, 1)])]


@ddt.ddt
class TestPolytope(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.fourfold = [convex_hull(points) for points in FOURFOLD_SUPPORTS]

    def test_simplex_hull(self):
        """Tests that the unit tetrahedron has four vertices and four facets"""
        tetrahedron = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        self.assertEqual(len(tetrahedron.vertices), 4)
        self.assertEqual(len(tetrahedron.facets), 4)
        self.assertTrue(tetrahedron.is_full_dimensional)
        self.assertIn(((1, 1, 1), 1), tetrahedron.facets)

    def test_lower_dimensional_hull(self):
        """Tests that a support of the toric fourfold spans a 3-dimensional simplex in R^4"""
        simplex = self.fourfold[0]
        self.assertEqual(simplex.affine_dim, 3)
        self.assertEqual(len(simplex.vertices), 4)
        self.assertEqual(volume(simplex), 0)
        self.assertEqual(interior_lattice_points(simplex), 0)

    def test_redundant_points_removed(self):
        """Tests that the middle point of a segment is not a vertex"""
        segment = convex_hull([(0,), (1,), (2,)])
        self.assertEqual(segment.vertices, ((0,), (2,)))

    def test_interior_points_not_vertices(self):
        """Tests that points inside a square are dropped from the vertex list"""
        square = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0)])
        self.assertEqual(square.vertices, ((0, 0), (0, 2), (2, 0), (2, 2)))
        self.assertEqual(interior_lattice_points(square), 1)

    def test_hull_of_support_set(self):
        """Tests that support sets are accepted by the hull"""
        support = SupportSet(2, ((0, 0), (1, 0), (0, 1)))
        self.assertEqual(volume(convex_hull(support)), Fraction(1, 2))

    def test_empty_hull(self):
        """Tests that the hull of no points is an error"""
        with self.assertRaises(ValidationError):
            convex_hull([])

    @ddt.data(((0, 0), (0, 0)), ((0, 0), (1,)), ())
    def test_invalid_support_set(self, points):
        """Tests that repeated points, wrong lengths and empty sets are rejected"""
        with self.assertRaises(ValidationError):
            SupportSet(2, points)

    def test_sum_of_simplices_is_dilate(self):
        """Tests that the sum of a simplex with itself is its double"""
        simplex = standard_simplex(3)
        self.assertEqual(minkowski_sum(simplex, simplex).vertices, standard_simplex(3, 2).vertices)

    def test_sum_of_cube_facets(self):
        """Tests that two facets of the unit cube add up to a box"""
        box = minkowski_sum(CUBE_FACETS[1], CUBE_FACETS[2])
        self.assertEqual(box.vertices, tuple(sorted((a, b, c) for a in (0, 2) for b in (0, 1) for c in (0, 1))))
        self.assertEqual(volume(box), 2)

    def test_sum_with_point(self):
        """Tests that adding a point translates"""
        point = convex_hull([(1, 2)])
        square = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        self.assertEqual(minkowski_sum(square, point), translate(square, (1, 2)))

    def test_sum_dimension_mismatch(self):
        """Tests that polytopes in different spaces cannot be added"""
        with self.assertRaises(ShapeError):
            minkowski_sum(standard_simplex(2), standard_simplex(3))

    @ddt.data(1, 2, 3, 4)
    def test_simplex_volume(self, dim):
        """Tests that the unit simplex has volume 1/d!"""
        self.assertEqual(volume(standard_simplex(dim)), Fraction(1, factorial(dim)))

    def test_cube_volume(self):
        """Tests the volume of the unit cube"""
        cube = convex_hull([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
        self.assertEqual(volume(cube), 1)

    def test_fourfold_volumes(self):
        """Tests the volume and the interior points of the sums of the fourfold tetrahedra"""
        sums = MinkowskiSums(self.fourfold)
        self.assertEqual(sums.volume((1, 1)), Fraction(5, 3))
        self.assertEqual(sums.interior_lattice_points((2, 1)), 1)
        self.assertEqual(sums.interior_lattice_points((1, 1)), 0)

    def test_ehrhart_simplex(self):
        """Tests that the k-th dilate of the unit d-simplex has C(k - 1, d) interior points"""
        for dim in range(1, 5):
            for factor in range(1, 9):
                with self.subTest(dim=dim, factor=factor):
                    self.assertEqual(interior_lattice_points(standard_simplex(dim, factor)), comb(factor - 1, dim))

    def test_rational_interior(self):
        """Tests that interior points of a polytope with rational vertices are counted strictly"""
        triangle = convex_hull([(Fraction(-1, 2), Fraction(-1, 2)), (Fraction(7, 2), Fraction(-1, 2)),
                                (Fraction(-1, 2), Fraction(7, 2))])
        self.assertEqual(interior_lattice_points(triangle), 6)

    @ddt.data(0, 1, 2, 3)
    def test_dilate(self, factor):
        """Tests that volume scales with the d-th power of the dilation factor"""
        rng = seeded(factor)
        for _ in range(20):
            polytope = convex_hull(random_lattice_points(rng, 3, 6))
            self.assertEqual(volume(dilate(polytope, factor)), factor ** 3 * volume(polytope))

    def test_negative_dilate(self):
        """Tests that negative dilation factors are rejected"""
        with self.assertRaises(OutOfRangeError):
            dilate(standard_simplex(2), -1)

    def test_translation_invariance(self):
        """Tests that integer translations keep volumes and interior point counts"""
        rng = seeded(3)
        for _ in range(40):
            polytope = convex_hull(random_lattice_points(rng, 3, 7, size=4))
            shift = tuple(rng.randint(-5, 5) for _ in range(3))
            moved = translate(polytope, shift)
            self.assertEqual(volume(moved), volume(polytope))
            self.assertEqual(interior_lattice_points(moved), interior_lattice_points(polytope))

    def test_monotonicity(self):
        """Tests that a polytope inside another has at most its volume"""
        rng = seeded(5)
        for _ in range(40):
            points = random_lattice_points(rng, 3, 8)
            inner, outer = convex_hull(points[:5]), convex_hull(points)
            if outer.is_full_dimensional:
                self.assertTrue(is_subset(inner, outer))
            self.assertLessEqual(volume(inner), volume(outer))

    def test_mixed_volume_of_simplices(self):
        """Tests that the mixed volume of copies of the unit simplex is 1"""
        simplex = standard_simplex(3)
        self.assertEqual(mixed_volume([(simplex, 3)], 3), 1)

    def test_mixed_volume_fourfold(self):
        """Tests that the toric fourfold system has four solutions"""
        self.assertEqual(mixed_volume([(self.fourfold[0], 2), (self.fourfold[1], 2)], 4), 4)

    def test_mixed_volume_with_point(self):
        """Tests that a point summand gives mixed volume 0"""
        point = convex_hull([(1, 1)])
        self.assertEqual(mixed_volume([(point, 1), (standard_simplex(2), 1)], 2), 0)

    def test_mixed_volume_multiplicities(self):
        """Tests that multiplicities must add up to the dimension"""
        with self.assertRaises(OutOfRangeError):
            mixed_volume([(standard_simplex(2), 1)], 2)

    def test_mixed_volume_properties(self):
        """Tests symmetry and multilinearity of mixed volumes on random lattice polytopes"""
        rng = seeded(13)
        for _ in range(25):
            first, second = (convex_hull(random_lattice_points(rng, 2, 5)) for _ in range(2))
            value = mixed_volume([(first, 1), (second, 1)], 2)
            self.assertEqual(value, mixed_volume([(second, 1), (first, 1)], 2))
            for factor in (0, 1, 2):
                self.assertEqual(mixed_volume([(dilate(first, factor), 1), (second, 1)], 2), factor * value)
            self.assertEqual(mixed_volume([(first, 2)], 2), 2 * volume(first))

    def test_fourfold_volume_polynomial(self):
        """Tests the volume polynomial of the toric fourfold"""
        form = volume_polynomial(self.fourfold)
        self.assertEqual(str(form), '1/3*T1^3*T2 + T1^2*T2^2 + 1/3*T1*T2^3')
        self.assertEqual(form.evaluate((1, 1)), Fraction(5, 3))
        self.assertEqual(form.to_dict()['terms'][0], {'exponents': [3, 1], 'coefficient': '1/3'})

    def test_cube_facets_volume_polynomial(self):
        """Tests that the cube facets have V(T) = (T1 + T2)(T1 + T3)(T2 + T3)"""
        form = volume_polynomial(CUBE_FACETS)
        expected = {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (1, 1, 1): 2, (1, 0, 2): 1, (0, 2, 1): 1, (0, 1, 2): 1}
        self.assertEqual(dict(form.terms), expected)

    def test_single_polytope_volume_polynomial(self):
        """Tests that a single polytope gives vol(P) T1^d"""
        square = convex_hull([(0, 0), (2, 0), (0, 1), (2, 1)])
        self.assertEqual(volume_polynomial([square]).terms, (((2,), 2),))

    def test_interpolation_oracle(self):
        """Tests that mixed volumes and interpolation give the same volume polynomial on 200 random families"""
        rng = seeded(17)
        shapes = [(2, 2)] * 70 + [(3, 2)] * 50 + [(2, 3)] * 60 + [(3, 3)] * 20
        for case, (count, dim) in enumerate(shapes):
            polytopes = [convex_hull(random_lattice_points(rng, dim, rng.randint(dim + 1, 6), size=2))
                         for _ in range(count)]
            sums = MinkowskiSums(polytopes)
            with self.subTest(case=case):
                self.assertEqual(volume_polynomial(polytopes, sums),
                                 volume_polynomial_by_interpolation(polytopes, sums))

    def test_volume_form_validation(self):
        """Tests that volume forms reject exponents of the wrong degree and negative coefficients"""
        with self.assertRaises(ShapeError):
            VolumeForm(2, 3, (((1, 1), 1),))
        with self.assertRaises(ValidationError):
            VolumeForm(2, 2, (((1, 1), -1),))

    def test_sums_in_different_spaces(self):
        """Tests that a Minkowski sum cache needs a common ambient space"""
        with self.assertRaises(ShapeError):
            MinkowskiSums([standard_simplex(2), standard_simplex(3)])


if __name__ == '__main__':
    unittest.main()

import random

from django.test import SimpleTestCase, override_settings

from picdescent.exceptions import GuardExceeded, InconsistentDataError, InputError

from .derivations import (
    INCONCLUSIVE, NOT_ISOMORPHIC, class_census, class_separator, closed_form_log_derivative, delta, delta_w,
    desk_scale_class_count, log_derivative, samuel_criterion, verify_w_identities, w_identity_checks,
    w_polynomial,
)
from .fields import rational_functions, tower
from .polynomials import Polynomial
from .serializers import InseparableReportSerializer


def random_element(p, rng):
    E = tower(p)
    _, alpha = rational_functions(p)
    coordinates = []
    for _ in range(p):
        numerator = rng.randint(0, p - 1) + rng.randint(0, p - 1) * alpha + rng.randint(0, p - 1) * alpha ** 2
        denominator = 1 + rng.randint(0, p - 1) * alpha
        coordinates.append(numerator / denominator)
    return E.element(coordinates)


def random_w_polynomial(p, rng, degree=3):
    return w_polynomial(p, [rng.randint(0, p - 1) for _ in range(degree)] + [1])


class TowerTest(SimpleTestCase):
    """
    Test cases for arithmetic in F_p(α)[γ]
    """

    def test_gamma_power(self):
        """Test γ^p = α"""
        for p in (2, 3, 5):
            E = tower(p)
            _, alpha = rational_functions(p)
            self.assertEqual(E.gamma ** p, E.element(alpha))

    def test_inverse(self):
        """Test e^p lies in F_p(α) and e·e⁻¹ = 1"""
        rng = random.Random(5)
        for p in (2, 3, 5):
            for _ in range(4):
                e = random_element(p, rng)
                if not e:
                    continue
                self.assertEqual(e ** p, tower(p).element(e.frobenius_norm()))
                self.assertEqual(e * e.inverse(), tower(p).one)

    def test_zero_inverse(self):
        """Test 0 has no inverse"""
        with self.assertRaises(InconsistentDataError):
            tower(3).zero.inverse()

    def test_rational_functions_reduced(self):
        """Test fractions are reduced"""
        _, alpha = rational_functions(3)
        value = (alpha ** 2 - 1) / (alpha - 1)
        self.assertEqual(value, alpha + 1)
        self.assertEqual(value.denom, 1)

    def test_bad_characteristic(self):
        """Test p must be prime"""
        with self.assertRaises(InputError):
            tower(4)


class DerivationTest(SimpleTestCase):
    """
    Test cases for δ and Δ
    """

    def test_delta_examples(self):
        """Test δ(k) = 0, δ(γ) = γ and δ(γ²) = 2γ²"""
        E = tower(5)
        _, alpha = rational_functions(5)
        self.assertFalse(delta(E.element(alpha / (alpha + 1))))
        self.assertEqual(delta(E.gamma), E.gamma)
        self.assertEqual(delta(E.gamma ** 2), 2 * E.gamma ** 2)

    def test_delta_of_gamma_p(self):
        """Test δ(γ^p) = 0"""
        for p in (2, 3, 5):
            self.assertFalse(delta(tower(p).gamma ** p))

    def test_leibniz(self):
        """Test δ(ab) = aδ(b) + bδ(a) on sampled elements"""
        rng = random.Random(11)
        for p in (2, 3, 5):
            for _ in range(3):
                a, b = random_element(p, rng), random_element(p, rng)
                self.assertEqual(delta(a * b), a * delta(b) + b * delta(a))

    def test_delta_w(self):
        """Test δ(W) = W - W^q and δ(W²) = 2W·(W - W^q)"""
        p, q = 3, 9
        W = w_polynomial(p, [0, 1])
        rule = W - W ** q
        self.assertEqual(delta_w(W, q), rule)
        self.assertEqual(delta_w(W ** 2, q), 2 * W * rule)
        constant = w_polynomial(p, [tower(p).gamma])
        self.assertEqual(delta_w(constant, q), w_polynomial(p, [tower(p).gamma]))

    def test_log_derivative_of_w(self):
        """Test Δ(W) = 1 - W^(q-1)"""
        for p, q in ((2, 4), (3, 3), (5, 5)):
            W = w_polynomial(p, [0, 1])
            numerator, denominator = log_derivative(W, q)
            self.assertEqual(numerator, 1 - W ** (q - 1))
            self.assertEqual(denominator, 1)

    def test_log_derivative_of_constant(self):
        """Test Δ(c) = 0 for c in F_p"""
        numerator, denominator = log_derivative(w_polynomial(3, [2]), 3)
        self.assertTrue(numerator.is_zero())
        self.assertEqual(denominator, 1)

    def test_log_derivative_of_zero(self):
        """Test Δ(0) is refused"""
        with self.assertRaises(InputError):
            log_derivative(w_polynomial(3, []), 3)

    def test_log_derivative_additive(self):
        """Test Δ(fg) = Δ(f) + Δ(g) on sampled pairs"""
        rng = random.Random(3)
        for p, q in ((2, 4), (3, 3)):
            for _ in range(3):
                f, g = random_w_polynomial(p, rng), random_w_polynomial(p, rng, degree=2)
                nf, df = log_derivative(f, q)
                ng, dg = log_derivative(g, q)
                nfg, dfg = log_derivative(f * g, q)
                self.assertEqual(nfg * df * dg, (nf * dg + ng * df) * dfg)

    def test_closed_form(self):
        """Test Δ(W - c^r) against 1 - (W - c^r)^(q-1) for c in F_p"""
        for p, q in ((2, 4), (3, 3), (3, 9), (5, 5)):
            r = q // p
            for c in range(p):
                numerator, denominator = log_derivative(w_polynomial(p, [-(tower(p).element(c) ** r), 1]), q)
                self.assertEqual(denominator, 1)
                self.assertEqual(numerator, closed_form_log_derivative(p, q, tower(p).element(c)))


class IdentityTest(SimpleTestCase):
    """
    Test cases for the W identities
    """

    def test_supported_pairs(self):
        """Test every identity at the supported (p, q)"""
        for p, q in ((2, 4), (3, 3), (3, 9), (5, 5), (5, 25)):
            checks = w_identity_checks(p, q)
            self.assertTrue(all(checks.values()), (p, q, checks))
            self.assertTrue(verify_w_identities(p, q))

    def test_q_too_small(self):
        """Test q = 2 is refused"""
        with self.assertRaises(InputError) as raised:
            verify_w_identities(3, 2)
        self.assertIn('q > 2 required', str(raised.exception))

    def test_q_not_power(self):
        """Test q must be a power of p"""
        with self.assertRaises(InputError):
            verify_w_identities(3, 4)

    @override_settings(INSEPARABLE_MAX_Q=9)
    def test_guard(self):
        """Test oversized q is refused"""
        with self.assertRaises(GuardExceeded):
            verify_w_identities(5, 25)


class SeparationTest(SimpleTestCase):
    """
    Test cases for class separation
    """

    def test_examples(self):
        """Test the worked separator degrees"""
        result = class_separator(3, 3, 0, 1)
        self.assertEqual((result.degree, result.z_degree, result.nonconstant), (1, 1, True))
        result = class_separator(3, 9, 0, 2)
        self.assertEqual((result.degree, result.z_degree), (7, 21))
        result = class_separator(5, 5, 1, 3)
        self.assertEqual((result.degree, result.z_degree), (3, 3))

    def test_degree_formula(self):
        """Test the Z-degree is r(q - 2) for every pair"""
        for p, q in ((2, 4), (3, 3), (3, 9), (5, 5)):
            r = q // p
            for c1 in range(p):
                for c2 in range(c1 + 1, p):
                    self.assertEqual(class_separator(p, q, c1, c2).z_degree, r * (q - 2))

    def test_equal_inputs(self):
        """Test c1 = c2 is refused"""
        with self.assertRaises(InputError):
            class_separator(3, 3, 1, 1)

    def test_precondition(self):
        """Test δ(c^r) = c^r - c^(rq) is enforced"""
        with self.assertRaises(InconsistentDataError):
            class_separator(3, 9, tower(3).gamma, 0)

    def test_samuel_criterion(self):
        """Test the two verdicts"""
        W = w_polynomial(3, [0, 1])
        self.assertEqual(samuel_criterion(W, w_polynomial(3, [])), NOT_ISOMORPHIC)
        self.assertEqual(samuel_criterion(W, W), INCONCLUSIVE)
        self.assertEqual(samuel_criterion(W + 1, W), INCONCLUSIVE)
        with self.assertRaises(InputError):
            samuel_criterion(W, W, unit_log_derivatives_constant=False)

    def test_class_count(self):
        """Test p separated classes at desk scale"""
        for p, q in ((2, 4), (3, 3), (5, 5)):
            self.assertEqual(desk_scale_class_count(p, q), p)
        census = class_census(3, 3)
        self.assertEqual(len(census.separations), 3)
        self.assertTrue(all(s.degree == 1 for s in census.separations))

    def test_report_serializer(self):
        """Test the report renders identities, degrees and the count"""
        census = class_census(3, 3)
        data = InseparableReportSerializer({
            'p': 3, 'q': 3,
            'identities': w_identity_checks(3, 3),
            'separations': census.separations,
            'class_count': census.class_count,
        }).data
        self.assertTrue(data['identities_hold'])
        self.assertEqual(data['r'], 1)
        self.assertEqual([s['z_degree'] for s in data['separations']], [1, 1, 1])


class PolynomialTest(SimpleTestCase):
    """
    Test cases for polynomial division and gcd
    """

    def test_divmod(self):
        """Test f = q·g + r with deg r < deg g"""
        rng = random.Random(9)
        for _ in range(5):
            f = random_w_polynomial(3, rng, degree=5)
            g = random_w_polynomial(3, rng, degree=2)
            quotient, remainder = divmod(f, g)
            self.assertEqual(quotient * g + remainder, f)
            self.assertLess(remainder.degree, g.degree)

    def test_gcd(self):
        """Test gcd((W-1)(W+1), (W-1)^2) = W - 1"""
        W = w_polynomial(5, [0, 1])
        self.assertEqual(((W - 1) * (W + 1)).gcd((W - 1) ** 2), W - 1)

    def test_zero(self):
        """Test the zero polynomial"""
        zero = w_polynomial(3, [0, 0])
        self.assertEqual(zero.degree, -1)
        self.assertTrue(zero.is_constant())
        self.assertEqual(Polynomial.monomial(2, coerce=tower(3).element).degree, 2)

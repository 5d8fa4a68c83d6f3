#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hrte/imethod.hpp"
#include "hrte/multiplier.hpp"
#include "helpers.hpp"

using namespace hrte;
using namespace hrte::test;

namespace {

ComplexField plane_wave(const GridSpec& g, const std::vector<int>& k,
                        cplx amplitude = 1.0) {
    ComplexField f(g);
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        double phase = 0.0;
        for (int a = 0; a < g.n; ++a)
            phase += 2.0 * M_PI * k[a] * idx[a] / g.M;
        f.values[flat] = amplitude * cplx(std::cos(phase), std::sin(phase));
    });
    return f;
}

std::size_t flat_of_modes(const GridSpec& g, const std::vector<int>& k) {
    std::vector<int> idx(g.n);
    for (int a = 0; a < g.n; ++a) idx[a] = k[a] >= 0 ? k[a] : k[a] + g.M;
    return flatten(g, idx.data());
}

} // namespace

TEST_CASE("GridSpec invariants") {
    CHECK_THROWS(GridSpec(3, 3, 1.0));  // not a power of two
    CHECK_THROWS(GridSpec(3, 48, 1.0)); // not a power of two
    CHECK_THROWS(GridSpec(3, 2, 1.0));  // too small
    CHECK_THROWS(GridSpec(0, 8, 1.0));
    CHECK_THROWS(GridSpec(3, 8, -1.0));

    GridSpec g(2, 8, 4.0);
    CHECK(g.size() == 64);
    CHECK(g.h() == doctest::Approx(0.5));
    // lattice symmetric except the Nyquist row
    int negatives = 0, positives = 0;
    for (int i = 0; i < g.M; ++i) {
        const int k = g.mode_of_index(i);
        CHECK(k >= -g.M / 2);
        CHECK(k < g.M / 2);
        if (k > 0) ++positives;
        if (k < 0) ++negatives;
    }
    CHECK(positives == g.M / 2 - 1);
    CHECK(negatives == g.M / 2);
}

TEST_CASE("forward transform: constant field has only the DC mode") {
    GridSpec g(3, 8, 2.0);
    ComplexField f(g);
    const cplx c0(0.7, -0.3);
    for (auto& z : f.values) z = c0;
    SpectralCoeffs c = forward_transform(f);
    CHECK(std::abs(c.coeffs[0] - c0) < 1e-14);
    for (std::size_t i = 1; i < c.size(); ++i)
        CHECK(std::abs(c.coeffs[i]) < 1e-14);
}

TEST_CASE("forward transform: lattice plane wave is a single coefficient") {
    GridSpec g(3, 16, 5.0);
    const std::vector<int> k{3, -2, 5};
    const cplx amp(1.25, 0.5);
    SpectralCoeffs c = forward_transform(plane_wave(g, k, amp));
    const std::size_t at = flat_of_modes(g, k);
    CHECK(std::abs(c.coeffs[at] - amp) < 1e-12);
    double off = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != at) off = std::max(off, std::abs(c.coeffs[i]));
    CHECK(off < 1e-12);
}

TEST_CASE("forward transform matches the brute-force DFT on 8^3") {
    GridSpec g(3, 8, 3.0);
    ComplexField f = random_field(g, 42);
    SpectralCoeffs fast = forward_transform(f);
    SpectralCoeffs slow = direct_dft(f);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < fast.size(); ++i) {
        num += std::norm(fast.coeffs[i] - slow.coeffs[i]);
        den += std::norm(slow.coeffs[i]);
    }
    CHECK(std::sqrt(num / den) < 1e-12);
}

TEST_CASE("inverse transform: single mode gives a plane wave, round trip, linearity") {
    GridSpec g(3, 8, 2.0);
    const std::vector<int> k{1, 0, -3};
    SpectralCoeffs c(g);
    c.coeffs[flat_of_modes(g, k)] = 1.0;
    CHECK(rel_l2_error(inverse_transform(c), plane_wave(g, k)) < 1e-13);

    ComplexField f = random_field(g, 7);
    CHECK(rel_l2_error(inverse_transform(forward_transform(f)), f) < 1e-12);

    SpectralCoeffs c1 = forward_transform(random_field(g, 8));
    SpectralCoeffs c2 = forward_transform(random_field(g, 9));
    const cplx a(2.0, -1.0), b(-0.5, 0.25);
    SpectralCoeffs mix(g);
    for (std::size_t i = 0; i < mix.size(); ++i)
        mix.coeffs[i] = a * c1.coeffs[i] + b * c2.coeffs[i];
    ComplexField want(g);
    ComplexField f1 = inverse_transform(c1), f2 = inverse_transform(c2);
    for (std::size_t i = 0; i < want.size(); ++i)
        want.values[i] = a * f1.values[i] + b * f2.values[i];
    CHECK(rel_l2_error(inverse_transform(mix), want) < 1e-12);
}

TEST_CASE("Parseval holds with the box measure") {
    for (int M : {8, 16, 32, 64}) {
        GridSpec g(3, M, 7.0);
        ComplexField f = random_field(g, 100 + M, 1.0);
        const double phys = l2_norm(f);
        const double spec = sobolev_norm(f, 0.0, DerivKind::inhomogeneous);
        CHECK(std::abs(phys - spec) / phys < 1e-12);
    }
}

TEST_CASE("non-finite input is rejected naming the first bad index") {
    GridSpec g(3, 8, 1.0);
    ComplexField f(g);
    f.values[137] = cplx(std::nan(""), 0.0);
    try {
        forward_transform(f);
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("137") != std::string::npos);
    }
}

TEST_CASE("radial multiplier: identity, Laplacian eigenvalue, rejection") {
    GridSpec g(3, 16, 2.0 * M_PI);
    ComplexField f = random_field(g, 11);
    CHECK(rel_l2_error(apply_radial_multiplier(f, [](double) { return 1.0; }), f)
          < 1e-12);

    const std::vector<int> k{2, -1, 3};
    const double xi2 = 4.0 + 1.0 + 9.0; // L = 2 pi -> xi = k
    ComplexField pw = plane_wave(g, k);
    ComplexField lap = apply_radial_multiplier(pw, [](double r) { return r * r; });
    ComplexField want(g);
    for (std::size_t i = 0; i < want.size(); ++i)
        want.values[i] = xi2 * pw.values[i];
    CHECK(rel_l2_error(lap, want) < 1e-12);

    CHECK_THROWS(apply_radial_multiplier(
        f, [](double r) { return r == 0 ? 1.0 : 1.0 / (r - r); }));
}

TEST_CASE("radial multiplier with symbol m matches apply_I bitwise") {
    GridSpec g(3, 16, 4.0);
    ComplexField f = random_field(g, 12, 1.0);
    MultiplierSpec spec(3.0, 0.6);
    ComplexField via_sigma = apply_radial_multiplier(
        f, [&](double r) { return multiplier_m(r, spec); });
    ComplexField via_I = apply_I(f, spec);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(via_sigma.values[i].real() == via_I.values[i].real());
        CHECK(via_sigma.values[i].imag() == via_I.values[i].imag());
    }
}

TEST_CASE("multiplier composition equals the product symbol") {
    GridSpec g(3, 8, 3.0);
    ComplexField f = random_field(g, 13);
    auto s1 = [](double r) { return 1.0 / (1.0 + r * r); };
    auto s2 = [](double r) { return std::cos(r); };
    ComplexField seq = apply_radial_multiplier(apply_radial_multiplier(f, s1), s2);
    ComplexField prod = apply_radial_multiplier(
        f, [&](double r) { return s1(r) * s2(r); });
    CHECK(rel_l2_error(seq, prod) < 1e-12);
}

TEST_CASE("Littlewood-Paley: peak, partition of unity, disjoint bands, clipping") {
    GridSpec g(3, 32, 2.0 * M_PI); // integer frequency lattice, Nyquist 16
    // |xi0| = 4 = 2^2 exactly: bump equals 1 at the dyadic center
    ComplexField pw = plane_wave(g, {4, 0, 0});
    auto projected = lp_project(pw, 2);
    CHECK(!projected.warning);
    CHECK(rel_l2_error(projected.value, pw) < 1e-12);

    // band-limited field: low block + sum of annuli reproduces it
    ComplexField f = band_limited_field(g, 14, 7.9);
    ComplexField sum = lp_project_low(f, 0);
    for (int k = 1; k <= 3; ++k) {
        auto part = lp_project(f, k);
        CHECK(!part.warning);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum.values[i] += part.value.values[i];
    }
    CHECK(rel_l2_error(sum, f) < 1e-12);

    // annuli three octaves apart do not intersect
    ComplexField any = random_field(g, 15);
    auto a = lp_project(any, 1);
    auto b = lp_project(a.value, 4);
    CHECK(l2_norm(b.value) < 1e-12 * l2_norm(any));

    // 2^{k+1} beyond the Nyquist frequency flags the result
    CHECK(lp_project(any, 4).warning);  // 2^5 = 32 > 16
    CHECK(!lp_project(any, 3).warning); // 2^4 = 16 <= 16
}

TEST_CASE("fractional derivative: identity, Bessel eigenvalue, semigroup") {
    GridSpec g(3, 16, 2.0 * M_PI);
    ComplexField f = random_field(g, 16, 1.0);
    CHECK(rel_l2_error(frac_derivative(f, 0.0, DerivKind::homogeneous), f) < 1e-12);
    CHECK(rel_l2_error(frac_derivative(f, 0.0, DerivKind::inhomogeneous), f) < 1e-12);

    const std::vector<int> k{1, 2, -2};
    ComplexField pw = plane_wave(g, k);
    const double eig = std::sqrt(1.0 + 9.0); // (1 + |xi0|^2)^{1/2}
    ComplexField got = frac_derivative(pw, 1.0, DerivKind::inhomogeneous);
    ComplexField want(g);
    for (std::size_t i = 0; i < want.size(); ++i)
        want.values[i] = eig * pw.values[i];
    CHECK(rel_l2_error(got, want) < 1e-12);

    // semigroup on a mean-zero field
    SpectralCoeffs c = forward_transform(random_field(g, 17, 2.0));
    c.coeffs[0] = 0.0;
    ComplexField mz = inverse_transform(c);
    ComplexField two_steps = frac_derivative(
        frac_derivative(mz, 0.7, DerivKind::homogeneous), -0.2,
        DerivKind::homogeneous);
    ComplexField one_step = frac_derivative(mz, 0.5, DerivKind::homogeneous);
    CHECK(rel_l2_error(two_steps, one_step) < 1e-10);
}

TEST_CASE("Sobolev norms: L2 agreement, plane wave value, independent sum") {
    GridSpec g(3, 16, 5.0);
    ComplexField f = random_field(g, 18, 1.5);
    CHECK(sobolev_norm(f, 0.0, DerivKind::inhomogeneous) ==
          doctest::Approx(lebesgue_norm(f, 2.0)).epsilon(1e-12));

    const double A = 0.8;
    const std::vector<int> k{2, 0, -1};
    ComplexField pw = plane_wave(g, k, A);
    const double xi = 2.0 * M_PI / g.L * std::sqrt(5.0);
    const double want = A * std::pow(xi, 0.6) * std::pow(g.L, 1.5);
    CHECK(sobolev_norm(pw, 0.6, DerivKind::homogeneous) ==
          doctest::Approx(want).epsilon(1e-12));

    // independent summation: explicit loop over modes
    const double s = 0.35;
    SpectralCoeffs c = forward_transform(f);
    double sum = 0.0;
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        double xi2 = 0.0;
        for (int a = 0; a < g.n; ++a) {
            const double x = 2.0 * M_PI / g.L * g.mode_of_index(idx[a]);
            xi2 += x * x;
        }
        sum += std::pow(1.0 + xi2, s) * std::norm(c.coeffs[flat]);
    });
    const double oracle = std::sqrt(sum * std::pow(g.L, 3));
    CHECK(sobolev_norm(f, s, DerivKind::inhomogeneous) ==
          doctest::Approx(oracle).epsilon(1e-12));

    // sobolev_norm(f, s) == || frac_derivative(f, s) ||_{L^2}
    CHECK(sobolev_norm(f, s, DerivKind::inhomogeneous) ==
          doctest::Approx(
              lebesgue_norm(frac_derivative(f, s, DerivKind::inhomogeneous), 2.0))
              .epsilon(1e-12));
}

TEST_CASE("Lebesgue norm: constants, infinity, Gaussian closed form, p guard") {
    GridSpec g(3, 16, 3.0);
    ComplexField f(g);
    const cplx c0(0.6, -0.8); // |c0| = 1
    for (auto& z : f.values) z = c0;
    CHECK(lebesgue_norm(f, 3.0) == doctest::Approx(g.L).epsilon(1e-12));
    CHECK(lebesgue_norm(f, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(lebesgue_norm(f, 0.5));

    // Gaussian profile vs analytic integral, box >= 12 sigma
    const double sigma = 1.0, A = 1.3;
    GridSpec gg(3, 64, 14.0);
    ComplexField gf(gg);
    for_each_index(gg, [&](std::size_t flat, const int* idx) {
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            double d = gg.x_of_index(idx[a]) - 0.5 * gg.L;
            r2 += d * d;
        }
        gf.values[flat] = A * std::exp(-r2 / (2.0 * sigma * sigma));
    });
    for (double p : {1.0, 2.0, 3.0}) {
        const double analytic =
            A * std::pow(2.0 * M_PI * sigma * sigma / p, 1.5 / p);
        CHECK(std::abs(lebesgue_norm(gf, p) - analytic) / analytic < 1e-6);
    }
}

TEST_CASE("norm homogeneity under scalar multiplication") {
    GridSpec g(3, 8, 2.5);
    ComplexField f = random_field(g, 19);
    const cplx c(1.7, -2.2);
    ComplexField cf(g);
    for (std::size_t i = 0; i < f.size(); ++i) cf.values[i] = c * f.values[i];
    const double ac = std::abs(c);
    for (double p : {1.0, 2.0, 4.0})
        CHECK(lebesgue_norm(cf, p) ==
              doctest::Approx(ac * lebesgue_norm(f, p)).epsilon(1e-12));
    for (double s : {-0.5, 0.5, 1.0})
        CHECK(sobolev_norm(cf, s, DerivKind::homogeneous) ==
              doctest::Approx(ac * sobolev_norm(f, s, DerivKind::homogeneous))
                  .epsilon(1e-12));
}

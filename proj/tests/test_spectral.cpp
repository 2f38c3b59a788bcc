#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "tpode/coefficients.hpp"
#include "tpode/spectral.hpp"

using namespace tpode;

namespace {

HahnFamily reference_family(Branch br, bool symmetric_lambda_choice = false,
                            bool undeformed = false) {
  const CanonicalParams p = oracle::reference_params();
  const BasisParams basis = basis_params(p, br);
  HahnFamily fam = symmetric_lambda_choice
                       ? hahn_family(p, basis, symmetric_lambda(basis))
                       : hahn_family(p, basis);
  if (undeformed) fam.deform = 0.0;
  return fam;
}

}  // namespace

TEST_CASE("tridiag_eigen_first_row") {
  SUBCASE("2x2 with zero diagonal") {
    std::vector<double> d{0.0, 0.0};
    std::vector<double> z;
    tridiag_eigen_first_row(d, {0.5}, z);
    CHECK(d[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(z[0] * z[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(z[1] * z[1] == doctest::Approx(0.5).epsilon(1e-13));
  }

  SUBCASE("eigenvalues of a known 3x3 match the characteristic roots") {
    // diag {2,2,2}, offdiag {1,1}: eigenvalues 2, 2 +- sqrt(2)
    std::vector<double> d{2.0, 2.0, 2.0};
    std::vector<double> z;
    tridiag_eigen_first_row(d, {1.0, 1.0}, z);
    CHECK(d[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
    CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(d[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
    double sum = 0.0;
    for (double v : z) sum += v * v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("recurrence_matrix") {
  SUBCASE("N=1 reference top, d=1: diagonal [3], zero of degree 1 at zeta=3") {
    const HahnFamily fam = reference_family(Branch::Top);
    const RecurrenceMatrix m = recurrence_matrix(1, fam);
    CHECK(m.diag[0] == doctest::Approx(3.0).epsilon(1e-14));
    const auto zs = zeros(1, fam);
    CHECK(zs[0].real() == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(zs[0].imag() == doctest::Approx(0.0).epsilon(1e-13));
  }

  SUBCASE("N=1 bottom branch flips to [-1]") {
    const HahnFamily fam = reference_family(Branch::Bottom);
    const RecurrenceMatrix m = recurrence_matrix(1, fam);
    CHECK(m.diag[0] == doctest::Approx(-1.0).epsilon(1e-14));
  }

  SUBCASE("undeformed symmetric family has constant diagonal lambda") {
    HahnFamily fam = reference_family(Branch::Top, true, true);
    for (int n = 0; n <= 50; ++n) {
      const auto [An, Cn] = hahn_ac(n, fam);
      CHECK(std::fabs(An + Cn + fam.lambda) <= 1e-12);
    }
  }
}

TEST_CASE("zeros") {
  SUBCASE("real matrix: zero set closed under conjugation") {
    const HahnFamily fam = reference_family(Branch::Top);
    const auto zs = zeros(12, fam);
    for (const auto& z : zs) {
      bool found = false;
      for (const auto& w : zs) {
        if (std::abs(w - std::conj(z)) < 1e-7 * std::max(1.0, std::abs(z))) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }

  SUBCASE("zeros are actual roots of the recursively evaluated polynomial") {
    const HahnFamily fam = reference_family(Branch::Bottom);
    const int N = 10;
    const auto zs = zeros(N, fam);
    for (const auto& z : zs) {
      // residual scaled by the polynomial value a little off the root
      const std::complex<double> off = z + std::complex<double>(0.1, 0.1);
      double pz = 0.0, poff = 0.0;
      {
        std::complex<double> pm1 = 0.0, p = 1.0;
        const RecurrenceMatrix m = recurrence_matrix(N, fam);
        for (int n = 0; n < N; ++n) {
          const auto next = ((z - m.diag[n]) * p - m.sub[n] * pm1) / m.sup[n];
          pm1 = p;
          p = next;
        }
        pz = std::abs(p);
        pm1 = 0.0;
        p = 1.0;
        for (int n = 0; n < N; ++n) {
          const auto next = ((off - m.diag[n]) * p - m.sub[n] * pm1) / m.sup[n];
          pm1 = p;
          p = next;
        }
        poff = std::abs(p);
      }
      CHECK(pz <= 1e-7 * poff);
    }
  }

  SUBCASE("undeformed symmetric case: all zeros on Re zeta = lambda") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const auto zs = zeros(30, fam);
    for (const auto& z : zs) {
      CHECK(std::fabs(z.real() - fam.lambda) <= 1e-8);
    }
  }

  SUBCASE("consecutive degrees never share a zero (min pairwise distance)") {
    // Checked on undeformed families, where consecutive truncation spectra
    // are resolvably separated. Under strong deformation the diagonal
    // dominates and low-lying zeros of consecutive degrees agree to machine
    // precision, so no fixed separation threshold is meaningful there.
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 4; ++trial) {
      const CanonicalParams p = oracle::draw_admissible_params(rng);
      const BasisParams basis = basis_params(p, Branch::Top);
      HahnFamily fam = hahn_family(p, basis);
      fam.deform = 0.0;
      for (int N = 2; N <= 20; N += 6) {
        const auto za = zeros(N, fam);
        const auto zb = zeros(N + 1, fam);
        double closest = 1e300;
        for (const auto& u : za) {
          for (const auto& v : zb) closest = std::min(closest, std::abs(u - v));
        }
        CHECK(closest > 1e-10);
      }
    }
  }

  SUBCASE("N out of range rejected") {
    const HahnFamily fam = reference_family(Branch::Top);
    CHECK_THROWS_AS(zeros(0, fam), Error);
    CHECK_THROWS_AS(zeros(61, fam), Error);
  }
}

TEST_CASE("zline_matrix") {
  SUBCASE("reference 2x2: off-diagonal 1/sqrt(5), eigenvalues +-1/sqrt(5)") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const RecurrenceMatrix m = zline_matrix(2, fam);
    CHECK(m.sup[0] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
    GaussMeasure gm = gauss_measure(2, fam);
    CHECK(gm.nodes[0] == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(gm.nodes[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
  }

  SUBCASE("deformed family rejected") {
    const HahnFamily fam = reference_family(Branch::Top, true, false);
    CHECK_THROWS_AS(zline_matrix(4, fam), Error);
  }

  SUBCASE("asymmetric family rejected") {
    std::mt19937_64 rng(83);
    CanonicalParams p = oracle::draw_params(rng);
    while (symmetric_case_check(p)) p = oracle::draw_params(rng);
    const BasisParams basis = basis_params(p, Branch::Top);
    HahnFamily fam = hahn_family(p, basis);
    fam.deform = 0.0;
    CHECK_THROWS_AS(zline_matrix(4, fam), Error);
  }

  SUBCASE("spectrum symmetric about zero") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const GaussMeasure gm = gauss_measure(15, fam);
    for (int i = 0; i < 15; ++i) {
      CHECK(gm.nodes[i] == doctest::Approx(-gm.nodes[14 - i]).epsilon(1e-10));
    }
  }

  SUBCASE("z-line eigenvalues map onto the zeta-plane zeros") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const int N = 18;
    const GaussMeasure gm = gauss_measure(N, fam);
    const auto zs = zeros(N, fam);
    // the real parts tie up to rounding, so order by imaginary part
    std::vector<double> imag(N);
    for (int i = 0; i < N; ++i) imag[i] = zs[i].imag();
    std::sort(imag.begin(), imag.end());
    for (int i = 0; i < N; ++i) {
      CHECK(std::fabs(imag[i] - gm.nodes[i]) <= 1e-8 * std::max(1.0, std::fabs(imag[i])));
      CHECK(std::fabs(zs[i].real() - fam.lambda) <= 1e-8);
    }
  }
}

TEST_CASE("gauss_measure") {
  SUBCASE("single node at zero with unit weight") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const GaussMeasure gm = gauss_measure(1, fam);
    CHECK(gm.nodes[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(gm.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("weights sum to one") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    for (int N : {2, 7, 20}) {
      const GaussMeasure gm = gauss_measure(N, fam);
      double sum = 0.0;
      for (double w : gm.weights) sum += w;
      CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
  }

  SUBCASE("discrete Gram of the first 10 orthonormal polynomials is identity") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    const int N = 20;
    const RecurrenceMatrix m = zline_matrix(N, fam);
    const GaussMeasure gm = gauss_measure(N, fam);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k < N; ++k) {
          const auto q = zline_polynomials(m, gm.nodes[k]);
          g += gm.weights[k] * q[i] * q[j];
        }
        CHECK(std::fabs(g - (i == j ? 1.0 : 0.0)) <= 1e-8);
      }
    }
  }

  SUBCASE("interlacing of consecutive truncations") {
    const HahnFamily fam = reference_family(Branch::Top, true, true);
    for (int N : {5, 12, 25}) {
      const GaussMeasure small = gauss_measure(N, fam);
      const GaussMeasure big = gauss_measure(N + 1, fam);
      for (int i = 0; i < N; ++i) {
        CHECK(big.nodes[i] < small.nodes[i]);
        CHECK(small.nodes[i] < big.nodes[i + 1]);
      }
    }
  }

  SUBCASE("zero-set distance to the line shrinks as the deformation fades") {
    // Reported diagnostic in the module: with deformation 1/d, the zeta-plane
    // zeros approach Re zeta = lambda monotonically over d in {10,100,1000}.
    const CanonicalParams p = oracle::reference_params();
    const BasisParams basis = basis_params(p, Branch::Top);
    double last = 1e300;
    for (double d : {10.0, 100.0, 1000.0}) {
      HahnFamily fam = hahn_family(p, basis, symmetric_lambda(basis));
      fam.deform = 1.0 / d;
      const auto zs = zeros(16, fam);
      double dist = 0.0;
      for (const auto& z : zs) dist = std::max(dist, std::fabs(z.real() - fam.lambda));
      CHECK(dist < last);
      last = dist;
    }
  }
}

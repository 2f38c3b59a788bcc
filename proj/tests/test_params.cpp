#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tpode/params.hpp"

using namespace tpode;

TEST_CASE("derive_dependent closed forms") {
  SUBCASE("all-zero free parameters") {
    const auto [C, E] = derive_dependent(0, 0, 0, 1, 2, 0, 0, 0);
    CHECK(C == 0.0);
    CHECK(E == 0.0);
  }

  SUBCASE("c = 2 kills C regardless of the rest") {
    const auto [C, E] = derive_dependent(0.7, -0.3, 2.0, 1.5, 3.0, -1.0, 0.5, 0.2);
    CHECK(C == 0.0);
    (void)E;
  }

  SUBCASE("hand evaluation at (0,0,1,1,2,0,0,0)") {
    const auto [C, E] = derive_dependent(0, 0, 1, 1, 2, 0, 0, 0);
    // 4C = r(r-1)c(c-2) = -2, E = -rc/2 * [c + d(r-1) - 2] + c/2 (c/2 - 1)
    CHECK(C == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(E == doctest::Approx(-0.25).epsilon(1e-15));
  }
}

TEST_CASE("validate") {
  SUBCASE("reference set passes every constraint") {
    const ValidationReport rep = validate(oracle::reference_params());
    CHECK(rep.pass);
    CHECK(rep.checks.size() == kNumConstraints);
    for (const auto& chk : rep.checks) CHECK(chk.pass);
  }

  SUBCASE("a=1 makes the A bound zero") {
    CanonicalParams p = oracle::reference_params();
    p.a = 1.0;
    p.A = 0.1;
    std::tie(p.C, p.E) = derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    const ValidationReport rep = validate(p);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.checks[2].pass);  // 4A <= r(1-a)^2
  }

  SUBCASE("r = 1 fails") {
    CanonicalParams p = oracle::reference_params();
    p.r = 1.0;
    const ValidationReport rep = validate(p);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.checks[0].pass);
  }

  SUBCASE("d = 0 fails") {
    CanonicalParams p = oracle::reference_params();
    p.d = 0.0;
    CHECK_FALSE(validate(p).pass);
  }

  SUBCASE("wrong C fails the equality with nonzero residual") {
    CanonicalParams p = oracle::reference_params();
    p.C = 0.25;
    const ValidationReport rep = validate(p);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.checks[4].pass);
    CHECK(rep.checks[4].residual == doctest::Approx(0.25));
  }

  SUBCASE("derive_dependent then validate always passes (100 draws)") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
      const CanonicalParams p = oracle::draw_params(rng);
      const ValidationReport rep = validate(p);
      CHECK(rep.pass);
      CHECK(rep.checks[4].residual <= 1e-12);
      CHECK(rep.checks[5].residual <= 1e-12);
    }
  }
}

TEST_CASE("basis_params") {
  SUBCASE("reference set: mu=nu=1, e0=e1=1, er=0") {
    const CanonicalParams p = oracle::reference_params();
    for (Branch br : {Branch::Top, Branch::Bottom}) {
      const BasisParams bp = basis_params(p, br);
      CHECK(bp.mu == doctest::Approx(1.0));
      CHECK(bp.nu == doctest::Approx(1.0));
      CHECK(bp.e0 == doctest::Approx(1.0));
      CHECK(bp.e1 == doctest::Approx(1.0));
      CHECK(bp.er == doctest::Approx(0.0));
      CHECK(bp.chi == doctest::Approx(0.0));
      CHECK(bp.delta == (br == Branch::Top ? 0.0 : 1.0));
    }
  }

  SUBCASE("a=1, A=0 forces nu=0 and e0=0") {
    CanonicalParams p = oracle::reference_params();
    p.a = 1.0;
    std::tie(p.C, p.E) = derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    const BasisParams bp = basis_params(p, Branch::Top);
    CHECK(bp.nu == doctest::Approx(0.0));
    CHECK(bp.e0 == doctest::Approx(0.0));
  }

  SUBCASE("b=1, B=0 forces mu=0 and e1=0") {
    CanonicalParams p = oracle::reference_params();
    p.b = 1.0;
    std::tie(p.C, p.E) = derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    const BasisParams bp = basis_params(p, Branch::Top);
    CHECK(bp.mu == doctest::Approx(0.0));
    CHECK(bp.e1 == doctest::Approx(0.0));
  }

  SUBCASE("negative root choice rejected when it would cross -1") {
    const CanonicalParams p = oracle::reference_params();  // mu = 1
    CHECK_THROWS_AS(basis_params(p, Branch::Top, RootSign::Minus, RootSign::Plus), Error);
  }

  SUBCASE("exponent relations hold on random draws, both branches and signs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
      const CanonicalParams p = oracle::draw_params(rng);
      for (Branch br : {Branch::Top, Branch::Bottom}) {
        const BasisParams bp = basis_params(p, br);
        const double mu2 = (1 - p.b) * (1 - p.b) + 4 * p.B / (p.r - 1);
        const double nu2 = (1 - p.a) * (1 - p.a) - 4 * p.A / p.r;
        CHECK(std::fabs(bp.mu * bp.mu - mu2) < 1e-13 * std::max(1.0, std::fabs(mu2)));
        CHECK(std::fabs(bp.nu * bp.nu - nu2) < 1e-13 * std::max(1.0, std::fabs(nu2)));
        CHECK(std::fabs(2 * bp.e0 - (bp.nu + 1 - p.a)) < 1e-13);
        CHECK(std::fabs(2 * bp.e1 - (bp.mu + 1 - p.b)) < 1e-13);
        CHECK(std::fabs(2 * bp.er + p.c) < 1e-13);
        CHECK(bp.mu > -1.0);
        CHECK(bp.nu > -1.0);
      }
    }
  }
}

TEST_CASE("hahn_family") {
  SUBCASE("reference set, top branch") {
    const CanonicalParams p = oracle::reference_params();
    const BasisParams bp = basis_params(p, Branch::Top);
    const HahnFamily fam = hahn_family(p, bp);
    CHECK(fam.zeta == doctest::Approx(1.0));
    CHECK(fam.sum_ls() == doctest::Approx(2.0));
    CHECK(fam.sum_tr() == doctest::Approx(2.0));
    CHECK(fam.sum_all() == doctest::Approx(4.0));
  }

  SUBCASE("sum relations hold for any draw and both branches") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const CanonicalParams p = oracle::draw_params(rng);
      for (Branch br : {Branch::Top, Branch::Bottom}) {
        const BasisParams bp = basis_params(p, br);
        const HahnFamily fam = hahn_family(p, bp);
        const double sgn = branch_sign(br);
        CHECK(std::fabs(fam.sum_ls() - (bp.mu + 1)) < 1e-12);
        CHECK(std::fabs(fam.sum_tr() - (bp.nu + 1)) < 1e-12);
        CHECK(std::fabs(fam.sum_all() - (bp.mu + bp.nu + 2)) < 1e-12);
        CHECK(std::fabs(fam.sum_lr() - (0.5 * (bp.mu + bp.nu) + 1 + sgn * bp.chi)) < 1e-12);
        CHECK(std::fabs(fam.sum_ts() - (0.5 * (bp.mu + bp.nu) + 1 - sgn * bp.chi)) < 1e-12);
        CHECK(std::fabs(fam.zeta - 0.5 * (bp.mu + 1 + sgn * (p.b + p.r * p.c))) < 1e-12);
      }
    }
  }

  SUBCASE("lambda override moves the split but not the sums") {
    std::mt19937_64 rng(6);
    const CanonicalParams p = oracle::draw_params(rng);
    const BasisParams bp = basis_params(p, Branch::Bottom);
    const HahnFamily base = hahn_family(p, bp);
    for (double lam : {-2.0, 0.3, 5.0}) {
      const HahnFamily moved = hahn_family(p, bp, lam);
      CHECK(moved.lambda == lam);
      CHECK(std::fabs(moved.sum_lr() - base.sum_lr()) < 1e-12);
      CHECK(std::fabs(moved.sum_ls() - base.sum_ls()) < 1e-12);
      CHECK(std::fabs(moved.sum_tr() - base.sum_tr()) < 1e-12);
      CHECK(std::fabs(moved.sum_ts() - base.sum_ts()) < 1e-12);
      CHECK(moved.zeta == base.zeta);
    }
  }

  SUBCASE("symmetric lambda collapses rho and sigma when mu = nu") {
    const CanonicalParams p = oracle::reference_params();
    const BasisParams bp = basis_params(p, Branch::Top);
    const HahnFamily fam = hahn_family(p, bp, symmetric_lambda(bp));
    CHECK(fam.rho == doctest::Approx(fam.lambda).epsilon(1e-13));
    CHECK(fam.sigma == doctest::Approx(fam.tau).epsilon(1e-13));
  }
}

TEST_CASE("symmetric_case_check") {
  SUBCASE("reference set is symmetric") {
    CHECK(symmetric_case_check(oracle::reference_params()));
  }

  SUBCASE("A only on one side breaks it") {
    CanonicalParams p = oracle::reference_params();
    p.A = 0.1 * p.r;
    std::tie(p.C, p.E) = derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    CHECK_FALSE(symmetric_case_check(p));
  }

  SUBCASE("constructed symmetric set with a=2, b=0") {
    CanonicalParams p = oracle::reference_params();
    p.a = 2.0;
    p.b = 0.0;
    p.c = 0.4;
    // solve the restriction for B given A = 0
    const double rhs = 0.5 * (p.a - p.b) * (0.5 * (p.a + p.b) - 1.0);
    p.A = 0.0;
    p.B = (p.r - 1.0) * rhs;
    p.D = 0.3;
    std::tie(p.C, p.E) = derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    REQUIRE(validate(p).pass);
    CHECK(symmetric_case_check(p));
    const BasisParams bp = basis_params(p, Branch::Top);
    CHECK(bp.mu == doctest::Approx(bp.nu).epsilon(1e-13));
    // and the symmetric lambda indeed collapses the family
    const HahnFamily fam = hahn_family(p, bp, symmetric_lambda(bp));
    CHECK(fam.rho == doctest::Approx(fam.lambda).epsilon(1e-12));
    CHECK(fam.sigma == doctest::Approx(fam.tau).epsilon(1e-12));
  }
}

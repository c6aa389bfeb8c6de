#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foothold/losses.hpp"
#include "foothold/rng.hpp"

#include <cmath>

using namespace foothold;

namespace {

Eigen::VectorXd random_vector(Pcg32& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

}  // namespace

TEST_CASE("kl of the standard normal is zero") {
  for (int n : {1, 3, 16}) {
    DiagGaussian q{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Ones(n)};
    CHECK(kl_to_standard_normal(q) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("kl closed-form spot values") {
  DiagGaussian unit_mean{Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1)};
  CHECK(kl_to_standard_normal(unit_mean) == doctest::Approx(0.5).epsilon(1e-12));

  DiagGaussian wide{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Constant(1, 2.0)};
  double expected = 0.5 * (4.0 - 1.0 - std::log(4.0));  // 0.8068528...
  CHECK(kl_to_standard_normal(wide) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(kl_to_standard_normal(wide) - 0.806853) <= 1e-6);
}

TEST_CASE("kl is nonnegative and zero only at the standard normal") {
  Pcg32 rng(5, 1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform_u32(8));
    DiagGaussian q{random_vector(rng, n, -2, 2), random_vector(rng, n, 0.1, 3.0)};
    double kl = kl_to_standard_normal(q);
    CHECK(kl >= 0.0);
    bool is_standard = q.mu.isZero(1e-12) && (q.sigma.array() - 1.0).isZero(1e-12);
    if (kl <= 1e-12) CHECK(is_standard);
  }
}

TEST_CASE("non-positive sigma is rejected") {
  DiagGaussian q{Eigen::VectorXd::Zero(2), Eigen::VectorXd::Ones(2)};
  q.sigma(1) = 0.0;
  CHECK_THROWS_AS(kl_to_standard_normal(q), std::invalid_argument);
  q.sigma(1) = -0.3;
  CHECK_THROWS_AS(kl_to_standard_normal(q), std::invalid_argument);
}

TEST_CASE("mse and l1 hand values") {
  Eigen::VectorXd a(2), b(2);
  a << 0, 0;
  b << 1, 3;
  CHECK(mse(a, b) == doctest::Approx(5.0));
  CHECK(l1(a, b) == doctest::Approx(2.0));
  CHECK(mse(a, b) >= l1(a, b) * l1(a, b));  // Jensen
  CHECK(mse(a, a) == 0.0);
  CHECK(l1(b, b) == 0.0);
}

TEST_CASE("mse and l1 are symmetric, nonnegative, zero iff equal") {
  Pcg32 rng(9, 2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform_u32(20));
    Eigen::VectorXd a = random_vector(rng, n, -5, 5);
    Eigen::VectorXd b = random_vector(rng, n, -5, 5);
    CHECK(mse(a, b) == mse(b, a));
    CHECK(l1(a, b) == l1(b, a));
    CHECK(mse(a, b) >= 0.0);
    CHECK(l1(a, b) >= 0.0);
    if (mse(a, b) == 0.0) CHECK(a == b);
  }
}

TEST_CASE("shape mismatches are errors") {
  Eigen::VectorXd a(3), b(4);
  a.setZero();
  b.setZero();
  CHECK_THROWS_AS(mse(a, b), std::invalid_argument);
  CHECK_THROWS_AS(l1(a, b), std::invalid_argument);
}

TEST_CASE("ie loss is zero when every prediction matches and q is standard") {
  Eigen::VectorXd obs = Eigen::VectorXd::Ones(45);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(3);
  Eigen::VectorXd hf = Eigen::VectorXd::Ones(100);
  Eigen::VectorXd hb = Eigen::VectorXd::Ones(512);
  EstimatorLossBreakdown loss = ie_loss(0.0, obs, obs, v, v, hf, hf, hb, hb);
  CHECK(loss.total == 0.0);
}

TEST_CASE("ie loss velocity-only error gives 0.01/3") {
  Eigen::VectorXd obs = Eigen::VectorXd::Zero(45);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd v_hat = v;
  v_hat(0) += 0.1;
  Eigen::VectorXd hf = Eigen::VectorXd::Zero(100);
  Eigen::VectorXd hb = Eigen::VectorXd::Zero(512);
  EstimatorLossBreakdown loss = ie_loss(0.0, obs, obs, v_hat, v, hf, hf, hb, hb);
  CHECK(loss.velocity == doctest::Approx(0.01 / 3.0).epsilon(1e-12));
  CHECK(loss.total == doctest::Approx(0.01 / 3.0).epsilon(1e-12));
}

TEST_CASE("ie loss breakdown sums to the total within 1e-12") {
  Pcg32 rng(13, 3);
  Eigen::VectorXd o1 = random_vector(rng, 45, -1, 1), o2 = random_vector(rng, 45, -1, 1);
  Eigen::VectorXd v1 = random_vector(rng, 3, -1, 1), v2 = random_vector(rng, 3, -1, 1);
  Eigen::VectorXd f1 = random_vector(rng, 100, -1, 1), f2 = random_vector(rng, 100, -1, 1);
  Eigen::VectorXd b1 = random_vector(rng, 512, -1, 1), b2 = random_vector(rng, 512, -1, 1);
  EstimatorLossBreakdown loss = ie_loss(0.37, o1, o2, v1, v2, f1, f2, b1, b2);
  double sum = loss.kl + loss.next_obs + loss.velocity + loss.foot_maps + loss.body_map;
  CHECK(std::abs(sum - loss.total) <= 1e-12);
  CHECK_THROWS_AS(ie_loss(0.0, o1, o2, v1, v2, f1, f2, b1, random_vector(rng, 100, -1, 1)),
                  std::invalid_argument);
}

TEST_CASE("tr loss composition") {
  Eigen::MatrixXd target = Eigen::MatrixXd::Random(32, 16);
  SUBCASE("all equal gives zero") {
    CHECK(tr_loss(target, target, target).total == 0.0);
  }
  SUBCASE("refined off by +0.05 adds 0.05 of L1") {
    Eigen::MatrixXd refined = target.array() + 0.05;
    ReconstructionLossBreakdown loss = tr_loss(target, refined, target);
    CHECK(loss.rough_mse == 0.0);
    CHECK(loss.refined_l1 == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(loss.total == doctest::Approx(0.05).epsilon(1e-9));
  }
  SUBCASE("rough off by +0.1 adds 0.01 of MSE") {
    Eigen::MatrixXd rough = target.array() + 0.1;
    ReconstructionLossBreakdown loss = tr_loss(rough, target, target);
    CHECK(loss.rough_mse == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(loss.refined_l1 == 0.0);
    CHECK(loss.total == doctest::Approx(0.01).epsilon(1e-9));
  }
  SUBCASE("wrong shapes are rejected") {
    Eigen::MatrixXd small = Eigen::MatrixXd::Zero(16, 16);
    CHECK_THROWS_AS(tr_loss(small, target, target), std::invalid_argument);
  }
  SUBCASE("breakdown sums to total") {
    Eigen::MatrixXd rough = target.array() + 0.03;
    Eigen::MatrixXd refined = target.array() - 0.02;
    ReconstructionLossBreakdown loss = tr_loss(rough, refined, target);
    CHECK(std::abs(loss.rough_mse + loss.refined_l1 - loss.total) <= 1e-12);
  }
}

TEST_CASE("analytic gradients match central differences to 1e-5") {
  Pcg32 rng(17, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u32(10));
    Eigen::VectorXd b = random_vector(rng, n, -2, 2);

    // mse gradient wrt a
    Eigen::VectorXd a = random_vector(rng, n, -2, 2);
    auto f_mse = [&](const Eigen::VectorXd& x) { return mse(x, b); };
    CHECK(grad_check(f_mse, a, mse_grad(a, b)) < 1e-5);

    // l1 gradient wrt a, away from ties
    Eigen::VectorXd a1 = b.array() + 0.5;  // no ties
    auto f_l1 = [&](const Eigen::VectorXd& x) { return l1(x, b); };
    CHECK(grad_check(f_l1, a1, l1_grad(a1, b)) < 1e-5);

    // kl gradient wrt (mu, sigma) jointly
    Eigen::VectorXd mu = random_vector(rng, n, -1.5, 1.5);
    Eigen::VectorXd sigma = random_vector(rng, n, 0.4, 2.5);
    Eigen::VectorXd packed(2 * n);
    packed << mu, sigma;
    auto f_kl = [n](const Eigen::VectorXd& x) {
      DiagGaussian q{x.head(n), x.tail(n)};
      return kl_to_standard_normal(q);
    };
    Eigen::VectorXd d_mu, d_sigma;
    kl_grad({mu, sigma}, d_mu, d_sigma);
    Eigen::VectorXd analytic(2 * n);
    analytic << d_mu, d_sigma;
    CHECK(grad_check(f_kl, packed, analytic) < 1e-5);
  }
}

TEST_CASE("kl gradient at the spot values from the formulas") {
  Eigen::VectorXd mu(1), sigma(1);
  mu << 0.3;
  sigma << 1.2;
  Eigen::VectorXd d_mu, d_sigma;
  kl_grad({mu, sigma}, d_mu, d_sigma);
  CHECK(d_mu(0) == doctest::Approx(0.3));
  CHECK(d_sigma(0) == doctest::Approx(1.2 - 1.0 / 1.2));
  auto f = [](const Eigen::VectorXd& x) {
    return kl_to_standard_normal({x.head(1), x.tail(1)});
  };
  Eigen::VectorXd packed(2), analytic(2);
  packed << 0.3, 1.2;
  analytic << d_mu(0), d_sigma(0);
  CHECK(grad_check(f, packed, analytic) < 1e-5);
}

TEST_CASE("constant functions pass the gradient check exactly") {
  auto f = [](const Eigen::VectorXd&) { return 4.2; };
  Eigen::VectorXd x = Eigen::VectorXd::Ones(5);
  CHECK(grad_check(f, x, Eigen::VectorXd::Zero(5)) == 0.0);
}

#include "foothold/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace foothold {

namespace {

void require_same_size(const Eigen::Ref<const Eigen::VectorXd>& a,
                       const Eigen::Ref<const Eigen::VectorXd>& b,
                       const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

void require_size(const Eigen::Ref<const Eigen::VectorXd>& a, Eigen::Index n,
                  const char* what) {
  if (a.size() != n)
    throw std::invalid_argument(std::string(what) + ": unexpected shape");
}

}  // namespace

double kl_to_standard_normal(const DiagGaussian& q) {
  if (q.mu.size() != q.sigma.size())
    throw std::invalid_argument("kl: mu/sigma shape mismatch");
  if ((q.sigma.array() <= 0.0).any())
    throw std::invalid_argument("kl: sigma must be strictly positive");
  auto mu2 = q.mu.array().square();
  auto s2 = q.sigma.array().square();
  return 0.5 * (mu2 + s2 - 1.0 - s2.log()).sum();
}

void kl_grad(const DiagGaussian& q, Eigen::VectorXd& d_mu, Eigen::VectorXd& d_sigma) {
  if ((q.sigma.array() <= 0.0).any())
    throw std::invalid_argument("kl: sigma must be strictly positive");
  d_mu = q.mu;
  d_sigma = (q.sigma.array() - q.sigma.array().inverse()).matrix();
}

double mse(const Eigen::Ref<const Eigen::VectorXd>& a,
           const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_same_size(a, b, "mse");
  if (a.size() == 0) throw std::invalid_argument("mse: empty input");
  return (a - b).squaredNorm() / static_cast<double>(a.size());
}

double l1(const Eigen::Ref<const Eigen::VectorXd>& a,
          const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_same_size(a, b, "l1");
  if (a.size() == 0) throw std::invalid_argument("l1: empty input");
  return (a - b).array().abs().sum() / static_cast<double>(a.size());
}

Eigen::VectorXd mse_grad(const Eigen::Ref<const Eigen::VectorXd>& a,
                         const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_same_size(a, b, "mse_grad");
  return 2.0 / static_cast<double>(a.size()) * (a - b);
}

Eigen::VectorXd l1_grad(const Eigen::Ref<const Eigen::VectorXd>& a,
                        const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_same_size(a, b, "l1_grad");
  // Subgradient; exact ties get 0. grad_check skips tie coordinates.
  Eigen::VectorXd g = (a - b).array().sign();
  return g / static_cast<double>(a.size());
}

EstimatorLossBreakdown ie_loss(double kl,
                               const Eigen::Ref<const Eigen::VectorXd>& next_obs_pred,
                               const Eigen::Ref<const Eigen::VectorXd>& next_obs,
                               const Eigen::Ref<const Eigen::VectorXd>& v_hat,
                               const Eigen::Ref<const Eigen::VectorXd>& v,
                               const Eigen::Ref<const Eigen::VectorXd>& foot_maps_hat,
                               const Eigen::Ref<const Eigen::VectorXd>& foot_maps,
                               const Eigen::Ref<const Eigen::VectorXd>& body_map_hat,
                               const Eigen::Ref<const Eigen::VectorXd>& body_map) {
  require_size(next_obs_pred, 45, "ie_loss next_obs_pred");
  require_size(next_obs, 45, "ie_loss next_obs");
  require_size(v_hat, 3, "ie_loss v_hat");
  require_size(v, 3, "ie_loss v");
  require_size(foot_maps_hat, 100, "ie_loss foot_maps_hat");
  require_size(foot_maps, 100, "ie_loss foot_maps");
  require_size(body_map_hat, 512, "ie_loss body_map_hat");
  require_size(body_map, 512, "ie_loss body_map");

  EstimatorLossBreakdown out;
  out.kl = kl;
  out.next_obs = mse(next_obs_pred, next_obs);
  out.velocity = mse(v_hat, v);
  out.foot_maps = mse(foot_maps_hat, foot_maps);
  out.body_map = mse(body_map_hat, body_map);
  out.total = out.kl + out.next_obs + out.velocity + out.foot_maps + out.body_map;
  return out;
}

ReconstructionLossBreakdown tr_loss(const Eigen::Ref<const Eigen::MatrixXd>& rough,
                                    const Eigen::Ref<const Eigen::MatrixXd>& refined,
                                    const Eigen::Ref<const Eigen::MatrixXd>& target) {
  auto check = [](const Eigen::Ref<const Eigen::MatrixXd>& m, const char* what) {
    if (m.rows() != 32 || m.cols() != 16)
      throw std::invalid_argument(std::string("tr_loss ") + what + ": expected 32x16");
  };
  check(rough, "rough");
  check(refined, "refined");
  check(target, "target");

  ReconstructionLossBreakdown out;
  out.rough_mse = mse(rough.reshaped(), target.reshaped());
  out.refined_l1 = l1(refined.reshaped(), target.reshaped());
  out.total = out.rough_mse + out.refined_l1;
  return out;
}

double grad_check(const std::function<double(const Eigen::VectorXd&)>& f,
                  const Eigen::VectorXd& x, const Eigen::VectorXd& analytic_grad,
                  double eps) {
  if (x.size() != analytic_grad.size())
    throw std::invalid_argument("grad_check: gradient shape mismatch");
  double max_rel = 0.0;
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    xp(i) = x(i) + eps;
    double fp = f(xp);
    xp(i) = x(i) - eps;
    double fm = f(xp);
    xp(i) = x(i);
    double fd = (fp - fm) / (2.0 * eps);
    double denom = std::max(std::abs(fd) + std::abs(analytic_grad(i)), 1e-6);
    max_rel = std::max(max_rel, std::abs(fd - analytic_grad(i)) / denom);
  }
  return max_rel;
}

}  // namespace foothold

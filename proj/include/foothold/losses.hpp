#pragma once

#include <Eigen/Core>

#include <functional>

namespace foothold {

/// Diagonal Gaussian q(z) = N(mu, diag(sigma^2)); sigma holds standard
/// deviations and must be strictly positive.
struct DiagGaussian {
  Eigen::VectorXd mu;
  Eigen::VectorXd sigma;
};

// KL(q || N(0, I)) = 1/2 sum(mu^2 + sigma^2 - 1 - ln sigma^2).
double kl_to_standard_normal(const DiagGaussian& q);
void kl_grad(const DiagGaussian& q, Eigen::VectorXd& d_mu, Eigen::VectorXd& d_sigma);

// Mean-squared and mean-absolute differences (means, not sums, so the
// values are resolution-independent). Shapes must match.
double mse(const Eigen::Ref<const Eigen::VectorXd>& a,
           const Eigen::Ref<const Eigen::VectorXd>& b);
double l1(const Eigen::Ref<const Eigen::VectorXd>& a,
          const Eigen::Ref<const Eigen::VectorXd>& b);
// d/da of the above.
Eigen::VectorXd mse_grad(const Eigen::Ref<const Eigen::VectorXd>& a,
                         const Eigen::Ref<const Eigen::VectorXd>& b);
Eigen::VectorXd l1_grad(const Eigen::Ref<const Eigen::VectorXd>& a,
                        const Eigen::Ref<const Eigen::VectorXd>& b);

/// Estimator loss: KL + next-observation, velocity, foot-map and body-map
/// reconstruction terms, summed unweighted. The KL value is supplied by the
/// caller (the encoder head is out of scope here).
struct EstimatorLossBreakdown {
  double kl{0.0};
  double next_obs{0.0};
  double velocity{0.0};
  double foot_maps{0.0};
  double body_map{0.0};
  double total{0.0};
};

EstimatorLossBreakdown ie_loss(
    double kl,
    const Eigen::Ref<const Eigen::VectorXd>& next_obs_pred,   // 45
    const Eigen::Ref<const Eigen::VectorXd>& next_obs,        // 45
    const Eigen::Ref<const Eigen::VectorXd>& v_hat,           // 3
    const Eigen::Ref<const Eigen::VectorXd>& v,               // 3
    const Eigen::Ref<const Eigen::VectorXd>& foot_maps_hat,   // 4*5*5
    const Eigen::Ref<const Eigen::VectorXd>& foot_maps,       // 4*5*5
    const Eigen::Ref<const Eigen::VectorXd>& body_map_hat,    // 32*16
    const Eigen::Ref<const Eigen::VectorXd>& body_map);       // 32*16

/// Reconstruction loss: MSE on the rough decode plus L1 on the refined one,
/// both against the same 32x16 target.
struct ReconstructionLossBreakdown {
  double rough_mse{0.0};
  double refined_l1{0.0};
  double total{0.0};
};

ReconstructionLossBreakdown tr_loss(const Eigen::Ref<const Eigen::MatrixXd>& rough,
                                    const Eigen::Ref<const Eigen::MatrixXd>& refined,
                                    const Eigen::Ref<const Eigen::MatrixXd>& target);

// Central-difference check of an analytic gradient; returns the maximum
// per-coordinate relative error.
double grad_check(const std::function<double(const Eigen::VectorXd&)>& f,
                  const Eigen::VectorXd& x, const Eigen::VectorXd& analytic_grad,
                  double eps = 1e-5);

}  // namespace foothold

#include "foothold/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace foothold {

double success_rate(std::span<const EpisodeLog> logs, double goal_distance) {
  if (logs.empty()) throw std::invalid_argument("success_rate: empty log set");
  long successes = 0;
  for (const EpisodeLog& log : logs)
    if (log.outcome == EpisodeOutcome::kSuccess && log.distance_traversed >= goal_distance)
      ++successes;
  return static_cast<double>(successes) / static_cast<double>(logs.size());
}

MeanStd traversing_rate(std::span<const EpisodeLog> logs) {
  if (logs.empty()) throw std::invalid_argument("traversing_rate: empty log set");
  double mean = 0.0;
  for (const EpisodeLog& log : logs) {
    if (log.total_distance <= 0.0)
      throw std::invalid_argument("traversing_rate: log without total distance");
    mean += log.distance_traversed / log.total_distance;
  }
  mean /= static_cast<double>(logs.size());
  double var = 0.0;
  for (const EpisodeLog& log : logs) {
    double r = log.distance_traversed / log.total_distance - mean;
    var += r * r;
  }
  var /= static_cast<double>(logs.size());
  return {mean, std::sqrt(var)};
}

double mean_edge_violation(std::span<const EpisodeLog> logs,
                           const EdgeDistanceField& edge_field, double threshold) {
  if (logs.empty()) throw std::invalid_argument("mean_edge_violation: empty log set");
  long contacts = 0;
  long violations = 0;
  for (const EpisodeLog& log : logs) {
    for (const EpisodeStep& step : log.steps) {
      for (const ContactEvent& contact : step.contacts) {
        int i = contact.cell.x();
        int j = contact.cell.y();
        if (i < 0 || i >= edge_field.nx || j < 0 || j >= edge_field.ny)
          throw std::invalid_argument("mean_edge_violation: contact outside the terrain");
        double d = edge_field.distance(i, j);
        if (std::abs(d - contact.edge_distance) > 1e-9)
          throw std::invalid_argument(
              "mean_edge_violation: logs were recorded on a different terrain");
        ++contacts;
        if (d <= threshold) ++violations;
      }
    }
  }
  if (contacts == 0) throw std::invalid_argument("mean_edge_violation: no contacts");
  return static_cast<double>(violations) / static_cast<double>(contacts);
}

KdeGrid foothold_kde(std::span<const Vec2> contacts, double bandwidth,
                     const KdeGridSpec& grid) {
  if (contacts.empty()) throw std::invalid_argument("foothold_kde: no contacts");
  if (bandwidth <= 0.0) throw std::invalid_argument("foothold_kde: bandwidth must be positive");
  if (grid.nx <= 0 || grid.ny <= 0 || grid.resolution <= 0.0)
    throw std::invalid_argument("foothold_kde: invalid grid");

  KdeGrid out;
  out.origin = grid.origin;
  out.resolution = grid.resolution;
  out.nx = grid.nx;
  out.ny = grid.ny;
  out.density.resize(grid.nx, grid.ny);

  constexpr double kTwoPi = 6.283185307179586;
  const double inv_2h2 = 1.0 / (2.0 * bandwidth * bandwidth);
  const double norm =
      1.0 / (kTwoPi * bandwidth * bandwidth * static_cast<double>(contacts.size()));
  for (int i = 0; i < grid.nx; ++i) {
    double cx = grid.origin.x() + (i + 0.5) * grid.resolution;
    for (int j = 0; j < grid.ny; ++j) {
      double cy = grid.origin.y() + (j + 0.5) * grid.resolution;
      double sum = 0.0;
      for (const Vec2& c : contacts) {
        double dx = cx - c.x();
        double dy = cy - c.y();
        sum += std::exp(-(dx * dx + dy * dy) * inv_2h2);
      }
      out.density(i, j) = norm * sum;
    }
  }
  return out;
}

double silverman_bandwidth(std::span<const Vec2> contacts) {
  if (contacts.empty()) throw std::invalid_argument("silverman_bandwidth: no contacts");
  const double n = static_cast<double>(contacts.size());
  Vec2 mean = Vec2::Zero();
  for (const Vec2& c : contacts) mean += c;
  mean /= n;
  double var = 0.0;
  for (const Vec2& c : contacts) var += (c - mean).squaredNorm();
  var /= 2.0 * n;  // average of the two marginal variances
  double sigma = std::sqrt(var);
  if (sigma <= 0.0) return kGridResolution;
  return sigma * std::pow(n, -1.0 / 6.0);
}

std::vector<Vec2> collect_contacts(std::span<const EpisodeLog> logs) {
  std::vector<Vec2> contacts;
  for (const EpisodeLog& log : logs)
    for (const EpisodeStep& step : log.steps)
      for (const ContactEvent& contact : step.contacts)
        contacts.push_back(contact.position.head<2>());
  return contacts;
}

ReconstructionError reconstruction_error(const Eigen::Ref<const Eigen::MatrixXd>& estimate,
                                         const Eigen::Ref<const Eigen::MatrixXd>& truth) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
    throw std::invalid_argument("reconstruction_error: shape mismatch");
  if (estimate.size() == 0)
    throw std::invalid_argument("reconstruction_error: empty grids");
  Eigen::ArrayXXd diff = (estimate - truth).array();
  ReconstructionError out;
  out.mae = diff.abs().mean();
  out.rmse = std::sqrt(diff.square().mean());
  return out;
}

ReconstructionError reconstruction_error(const LocalHeightmap& estimate,
                                         const LocalHeightmap& truth) {
  return reconstruction_error(Eigen::MatrixXd(estimate.height),
                              Eigen::MatrixXd(truth.height));
}

}  // namespace foothold

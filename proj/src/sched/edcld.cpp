#include <algorithm>
#include <cmath>
#include <limits>

#include "mpv/sched/scheduler.h"

namespace mpv {
namespace {

constexpr double kHuge = std::numeric_limits<double>::infinity();

}  // namespace

void EdcldScheduler::EnsureInit(size_t n) {
  if (ratio_.size() == n) return;
  ratio_.assign(n, 1.0 / static_cast<double>(n));
  dealt_.assign(n, 0.0);
  total_dealt_ = 0;
}

std::vector<double> EdcldScheduler::Costs(const std::vector<PathSnapshot>& snapshots,
                                          double lambda) const {
  std::vector<double> costs(snapshots.size(), kHuge);
  for (size_t i = 0; i < snapshots.size(); ++i) {
    const auto& s = snapshots[i];
    double mu = static_cast<double>(s.abw_bps) / (8.0 * mtu_bytes_);  // pkts/s
    if (mu <= 0) continue;
    double psi =
        ratio_.size() == snapshots.size() ? ratio_[i] : 1.0 / static_cast<double>(snapshots.size());
    double d_sec = s.owd_ms / 1000.0;
    double q_pkts = static_cast<double>(s.pending_bytes) / mtu_bytes_;
    double service = mu - psi * lambda;
    double queue_term = service > 0 ? (1.0 - w_) / service : kHuge;
    costs[i] = d_sec + queue_term + w_ * q_pkts / mu;
  }
  return costs;
}

// Solve C_best(psi_b + d) = C_worst(psi_w - d) for d and apply it when a
// root keeps both ratios in [0,1] and both queues stable. Expanding the
// equality with a = mu_b - psi_b*l, c = mu_w - psi_w*l and K the difference
// of the psi-independent terms gives
//   K*l^2*d^2 + l*(2(1-w) - K(a-c))*d + (1-w)(c-a) - K*a*c = 0.
void EdcldScheduler::Rebalance(const std::vector<PathSnapshot>& snapshots, double lambda) {
  EnsureInit(snapshots.size());
  if (snapshots.size() < 2 || lambda <= 0) return;

  std::vector<double> costs = Costs(snapshots, lambda);
  size_t best = 0, worst = 0;
  for (size_t i = 1; i < snapshots.size(); ++i) {
    if (costs[i] < costs[best]) best = i;
    if (costs[i] > costs[worst]) worst = i;
  }
  if (best == worst || costs[best] == costs[worst]) return;
  if (std::isinf(costs[best])) return;  // no usable path to shift onto

  double mu_b = static_cast<double>(snapshots[best].abw_bps) / (8.0 * mtu_bytes_);
  double mu_w = static_cast<double>(snapshots[worst].abw_bps) / (8.0 * mtu_bytes_);
  double q_b = static_cast<double>(snapshots[best].pending_bytes) / mtu_bytes_;
  double q_w = static_cast<double>(snapshots[worst].pending_bytes) / mtu_bytes_;
  double off_b = snapshots[best].owd_ms / 1000.0 + w_ * q_b / mu_b;
  double off_w = mu_w > 0 ? snapshots[worst].owd_ms / 1000.0 + w_ * q_w / mu_w : kHuge;
  if (std::isinf(off_w)) return;

  double a = mu_b - ratio_[best] * lambda;
  double c = mu_w - ratio_[worst] * lambda;
  double big_k = off_w - off_b;

  std::vector<double> roots;
  double one_w = 1.0 - w_;
  if (std::abs(big_k) < 1e-12) {
    if (one_w > 0) roots.push_back((a - c) / (2.0 * lambda));
  } else {
    double qa = big_k * lambda * lambda;
    double qb = lambda * (2.0 * one_w - big_k * (a - c));
    double qc = one_w * (c - a) - big_k * a * c;
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0) return;
    double sq = std::sqrt(disc);
    roots.push_back((-qb + sq) / (2.0 * qa));
    roots.push_back((-qb - sq) / (2.0 * qa));
  }

  double chosen = 0;
  bool found = false;
  for (double d : roots) {
    if (!(d > 0) || !std::isfinite(d)) continue;
    double nb = ratio_[best] + d;
    double nw = ratio_[worst] - d;
    if (nb > 1.0 + 1e-12 || nw < -1e-12) continue;
    if (mu_b - nb * lambda <= 0 || mu_w - nw * lambda <= 0) continue;
    if (!found || d < chosen) {
      chosen = d;
      found = true;
    }
  }
  if (!found) return;

  ratio_[best] = std::min(1.0, ratio_[best] + chosen);
  ratio_[worst] = std::max(0.0, ratio_[worst] - chosen);
  // New ratios apply from here on; carrying the dealing history over would
  // replay the whole imbalance against the new split in one burst.
  dealt_.assign(ratio_.size(), 0.0);
  total_dealt_ = 0;
}

void EdcldScheduler::OnFrame(const std::vector<PathSnapshot>& snapshots,
                             double offered_pkts_per_sec) {
  Rebalance(snapshots, offered_pkts_per_sec);
}

std::optional<std::vector<uint32_t>> EdcldScheduler::Assign(
    const std::vector<PacketToSchedule>& packets, std::vector<PathSnapshot>& snapshots) {
  EnsureInit(snapshots.size());
  bool any = false;
  for (const auto& s : snapshots) any = any || s.pacing_rate_bps > 0;
  if (!any) return std::nullopt;

  // Deficit dealing toward the split ratios.
  std::vector<uint32_t> out;
  out.reserve(packets.size());
  for (size_t k = 0; k < packets.size(); ++k) {
    size_t pick = 0;
    double best_deficit = -kHuge;
    for (size_t i = 0; i < ratio_.size(); ++i) {
      double deficit = ratio_[i] * (total_dealt_ + 1.0) - dealt_[i];
      if (deficit > best_deficit + 1e-12) {
        best_deficit = deficit;
        pick = i;
      }
    }
    dealt_[pick] += 1.0;
    total_dealt_ += 1.0;
    out.push_back(static_cast<uint32_t>(pick));
  }
  return out;
}

}  // namespace mpv

#include "rigid/gac.hpp"

#include "rigid/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace rigid {

namespace {

// Zero centroid, unit root-mean-square point norm. S(G, p) is invariant
// under both, so this only removes redundant search directions.
void normalize(Eigen::MatrixXd& pts) {
  const Eigen::VectorXd centroid = pts.rowwise().mean();
  pts.colwise() -= centroid;
  const double rms = std::sqrt(pts.squaredNorm() / static_cast<double>(pts.cols()));
  if (rms > 0) pts /= rms;
}

double min_distance(const Eigen::MatrixXd& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < pts.cols(); ++j) {
      best = std::min(best, (pts.col(i) - pts.col(j)).squaredNorm());
    }
  }
  return std::sqrt(best);
}

// Reusable buffers for the optimizer's objective. Same value as
// realization_objective up to rounding, without per-call allocation.
class Objective {
 public:
  Objective(const Graph& g, int d) : g_(g), d_(d), b_(d) {}

  double operator()(const Eigen::MatrixXd& pts) {
    const int dn = static_cast<int>(pts.size());
    const int dim = trivial_dim(d_, affine_dim(pts));
    if (dim >= dn) return 0.0;
    const int m = static_cast<int>(g_.size());
    if (m < dn) {
      // S = R^T R and R R^T share their nonzero spectrum; S has dn - m extra zeros.
      const int k = dim - (dn - m);
      if (k < 0) return 0.0;
      r_.setZero(m, dn);
      int row = 0;
      for (const Edge& e : g_.edges()) {
        if (unit_bearing(pts, e)) {
          r_.block(row, e.u * d_, 1, d_) = b_.transpose();
          r_.block(row, e.v * d_, 1, d_) = -b_.transpose();
        }
        ++row;
      }
      gram_edges_.noalias() = r_ * r_.transpose();
      solver_.compute(gram_edges_, Eigen::EigenvaluesOnly);
      return solver_.eigenvalues()(k);
    }
    s_.setZero(dn, dn);
    for (const Edge& e : g_.edges()) {
      if (!unit_bearing(pts, e)) continue;
      for (int r = 0; r < d_; ++r) {
        for (int c = 0; c < d_; ++c) {
          const double v = b_[r] * b_[c];
          s_(e.u * d_ + r, e.u * d_ + c) += v;
          s_(e.v * d_ + r, e.v * d_ + c) += v;
          s_(e.u * d_ + r, e.v * d_ + c) -= v;
          s_(e.v * d_ + r, e.u * d_ + c) -= v;
        }
      }
    }
    solver_.compute(s_, Eigen::EigenvaluesOnly);
    return solver_.eigenvalues()(dim);
  }

 private:
  // Leaves the unit bearing of edge e in b_; false for coincident endpoints.
  bool unit_bearing(const Eigen::MatrixXd& pts, const Edge& e) {
    b_ = pts.col(e.u) - pts.col(e.v);
    const double len = b_.norm();
    if (len <= kCoincidenceTolerance) return false;
    b_ /= len;
    return true;
  }

  // A well-conditioned Gram matrix settles full rank without an SVD.
  int affine_dim(const Eigen::MatrixXd& pts) {
    const int full = static_cast<int>(std::min<Eigen::Index>(pts.rows(), pts.cols() - 1));
    if (full <= 0) return 0;
    centered_ = pts;
    centered_.colwise() -= pts.rowwise().mean();
    if (full == 1) return centered_.squaredNorm() > 0 ? 1 : 0;
    gram_.noalias() = centered_ * centered_.transpose();
    gram_solver_.compute(gram_, Eigen::EigenvaluesOnly);
    const auto& ev = gram_solver_.eigenvalues();
    if (ev(d_ - full) > 1e-12 * ev(d_ - 1)) return full;
    return affine_dimension(pts);
  }

  const Graph& g_;
  int d_;
  Eigen::VectorXd b_;
  Eigen::MatrixXd s_;
  Eigen::MatrixXd r_;
  Eigen::MatrixXd gram_edges_;
  Eigen::MatrixXd centered_;
  Eigen::MatrixXd gram_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_solver_;
};

struct RestartResult {
  double value = 0;
  Eigen::MatrixXd best;
  std::vector<double> trace;
  long evaluations = 0;
  long rejected = 0;
};

RestartResult run_restart(const Graph& g, int d, const OptimizerConfig& cfg, int restart) {
  const int n = g.order();
  auto rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(restart));
  std::normal_distribution<double> gauss(0.0, 1.0);

  RestartResult out;
  Objective objective(g, d);
  Eigen::MatrixXd x(d, n);
  for (int attempt = 0;; ++attempt) {
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = gauss(rng);
    normalize(x);
    if (min_distance(x) >= cfg.injectivity_floor || attempt > 100) break;
    ++out.rejected;
  }
  double f = objective(x);
  ++out.evaluations;

  double step = cfg.step_init;
  out.trace.reserve(static_cast<std::size_t>(cfg.iterations));
  Eigen::MatrixXd candidate;
  for (int it = 0; it < cfg.iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < d; ++c) {
        const double delta = step * gauss(rng);
        for (double sign : {1.0, -1.0}) {
          candidate = x;
          candidate(c, i) += sign * delta;
          normalize(candidate);
          if (min_distance(candidate) < cfg.injectivity_floor) {
            ++out.rejected;
            continue;
          }
          const double fc = objective(candidate);
          ++out.evaluations;
          if (fc > f) {
            x.swap(candidate);
            f = fc;
            break;
          }
        }
      }
    }
    out.trace.push_back(f);
    step *= cfg.step_decay;
  }
  out.value = f;
  out.best = std::move(x);
  return out;
}

}  // namespace

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) {
    throw InvalidInput("algebraic_connectivity: need at least 2 vertices");
  }
  return sym_eigenvalues(laplacian(g))(1);
}

double realization_objective(const Graph& g, const Realization& p, Exec exec) {
  if (g.order() != p.size()) {
    throw InvalidInput("realization_objective: point count does not match graph order");
  }
  const int dn = p.ambient_dim() * p.size();
  const int dim = trivial_dim(p);
  if (dim >= dn) return 0.0;
  return sym_eigenvalues(stiffness_matrix(Framework(g, p), exec))(dim);
}

GacEstimate estimate_gac(const Graph& g, int d, const OptimizerConfig& config) {
  if (g.order() < 2) throw InvalidInput("estimate_gac: need at least 2 vertices");
  if (d < 1) throw InvalidInput("estimate_gac: d must be >= 1");
  if (config.restarts < 1 || config.iterations < 0) {
    throw InvalidInput("estimate_gac: restarts must be >= 1 and iterations >= 0");
  }
  if (!(config.step_init > 0) || !(config.step_decay > 0) || config.step_decay > 1 ||
      !(config.injectivity_floor > 0)) {
    throw InvalidInput(
        "estimate_gac: need step_init > 0, 0 < step_decay <= 1, injectivity_floor > 0");
  }

  std::vector<RestartResult> results(static_cast<std::size_t>(config.restarts));
  if (config.exec == Exec::serial) {
    for (int r = 0; r < config.restarts; ++r) results[r] = run_restart(g, d, config, r);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < config.restarts; ++r) results[r] = run_restart(g, d, config, r);
  }

  GacEstimate est;
  est.d = d;
  est.restarts = config.restarts;
  est.iterations = config.iterations;
  est.seed = config.seed;
  int best = 0;
  for (int r = 0; r < config.restarts; ++r) {
    est.restart_values.push_back(results[r].value);
    est.evaluations += results[r].evaluations;
    est.rejected_noninjective += results[r].rejected;
    if (results[r].value > results[best].value) best = r;
  }
  est.best_restart = best;
  est.best_realization = Realization(results[best].best);
  est.trace = std::move(results[best].trace);
  // Re-evaluate through the public path so the reported value belongs to
  // the returned realization.
  est.value = realization_objective(g, est.best_realization);
  est.upper_bound = algebraic_connectivity(g);

  const auto& tr = est.trace;
  if (tr.size() < 10) {
    est.converged = !tr.empty();
  } else {
    const double tail_gain = tr.back() - tr[tr.size() - tr.size() / 10 - 1];
    est.converged = tail_gain <= 1e-6 * std::max(1.0, std::abs(tr.back()));
  }
  return est;
}

GacEstimate estimate_gac(const FamilySpec& spec, int d, const OptimizerConfig& config) {
  GacEstimate est = estimate_gac(generate(spec), d, config);
  if (const auto known = known_gac(spec, d); known && known->upper) {
    est.upper_bound = std::min(est.upper_bound, *known->upper);
  }
  return est;
}

double rigidity_ratio(const Graph& g, int d, const OptimizerConfig& config) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionFailure("rigidity_ratio: graph must be connected with n >= 2");
  }
  return estimate_gac(g, d, config).value / algebraic_connectivity(g);
}

std::optional<KnownValue> known_gac(const FamilySpec& spec, int d) {
  spec.validate();
  auto exact = [&](double v, std::string source) {
    return KnownValue{spec, d, v, v, std::move(source)};
  };
  const int a = spec.first;
  const int b = spec.second;

  switch (spec.kind) {
    case FamilyKind::complete:
      if (a == 2) return exact(2.0, "a_d(K_2) = 2 for every d");
      if (d == 1) return exact(a, "a_1(K_n) = n");
      if (d == 2) return exact(a / 2.0, "a_2(K_n) = n/2 for n >= 3");
      if (a == d + 1) return exact(1.0, "a_d(K_{d+1}) = 1 for d >= 3");
      if (a >= d + 2) {
        const double lower = 0.5 * std::ceil(static_cast<double>(a) / d);
        const double upper = 2.0 * a / (3.0 * (d - 1)) + 1.0 / 3.0;
        return KnownValue{spec, d, lower, upper,
                          "1/2 ceil(n/d) <= a_d(K_n) <= 2n/(3(d-1)) + 1/3 for d >= 3"};
      }
      return std::nullopt;
    case FamilyKind::star:
      if (d == 1) return exact(b, "a_1(S_{n,d}) = d");
      if (d == b) return exact(1.0, "a_d(S_{n,d}) = 1");
      return std::nullopt;
    case FamilyKind::turan:
      if (d == 1) return exact(a * (b - 1), "a_1(T_{kr,r}) = k(r-1)");
      if (b == d + 1) {
        return KnownValue{spec, d, a / 2.0, std::nullopt, "a_d(T_{k(d+1),d+1}) >= k/2"};
      }
      if (b == 2 * d) {
        return KnownValue{spec, d, static_cast<double>(a), std::nullopt,
                          "a_d(T_{k(2d),2d}) >= k"};
      }
      return std::nullopt;
    case FamilyKind::cycle:
      if (d == 1) return exact(cycle_a1(a, b), "a_1(C_{n,d}) closed form");
      return std::nullopt;
    case FamilyKind::path:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace rigid

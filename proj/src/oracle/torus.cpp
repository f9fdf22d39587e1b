#include "mahler/oracle/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <spdlog/spdlog.h>

namespace mahler::oracle {

using formulas::Family;

namespace {

// Additive recurrence with the generalized golden ratio: phi_d is the positive
// root of x^{d+1} = x + 1 and alpha_j = phi_d^{-j}. Kept in 64-bit fixed
// point so that k * alpha mod 1 is exact for any k.
std::vector<std::uint64_t> kronecker_steps(int dimension) {
  double phi = 2;
  for (int it = 0; it < 100; ++it) phi = std::pow(1 + phi, 1.0 / (dimension + 1));
  std::vector<std::uint64_t> steps(dimension);
  double a = 1;
  for (int j = 0; j < dimension; ++j) {
    a /= phi;
    steps[j] = static_cast<std::uint64_t>(std::ldexp(a, 64));
  }
  return steps;
}

double fixed_to_unit(std::uint64_t v) { return std::ldexp(static_cast<double>(v >> 11), -53); }

struct ReplicateResult {
  double mean = 0;
  long skipped = 0;
};

ReplicateResult run_replicate(const TorusIntegrand& f, int dimension, long count, std::uint64_t replicate_seed,
                              SamplingMode mode, const std::vector<std::uint64_t>& steps) {
  std::mt19937_64 rng(replicate_seed);
  std::vector<std::uint64_t> position(dimension);
  for (auto& p : position) p = rng();  // random shift
  std::vector<std::complex<double>> point(dimension);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sum = 0;
  long used = 0, skipped = 0;
  for (long k = 0; k < count; ++k) {
    for (int j = 0; j < dimension; ++j) {
      double theta;
      if (mode == SamplingMode::shifted_lattice) {
        theta = fixed_to_unit(position[j]);
        position[j] += steps[j];
      } else {
        theta = uniform(rng);
      }
      point[j] = std::polar(1.0, 2 * std::numbers::pi * theta);
    }
    const double v = f(point);
    if (!std::isfinite(v)) {
      ++skipped;
      continue;
    }
    sum += v;
    ++used;
  }
  return {used > 0 ? sum / used : 0.0, skipped};
}

}  // namespace

TorusEstimate torus_average(const TorusIntegrand& f, int dimension, long samples, std::uint64_t seed,
                            const TorusOptions& options) {
  if (dimension < 1) throw std::invalid_argument("torus dimension must be positive");
  if (samples < 1 || samples > 1'000'000'000L) throw std::out_of_range("samples must be in [1, 1e9]");
  const int reps = std::max(2, options.replicates);
  const long per = std::max(1L, samples / reps);
  const auto steps = kronecker_steps(dimension);

  std::seed_seq seq{seed, static_cast<std::uint64_t>(dimension)};
  std::vector<std::uint32_t> seeds(2 * reps);
  seq.generate(seeds.begin(), seeds.end());

  std::vector<ReplicateResult> results(reps);
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, reps);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int r = static_cast<int>(w); r < reps; r += static_cast<int>(workers)) {
        const std::uint64_t s = (std::uint64_t(seeds[2 * r]) << 32) | seeds[2 * r + 1];
        results[r] = run_replicate(f, dimension, per, s, options.mode, steps);
      }
    });
  for (auto& t : pool) t.join();

  double mean = 0;
  long skipped = 0;
  for (const auto& r : results) {
    mean += r.mean;
    skipped += r.skipped;
  }
  mean /= reps;
  double var = 0;
  for (const auto& r : results) var += (r.mean - mean) * (r.mean - mean);
  var /= (reps - 1);
  if (skipped > 0) spdlog::warn("torus sampling skipped {} points where log|P| is not finite", skipped);
  TorusEstimate out;
  out.estimate = {mean, std::max(std::sqrt(var / reps), 1e-300), IntegrationMethod::qmc, per * reps, false};
  out.skipped = skipped;
  return out;
}

int torus_dimension(const formulas::FamilySpec& spec) {
  const long n = spec.n_transforms;
  switch (spec.family) {
    case Family::I: return static_cast<int>(n + 1);
    case Family::II: return static_cast<int>(n + 3);
    case Family::III: return static_cast<int>(n + 2);
  }
  throw std::invalid_argument("unknown family");
}

double family_log_abs(const formulas::FamilySpec& spec, const std::vector<std::complex<double>>& v) {
  const long n = spec.n_transforms;
  std::complex<double> plus = 1, minus = 1;
  for (long j = 0; j < n; ++j) {
    plus *= 1.0 + v[j];
    minus *= 1.0 - v[j];
  }
  std::complex<double> p;
  switch (spec.family) {
    case Family::I: p = plus + minus * v[n]; break;
    case Family::II: p = (1.0 + v[n]) * plus + (1.0 + v[n + 1]) * minus * v[n + 2]; break;
    case Family::III: p = plus + minus * v[n] + (plus - minus) * v[n + 1]; break;
  }
  return std::log(std::abs(p));
}

IntegralEstimate torus_qmc(const formulas::FamilySpec& spec, long samples, std::uint64_t seed,
                           const TorusOptions& options) {
  const int dim = torus_dimension(spec);
  if (dim > 4) throw std::out_of_range("torus_qmc is limited to dimension 4");
  if (spec.family == Family::II ? spec.n_transforms < 0 : spec.n_transforms < 1)
    throw std::out_of_range("unsupported number of transforms");
  return torus_average([&](const auto& pt) { return family_log_abs(spec, pt); }, dim, samples, seed, options).estimate;
}

}  // namespace mahler::oracle

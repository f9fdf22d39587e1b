#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "mahler/formulas/families.hpp"
#include "mahler/oracle/quadrature.hpp"

namespace mahler::oracle {

enum class SamplingMode {
  shifted_lattice,  // Kronecker sequence with a seeded Cranley-Patterson shift per replicate
  pseudo_random,    // mt19937_64 uniforms
};

struct TorusOptions {
  SamplingMode mode = SamplingMode::shifted_lattice;
  int replicates = 16;
  unsigned threads = 0;  // 0: hardware concurrency
};

// log|P| on the torus; the argument holds the points e^{2 pi i theta_j}
using TorusIntegrand = std::function<double(const std::vector<std::complex<double>>&)>;

struct TorusEstimate {
  IntegralEstimate estimate;
  long skipped = 0;  // samples where log|P| was not finite
};

// Mean of f over [0,1)^dimension mapped onto the torus. Replicates run in
// parallel and are reduced in replicate order, so the result depends only on
// (seed, samples, options.mode, options.replicates).
TorusEstimate torus_average(const TorusIntegrand& f, int dimension, long samples, std::uint64_t seed,
                            const TorusOptions& options = {});

// Torus dimension of a family member: I has n+1 variables, II n+3, III n+2.
int torus_dimension(const formulas::FamilySpec& spec);

// log|P(point)| for a family member
double family_log_abs(const formulas::FamilySpec& spec, const std::vector<std::complex<double>>& point);

// Direct estimate of m(P). Dimension at most 4, samples at most 1e9.
IntegralEstimate torus_qmc(const formulas::FamilySpec& spec, long samples, std::uint64_t seed,
                           const TorusOptions& options = {});

}  // namespace mahler::oracle

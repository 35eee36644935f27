#pragma once

// Hand-rolled generators and property checks shared by the unit suite and
// the acceptance binary. Every property returns the first counterexample.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kvv/repro.hpp"

namespace kvv::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<long>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string counterexample;

  void fail(std::string why) {
    if (ok) counterexample = std::move(why);
    ok = false;
  }
};

// Generators.
IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);
RationalMatrix random_symmetric(Rng& rng, std::size_t n, long lo, long hi);
/// Divisor on the target: integer combination of non-contracted named curves
/// plus a random residual class.
QDivisor random_target_divisor(Rng& rng, const Contraction& c, long bound);
IntVector random_class(Rng& rng, std::size_t rank, long bound);

/// The bundled scenario, built once.
const BuiltScenario& reference();

// Properties.
PropertyResult snf_invariants(std::uint64_t seed, int trials);
PropertyResult solve_linear_roundtrip(std::uint64_t seed, int trials);
PropertyResult negative_definite_fuzz(std::uint64_t seed, int trials);
PropertyResult pullback_orthogonality(std::uint64_t seed, int trials);
PropertyResult pushforward_section(std::uint64_t seed, int trials);
PropertyResult pullback_representative_independence(std::uint64_t seed, int trials);
PropertyResult blowup_sequences(std::uint64_t seed, int trials);
PropertyResult riemann_roch_quadric_grid(long bound);
PropertyResult serre_symmetry(std::uint64_t seed, int trials);
PropertyResult hirzebruch_jung_a_chains(int max_length);
PropertyResult single_curve_discrepancy(int max_n);
PropertyResult class_group_rank_identity(std::uint64_t seed, int trials);
PropertyResult kollar_monotone_in_p();
PropertyResult cone_scaling(std::uint64_t seed, int trials);
PropertyResult decision_table_total();

/// A fibre (1,0) on the quadric made into a (-n)-curve by n blow-ups on it.
SurfaceModel negative_fibre_model(int n);

}  // namespace kvv::testing

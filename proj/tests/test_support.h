// Copyright 2026 The projstark Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROJSTARK_TESTS_TEST_SUPPORT_H_
#define PROJSTARK_TESTS_TEST_SUPPORT_H_

#include <functional>
#include <random>
#include <stdexcept>

#include "projstark/dynamics.h"
#include "projstark/errors.h"

namespace projstark::testing_support {

// Code of the Error thrown by f; throws std::logic_error if nothing is thrown.
inline ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

struct RandomCase {
  uint64_t modulus;
  SystemSpec spec;
};

// Small primes whose q - 1 has many divisors, so N + 1 | q - 1 leaves plenty
// of choices for N.
inline const std::vector<uint64_t>& CasePrimes() {
  static const std::vector<uint64_t> primes = {331, 337, 401, 433, 577, 641, 769};
  return primes;
}

// A random system with n <= max_dim, entries of A_hat in [-2, 2] and bounds
// small enough that no honest value wraps mod q. Bounds are drawn narrow
// relative to |A_hat z| so that projections trigger often.
inline RandomCase RandomSystem(std::mt19937_64& rng, size_t max_dim = 4, size_t max_steps = 48) {
  auto uniform = [&](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  const auto& primes = CasePrimes();
  const uint64_t q = primes[rng() % primes.size()];
  std::vector<size_t> steps;
  for (size_t m = 2; m <= max_steps + 1; ++m) {
    // Leave room for sample points outside the trace domain and its negation.
    if ((q - 1) % m == 0 && 2 * m < q - 1) steps.push_back(m - 1);
  }
  RandomCase c{q, {}};
  SystemSpec& s = c.spec;
  s.num_steps = steps[rng() % steps.size()];
  const size_t n = 1 + rng() % max_dim;
  const int64_t max_entry = 2;
  const int64_t m = static_cast<int64_t>((q - 1) / (max_entry * n + 1)) - 1;
  s.a_hat.assign(n, IntVector(n));
  for (auto& row : s.a_hat) {
    for (auto& a : row) a = uniform(-max_entry, max_entry);
  }
  for (size_t i = 0; i < n; ++i) {
    const int64_t lo = uniform(-m, m - 1);
    const int64_t hi = uniform(lo + 1, std::min(m, lo + 1 + uniform(0, m)));
    s.z_lower.push_back(lo);
    s.z_upper.push_back(hi);
    s.z_init.push_back(uniform(lo, hi));
  }
  return c;
}

// Row-by-row check of the slack-form relations and (optionally) the initial
// condition, evaluated mod q in plain integer arithmetic.
inline bool TraceSatisfiesConstraintsModQ(const ExecutionTrace& t, uint64_t q,
                                          bool check_initial = true) {
  const SystemSpec& s = t.spec;
  const __int128 m = q;
  auto mod = [m](__int128 v) { return ((v % m) + m) % m; };
  const size_t n = s.dimension();
  for (size_t i = 0; i < n && check_initial; ++i) {
    if (mod(t.z_rows[0][i]) != mod(s.z_init[i])) return false;
  }
  for (size_t k = 0; k < s.num_steps; ++k) {
    for (size_t i = 0; i < n; ++i) {
      __int128 az = 0;
      for (size_t j = 0; j < n; ++j) az += static_cast<__int128>(s.a_hat[i][j]) * t.z_rows[k][j];
      const __int128 up = t.alpha_up_rows[k][i], lo = t.alpha_lo_rows[k][i];
      if (mod(up * (1 - up)) != 0 || mod(lo * (1 - lo)) != 0) return false;
      const __int128 next = mod(up * lo * mod(az)) + mod((1 - up) * s.z_upper[i]) +
                            mod((1 - lo) * s.z_lower[i]);
      if (mod(next) != mod(t.z_rows[k + 1][i])) return false;
      const __int128 delta = mod(up * (s.z_upper[i] - az)) + mod(lo * (az - s.z_lower[i]));
      if (mod(delta) != mod(t.delta_rows[k][i])) return false;
    }
  }
  return true;
}

}  // namespace projstark::testing_support

#endif  // PROJSTARK_TESTS_TEST_SUPPORT_H_

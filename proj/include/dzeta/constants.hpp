// Copyright 2026 The dzeta authors
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

#ifndef DZETA_CONSTANTS_HPP
#define DZETA_CONSTANTS_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "dzeta/precision.hpp"
#include "dzeta/real.hpp"

namespace dzeta {
namespace constants {

/// Parameters of the generalized Euler constant gamma(alpha, beta; mu):
/// alpha > 0 real, beta integer, mu >= 0 integer.
struct GammaParams {
  Real alpha;
  long beta = 1;
  long mu = 1;

  GammaParams(Real a, long b, long m) : alpha(std::move(a)), beta(b), mu(m) {
    validate();
  }
  static GammaParams of(long a, long b, long m, mpfr_prec_t prec) {
    return GammaParams(Real::from_si(a, prec), b, m);
  }
  void validate() const {
    if (!alpha.is_positive()) throw DomainError("gamma requires alpha > 0");
    if (mu < 0) throw DomainError("gamma requires mu >= 0");
  }
};

/// Disk-backed store for slow constants, keyed by (constant id, digits).
/// One JSON file per constant with lossless decimal midpoint/radius strings;
/// writes go through a temp file and an atomic rename. A hit is only served
/// after re-checking that the stored radius still meets the requested digits.
class Cache {
public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void set_dir(std::filesystem::path dir) { dir_ = std::move(dir); }
  const std::filesystem::path& dir() const { return dir_; }
  bool enabled() const { return !dir_.empty(); }

  std::optional<Real> load(const std::string& id, int digits,
                           mpfr_prec_t prec) const;
  void store(const std::string& id, int digits, const Real& value) const;

  static Cache& global();

private:
  std::filesystem::path dir_;
};

/// Production path for gamma(alpha, beta; mu): the geometrically convergent
/// D-series route, gamma = H_mu^(beta) - D(alpha, beta; mu), and
/// gamma(alpha, beta; 0) = -D(alpha, beta; 0).
Real gamma_general(const GammaParams& p, const PrecisionContext& ctx);

/// Independent oracle: the defining limit evaluated at n_max with a 3-point
/// extrapolation over n_max/4, n_max/2, n_max; the radius carries an
/// empirical contraction bound. Converges like 1/n, so expect reduced
/// precision (the production route is the D-series).
Real gamma_general_by_limit(const GammaParams& p, long n_max,
                            const PrecisionContext& ctx);

/// Euler-Mascheroni constant by the production route (gamma(1,1;1)).
Real euler_gamma(const PrecisionContext& ctx);

/// Accelerated-limit oracle for gamma: lim (sum 1/k - log n) on a Richardson
/// ladder. Independent of every zeta-series code path.
Real euler_gamma_limit_oracle(const PrecisionContext& ctx);

/// log A_m from its defining limit: lim (sum_{k<=n} k^m log k - p(n, m)),
/// Richardson-accelerated; cached by (m, digits).
Real log_bendersky(long m, const PrecisionContext& ctx);

/// log A_{-1}(a) = lim (sum_{k<=n} log k/(k+a) - log^2 n / 2).
/// a = 0 is the first Stieltjes constant gamma_1 (accelerated limit, cached);
/// a >= 1 goes through gamma_1 minus the absolutely convergent series
/// sum_k a log k / (k (k+a)).
Real log_stieltjes_shift(long a, const PrecisionContext& ctx);

/// Second, deliberately different limit configuration for gamma_1, used only
/// as an oracle against log_stieltjes_shift(0).
Real stieltjes_gamma1_oracle(const PrecisionContext& ctx);

/// Closed form for gamma(1, 1; mu): gamma/mu + sum_{j=0}^{mu-2} C(mu-1, j) log A_j.
Real gamma_one_one_closed(long mu, const PrecisionContext& ctx);

/// sum_{l>=1} (-1)^l zeta'(l+1), with the tail dominated by 2^(3-sigma).
Real zeta_prime_alternating_sum(const PrecisionContext& ctx);

}  // namespace constants
}  // namespace dzeta

#endif

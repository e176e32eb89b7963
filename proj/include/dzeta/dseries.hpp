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

#ifndef DZETA_DSERIES_HPP
#define DZETA_DSERIES_HPP

#include <utility>

#include "dzeta/closedform.hpp"
#include "dzeta/complexval.hpp"
#include "dzeta/precision.hpp"
#include "dzeta/series.hpp"

namespace dzeta {
namespace dseries {

/// Parameters of D(s1, s2; lambda) = sum_{k>=1} (zeta(s1+k) - 1)/(k+lambda)^s2.
/// Direct evaluation needs s1 > 0 so every zeta argument stays right of 1;
/// lambda is restricted to real lambda > -1.
struct DParams {
  Real s1;
  Real s2;
  Real lam;

  DParams(Real a, Real b, Real l)
      : s1(std::move(a)), s2(std::move(b)), lam(std::move(l)) {
    validate();
  }
  static DParams of(double a, double b, double l, mpfr_prec_t prec) {
    return DParams(Real::from_double(a, prec), Real::from_double(b, prec),
                   Real::from_double(l, prec));
  }
  void validate() const;
};

/// Direct summation with the exponential tail bound zeta(sigma) - 1 < 2^(2-sigma)
/// extended by the polynomial growth of (k+lambda)^(-s2).
SeriesResult d_direct(const DParams& p, const PrecisionContext& ctx);
SeriesResult d_direct(long n, long m, long mu, const PrecisionContext& ctx);

/// D(n, 0; mu) = n - sum_{k=2..n} zeta(k); independent of mu.
ClosedForm closed_form_s2_zero(long n);

/// D(1, -m; 1) = 1 + sum_{k=2..m+1} (k-1)! S(m+1, k) zeta(k).
ClosedForm closed_form_negative_base(long m);

/// D(n, -m; mu) reduced to the base case through binomial re-expansion:
/// sum_l C(m,l) (mu-n)^(m-l) D(1,-l;1) - sum_{k=2..n} (zeta(k)-1)(k+mu-n)^m.
ClosedForm closed_form_reduce(long n, long m, long mu);

/// The index-shifting relation: D(n, m; mu) = D(shifted) - correction, with
/// the finite correction sum kept exact.
struct IndexShift {
  long n1;        // shifted first parameter
  long mu1;       // shifted offset
  ClosedForm correction;  // D(n,m;mu) = D(n1,m;mu1) - correction
};
IndexShift index_shift(long n, long m, long mu);

enum class MSumVariant { plain, alternating, odd };

/// Both sides of the summed-over-m identities: lhs is the m-series of
/// D(n, m; mu) summed with its geometric tail bound, rhs the closed form in
/// gamma(n, 1; mu +- 1) and harmonic numbers.
std::pair<Real, Real> d_m_sum(long n, long mu, MSumVariant variant,
                              const PrecisionContext& ctx);

/// Independent oracle: quadrature of the integral representation
///   D = int_0^inf t^(s1-1) e^-t/(e^t - 1) sum_k t^k (k+lam)^(-s2)/Gamma(s1+k) dt
/// at fixed tolerance 1e-8.
Real d_via_integral(const DParams& p, const PrecisionContext& ctx,
                    double tol = 1e-8);

/// Base sign convention for the bilateral sum of the functional relation.
/// The relation couples D(s1,s2;lam) to sums over (log k + 2 pi i l); see
/// d_functional_rhs. `literal_minus` evaluates the variant with base
/// (2 pi i l - log k) on the principal branch instead.
enum class BilateralBase { log_plus, literal_minus };

/// Right-hand side of the functional relation in s2, valid for
/// Re(s1 - lam) > 1, Re(s2) < 0, -1 < lam <= 0:
///   sum_{k>=2, l in Z} e^{2 pi i l lam} Gamma(1-s2)
///                      / (k^{s1-lam} (log k + 2 pi i l)^{1-s2}),
/// summed with symmetric l pairing; truncation bounds for both indices are
/// folded into the radius. The log_plus base is the convention validated
/// against d_direct; literal_minus is kept for the convention experiment.
Complex d_functional_rhs(const DParams& p, const PrecisionContext& ctx,
                         BilateralBase base = BilateralBase::log_plus);

}  // namespace dseries
}  // namespace dzeta

#endif

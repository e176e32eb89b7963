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

#include "dzeta/quadrature.hpp"

#include <cmath>
#include <vector>

namespace dzeta {

namespace {

// Node of the double-exponential map u -> t = 1/(1 + exp(-pi sinh u)) on
// (0,1), together with the weight dt/du.
struct DeNode {
  Real t;
  Real w;
};

DeNode de_node(double u, mpfr_prec_t p) {
  Real uu = Real::from_double(u, p);
  Real pi = Real::pi(p);
  // sinh u = (e^u - e^-u)/2, cosh likewise
  Real eu = exp_ball(uu);
  Real inv = div(Real::from_si(1, p), eu);
  Real sinh_u = mul_2exp(sub(eu, inv), -1);
  Real cosh_u = mul_2exp(add(eu, inv), -1);
  Real w2 = mul(pi, sinh_u);
  Real e2 = exp_ball(neg(w2));  // e^{-pi sinh u}
  Real denom = add_si(e2, 1);
  DeNode n{div(Real::from_si(1, p), denom), Real(p)};
  // dt/du = pi cosh(u) e^{-w}/(1+e^{-w})^2
  n.w = div(mul(mul(pi, cosh_u), e2), mul(denom, denom));
  return n;
}

// Trapezoid over the DE transform at step h, |u| <= umax.
Real de_sum(const Integrand& f, double h, double umax, mpfr_prec_t p) {
  Real acc(p);
  for (double u = -umax; u <= umax + 1e-12; u += h) {
    DeNode n = de_node(u, p);
    if (!n.t.is_positive()) continue;
    acc = add(acc, mul(f.eval(n.t), n.w));
  }
  return mul(acc, Real::from_double(h, p));
}

Real integrate_unit(const Integrand& f, double tol, mpfr_prec_t p,
                    double* achieved) {
  // Truncation in u: node spacing shrinks double-exponentially; with the
  // t^(sigma-1) endpoint model the neglected mass beyond umax is far below
  // f-scale * exp(-sigma * pi/2 * e^umax).
  double umax = std::log((std::log(1.0 / tol) + 30.0) / f.sigma + 8.0) + 1.2;
  double h = 0.5;
  Real prev = de_sum(f, h, umax, p);
  for (int level = 0; level < 7; ++level) {
    h /= 2;
    Real cur = de_sum(f, h, umax, p);
    double diff = abs_diff(cur, prev).abs_upper().to_double();
    if (diff < tol / 4) {
      cur.grow_radius(Real::from_double(diff * 2 + tol / 16, 64));
      if (achieved) *achieved = diff;
      return cur;
    }
    prev = cur;
    if (achieved) *achieved = diff;
  }
  throw ConvergenceError("quadrature on (0,1] did not meet tolerance; achieved " +
                         std::to_string(achieved ? *achieved : -1.0));
}

// Step-refined trapezoid on [1, T] with T pushed out until the integrand is
// negligible; the tail bound comes from the observed exponential decay rate.
Real integrate_decay(const Integrand& f, double tol, mpfr_prec_t p,
                     double* achieved) {
  double T = 24.0;
  Real fT = f.eval(Real::from_double(T, p));
  Real fT2 = f.eval(Real::from_double(T - 2.0, p));
  int guard = 0;
  while (fT.abs_upper().to_double() > tol / 64 && guard++ < 40) {
    T += 8.0;
    fT2 = f.eval(Real::from_double(T - 2.0, p));
    fT = f.eval(Real::from_double(T, p));
  }
  double fa = fT.abs_upper().to_double();
  double fb = fT2.abs_upper().to_double();
  double tail = 0.0;
  if (fa > 0) {
    double ratio = fb > 0 ? fa / fb : 0.5;
    if (ratio >= 0.95) throw ConvergenceError("integrand decays too slowly past cutoff");
    double rate = -std::log(ratio) / 2.0;  // |f| ~ e^{-rate t}
    tail = fa / rate * 2.0;                // safety factor 2
  }

  auto trap = [&](double h) {
    Real acc = mul_2exp(add(f.eval(Real::from_double(1.0, p)), fT), -1);
    long steps = static_cast<long>(std::llround((T - 1.0) / h));
    for (long i = 1; i < steps; ++i)
      acc = add(acc, f.eval(Real::from_double(1.0 + i * h, p)));
    return mul(acc, Real::from_double(h, p));
  };

  // Richardson in h^2 over halved steps.
  double h = 0.5;
  std::vector<Real> row = {trap(h)};
  for (int level = 1; level <= 7; ++level) {
    h /= 2;
    std::vector<Real> next = {trap(h)};
    long pow4 = 4;
    for (size_t j = 0; j < row.size(); ++j) {
      Real d = sub(next[j], row[j]);
      next.push_back(add(next[j], div_si(d, pow4 - 1)));
      pow4 *= 4;
    }
    double diff = abs_diff(next.back(), row.back()).abs_upper().to_double();
    row = std::move(next);
    if (achieved) *achieved = diff + tail;
    if (diff < tol / 4 && tail < tol / 4) {
      Real out = row.back();
      out.grow_radius(Real::from_double(diff * 2 + tail + tol / 16, 64));
      return out;
    }
  }
  throw ConvergenceError("quadrature on [1,inf) did not meet tolerance; achieved " +
                         std::to_string(achieved ? *achieved : -1.0));
}

}  // namespace

Real integrate(const Integrand& f, double tol, const PrecisionContext& ctx) {
  if (f.sigma <= 0)
    throw DomainError("integrate: endpoint exponent sigma must be positive");
  if (tol <= 0) throw DomainError("integrate: tolerance must be positive");
  mpfr_prec_t p = ctx.prec_bits();
  double a1 = 0, a2 = 0;
  Real left = integrate_unit(f, tol / 2, p, &a1);
  Real right = integrate_decay(f, tol / 2, p, &a2);
  return add(left, right);
}

}  // namespace dzeta

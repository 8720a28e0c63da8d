#include "painleve/numerics/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace painleve {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (fifth minus fourth order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Stepper {
  const Rhs& f;
  cplx t0, span;
  std::size_t n;
  CVec k[7], tmp;

  Stepper(const Rhs& f_, cplx t0_, cplx t1_, std::size_t n_) : f(f_), t0(t0_), span(t1_ - t0_), n(n_) {
    for (auto& v : k) v.assign(n, 0);
    tmp.assign(n, 0);
  }

  // dy/ds = span * f(t0 + s span, y)
  void eval(double s, const CVec& y, CVec& out) {
    f(t0 + s * span, y, out);
    for (auto& v : out) v *= span;
  }

  // k[0] must hold the slope at (s, y). Fills y5 and the error estimate;
  // k[6] ends up as the slope at (s + h, y5).
  void step(double s, double h, const CVec& y, CVec& y5, CVec& err) {
    auto stage = [&](std::initializer_list<std::pair<int, double>> coeffs) {
      for (std::size_t i = 0; i < n; ++i) {
        cplx acc = y[i];
        for (const auto& [j, a] : coeffs) acc += h * a * k[j][i];
        tmp[i] = acc;
      }
    };
    stage({{0, a21}});
    eval(s + c2 * h, tmp, k[1]);
    stage({{0, a31}, {1, a32}});
    eval(s + c3 * h, tmp, k[2]);
    stage({{0, a41}, {1, a42}, {2, a43}});
    eval(s + c4 * h, tmp, k[3]);
    stage({{0, a51}, {1, a52}, {2, a53}, {3, a54}});
    eval(s + c5 * h, tmp, k[4]);
    stage({{0, a61}, {1, a62}, {2, a63}, {3, a64}, {4, a65}});
    eval(s + h, tmp, k[5]);
    y5.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] + b5 * k[4][i] + b6 * k[5][i]);
    eval(s + h, y5, k[6]);
    err.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      err[i] = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] + e6 * k[5][i] + e7 * k[6][i]);
  }
};

bool finite(const CVec& v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace

double Trajectory::accepted_fraction() const {
  std::size_t total = accepted + rejected;
  return total ? double(accepted) / double(total) : 1.0;
}

CVec Trajectory::interpolate(double s) const {
  auto it = std::upper_bound(nodes.begin(), nodes.end(), s);
  std::size_t j = it == nodes.begin() ? 0 : std::size_t(it - nodes.begin()) - 1;
  if (j + 1 >= nodes.size()) return states.back();
  double h = nodes[j + 1] - nodes[j];
  double th = (s - nodes[j]) / h;
  double h00 = (1 + 2 * th) * (1 - th) * (1 - th), h10 = th * (1 - th) * (1 - th);
  double h01 = th * th * (3 - 2 * th), h11 = th * th * (th - 1);
  CVec out(states[j].size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * states[j][i] + h10 * h * slopes[j][i] + h01 * states[j + 1][i] + h11 * h * slopes[j + 1][i];
  return out;
}

Trajectory dopri45(const Rhs& f, cplx t0, cplx t1, const CVec& y0, const IntegratorOptions& opts,
                   std::vector<double> sample_s) {
  Trajectory tr;
  tr.t0 = t0;
  tr.t1 = t1;
  std::sort(sample_s.begin(), sample_s.end());
  std::size_t n = y0.size();
  Stepper st(f, t0, t1, n);
  CVec y = y0, y5, err;
  double s = 0;
  st.eval(0, y, st.k[0]);
  tr.nodes.push_back(0);
  tr.states.push_back(y);
  tr.slopes.push_back(st.k[0]);
  std::size_t next_sample = 0;
  auto record_samples = [&](double at) {
    while (next_sample < sample_s.size() && sample_s[next_sample] <= at + 1e-15) {
      tr.sample_s.push_back(sample_s[next_sample]);
      tr.samples.push_back(std::abs(sample_s[next_sample] - at) < 1e-15 ? y : tr.interpolate(sample_s[next_sample]));
      ++next_sample;
    }
  };
  record_samples(0);
  if (!finite(st.k[0])) {
    tr.failed = true;
    tr.message = "non-finite field at the start";
    return tr;
  }

  // Initial step from the size of the slope.
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(st.k[0][i]) / (opts.atol + opts.rtol * std::abs(y[i])));
  double h = scale > 0 ? std::min(0.1, 0.01 * std::pow(scale, -0.2)) : 0.1;
  h = std::max(h, 1e-6);

  std::size_t steps = 0;
  while (s < 1.0) {
    if (++steps > opts.max_steps) {
      tr.failed = true;
      tr.message = "step budget exhausted at s = " + std::to_string(s);
      return tr;
    }
    double target = 1.0;
    if (next_sample < sample_s.size()) target = std::min(target, sample_s[next_sample]);
    bool lands = s + h >= target - 1e-15;
    double hh = lands ? target - s : h;
    if (hh <= 0) {
      record_samples(s);
      continue;
    }
    st.step(s, hh, y, y5, err);
    double e = 0;
    bool ok = finite(y5) && finite(err);
    if (ok)
      for (std::size_t i = 0; i < n; ++i) {
        double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        double r = std::abs(err[i]) / sc;
        e = std::max(e, r * r);
      }
    e = std::sqrt(e);
    if (ok && e <= 1.0) {
      s = lands ? target : s + hh;
      y = y5;
      std::swap(st.k[0], st.k[6]);
      tr.nodes.push_back(s);
      tr.states.push_back(y);
      tr.slopes.push_back(st.k[0]);
      ++tr.accepted;
      record_samples(s);
      double fac = e > 0 ? 0.9 * std::pow(e, -0.2) : 5.0;
      if (!lands) h = hh * std::clamp(fac, 0.2, 5.0);
    } else {
      ++tr.rejected;
      double fac = ok && e > 0 ? 0.9 * std::pow(e, -0.25) : 0.1;
      h = hh * std::clamp(fac, 0.1, 0.5);
      if (h < opts.min_fraction) {
        tr.failed = true;
        tr.message = "step size underflow at t = (" + std::to_string((t0 + s * (t1 - t0)).real()) + ", " +
                     std::to_string((t0 + s * (t1 - t0)).imag()) + "), likely a movable pole";
        return tr;
      }
    }
  }
  return tr;
}

std::vector<CVec> dopri_fixed_path(const Rhs& f, cplx t0, cplx t1, const CVec& y0, int steps) {
  Stepper st(f, t0, t1, y0.size());
  std::vector<CVec> path{y0};
  CVec y5, err;
  double h = 1.0 / steps;
  for (int k = 0; k < steps; ++k) {
    st.eval(k * h, path.back(), st.k[0]);
    st.step(k * h, h, path.back(), y5, err);
    path.push_back(y5);
  }
  return path;
}

CVec dopri_fixed(const Rhs& f, cplx t0, cplx t1, const CVec& y0, int steps) {
  return dopri_fixed_path(f, t0, t1, y0, steps).back();
}

}  // namespace painleve

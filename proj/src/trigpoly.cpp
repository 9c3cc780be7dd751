// SPDX-License-Identifier: Apache-2.0
#include "s3fam/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "s3fam/polyroot.hpp"

namespace s3fam {

using Cplx = std::complex<double>;

TrigPoly TrigPoly::constant(double b0) {
  TrigPoly t;
  t.degree = 0;
  t.b = {b0};
  t.theta = {0.0};
  return t;
}

TrigPoly TrigPoly::make(std::vector<double> amplitudes, std::vector<double> phases) {
  if (amplitudes.empty()) throw std::invalid_argument("TrigPoly: empty amplitude list");
  TrigPoly t;
  t.degree = static_cast<int>(amplitudes.size()) - 1;
  t.b = std::move(amplitudes);
  if (static_cast<int>(phases.size()) == t.degree) phases.insert(phases.begin(), 0.0);
  if (static_cast<int>(phases.size()) != t.degree + 1)
    throw std::invalid_argument("TrigPoly: phase list size mismatch");
  t.theta = std::move(phases);
  return t;
}

double TrigPoly::evaluate(double alpha) const {
  double acc = b[0];
  for (int j = 1; j <= degree; ++j) acc += b[j] * std::cos(j * alpha + theta[j]);
  return acc;
}

TrigPoly TrigPoly::derivative() const {
  // d/da b_j cos(j a + t_j) = j b_j cos(j a + t_j + pi/2)
  TrigPoly d;
  d.degree = degree;
  d.b.assign(degree + 1, 0.0);
  d.theta.assign(degree + 1, 0.0);
  for (int j = 1; j <= degree; ++j) {
    d.b[j] = j * b[j];
    d.theta[j] = theta[j] + kPi / 2.0;
  }
  return d;
}

double TrigPoly::norm() const {
  double s = 0.0;
  for (double v : b) s += v * v;
  return std::sqrt(s);
}

int TrigPoly::effective_degree() const {
  for (int j = degree; j >= 0; --j)
    if (b[j] != 0.0) return j;
  return -1;
}

std::vector<Cplx> TrigPoly::companion_polynomial() const {
  int k = effective_degree();
  if (k < 0) throw std::invalid_argument("companion_polynomial: zero polynomial");
  std::vector<Cplx> c(2 * k + 1, Cplx(0.0, 0.0));
  c[k] += b[0];
  for (int j = 1; j <= k; ++j) {
    Cplx half = 0.5 * b[j] * std::exp(Cplx(0.0, theta[j]));
    c[k + j] += half;
    c[k - j] += std::conj(half);
  }
  return c;
}

TrigPoly TrigPoly::from_zeros(const std::vector<double>& zeros, bool positive_leading) {
  if (zeros.empty() || zeros.size() % 2 != 0)
    throw std::invalid_argument("from_zeros: need a positive even number of zeros");
  int k = static_cast<int>(zeros.size()) / 2;

  double sum = 0.0;
  for (double a : zeros) sum += a;
  double theta_k = wrap_angle(-sum / 2.0);

  // q(z) = s * e^{i theta_k}/2 * prod (z - e^{i a_j}); s = sign of b_k.
  std::vector<Cplx> q = {Cplx(1.0, 0.0)};
  for (double a : zeros) {
    Cplx root = std::exp(Cplx(0.0, a));
    std::vector<Cplx> next(q.size() + 1, Cplx(0.0, 0.0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i + 1] += q[i];
      next[i] -= root * q[i];
    }
    q = std::move(next);
  }
  double s = positive_leading ? 1.0 : -1.0;
  Cplx lead = 0.5 * s * std::exp(Cplx(0.0, theta_k));
  for (Cplx& c : q) c *= lead;

  TrigPoly t;
  t.degree = k;
  t.b.assign(k + 1, 0.0);
  t.theta.assign(k + 1, 0.0);
  t.b[0] = q[k].real();
  for (int j = 1; j < k; ++j) {
    t.b[j] = 2.0 * std::abs(q[k + j]);
    t.theta[j] = t.b[j] > 1e-15 ? std::arg(q[k + j]) : 0.0;
  }
  t.b[k] = s;
  t.theta[k] = theta_k;
  return t;
}

int ZeroMultiset::total_order() const {
  int s = 0;
  for (const Zero& z : zeros) s += z.order;
  return s;
}

ZeroMultiset companion_zeros(const TrigPoly& T, double root_tolerance,
                             double cluster_tolerance) {
  if (T.effective_degree() < 0)
    throw std::invalid_argument("companion_zeros: zero polynomial");
  ZeroMultiset out;
  if (T.effective_degree() == 0) return out;  // nonzero constant, no zeros

  std::vector<double> angles;
  for (const Cplx& z : polynomial_roots(T.companion_polynomial())) {
    double off = std::fabs(std::abs(z) - 1.0);
    if (off < root_tolerance)
      angles.push_back(wrap_angle(std::arg(z)));
    else if (off < 100.0 * root_tolerance)
      out.borderline.push_back(z);
  }
  if (angles.empty()) return out;
  std::sort(angles.begin(), angles.end());

  // Cluster circularly: rotate so the largest gap is the cut.
  std::size_t n = angles.size();
  std::size_t cut = 0;
  double max_gap = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double gap = (i + 1 < n ? angles[i + 1] : angles[0] + kTwoPi) - angles[i];
    if (gap > max_gap) {
      max_gap = gap;
      cut = (i + 1) % n;
    }
  }
  std::vector<double> rotated(n);
  for (std::size_t i = 0; i < n; ++i) {
    double a = angles[(cut + i) % n];
    if (i > 0 && a < rotated[0]) a += kTwoPi;
    rotated[i] = a;
  }

  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    double sum = rotated[i];
    while (j < n && rotated[j] - rotated[j - 1] < cluster_tolerance) {
      sum += rotated[j];
      ++j;
    }
    out.zeros.push_back({wrap_angle(sum / static_cast<double>(j - i)),
                         static_cast<int>(j - i)});
    i = j;
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ZeroMultiset::Zero& a, const ZeroMultiset::Zero& b) {
              return a.alpha < b.alpha;
            });
  return out;
}

double zero_sum(const ZeroMultiset& zeros) {
  double s = 0.0;
  for (const auto& z : zeros.zeros) s += z.order * z.alpha;
  return wrap_angle(s);
}

double zero_sum(const TrigPoly& T, bool* full_order) {
  ZeroMultiset zs = companion_zeros(T);
  if (full_order) *full_order = (zs.total_order() == 2 * T.effective_degree());
  return zero_sum(zs);
}

double zero_sum_minus(const SignedZeroData& data) {
  if (data.total_order() == 0) return 0.0;
  double s = 0.0;
  for (double m : data.negative_midpoints) s += m;
  for (std::size_t i = 0; i < data.multiset.zeros.size(); ++i) {
    const auto& z = data.multiset.zeros[i];
    s += 0.5 * (z.order - data.n_counts[i]) * z.alpha;
  }
  return wrap_angle(s);
}

namespace {

// Sign of f on an arc, sampled at three interior points; the sample with the
// largest magnitude decides.
int arc_sign(const std::function<double(double)>& f, double a, double len) {
  double best = 0.0;
  for (double t : {0.25, 0.5, 0.75}) {
    double v = f(wrap_angle(a + t * len));
    if (std::fabs(v) > std::fabs(best)) best = v;
  }
  return best >= 0.0 ? 1 : -1;
}

}  // namespace

SignedZeroData analyze_signs(const ZeroMultiset& zeros,
                             const std::function<double(double)>& f) {
  SignedZeroData out;
  out.multiset = zeros;
  std::sort(out.multiset.zeros.begin(), out.multiset.zeros.end(),
            [](const ZeroMultiset::Zero& a, const ZeroMultiset::Zero& b) {
              return a.alpha < b.alpha;
            });
  const std::size_t n = out.multiset.zeros.size();
  if (n == 0) {
    out.sign_when_no_zeros = arc_sign(f, 0.0, kTwoPi);
    return out;
  }

  // Arc i runs from zero i to zero i+1 (cyclically).
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    double a = out.multiset.zeros[i].alpha;
    double b = out.multiset.zeros[(i + 1) % n].alpha;
    double len = b - a;
    if (len <= 0.0) len += kTwoPi;
    signs[i] = arc_sign(f, a, len);
    double mid = wrap_angle(a + 0.5 * len);
    if (signs[i] < 0)
      out.negative_midpoints.push_back(mid);
    else
      out.positive_midpoints.push_back(mid);
  }

  out.n_counts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int prev = signs[(i + n - 1) % n];
    int next = signs[i];
    out.n_counts[i] = (prev < 0 ? 1 : 0) + (next < 0 ? 1 : 0);
  }
  return out;
}

SignedZeroData zeros_of_smooth(const std::function<double(double)>& f,
                               const SmoothZeroOptions& options) {
  const int n = options.n_samples;
  const double h = kTwoPi / n;
  std::vector<double> v(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = f(i * h);
    scale = std::max(scale, std::fabs(v[i]));
  }
  if (scale == 0.0) {
    SignedZeroData out;
    out.unresolved = true;
    out.diagnostic = "function vanishes on the whole sample grid";
    return out;
  }

  auto at = [&](int i) { return v[((i % n) + n) % n]; };

  // Grid estimates of derivative magnitudes, used as thresholds.
  double d1max = 0.0, d2max = 0.0, d3max = 0.0;
  for (int i = 0; i < n; ++i) {
    d1max = std::max(d1max, std::fabs(at(i + 1) - at(i - 1)) / (2 * h));
    d2max = std::max(d2max, std::fabs(at(i + 1) - 2 * at(i) + at(i - 1)) / (h * h));
    d3max = std::max(d3max,
                     std::fabs(at(i + 2) - 2 * at(i + 1) + 2 * at(i - 1) - at(i - 2)) /
                         (2 * h * h * h));
  }

  struct Candidate {
    double alpha;
    bool sign_change;
  };
  std::vector<Candidate> candidates;
  bool unresolved = false;
  std::string diagnostic;

  // Odd-order zeros: bracketed sign changes.
  for (int i = 0; i < n; ++i) {
    double fa = at(i), fb = at(i + 1);
    if (fa == 0.0) {
      // Exact grid zero: classified by neighbor signs below.
      double prev = at(i - 1), next = at(i + 1);
      candidates.push_back({i * h, prev * next < 0.0});
      continue;
    }
    if (fa * fb < 0.0) {
      double a = i * h, b = (i + 1) * h, va = fa;
      for (int it = 0; it < 200 && (b - a) > options.refine_tolerance; ++it) {
        double m = 0.5 * (a + b), vm = f(m);
        if (vm == 0.0) {
          a = b = m;
          break;
        }
        if (va * vm < 0.0)
          b = m;
        else {
          a = m;
          va = vm;
        }
      }
      candidates.push_back({0.5 * (a + b), true});
    }
  }

  // Even-order zeros: near-zero local minima of |f| without a sign change.
  const double cand_tol = std::max(2.0 * d2max * h * h, 1e-12 * scale);
  const double hd = h / 16.0;
  for (int i = 0; i < n; ++i) {
    double fi = at(i);
    if (fi == 0.0) continue;  // handled above
    if (std::fabs(fi) >= cand_tol) continue;
    if (std::fabs(fi) > std::fabs(at(i - 1)) || std::fabs(fi) > std::fabs(at(i + 1))) continue;
    if (fi * at(i - 1) < 0.0 || fi * at(i + 1) < 0.0) continue;  // a crossing handles it
    auto deriv = [&](double a) { return (f(a + hd) - f(a - hd)) / (2 * hd); };
    double a = (i - 1) * h, b = (i + 1) * h;
    double ga = deriv(a), gb = deriv(b);
    if (ga * gb >= 0.0) continue;  // no stationary point; not a zero
    for (int it = 0; it < 200 && (b - a) > options.refine_tolerance; ++it) {
      double m = 0.5 * (a + b), gm = deriv(m);
      if (gm == 0.0) {
        a = b = m;
        break;
      }
      if (ga * gm < 0.0) {
        b = m;
        gb = gm;
      } else {
        a = m;
        ga = gm;
      }
    }
    double alpha = 0.5 * (a + b);
    double dip = std::fabs(f(alpha));
    if (dip < 1e-10 * scale) {
      candidates.push_back({alpha, false});
    } else if (dip < 1e-6 * scale) {
      // Too small to rule out a pair of nearby simple zeros, too large to be
      // an even-order zero at this resolution.
      unresolved = true;
      diagnostic = "near-zero dip undecidable at this sample resolution";
    }
  }

  // Deduplicate: an even candidate within 2h of a crossing is the same zero.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.alpha < b.alpha; });
  std::vector<Candidate> kept;
  for (const Candidate& c : candidates) {
    bool dup = false;
    for (const Candidate& k : kept)
      if (dist_s1(c.alpha, k.alpha) < 2 * h && (c.sign_change == k.sign_change || !c.sign_change))
        dup = true;
    if (!dup) kept.push_back(c);
  }

  // Resolution check: distinct zeros closer than 4pi/n cannot be trusted.
  if (kept.size() > 1) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      double gap = dist_s1(kept[i].alpha, kept[(i + 1) % kept.size()].alpha);
      if (gap < 2.0 * h) {
        unresolved = true;
        diagnostic = "two candidate zeros closer than 4pi/n_samples";
      }
    }
  }

  // Order detection by central finite differences.
  ZeroMultiset ms;
  const double hq = 1e-3;
  for (const Candidate& c : kept) {
    double a = c.alpha;
    double d1 = (f(a + hq) - f(a - hq)) / (2 * hq);
    double d2 = (f(a + hq) - 2 * f(a) + f(a - hq)) / (hq * hq);
    double d3 = (f(a + 2 * hq) - 2 * f(a + hq) + 2 * f(a - hq) - f(a - 2 * hq)) /
                (2 * hq * hq * hq);
    double r[4] = {0.0, std::fabs(d1) / std::max(d1max, 1e-300),
                   std::fabs(d2) / std::max(d2max, 1e-300),
                   std::fabs(d3) / std::max(d3max, 1e-300)};
    int order = 0;
    for (int m = c.sign_change ? 1 : 2; m <= options.max_order; m += 2) {
      if (r[std::min(m, 3)] > 1e-4) {
        order = m;
        break;
      }
    }
    if (order == 0) {
      unresolved = true;
      diagnostic = "zero order undecidable by finite differences";
      order = c.sign_change ? 1 : 2;
    }
    ms.zeros.push_back({wrap_angle(a), order});
  }

  SignedZeroData out = analyze_signs(ms, f);
  out.unresolved = unresolved;
  out.diagnostic = diagnostic;
  return out;
}

}  // namespace s3fam

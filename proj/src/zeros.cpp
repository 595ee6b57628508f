#include "zdl/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "zdl/errors.hpp"
#include "zdl/hardy.hpp"
#include "zdl/main_terms.hpp"
#include "zdl/numeric.hpp"
#include "zdl/quadrature.hpp"
#include "zdl/special.hpp"
#include "zdl/zeta.hpp"

namespace zdl::zeros {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
const cd kI(0.0, 1.0);

// split offsets tried in turn when a cut line passes too close to a zero
constexpr double kSplitOffsets[] = {0.0, 0.0137, -0.0213, 0.0371, -0.0529, 0.0911, -0.1173, 0.1607};
// box growths tried by winding()
constexpr double kPerturbations[] = {0.0, 1e-4, -1e-4, 3e-4, -3e-4, 1e-3, -1e-3};

constexpr int kMaxDepth = 40;
constexpr double kSigmaGap = 1e-3;

using Fn = std::function<cd(cd)>;

cd Zk_closed(cd s, int k, const PrecisionConfig& prec) {
  const auto z = sf::zeta_jet(ComplexPoint::from(s), std::min(k, 2), prec).d;
  if (k == 0) return -z[0];
  if (k <= 2) {
    const auto wj = sf::omega_jet(s, 1);
    const cd w = wj[0];
    if (k == 1) return (w * z[0] - 2.0 * z[1]) / (2.0 * kI);
    // omega lambda_2 = omega' - omega^2/2
    return -((wj[1] - 0.5 * w * w) * z[0] + 2.0 * w * z[1] - 2.0 * z[2]) / 2.0;
  }
  return sf::omega_jet(s, 0).value() * hardy::eta_all(s, k, prec)[k] / (2.0 * ipow(k));
}

// NaN on poles and vanishing denominators so the winding walk can back off
cd safe_eval(const Fn& f, cd s) {
  try {
    const cd v = f(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {NAN, NAN};
    return v;
  } catch (const Error&) {
    return {NAN, NAN};
  }
}

bool bad(cd v) { return !std::isfinite(v.real()) || !std::isfinite(v.imag()) || v == cd(0.0, 0.0); }

struct Walker {
  const Fn& f;
  std::size_t evals = 0;

  cd at(cd s) {
    ++evals;
    return safe_eval(f, s);
  }

  bool segment(cd a, cd b, cd fa, cd fb, int depth, double& acc) {
    if (depth > kMaxDepth) return false;
    const cd m = 0.5 * (a + b);
    const cd fm = at(m);
    if (bad(fm)) return false;
    const double d1 = std::arg(fm / fa);
    const double d2 = std::arg(fb / fm);
    if (std::abs(d1) + std::abs(d2) < 0.5 * kPi) {
      acc += d1 + d2;
      return true;
    }
    return segment(a, m, fa, fm, depth + 1, acc) && segment(m, b, fm, fb, depth + 1, acc);
  }
};

double edge_piece(const RectBox& b) {
  const double tm = std::max({std::abs(b.t_min), std::abs(b.t_max), kTwoPi});
  return std::min(0.25, 1.0 / std::max(1.0, std::log(tm / kTwoPi)));
}

std::optional<int> try_winding(const Fn& f, const RectBox& b, std::size_t* evals = nullptr) {
  Walker w{f};
  const cd corners[4] = {{b.sigma_min, b.t_min}, {b.sigma_max, b.t_min}, {b.sigma_max, b.t_max},
                         {b.sigma_min, b.t_max}};
  const double h0 = edge_piece(b);
  double acc = 0.0;
  bool ok = true;
  for (int e = 0; e < 4 && ok; ++e) {
    const cd a = corners[e], c = corners[(e + 1) % 4];
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(c - a) / h0)));
    cd prev_s = a, prev_f = w.at(a);
    if (bad(prev_f)) ok = false;
    for (int i = 1; i <= n && ok; ++i) {
      const cd s = (i == n) ? c : a + (c - a) * (static_cast<double>(i) / n);
      const cd fs = w.at(s);
      if (bad(fs)) {
        ok = false;
        break;
      }
      ok = w.segment(prev_s, s, prev_f, fs, 0, acc);
      prev_s = s;
      prev_f = fs;
    }
  }
  if (evals) *evals += w.evals;
  if (!ok) return std::nullopt;
  const double turns = acc / kTwoPi;
  const double r = std::round(turns);
  if (std::abs(turns - r) > 0.05) return std::nullopt;
  return static_cast<int>(r);
}

Fn make_fn(const FunctionId& fn, const PrecisionConfig& prec, const mollifier::DirichletPolynomial* poly) {
  return [fn, prec, poly](cd s) { return evaluate(fn, s, prec, poly); };
}

// pole order of f inside b, nullopt when a pole sits on the boundary
std::optional<int> poles_inside(const FunctionId& fn, const RectBox& b) {
  if (fn.family != Family::zeta_k) return 0;
  const cd one(1.0, 0.0);
  if (b.contains(one, 1e-12)) return fn.k + 1;
  if (b.contains(one, -1e-12)) return std::nullopt;
  return 0;
}

std::optional<int> zeros_exact(const FunctionId& fn, const Fn& f, const RectBox& b, std::size_t* evals) {
  const auto p = poles_inside(fn, b);
  if (!p) return std::nullopt;
  const auto w = try_winding(f, b, evals);
  if (!w) return std::nullopt;
  return *w + *p;
}

// poles of omega sit at s = 1, 3, 5, ... and s = 0, -2, -4, ...
void validate_meromorphy(const FunctionId& fn, const RectBox& b) {
  if (fn.family == Family::zeta_k || fn.family == Family::unit) return;
  if (b.t_min <= 0.0 && b.t_max >= 0.0) {
    for (double n = std::ceil(b.sigma_min); n <= b.sigma_max; n += 1.0) {
      const long long m = static_cast<long long>(n);
      if ((m >= 1 && m % 2 != 0) || (m <= 0 && m % 2 == 0))
        fail(ErrorKind::validation, "box contains a real-axis pole of " + fn.name());
    }
  }
  const bool omega_poles = fn.family == Family::eta_k || (fn.family == Family::Z_k && fn.k >= 3);
  if (!omega_poles) return;
  const Fn om = [](cd s) { return sf::omega_jet(s, 0).value(); };
  const auto w = try_winding(om, b);
  if (!w) fail(ErrorKind::validation, "a zero of omega lies on the box boundary");
  if (*w != 0) fail(ErrorKind::validation, "box contains zeros of omega, i.e. poles of " + fn.name());
}

cd derivative(const FunctionId& fn, const Fn& f, cd s, const PrecisionConfig& prec,
              const mollifier::DirichletPolynomial* poly) {
  if (fn.family == Family::zeta_k && !poly)
    return sf::zeta_jet(ComplexPoint::from(s), fn.k + 1, prec).d[fn.k + 1];
  const double h = 1e-6 * std::max(1.0, std::abs(s.imag()) * 1e-3);
  return (f(s + h) - f(s - h)) / (2.0 * h);
}

struct Enumerator {
  FunctionId fn;
  Fn f;
  PrecisionConfig prec;
  const mollifier::DirichletPolynomial* poly;

  std::optional<ZeroRecord> polish(const RectBox& b, int mult) const {
    cd z(0.5 * (b.sigma_min + b.sigma_max), 0.5 * (b.t_min + b.t_max));
    const double size = std::max(b.width(), b.height());
    const RectBox reach = b.grown(size);
    for (int it = 0; it < 80; ++it) {
      const cd v = safe_eval(f, z);
      if (bad(v)) break;
      cd d;
      try {
        d = derivative(fn, f, z, prec, poly);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (d == cd(0.0, 0.0)) return std::nullopt;
      const cd step = static_cast<double>(mult) * v / d;
      z -= step;
      if (!reach.contains(z)) return std::nullopt;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    if (!b.contains(z, 1e-9 * std::max(1.0, std::abs(z)))) return std::nullopt;
    ZeroRecord r{fn, z.real(), z.imag(), mult, std::abs(safe_eval(f, z))};
    if (!std::isfinite(r.residual)) return std::nullopt;
    return r;
  }

  void recurse(const RectBox& b, int count, std::vector<ZeroRecord>& out) const {
    if (count <= 0) return;
    const double size = std::max(b.width(), b.height());
    if (count == 1 && size <= 0.25) {
      if (auto r = polish(b, 1)) {
        out.push_back(*r);
        return;
      }
    }
    if (size <= 1e-4) {
      if (auto r = polish(b, count)) {
        out.push_back(*r);
        return;
      }
      const cd c(0.5 * (b.sigma_min + b.sigma_max), 0.5 * (b.t_min + b.t_max));
      out.push_back({fn, c.real(), c.imag(), count, std::abs(safe_eval(f, c))});
      return;
    }
    const bool split_sigma = b.width() >= b.height();
    for (double off : kSplitOffsets) {
      RectBox lo = b, hi = b;
      if (split_sigma) {
        const double cut = b.sigma_min + (0.5 + off) * b.width();
        lo.sigma_max = hi.sigma_min = cut;
      } else {
        const double cut = b.t_min + (0.5 + off) * b.height();
        lo.t_max = hi.t_min = cut;
      }
      const auto c1 = zeros_exact(fn, f, lo, nullptr);
      if (!c1) continue;
      const auto c2 = zeros_exact(fn, f, hi, nullptr);
      if (!c2) continue;
      if (*c1 + *c2 != count || *c1 < 0 || *c2 < 0) continue;
      recurse(lo, *c1, out);
      recurse(hi, *c2, out);
      return;
    }
    std::ostringstream os;
    os << "winding counts do not reconcile in box [" << b.sigma_min << "," << b.sigma_max << "]x["
       << b.t_min << "," << b.t_max << "] holding " << count << " zeros";
    fail(ErrorKind::enumeration, os.str());
  }
};

std::vector<ZeroRecord> dedupe(std::vector<ZeroRecord> zs) {
  std::sort(zs.begin(), zs.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.t < b.t || (a.t == b.t && a.sigma < b.sigma);
  });
  // sub-box counts are disjoint, so coincident records are a multiple zero split by rounding
  std::vector<ZeroRecord> out;
  for (const auto& z : zs) {
    ZeroRecord* hit = nullptr;
    for (auto it = out.rbegin(); it != out.rend() && z.t - it->t < 1e-6; ++it)
      if (std::abs(z.sigma - it->sigma) < 1e-6) hit = &*it;
    if (hit) {
      hit->multiplicity += z.multiplicity;
      hit->residual = std::min(hit->residual, z.residual);
    } else {
      out.push_back(z);
    }
  }
  return out;
}

double default_sigma_limit(const FunctionId& fn) {
  switch (fn.family) {
    case Family::zeta_k:
      return 1.75 * fn.k + 2.5;
    case Family::eta_k:
    case Family::Z_k:
      return 3.0;
    case Family::unit:
      return 1.0;
  }
  return 3.0;
}

double Zk_real(int k, double t, const PrecisionConfig& prec) {
  return hardy::Z_leibniz_complex(t, k, prec)[k].real();
}

// ∫_a^b (1/2) log((t - g)^2 + d^2) dt
double log_distance_integral(double a, double b, double g, double d) {
  auto F = [d](double u) {
    if (d == 0.0) return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u;
    return 0.5 * (u * std::log(u * u + d * d) - 2.0 * u + 2.0 * d * std::atan(u / d));
  };
  return F(b - g) - F(a - g);
}

}  // namespace

std::string FunctionId::name() const {
  switch (family) {
    case Family::zeta_k:
      return "zeta_k";
    case Family::eta_k:
      return "eta_k";
    case Family::Z_k:
      return "Z_k";
    case Family::unit:
      return "unit";
  }
  return "?";
}

FunctionId FunctionId::parse(const std::string& name, int k) {
  require(k >= 0 && k <= 12, "function order must lie in [0, 12]");
  if (name == "zeta_k" || name == "zeta") return {Family::zeta_k, k};
  if (name == "eta_k" || name == "eta") return {Family::eta_k, k};
  if (name == "Z_k" || name == "Z") return {Family::Z_k, k};
  if (name == "unit") return {Family::unit, 0};
  fail(ErrorKind::validation, "unknown function '" + name + "'");
}

void RectBox::validate() const {
  require(std::isfinite(sigma_min) && std::isfinite(sigma_max) && std::isfinite(t_min) && std::isfinite(t_max),
          "box coordinates must be finite");
  require(sigma_min < sigma_max, "box needs sigma_min < sigma_max");
  require(t_min < t_max, "box needs t_min < t_max");
}

bool RectBox::contains(cd s, double margin) const {
  return s.real() > sigma_min - margin && s.real() < sigma_max + margin && s.imag() > t_min - margin &&
         s.imag() < t_max + margin;
}

cd evaluate(const FunctionId& fn, cd s, const PrecisionConfig& prec, const mollifier::DirichletPolynomial* poly) {
  cd v;
  switch (fn.family) {
    case Family::zeta_k:
      v = sf::zeta_jet(ComplexPoint::from(s), fn.k, prec).d[fn.k];
      break;
    case Family::eta_k:
      v = hardy::eta_all(s, fn.k, prec)[fn.k];
      break;
    case Family::Z_k:
      v = Zk_closed(s, fn.k, prec);
      break;
    case Family::unit:
      v = 1.0;
      break;
  }
  if (poly) v *= mollifier::evaluate_at(*poly, s);
  return v;
}

WindingResult winding(const FunctionId& fn, const RectBox& box, const PrecisionConfig& prec,
                      const mollifier::DirichletPolynomial* poly) {
  box.validate();
  validate_meromorphy(fn, box.grown(1e-3));
  const Fn f = make_fn(fn, prec, poly);
  WindingResult r;
  for (double d : kPerturbations) {
    const RectBox b = box.grown(d);
    if (!(b.sigma_min < b.sigma_max && b.t_min < b.t_max)) continue;
    const auto p = poles_inside(fn, b);
    if (!p) continue;
    const auto w = try_winding(f, b, &r.evaluations);
    if (!w) continue;
    r.winding = *w;
    r.poles = *p;
    r.zeros = *w + *p;
    r.perturbation = d;
    r.box = b;
    if (r.zeros < 0) fail(ErrorKind::enumeration, "negative zero count; pole bookkeeping is inconsistent");
    return r;
  }
  fail(ErrorKind::convergence, "argument variation stayed ambiguous; a zero lies on or near the box boundary");
}

int winding_count(const FunctionId& fn, const RectBox& box, const PrecisionConfig& prec,
                  const mollifier::DirichletPolynomial* poly) {
  return winding(fn, box, prec, poly).zeros;
}

std::vector<ZeroRecord> find_zeros_in_box(const FunctionId& fn, const RectBox& box, const PrecisionConfig& prec,
                                          const mollifier::DirichletPolynomial* poly) {
  const WindingResult root = winding(fn, box, prec, poly);
  if (root.zeros == 0) return {};
  const Enumerator en{fn, make_fn(fn, prec, poly), prec, poly};

  // horizontal slabs of height <= 2, each an independent task
  const RectBox& B = root.box;
  const int nslab = std::max(1, static_cast<int>(std::ceil(B.height() / 2.0)));
  const double step = B.height() / nslab;
  std::vector<RectBox> slabs;
  std::vector<int> counts;
  double bottom = B.t_min;
  for (int i = 0; i < nslab; ++i) {
    bool placed = false;
    for (double off : kSplitOffsets) {
      RectBox s = B;
      s.t_min = bottom;
      s.t_max = (i == nslab - 1) ? B.t_max : B.t_min + (i + 1 + off) * step;
      if (s.t_max <= s.t_min) continue;
      const auto c = zeros_exact(fn, en.f, s, nullptr);
      if (!c || *c < 0) continue;
      slabs.push_back(s);
      counts.push_back(*c);
      bottom = s.t_max;
      placed = true;
      break;
    }
    if (!placed) fail(ErrorKind::enumeration, "could not place a slab boundary away from zeros");
  }
  int total = 0;
  for (int c : counts) total += c;
  if (total != root.zeros)
    fail(ErrorKind::enumeration, "slab counts (" + std::to_string(total) + ") disagree with the box count (" +
                                     std::to_string(root.zeros) + ")");

  std::vector<std::vector<ZeroRecord>> found(slabs.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    try {
      en.recurse(slabs[i], counts[i], found[i]);
    } catch (...) {
#pragma omp critical(zdl_zero_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<ZeroRecord> all;
  for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
  return dedupe(std::move(all));
}

double Zk_scan_step(double t_max) {
  const double tau = std::sqrt(std::max(t_max, kTwoPi) / kTwoPi);
  return std::min(0.25, kPi / (4.0 * std::max(std::log(tau), 1.0)));
}

std::vector<ZeroRecord> find_Zk_zeros(int k, double t_min, double t_max, const PrecisionConfig& prec) {
  require(k >= 0 && k <= 12, "Z derivative order must lie in [0, 12]");
  require(t_min >= 0.0 && t_max > t_min, "scan range needs 0 <= t_min < t_max");
  require(t_max <= prec.t_ceiling, "scan range exceeds the t ceiling");
  const double h = Zk_scan_step(t_max);
  const int n = std::max(2, static_cast<int>(std::ceil((t_max - t_min) / h)));
  std::vector<double> ts(n + 1), vs(n + 1);
  for (int i = 0; i <= n; ++i) ts[i] = (i == n) ? t_max : t_min + (t_max - t_min) * i / n;
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= n; ++i) vs[i] = Zk_real(k, ts[i], prec);

  const FunctionId id{Family::Z_k, k};
  auto f = [&](double t) { return Zk_real(k, t, prec); };
  const double edge = 1e-7;
  std::vector<ZeroRecord> out;
  for (int i = 0; i < n; ++i) {
    double a = ts[i], b = ts[i + 1], fa = vs[i], fb = vs[i + 1];
    if (fa == 0.0) {
      if (a > t_min + edge && a < t_max - edge) out.push_back({id, 0.5, a, 1, 0.0});
      continue;
    }
    if (fa * fb >= 0.0) continue;
    while (b - a > 1e-9) {
      const double m = 0.5 * (a + b);
      const double fm = f(m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    const double t = 0.5 * (a + b);
    if (t <= t_min + edge || t >= t_max - edge) continue;
    out.push_back({id, 0.5, t, 1, std::abs(f(t))});
  }
  // even-order zeros: local minima of |Z^(k)| without a sign change
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 1; i < n; ++i) {
    const double l = std::abs(vs[i - 1]), c = std::abs(vs[i]), r = std::abs(vs[i + 1]);
    if (!(c < l && c < r) || vs[i - 1] * vs[i] <= 0.0 || vs[i] * vs[i + 1] <= 0.0) continue;
    double a = ts[i - 1], b = ts[i + 1];
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
    for (int it = 0; it < 60 && b - a > 1e-10; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = std::abs(f(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = std::abs(f(x2));
      }
    }
    const double t = 0.5 * (a + b);
    const double v = std::abs(f(t));
    if (v < 1e-8 && t > t_min + edge && t < t_max - edge) out.push_back({id, 0.5, t, 2, v});
  }
  std::sort(out.begin(), out.end(), [](const ZeroRecord& x, const ZeroRecord& y) { return x.t < y.t; });
  return out;
}

WeightedSum littlewood_weighted_sum(const FunctionId& fn, const WindowSpec& w, Side side,
                                    const mollifier::DirichletPolynomial* poly, const PrecisionConfig& prec,
                                    std::optional<double> sigma_limit) {
  w.validate();
  require(w.H <= 1e3, "zero enumeration is limited to H <= 1000");
  WeightedSum res;
  RectBox strip{0.0, 0.0, w.T, w.T + w.H};
  if (side == Side::right) {
    strip.sigma_min = 0.5 + kSigmaGap;
    strip.sigma_max = sigma_limit.value_or(default_sigma_limit(fn));
  } else {
    strip.sigma_min = -1.0;
    strip.sigma_max = 0.5 - kSigmaGap;
  }
  res.strip = strip;
  if (fn.family == Family::unit) return res;
  const auto zs = find_zeros_in_box(fn, strip, prec, poly);
  Compensated sum, signed_sum;
  for (const auto& z : zs) {
    if (z.t < w.T || z.t > w.T + w.H) continue;
    const double d = z.sigma - 0.5;
    signed_sum.add(z.multiplicity * d);
    sum.add(z.multiplicity * std::abs(d));
    res.zeros += z.multiplicity;
    res.records.push_back(z);
  }
  res.sum = sum.value();
  res.signed_sum = signed_sum.value();
  return res;
}

WeightedSum littlewood_full(const FunctionId& fn, const WindowSpec& w, const mollifier::DirichletPolynomial* poly,
                            const PrecisionConfig& prec) {
  auto r = littlewood_weighted_sum(fn, w, Side::right, poly, prec);
  auto l = littlewood_weighted_sum(fn, w, Side::left, poly, prec);
  WeightedSum out;
  out.sum = r.sum + l.sum;
  out.signed_sum = r.signed_sum + l.signed_sum;
  out.zeros = r.zeros + l.zeros;
  out.strip = {l.strip.sigma_min, r.strip.sigma_max, w.T, w.T + w.H};
  out.records = std::move(l.records);
  out.records.insert(out.records.end(), r.records.begin(), r.records.end());
  return out;
}

double log_modulus_line_integral(const FunctionId& fn, double sigma0, const WindowSpec& w,
                                 const mollifier::DirichletPolynomial* poly, const PrecisionConfig& prec) {
  w.validate();
  require(std::isfinite(sigma0), "sigma0 must be finite");
  if (fn.family == Family::unit && !poly) return 0.0;

  // zeros close to the line, removed as log-distance terms and integrated in closed form
  std::vector<cd> near;
  const double lo = std::max(0.0, w.T - 1.0), hi = w.T + w.H + 1.0;
  if (fn.family != Family::unit) {
    if (sigma0 == 0.5 && fn.k == 0 && (fn.family == Family::zeta_k || fn.family == Family::Z_k)) {
      for (const auto& z : find_Zk_zeros(0, lo, hi, prec)) near.emplace_back(0.5, z.t);
    } else {
      const RectBox nb{sigma0 - 0.02, sigma0 + 0.02, lo, hi};
      for (const auto& z : find_zeros_in_box(fn, nb, prec, nullptr)) near.emplace_back(z.sigma, z.t);
    }
  }
  std::sort(near.begin(), near.end(), [](cd a, cd b) { return a.imag() < b.imag(); });

  const double width = Zk_scan_step(w.T + w.H);
  const auto plan = quad::PanelPlan::for_spacing(w.T, w.T + w.H, width / 16.0, 16);
  const auto& gl = quad::GaussLegendre::gl16();
  const double pw = plan.width();
  std::vector<double> panel(plan.panels);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t p = 0; p < plan.panels; ++p) {
    const double a = plan.left(p), b = a + pw, c = 0.5 * (a + b);
    const auto first = std::lower_bound(near.begin(), near.end(), c - 1.5 * pw,
                                        [](cd z, double v) { return z.imag() < v; });
    auto last = first;
    while (last != near.end() && last->imag() <= c + 1.5 * pw) ++last;
    double acc = 0.0;
    for (std::size_t j = 0; j < gl.x.size(); ++j) {
      const double t = c + 0.5 * pw * gl.x[j];
      double g = std::log(std::abs(evaluate(fn, cd(sigma0, t), prec, nullptr)));
      if (poly) g += std::log(std::abs(mollifier::evaluate(*poly, t, prec)));
      for (auto it = first; it != last; ++it) {
        const double du = t - it->imag(), dd = sigma0 - it->real();
        g -= 0.5 * std::log(du * du + dd * dd);
      }
      acc += gl.w[j] * g;
    }
    acc *= 0.5 * pw;
    for (auto it = first; it != last; ++it) acc += log_distance_integral(a, b, it->imag(), sigma0 - it->real());
    panel[p] = acc;
  }
  return ordered_sum(panel);
}

void write_zero_csv(const std::vector<ZeroRecord>& zs, const std::string& path) {
  std::ofstream os(path);
  require(static_cast<bool>(os), "cannot open " + path + " for writing");
  os << "function,k,sigma,t,multiplicity,residual\n" << std::setprecision(17);
  for (const auto& z : zs)
    os << z.fn.name() << ',' << z.fn.k << ',' << z.sigma << ',' << z.t << ',' << z.multiplicity << ','
       << z.residual << '\n';
}

std::vector<ZeroRecord> read_zero_csv(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), "cannot open " + path);
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), "empty zero file");
  require(line == "function,k,sigma,t,multiplicity,residual", "unexpected zero file header");
  std::vector<ZeroRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name, field;
    std::vector<std::string> f;
    while (std::getline(ls, field, ',')) f.push_back(field);
    require(f.size() == 6, "malformed zero row: " + line);
    ZeroRecord z;
    z.fn = FunctionId::parse(f[0], std::stoi(f[1]));
    z.sigma = std::stod(f[2]);
    z.t = std::stod(f[3]);
    z.multiplicity = std::stoi(f[4]);
    z.residual = std::stod(f[5]);
    out.push_back(z);
  }
  return out;
}

namespace {

double admissible_theta_bound(int k, const WindowSpec& w) {
  const double ub = std::min(theta_cap(k), w.a - 0.5);
  require(ub > 0.0, "no admissible theta: need a > 1/2");
  return ub * (1.0 - 1e-6);
}

double thm6_inner(int k, double theta) {
  return 1.0 + 2.0 / ((2 * k + 1) * theta) + 2.0 * k * k * theta / (3.0 * (2 * k - 1));
}

InequalityCheck finish(InequalityCheck c) {
  c.margin = c.rhs_main + c.slack - c.lhs;
  c.holds = c.margin >= 0.0;
  return c;
}

}  // namespace

double second_order_scale(const WindowSpec& w) {
  const double ll = std::log(std::log(w.T));
  return w.H * ll * ll * ll / std::log(w.T);
}

double sharpest_theta_thm6(int k, const WindowSpec& w) {
  require(k >= 1, "the zeta^(k) inequalities need k >= 1");
  const double star = std::sqrt(3.0 * (2 * k - 1) / (static_cast<double>(k) * k * (2 * k + 1)));
  return std::min(star, admissible_theta_bound(k, w));
}

double sharpest_theta_thm2(int k, const WindowSpec& w) {
  require(k >= 1, "the eta_k inequality needs k >= 1");
  const double ub = admissible_theta_bound(k, w);
  double best = ub, bestv = ms::P_k_theta(k, ub);
  constexpr int kGrid = 2000;
  for (int i = 1; i < kGrid; ++i) {
    const double th = ub * i / kGrid;
    const double v = ms::P_k_theta(k, th);
    if (v < bestv) {
      bestv = v;
      best = th;
    }
  }
  return best;
}

InequalityCheck thm6a_check(int k, const WindowSpec& w, double right_sum, double theta) {
  require(k >= 1 && theta > 0.0, "weighted zero-sum bound (a) needs k >= 1 and theta > 0");
  InequalityCheck c;
  c.theta = theta;
  c.lhs = kTwoPi * right_sum;
  c.rhs_main = k * w.H * std::log(std::log(w.T / kTwoPi)) + 0.5 * w.H * std::log(thm6_inner(k, theta)) -
               w.H * k * std::log(std::log(2.0));
  c.slack = 2.0 * second_order_scale(w);
  return finish(c);
}

InequalityCheck thm6b_check(int k, const WindowSpec& w, double left_sum, double theta) {
  require(k >= 1 && theta > 0.0, "weighted zero-sum bound (b) needs k >= 1 and theta > 0");
  InequalityCheck c;
  c.theta = theta;
  c.lhs = left_sum;
  c.rhs_main = w.H / (4.0 * kPi) * std::log(0.5 * thm6_inner(k, theta));
  c.slack = 2.0 * second_order_scale(w);
  return finish(c);
}

InequalityCheck thm2_check(int k, const WindowSpec& w, double right_sum, double theta) {
  require(k >= 1 && theta > 0.0, "off-line zero count bound needs k >= 1 and theta > 0");
  InequalityCheck c;
  c.theta = theta;
  c.lhs = right_sum;
  const double P = ms::P_k_theta(k, theta);
  c.rhs_main = (0.5 * std::log(std::pow(4.0, k) * P) + (k - 1) * std::log(2.0)) * w.H / kTwoPi;
  // the o(1) inside the bracket, sized like the second-order term
  c.slack = 2.0 * second_order_scale(w) / kTwoPi;
  return finish(c);
}

double levinson_montgomery(int k, const WindowSpec& w) {
  return k * w.H * std::log(std::log(w.T / kTwoPi)) + w.H * (0.5 * std::log(2.0) - k * std::log(std::log(2.0)));
}

}  // namespace zdl::zeros

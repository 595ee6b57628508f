#include "zdl/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zdl/arith.hpp"
#include "zdl/errors.hpp"

namespace zdl::mollifier {

bool DirichletPolynomial::real_coefficients() const {
  return std::all_of(b.begin(), b.end(), [](cd z) { return z.imag() == 0.0; });
}

void DirichletPolynomial::validate(bool check_growth) const {
  require(n.size() == b.size(), "coefficient and index lists differ in length");
  require(length_X >= 1.0, "length X must be >= 1");
  for (std::size_t i = 0; i < n.size(); ++i) {
    require(n[i] >= 1, "indices must be positive");
    if (i) require(n[i] > n[i - 1], "indices must be strictly increasing");
    require(static_cast<double>(n[i]) <= length_X * (1.0 + 1e-12), "index exceeds length X");
    require(std::isfinite(b[i].real()) && std::isfinite(b[i].imag()), "coefficients must be finite");
    if (check_growth)
      require(std::abs(b[i]) <= std::pow(static_cast<double>(n[i]), epsilon) * (1.0 + 1e-12),
              "coefficient b_" + std::to_string(n[i]) + " violates |b_n| <= n^epsilon");
  }
}

DirichletPolynomial build_mollifier_from_X(double X) {
  require(std::isfinite(X), "mollifier length must be finite");
  if (X < 2.0) fail(ErrorKind::validation, "empty mollifier: X = T^theta < 2");
  const auto N = static_cast<std::uint64_t>(std::floor(X * (1.0 + 1e-14)));
  const auto mu = nt::mobius_table(N);
  const long double lX = std::log(static_cast<long double>(X));
  DirichletPolynomial p;
  p.length_X = std::max(X, static_cast<double>(N));
  p.scheme = Scheme::mollifier;
  for (std::uint64_t m = 1; m <= N; ++m) {
    if (!mu[m]) continue;
    const long double c = mu[m] * (1.0L - std::log(static_cast<long double>(m)) / lX);
    p.n.push_back(m);
    p.b.emplace_back(static_cast<double>(c), 0.0);
  }
  p.validate();
  return p;
}

DirichletPolynomial build_mollifier(double T, double theta) {
  require(theta > 0.0, "mollifier exponent theta must be positive");
  require(T > 1.0, "mollifier needs T > 1");
  auto p = build_mollifier_from_X(std::pow(T, theta));
  p.theta = theta;
  return p;
}

DirichletPolynomial make_explicit(std::vector<std::pair<std::uint64_t, cd>> coeffs, double X,
                                  double epsilon, bool check_growth) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  DirichletPolynomial p;
  p.epsilon = epsilon;
  p.scheme = Scheme::explicit_coeffs;
  for (const auto& [m, c] : coeffs) {
    if (c == cd(0.0, 0.0)) continue;
    require(p.n.empty() || m > p.n.back(), "duplicate coefficient index");
    p.n.push_back(m);
    p.b.push_back(c);
  }
  const double maxn = p.n.empty() ? 1.0 : static_cast<double>(p.n.back());
  p.length_X = X > 0.0 ? X : maxn;
  p.validate(check_growth);
  return p;
}

DirichletPolynomial unit_polynomial() { return make_explicit({{1, cd(1.0, 0.0)}}); }

DirichletPolynomial read_coefficients_csv(const std::string& path, double epsilon,
                                          bool check_growth) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open coefficient file " + path);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "coefficient file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  require(line == "n,re,im", "coefficient file header must be n,re,im");
  std::vector<std::pair<std::uint64_t, cd>> coeffs;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    long long m = 0;
    double re = 0, im = 0;
    require(static_cast<bool>(ss >> m >> re >> im), "malformed coefficient row " + std::to_string(row));
    require(m >= 1, "coefficient index must be >= 1 (row " + std::to_string(row) + ")");
    coeffs.emplace_back(static_cast<std::uint64_t>(m), cd(re, im));
  }
  return make_explicit(std::move(coeffs), 0.0, epsilon, check_growth);
}

void write_coefficients_csv(const DirichletPolynomial& p, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path);
  out << "n,re,im\n";
  out.precision(17);
  for (std::size_t i = 0; i < p.size(); ++i)
    out << p.n[i] << ',' << p.b[i].real() << ',' << p.b[i].imag() << '\n';
}

PhiKernel::PhiKernel(const DirichletPolynomial& p) : logn_(p.size()), w_(p.size()) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    logn_[i] = phase::split_log(p.n[i]);
    w_[i] = p.b[i] / std::sqrt(static_cast<double>(p.n[i]));
  }
}

cd PhiKernel::operator()(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const double r = phase::mul_mod_2pi(t, logn_[i]);
    const double c = std::cos(r), s = std::sin(r);
    re += w_[i].real() * c + w_[i].imag() * s;
    im += w_[i].imag() * c - w_[i].real() * s;
  }
  return {re, im};
}

cd evaluate(const DirichletPolynomial& p, double t, const PrecisionConfig&) {
  return PhiKernel(p)(t);
}

cd evaluate_at(const DirichletPolynomial& p, cd s) {
  cd acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long double l = std::log(static_cast<long double>(p.n[i]));
    const double mag = std::exp(-s.real() * static_cast<double>(l));
    acc += p.b[i] * mag * unit_phase_neg(static_cast<long double>(s.imag()) * l);
  }
  return acc;
}

double abs_square(const DirichletPolynomial& p, double t, const PrecisionConfig& prec) {
  return std::norm(evaluate(p, t, prec));
}

}  // namespace zdl::mollifier

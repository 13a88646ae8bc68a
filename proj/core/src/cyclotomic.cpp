#include "charvar/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Quotient and remainder; b nonzero and trimmed.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const Rational c = a[k] / lead;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

std::mutex cache_mutex;
std::map<std::int64_t, std::vector<Integer>> cache;

std::vector<Integer> compute_cyclotomic(std::int64_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    // Exact division by a monic integer polynomial.
    std::vector<Integer> q(num.size() - div.size() + 1);
    for (std::size_t k = num.size(); k-- >= div.size();) {
      const Integer c = num[k];
      const std::size_t shift = k - (div.size() - 1);
      q[shift] = c;
      if (c != 0)
        for (std::size_t j = 0; j < div.size(); ++j) num[shift + j] -= c * div[j];
      if (k == div.size() - 1) break;
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw InvalidInput("euler_phi needs a positive argument");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw InvalidInput("cyclotomic index must be positive");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto phi = compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex);
  return cache.try_emplace(n, std::move(phi)).first->second;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor, const Rational& value)
    : conductor_(conductor), coeffs_(static_cast<std::size_t>(euler_phi(conductor))) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor, std::vector<Rational> coefficients)
    : conductor_(conductor), coeffs_(std::move(coefficients)) {
  reduce();
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::int64_t conductor, std::int64_t k) {
  std::vector<Rational> c(static_cast<std::size_t>(floor_mod(k, conductor)) + 1);
  c.back() = 1;
  return CyclotomicNumber(conductor, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_power_sums(std::int64_t conductor,
                                                   std::span<const std::int64_t> coefficients) {
  // Integer reduction first: Phi_N is monic with integer coefficients.
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> a(coefficients.begin(), coefficients.end());
  std::vector<std::int64_t> phi64(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) phi64[j] = phi[j].convert_to<std::int64_t>();
  for (std::size_t k = a.size(); k-- > deg;) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    const std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) a[shift + j] -= c * phi64[j];
  }
  CyclotomicNumber out;
  out.conductor_ = conductor;
  out.coeffs_.resize(deg);
  for (std::size_t k = 0; k < deg && k < a.size(); ++k) out.coeffs_[k] = a[k];
  return out;
}

void CyclotomicNumber::reduce() {
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeffs_.size(); k-- > deg;) {
    const Rational c = coeffs_[k];
    if (c == 0) continue;
    const std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) coeffs_[shift + j] -= c * Rational(phi[j]);
  }
  coeffs_.resize(deg);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {

// Default-constructed values are a conductor-free zero.
std::int64_t common_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.coefficients().empty()) return b.conductor();
  if (b.coefficients().empty()) return a.conductor();
  if (a.conductor() != b.conductor()) throw InvalidInput("mixed cyclotomic conductors");
  return a.conductor();
}

std::vector<Rational> padded(const CyclotomicNumber& a, std::int64_t conductor) {
  std::vector<Rational> c = a.coefficients();
  c.resize(static_cast<std::size_t>(euler_phi(conductor)));
  return c;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  const auto n = common_conductor(*this, o);
  auto c = padded(*this, n);
  const auto d = padded(o, n);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += d[k];
  CyclotomicNumber out;
  out.conductor_ = n;
  out.coeffs_ = std::move(c);
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const { return *this + (-o); }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  const auto n = common_conductor(*this, o);
  if (coeffs_.empty() || o.coeffs_.empty()) return CyclotomicNumber(n, Rational(0));
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return CyclotomicNumber(n, std::move(prod));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero in a cyclotomic field");
  Poly r0;
  for (const auto& c : cyclotomic_polynomial(conductor_)) r0.push_back(Rational(c));
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_N is irreducible.
  const Rational c = r0.front();
  for (auto& x : s0) x /= c;
  return CyclotomicNumber(conductor_, std::move(s0));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return is_zero() && o.is_zero();
  return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + charvar::to_string(coeffs_[k]) + ")";
    if (k > 0) out += "*z" + std::to_string(conductor_) + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.empty() ? "0" : out;
}

std::size_t rank_cyclotomic(CyclotomicMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  CyclotomicNumber prev;
  bool have_prev = false;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const CyclotomicNumber p = m(rank, c);
    const CyclotomicNumber prev_inv = have_prev ? prev.inverse() : CyclotomicNumber();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const CyclotomicNumber f = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        CyclotomicNumber v = p * m(r, j) - f * m(rank, j);
        m(r, j) = have_prev ? v * prev_inv : v;
      }
      m(r, c) = CyclotomicNumber();
    }
    prev = p;
    have_prev = true;
    ++rank;
  }
  return rank;
}

}  // namespace charvar

#include "charvar/polynomial.hpp"

#include "charvar/errors.hpp"

namespace charvar {

HomogeneousPoly HomogeneousPoly::constant(const Rational& c) {
  HomogeneousPoly p;
  p.add({0, 0, 0}, c);
  return p;
}

HomogeneousPoly HomogeneousPoly::linear(const LinearForm& form) {
  HomogeneousPoly p;
  p.add({1, 0, 0}, form[0]);
  p.add({0, 1, 0}, form[1]);
  p.add({0, 0, 1}, form[2]);
  return p;
}

void HomogeneousPoly::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const int d = m[0] + m[1] + m[2];
  if (degree_ >= 0 && d != degree_) throw InvalidInput("adding polynomials of different degrees");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  degree_ = terms_.empty() ? -1 : d;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
  HomogeneousPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const { return *this + o.scaled(-1); }

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& o) const {
  HomogeneousPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return out;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& c) const {
  HomogeneousPoly out;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

HomogeneousPoly HomogeneousPoly::power(int k) const {
  HomogeneousPoly out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rational HomogeneousPoly::evaluate(const LinearForm& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < m[k]; ++e) v *= point[k];
    sum += v;
  }
  return sum;
}

std::vector<Rational> HomogeneousPoly::coefficient_vector(int degree) const {
  if (!is_zero() && degree != degree_) throw InvalidInput("degree mismatch in coefficient vector");
  std::vector<Rational> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) {
      auto it = terms_.find({a, b, degree - a - b});
      out.push_back(it == terms_.end() ? Rational(0) : it->second);
    }
  return out;
}

bool HomogeneousPoly::vanishes_on(const LinearForm& form) const {
  if (is_zero()) return true;
  // A degree-d binary form vanishing at d+1 points of the line is zero.
  const auto [p, q] = points_on_line(form);
  for (int t = 0; t <= degree_; ++t) {
    const LinearForm pt{p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]};
    if (evaluate(pt) != 0) return false;
  }
  return evaluate(q) == 0;
}

std::string HomogeneousPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  static const char* names[3] = {"x", "y", "z"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    const Rational a = c < 0 ? Rational(-c) : c;
    std::string coef = (mono.empty() || a != 1) ? charvar::to_string(a) : "";
    if (!coef.empty() && !mono.empty()) coef += '*';
    if (out.empty())
      out = (c < 0 ? "-" : "") + coef + mono;
    else
      out += (c < 0 ? " - " : " + ") + coef + mono;
  }
  return out;
}

std::array<LinearForm, 2> points_on_line(const LinearForm& f) {
  // Kernel of the 1x3 matrix f, from the cross products with basis vectors.
  std::vector<LinearForm> candidates = {LinearForm{0, f[2], -f[1]}, LinearForm{-f[2], 0, f[0]},
                                        LinearForm{f[1], -f[0], 0}};
  std::vector<LinearForm> picked;
  for (const auto& c : candidates) {
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    if (!picked.empty()) {
      const auto& p = picked.front();
      const bool parallel = p[1] * c[2] == p[2] * c[1] && p[2] * c[0] == p[0] * c[2] && p[0] * c[1] == p[1] * c[0];
      if (parallel) continue;
    }
    picked.push_back(c);
    if (picked.size() == 2) return {picked[0], picked[1]};
  }
  throw InvalidInput("zero linear form has no line");
}

LinearForm intersection_point(const LinearForm& u, const LinearForm& v) {
  LinearForm p{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  return canonical_form(p);
}

bool on_line(const LinearForm& form, const LinearForm& point) {
  return form[0] * point[0] + form[1] * point[1] + form[2] * point[2] == 0;
}

}  // namespace charvar

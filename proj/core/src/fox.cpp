#include "charvar/fox.hpp"

#include "charvar/errors.hpp"

namespace charvar {

LaurentPoly LaurentPoly::constant(std::size_t n_vars, std::int64_t c) {
  LaurentPoly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, std::int64_t c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, std::int64_t c) {
  if (c == 0) return;
  if (e.size() != n_vars_) throw InvalidInput("exponent length differs from variable count");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::evaluate_at_one() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  if (out.n_vars_ == 0) out.n_vars_ = other.n_vars_;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  if (out.n_vars_ == 0) out.n_vars_ = other.n_vars_;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out(n_vars_ ? n_vars_ : other.n_vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      Exponent e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      out.add_term(e, c1 * c2);
    }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "t" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    std::string coef;
    const std::int64_t a = c < 0 ? -c : c;
    if (mono.empty())
      coef = std::to_string(a);
    else if (a != 1)
      coef = std::to_string(a) + "*";
    if (out.empty())
      out = (c < 0 ? "-" : "") + coef + mono;
    else
      out += (c < 0 ? " - " : " + ") + coef + mono;
  }
  return out;
}

namespace {

std::size_t letter_index(int letter, std::size_t n_generators) {
  const auto g = static_cast<std::size_t>(letter > 0 ? letter : -letter);
  if (letter == 0 || g > n_generators) throw InvalidInput("word letter out of range");
  return g - 1;
}

}  // namespace

LaurentPoly::Exponent abelian_image(const FreeWord& w, std::size_t n_generators) {
  LaurentPoly::Exponent e(n_generators, 0);
  for (int letter : w) e[letter_index(letter, n_generators)] += letter > 0 ? 1 : -1;
  return e;
}

LaurentPoly fox_derivative(const FreeWord& w, std::size_t i, std::size_t n_generators) {
  if (i >= n_generators) throw InvalidInput("generator index out of range");
  LaurentPoly out(n_generators);
  LaurentPoly::Exponent prefix(n_generators, 0);
  for (int letter : w) {
    const std::size_t j = letter_index(letter, n_generators);
    if (letter > 0) {
      if (j == i) out.add_term(prefix, 1);
      ++prefix[j];
    } else {
      --prefix[j];
      if (j == i) out.add_term(prefix, -1);
    }
  }
  return out;
}

AlexanderMatrix alexander_matrix(const GroupPresentation& pres) {
  AlexanderMatrix a;
  a.n_generators = pres.n_generators;
  a.entries.reserve(pres.relators.size());
  for (const auto& r : pres.relators) {
    std::vector<LaurentPoly> row;
    row.reserve(pres.n_generators);
    for (std::size_t i = 0; i < pres.n_generators; ++i)
      row.push_back(fox_derivative(r, i, pres.n_generators));
    a.entries.push_back(std::move(row));
  }
  return a;
}

}  // namespace charvar

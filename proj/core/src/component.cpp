#include "charvar/component.hpp"

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/smith.hpp"

namespace charvar {
namespace {

RationalCharacter row_character(const IntMatrix& m, std::size_t row, const Rational& scale) {
  std::vector<Rational> exps(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) exps[j] = scale * Rational(m(row, j));
  return RationalCharacter::from_exponents(exps);
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::local:
      return "local";
    case Provenance::pencil:
      return "pencil";
    case Provenance::translated:
      return "translated";
  }
  return "unknown";
}

bool DualCharacter::is_trivial() const {
  return std::all_of(residues.begin(), residues.end(), [](const Integer& r) { return r == 0; });
}

std::string DualCharacter::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ",";
    out += residues[i].str() + "/" + moduli[i].str();
  }
  return out + ")";
}

ComponentDescriptor::ComponentDescriptor(const IntMatrix& directions,
                                         const RationalCharacter& translation,
                                         Provenance provenance, std::string label)
    : provenance_(provenance), label_(std::move(label)) {
  const std::size_t n = translation.size();
  if (directions.rows() > 0 && directions.cols() != n) {
    throw InvalidInput("direction lattice and translation have different lengths");
  }
  IntMatrix dirs = directions.rows() > 0 ? directions : IntMatrix(0, n);
  const SmithForm snf = smith_normal_form(dirs);
  const IntMatrix right = dirs.rows() > 0 ? snf.right : IntMatrix::identity(n);
  const std::size_t rank = dirs.rows() > 0 ? snf.rank : 0;
  completion_ = unimodular_inverse(right);
  coordinate_change_ = right.transposed();
  lattice_ = IntMatrix(rank, n);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < n; ++c) lattice_(r, c) = completion_(r, c);

  // Canonical translation: zero the free coordinates.
  const auto w = coordinates(translation);
  RationalCharacter canonical = RationalCharacter::trivial(n);
  for (std::size_t k = rank; k < n; ++k) {
    if (w[k] == 0) continue;
    canonical = canonical + row_character(completion_, k, w[k]);
  }
  translation_ = canonical;
}

std::vector<Rational> ComponentDescriptor::coordinates(const RationalCharacter& rho) const {
  const std::size_t n = coordinate_change_.rows();
  if (rho.size() != n) throw InvalidInput("character length does not match component");
  std::vector<Rational> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (rho.residue(j) == 0) continue;
      acc += Rational(coordinate_change_(k, j)) * rho.exponent(j);
    }
    w[k] = fractional_part(acc);
  }
  return w;
}

bool ComponentDescriptor::contains(const RationalCharacter& rho) const {
  const auto w = coordinates(rho - translation_);
  for (std::size_t k = dimension(); k < w.size(); ++k)
    if (w[k] != 0) return false;
  return true;
}

bool ComponentDescriptor::contains_trivial() const {
  return contains(RationalCharacter::trivial(ambient_dimension()));
}

bool ComponentDescriptor::contained_in(const ComponentDescriptor& other) const {
  if (other.ambient_dimension() != ambient_dimension()) return false;
  if (!other.contains(translation_)) return false;
  const std::size_t n = ambient_dimension();
  for (std::size_t r = 0; r < dimension(); ++r) {
    for (std::size_t k = other.dimension(); k < n; ++k) {
      Integer acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += other.coordinate_change_(k, j) * lattice_(r, j);
      if (acc != 0) return false;
    }
  }
  return true;
}

RationalCharacter ComponentDescriptor::point(const RationalCharacter& params) const {
  if (params.size() != dimension()) throw InvalidInput("parameter count must equal the dimension");
  RationalCharacter out = translation_;
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (params.residue(k) == 0) continue;
    out = out + row_character(lattice_, k, params.exponent(k));
  }
  return out;
}

std::vector<RationalCharacter> ComponentDescriptor::points_of_order(std::int64_t n) const {
  if (n <= 0) throw InvalidInput("order must be positive");
  std::vector<RationalCharacter> out;
  if (n % translation_.order() != 0) return out;
  const CharacterEnumerator params(dimension(), n);
  out.reserve(params.count());
  for (std::uint64_t i = 0; i < params.count(); ++i) out.push_back(point(params.at(i)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace charvar

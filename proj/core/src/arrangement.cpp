#include "charvar/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

LinearForm cross(const LinearForm& u, const LinearForm& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rational json_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rational(Integer(value.get<std::int64_t>()));
  }
  throw ParseError("coefficients must be \"p/q\" strings or integers, got " + value.dump());
}

Rational det3(const std::array<LinearForm, 3>& rows) {
  return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
         rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
         rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
}

}  // namespace

LinearForm canonical_form(const LinearForm& form) {
  for (const auto& lead : form) {
    if (lead == 0) continue;
    return {form[0] / lead, form[1] / lead, form[2] / lead};
  }
  throw InvalidInput("zero linear form");
}

std::string to_string(const LinearForm& form) {
  return "[" + to_string(form[0]) + "," + to_string(form[1]) + "," + to_string(form[2]) + "]";
}

Arrangement::Arrangement(const std::vector<LinearForm>& forms, std::size_t infinity)
    : infinity_(infinity) {
  if (forms.empty()) throw InvalidInput("arrangement has no lines");
  if (infinity >= forms.size()) throw InvalidInput("infinity index out of range");
  std::set<LinearForm> seen;
  lines_.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    LinearForm c = canonical_form(forms[i]);
    if (!seen.insert(c).second) {
      throw InvalidInput("duplicate line " + std::to_string(i + 1) + " " + to_string(c));
    }
    lines_.push_back(RationalLine{std::move(c), i + 1});
  }
}

std::vector<std::size_t> Arrangement::affine_lines() const {
  std::vector<std::size_t> out;
  out.reserve(size() - 1);
  for (std::size_t i = 0; i < size(); ++i)
    if (i != infinity_) out.push_back(i);
  return out;
}

std::optional<std::size_t> Arrangement::generator_of_line(std::size_t line) const {
  if (line >= size() || line == infinity_) return std::nullopt;
  return line < infinity_ ? line : line - 1;
}

std::optional<std::size_t> Arrangement::find_line(const LinearForm& form) const {
  const LinearForm c = canonical_form(form);
  for (std::size_t i = 0; i < size(); ++i)
    if (lines_[i].coefficients == c) return i;
  return std::nullopt;
}

Arrangement parse_arrangement(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("arrangement file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("lines") || !doc.contains("infinity")) {
    throw ParseError("arrangement file needs \"lines\" and \"infinity\"");
  }
  const auto& lines = doc.at("lines");
  if (!lines.is_array()) throw ParseError("\"lines\" must be an array");
  std::vector<LinearForm> forms;
  for (const auto& entry : lines) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("each line must be a triple of coefficients");
    }
    forms.push_back({json_rational(entry[0]), json_rational(entry[1]), json_rational(entry[2])});
  }
  const auto& inf = doc.at("infinity");
  if (!inf.is_number_integer()) throw ParseError("\"infinity\" must be an integer");
  const auto k = inf.get<std::int64_t>();
  if (k < 1 || static_cast<std::size_t>(k) > forms.size()) {
    throw InvalidInput("infinity index " + std::to_string(k) + " out of range");
  }
  return Arrangement(forms, static_cast<std::size_t>(k - 1));
}

std::size_t IntersectionLattice::count_with_multiplicity(std::size_t m) const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(),
                                                [m](const auto& p) { return p.multiplicity() == m; }));
}

bool IntersectionLattice::pair_count_holds() const {
  std::size_t pairs = 0;
  for (const auto& p : points) pairs += p.multiplicity() * (p.multiplicity() - 1) / 2;
  return pairs == n_lines * (n_lines - 1) / 2;
}

IntersectionLattice build_lattice(const Arrangement& arr) {
  std::map<LinearForm, std::set<std::size_t>> by_point;
  const std::size_t n = arr.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const LinearForm p = canonical_form(cross(arr.line(i).coefficients, arr.line(j).coefficients));
      auto& incident = by_point[p];
      incident.insert(i);
      incident.insert(j);
    }
  IntersectionLattice lattice;
  lattice.n_lines = n;
  for (const auto& [point, incident] : by_point) {
    lattice.points.push_back(IntersectionPoint{point, {incident.begin(), incident.end()}});
  }
  std::sort(lattice.points.begin(), lattice.points.end(),
            [](const auto& a, const auto& b) { return a.incident < b.incident; });
  lattice.on_line.assign(n, {});
  for (std::size_t p = 0; p < lattice.points.size(); ++p)
    for (auto line : lattice.points[p].incident) lattice.on_line[line].push_back(p);
  return lattice;
}

std::vector<ComponentDescriptor> local_components(const IntersectionLattice& lattice) {
  std::vector<ComponentDescriptor> out;
  const std::size_t n = lattice.n_lines;
  for (const auto& p : lattice.points) {
    const std::size_t m = p.multiplicity();
    if (m < 3) continue;
    IntMatrix dirs(m - 1, n);
    for (std::size_t k = 1; k < m; ++k) {
      dirs(k - 1, p.incident[0]) = 1;
      dirs(k - 1, p.incident[k]) = -1;
    }
    std::string label = "local:";
    for (std::size_t k = 0; k < m; ++k) {
      if (k) label += ",";
      label += std::to_string(p.incident[k] + 1);
    }
    out.emplace_back(dirs, RationalCharacter::trivial(n), Provenance::local, std::move(label));
  }
  return out;
}

RationalCharacter decone_character(const Arrangement& arr, const RationalCharacter& projective) {
  if (projective.size() != arr.size()) throw InvalidInput("character length must equal line count");
  if (projective.exponent_sum() != 0) {
    throw ConstraintViolation("projective character " + projective.to_string() +
                              " violates the product-one constraint");
  }
  std::vector<std::int64_t> residues;
  residues.reserve(arr.size() - 1);
  for (auto i : arr.affine_lines()) residues.push_back(projective.residue(i));
  return RationalCharacter(std::move(residues), projective.order());
}

RationalCharacter cone_character(const Arrangement& arr, const RationalCharacter& affine) {
  if (affine.size() + 1 != arr.size()) throw InvalidInput("affine character has wrong length");
  std::vector<std::int64_t> residues(arr.size(), 0);
  std::int64_t sum = 0;
  const auto affine_idx = arr.affine_lines();
  for (std::size_t g = 0; g < affine.size(); ++g) {
    residues[affine_idx[g]] = affine.residue(g);
    sum = (sum + affine.residue(g)) % affine.order();
  }
  residues[arr.infinity_index()] = floor_mod(-sum, affine.order());
  return RationalCharacter(std::move(residues), affine.order());
}

std::vector<LinearForm> affine_equations(const Arrangement& arr) {
  const LinearForm& inf = arr.line(arr.infinity_index()).coefficients;
  const std::array<LinearForm, 3> standard = {LinearForm{1, 0, 0}, LinearForm{0, 1, 0},
                                              LinearForm{0, 0, 1}};
  // Complete the infinity form to a basis (u, v, inf) of linear forms.
  std::array<LinearForm, 3> basis;
  bool found = false;
  for (std::size_t a = 0; a < 3 && !found; ++a)
    for (std::size_t b = a + 1; b < 3 && !found; ++b) {
      basis = {standard[a], standard[b], inf};
      found = det3(basis) != 0;
    }
  // Express each form as lambda_u u + lambda_v v + lambda_w inf (Cramer's rule).
  const Rational det = det3(basis);
  std::vector<LinearForm> out;
  for (auto i : arr.affine_lines()) {
    const LinearForm& f = arr.line(i).coefficients;
    LinearForm lambda;
    for (std::size_t k = 0; k < 3; ++k) {
      // Solve lambda * basis = f: replace row k of basis by f.
      auto replaced = basis;
      replaced[k] = f;
      lambda[k] = det3(replaced) / det;
    }
    out.push_back(lambda);
  }
  return out;
}

}  // namespace charvar

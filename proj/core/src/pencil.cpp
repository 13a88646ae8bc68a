#include "charvar/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "charvar/errors.hpp"

namespace charvar {

std::int64_t Fiber::degree() const {
  std::int64_t d = 0;
  for (const auto& c : components) d += c.multiplicity;
  return d;
}

bool Fiber::all_lines() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.line.has_value(); });
}

std::int64_t Fiber::external_gcd() const {
  std::int64_t g = 0;
  for (const auto& c : components)
    if (!c.line) g = std::gcd(g, c.multiplicity);
  return g;
}

HomogeneousPoly Fiber::polynomial() const {
  HomogeneousPoly p = HomogeneousPoly::constant(1);
  for (const auto& c : components) p = p * HomogeneousPoly::linear(c.form).power(static_cast<int>(c.multiplicity));
  return p;
}

bool Pencil::is_local() const {
  return std::all_of(fibers_.begin(), fibers_.end(), [](const Fiber& f) {
    return f.components.size() == 1 && f.components[0].line && f.components[0].multiplicity == 1;
  });
}

std::vector<std::vector<std::size_t>> Pencil::blocks() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : fibers_) {
    std::vector<std::size_t> block;
    for (const auto& c : f.components)
      if (c.line) block.push_back(*c.line);
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::string partition_label(const std::vector<std::vector<std::size_t>>& blocks) {
  bool wide = false;
  for (const auto& b : blocks)
    for (auto l : b) wide = wide || l + 1 > 9;
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (wide && j) out += ',';
      out += std::to_string(blocks[i][j] + 1);
    }
  }
  return out + ")";
}

namespace {

// Rank of a list of coefficient vectors over Q.
std::size_t vector_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  return rational_rank(RationalMatrix::from_rows(rows, rows.front().size()));
}

std::string line_name(std::size_t i) { return "L" + std::to_string(i + 1); }

}  // namespace

Pencil validate_pencil(const Arrangement& arr, std::vector<Fiber> fibers, std::string label) {
  if (fibers.size() < 2) throw InvalidInput("a pencil needs at least two fibers");
  const std::size_t n = arr.size();

  Pencil p;
  p.arrangement_ = arr;
  p.fiber_of_line_.assign(n, std::nullopt);
  std::set<LinearForm> seen_forms;
  for (std::size_t k = 0; k < fibers.size(); ++k) {
    auto& fiber = fibers[k];
    if (fiber.components.empty()) throw InvalidInput("fiber " + std::to_string(k + 1) + " is empty");
    for (auto& c : fiber.components) {
      if (c.multiplicity < 1) throw InvalidInput("fiber multiplicities must be positive");
      if (c.line) {
        if (*c.line >= n) throw InvalidInput("fiber refers to line " + std::to_string(*c.line + 1) + " out of range");
        c.form = arr.line(*c.line).coefficients;
      } else {
        c.form = canonical_form(c.form);
        c.line = arr.find_line(c.form);
      }
      if (!seen_forms.insert(c.form).second) {
        throw InvalidInput("component " + to_string(c.form) + " appears in more than one place");
      }
      if (c.line) p.fiber_of_line_[*c.line] = k;
    }
    std::sort(fiber.components.begin(), fiber.components.end(), [](const auto& a, const auto& b) {
      if (a.line.has_value() != b.line.has_value()) return a.line.has_value();
      if (a.line) return *a.line < *b.line;
      return a.form < b.form;
    });
  }

  p.degree_ = fibers[0].degree();
  for (std::size_t k = 1; k < fibers.size(); ++k)
    if (fibers[k].degree() != p.degree_) {
      throw InvalidInput("fiber " + std::to_string(k + 1) + " has degree " + std::to_string(fibers[k].degree()) +
                         ", expected " + std::to_string(p.degree_));
    }

  const int d = static_cast<int>(p.degree_);
  std::vector<HomogeneousPoly> polys;
  for (const auto& f : fibers) polys.push_back(f.polynomial());
  const auto v0 = polys[0].coefficient_vector(d);
  const auto v1 = polys[1].coefficient_vector(d);
  if (vector_rank({v0, v1}) != 2) throw InvalidInput("the first two fibers are proportional");

  // A nonzero 2x2 minor of (F_0, F_1) solves for the combination coefficients.
  std::size_t a = 0, b = 0;
  Rational det = 0;
  for (std::size_t i = 0; i < v0.size() && det == 0; ++i)
    for (std::size_t j = i + 1; j < v0.size() && det == 0; ++j) {
      det = v0[i] * v1[j] - v0[j] * v1[i];
      a = i;
      b = j;
    }
  p.combination_ = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  fibers[0].location = "0";
  fibers[1].location = "inf";
  std::set<Rational> locations;
  for (std::size_t k = 2; k < fibers.size(); ++k) {
    const auto vk = polys[k].coefficient_vector(d);
    const Rational lambda = (vk[a] * v1[b] - vk[b] * v1[a]) / det;
    const Rational mu = (v0[a] * vk[b] - v0[b] * vk[a]) / det;
    if (polys[0].scaled(lambda) + polys[1].scaled(mu) != polys[k]) {
      throw InvalidInput("fiber " + std::to_string(k + 1) + " is not in the pencil of the first two");
    }
    if (lambda == 0 || mu == 0) {
      throw InvalidInput("fiber " + std::to_string(k + 1) + " coincides with fiber " + (lambda == 0 ? "2" : "1"));
    }
    const Rational location = -mu / lambda;
    if (!locations.insert(location).second) {
      throw InvalidInput("two fibers sit over the same point " + to_string(location));
    }
    fibers[k].location = to_string(location);
    p.combination_.emplace_back(lambda, mu);
  }

  // Unlisted lines must not lie in any member: F_0 and F_1 restricted to the
  // line must be independent binary forms.
  for (std::size_t i = 0; i < n; ++i) {
    if (p.fiber_of_line_[i]) continue;
    const auto [s, t] = points_on_line(arr.line(i).coefficients);
    std::vector<Rational> r0, r1;
    for (int k = 0; k <= d; ++k) {
      const LinearForm pt{s[0] + k * t[0], s[1] + k * t[1], s[2] + k * t[2]};
      r0.push_back(polys[0].evaluate(pt));
      r1.push_back(polys[1].evaluate(pt));
    }
    if (vector_rank({r0, r1}) < 2) {
      throw InvalidInput(line_name(i) + " lies in a member of the pencil but is not listed");
    }
  }

  for (const auto& c0 : fibers[0].components)
    for (const auto& c1 : fibers[1].components) {
      const LinearForm pt = intersection_point(c0.form, c1.form);
      bool covered = false;
      for (const auto& line : arr.lines()) covered = covered || on_line(line.coefficients, pt);
      if (!covered) throw InvalidInput("base point " + to_string(pt) + " lies off the arrangement");
    }

  p.fibers_ = std::move(fibers);
  const bool reduced_lines = std::all_of(p.fibers_.begin(), p.fibers_.end(), [](const Fiber& f) {
    return f.all_lines() &&
           std::all_of(f.components.begin(), f.components.end(), [](const auto& c) { return c.multiplicity == 1; });
  });
  if (!label.empty())
    p.label_ = std::move(label);
  else
    p.label_ = reduced_lines ? partition_label(p.blocks()) : "pencil";
  return p;
}

namespace {

Rational json_rational(const nlohmann::json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(Integer(value.get<std::int64_t>()));
  throw ParseError("form coefficients must be \"p/q\" strings or integers");
}

}  // namespace

Pencil parse_pencil(std::string_view document, const Arrangement& arr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("pencil file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("fibers") || !doc.at("fibers").is_array()) {
    throw ParseError("pencil file needs a \"fibers\" array");
  }
  std::vector<Fiber> fibers;
  for (const auto& jf : doc.at("fibers")) {
    if (!jf.is_array()) throw ParseError("each fiber must be an array of components");
    Fiber fiber;
    for (const auto& jc : jf) {
      if (!jc.is_object()) throw ParseError("fiber components must be objects");
      FiberComponent c;
      if (jc.contains("multiplicity")) {
        if (!jc.at("multiplicity").is_number_integer()) throw ParseError("multiplicity must be an integer");
        c.multiplicity = jc.at("multiplicity").get<std::int64_t>();
      }
      if (jc.contains("line") == jc.contains("form")) {
        throw ParseError("a component needs exactly one of \"line\" or \"form\"");
      }
      if (jc.contains("line")) {
        if (!jc.at("line").is_number_integer()) throw ParseError("\"line\" must be an integer");
        const auto k = jc.at("line").get<std::int64_t>();
        if (k < 1) throw InvalidInput("line indices are 1-based");
        c.line = static_cast<std::size_t>(k - 1);
      } else {
        const auto& f = jc.at("form");
        if (!f.is_array() || f.size() != 3) throw ParseError("\"form\" must be a coefficient triple");
        c.form = {json_rational(f[0]), json_rational(f[1]), json_rational(f[2])};
      }
      fiber.components.push_back(std::move(c));
    }
    fibers.push_back(std::move(fiber));
  }
  std::string label;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("\"name\" must be a string");
    label = doc.at("name").get<std::string>();
  }
  return validate_pencil(arr, std::move(fibers), std::move(label));
}

std::int64_t OrbifoldBase::euler_characteristic() const {
  return 2 - 2 * static_cast<std::int64_t>(genus) - static_cast<std::int64_t>(punctures.size());
}

std::size_t OrbifoldBase::b1() const {
  return 2 * static_cast<std::size_t>(genus) + (punctures.empty() ? 0 : punctures.size() - 1);
}

std::size_t OrbifoldBase::n_generators() const {
  return 2 * static_cast<std::size_t>(genus) + punctures.size() + orbifold_points.size();
}

IntMatrix OrbifoldBase::relations() const {
  const std::size_t k = n_generators();
  const std::size_t loops = punctures.size() + orbifold_points.size();
  IntMatrix r(orbifold_points.size() + (loops > 0 ? 1 : 0), k);
  std::size_t row = 0;
  if (loops > 0) {
    for (std::size_t j = 2 * static_cast<std::size_t>(genus); j < k; ++j) r(row, j) = 1;
    ++row;
  }
  for (std::size_t j = 0; j < orbifold_points.size(); ++j, ++row) r(row, orbifold_generator(j)) = orbifold_points[j].multiplicity;
  return r;
}

namespace {

// For each fiber: puncture index, orbifold index, or neither.
struct FiberRole {
  std::optional<std::size_t> puncture;
  std::optional<std::size_t> orbifold;
};

std::vector<FiberRole> fiber_roles(const Pencil& p) {
  std::vector<FiberRole> roles;
  std::size_t np = 0, nq = 0;
  for (const auto& f : p.fibers()) {
    FiberRole r;
    if (f.all_lines())
      r.puncture = np++;
    else if (f.external_gcd() >= 2)
      r.orbifold = nq++;
    roles.push_back(r);
  }
  return roles;
}

}  // namespace

OrbifoldBase orbifold_base(const Pencil& p) {
  OrbifoldBase base;
  for (const auto& f : p.fibers()) {
    if (f.all_lines())
      base.punctures.push_back(f.location);
    else if (f.external_gcd() >= 2)
      base.orbifold_points.push_back({f.location, f.external_gcd()});
  }
  return base;
}

std::uint64_t TranslationGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& m : moduli) o *= m.convert_to<std::uint64_t>();
  return o;
}

std::vector<DualCharacter> TranslationGroup::dual_elements() const {
  std::vector<DualCharacter> out;
  const std::uint64_t total = order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    DualCharacter c;
    c.moduli = moduli;
    c.residues.resize(moduli.size());
    std::uint64_t rest = idx;
    for (std::size_t k = moduli.size(); k-- > 0;) {
      const auto m = moduli[k].convert_to<std::uint64_t>();
      c.residues[k] = rest % m;
      rest /= m;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Rational> TranslationGroup::values(const DualCharacter& rho_tilde) const {
  if (rho_tilde.residues.size() != torsion_coordinates.size()) throw InvalidInput("dual character has wrong length");
  const IntMatrix& u = snf.left;
  std::vector<Rational> c(u.cols());
  for (std::size_t t = 0; t < torsion_coordinates.size(); ++t) {
    const Rational w(rho_tilde.residues[t], moduli[t]);
    for (std::size_t j = 0; j < u.cols(); ++j) c[j] += Rational(u(torsion_coordinates[t], j)) * w;
  }
  for (auto& v : c) v = fractional_part(v);
  return c;
}

TranslationGroup translation_group(const OrbifoldBase& base) {
  TranslationGroup t;
  const IntMatrix rel = base.relations();
  const std::size_t k = base.n_generators();
  t.h1_orb = cokernel(rel, k);
  t.snf = smith_normal_form(rel.transposed());
  if (t.snf.left.rows() != k) t.snf.left = IntMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < t.snf.invariant_factors.size() ? t.snf.invariant_factors[i] : Integer(0);
    if (d == 0) {
      t.free_coordinates.push_back(i);
    } else if (d > 1) {
      t.torsion_coordinates.push_back(i);
      t.moduli.push_back(d);
    }
  }
  t.group.torsion = t.moduli;
  const IntMatrix u_inv = unimodular_inverse(t.snf.left);
  for (auto i : t.torsion_coordinates) t.generators.push_back(u_inv.column(i));
  return t;
}

AbelianGroup beauville_dual(std::span<const std::int64_t> multiplicities) {
  std::uint64_t total = 1;
  for (auto m : multiplicities) {
    if (m < 1) throw InvalidInput("multiplicities must be positive");
    total *= static_cast<std::uint64_t>(m);
  }
  std::vector<std::size_t> census(1, 0);
  std::vector<std::int64_t> k(multiplicities.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    Rational sum = 0;
    std::int64_t order = 1;
    for (std::size_t i = multiplicities.size(); i-- > 0;) {
      const auto m = multiplicities[i];
      k[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(m));
      rest /= static_cast<std::uint64_t>(m);
      sum += Rational(Integer(k[i]), Integer(m));
      order = lcm64(order, m / std::gcd(k[i], m));
    }
    if (denominator_of(sum) != 1) continue;
    if (census.size() <= static_cast<std::size_t>(order)) census.resize(static_cast<std::size_t>(order) + 1, 0);
    ++census[static_cast<std::size_t>(order)];
  }
  return finite_group_from_order_census(census);
}

std::vector<std::size_t> singular_support(const OrbifoldBase& base, const TranslationGroup& t,
                                          const DualCharacter& rho_tilde) {
  const auto c = t.values(rho_tilde);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < base.orbifold_points.size(); ++j)
    if (c[base.orbifold_generator(j)] != 0) out.push_back(j);
  return out;
}

std::vector<DualCharacter> component_characters(const OrbifoldBase& base, const TranslationGroup& t) {
  const auto chi = base.euler_characteristic();
  std::vector<DualCharacter> out;
  if (chi > 0) return out;
  for (auto& c : t.dual_elements())
    if (chi < 0 || !c.is_trivial()) out.push_back(std::move(c));
  return out;
}

Corollary1Verdict corollary1_check(const OrbifoldBase& base, const std::vector<DualCharacter>& emitted) {
  Corollary1Verdict v;
  for (const auto& c : emitted) (c.is_trivial() ? v.untranslated_present : v.translated_present) = true;
  const auto chi = base.euler_characteristic();
  if (chi < 0) {
    v.case_label = "chi<0";
    v.holds = v.untranslated_present;
  } else if (chi == 0) {
    v.case_label = base.genus == 1 ? "(i)" : "(ii)";
    v.holds = !v.untranslated_present;
  } else {
    v.case_label = "chi>0";
    v.holds = emitted.empty();
  }
  return v;
}

IntMatrix pushforward_map(const Pencil& p, const OrbifoldBase& base) {
  const std::size_t n = p.arrangement().size();
  IntMatrix out(base.n_generators(), n);
  const auto roles = fiber_roles(p);
  std::vector<Integer> total(base.n_generators());
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = p.fiber_of_line(i);
    if (!f) continue;
    std::int64_t m = 1;
    for (const auto& c : p.fibers()[*f].components)
      if (c.line == i) m = c.multiplicity;
    std::optional<std::size_t> gen;
    if (roles[*f].puncture) gen = base.puncture_generator(*roles[*f].puncture);
    if (roles[*f].orbifold) gen = base.orbifold_generator(*roles[*f].orbifold);
    if (!gen) continue;
    out(*gen, i) = m;
    total[*gen] += m;
  }
  // The meridians sum to zero in H_1(M); so must their images.
  const IntMatrix rel = base.relations();
  if (!solve_integer(rel.transposed(), total)) {
    throw InvalidInput("pushforward does not respect the meridian relation; fiber data is inconsistent");
  }
  return out;
}

PencilAnalysis::PencilAnalysis(Pencil pencil)
    : pencil_(std::move(pencil)),
      base_(orbifold_base(pencil_)),
      translation_(translation_group(base_)),
      pushforward_(pushforward_map(pencil_, base_)) {
  image_ = translation_.snf.left * pushforward_;
  const std::size_t k = image_.rows();
  const std::size_t n = image_.cols();
  // Augment with the invariant-factor relations so sections are taken modulo them.
  std::vector<std::size_t> bounded;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < translation_.snf.invariant_factors.size() ? translation_.snf.invariant_factors[i] : Integer(0);
    if (d != 0) bounded.push_back(i);
  }
  IntMatrix aug(k, n + bounded.size());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = image_(r, c);
  for (std::size_t j = 0; j < bounded.size(); ++j)
    aug(bounded[j], n + j) = translation_.snf.invariant_factors[bounded[j]];
  sections_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    const bool trivial = i < translation_.snf.invariant_factors.size() && translation_.snf.invariant_factors[i] == 1;
    if (trivial) continue;
    std::vector<Integer> e(k);
    e[i] = 1;
    auto x = solve_integer(aug, e);
    if (!x) {
      throw InvalidInput("pencil " + pencil_.label() +
                         ": meridians do not generate the orbifold abelianization (disconnected generic fiber?)");
    }
    x->resize(n);
    sections_[i] = std::move(*x);
  }
}

std::optional<std::vector<Rational>> PencilAnalysis::lift(const RationalCharacter& rho) const {
  const std::size_t n = image_.cols();
  if (rho.size() != n) throw InvalidInput("character length differs from the line count");
  std::vector<Rational> w(image_.rows());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sections_[i].empty()) continue;
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (sections_[i][j] != 0 && rho.residue(j) != 0) acc += Rational(sections_[i][j]) * rho.exponent(j);
    w[i] = fractional_part(acc);
  }
  for (std::size_t t = 0; t < translation_.torsion_coordinates.size(); ++t) {
    const Rational scaled = w[translation_.torsion_coordinates[t]] * Rational(translation_.moduli[t]);
    if (denominator_of(scaled) != 1) return std::nullopt;
  }
  std::vector<Rational> pulled(n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) pulled[j] += Rational(image_(i, j)) * w[i];
  }
  if (RationalCharacter::from_exponents(pulled) != rho) return std::nullopt;
  return w;
}

DualCharacter PencilAnalysis::induced_character(const RationalCharacter& rho) const {
  const auto w = lift(rho);
  if (!w) throw InvalidInput("character " + rho.to_string() + " is not a pullback along " + pencil_.label());
  DualCharacter c;
  c.moduli = translation_.moduli;
  for (std::size_t t = 0; t < translation_.torsion_coordinates.size(); ++t)
    c.residues.push_back(numerator_of((*w)[translation_.torsion_coordinates[t]] * Rational(translation_.moduli[t])));
  return c;
}

ComponentDescriptor PencilAnalysis::component(const DualCharacter& rho_tilde) const {
  const std::size_t n = image_.cols();
  if (rho_tilde.residues.size() != translation_.moduli.size()) throw InvalidInput("dual character has wrong length");
  IntMatrix dirs(translation_.free_coordinates.size(), n);
  for (std::size_t r = 0; r < translation_.free_coordinates.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) dirs(r, j) = image_(translation_.free_coordinates[r], j);
  std::vector<Rational> tau(n);
  for (std::size_t t = 0; t < translation_.torsion_coordinates.size(); ++t) {
    const Rational w(floor_mod(rho_tilde.residues[t], translation_.moduli[t]), translation_.moduli[t]);
    for (std::size_t j = 0; j < n; ++j) tau[j] += Rational(image_(translation_.torsion_coordinates[t], j)) * w;
  }
  const bool trivial = rho_tilde.is_trivial();
  const Provenance prov = trivial ? (pencil_.is_local() ? Provenance::local : Provenance::pencil) : Provenance::translated;
  std::string label = pencil_.label();
  if (!trivial) label += " " + rho_tilde.to_string();
  ComponentDescriptor w(dirs, RationalCharacter::from_exponents(tau), prov, std::move(label));
  if (w.dimension() != base_.b1()) {
    throw InvariantViolation("component of " + pencil_.label() + " has dimension " + std::to_string(w.dimension()) +
                             " but b1(S) = " + std::to_string(base_.b1()));
  }
  w.set_induced(rho_tilde);
  return w;
}

std::vector<ComponentDescriptor> PencilAnalysis::translated_components() const {
  std::vector<ComponentDescriptor> out;
  for (const auto& c : component_characters(base_, translation_)) out.push_back(component(c));
  return out;
}

std::vector<std::size_t> PencilAnalysis::singular_support(const RationalCharacter& rho) const {
  return charvar::singular_support(base_, translation_, induced_character(rho));
}

std::vector<std::string> PencilAnalysis::singular_locations(const RationalCharacter& rho) const {
  std::vector<std::string> out;
  for (auto j : singular_support(rho)) out.push_back(base_.orbifold_points[j].location);
  return out;
}

std::int64_t PencilAnalysis::generic_h1(const RationalCharacter& rho) const {
  return -base_.euler_characteristic() + static_cast<std::int64_t>(singular_support(rho).size());
}

}  // namespace charvar

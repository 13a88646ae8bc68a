#include "charvar/sheaf.hpp"

#include <numeric>

#include "charvar/errors.hpp"

namespace charvar {

std::size_t BaseCurve::b1() const {
  return static_cast<std::size_t>(2 * genus + (punctures > 0 ? punctures - 1 : 0));
}

bool relation_holds(const BaseCurve& base, const RationalCharacter& values) {
  if (values.size() != base.n_loops()) throw InvalidInput("local system has the wrong number of loop values");
  std::int64_t sum = 0;
  for (std::size_t i = static_cast<std::size_t>(2 * base.genus); i < values.size(); ++i)
    sum = (sum + values.residue(i)) % values.order();
  return sum == 0;
}

SheafModel make_model(BaseCurve base, RationalCharacter monodromy) {
  if (!relation_holds(base, monodromy)) {
    throw InvalidInput("loop values " + monodromy.to_string() + " violate sum(delta) + sum(sigma) = 0");
  }
  SheafModel m{std::move(base), std::move(monodromy), {}};
  for (std::size_t c = 0; c < m.base.marked.size(); ++c)
    if (m.monodromy.residue(m.base.sigma_index(c)) != 0) m.singular_support.push_back(c);
  return m;
}

std::optional<SheafModel> model_pushforward(const PencilAnalysis& pencil, const RationalCharacter& rho) {
  const auto w = pencil.lift(rho);
  if (!w) return std::nullopt;
  const OrbifoldBase& ob = pencil.base();
  const IntMatrix& u = pencil.translation().snf.left;
  std::vector<Rational> values(ob.n_generators());
  for (std::size_t k = 0; k < w->size(); ++k) {
    if ((*w)[k] == 0) continue;
    for (std::size_t j = 0; j < values.size(); ++j) values[j] += Rational(u(k, j)) * (*w)[k];
  }
  BaseCurve base;
  base.genus = ob.genus;
  base.punctures = static_cast<int>(ob.punctures.size());
  for (const auto& q : ob.orbifold_points) base.marked.push_back(q.location);
  return make_model(std::move(base), RationalCharacter::from_exponents(values));
}

AdjunctionVerdict check_adjunction(const SheafModel& model) {
  AdjunctionVerdict v;
  if (!relation_holds(model.base, model.monodromy)) {
    v.holds = false;
    v.violations.push_back("loop relation fails for " + model.monodromy.to_string());
  }
  std::vector<char> in_sigma(model.base.marked.size(), 0);
  for (auto c : model.singular_support) {
    if (c >= in_sigma.size()) throw InvalidInput("singular support refers to a missing marked point");
    in_sigma[c] = 1;
  }
  for (std::size_t c = 0; c < model.base.marked.size(); ++c) {
    const bool trivial = model.monodromy.residue(model.base.sigma_index(c)) == 0;
    // Rank one on a punctured disc: invariants and coinvariants vanish
    // exactly when the monodromy is nontrivial.
    LocalCheck check{c, trivial ? 1u : 0u, trivial ? 1u : 0u, trivial ? 1u : 0u};
    const std::string& name = model.base.marked[c];
    if (in_sigma[c]) {
      if (check.local_h0 != 0 || check.local_h1 != 0 || check.stalk != 0) {
        v.holds = false;
        v.violations.push_back("point " + name + " is in Sigma but has trivial local monodromy");
      }
    } else if (!trivial) {
      v.holds = false;
      v.violations.push_back("point " + name + " has nontrivial local monodromy but is not in Sigma");
    }
    v.checks.push_back(check);
  }
  return v;
}

CurveCohomology twisted_cohomology(const SheafModel& model, const RationalCharacter& twist) {
  const BaseCurve& b = model.base;
  if (twist.size() != b.n_loops()) throw InvalidInput("twist has the wrong number of loop values");
  for (std::size_t c = 0; c < b.marked.size(); ++c)
    if (twist.residue(b.sigma_index(c)) != 0) throw InvalidInput("twist has monodromy around a marked point");
  if (!relation_holds(b, twist)) throw InvalidInput("twist violates the loop relation");

  const RationalCharacter nu = model.monodromy + twist;
  CurveCohomology out;
  for (std::size_t c = 0; c < b.marked.size(); ++c)
    if (nu.residue(b.sigma_index(c)) != 0) ++out.singular;
  if (nu.is_trivial()) {
    out.h0 = 1;
    out.h1 = b.b1();
    out.h2 = b.compact() ? 1 : 0;
    return out;
  }
  // j_* nu has zero stalks on Sigma_nu and no higher direct images there, so
  // its cohomology is that of nu on U = S - Sigma_nu.
  const std::size_t open_ends = static_cast<std::size_t>(b.punctures) + out.singular;
  if (open_ends > 0) {
    const std::size_t free_rank = static_cast<std::size_t>(2 * b.genus) + open_ends - 1;
    out.h1 = free_rank - 1;
  } else {
    out.h1 = static_cast<std::size_t>(2 * b.genus - 2);
  }
  return out;
}

std::size_t h1_of_twist(const SheafModel& model, const RationalCharacter& twist) {
  return twisted_cohomology(model, twist).h1;
}

namespace {

// Fractions in [0, 1) of order at most order_max, as residues modulo lcm(1..order_max).
std::vector<std::int64_t> grid_values(std::int64_t order_max, std::int64_t modulus) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus; ++r)
    if (modulus / std::gcd(r, modulus) <= order_max) out.push_back(r);
  return out;
}

std::int64_t grid_modulus(std::int64_t order_max) {
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= order_max; ++k) l = lcm64(l, k);
  return l;
}

}  // namespace

Corollary2Report corollary2_scan(int g_max, std::int64_t order_max) {
  Corollary2Report r;
  const std::int64_t modulus = grid_modulus(order_max);
  for (int g = 0; g <= g_max; ++g) {
    BaseCurve base{g, 0, {"c"}};
    for (auto sigma : grid_values(order_max, modulus)) {
      ++r.instances;
      std::vector<std::int64_t> values(base.n_loops(), 0);
      values[base.sigma_index(0)] = sigma;
      const RationalCharacter mono(values, modulus);
      if (!relation_holds(base, mono)) {
        // The boundary loop of the one marked point is null-homologous.
        ++r.contradictions;
        continue;
      }
      if (!make_model(base, mono).singular_support.empty()) ++r.singletons;
    }
  }
  r.holds = r.singletons == 0;
  return r;
}

SheafModel noncompact_singleton_witness() {
  BaseCurve base{0, 2, {"1"}};
  return make_model(base, RationalCharacter({0, 1, 1}, 2));
}

SheafScanReport sheaf_scan(const SheafScanOptions& options) {
  SheafScanReport report;
  const std::int64_t modulus = grid_modulus(options.order_max);
  const auto values = grid_values(options.order_max, modulus);
  auto note = [&report](std::string msg) {
    if (report.failures.size() < 10) report.failures.push_back(std::move(msg));
  };

  for (int g = 0; g <= options.g_max; ++g)
    for (int k = 0; k <= options.k_max; ++k)
      for (int m = 0; m <= options.marks_max; ++m) {
        BaseCurve base{g, k, {}};
        for (int c = 0; c < m; ++c) base.marked.push_back("c" + std::to_string(c + 1));
        const std::size_t n = base.n_loops();
        const std::size_t first = static_cast<std::size_t>(2 * g);
        const std::size_t loops = n - first;
        // Twists pulled back from S: a handle twist and a puncture pair twist.
        std::vector<RationalCharacter> twists{RationalCharacter::trivial(n)};
        if (g >= 1) {
          std::vector<std::int64_t> t(n, 0);
          t[0] = 1;
          twists.emplace_back(t, 3);
        }
        if (k >= 2) {
          std::vector<std::int64_t> t(n, 0);
          t[base.delta_index(0)] = 1;
          t[base.delta_index(1)] = 4;
          twists.emplace_back(t, 5);
        }
        const int patterns = g >= 1 ? 2 : 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 1; i < loops; ++i) combos *= values.size();
        for (int pattern = 0; pattern < patterns; ++pattern)
          for (std::uint64_t idx = 0; idx < (loops == 0 ? 1 : combos); ++idx) {
            std::vector<std::int64_t> v(n, 0);
            if (pattern == 1) v[0] = modulus / 2;
            std::uint64_t rest = idx;
            std::int64_t sum = 0;
            for (std::size_t i = 1; i < loops; ++i) {
              v[first + i] = values[rest % values.size()];
              rest /= values.size();
              sum += v[first + i];
            }
            if (loops > 0) {
              const std::int64_t last = floor_mod(-sum, modulus);
              if (modulus / std::gcd(last, modulus) > options.order_max) continue;
              v[first] = last;
            }
            const SheafModel model = make_model(base, RationalCharacter(v, modulus));
            ++report.models;

            const auto adj = check_adjunction(model);
            if (!adj.holds) {
              ++report.adjunction_failures;
              note("adjunction: " + model.monodromy.to_string() + ": " + adj.violations.front());
            }
            if (model.singular_support.size() == 1) {
              if (base.compact()) {
                ++report.compact_singletons;
                note("compact base with |Sigma| = 1: " + model.monodromy.to_string());
              } else {
                ++report.noncompact_singletons;
                if (!report.witness) report.witness = model;
              }
            }
            for (const auto& twist : twists) {
              ++report.twists;
              const auto coh = twisted_cohomology(model, twist);
              const std::int64_t expected = base.euler_characteristic() - static_cast<std::int64_t>(coh.singular);
              const bool trivial = (model.monodromy + twist).is_trivial();
              const bool h1_ok = trivial ? coh.h1 == base.b1()
                                         : static_cast<std::int64_t>(coh.h1) == -expected;
              if (coh.euler() != expected || !h1_ok) {
                ++report.euler_failures;
                note("euler: g=" + std::to_string(g) + " k=" + std::to_string(k) + " " + model.monodromy.to_string());
              }
            }
          }
      }
  if (options.k_max >= 2 && options.marks_max >= 1 && options.order_max >= 2) report.witness = noncompact_singleton_witness();
  report.corollary2 = corollary2_scan(options.g_max, options.order_max);
  return report;
}

}  // namespace charvar

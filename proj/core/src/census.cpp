#include "charvar/census.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charvar/errors.hpp"

namespace charvar {

CohomologyOracle arrangement_oracle(const Arrangement& arr, std::uint64_t seed, Rational* shear) {
  const WiringDiagram wd = wiring_diagram(arr, seed);
  if (shear) *shear = wd.shear;
  return CohomologyOracle(randell_presentation(wd));
}

std::vector<std::size_t> projective_h1(const Arrangement& arr, const CohomologyOracle& oracle,
                                       const std::vector<RationalCharacter>& characters, std::size_t threads) {
  std::vector<RationalCharacter> affine;
  affine.reserve(characters.size());
  for (const auto& rho : characters) affine.push_back(decone_character(arr, rho));
  return parallel_h1(oracle, affine, threads);
}

std::vector<RationalCharacter> certification_points(const ComponentDescriptor& w,
                                                    const std::vector<std::int64_t>& orders) {
  std::vector<RationalCharacter> out;
  for (auto t : orders) {
    std::vector<std::int64_t> params(w.dimension());
    for (std::size_t i = 0; i < params.size(); ++i) params[i] = static_cast<std::int64_t>(i + 1) % t;
    out.push_back(w.point(RationalCharacter(params, t)));
  }
  return out;
}

namespace {

struct Context {
  const Arrangement& arr;
  const CohomologyOracle& oracle;
  const CensusOptions& options;
  CensusResult& result;
};

std::vector<Sample> evaluate(const Context& ctx, const std::vector<RationalCharacter>& points) {
  const auto h = projective_h1(ctx.arr, ctx.oracle, points, ctx.options.scan.threads);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < points.size(); ++i) out.push_back({points[i], h[i]});
  return out;
}

bool certify(const std::vector<Sample>& samples, std::int64_t q) {
  if (samples.empty()) return false;
  std::size_t lowest = samples.front().h1;
  for (const auto& s : samples) lowest = std::min(lowest, s.h1);
  return lowest >= 1 && static_cast<std::int64_t>(lowest) == q;
}

CensusComponent make_component(const Context& ctx, ComponentDescriptor w, std::string source,
                               std::optional<std::size_t> pencil, std::int64_t q, std::vector<std::string> sigma) {
  CensusComponent c{std::move(w), std::move(source), pencil, q, std::move(sigma), {}, {}, std::nullopt, 0};
  c.samples = evaluate(ctx, certification_points(c.descriptor, ctx.options.certification_orders));
  return c;
}

void finish_component(const Context& ctx, CensusComponent& c) {
  for (auto& s : evaluate(ctx, c.descriptor.points_of_order(ctx.options.order)))
    if (static_cast<std::int64_t>(s.h1) > c.generic_h1) c.jumps.push_back(std::move(s));

  if (!ctx.options.verify_thm4) return;
  std::set<RationalCharacter> points;
  for (auto t : ctx.options.thm4_orders) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < c.descriptor.dimension(); ++i) {
      count *= static_cast<std::uint64_t>(t);
      if (count > ctx.options.scan.max_characters) {
        throw BudgetExceeded("exceptional-set sampling on " + c.descriptor.label() + " exceeds the character budget");
      }
    }
    for (auto& p : c.descriptor.points_of_order(t)) points.insert(std::move(p));
  }
  c.thm4_points = points.size();
  c.exceptional.emplace();
  for (auto& s : evaluate(ctx, {points.begin(), points.end()})) {
    if (static_cast<std::int64_t>(s.h1) < c.generic_h1) {
      ctx.result.disagreements.push_back({"h1 below the generic value q on " + c.descriptor.label(), s.rho});
    }
    if (static_cast<std::int64_t>(s.h1) != c.generic_h1) c.exceptional->push_back(std::move(s));
  }
}

void add_pencil(const Context& ctx, const Pencil& pencil, const std::string& source,
                std::vector<CensusComponent>& components) {
  CensusPencil entry;
  entry.source = source;
  try {
    entry.analysis.emplace(pencil);
  } catch (const InvalidInput& e) {
    if (source == "user") throw;
    entry.note = e.what();
    ctx.result.pencils.push_back(std::move(entry));
    return;
  }
  const PencilAnalysis& pa = *entry.analysis;
  const std::size_t index = ctx.result.pencils.size();
  const auto chars = component_characters(pa.base(), pa.translation());
  entry.corollary1 = corollary1_check(pa.base(), chars);
  if (!entry.corollary1->holds) {
    ctx.result.disagreements.push_back({"translated-component bookkeeping fails for " + pencil.label(), std::nullopt});
  }

  std::vector<CensusComponent> made;
  bool certified = !chars.empty();
  for (const auto& rho_tilde : chars) {
    const auto sigma_idx = singular_support(pa.base(), pa.translation(), rho_tilde);
    std::vector<std::string> sigma;
    for (auto j : sigma_idx) sigma.push_back(pa.base().orbifold_points[j].location);
    const std::int64_t q = -pa.base().euler_characteristic() + static_cast<std::int64_t>(sigma.size());
    auto c = make_component(ctx, pa.component(rho_tilde), source, index, q, std::move(sigma));
    if (!certify(c.samples, q)) {
      certified = false;
      if (source == "user") {
        ctx.result.disagreements.push_back(
            {"oracle samples on " + c.descriptor.label() + " do not have minimum q = " + std::to_string(q),
             c.samples.front().rho});
      }
    }
    made.push_back(std::move(c));
  }
  if (pa.base().euler_characteristic() == 0) {
    // The untranslated subtorus must not lie in V_1: generic h1 there is 0.
    const ComponentDescriptor untranslated = pa.component(DualCharacter{pa.translation().moduli,
                                                                        std::vector<Integer>(pa.translation().moduli.size())});
    const auto samples = evaluate(ctx, certification_points(untranslated, ctx.options.certification_orders));
    const bool zero = std::any_of(samples.begin(), samples.end(), [](const Sample& s) { return s.h1 == 0; });
    if (!zero) {
      ctx.result.disagreements.push_back(
          {"untranslated subtorus of " + pencil.label() + " has no sample with h1 = 0", samples.front().rho});
    }
  }
  entry.certified = certified;
  if (certified || source == "user") {
    for (auto& c : made) components.push_back(std::move(c));
  } else {
    entry.note = chars.empty() ? "no positive-dimensional component" : "rejected by oracle sampling";
  }
  ctx.result.pencils.push_back(std::move(entry));
}

}  // namespace

CensusResult run_census(const Arrangement& arr, const std::vector<Pencil>& user_pencils,
                        const CensusOptions& options) {
  CensusResult result;
  result.arrangement = arr;
  result.order = options.order;
  result.seed = options.seed;
  result.lattice = build_lattice(arr);
  const CohomologyOracle oracle = arrangement_oracle(arr, options.seed, &result.shear);
  result.relator_count = oracle.presentation().relators.size();
  const Context ctx{arr, oracle, options, result};

  // Scan budget is checked before any expensive work.
  ScanOptions scan = options.scan;
  scan.order = options.order;

  std::vector<CensusComponent> components;
  for (auto& w : local_components(result.lattice)) {
    const auto q = static_cast<std::int64_t>(w.dimension()) - 1;
    components.push_back(make_component(ctx, std::move(w), "local", std::nullopt, q, {}));
    if (!certify(components.back().samples, q)) {
      result.disagreements.push_back({"local component " + components.back().descriptor.label() +
                                          " fails oracle certification",
                                      components.back().samples.front().rho});
    }
  }
  for (const auto& p : partition_search(arr, options.search)) {
    if (p.is_local()) continue;
    add_pencil(ctx, p, "partition", components);
  }
  for (const auto& p : user_pencils) add_pencil(ctx, p, "user", components);

  // Keep only maximal components; the first of two equal ones wins.
  std::vector<char> drop(components.size(), 0);
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = 0; j < components.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      const auto& a = components[i].descriptor;
      const auto& b = components[j].descriptor;
      if (!a.contained_in(b)) continue;
      const bool equal = b.contained_in(a);
      if (!equal || j < i) drop[i] = 1;
    }
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!drop[i]) result.components.push_back(std::move(components[i]));
  for (auto& c : result.components) finish_component(ctx, c);

  const auto table = torsion_scan(oracle, scan);
  result.scan.order = options.order;
  result.scan.characters = table.size();
  std::map<std::size_t, std::uint64_t> hist;
  for (const auto& e : table) {
    ++hist[e.h1];
    const RationalCharacter rho = cone_character(arr, e.rho);
    const bool inside = std::any_of(result.components.begin(), result.components.end(),
                                    [&](const CensusComponent& c) { return c.descriptor.contains(rho); });
    if (inside) {
      ++result.scan.in_components;
      if (e.h1 == 0) result.disagreements.push_back({"component point with h1 = 0", rho});
    } else if (e.h1 >= 1) {
      result.scan.isolated.push_back({rho, e.h1});
    }
  }
  result.scan.histogram.assign(hist.begin(), hist.end());
  return result;
}

}  // namespace charvar

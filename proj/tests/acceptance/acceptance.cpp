// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "charvar/census.hpp"
#include "charvar/fox.hpp"
#include "charvar/sheaf.hpp"
#include "charvar/smith.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Check {
  Verdict& v;
  std::ostringstream& log;
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      v.pass = false;
      log << " FAILED[" << what << "]";
    }
  }
};

RationalCharacter signs(const int* s) { return RationalCharacter::from_signs(std::span<const int>(s, 8)); }

const Arrangement& suciu() {
  static const Arrangement arr = fixture::suciu();
  return arr;
}

const CohomologyOracle& suciu_oracle() {
  static const CohomologyOracle o = arrangement_oracle(suciu(), 1);
  return o;
}

Verdict lattice_census() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const IntersectionLattice lat = build_lattice(suciu());
  const auto t = lat.count_with_multiplicity(3), q = lat.count_with_multiplicity(4), d = lat.count_with_multiplicity(2);
  log << "triples=" << t << " quadruples=" << q << " doubles=" << d;
  check(t == 6 && q == 1 && d == 4, "counts");
  check(lat.pair_count_holds(), "sum C(m,2) = 28");
  const auto brute = oracle::pair_count_multiplicities(suciu());
  check(brute == std::map<std::size_t, std::size_t>{{2, 4}, {3, 6}, {4, 1}}, "pair-count oracle");
  v.detail = log.str();
  return v;
}

Verdict local_components_check() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const auto comps = local_components(build_lattice(suciu()));
  std::size_t d2 = 0, d3 = 0;
  for (const auto& w : comps) {
    d2 += w.dimension() == 2;
    d3 += w.dimension() == 3;
    check(w.contains_trivial(), "through 1");
  }
  log << "components=" << comps.size() << " dim2=" << d2 << " dim3=" << d3;
  check(comps.size() == 7 && d2 == 6 && d3 == 1, "counts");
  v.detail = log.str();
  return v;
}

Verdict partition_components() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const CensusResult r = run_census(suciu(), {});
  std::set<std::string> labels;
  for (const auto& c : r.components) {
    if (c.source != "partition") continue;
    labels.insert(r.pencils[*c.pencil].analysis->pencil().label());
    check(c.descriptor.dimension() == 2 && c.descriptor.contains_trivial(), "dimension 2 through 1");
  }
  const std::set<std::string> expected{"(15|26|38)", "(28|36|45)", "(14|23|68)", "(16|27|48)", "(18|37|46)"};
  log << "certified=";
  for (const auto& l : labels) log << l;
  check(labels == expected, "partition set");
  check(r.disagreements.empty(), "no disagreements");
  const Pencil p = fixture::partition_pencil(suciu(), "15|26|38");
  auto lin = [](int a, int b, int c) { return HomogeneousPoly::linear({Rational(a), Rational(b), Rational(c)}); };
  const HomogeneousPoly P = lin(1, 0, 0) * lin(1, -1, -1), Q = lin(1, 0, -1) * lin(1, -1, 0), yz = lin(0, 1, 0) * lin(0, 0, 1);
  const bool third = p.fibers()[0].polynomial() == P && p.fibers()[1].polynomial() == Q &&
                     p.fibers()[2].polynomial() == yz && Q - P == yz;
  log << " third_fiber_yz=Q-P:" << (third ? "yes" : "no");
  check(third, "yz = Q - P");
  v.detail = log.str();
  return v;
}

Verdict translated_component() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const PencilAnalysis pa(fixture::fw_pencil(suciu()));
  const auto comps = pa.translated_components();
  log << "T(f)=" << pa.translation().group.to_string() << " translated=" << comps.size();
  check(pa.translation().group.to_string() == "Z/2", "T(f)");
  check(pa.base().euler_characteristic() == 0, "chi(S) = 0");
  check(comps.size() == 1, "one component");
  if (comps.size() == 1) {
    const auto& w = comps[0];
    check(w.dimension() == 1 && !w.contains_trivial(), "1-dimensional, translated");
    const auto pts = w.points_of_order(2);
    const std::vector<RationalCharacter> expected{signs(fixture::kRhoW), signs(fixture::kRhoWPrime)};
    log << " order2_points=";
    for (const auto& p : pts) log << p.to_string();
    check(pts == expected, "rho_W, rho'_W");
  }
  v.detail = log.str();
  return v;
}

Verdict cohomology_oracle() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const CohomologyOracle& o = suciu_oracle();
  const auto h = [&](const RationalCharacter& rho) { return o.h1(decone_character(suciu(), rho)); };
  const auto rho_w = signs(fixture::kRhoW), rho_w2 = signs(fixture::kRhoWPrime);
  const std::size_t h_triv = h(RationalCharacter::trivial(8)), h_w = h(rho_w), h_w2 = h(rho_w2);
  log << "h1(1)=" << h_triv << " h1(rho_W)=" << h_w << " h1(rho'_W)=" << h_w2;
  check(h_triv == 7 && h_w == 2 && h_w2 == 2, "values");
  auto sign_vec = [&](const RationalCharacter& rho) {
    std::vector<int> s;
    const RationalCharacter affine = decone_character(suciu(), rho);
    for (auto r : affine.residues()) s.push_back(r == 0 ? 1 : -1);
    return s;
  };
  const std::size_t s_w = oracle::sign_h1(o.presentation(), sign_vec(rho_w));
  const std::size_t s_w2 = oracle::sign_h1(o.presentation(), sign_vec(rho_w2));
  log << " sign_oracle=" << s_w << "," << s_w2;
  check(s_w == 2 && s_w2 == 2, "rational-rank oracle");
  const PencilAnalysis pa(fixture::fw_pencil(suciu()));
  const ComponentDescriptor w = pa.translated_components().at(0);
  std::size_t high = 0;
  for (const auto& p : w.points_of_order(2)) high += h(p) >= 2;
  check(high == 2, "two order-2 points with h1 >= 2");
  std::size_t sampled = 0, ones = 0;
  for (std::int64_t n : {4, 8})
    for (const auto& p : w.points_of_order(n)) {
      if (p == rho_w || p == rho_w2) continue;
      ++sampled;
      const bool one = h(p) == 1 && pa.generic_h1(p) == 1;
      ones += one;
    }
  log << " orders4,8: " << ones << "/" << sampled << " points with h1=q=1";
  check(sampled > 0 && ones == sampled, "generic value q = 1");
  v.detail = log.str();
  return v;
}

Verdict order_two_scan() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const auto start = std::chrono::steady_clock::now();
  CensusOptions opt;
  const CensusResult r = run_census(suciu(), {fixture::fw_pencil(suciu())}, opt);
  ScanOptions scan;
  const auto table = torsion_scan(suciu_oracle(), scan);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t nontrivial = 0, agree = 0, in_comp_low = 0;
  for (const auto& e : table) {
    const RationalCharacter rho = cone_character(suciu(), e.rho);
    nontrivial += !rho.is_trivial();
    bool inside = false;
    for (const auto& c : r.components) inside = inside || c.descriptor.contains(rho);
    if (inside && e.h1 == 0) ++in_comp_low;
    agree += inside == (e.h1 >= 1);
  }
  for (const auto& c : r.components)
    for (const auto& p : c.descriptor.points_of_order(2)) in_comp_low += projective_h1(suciu(), suciu_oracle(), {p})[0] == 0;
  log << "nontrivial=" << nontrivial << " classified=" << agree << "/" << table.size()
      << " component_points_with_h1=0:" << in_comp_low << " isolated=" << r.scan.isolated.size();
  char buf[32];
  std::snprintf(buf, sizeof buf, " time<5s:%s", secs < 5.0 ? "yes" : "no");
  log << buf;
  check(nontrivial == 127, "127 characters");
  check(in_comp_low == 0, "h1 >= 1 on components");
  check(agree == table.size() && r.scan.isolated.empty(), "membership");
  check(secs < 5.0, "time");
  v.detail = log.str();
  return v;
}

OrbifoldBase proper_base(int genus, const std::vector<std::int64_t>& m) {
  OrbifoldBase b;
  b.genus = genus;
  for (std::size_t j = 0; j < m.size(); ++j) b.orbifold_points.push_back({"c" + std::to_string(j), m[j]});
  return b;
}

Verdict beauville() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  std::size_t tuples = 0, agree = 0, small_trivial = 0, small = 0;
  std::function<void(std::vector<std::int64_t>&)> rec = [&](std::vector<std::int64_t>& m) {
    for (int g = 0; g <= 1; ++g) {
      ++tuples;
      const AbelianGroup t = translation_group(proper_base(g, m)).group;
      const AbelianGroup b = beauville_dual(m);
      const bool same = t == b && oracle::group_order_census(t) == oracle::beauville_order_census(m);
      agree += same;
      if (m.size() <= 1) {
        ++small;
        small_trivial += t.is_trivial() && b.is_trivial();
      }
    }
    if (m.size() == 3) return;
    for (std::int64_t k = m.empty() ? 2 : m.back(); k <= 6; ++k) {
      m.push_back(k);
      rec(m);
      m.pop_back();
    }
  };
  std::vector<std::int64_t> m;
  rec(m);
  log << "tuples=" << tuples << " isomorphic=" << agree << " s<=1 trivial=" << small_trivial << "/" << small;
  check(agree == tuples, "torsion vs dual");
  check(small_trivial == small, "s <= 1 trivial");
  v.detail = log.str();
  return v;
}

Verdict sheaf_suites() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  const SheafScanReport r = sheaf_scan(SheafScanOptions{});
  log << "models=" << r.models << " adjunction_failures=" << r.adjunction_failures
      << " euler_failures=" << r.euler_failures << " compact_singletons=" << r.compact_singletons
      << " cor2_singletons=" << r.corollary2.singletons;
  check(r.adjunction_failures == 0, "adjunction");
  check(r.compact_singletons == 0 && r.corollary2.holds, "compact |Sigma| != 1");
  check(r.euler_failures == 0, "Euler identity");
  const SheafModel w = noncompact_singleton_witness();
  const bool witness = !w.base.compact() && w.singular_support.size() == 1 && check_adjunction(w).holds &&
                       w.base.euler_characteristic() == 0;
  log << " noncompact_witness=" << (witness ? "C* with |Sigma|=1" : "missing");
  check(witness, "witness");
  v.detail = log.str();
  return v;
}

Verdict invariance() {
  Verdict v;
  std::ostringstream log;
  Check check{v, log};
  // shear
  std::vector<std::map<RationalCharacter, std::size_t>> tables;
  for (const auto& q : {Rational(1, 7), Rational(-2, 5), Rational(3, 11)}) {
    const CohomologyOracle o(randell_presentation(wiring_diagram(suciu(), q)));
    std::map<RationalCharacter, std::size_t> t;
    for (std::int64_t n : {2, 3}) {
      ScanOptions s;
      s.order = n;
      for (auto& e : torsion_scan(o, s)) t[e.rho] = e.h1;
    }
    tables.push_back(std::move(t));
  }
  const bool shear = tables[0] == tables[1] && tables[0] == tables[2];
  log << "shear:" << (shear ? "ok" : "differs");
  check(shear, "shear invariance");
  // Galois
  std::mt19937_64 rng(99);
  std::size_t galois_checked = 0, galois_bad = 0;
  for (std::int64_t n = 2; n <= 6; ++n) {
    std::uniform_int_distribution<std::int64_t> r(0, n - 1);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::int64_t> res(7);
      for (auto& x : res) x = r(rng);
      const RationalCharacter rho(res, n);
      const std::size_t h = suciu_oracle().h1(rho);
      for (std::int64_t u = 1; u < rho.order(); ++u) {
        if (std::gcd(u, rho.order()) != 1) continue;
        ++galois_checked;
        galois_bad += suciu_oracle().h1(rho.galois_conjugate(u)) != h;
      }
    }
  }
  log << " galois:" << galois_checked - galois_bad << "/" << galois_checked;
  check(galois_bad == 0, "Galois invariance");
  // Fox identity
  std::size_t fox_ok = 0;
  std::uniform_int_distribution<int> len(0, 30);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    std::uniform_int_distribution<int> g(1, static_cast<int>(n));
    FreeWord w;
    for (int i = len(rng); i > 0; --i) w.push_back(rng() % 2 ? g(rng) : -g(rng));
    LaurentPoly lhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      LaurentPoly::Exponent e(n, 0);
      e[i] = 1;
      lhs = lhs + fox_derivative(w, i, n) * (LaurentPoly::monomial(e) - LaurentPoly::constant(n, 1));
    }
    fox_ok += lhs == LaurentPoly::monomial(abelian_image(w, n)) - LaurentPoly::constant(n, 1);
  }
  log << " fox:" << fox_ok << "/1000";
  check(fox_ok == 1000, "Fox identity");
  // SNF certificates
  std::size_t snf_ok = 0, snf_total = 0;
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int k = 0; k < 300; ++k) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    std::vector<std::vector<std::int64_t>> raw(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = raw[i][j] = entry(rng);
    const SmithForm s = smith_normal_form(a);
    std::vector<Integer> factors(s.invariant_factors);
    factors.resize(cols, Integer(0));
    bool ok = s.verify(a) && abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
    if (cols <= 4)
      for (std::int64_t q : {2, 3}) ok = ok && oracle::hom_count(raw, cols, q) == oracle::hom_count_from_factors(factors, q);
    snf_ok += ok;
    ++snf_total;
  }
  log << " snf:" << snf_ok << "/" << snf_total;
  check(snf_ok == snf_total, "SNF certificates");
  v.detail = log.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"suciu lattice census", lattice_census},
      {"local components", local_components_check},
      {"partition search components", partition_components},
      {"translated component of f_W", translated_component},
      {"cohomology oracle values", cohomology_oracle},
      {"full order-2 scan", order_two_scan},
      {"Beauville cross-check", beauville},
      {"sheaf property suites", sheaf_suites},
      {"invariance suites", invariance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s  %zu  %-28s  %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "charvar/report.hpp"

#include <map>

namespace charvar {

using nlohmann::json;

namespace {

json header(const char* kind) {
  return json{{"kind", kind}, {"schema_version", kReportSchemaVersion}, {"tool_version", tool_version()}};
}

json form_json(const LinearForm& f) { return json::array({to_string(f[0]), to_string(f[1]), to_string(f[2])}); }

json labels(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

json sample_json(const Sample& s) { return json{{"character", s.rho.to_strings()}, {"h1", s.h1}}; }

json samples_json(const std::vector<Sample>& samples) {
  json out = json::array();
  for (const auto& s : samples) out.push_back(sample_json(s));
  return out;
}

json dual_json(const DualCharacter& d) {
  json moduli = json::array(), residues = json::array();
  for (const auto& m : d.moduli) moduli.push_back(to_string(m));
  for (const auto& r : d.residues) residues.push_back(to_string(r));
  return json{{"moduli", moduli}, {"residues", residues}, {"label", d.to_string()}};
}

}  // namespace

std::string tool_version() { return CHARVAR_VERSION; }

json arrangement_json(const Arrangement& arr) {
  json lines = json::array();
  for (const auto& l : arr.lines()) lines.push_back(form_json(l.coefficients));
  return json{{"lines", lines}, {"n_lines", arr.size()}, {"infinity", arr.infinity_index() + 1}};
}

json lattice_json(const IntersectionLattice& lattice) {
  json points = json::array();
  std::map<std::size_t, std::size_t> counts;
  for (const auto& p : lattice.points) {
    ++counts[p.multiplicity()];
    points.push_back(json{{"point", form_json(p.point)}, {"lines", labels(p.incident)}, {"multiplicity", p.multiplicity()}});
  }
  json by_mult = json::object();
  for (auto [m, c] : counts) by_mult[std::to_string(m)] = c;
  return json{{"points", points},
              {"counts", by_mult},
              {"doubles", lattice.count_with_multiplicity(2)},
              {"triples", lattice.count_with_multiplicity(3)},
              {"quadruples", lattice.count_with_multiplicity(4)},
              {"pair_count_holds", lattice.pair_count_holds()}};
}

json component_json(const ComponentDescriptor& w) {
  json rows = json::array();
  for (std::size_t r = 0; r < w.lattice().rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < w.lattice().cols(); ++c) row.push_back(to_string(w.lattice()(r, c)));
    rows.push_back(row);
  }
  json out{{"label", w.label()},
           {"provenance", std::string(to_string(w.provenance()))},
           {"dimension", w.dimension()},
           {"translation", w.translation().to_strings()},
           {"through_trivial", w.contains_trivial()},
           {"directions", rows}};
  if (w.induced()) out["induced"] = dual_json(*w.induced());
  return out;
}

json pencil_json(const PencilAnalysis& pa) {
  const Pencil& p = pa.pencil();
  json fibers = json::array();
  for (std::size_t k = 0; k < p.fibers().size(); ++k) {
    const Fiber& f = p.fibers()[k];
    json comps = json::array();
    for (const auto& c : f.components) {
      json jc{{"form", form_json(c.form)}, {"multiplicity", c.multiplicity}};
      if (c.line) jc["line"] = *c.line + 1;
      comps.push_back(jc);
    }
    const auto& [lambda, mu] = p.combination(k);
    fibers.push_back(json{{"location", f.location},
                          {"components", comps},
                          {"combination", json::array({to_string(lambda), to_string(mu)})},
                          {"removed", f.all_lines()},
                          {"polynomial", f.polynomial().to_string()}});
  }
  const OrbifoldBase& b = pa.base();
  json orb = json::array();
  for (const auto& q : b.orbifold_points) orb.push_back(json{{"location", q.location}, {"multiplicity", q.multiplicity}});
  const TranslationGroup& t = pa.translation();
  json moduli = json::array();
  for (const auto& m : t.moduli) moduli.push_back(to_string(m));
  json components = json::array();
  for (const auto& rho_tilde : component_characters(b, t)) {
    json c = component_json(pa.component(rho_tilde));
    json sigma = json::array();
    for (auto j : singular_support(b, t, rho_tilde)) sigma.push_back(b.orbifold_points[j].location);
    c["sigma"] = sigma;
    c["generic_h1"] = -b.euler_characteristic() + static_cast<std::int64_t>(sigma.size());
    components.push_back(c);
  }
  const auto verdict = corollary1_check(b, component_characters(b, t));
  return json{{"label", p.label()},
              {"degree", p.degree()},
              {"fibers", fibers},
              {"base", json{{"genus", b.genus},
                            {"punctures", b.punctures},
                            {"orbifold_points", orb},
                            {"euler_characteristic", b.euler_characteristic()},
                            {"b1", b.b1()}}},
              {"h1_orb", t.h1_orb.to_string()},
              {"translation_group", json{{"group", t.group.to_string()}, {"order", t.order()}, {"moduli", moduli}}},
              {"components", components},
              {"corollary1", json{{"holds", verdict.holds},
                                  {"case", verdict.case_label},
                                  {"translated_present", verdict.translated_present},
                                  {"untranslated_present", verdict.untranslated_present}}}};
}

json lattice_report(const Arrangement& arr, const IntersectionLattice& lattice) {
  json doc = header("lattice");
  doc["arrangement"] = arrangement_json(arr);
  doc["lattice"] = lattice_json(lattice);
  return doc;
}

json census_report(const CensusResult& r) {
  json doc = header("census");
  doc["arrangement"] = arrangement_json(r.arrangement);
  doc["lattice"] = lattice_json(r.lattice);
  doc["seed"] = r.seed;
  doc["shear"] = to_string(r.shear);
  doc["relators"] = r.relator_count;
  doc["order"] = r.order;

  json pencils = json::array();
  for (const auto& p : r.pencils) {
    json jp{{"source", p.source}, {"certified", p.certified}, {"note", p.note}};
    if (p.analysis) jp["pencil"] = pencil_json(*p.analysis);
    pencils.push_back(jp);
  }
  doc["pencils"] = pencils;

  json comps = json::array();
  std::map<std::string, std::size_t> by_source;
  std::size_t through_trivial = 0, translated = 0;
  for (const auto& c : r.components) {
    ++by_source[c.source];
    (c.descriptor.contains_trivial() ? through_trivial : translated) += 1;
    json jc = component_json(c.descriptor);
    jc["source"] = c.source;
    if (c.pencil) jc["pencil"] = *c.pencil;
    jc["generic_h1"] = c.generic_h1;
    jc["sigma"] = c.sigma;
    jc["samples"] = samples_json(c.samples);
    jc["jumps"] = samples_json(c.jumps);
    if (c.exceptional) {
      jc["exceptional"] = samples_json(*c.exceptional);
      jc["exceptional_checked"] = c.thm4_points;
    }
    comps.push_back(jc);
  }
  doc["components"] = comps;
  doc["summary"] = json{{"components", r.components.size()},
                        {"by_source", by_source},
                        {"through_trivial", through_trivial},
                        {"translated", translated}};

  json hist = json::object();
  for (auto [h, c] : r.scan.histogram) hist[std::to_string(h)] = c;
  doc["scan"] = json{{"order", r.scan.order},
                     {"characters", r.scan.characters},
                     {"histogram", hist},
                     {"in_components", r.scan.in_components},
                     {"isolated", samples_json(r.scan.isolated)}};

  json dis = json::array();
  for (const auto& d : r.disagreements) {
    json jd{{"what", d.what}};
    if (d.character) jd["character"] = d.character->to_strings();
    dis.push_back(jd);
  }
  doc["disagreements"] = dis;
  doc["verified"] = r.disagreements.empty();
  return doc;
}

json pencil_report(const PencilAnalysis& pa) {
  json doc = header("pencil");
  doc["arrangement"] = arrangement_json(pa.pencil().arrangement());
  doc["pencil"] = pencil_json(pa);
  return doc;
}

json scan_report(const ScanResult& scan) {
  json doc = header("scan");
  doc["arrangement"] = arrangement_json(scan.arrangement);
  doc["order"] = scan.order;
  doc["seed"] = scan.seed;
  doc["shear"] = to_string(scan.shear);
  std::map<std::size_t, std::uint64_t> counts;
  json positive = json::array();
  for (const auto& e : scan.entries) {
    ++counts[e.h1];
    if (e.h1 >= 1) positive.push_back(json{{"character", e.rho.to_strings()}, {"h1", e.h1}});
  }
  json hist = json::object();
  for (auto [h, c] : counts) hist[std::to_string(h)] = c;
  doc["characters"] = scan.entries.size();
  doc["histogram"] = hist;
  doc["positive"] = positive;
  return doc;
}

json sheaf_report(const SheafScanOptions& o, const SheafScanReport& r) {
  json doc = header("sheaf-scan");
  doc["grid"] = json{{"g_max", o.g_max}, {"k_max", o.k_max}, {"marks_max", o.marks_max}, {"order_max", o.order_max}};
  doc["models"] = r.models;
  doc["twists"] = r.twists;
  doc["adjunction_failures"] = r.adjunction_failures;
  doc["euler_failures"] = r.euler_failures;
  doc["compact_singletons"] = r.compact_singletons;
  doc["noncompact_singletons"] = r.noncompact_singletons;
  doc["corollary2"] = json{{"holds", r.corollary2.holds},
                           {"instances", r.corollary2.instances},
                           {"contradictions", r.corollary2.contradictions},
                           {"singletons", r.corollary2.singletons}};
  if (r.witness) {
    const SheafModel& w = *r.witness;
    json sigma = json::array();
    for (auto c : w.singular_support) sigma.push_back(w.base.marked[c]);
    doc["witness"] = json{{"genus", w.base.genus},
                          {"punctures", w.base.punctures},
                          {"marked", w.base.marked},
                          {"monodromy", w.monodromy.to_strings()},
                          {"sigma", sigma}};
  } else {
    doc["witness"] = nullptr;
  }
  doc["failures"] = r.failures;
  doc["holds"] = r.holds();
  return doc;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace charvar

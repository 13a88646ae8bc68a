#include "charvar/presentation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "charvar/errors.hpp"

namespace charvar {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& letter : out) letter = -letter;
  return out;
}

bool is_reduced(const FreeWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) return false;
    if (i + 1 < w.size() && w[i] == -w[i + 1]) return false;
  }
  return true;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(letter > 0 ? letter : -letter);
    if (letter < 0) out += "^-1";
  }
  return out;
}

namespace {

struct AffineLine {
  Rational slope;
  Rational intercept;
  Rational y_at(const Rational& x) const { return slope * x + intercept; }
};

}  // namespace

WiringDiagram wiring_diagram(const Arrangement& arr, const Rational& shear) {
  const auto equations = affine_equations(arr);
  const std::size_t n = equations.size();
  std::vector<AffineLine> lines;
  lines.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto& [a, b, c] = equations[g];
    const Rational b_sheared = a * shear + b;
    if (b_sheared == 0) {
      throw DegenerateProjection("line " + std::to_string(arr.affine_lines()[g] + 1) +
                                 " is vertical after shear " + to_string(shear));
    }
    lines.push_back({-a / b_sheared, -c / b_sheared});
  }

  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> by_point;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      const Rational x = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
      auto& incident = by_point[{x, lines[i].y_at(x)}];
      for (auto g : {i, j})
        if (std::find(incident.begin(), incident.end(), g) == incident.end()) incident.push_back(g);
    }

  WiringDiagram wd;
  wd.shear = shear;
  wd.n_generators = n;
  for (auto& [pt, incident] : by_point) {
    if (!wd.vertices.empty() && wd.vertices.back().x == pt.first) {
      throw DegenerateProjection("two vertices share abscissa " + to_string(pt.first));
    }
    WiringVertex v;
    v.x = pt.first;
    v.y = pt.second;
    v.generators = std::move(incident);
    wd.vertices.push_back(std::move(v));
  }

  const Rational x0 = wd.vertices.empty() ? Rational(0) : wd.vertices.front().x - 1;
  std::vector<std::size_t> order(n);
  for (std::size_t g = 0; g < n; ++g) order[g] = g;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lines[a].y_at(x0) < lines[b].y_at(x0); });
  wd.initial_order = order;

  for (auto& v : wd.vertices) {
    std::vector<std::size_t> pos;
    for (auto g : v.generators)
      pos.push_back(static_cast<std::size_t>(std::find(order.begin(), order.end(), g) - order.begin()));
    std::sort(pos.begin(), pos.end());
    for (std::size_t k = 1; k < pos.size(); ++k)
      if (pos[k] != pos[0] + k) throw InvariantViolation("strands at a vertex are not adjacent");
    v.position = pos.front();
    v.generators.assign(order.begin() + static_cast<std::ptrdiff_t>(pos.front()),
                        order.begin() + static_cast<std::ptrdiff_t>(pos.back() + 1));
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(pos.front()),
                 order.begin() + static_cast<std::ptrdiff_t>(pos.back() + 1));
  }
  return wd;
}

WiringDiagram wiring_diagram(const Arrangement& arr, std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(2, 31);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    int p = num(rng);
    if (p == 0) p = 1;
    const Rational q(Integer(p), Integer(den(rng)));
    try {
      return wiring_diagram(arr, q);
    } catch (const DegenerateProjection&) {
    }
  }
  throw DegenerateProjection("no generic shear found after " + std::to_string(attempts) + " attempts");
}

GroupPresentation randell_presentation(const WiringDiagram& wd) {
  GroupPresentation pres;
  pres.n_generators = wd.n_generators;
  // words[p] is the current loop around the strand at height p.
  std::vector<FreeWord> words(wd.n_generators);
  for (std::size_t p = 0; p < wd.n_generators; ++p)
    words[p] = {static_cast<int>(wd.initial_order[p]) + 1};

  for (const auto& v : wd.vertices) {
    const std::size_t i = v.position;
    const std::size_t m = v.generators.size();
    FreeWord block;
    for (std::size_t p = i + m; p-- > i;) block.insert(block.end(), words[p].begin(), words[p].end());
    block = free_reduce(block);
    const FreeWord block_inv = inverse(block);
    for (std::size_t l = i; l + 1 < i + m; ++l) {
      FreeWord r = words[l];
      r.insert(r.end(), block.begin(), block.end());
      const FreeWord li = inverse(words[l]);
      r.insert(r.end(), li.begin(), li.end());
      r.insert(r.end(), block_inv.begin(), block_inv.end());
      pres.relators.push_back(free_reduce(r));
    }
    // Half twist of the block, as a product of adjacent transpositions.
    for (std::size_t k = m - 1; k >= 1; --k) {
      for (std::size_t j = i; j < i + k; ++j) {
        FreeWord a = words[j];
        FreeWord b = words[j + 1];
        FreeWord conj = b;
        conj.insert(conj.end(), a.begin(), a.end());
        const FreeWord binv = inverse(b);
        conj.insert(conj.end(), binv.begin(), binv.end());
        words[j] = std::move(b);
        words[j + 1] = free_reduce(conj);
      }
    }
  }
  return pres;
}

IntMatrix exponent_matrix(const GroupPresentation& pres) {
  IntMatrix m(pres.relators.size(), pres.n_generators);
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    for (int letter : pres.relators[r]) {
      const auto g = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      if (g >= pres.n_generators) throw InvalidInput("relator letter out of range");
      m(r, g) += letter > 0 ? 1 : -1;
    }
  return m;
}

AbelianGroup abelianization(const GroupPresentation& pres) {
  return cokernel(exponent_matrix(pres), pres.n_generators);
}

}  // namespace charvar

#include "charvar/smith.hpp"

#include <algorithm>
#include <map>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Position of the smallest nonzero |entry| in the lower-right block starting at t.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_value;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      const Integer v = abs_value(d(i, j));
      if (!best || v < best_value) {
        best = {i, j};
        best_value = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  while (t < limit) {
    auto pivot = smallest_entry(d, t);
    if (!pivot) break;
    d.swap_rows(t, pivot->first);
    u.swap_rows(t, pivot->first);
    d.swap_cols(t, pivot->second);
    v.swap_cols(t, pivot->second);

    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, Integer(-q));
        u.add_row_multiple(i, t, Integer(-q));
        if (d(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, Integer(-q));
        v.add_col_multiple(j, t, Integer(-q));
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        Integer best = abs_value(d(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs_value(d(i, t)) < best) {
            best = abs_value(d(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs_value(d(t, j)) < best) {
            best = abs_value(d(t, j));
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, Integer(1));
      u.add_row_multiple(t, *offending, Integer(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.invariant_factors.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) out.invariant_factors.push_back(d(i, i));
  out.left = std::move(u);
  out.diagonal = std::move(d);
  out.right = std::move(v);
  return out;
}

bool SmithForm::verify(const IntMatrix& a) const {
  if (left.rows() != a.rows() || right.cols() != a.cols()) return false;
  if (left * a * right != diagonal) return false;
  for (std::size_t i = 0; i < diagonal.rows(); ++i)
    for (std::size_t j = 0; j < diagonal.cols(); ++j)
      if (i != j && diagonal(i, j) != 0) return false;
  for (std::size_t i = 0; i + 1 < invariant_factors.size(); ++i) {
    const Integer& x = invariant_factors[i];
    const Integer& y = invariant_factors[i + 1];
    if (x < 0 || y < 0) return false;
    if (x == 0 && y != 0) return false;
    if (x != 0 && y % x != 0) return false;
  }
  const Integer dl = determinant(left);
  const Integer dr = determinant(right);
  return abs_value(dl) == 1 && abs_value(dr) == 1;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer AbelianGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& t : torsion) order *= t;
  return order;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) append("Z/" + t.str());
  return out.empty() ? "0" : out;
}

AbelianGroup cokernel(const IntMatrix& relations, std::size_t n_generators) {
  if (relations.rows() > 0 && relations.cols() != n_generators) {
    throw InvalidInput("relation matrix width does not match generator count");
  }
  AbelianGroup group;
  if (relations.rows() == 0) {
    group.free_rank = n_generators;
    return group;
  }
  const SmithForm snf = smith_normal_form(relations);
  group.free_rank = n_generators - snf.rank;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.invariant_factors[i] > 1) group.torsion.push_back(snf.invariant_factors[i]);
  }
  return group;
}

AbelianGroup finite_group_from_order_census(const std::vector<std::size_t>& elements_of_order) {
  std::size_t total = 0;
  for (auto c : elements_of_order) total += c;
  if (total == 0) throw InvalidInput("empty group census");

  auto log_base = [](std::size_t value, std::size_t p) {
    std::size_t e = 0;
    while (value > 1) {
      if (value % p != 0) throw InvalidInput("order census is not a group");
      value /= p;
      ++e;
    }
    return e;
  };

  // prime -> exponents of cyclic p-factors (descending)
  std::map<std::size_t, std::vector<std::size_t>> primary;
  std::size_t rest = total;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::size_t> logs{0};  // logs[j] = log_p #{g : g^(p^j) = 1}
    for (std::size_t pj = p;; pj *= p) {
      std::size_t count = 0;
      for (std::size_t k = 1; k < elements_of_order.size(); ++k)
        if (pj % k == 0) count += elements_of_order[k];
      logs.push_back(log_base(count, p));
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    std::vector<std::size_t> exps;
    for (std::size_t j = 1; j + 1 < logs.size(); ++j) {
      const std::size_t at_least_j = logs[j] - logs[j - 1];
      const std::size_t at_least_next = logs[j + 1] - logs[j];
      for (std::size_t c = 0; c < at_least_j - at_least_next; ++c) exps.push_back(j);
    }
    std::sort(exps.rbegin(), exps.rend());
    primary[p] = exps;
  }

  std::size_t slots = 0;
  for (const auto& [p, exps] : primary) slots = std::max(slots, exps.size());
  std::vector<Integer> factors(slots, Integer(1));
  for (const auto& [p, exps] : primary) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pe = 1;
      for (std::size_t e = 0; e < exps[i]; ++e) pe *= static_cast<long>(p);
      factors[i] *= pe;
    }
  }
  AbelianGroup group;
  group.torsion.assign(factors.rbegin(), factors.rend());
  return group;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  std::vector<std::vector<Integer>> basis;
  if (a.rows() == 0) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<Integer> e(a.cols(), Integer(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const SmithForm snf = smith_normal_form(a);
  for (std::size_t j = snf.rank; j < a.cols(); ++j) basis.push_back(snf.right.column(j));
  return basis;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length mismatch");
  if (a.rows() == 0) return std::vector<Integer>(a.cols(), Integer(0));
  const SmithForm snf = smith_normal_form(a);
  const std::vector<Integer> ub = snf.left * std::vector<Integer>(b.begin(), b.end());
  std::vector<Integer> y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.invariant_factors[i] != 0) return std::nullopt;
      y[i] = ub[i] / snf.invariant_factors[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = Rational(a(i, j));
    work(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work(pivot, c) == 0) ++pivot;
    if (pivot == n) throw InvalidInput("matrix is singular");
    work.swap_rows(c, pivot);
    const Rational inv = 1 / work(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) work(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || work(r, c) == 0) continue;
      work.add_row_multiple(r, c, Rational(-work(r, c)));
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = work(i, n + j);
      if (denominator_of(v) != 1) throw InvalidInput("matrix is not unimodular");
      out(i, j) = numerator_of(v);
    }
  return out;
}

std::size_t rational_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      m.add_row_multiple(r, rank, Rational(-f));
    }
    ++rank;
  }
  return rank;
}

}  // namespace charvar

#include "charvar/twisted.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "charvar/errors.hpp"

namespace charvar {

CyclotomicMatrix evaluate_alexander(const AlexanderMatrix& a, const RationalCharacter& rho,
                                    std::int64_t conductor) {
  if (rho.size() != a.n_generators) throw InvalidInput("character length differs from generator count");
  std::vector<std::int64_t> k(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) k[i] = rho.residue_mod(i, conductor);
  CyclotomicMatrix m(a.rows(), a.n_generators);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(conductor));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.n_generators; ++c) {
      std::fill(sums.begin(), sums.end(), 0);
      for (const auto& [e, coef] : a.entries[r][c].terms()) {
        std::int64_t power = 0;
        for (std::size_t i = 0; i < e.size(); ++i) power += e[i] * k[i];
        sums[static_cast<std::size_t>(floor_mod(power, conductor))] += coef;
      }
      m(r, c) = CyclotomicNumber::from_power_sums(conductor, sums);
    }
  return m;
}

CohomologyOracle::CohomologyOracle(GroupPresentation pres)
    : pres_(std::move(pres)), alexander_(alexander_matrix(pres_)) {
  for (std::size_t r = 0; r < alexander_.rows(); ++r)
    for (std::size_t c = 0; c < alexander_.n_generators; ++c)
      for (const auto& [e, coef] : alexander_.entries[r][c].terms()) terms_.push_back({r, c, e, coef});
}

std::size_t CohomologyOracle::rank_at(const RationalCharacter& rho) const {
  if (rho.size() != pres_.n_generators) {
    throw InvalidInput("character has " + std::to_string(rho.size()) + " entries, presentation has " +
                       std::to_string(pres_.n_generators) + " generators");
  }
  const std::int64_t n = rho.order();
  const std::size_t rows = alexander_.rows();
  const std::size_t cols = pres_.n_generators;
  std::vector<std::int64_t> sums(rows * cols * static_cast<std::size_t>(n), 0);
  for (const auto& t : terms_) {
    std::int64_t power = 0;
    for (std::size_t i = 0; i < cols; ++i) power += t.exponent[i] * rho.residue(i);
    sums[(t.row * cols + t.col) * static_cast<std::size_t>(n) + static_cast<std::size_t>(floor_mod(power, n))] +=
        t.coefficient;
  }
  CyclotomicMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = CyclotomicNumber::from_power_sums(
          n, std::span<const std::int64_t>(sums.data() + (r * cols + c) * static_cast<std::size_t>(n),
                                           static_cast<std::size_t>(n)));
  return rank_cyclotomic(std::move(m));
}

std::size_t CohomologyOracle::h1(const RationalCharacter& rho) const {
  return pres_.n_generators - rank_at(rho) - (rho.is_trivial() ? 0 : 1);
}

std::size_t twisted_h1(const GroupPresentation& pres, const RationalCharacter& rho) {
  return CohomologyOracle(pres).h1(rho);
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("CHARVAR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

template <class Fn>
void parallel_for(std::uint64_t count, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::uint64_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<std::size_t> parallel_h1(const CohomologyOracle& oracle,
                                     const std::vector<RationalCharacter>& characters,
                                     std::size_t threads) {
  std::vector<std::size_t> out(characters.size());
  parallel_for(characters.size(), threads, [&](std::uint64_t i) { out[i] = oracle.h1(characters[i]); });
  return out;
}

std::vector<ScanEntry> torsion_scan(const CohomologyOracle& oracle, const ScanOptions& options) {
  if (options.order < 1) throw InvalidInput("scan order must be positive");
  if (options.order > options.max_order) {
    throw BudgetExceeded("scan order " + std::to_string(options.order) + " exceeds cap " +
                         std::to_string(options.max_order));
  }
  if (oracle.n_generators() > options.max_generators) {
    throw BudgetExceeded("scan over " + std::to_string(oracle.n_generators()) +
                         " generators exceeds cap " + std::to_string(options.max_generators));
  }
  // Overflow-safe count check before enumerating.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < oracle.n_generators(); ++i) {
    if (count > options.max_characters / static_cast<std::uint64_t>(options.order)) {
      throw BudgetExceeded("scan would exceed " + std::to_string(options.max_characters) + " characters");
    }
    count *= static_cast<std::uint64_t>(options.order);
  }
  CharacterEnumerator chars(oracle.n_generators(), options.order);
  std::vector<ScanEntry> out(chars.count());
  parallel_for(chars.count(), options.threads, [&](std::uint64_t i) {
    out[i].rho = chars.at(i);
    out[i].h1 = oracle.h1(out[i].rho);
  });
  return out;
}

}  // namespace charvar

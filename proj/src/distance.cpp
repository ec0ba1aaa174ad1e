// Exhaustive minimum-distance engine.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "growthcodes/code.hpp"
#include "growthcodes/errors.hpp"

namespace growthcodes {

namespace {

using u128 = unsigned __int128;

struct Range {
  std::uint64_t begin;
  std::uint64_t end;
};

// Splits [0, total) into `parts` contiguous ranges of near-equal size.
std::vector<Range> partition(std::uint64_t total, unsigned parts) {
  std::vector<Range> out;
  for (unsigned i = 0; i < parts; ++i) {
    const auto b = static_cast<std::uint64_t>(static_cast<u128>(total) * i / parts);
    const auto e = static_cast<std::uint64_t>(static_cast<u128>(total) * (i + 1) / parts);
    if (e > b) out.push_back({b, e});
  }
  return out;
}

template <typename Fn>
std::uint64_t run_partitioned(std::uint64_t total, unsigned workers, Fn&& scan) {
  const auto ranges = partition(total, workers);
  std::vector<std::uint64_t> best(ranges.size(), std::numeric_limits<std::uint64_t>::max());
  if (ranges.size() <= 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) best[i] = scan(ranges[i]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      threads.emplace_back([&, i] { best[i] = scan(ranges[i]); });
    }
    for (auto& t : threads) t.join();
  }
  return *std::min_element(best.begin(), best.end());
}

// GF(2): message index m in [1, 2^k) maps to Gray word m ^ (m >> 1); going
// from m to m + 1 flips basis row ctz(m + 1).
std::uint64_t search_gf2(const LinearCode& code, unsigned workers) {
  const std::size_t k = code.dimension();
  std::vector<PackedBits> rows;
  rows.reserve(k);
  for (std::size_t j = 0; j < k; ++j) rows.emplace_back(code.basis_vector(j));
  const std::size_t nwords = rows.front().words().size();

  const std::uint64_t total = (std::uint64_t{1} << k) - 1;
  auto scan = [&](Range r) {
    std::vector<std::uint64_t> word(nwords, 0);
    const std::uint64_t first = r.begin + 1;
    const std::uint64_t gray = first ^ (first >> 1U);
    for (std::size_t j = 0; j < k; ++j) {
      if ((gray >> j) & 1U) {
        const auto src = rows[j].words();
        for (std::size_t w = 0; w < nwords; ++w) word[w] ^= src[w];
      }
    }
    std::uint64_t best = 0;
    for (std::uint64_t w : word) best += static_cast<std::uint64_t>(std::popcount(w));
    for (std::uint64_t m = first + 1; m <= r.end; ++m) {
      const auto src = rows[static_cast<std::size_t>(std::countr_zero(m))].words();
      std::uint64_t wt = 0;
      for (std::size_t w = 0; w < nwords; ++w) {
        word[w] ^= src[w];
        wt += static_cast<std::uint64_t>(std::popcount(word[w]));
      }
      best = std::min(best, wt);
    }
    return best;
  };
  return run_partitioned(total, workers, scan);
}

template <typename T>
void add_row(std::vector<T>& acc, const std::vector<T>& row, T p) noexcept {
  const std::size_t n = acc.size();
  T* a = acc.data();
  const T* b = row.data();
  for (std::size_t x = 0; x < n; ++x) {
    const T s = static_cast<T>(a[x] + b[x]);
    a[x] = static_cast<T>(s >= p ? s - p : s);
  }
}

template <typename T>
std::uint64_t count_nonzero(const std::vector<T>& v) noexcept {
  std::uint64_t c = 0;
  for (T x : v) c += x != 0;
  return c;
}

// Odd p. Messages are enumerated projectively: block t holds the q^t
// messages whose highest nonzero digit is digit t, with that digit equal to 1.
// Block t occupies ranks [(q^t - 1)/(q - 1), (q^{t+1} - 1)/(q - 1)).
template <typename T>
std::uint64_t search_odometer(const LinearCode& code, unsigned workers) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const T p = static_cast<T>(code.field().modulus());
  std::vector<std::vector<T>> rows(k, std::vector<T>(n));
  for (std::size_t j = 0; j < k; ++j) {
    const auto src = code.generator().row(j);
    std::transform(src.begin(), src.end(), rows[j].begin(), [](Residue v) { return static_cast<T>(v); });
  }

  std::vector<std::uint64_t> block_start(k + 1, 0);
  std::uint64_t qt = 1;
  for (std::size_t t = 0; t < k; ++t) {
    block_start[t + 1] = block_start[t] + qt;
    if (t + 1 < k) qt *= p;
  }
  const std::uint64_t total = block_start[k];

  auto scan = [&](Range r) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<T> word(n);
    std::vector<std::uint64_t> digits(k);
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint64_t lo = std::max(r.begin, block_start[t]);
      const std::uint64_t hi = std::min(r.end, block_start[t + 1]);
      if (lo >= hi) continue;

      std::uint64_t offset = lo - block_start[t];
      std::fill(digits.begin(), digits.end(), 0);
      for (std::size_t s = 0; s < t; ++s) {
        digits[s] = offset % p;
        offset /= p;
      }
      word = rows[t];
      for (std::size_t s = 0; s < t; ++s) {
        for (std::uint64_t c = 0; c < digits[s]; ++c) add_row(word, rows[s], p);
      }
      best = std::min(best, count_nonzero(word));

      for (std::uint64_t m = lo + 1; m < hi; ++m) {
        std::size_t s = 0;
        // A digit wrapping from p-1 to 0 contributes one more copy of its row.
        while (digits[s] == static_cast<std::uint64_t>(p - 1)) {
          digits[s] = 0;
          add_row(word, rows[s], p);
          ++s;
        }
        ++digits[s];
        add_row(word, rows[s], p);
        best = std::min(best, count_nonzero(word));
      }
    }
    return best;
  };
  return run_partitioned(total, workers, scan);
}

}  // namespace

SearchOptions SearchOptions::from_environment() {
  SearchOptions opts;
  if (const char* env = std::getenv("GROWTHCODES_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      opts.budget = v;
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("GROWTHCODES_BUDGET is not a positive integer: ") + env);
    }
  }
  return opts;
}

BigInt message_space_size(const LinearCode& code) {
  return ipow(BigInt(code.field().modulus()), code.dimension());
}

std::uint64_t search_min_distance(const LinearCode& code, const SearchOptions& options) {
  const BigInt needed = message_space_size(code);
  if (needed > options.budget) {
    throw BudgetExceeded("exhaustive distance search", needed.str(), std::to_string(options.budget));
  }
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

  const Residue p = code.field().modulus();
  if (p == 2) return search_gf2(code, workers);
  if (p < 128) return search_odometer<std::uint8_t>(code, workers);
  if (p < 32768) return search_odometer<std::uint16_t>(code, workers);
  return search_odometer<std::uint32_t>(code, workers);
}

std::uint64_t min_distance_exhaustive(LinearCode& code, const SearchOptions& options) {
  if (code.distance_) return *code.distance_;
  const std::uint64_t d = search_min_distance(code, options);
  code.record_distance(d);
  return d;
}

}  // namespace growthcodes

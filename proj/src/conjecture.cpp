#include "mdx/conjecture.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mdx/error.hpp"

namespace mdx {
namespace {

__extension__ typedef unsigned __int128 u128;
constexpr std::size_t kMaxTableCandidates = 9;

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation of 0..n-1.
std::uint32_t permutation_rank(std::span<const Candidate> perm) {
  const std::size_t n = perm.size();
  std::uint64_t rank = 0;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto smaller_unused = static_cast<std::uint64_t>(std::popcount(~used & ((std::uint64_t{1} << perm[i]) - 1)));
    rank = rank * (n - i) + smaller_unused;
    used |= std::uint64_t{1} << perm[i];
  }
  return static_cast<std::uint32_t>(rank);
}

u128 saturating_binomial(u128 top, u128 k) {
  // C(top, k) computed as a running product of exact binomials.
  constexpr u128 kCap = u128{1} << 100;
  u128 res = 1;
  for (u128 i = 0; i < k; ++i) {
    res = res * (top - i) / (i + 1);
    if (res > kCap) return kCap;
  }
  return res;
}

// Precomputed per-ordering data for the verifier's inner loop.
class CycleKernel {
 public:
  explicit CycleKernel(std::size_t n, std::size_t m)
      : n_(n), m_(m), table_(ordering_table(n)), counts_(n, m), adj_(m), match_(m) {
    const std::size_t count = table_.size();
    forward_.resize(count);
    pre_.resize(count * n);
    suf_.resize(count * n);
    pos_.resize(count * n);
    for (std::size_t r = 0; r < count; ++r) {
      const auto& order = table_[r];
      std::uint64_t prefix = 0;
      for (std::size_t i = 0; i < n; ++i) {
        prefix |= std::uint64_t{1} << order[i];
        pre_[r * n + order[i]] = prefix;
        pos_[r * n + order[i]] = static_cast<std::uint8_t>(i);
      }
      std::uint64_t suffix = 0;
      for (std::size_t i = n; i-- > 0;) {
        suffix |= std::uint64_t{1} << order[i];
        suf_[r * n + order[i]] = suffix;
      }
      std::uint32_t fwd = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (pos_[r * n + c] < pos_[r * n + (c + 1) % n]) fwd |= 1U << c;
      }
      forward_[r] = fwd;
    }
  }

  const std::vector<std::vector<Candidate>>& table() const { return table_; }

  bool holds(std::span<const std::uint32_t> ranks, bool fast_paths) {
    if (fast_paths) {
      std::array<std::uint32_t, 32> fwd_count{};
      for (std::uint32_t r : ranks) {
        for (std::uint32_t bits = forward_[r]; bits != 0; bits &= bits - 1) ++fwd_count[std::countr_zero(bits)];
      }
      for (std::size_t c = 0; c < n_; ++c) {
        if (2 * fwd_count[c] >= m_) return true;
      }
      for (Candidate x = 0; x < n_; ++x) {
        for (Candidate y = 0; y < n_; ++y) counts_(x, y) = 0;
      }
      for (std::uint32_t r : ranks) {
        const std::uint8_t* pos = &pos_[r * n_];
        for (Candidate x = 0; x < n_; ++x) {
          for (Candidate y = 0; y < n_; ++y) {
            if (pos[x] < pos[y]) ++counts_(x, y);
          }
        }
      }
      for (Candidate c = 0; c < n_; ++c) {
        if (interval_remainder_empty(counts_, c, (c + 1) % n_)) return true;
      }
    }
    for (Candidate c = 0; c < n_; ++c) {
      if (perfect(ranks, c, (c + 1) % n_)) return true;
    }
    return false;
  }

 private:
  // Kuhn's augmenting paths on bitset rows of G(a, b).
  bool perfect(std::span<const std::uint32_t> ranks, Candidate a, Candidate b) {
    for (std::size_t v = 0; v < m_; ++v) {
      const std::uint64_t left = pre_[ranks[v] * n_ + b];
      std::uint64_t row = 0;
      for (std::size_t w = 0; w < m_; ++w) {
        if (left & suf_[ranks[w] * n_ + a]) row |= std::uint64_t{1} << w;
      }
      adj_[v] = row;
    }
    std::fill(match_.begin(), match_.end(), -1);
    for (std::size_t v = 0; v < m_; ++v) {
      std::uint64_t visited = 0;
      if (!augment(static_cast<int>(v), visited)) return false;
    }
    return true;
  }

  bool augment(int v, std::uint64_t& visited) {
    while (true) {
      const std::uint64_t bits = adj_[static_cast<std::size_t>(v)] & ~visited;
      if (bits == 0) return false;
      const int w = std::countr_zero(bits);
      visited |= std::uint64_t{1} << w;
      const int owner = match_[static_cast<std::size_t>(w)];
      if (owner < 0 || augment(owner, visited)) {
        match_[static_cast<std::size_t>(w)] = v;
        return true;
      }
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<Candidate>> table_;
  std::vector<std::uint32_t> forward_;  // bit c: c ranked above c+1 (mod n)
  std::vector<std::uint64_t> pre_;
  std::vector<std::uint64_t> suf_;
  std::vector<std::uint8_t> pos_;
  PairwiseMatrix counts_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> match_;
};

// rotation[k][r]: rank of ordering r after relabelling c -> c + k (mod n).
std::vector<std::vector<std::uint32_t>> rotation_table(const std::vector<std::vector<Candidate>>& table, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> rot(n, std::vector<std::uint32_t>(table.size()));
  std::vector<Candidate> shifted(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < table.size(); ++r) {
      for (std::size_t i = 0; i < n; ++i) shifted[i] = (table[r][i] + k) % n;
      rot[k][r] = permutation_rank(shifted);
    }
  }
  return rot;
}

// Enumerates canonical sequences with first element `first`. Stops when
// `visit` returns false.
class ShardEnumerator {
 public:
  ShardEnumerator(std::size_t n, std::size_t m, const std::vector<std::vector<std::uint32_t>>& rot)
      : n_(n), m_(m), rot_(rot), seq_(m), rotated_(m) {}

  template <typename Visit>
  void run(std::uint32_t first, Visit&& visit) {
    const auto count = static_cast<std::uint32_t>(rot_[0].size());
    std::fill(seq_.begin(), seq_.end(), first);
    while (true) {
      if (canonical() && !visit(std::span<const std::uint32_t>(seq_))) return;
      // Odometer over nondecreasing seq_[1..m-1].
      std::size_t i = m_;
      while (i > 1 && seq_[i - 1] + 1 == count) --i;
      if (i <= 1) return;
      const std::uint32_t next = seq_[i - 1] + 1;
      std::fill(seq_.begin() + static_cast<std::ptrdiff_t>(i - 1), seq_.end(), next);
    }
  }

 private:
  bool canonical() {
    for (std::size_t k = 1; k < n_; ++k) {
      const auto& rk = rot_[k];
      bool tie = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const std::uint32_t t = rk[seq_[i]];
        if (t < seq_[0]) return false;
        tie |= t == seq_[0];
        rotated_[i] = t;
      }
      if (!tie) continue;
      std::sort(rotated_.begin(), rotated_.end());
      if (std::lexicographical_compare(rotated_.begin(), rotated_.end(), seq_.begin(), seq_.end())) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t m_;
  const std::vector<std::vector<std::uint32_t>>& rot_;
  std::vector<std::uint32_t> seq_;
  std::vector<std::uint32_t> rotated_;
};

void check_sizes(std::size_t n, std::size_t m) {
  if (n < 2 || m < 1) throw std::invalid_argument("need n >= 2 and m >= 1");
  if (n > kMaxTableCandidates) throw LimitExceeded("enumeration supports at most 9 candidates");
  if (m > 64) throw LimitExceeded("enumeration supports at most 64 voters");
}

}  // namespace

bool CycleCheck::holds() const {
  return std::any_of(edges.begin(), edges.end(), [](const EdgeResult& e) { return e.perfect; });
}

CycleCheck check_cycle_condition(const VotingProfile& p, bool fast_paths) {
  const std::size_t n = p.num_candidates();
  CycleCheck out;
  if (n < 2) return out;
  const PairwiseMatrix counts = pairwise_counts(p);
  for (Candidate c = 0; c < n; ++c) {
    const Candidate next = (c + 1) % n;
    const PairDecision d = decide_perfect_matching(p, counts, c, next, fast_paths);
    out.edges.push_back({c, next, d.perfect, d.path});
  }
  return out;
}

std::vector<std::vector<Candidate>> ordering_table(std::size_t n) {
  if (n > kMaxTableCandidates) throw LimitExceeded("ordering table supports at most 9 candidates");
  std::vector<Candidate> perm(n);
  std::iota(perm.begin(), perm.end(), Candidate{0});
  std::vector<std::vector<Candidate>> table;
  table.reserve(factorial(n));
  do {
    table.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return table;
}

std::vector<std::string> default_names(std::size_t n) {
  if (n > 26) throw std::invalid_argument("default names cover at most 26 candidates");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));
  return names;
}

VotingProfile profile_from_ranks(std::size_t n, std::span<const std::uint32_t> ranks) {
  const auto table = ordering_table(n);
  std::vector<std::vector<Candidate>> orderings;
  for (std::uint32_t r : ranks) orderings.push_back(table.at(r));
  return VotingProfile(default_names(n), std::move(orderings));
}

std::uint64_t count_canonical_profiles(std::size_t n, std::size_t m) {
  if (n < 1 || n > 20) throw std::invalid_argument("count supports 1 <= n <= 20");
  const u128 orderings = factorial(n);
  u128 total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t d = n / std::gcd(k, n);
    if (m % d != 0) continue;
    total += saturating_binomial(orderings / d + m / d - 1, m / d);
  }
  total /= n;
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                            : static_cast<std::uint64_t>(total);
}

void for_each_canonical_profile(std::size_t n, std::size_t m,
                                const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  check_sizes(n, m);
  const auto table = ordering_table(n);
  const auto rot = rotation_table(table, n);
  ShardEnumerator shard(n, m, rot);
  bool stopped = false;
  for (std::uint32_t first = 0; first < table.size() && !stopped; ++first) {
    shard.run(first, [&](std::span<const std::uint32_t> seq) {
      stopped = !visit(seq);
      return !stopped;
    });
  }
}

std::vector<VotingProfile> enumerate_profiles(std::size_t n, std::size_t m) {
  check_sizes(n, m);
  const auto table = ordering_table(n);
  const auto names = default_names(n);
  std::vector<VotingProfile> out;
  for_each_canonical_profile(n, m, [&](std::span<const std::uint32_t> seq) {
    std::vector<std::vector<Candidate>> orderings;
    for (std::uint32_t r : seq) orderings.push_back(table[r]);
    out.emplace_back(names, std::move(orderings));
    return true;
  });
  return out;
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kVerified:
      return "verified";
    case VerdictStatus::kCounterexample:
      return "counterexample";
    case VerdictStatus::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

Verdict verify_conjecture(std::size_t n, std::size_t m, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Verdict verdict;
  verdict.n = n;
  verdict.m = m;
  if (n < 2 || m < 1) throw std::invalid_argument("need n >= 2 and m >= 1");
  auto finish = [&] {
    verdict.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return verdict;
  };
  if (n > kMaxTableCandidates || m > 64 || count_canonical_profiles(n, m) > options.budget) {
    verdict.status = VerdictStatus::kBudgetExceeded;
    return finish();
  }

  const auto table = ordering_table(n);
  const auto rot = rotation_table(table, n);
  const auto shards = static_cast<std::uint32_t>(table.size());

  // Per shard: canonical profiles seen, up to and including a counterexample.
  std::vector<std::uint64_t> shard_count(shards, 0);
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint32_t> best_shard{shards};
  std::vector<std::uint32_t> witness;
  std::mutex witness_mutex;
  std::exception_ptr failure;

  auto work = [&] {
    try {
      CycleKernel kernel(n, m);
      ShardEnumerator enumerator(n, m, rot);
      for (std::uint32_t s = next++; s < shards && s < best_shard.load(); s = next++) {
        std::uint64_t seen = 0;
        enumerator.run(s, [&](std::span<const std::uint32_t> seq) {
          ++seen;
          if (kernel.holds(seq, options.fast_paths)) return s < best_shard.load();
          std::lock_guard lock(witness_mutex);
          if (s < best_shard.load()) {
            best_shard = s;
            witness.assign(seq.begin(), seq.end());
          }
          return false;
        });
        shard_count[s] = seen;
      }
    } catch (...) {
      std::lock_guard lock(witness_mutex);
      if (!failure) failure = std::current_exception();
      best_shard = 0;
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.workers, 1, shards);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::uint32_t best = best_shard.load();
  const std::uint32_t counted = std::min(best + 1, shards);
  verdict.profiles_checked = std::accumulate(shard_count.begin(), shard_count.begin() + counted, std::uint64_t{0});
  if (best < shards) {
    verdict.status = VerdictStatus::kCounterexample;
    verdict.counterexample = profile_from_ranks(n, witness);
  }
  return finish();
}

}  // namespace mdx

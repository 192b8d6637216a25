#include "schubert/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert::combinat {

ColumnSequence::ColumnSequence(int m, int p, std::vector<int> entries) : m_(m), entries_(std::move(entries)) {
  if (m < 1 || p < 1) fail_argument("ColumnSequence: m and p must be positive");
  if (static_cast<int>(entries_.size()) != p) fail_argument("ColumnSequence: expected " + std::to_string(p) + " entries");
  for (int j = 0; j < p; ++j) {
    int lo = j == 0 ? 1 : entries_[j - 1] + 1;
    if (entries_[j] < lo || entries_[j] > m + p)
      fail_argument("ColumnSequence: entries must be strictly increasing in [1, m+p]");
  }
}

ColumnSequence ColumnSequence::bottom(int m, int p) {
  std::vector<int> e(p);
  std::iota(e.begin(), e.end(), 1);
  return {m, p, std::move(e)};
}

ColumnSequence ColumnSequence::top(int m, int p) {
  std::vector<int> e(p);
  std::iota(e.begin(), e.end(), m + 1);
  return {m, p, std::move(e)};
}

ColumnSequence ColumnSequence::dual() const {
  int pp = p();
  std::vector<int> d(pp);
  for (int j = 0; j < pp; ++j) d[j] = n() + 1 - entries_[pp - 1 - j];
  return {m_, pp, std::move(d)};
}

int ColumnSequence::codim() const {
  int c = 0;
  for (int j = 0; j < p(); ++j) c += entries_[j] - (j + 1);
  return c;
}

bool ColumnSequence::leq(const ColumnSequence& other) const {
  for (int j = 0; j < p(); ++j)
    if (entries_[j] > other.entries_[j]) return false;
  return true;
}

std::vector<ColumnSequence> ColumnSequence::covers() const {
  std::vector<ColumnSequence> out;
  for (int j = p() - 1; j >= 0; --j) {
    int limit = j + 1 < p() ? entries_[j + 1] : n() + 1;
    if (entries_[j] + 1 < limit) {
      auto e = entries_;
      ++e[j];
      out.emplace_back(m_, p(), std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ColumnSequence::str() const {
  std::ostringstream os;
  os << '[';
  bool wide = n() >= 10;
  for (int j = 0; j < p(); ++j) {
    if (wide && j > 0) os << ',';
    os << entries_[j];
  }
  os << ']';
  return os.str();
}

std::vector<ColumnSequence> all_sequences(int m, int p) {
  std::vector<ColumnSequence> out;
  std::vector<int> e(p);
  std::iota(e.begin(), e.end(), 1);
  const int n = m + p;
  while (true) {
    out.emplace_back(m, p, e);
    int j = p - 1;
    while (j >= 0 && e[j] == n - (p - 1 - j)) --j;
    if (j < 0) break;
    ++e[j];
    for (int i = j + 1; i < p; ++i) e[i] = e[i - 1] + 1;
  }
  return out;
}

std::size_t sequence_rank(const ColumnSequence& a) {
  // Colex-free lexicographic rank: count sequences smaller than a.
  auto binom = [](long n, long k) -> std::size_t {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
  };
  const int n = a.n(), p = a.p();
  std::size_t rank = 0;
  int prev = 0;
  for (int j = 0; j < p; ++j) {
    for (int v = prev + 1; v < a[j]; ++v) rank += binom(n - v, p - j - 1);
    prev = a[j];
  }
  return rank;
}

int cover_index(const ColumnSequence& a, const ColumnSequence& b) {
  if (a.m() != b.m() || a.p() != b.p()) fail_argument("cover_index: ambient mismatch");
  int found = 0;
  for (int j = 0; j < a.p(); ++j) {
    int d = b[j] - a[j];
    if (d == 0) continue;
    if (d != 1 || found != 0) fail_argument(b.str() + " does not cover " + a.str());
    found = j + 1;
  }
  if (found == 0) fail_argument(b.str() + " does not cover " + a.str());
  return found;
}

void Chain::push(const ColumnSequence& next) {
  cover_indices.push_back(cover_index(nodes.back(), next));
  nodes.push_back(next);
}

BigInt grassmann_degree(int m, int p) {
  if (m < 1 || p < 1) fail_argument("grassmann_degree: m and p must be positive");
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  BigInt num = factorial(m * p);
  for (int i = 1; i <= p - 1; ++i) num *= factorial(i);
  BigInt den = 1;
  for (int i = 0; i <= p - 1; ++i) den *= factorial(m + i);
  return num / den;
}

std::vector<Chain> maximal_chains(int m, int p, std::size_t cap) {
  BigInt predicted = grassmann_degree(m, p);
  if (predicted > cap)
    throw SchubertError(SchubertError::Kind::ResourceLimit,
                        "maximal_chains: " + predicted.str() + " chains exceed the cap " + std::to_string(cap));
  std::vector<Chain> out;
  const ColumnSequence top = ColumnSequence::top(m, p);
  Chain current(ColumnSequence::bottom(m, p));
  std::function<void()> walk = [&] {
    if (current.endpoint() == top) {
      out.push_back(current);
      return;
    }
    for (const auto& c : current.endpoint().covers()) {
      current.push(c);
      walk();
      current.nodes.pop_back();
      current.cover_indices.pop_back();
    }
  };
  walk();
  return out;
}

bool pieri_condition(const ColumnSequence& alpha, const ColumnSequence& alpha_prime) {
  if (alpha.m() != alpha_prime.m() || alpha.p() != alpha_prime.p()) fail_argument("pieri_condition: ambient mismatch");
  const ColumnSequence dual = alpha.dual();
  for (int j = 0; j < alpha.p(); ++j) {
    if (alpha_prime[j] > dual[j]) return false;
    if (j + 1 < alpha.p() && !(dual[j] < alpha_prime[j + 1])) return false;
  }
  return true;
}

PieriTree::PieriTree(int m, int p, std::vector<int> block_sizes, std::size_t cap)
    : m_(m), p_(p), blocks_(std::move(block_sizes)) {
  if (m < 1 || p < 1) fail_argument("pieri_tree: m and p must be positive");
  for (int r : blocks_)
    if (r < 1) fail_argument("pieri_tree: block sizes must be positive");
  total_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
  if (total_ > m * p) fail_argument("pieri_tree: block sum exceeds mp");

  // Steps (1-based) where a decrease of the cover index is permitted.
  std::vector<bool> free_step(total_ + 2, false);
  free_step[1] = true;
  for (std::size_t b = 0, acc = 0; b + 1 < blocks_.size(); ++b) {
    acc += blocks_[b];
    free_step[acc + 1] = true;
  }

  nodes_.push_back({ColumnSequence::bottom(m, p), -1, 0});
  std::vector<int> last_index{0};  // cover index of the step into each node
  std::function<void(int)> grow = [&](int idx) {
    const int depth = nodes_[idx].depth;
    if (depth == total_) return;
    const int step = depth + 1;
    const auto children = nodes_[idx].label.covers();
    for (const auto& child : children) {
      int j = cover_index(nodes_[idx].label, child);
      if (!free_step[step] && last_index[idx] > j) continue;
      if (nodes_.size() >= cap)
        throw SchubertError(SchubertError::Kind::ResourceLimit, "pieri_tree: node cap exceeded");
      nodes_.push_back({child, idx, step});
      last_index.push_back(j);
      grow(static_cast<int>(nodes_.size()) - 1);
    }
  };
  grow(0);
}

Chain PieriTree::chain_to(int index) const {
  std::vector<int> path;
  for (int i = index; i >= 0; i = nodes_[i].parent) path.push_back(i);
  Chain c(nodes_[path.back()].label);
  for (auto it = path.rbegin() + 1; it != path.rend(); ++it) c.push(nodes_[*it].label);
  return c;
}

std::vector<Chain> PieriTree::leaves() const {
  std::vector<Chain> out;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (nodes_[i].depth == total_) out.push_back(chain_to(i));
  return out;
}

std::vector<SolsPair> sols(int m, int p, const std::vector<int>& blocks, const std::vector<int>& blocks_prime, int q,
                           std::size_t cap) {
  int sum = q;
  for (int r : blocks) sum += r;
  for (int r : blocks_prime) sum += r;
  if (q < 0 || sum != m * p)
    fail_argument("sols: block sums plus q must equal mp = " + std::to_string(m * p) + ", got " + std::to_string(sum));
  PieriTree left(m, p, blocks, cap), right(m, p, blocks_prime, cap);
  auto lhs = left.leaves();
  auto rhs = right.leaves();
  std::vector<SolsPair> out;
  for (const auto& R : lhs)
    for (const auto& S : rhs)
      if (pieri_condition(R.endpoint(), S.endpoint())) out.push_back({R, S});
  return out;
}

int Partition::tau() const {
  auto tail = [](const std::vector<int>& v) { return v.empty() ? 0 : std::accumulate(v.begin() + 1, v.end(), 0); };
  return std::max(tail(blocks), tail(blocks_prime));
}

Partition default_partition(const std::vector<int>& k) {
  if (k.empty()) fail_argument("default_partition: empty condition list");
  std::vector<int> sorted = k;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Partition part;
  part.q = sorted.front();
  int left = 0, right = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (left <= right) {
      part.blocks.push_back(sorted[i]);
      left += sorted[i];
    } else {
      part.blocks_prime.push_back(sorted[i]);
      right += sorted[i];
    }
  }
  return part;
}

BigInt schubert_count(int m, int p, const std::vector<int>& k, const Partition& partition) {
  int sum = 0;
  for (int v : k) {
    if (v < 1 || v > m) fail_argument("schubert_count: each k_i must lie in [1, m]");
    sum += v;
  }
  if (sum != m * p) fail_argument("schubert_count: sum of k must equal mp");
  std::vector<int> used = partition.blocks;
  used.insert(used.end(), partition.blocks_prime.begin(), partition.blocks_prime.end());
  used.push_back(partition.q);
  std::vector<int> given = k;
  std::sort(used.begin(), used.end());
  std::sort(given.begin(), given.end());
  if (used != given) fail_argument("schubert_count: partition is not a rearrangement of k");
  return BigInt(sols(m, p, partition.blocks, partition.blocks_prime, partition.q).size());
}

BigInt schubert_count(int m, int p, const std::vector<int>& k) {
  return schubert_count(m, p, k, default_partition(k));
}

std::uint64_t kostka(const std::vector<int>& lambda, const std::vector<int>& blocks, int m, int p) {
  if (static_cast<int>(lambda.size()) > p) fail_argument("kostka: partition has more than p parts");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1])) fail_argument("kostka: malformed partition");
  }
  if (!lambda.empty() && lambda[0] > m) fail_argument("kostka: first part exceeds m");
  std::vector<int> lam(p, 0);
  std::copy(lambda.begin(), lambda.end(), lam.begin());
  std::vector<int> label(p);
  for (int j = 0; j < p; ++j) label[j] = lam[p - 1 - j] + j + 1;
  ColumnSequence target(m, p, label);
  PieriTree tree(m, p, blocks);
  std::uint64_t count = 0;
  for (const auto& node : tree.nodes())
    if (node.depth == tree.total_length() && node.label == target) ++count;
  return count;
}

}  // namespace schubert::combinat

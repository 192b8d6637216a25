#pragma once

// Exact combinatorics of Young's poset on strictly increasing p-tuples in
// [1, m+p]: covers, maximal chains, Pieri trees, Pieri's condition and the
// pair sets that index start solutions of the Pieri homotopy.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert::combinat {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// A strictly increasing sequence 1 <= a_1 < ... < a_p <= m+p, written [a_1 ... a_p].
/// Entries are 1-based; `operator[]` takes a 0-based position.
class ColumnSequence {
 public:
  ColumnSequence(int m, int p, std::vector<int> entries);

  static ColumnSequence bottom(int m, int p);  // [1, 2, ..., p]
  static ColumnSequence top(int m, int p);     // [m+1, ..., m+p]

  int m() const { return m_; }
  int p() const { return static_cast<int>(entries_.size()); }
  int n() const { return m_ + p(); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }

  /// a^v_j = m+p+1 - a_{p+1-j}
  ColumnSequence dual() const;
  /// sum_j (a_j - j), the codimension of the Schubert variety.
  int codim() const;
  /// Componentwise order of Young's poset.
  bool leq(const ColumnSequence& other) const;
  bool comparable(const ColumnSequence& other) const { return leq(other) || other.leq(*this); }
  /// Upward covers, in lexicographic order.
  std::vector<ColumnSequence> covers() const;

  std::string str() const;

  friend bool operator==(const ColumnSequence& a, const ColumnSequence& b) {
    return a.m_ == b.m_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const ColumnSequence& a, const ColumnSequence& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int m_;
  std::vector<int> entries_;
};

/// All C(m+p, p) sequences in lexicographic order.
std::vector<ColumnSequence> all_sequences(int m, int p);
/// Position of `a` in all_sequences(m, p).
std::size_t sequence_rank(const ColumnSequence& a);

/// The unique 1-based j with a_j + 1 = b_j (all other entries equal); throws if b does not cover a.
int cover_index(const ColumnSequence& a, const ColumnSequence& b);

struct Chain {
  std::vector<ColumnSequence> nodes;
  std::vector<int> cover_indices;  // cover_indices[i] = j(nodes[i], nodes[i+1])

  explicit Chain(ColumnSequence root) : nodes{std::move(root)} {}

  void push(const ColumnSequence& next);
  std::size_t length() const { return cover_indices.size(); }
  const ColumnSequence& endpoint() const { return nodes.back(); }
  /// R(k): the k-th element, or the endpoint when k exceeds the length.
  const ColumnSequence& at(std::size_t k) const { return k < nodes.size() ? nodes[k] : nodes.back(); }

  friend bool operator==(const Chain& a, const Chain& b) { return a.nodes == b.nodes; }
};

BigInt grassmann_degree(int m, int p);

/// Maximal chains from [1..p] to [m+1..m+p] in lexicographic order.
std::vector<Chain> maximal_chains(int m, int p, std::size_t cap = kDefaultNodeCap);

/// a'_1 <= m+p+1-a_p < a'_2 <= ... < a'_p <= m+p+1-a_1
bool pieri_condition(const ColumnSequence& alpha, const ColumnSequence& alpha_prime);

class PieriTree {
 public:
  struct Node {
    ColumnSequence label;
    int parent;  // -1 for the root
    int depth;
  };

  PieriTree(int m, int p, std::vector<int> block_sizes, std::size_t cap = kDefaultNodeCap);

  int m() const { return m_; }
  int p() const { return p_; }
  const std::vector<int>& block_sizes() const { return blocks_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int total_length() const { return total_; }

  /// Full-length chains, in depth-first order with covers taken lexicographically.
  std::vector<Chain> leaves() const;
  /// Chain from the root to node `index`.
  Chain chain_to(int index) const;

 private:
  int m_, p_;
  std::vector<int> blocks_;
  int total_ = 0;
  std::vector<Node> nodes_;
};

struct SolsPair {
  Chain R;
  Chain S;
};

/// Leaf pairs of T(blocks) x T(blocks_prime) whose endpoints satisfy Pieri's condition.
std::vector<SolsPair> sols(int m, int p, const std::vector<int>& blocks, const std::vector<int>& blocks_prime,
                           int q, std::size_t cap = kDefaultNodeCap);

/// Split of the condition list k into (blocks, blocks', q).
struct Partition {
  std::vector<int> blocks;
  std::vector<int> blocks_prime;
  int q = 0;

  /// max(r_1 + ... + r_a, r'_1 + ... + r'_a')
  int tau() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition default_partition(const std::vector<int>& k);

/// |sols| for a given partition of k (checked to be a rearrangement of k with sum mp).
BigInt schubert_count(int m, int p, const std::vector<int>& k, const Partition& partition);
BigInt schubert_count(int m, int p, const std::vector<int>& k);

/// Leaves of T(blocks) labelled [lambda_p+1, lambda_{p-1}+2, ..., lambda_1+p].
std::uint64_t kostka(const std::vector<int>& lambda, const std::vector<int>& blocks, int m, int p);

}  // namespace schubert::combinat

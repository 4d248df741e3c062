#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ordgraph/graph.hpp"
#include "ordgraph/types.hpp"

namespace ordgraph {

/// A frontier over the universe [0, universe). Either a sparse id list or a
/// dense bitmap with a cached population count; the two convert losslessly.
class VertexSubset {
 public:
  enum class Layout { kSparse, kDense };

  VertexSubset() = default;

  static VertexSubset empty(VertexId universe);
  /// Ids may be in any order; duplicates are kept as given.
  static VertexSubset sparse(VertexId universe, std::vector<VertexId> ids);
  /// `words` holds bit v at words[v / 64] bit (v % 64); length must be
  /// ceil(universe / 64) and bits past the universe must be clear.
  static VertexSubset dense(VertexId universe, std::vector<std::uint64_t> words);
  static VertexSubset dense_from_flags(std::span<const std::uint8_t> flags);

  Layout layout() const { return layout_; }
  bool is_dense() const { return layout_ == Layout::kDense; }
  VertexId universe() const { return universe_; }
  std::size_t size() const { return is_dense() ? population_ : ids_.size(); }
  bool empty() const { return size() == 0; }

  /// O(1) for dense; linear scan for sparse.
  bool contains(VertexId v) const;

  /// Sparse only.
  std::span<const VertexId> ids() const;
  /// Dense only.
  std::span<const std::uint64_t> words() const;

  VertexSubset to(Layout target) const;
  VertexSubset to_sparse() const { return to(Layout::kSparse); }
  VertexSubset to_dense() const { return to(Layout::kDense); }

 private:
  Layout layout_ = Layout::kSparse;
  VertexId universe_ = 0;
  std::size_t population_ = 0;
  std::vector<VertexId> ids_;
  std::vector<std::uint64_t> words_;
};

inline std::size_t bitmap_words(VertexId universe) { return (std::size_t{universe} + 63) / 64; }

inline bool test_bit(std::span<const std::uint64_t> words, VertexId v) {
  return (words[v >> 6] >> (v & 63)) & 1u;
}

/// Sum of out-degrees over the subset.
EdgeIndex out_degree_sum(const Graph& g, const VertexSubset& s);

}  // namespace ordgraph

#include "ordgraph/vertex_subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ordgraph {

VertexSubset VertexSubset::empty(VertexId universe) { return sparse(universe, {}); }

VertexSubset VertexSubset::sparse(VertexId universe, std::vector<VertexId> ids) {
  for (VertexId v : ids) {
    if (v >= universe) throw std::domain_error("vertex id outside subset universe");
  }
  VertexSubset s;
  s.layout_ = Layout::kSparse;
  s.universe_ = universe;
  s.ids_ = std::move(ids);
  return s;
}

VertexSubset VertexSubset::dense(VertexId universe, std::vector<std::uint64_t> words) {
  if (words.size() != bitmap_words(universe)) {
    throw std::invalid_argument("bitmap length does not match universe");
  }
  if (universe % 64 != 0 && !words.empty() && (words.back() >> (universe % 64)) != 0) {
    throw std::invalid_argument("bitmap has bits set past the universe");
  }
  VertexSubset s;
  s.layout_ = Layout::kDense;
  s.universe_ = universe;
  for (std::uint64_t w : words) s.population_ += static_cast<std::size_t>(std::popcount(w));
  s.words_ = std::move(words);
  return s;
}

VertexSubset VertexSubset::dense_from_flags(std::span<const std::uint8_t> flags) {
  const auto universe = static_cast<VertexId>(flags.size());
  std::vector<std::uint64_t> words(bitmap_words(universe), 0);
  for (VertexId v = 0; v < universe; ++v) {
    if (flags[v]) words[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  return dense(universe, std::move(words));
}

bool VertexSubset::contains(VertexId v) const {
  if (v >= universe_) return false;
  if (is_dense()) return test_bit(words_, v);
  return std::find(ids_.begin(), ids_.end(), v) != ids_.end();
}

std::span<const VertexId> VertexSubset::ids() const {
  if (is_dense()) throw std::logic_error("ids() on a dense subset");
  return ids_;
}

std::span<const std::uint64_t> VertexSubset::words() const {
  if (!is_dense()) throw std::logic_error("words() on a sparse subset");
  return words_;
}

VertexSubset VertexSubset::to(Layout target) const {
  if (target == layout_) return *this;
  if (target == Layout::kDense) {
    std::vector<std::uint64_t> words(bitmap_words(universe_), 0);
    for (VertexId v : ids_) words[v >> 6] |= std::uint64_t{1} << (v & 63);
    return dense(universe_, std::move(words));
  }
  std::vector<VertexId> ids;
  ids.reserve(population_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      ids.push_back(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return sparse(universe_, std::move(ids));
}

EdgeIndex out_degree_sum(const Graph& g, const VertexSubset& s) {
  EdgeIndex total = 0;
  if (s.is_dense()) {
    const auto words = s.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::uint64_t w = words[i];
      while (w != 0) {
        total += g.out_degree(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return total;
  }
  for (VertexId v : s.ids()) total += g.out_degree(v);
  return total;
}

}  // namespace ordgraph

#ifndef SPECTRA_GENERATORS_HPP
#define SPECTRA_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "spectra/graph.hpp"

namespace spectra {

/// Complete split graph CS(q, n): vertices 0..q-1 are universal, vertices
/// q..n-1 form an independent set adjacent to all of 0..q-1.
Graph complete_split(std::size_t q, std::size_t n);

/// Replaces each vertex u by the independent set {u*t, ..., u*t + t-1};
/// copies are adjacent iff the originals are.
Graph blow_up(const Graph& g, std::size_t t);

/// Uniform labeled graph with exactly m edges. Deterministic per seed
/// (std::mt19937_64 with Floyd sampling over upper-triangle pair indices).
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Number of labeled graphs on n vertices, 2^C(n,2). Requires n <= 8.
std::uint64_t labeled_count(std::size_t n);

/// The labeled graph whose upper-triangle bitmask is `mask`. Bit k of the
/// mask is the k-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// All labeled graphs on n vertices in bitmask order, as an input range.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Graph operator*() const { return labeled_graph(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    void operator++(int) { ++mask_; }
    std::uint64_t mask() const { return mask_; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  explicit LabeledGraphs(std::size_t n);

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

/// Throws GraphError for n > 8 (2^28 labeled graphs is past desk scale).
LabeledGraphs enumerate_labeled(std::size_t n);

}  // namespace spectra

#endif  // SPECTRA_GENERATORS_HPP

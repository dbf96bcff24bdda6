#pragma once

// Basis bookkeeping for V_N: multi-indices m = (m_{i,j})_{1<=i<=j<=n} with
// entries in Z_l. Slots are ordered (1,1), (1,2), ..., (1,n), (2,2), ...,
// (n,n); the linear index of v(m) is sum_s m_s l^{N-1-s}, so v(0) is 0 and
// the basis order is lexicographic in (slot, residue).

#include <cstddef>
#include <string>
#include <vector>

namespace schnizer {

using MultiIndex = std::vector<int>;

/// Integer vector over the slots; entries may be negative.
struct SignedIndex {
  std::vector<int> d;
  SignedIndex& operator+=(const SignedIndex& other);
  bool operator==(const SignedIndex&) const = default;
};

class IndexSpace {
 public:
  IndexSpace(int n, int l);

  int rank() const { return n_; }
  int order() const { return l_; }
  int slots() const { return slots_; }
  std::size_t dim() const { return dim_; }

  /// Slot number of (i, j), 1 <= i <= j <= n.
  int slot(int i, int j) const;
  /// Whether (i, j) names a slot; out-of-range pairs read as zero in forms.
  bool in_range(int i, int j) const { return 1 <= i && i <= j && j <= n_; }
  std::pair<int, int> pair_of(int s) const { return pairs_[s]; }

  MultiIndex decode(std::size_t idx) const;
  std::size_t encode(const MultiIndex& m) const;
  int digit(std::size_t idx, int s) const {
    return static_cast<int>((idx / strides_[s]) % static_cast<std::size_t>(l_));
  }
  /// Index of v(m + d), entries taken mod l.
  std::size_t shift(std::size_t idx, const SignedIndex& d) const;

  /// Unit vector eps_{i,j}.
  SignedIndex eps_index(int i, int j) const;
  /// alpha_{i,j} = sum_{k=j+1}^{i} eps_{k-1,n-i+k} - sum_{k=j}^{i} eps_{k,n-i+k}, j <= i.
  SignedIndex alpha_index(int i, int j) const;
  SignedIndex zero_index() const { return SignedIndex{std::vector<int>(slots_, 0)}; }

  std::string label(std::size_t idx) const;

 private:
  int n_;
  int l_;
  int slots_;
  std::size_t dim_;
  std::vector<std::size_t> strides_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> slot_of_;  // (i-1)*n + (j-1) -> slot or -1
};

}  // namespace schnizer

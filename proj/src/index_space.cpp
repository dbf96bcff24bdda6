#include "schnizer/index_space.hpp"

#include <limits>
#include <sstream>

#include "schnizer/cyclotomic.hpp"
#include "schnizer/errors.hpp"

namespace schnizer {

SignedIndex& SignedIndex::operator+=(const SignedIndex& other) {
  if (d.size() != other.d.size()) throw InvalidParameter("index length mismatch");
  for (std::size_t s = 0; s < d.size(); ++s) d[s] += other.d[s];
  return *this;
}

IndexSpace::IndexSpace(int n, int l) : n_(n), l_(l), slots_(n * (n + 1) / 2), dim_(1) {
  if (n < 1) throw InvalidParameter("rank must be positive");
  RootOrder check(l);
  slot_of_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      slot_of_[(i - 1) * n + (j - 1)] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
  }
  strides_.assign(slots_, 1);
  for (int s = slots_ - 1; s >= 0; --s) {
    strides_[s] = dim_;
    if (dim_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(l)) {
      throw InvalidParameter("module dimension l^N overflows");
    }
    dim_ *= static_cast<std::size_t>(l);
  }
}

int IndexSpace::slot(int i, int j) const {
  if (!in_range(i, j)) {
    throw IndexOutOfRange("slot (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 1 <= i <= j <= " + std::to_string(n_));
  }
  return slot_of_[(i - 1) * n_ + (j - 1)];
}

MultiIndex IndexSpace::decode(std::size_t idx) const {
  if (idx >= dim_) throw IndexOutOfRange("basis index " + std::to_string(idx) + " out of range");
  MultiIndex m(slots_);
  for (int s = 0; s < slots_; ++s) m[s] = digit(idx, s);
  return m;
}

std::size_t IndexSpace::encode(const MultiIndex& m) const {
  if (m.size() != static_cast<std::size_t>(slots_)) throw InvalidParameter("multi-index length");
  std::size_t idx = 0;
  for (int s = 0; s < slots_; ++s) idx += static_cast<std::size_t>(mod_floor(m[s], l_)) * strides_[s];
  return idx;
}

std::size_t IndexSpace::shift(std::size_t idx, const SignedIndex& d) const {
  std::size_t out = idx;
  for (int s = 0; s < slots_; ++s) {
    if (d.d[s] == 0) continue;
    const int old = digit(idx, s);
    const int now = static_cast<int>(mod_floor(old + d.d[s], l_));
    out = out - static_cast<std::size_t>(old) * strides_[s] + static_cast<std::size_t>(now) * strides_[s];
  }
  return out;
}

SignedIndex IndexSpace::eps_index(int i, int j) const {
  SignedIndex out = zero_index();
  out.d[slot(i, j)] = 1;
  return out;
}

SignedIndex IndexSpace::alpha_index(int i, int j) const {
  if (!(1 <= j && j <= i && i <= n_)) {
    throw IndexOutOfRange("alpha index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  SignedIndex out = zero_index();
  for (int k = j + 1; k <= i; ++k) {
    if (in_range(k - 1, n_ - i + k)) out.d[slot(k - 1, n_ - i + k)] += 1;
  }
  for (int k = j; k <= i; ++k) {
    if (in_range(k, n_ - i + k)) out.d[slot(k, n_ - i + k)] -= 1;
  }
  return out;
}

std::string IndexSpace::label(std::size_t idx) const {
  std::ostringstream out;
  out << "v(";
  const auto m = decode(idx);
  for (int s = 0; s < slots_; ++s) out << (s ? "," : "") << m[s];
  out << ")";
  return out.str();
}

}  // namespace schnizer

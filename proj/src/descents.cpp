#include "schnizer/descents.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace schnizer {

namespace {

bool is_descent(const std::vector<int>& r, int s) {
  const int len = static_cast<int>(r.size());
  for (int k = 1; k < s; ++k) {
    if (r[k - 1] < r[k]) return false;  // r_k >= r_{k+1} up to the pivot
  }
  for (int k = s; k < len; ++k) {
    if (r[k - 1] >= r[k]) return false;  // strictly increasing after it
  }
  return true;
}

bool in_box(const std::vector<int>& r, int n, DescentType type) {
  for (int k = 1; k <= static_cast<int>(r.size()); ++k) {
    const int v = r[k - 1];
    if (type == DescentType::F ? (v < k || v > n) : (v < 1 || v > k)) return false;
  }
  return true;
}

std::vector<DescentSequence> enumerate_uncached(int n, int i, DescentType type) {
  std::vector<DescentSequence> out;
  std::vector<int> r(i, 1);
  // Odometer over {1..n}^i; i <= n keeps this small at the ranks we use.
  std::vector<std::vector<int>> candidates;
  while (true) {
    if (in_box(r, n, type)) candidates.push_back(r);
    int k = i - 1;
    while (k >= 0 && r[k] == n) r[k--] = 1;
    if (k < 0) break;
    ++r[k];
  }
  for (int s = 1; s <= i; ++s) {
    for (const auto& cand : candidates) {
      if (is_descent(cand, s)) out.push_back({type, s, cand});
    }
  }
  return out;
}

}  // namespace

std::string DescentSequence::to_string() const {
  std::ostringstream out;
  out << (type == DescentType::F ? "F" : "E") << "(s=" << s << ";";
  for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k];
  out << ")";
  return out.str();
}

const std::vector<DescentSequence>& enumerate_descents(int n, int i, DescentType type) {
  if (n < 1 || i < 1 || i > n) {
    throw IndexOutOfRange("descent length " + std::to_string(i) + " for rank " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, DescentType>, std::vector<DescentSequence>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(n, i, type);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_uncached(n, i, type)).first;
  return it->second;
}

SignedIndex descent_shift(const IndexSpace& space, const DescentSequence& d) {
  SignedIndex out = space.zero_index();
  for (int k = 1; k <= d.length(); ++k) {
    out += d.type == DescentType::F ? space.eps_index(k, d.at(k)) : space.alpha_index(k, d.at(k));
  }
  return out;
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Ci: return "C_i";
    case FormKind::Di: return "D_i";
    case FormKind::C: return "C";
    case FormKind::D: return "D";
    case FormKind::CE: return "C_E";
    case FormKind::DF: return "D_F";
  }
  return "?";
}

}  // namespace schnizer

#include "doctest.h"
#include "schnizer/descents.hpp"

using namespace schnizer;

namespace {

std::vector<std::pair<int, std::vector<int>>> listing(int n, int i, DescentType t) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (const auto& d : enumerate_descents(n, i, t)) out.emplace_back(d.s, d.r);
  return out;
}

SlotValues<Rational> values(const IndexSpace& space, const std::vector<long>& v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return SlotValues<Rational>(space, c, Rational(0));
}

// Independent check of the defining inequalities.
bool satisfies(const std::vector<int>& r, int s, int n, DescentType t) {
  for (int k = 1; k <= static_cast<int>(r.size()); ++k) {
    const int x = r[k - 1];
    if (t == DescentType::F && (x < k || x > n)) return false;
    if (t == DescentType::E && (x < 1 || x > k)) return false;
    if (k < s && r[k - 1] < r[k]) return false;
    if (k >= s && k < static_cast<int>(r.size()) && r[k - 1] >= r[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("full descent sets for n = 2") {
  using P = std::vector<std::pair<int, std::vector<int>>>;
  CHECK(listing(2, 2, DescentType::F) == P{{1, {1, 2}}, {2, {2, 2}}});
  CHECK(listing(2, 2, DescentType::E) == P{{1, {1, 2}}, {2, {1, 1}}});
}

TEST_CASE("length one sequences") {
  using P = std::vector<std::pair<int, std::vector<int>>>;
  for (int n = 1; n <= 4; ++n) {
    CHECK(listing(n, 1, DescentType::E) == P{{1, {1}}});
  }
  // F-type with i = 1 ranges over r_1 in 1..n, all with pivot 1.
  CHECK(listing(1, 1, DescentType::F) == P{{1, {1}}});
  CHECK(listing(3, 1, DescentType::F) == P{{1, {1}}, {1, {2}}, {1, {3}}});
}

TEST_CASE("enumeration matches a brute-force filter") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (auto t : {DescentType::F, DescentType::E}) {
        std::size_t expected = 0;
        std::vector<int> r(i, 1);
        while (true) {
          for (int s = 1; s <= i; ++s) expected += satisfies(r, s, n, t);
          int k = i - 1;
          while (k >= 0 && r[k] == n) r[k--] = 1;
          if (k < 0) break;
          ++r[k];
        }
        const auto& seqs = enumerate_descents(n, i, t);
        CHECK(seqs.size() == expected);
        for (const auto& d : seqs) CHECK(satisfies(d.r, d.s, n, t));
      }
    }
  }
  // Full-length sets have 2^{n-1} elements.
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_descents(n, n, DescentType::F).size() == (1u << (n - 1)));
    CHECK(enumerate_descents(n, n, DescentType::E).size() == (1u << (n - 1)));
  }
  // Entries after the pivot are forced: r_k = k in the F case.
  for (const auto& d : enumerate_descents(4, 4, DescentType::F)) {
    for (int k = d.s + 1; k <= 4; ++k) CHECK(d.at(k) == k);
  }
  CHECK_THROWS_AS(enumerate_descents(2, 3, DescentType::F), IndexOutOfRange);
  CHECK_THROWS_AS(enumerate_descents(2, 0, DescentType::E), IndexOutOfRange);
}

TEST_CASE("descent shifts") {
  const IndexSpace space(2, 5);
  const auto& rf = enumerate_descents(2, 2, DescentType::F);
  CHECK(descent_shift(space, rf[0]).d == std::vector<int>{1, 0, 1});
  CHECK(descent_shift(space, rf[1]).d == std::vector<int>{0, 1, 1});
  const auto& re = enumerate_descents(2, 2, DescentType::E);
  // alpha_{1,1} + alpha_{2,2}
  CHECK(descent_shift(space, re[0]).d == std::vector<int>{0, -1, -1});
}

TEST_CASE("descent forms") {
  const IndexSpace space(2, 3);
  const auto zero = values(space, {0, 0, 0});
  for (int n = 2; n <= 3; ++n) {
    const IndexSpace sp(n, 3);
    const auto z = values(sp, std::vector<long>(sp.slots(), 0));
    for (const auto& d : enumerate_descents(n, n, DescentType::F)) {
      for (auto k : {FormKind::Ci, FormKind::C, FormKind::CE}) CHECK(descent_form(z, d, k) == 0);
    }
    for (const auto& d : enumerate_descents(n, n, DescentType::E)) {
      for (auto k : {FormKind::Di, FormKind::D, FormKind::DF}) CHECK(descent_form(z, d, k) == 0);
    }
  }
  const auto& rf = enumerate_descents(2, 2, DescentType::F);
  // C_E = c_{s-1,s-1} + staircase; by hand for the two sequences.
  CHECK(descent_form(values(space, {1, 0, 0}), rf[0], FormKind::CE) == 0);
  CHECK(descent_form(values(space, {0, 1, 0}), rf[0], FormKind::CE) == -1);
  CHECK(descent_form(values(space, {1, 0, 0}), rf[1], FormKind::CE) == 1);
  CHECK(descent_form(values(space, {0, 1, 0}), rf[1], FormKind::CE) == 0);
  CHECK_THROWS_AS(descent_form(zero, rf[0], FormKind::D), KindMismatch);
  CHECK_THROWS_AS(descent_form(zero, enumerate_descents(2, 2, DescentType::E)[0], FormKind::C),
                  KindMismatch);
  CHECK_THROWS_AS(descent_form(zero, enumerate_descents(2, 1, DescentType::F)[0], FormKind::C),
                  KindMismatch);
}

TEST_CASE("D_F at the lowest index equals lambda^{(n-s+1)}") {
  for (int n = 2; n <= 4; ++n) {
    const IndexSpace space(n, 7);
    for (long seed = 0; seed < 30; ++seed) {
      WeightVector lambda(n);
      for (int k = 0; k < n; ++k) lambda[k] = (seed * (k + 3) + k * k) % 7;
      // Unreduced m^lambda_{i,j} = sum_{k=1}^{i} lambda_{j-k+1}.
      std::vector<long> m(space.slots());
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          long acc = 0;
          for (int k = 1; k <= i; ++k) acc += lambda[j - k];
          m[space.slot(i, j)] = acc;
        }
      }
      const auto c = values(space, m);
      for (const auto& d : enumerate_descents(n, n, DescentType::E)) {
        CHECK(descent_form(c, d, FormKind::DF) == lambda_super(lambda, n - d.s + 1));
      }
    }
  }
}

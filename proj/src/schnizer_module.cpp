#include "schnizer/schnizer_module.hpp"

namespace schnizer {

MultiIndex lowest_index(const IndexSpace& space, const WeightVector& lambda) {
  const int n = space.rank();
  if (lambda.size() != static_cast<std::size_t>(n)) throw InvalidParameter("lambda needs n entries");
  MultiIndex m(space.slots(), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      long acc = 0;
      for (int k = 1; k <= i; ++k) acc += lambda[j - k];
      m[space.slot(i, j)] = static_cast<int>(mod_floor(acc, space.order()));
    }
  }
  return m;
}

}  // namespace schnizer

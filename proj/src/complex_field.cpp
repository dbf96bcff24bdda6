#include "schnizer/complex_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "schnizer/errors.hpp"

namespace schnizer {

const ComplexField& ComplexField::get(RootOrder l, double tolerance) {
  if (!(tolerance >= 0.0)) throw InvalidParameter("tolerance must be nonnegative");
  static std::mutex mutex;
  static std::map<std::pair<int, double>, std::unique_ptr<ComplexField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{l.value(), tolerance}];
  if (!slot) slot.reset(new ComplexField(l.value(), tolerance));
  return *slot;
}

ComplexField::Scalar ComplexField::eps(const Exponent& z) const {
  const Exponent i_two_pi{0.0, 2.0 * std::numbers::pi / l_};
  return std::exp(i_two_pi * z);
}

ComplexField::Scalar ComplexField::q_num(const Exponent& z) const {
  return (eps(z) - eps(-z)) / (eps_int(1) - eps_int(-1));
}

std::string ComplexField::describe() const {
  std::ostringstream out;
  out << "complex double, eps = exp(2 pi i / " << l_ << "), tolerance " << tol_;
  return out.str();
}

}  // namespace schnizer

#ifndef HYP3F2_SHIFT_VECTOR_HPP_
#define HYP3F2_SHIFT_VECTOR_HPP_

#include <array>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

#include "hyp3f2/scalar.hpp"

namespace hyp3f2 {

/// Integer shift p = (p0, p1, p2; p3, p4) of the parameter vector.
class ShiftVector {
 public:
  ShiftVector() = default;
  ShiftVector(std::initializer_list<int> values);
  explicit ShiftVector(const std::array<int, 5>& values) : v_(values) {}

  static ShiftVector unit(int i);
  /// (1,1,1;1,1)
  static ShiftVector ones();
  /// Comma-separated 5-tuple "p0,p1,p2,p3,p4".
  static ShiftVector parse(std::string_view text);

  int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  const std::array<int, 5>& data() const { return v_; }

  /// s(p) = p3 + p4 - p0 - p1 - p2.
  int saalschutz_index() const { return v_[3] + v_[4] - v_[0] - v_[1] - v_[2]; }
  int l1_norm() const;
  bool is_zero() const { return l1_norm() == 0; }

  template <typename Scalar>
  Params<Scalar> cast() const {
    Params<Scalar> out;
    for (int i = 0; i < 5; ++i) out[i] = Scalar(v_[static_cast<std::size_t>(i)]);
    return out;
  }

  /// "(p0,p1,p2;p3,p4)"
  std::string str() const;

  ShiftVector operator-() const;
  friend ShiftVector operator+(const ShiftVector& x, const ShiftVector& y);
  friend ShiftVector operator-(const ShiftVector& x, const ShiftVector& y);
  friend ShiftVector operator*(int k, const ShiftVector& x);
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
  friend auto operator<=>(const ShiftVector&, const ShiftVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ShiftVector& p) { return os << p.str(); }

 private:
  std::array<int, 5> v_{};
};

/// a + p computed in the scalar field.
template <typename Scalar>
Params<Scalar> translate(const Params<Scalar>& a, const ShiftVector& p) {
  Params<Scalar> out = a;
  for (int i = 0; i < 5; ++i) {
    if (p[i] != 0) out[i] = out[i] + Scalar(p[i]);
  }
  return out;
}

}  // namespace hyp3f2

#endif  // HYP3F2_SHIFT_VECTOR_HPP_

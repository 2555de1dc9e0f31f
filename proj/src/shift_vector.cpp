#include "hyp3f2/shift_vector.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hyp3f2 {

ShiftVector::ShiftVector(std::initializer_list<int> values) {
  if (values.size() != 5) throw std::invalid_argument("shift vector needs 5 entries");
  std::size_t i = 0;
  for (int v : values) v_[i++] = v;
}

ShiftVector ShiftVector::unit(int i) {
  if (i < 0 || i > 4) throw std::out_of_range("unit vector index out of range");
  ShiftVector e;
  e.v_[static_cast<std::size_t>(i)] = 1;
  return e;
}

ShiftVector ShiftVector::ones() { return {1, 1, 1, 1, 1}; }

ShiftVector ShiftVector::parse(std::string_view text) {
  ShiftVector out;
  std::size_t count = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    if (count >= 5) throw std::invalid_argument("shift vector has more than 5 entries");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed shift vector entry '" + token + "'");
    }
    while (used < token.size() && token[used] == ' ') ++used;
    if (used != token.size()) throw std::invalid_argument("malformed shift vector entry '" + token + "'");
    out.v_[count++] = value;
    start = end + 1;
  }
  if (count != 5) throw std::invalid_argument("shift vector needs exactly 5 entries");
  return out;
}

int ShiftVector::l1_norm() const {
  int n = 0;
  for (int v : v_) n += std::abs(v);
  return n;
}

std::string ShiftVector::str() const {
  std::ostringstream os;
  os << "(" << v_[0] << "," << v_[1] << "," << v_[2] << ";" << v_[3] << "," << v_[4] << ")";
  return os.str();
}

ShiftVector ShiftVector::operator-() const { return -1 * *this; }

ShiftVector operator+(const ShiftVector& x, const ShiftVector& y) {
  ShiftVector r;
  for (std::size_t i = 0; i < 5; ++i) r.v_[i] = x.v_[i] + y.v_[i];
  return r;
}

ShiftVector operator-(const ShiftVector& x, const ShiftVector& y) {
  ShiftVector r;
  for (std::size_t i = 0; i < 5; ++i) r.v_[i] = x.v_[i] - y.v_[i];
  return r;
}

ShiftVector operator*(int k, const ShiftVector& x) {
  ShiftVector r;
  for (std::size_t i = 0; i < 5; ++i) r.v_[i] = k * x.v_[i];
  return r;
}

}  // namespace hyp3f2

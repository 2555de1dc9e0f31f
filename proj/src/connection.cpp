#include "hyp3f2/connection.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace hyp3f2 {

LatticePath lattice_path(const ShiftVector& p) { return lattice_path(p, {0, 1, 2, 3, 4}); }

LatticePath lattice_path(const ShiftVector& p, const std::array<int, 5>& order) {
  if (std::set<int>(order.begin(), order.end()) != std::set<int>{0, 1, 2, 3, 4}) {
    throw std::invalid_argument("coordinate order must be a permutation of 0..4");
  }
  LatticePath path;
  path.reserve(static_cast<std::size_t>(p.l1_norm()));
  for (int i : order) {
    const Sign e = p[i] >= 0 ? Sign::Plus : Sign::Minus;
    for (int k = 0; k < std::abs(p[i]); ++k) path.push_back({i, e});
  }
  return path;
}

ShiftVector path_end(const LatticePath& path) {
  ShiftVector p;
  for (const Step& st : path) p[st.index] += sign_value(st.sign);
  return p;
}

SymbolicMatrix connection_matrix(const ShiftVector& p) {
  return connection_matrix(p, symbolic_params());
}

RationalFunction connection_det_formula(const ShiftVector& p) {
  return connection_det_formula(p, symbolic_params());
}

std::pair<RationalFunction, RationalFunction> upper_row(const ShiftVector& p) {
  return upper_row(p, symbolic_params());
}

ThreeTermRelation three_term_coefficients(const ShiftVector& p, const ShiftVector& q) {
  auto [u, v] = three_term_coefficients_at(p, q, symbolic_params());
  return {p, q, std::move(u), std::move(v)};
}

bool verify_chain_rule(const ShiftVector& p, const ShiftVector& q) {
  return verify_chain_rule(p, q, symbolic_params());
}

}  // namespace hyp3f2

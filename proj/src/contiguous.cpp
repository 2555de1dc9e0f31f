#include "hyp3f2/contiguous.hpp"

namespace hyp3f2 {

ContiguousMatrix contiguous_matrix(int i, Sign e) {
  return {contiguous_matrix(i, e, symbolic_params()), i, e};
}

RationalFunction contiguous_det(int i, Sign e) {
  return contiguous_det_closed_form(i, e, symbolic_params());
}

bool check_compatibility(int i, int j, Sign ei, Sign ej) {
  return check_compatibility_at(i, j, ei, ej, symbolic_params());
}

bool check_inverse_relation(int i, Sign e) {
  const auto a = symbolic_params();
  const ShiftVector step = sign_value(e) * ShiftVector::unit(i);
  const SymbolicMatrix prod =
      mul2(contiguous_matrix(i, e, a), contiguous_matrix(i, opposite(e), translate(a, step)));
  return matrix_equal(prod, identity2<RationalFunction>());
}

}  // namespace hyp3f2

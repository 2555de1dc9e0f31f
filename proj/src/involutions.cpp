#include "hyp3f2/involutions.hpp"

namespace hyp3f2 {

std::string involution_name(Involution s) {
  switch (s) {
    case Involution::Identity: return "id";
    case Involution::Tau1: return "tau1";
    case Involution::Tau2: return "tau2";
    case Involution::Sigma0: return "sigma0";
    case Involution::Sigma1: return "sigma1";
    case Involution::Sigma2: return "sigma2";
  }
  return "?";
}

}  // namespace hyp3f2

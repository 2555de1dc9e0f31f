#include "hyp3f2/render.hpp"

#include <cstdio>
#include <sstream>

namespace hyp3f2 {

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"coeff", c.str()}, {"exp", Json(std::vector<int>(e.begin(), e.end()))}});
  }
  return out;
}

Json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}};
}

Json to_json(const SymbolicMatrix& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const ShiftVector& p) { return Json(std::vector<int>(p.data().begin(), p.data().end())); }

Json to_json(const ThreeTermRelation& rel) {
  return {{"p", to_json(rel.p)}, {"q", to_json(rel.q)}, {"u", to_json(rel.u)}, {"v", to_json(rel.v)}};
}

Json to_json(const ResidualReport& r) {
  Json out = Json::array();
  for (const Residual& x : r) out.push_back({{"companion", companion_name(x.id)}, {"residual", x.residual}});
  return out;
}

namespace {

std::string latex_rational(const Rational& c) {
  if (c.is_integer()) return c.num().get_str();
  return "\\frac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
}

std::string latex_monomial(const Exponents& e) {
  std::string out;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    out += "a_{" + std::to_string(i) + "}";
    if (e[static_cast<std::size_t>(i)] > 1) out += "^{" + std::to_string(e[static_cast<std::size_t>(i)]) + "}";
  }
  return out;
}

std::string latex_shift(const ShiftVector& p) {
  std::string out = "(";
  for (int i = 0; i < 5; ++i) {
    out += std::to_string(p[i]);
    out += i == 2 ? ";" : (i == 4 ? ")" : ",");
  }
  return out;
}

}  // namespace

std::string latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto terms = p.terms();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = latex_monomial(e).empty();
    Rational mag = abs(c);
    if (it == terms.rbegin()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (constant || !mag.is_one()) out += latex_rational(mag);
    out += latex_monomial(e);
  }
  return out;
}

std::string latex(const RationalFunction& r) {
  if (r.is_polynomial()) return latex(r.numerator());
  return "\\frac{" + latex(r.numerator()) + "}{" + latex(r.denominator()) + "}";
}

std::string latex(const SymbolicMatrix& m) {
  return "\\begin{pmatrix} " + latex(m(0, 0)) + " & " + latex(m(0, 1)) + " \\\\ " + latex(m(1, 0)) + " & " +
         latex(m(1, 1)) + " \\end{pmatrix}";
}

std::string latex(const ThreeTermRelation& rel) {
  return "h(a) = \\left(" + latex(rel.u) + "\\right) h(a + " + latex_shift(rel.p) + ") + \\left(" + latex(rel.v) +
         "\\right) h(a + " + latex_shift(rel.q) + ")";
}

std::string text(const SymbolicMatrix& m) {
  std::ostringstream os;
  os << "[0,0] " << m(0, 0).str() << "\n"
     << "[0,1] " << m(0, 1).str() << "\n"
     << "[1,0] " << m(1, 0).str() << "\n"
     << "[1,1] " << m(1, 1).str() << "\n";
  return os.str();
}

std::string text(const ThreeTermRelation& rel) {
  std::ostringstream os;
  os << "h(a) = u h(a + p) + v h(a + q)\n"
     << "p = " << rel.p << "\n"
     << "q = " << rel.q << "\n"
     << "u = " << rel.u.str() << "\n"
     << "v = " << rel.v.str() << "\n";
  return os.str();
}

std::string text(const ResidualReport& r) {
  std::string out;
  char buf[96];
  for (const Residual& x : r) {
    std::snprintf(buf, sizeof buf, "%-12s %.3e\n", companion_name(x.id).c_str(), x.residual);
    out += buf;
  }
  return out;
}

}  // namespace hyp3f2

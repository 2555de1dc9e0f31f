#include "hyp3f2/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hyp3f2 {

namespace {

Matrix5 identity5() {
  Matrix5 m;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) m(i, j) = Rational(i == j ? 1 : 0);
  }
  return m;
}

Params<Rational> zero5() {
  Params<Rational> v;
  for (int i = 0; i < 5; ++i) v[i] = Rational(0);
  return v;
}

Params<Rational> vec(Rational x0, Rational x1, Rational x2, Rational x3, Rational x4) {
  Params<Rational> v;
  v << x0, x1, x2, x3, x4;
  return v;
}

Matrix5 matmul(const Matrix5& x, const Matrix5& y) {
  Matrix5 r;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      Rational s(0);
      for (int k = 0; k < 5; ++k) {
        if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
      }
      r(i, j) = s;
    }
  }
  return r;
}

Params<Rational> matvec(const Matrix5& x, const Params<Rational>& v) {
  Params<Rational> r;
  for (int i = 0; i < 5; ++i) {
    Rational s(0);
    for (int k = 0; k < 5; ++k) s += x(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

bool vec_equal(const Params<Rational>& x, const Params<Rational>& y) {
  for (int i = 0; i < 5; ++i) {
    if (!(x[i] == y[i])) return false;
  }
  return true;
}

const Params<Rational>& saalschutz_row() {
  static const Params<Rational> row = vec(-1, -1, -1, 1, 1);
  return row;
}

bool in_set(const std::vector<AffineTransform>& set, const AffineTransform& g) {
  return std::any_of(set.begin(), set.end(), [&](const AffineTransform& h) { return h == g; });
}

}  // namespace

AffineTransform::AffineTransform() : linear_(identity5()), translation_(zero5()) {}

AffineTransform::AffineTransform(Matrix5 linear, Params<Rational> translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {}

AffineTransform AffineTransform::from_involution(Involution s) {
  const Params<Rational> t = apply_involution(s, zero5());
  Matrix5 l;
  for (int j = 0; j < 5; ++j) {
    Params<Rational> e = zero5();
    e[j] = Rational(1);
    const Params<Rational> img = apply_involution(s, e);
    for (int i = 0; i < 5; ++i) l(i, j) = img[i] - t[i];
  }
  return {l, t};
}

AffineTransform AffineTransform::compose(const AffineTransform& other) const {
  Params<Rational> t = matvec(linear_, other.translation_);
  for (int i = 0; i < 5; ++i) t[i] += translation_[i];
  return {matmul(linear_, other.linear_), t};
}

AffineTransform AffineTransform::inverse() const {
  // Gauss-Jordan on [L | I].
  Matrix5 a = linear_;
  Matrix5 inv = identity5();
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    while (pivot < 5 && a(pivot, col).is_zero()) ++pivot;
    if (pivot == 5) throw std::domain_error("affine map is not invertible");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational d = a(col, col);
    for (int j = 0; j < 5; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < 5; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (int j = 0; j < 5; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  Params<Rational> t = matvec(inv, translation_);
  for (int i = 0; i < 5; ++i) t[i] = -t[i];
  return {inv, t};
}

Rational AffineTransform::linear_determinant() const {
  Matrix5 a = linear_;
  Rational det(1);
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    while (pivot < 5 && a(pivot, col).is_zero()) ++pivot;
    if (pivot == 5) return Rational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < 5; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) / a(col, col);
      for (int j = col; j < 5; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

bool AffineTransform::is_identity() const { return *this == AffineTransform(); }

bool AffineTransform::is_integral() const {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (!linear_(i, j).is_integer()) return false;
    }
  }
  return true;
}

std::array<Polynomial, kNumSymbols> AffineTransform::polynomial_images() const {
  std::array<Polynomial, kNumSymbols> out;
  for (int i = 0; i < 5; ++i) {
    Polynomial v(translation_[i]);
    for (int j = 0; j < 5; ++j) {
      if (!linear_(i, j).is_zero()) v += linear_(i, j) * Polynomial::symbol(j);
    }
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

ShiftVector AffineTransform::act(const ShiftVector& p) const {
  const Params<Rational> img = matvec(linear_, p.cast<Rational>());
  ShiftVector out;
  for (int i = 0; i < 5; ++i) {
    if (!img[i].is_integer()) throw std::domain_error("linear part does not preserve the integer lattice");
    out[i] = static_cast<int>(img[i].num().get_si());
  }
  return out;
}

Params<Rational> AffineTransform::act_linear(const Params<Rational>& x) const { return matvec(linear_, x); }

std::vector<Rational> AffineTransform::linear_key() const {
  std::vector<Rational> k;
  k.reserve(25);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) k.push_back(linear_(i, j));
  }
  return k;
}

std::vector<Rational> AffineTransform::key() const {
  std::vector<Rational> k = linear_key();
  for (int i = 0; i < 5; ++i) k.push_back(translation_[i]);
  return k;
}

std::string GroupElement::word_str() const {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (n) out += " ";
    out += generator_name(word[n]);
  }
  return out;
}

std::vector<AffineTransform> generators() {
  std::vector<AffineTransform> g;
  for (Involution s : kAllInvolutions) g.push_back(AffineTransform::from_involution(s));
  return g;
}

std::string generator_name(int index) {
  if (index < 0 || index >= static_cast<int>(kAllInvolutions.size())) {
    throw std::out_of_range("generator index out of range");
  }
  return involution_name(kAllInvolutions[static_cast<std::size_t>(index)]);
}

std::vector<GroupElement> enumerate_group(std::size_t bound) {
  const std::vector<AffineTransform> gens = generators();
  std::map<std::vector<Rational>, std::size_t> seen;
  std::vector<GroupElement> elements{{AffineTransform::identity(), {}}};
  seen.emplace(elements[0].transform.key(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 1; g < gens.size(); ++g) {
      AffineTransform next = gens[g].compose(elements[cur].transform);
      auto key = next.key();
      if (seen.count(key)) continue;
      if (elements.size() >= bound) throw ClosureOverflow("group closure exceeded the safety bound");
      std::vector<int> word{static_cast<int>(g)};
      word.insert(word.end(), elements[cur].word.begin(), elements[cur].word.end());
      seen.emplace(std::move(key), elements.size());
      elements.push_back({std::move(next), std::move(word)});
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

std::vector<AffineTransform> closure(const std::vector<AffineTransform>& gens, std::size_t bound) {
  std::vector<AffineTransform> elements{AffineTransform::identity()};
  std::map<std::vector<Rational>, bool> seen{{elements[0].key(), true}};
  for (std::size_t cur = 0; cur < elements.size(); ++cur) {
    for (const AffineTransform& g : gens) {
      AffineTransform next = g.compose(elements[cur]);
      if (!seen.emplace(next.key(), true).second) continue;
      if (elements.size() >= bound) throw ClosureOverflow("group closure exceeded the safety bound");
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

AffineTransform rho(int i) {
  const AffineTransform s0 = AffineTransform::from_involution(Involution::Sigma0);
  const AffineTransform t1 = AffineTransform::from_involution(Involution::Tau1);
  const AffineTransform t2 = AffineTransform::from_involution(Involution::Tau2);
  switch (i) {
    case 1: return t1 * s0 * t1 * s0 * t1;
    case 2: return t2 * s0 * t2 * s0 * t2;
    case 3: return t1 * t2 * t1;
    default: throw std::out_of_range("rho index must be 1, 2 or 3");
  }
}

Params<Rational> fixed_point() { return vec(Rational(2, 3), Rational(2, 3), Rational(2, 3), 1, 1); }

std::vector<CheckItem> group_check() {
  std::vector<CheckItem> items;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  };

  std::vector<GroupElement> group;
  try {
    group = enumerate_group();
  } catch (const ClosureOverflow& e) {
    add("order", false, e.what());
    return items;
  }
  add("order=" + std::to_string(group.size()), group.size() == 72);

  std::map<std::vector<Rational>, bool> linear_parts;
  for (const GroupElement& g : group) linear_parts.emplace(g.transform.linear_key(), true);
  add("linear parts=" + std::to_string(linear_parts.size()), linear_parts.size() == 72);

  const std::vector<AffineTransform> gens = generators();
  bool involutive = true;
  for (const AffineTransform& g : gens) involutive = involutive && (g * g).is_identity();
  add("generators involutive", involutive);

  bool s_invariant = true;
  for (const GroupElement& g : group) {
    const Matrix5& l = g.transform.linear();
    Rational shift(0);
    for (int j = 0; j < 5; ++j) {
      Rational col(0);
      for (int i = 0; i < 5; ++i) col += saalschutz_row()[i] * l(i, j);
      s_invariant = s_invariant && col == saalschutz_row()[j];
      shift += saalschutz_row()[j] * g.transform.translation()[j];
    }
    s_invariant = s_invariant && shift.is_zero();
  }
  add("s-invariance", s_invariant);

  bool fixed = true;
  for (const GroupElement& g : group) fixed = fixed && vec_equal(g.transform.apply(fixed_point()), fixed_point());
  add("fixed point", fixed, "c=(2/3,2/3,2/3;1,1)");

  bool lattice = true;
  for (const GroupElement& g : group) {
    const Rational d = g.transform.linear_determinant();
    lattice = lattice && g.transform.is_integral() && (d == Rational(1) || d == Rational(-1));
  }
  add("lattice automorphisms", lattice);

  const AffineTransform s0 = gens[3];
  bool rho_ok = true;
  for (int i = 1; i <= 2; ++i) {
    const AffineTransform r = rho(i);
    rho_ok = rho_ok && (r * r).is_identity();
    rho_ok = rho_ok && r * s0 * r == gens[static_cast<std::size_t>(3 + i)];
    rho_ok = rho_ok && s0 * r * s0 == gens[static_cast<std::size_t>(i)];
  }
  add("rho relations", rho_ok);

  const std::vector<AffineTransform> rhos = closure({rho(1), rho(2)});
  const std::vector<AffineTransform> taus = closure({gens[1], gens[2]});
  add("rho subgroup order=" + std::to_string(rhos.size()), rhos.size() == 6);
  add("tau subgroup order=" + std::to_string(taus.size()), taus.size() == 6);
  bool commute = true;
  for (const auto& x : rhos) {
    for (const auto& y : taus) commute = commute && x * y == y * x;
  }
  add("factors commute", commute);
  bool swap = true;
  for (const auto& x : rhos) swap = swap && in_set(taus, s0 * x * s0);
  for (const auto& y : taus) swap = swap && in_set(rhos, s0 * y * s0);
  add("sigma0 swaps factors", swap);

  const Rational t(1, 3), m(-2, 3);
  const Params<Rational> u[3] = {vec(m, t, t, 0, 0), vec(t, m, t, 0, 0), vec(t, t, m, 0, 0)};
  const Params<Rational> v[3] = {vec(m, m, m, -1, -1), vec(t, t, t, 1, 0), vec(t, t, t, 0, 1)};
  const Params<Rational> w = vec(-t, -t, -t, 0, 0);
  auto maps = [](const AffineTransform& g, const Params<Rational>& from, const Params<Rational>& to) {
    return vec_equal(g.act_linear(from), to);
  };
  bool basis = true;
  for (int i = 1; i <= 2; ++i) {
    const AffineTransform r = rho(i), tau = gens[static_cast<std::size_t>(i)];
    for (int k = 0; k < 3; ++k) {
      const int swapped = k == 0 ? i : (k == i ? 0 : k);
      basis = basis && maps(r, u[k], u[swapped]) && maps(r, v[k], v[k]);
      basis = basis && maps(tau, v[k], v[swapped]) && maps(tau, u[k], u[k]);
    }
  }
  for (int k = 0; k < 3; ++k) basis = basis && maps(s0, u[k], v[k]) && maps(s0, v[k], u[k]);
  for (const GroupElement& g : group) basis = basis && maps(g.transform, w, w);
  add("basis permutations", basis);

  const std::vector<AffineTransform> g0 = closure({rho(1), rho(2), rho(3)});
  bool perms = g0.size() == 12;
  for (const AffineTransform& g : g0) {
    bool zero_t = true;
    for (int i = 0; i < 5; ++i) zero_t = zero_t && g.translation()[i].is_zero();
    perms = perms && zero_t;
    for (int i = 0; i < 5; ++i) {
      int ones = 0, target = -1;
      for (int j = 0; j < 5; ++j) {
        if (g.linear()(i, j) == Rational(1)) {
          ++ones;
          target = j;
        } else if (!g.linear()(i, j).is_zero()) {
          ones = 99;
        }
      }
      perms = perms && ones == 1 && ((i < 3) == (target < 3));
    }
  }
  add("G0 coordinate permutations order=" + std::to_string(g0.size()), perms);
  return items;
}

bool in_fundamental_domain(const ShiftVector& p) {
  return p[0] >= p[1] && p[1] >= p[2] && p[4] >= p[3] && p[3] >= p[0] - p[1];
}

std::pair<GroupElement, ShiftVector> reduce_to_fundamental_domain(const ShiftVector& p) {
  const std::vector<GroupElement> group = enumerate_group();
  const GroupElement* best = nullptr;
  ShiftVector best_image;
  for (const GroupElement& g : group) {
    const ShiftVector img = g.transform.act(p);
    if (!in_fundamental_domain(img)) continue;
    if (best == nullptr || img < best_image) {
      best = &g;
      best_image = img;
    }
  }
  if (best == nullptr) throw std::logic_error("no group image lies in the fundamental domain");
  return {*best, best_image};
}

int swap_character(const AffineTransform& g) {
  const Params<Rational> img = g.act_linear(vec(Rational(1, 3), Rational(-2, 3), Rational(1, 3), 0, 0));
  return img[3].is_zero() && img[4].is_zero() ? 1 : -1;
}

namespace {

RationalFunction signed_by(const RationalFunction& w, int chi, int index) {
  return (chi < 0 && index % 2 != 0) ? -w : w;
}

}  // namespace

ThreeTermRelation transport_relation(const ThreeTermRelation& rel, const AffineTransform& g) {
  const auto images = g.inverse().polynomial_images();
  const int chi = swap_character(g);
  return {g.act(rel.p), g.act(rel.q), signed_by(rel.u.substitute(images), chi, rel.p.saalschutz_index()),
          signed_by(rel.v.substitute(images), chi, rel.q.saalschutz_index())};
}

bool verify_covariance(const ShiftVector& p, const ShiftVector& q, const GroupElement& g) {
  const ThreeTermRelation moved = transport_relation(three_term_coefficients(p, q), g.transform);
  const ThreeTermRelation direct = three_term_coefficients(moved.p, moved.q);
  return rf_equal(moved.u, direct.u) && rf_equal(moved.v, direct.v);
}

bool verify_covariance_unsigned(const ShiftVector& p, const ShiftVector& q, const GroupElement& g) {
  const ThreeTermRelation rel = three_term_coefficients(p, q);
  const auto images = g.transform.inverse().polynomial_images();
  const ThreeTermRelation direct = three_term_coefficients(g.transform.act(p), g.transform.act(q));
  return rf_equal(rel.u.substitute(images), direct.u) && rf_equal(rel.v.substitute(images), direct.v);
}

std::vector<OrbitRelation> orbit_relations(const ShiftVector& p, const ShiftVector& q) {
  return orbit_relations(three_term_coefficients(p, q));
}

std::vector<OrbitRelation> orbit_relations(const ThreeTermRelation& rel) {
  std::vector<OrbitRelation> out;
  std::map<std::pair<ShiftVector, ShiftVector>, bool> seen;
  for (const GroupElement& g : enumerate_group()) {
    const auto shifts = std::make_pair(g.transform.act(rel.p), g.transform.act(rel.q));
    if (!seen.emplace(shifts, true).second) continue;
    out.push_back({g, transport_relation(rel, g.transform)});
  }
  return out;
}

}  // namespace hyp3f2

#include "prolong/polynomial.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace prolong {

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

WeightedPolynomial WeightedPolynomial::constant(int k, Rat c) {
  WeightedPolynomial p(k);
  Monomial m{std::vector<std::uint32_t>(2 * (k + 1) + 1, 0)};
  p.add_term(m, c);
  return p;
}

WeightedPolynomial WeightedPolynomial::var_x(int k, int i) {
  if (i < 0 || i > k) throw std::out_of_range("var_x: index out of range");
  WeightedPolynomial p(k);
  Monomial m{std::vector<std::uint32_t>(2 * (k + 1) + 1, 0)};
  m.e[i] = 1;
  p.add_term(m, 1);
  return p;
}

WeightedPolynomial WeightedPolynomial::var_y(int k, int i) {
  if (i < 0 || i > k) throw std::out_of_range("var_y: index out of range");
  WeightedPolynomial p(k);
  Monomial m{std::vector<std::uint32_t>(2 * (k + 1) + 1, 0)};
  m.e[k + 1 + i] = 1;
  p.add_term(m, 1);
  return p;
}

WeightedPolynomial WeightedPolynomial::var_z(int k) {
  WeightedPolynomial p(k);
  Monomial m{std::vector<std::uint32_t>(2 * (k + 1) + 1, 0)};
  m.e[2 * (k + 1)] = 1;
  p.add_term(m, 1);
  return p;
}

void WeightedPolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (m.e.size() != var_count()) throw std::invalid_argument("add_term: wrong monomial size");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightedPolynomial WeightedPolynomial::operator+(const WeightedPolynomial& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("polynomial k mismatch");
  WeightedPolynomial out = *this;
  for (auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

WeightedPolynomial WeightedPolynomial::operator-(const WeightedPolynomial& rhs) const {
  return *this + rhs.scaled(-1);
}

WeightedPolynomial WeightedPolynomial::operator*(const WeightedPolynomial& rhs) const {
  if (k_ != rhs.k_) throw std::invalid_argument("polynomial k mismatch");
  WeightedPolynomial out(k_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

WeightedPolynomial WeightedPolynomial::scaled(const Rat& c) const {
  WeightedPolynomial out(k_);
  if (c == 0) return out;
  for (auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

bool WeightedPolynomial::operator==(const WeightedPolynomial& rhs) const {
  return k_ == rhs.k_ && terms_ == rhs.terms_;
}

namespace {
WeightedPolynomial partial(const WeightedPolynomial& p, std::size_t idx) {
  WeightedPolynomial out(p.k());
  for (auto& [m, c] : p.terms()) {
    if (m.e[idx] == 0) continue;
    Monomial d = m;
    d.e[idx] -= 1;
    out.add_term(d, c * Rat(m.e[idx]));
  }
  return out;
}
}  // namespace

WeightedPolynomial WeightedPolynomial::dx(int i) const {
  if (i < 0 || i > k_) throw std::out_of_range("dx: index out of range");
  return partial(*this, static_cast<std::size_t>(i));
}

WeightedPolynomial WeightedPolynomial::dy(int i) const {
  if (i < 0 || i > k_) throw std::out_of_range("dy: index out of range");
  return partial(*this, static_cast<std::size_t>(k_ + 1 + i));
}

WeightedPolynomial WeightedPolynomial::dz() const { return partial(*this, 2 * (k_ + 1)); }

Rat WeightedPolynomial::evaluate(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                 const Rat& z) const {
  if (xs.size() != static_cast<std::size_t>(k_ + 1) || ys.size() != xs.size())
    throw std::invalid_argument("evaluate: coordinate count mismatch");
  Rat total = 0;
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i <= k_; ++i) {
      for (std::uint32_t r = 0; r < m.e[i]; ++r) t *= xs[i];
      for (std::uint32_t r = 0; r < m.e[k_ + 1 + i]; ++r) t *= ys[i];
    }
    for (std::uint32_t r = 0; r < m.e[2 * (k_ + 1)]; ++r) t *= z;
    total += t;
  }
  return total;
}

Rat WeightedPolynomial::evaluate_x(const std::vector<Rat>& xs) const {
  std::vector<Rat> ys(k_ + 1, Rat(0));
  return evaluate(xs, ys, 0);
}

int WeightedPolynomial::monomial_weight(const Monomial& m, Grading g) const {
  int w = 0;
  for (int i = 0; i <= k_; ++i) {
    int wx = (g == Grading::Standard) ? 1 : i;
    int wy = (g == Grading::Standard) ? 1 : 2 - i;
    w += wx * static_cast<int>(m.e[i]);
    w += wy * static_cast<int>(m.e[k_ + 1 + i]);
  }
  w += 2 * static_cast<int>(m.e[2 * (k_ + 1)]);
  return w;
}

WeightInfo WeightedPolynomial::weight(Grading g) const {
  if (terms_.empty()) return {WeightInfo::Kind::Zero, 0};
  int w = monomial_weight(terms_.begin()->first, g);
  for (auto& [m, c] : terms_)
    if (monomial_weight(m, g) != w) return {WeightInfo::Kind::Inhomogeneous, 0};
  return {WeightInfo::Kind::Homogeneous, w};
}

WeightedPolynomial WeightedPolynomial::graded_part(Grading g, int w) const {
  WeightedPolynomial out(k_);
  for (auto& [m, c] : terms_)
    if (monomial_weight(m, g) == w) out.add_term(m, c);
  return out;
}

std::string WeightedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::vector<std::string> factors;
    if (a != 1 || m.total_degree() == 0) {
      std::string cs = rat_to_string(a);
      factors.push_back(denominator(a) == 1 ? cs : "(" + cs + ")");
    }
    for (int i = 0; i <= k_; ++i) {
      if (m.e[i] > 0) {
        std::string f = "x" + std::to_string(i);
        if (m.e[i] > 1) f += "^" + std::to_string(m.e[i]);
        factors.push_back(f);
      }
    }
    for (int i = 0; i <= k_; ++i) {
      if (m.e[k_ + 1 + i] > 0) {
        std::string f = "y" + std::to_string(i);
        if (m.e[k_ + 1 + i] > 1) f += "^" + std::to_string(m.e[k_ + 1 + i]);
        factors.push_back(f);
      }
    }
    if (m.e[2 * (k_ + 1)] > 0) {
      std::string f = "z";
      if (m.e[2 * (k_ + 1)] > 1) f += "^" + std::to_string(m.e[2 * (k_ + 1)]);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

std::string WeightedPolynomial::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k_;
  j["terms"] = nlohmann::ordered_json::array();
  for (auto& [m, c] : terms_)
    j["terms"].push_back({{"exponents", m.e}, {"coeff", rat_to_string(c)}});
  return j.dump();
}

}  // namespace prolong

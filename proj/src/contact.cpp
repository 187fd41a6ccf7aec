#include "prolong/contact.hpp"

#include <stdexcept>

namespace prolong {

WeightedPolynomial dx_long(const WeightedPolynomial& f, int i) {
  return f.dx(i) + WeightedPolynomial::var_y(f.k(), i) * f.dz().scaled(Rat(1, 2));
}

WeightedPolynomial dy_long(const WeightedPolynomial& f, int i) {
  return f.dy(i) - WeightedPolynomial::var_x(f.k(), i) * f.dz().scaled(Rat(1, 2));
}

WeightedPolynomial contact_bracket(const WeightedPolynomial& f, const WeightedPolynomial& g) {
  if (f.k() != g.k()) throw std::invalid_argument("contact_bracket: k mismatch");
  WeightedPolynomial out = f * g.dz() - g * f.dz();
  for (int i = 0; i <= f.k(); ++i)
    out = out + dx_long(f, i) * dy_long(g, i) - dx_long(g, i) * dy_long(f, i);
  return out;
}

bool ContactField::operator==(const ContactField& rhs) const {
  return cx == rhs.cx && cy == rhs.cy && cz == rhs.cz;
}

ContactField to_field(const WeightedPolynomial& f) {
  int k = f.k();
  ContactField out{std::vector<WeightedPolynomial>(), std::vector<WeightedPolynomial>(),
                   WeightedPolynomial(k)};
  // X_f = sum_i (-df/dy_i d/dx_i + df/dx_i d/dy_i) + f @z with the long
  // derivatives d/dx_i, d/dy_i expanded as vector fields.
  WeightedPolynomial cz = f;
  for (int i = 0; i <= k; ++i) {
    WeightedPolynomial fx = dx_long(f, i);
    WeightedPolynomial fy = dy_long(f, i);
    out.cx.push_back(fy.scaled(-1));
    out.cy.push_back(fx);
    cz = cz - WeightedPolynomial::var_y(k, i) * fy.scaled(Rat(1, 2)) -
         WeightedPolynomial::var_x(k, i) * fx.scaled(Rat(1, 2));
  }
  out.cz = cz;
  return out;
}

namespace {
// A applied to a scalar polynomial: sum of coefficients times partials.
WeightedPolynomial apply_field(const ContactField& a, const WeightedPolynomial& h) {
  int k = h.k();
  WeightedPolynomial out(k);
  for (int i = 0; i <= k; ++i)
    out = out + a.cx[i] * h.dx(i) + a.cy[i] * h.dy(i);
  return out + a.cz * h.dz();
}
}  // namespace

ContactField field_commutator(const ContactField& a, const ContactField& b) {
  std::size_t n = a.cx.size();
  if (n == 0 || b.cx.size() != n) throw std::invalid_argument("field_commutator: size mismatch");
  ContactField out{std::vector<WeightedPolynomial>(), std::vector<WeightedPolynomial>(),
                   WeightedPolynomial(a.cz.k())};
  for (std::size_t i = 0; i < n; ++i) {
    out.cx.push_back(apply_field(a, b.cx[i]) - apply_field(b, a.cx[i]));
    out.cy.push_back(apply_field(a, b.cy[i]) - apply_field(b, a.cy[i]));
  }
  out.cz = apply_field(a, b.cz) - apply_field(b, a.cz);
  return out;
}

}  // namespace prolong

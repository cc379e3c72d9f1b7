#include "qagt/param_point.hpp"

#include <set>

namespace qagt {

std::vector<PolePair> pole_pairs(int n) {
  std::vector<PolePair> out;
  for (int product = 1; product <= n; ++product)
    for (int r = 1; r <= product; ++r)
      if (product % r == 0) out.push_back(PolePair{r, product / r});
  const size_t positives = out.size();
  for (size_t k = 0; k < positives; ++k)
    out.push_back(PolePair{-out[k].r, -out[k].s});
  return out;
}

ParamPoint::ParamPoint(Rational q, Rational t) : q_(std::move(q)), t_(std::move(t)) {
  if (q_.is_zero() || t_.is_zero()) throw NonGenericError("q and t must be nonzero");
}

ParamPoint::ParamPoint(Rational q, Rational t, Rational sigma)
    : ParamPoint(std::move(q), std::move(t)) {
  sigma_ = std::move(sigma);
  if (sigma_->is_zero()) throw NonGenericError("sigma must be nonzero");
}

const Rational& ParamPoint::sigma() const {
  if (!sigma_) throw std::logic_error("ParamPoint: sigma not set");
  return *sigma_;
}

Rational ParamPoint::big_q() const { return sigma().pow(2); }

Rational ParamPoint::h() const { return sigma() + sigma().inverse(); }

void ParamPoint::require_generic(int level) const {
  const Rational one(1);
  for (const Rational& v : {q_, t_})
    if (v == one || v == -one) throw NonGenericError("q, t must differ from ±1");
  if (q_ == t_) throw NonGenericError("q = t (p = 1)");
  if (q_ == -t_) throw NonGenericError("q = -t (p = -1)");

  std::set<Rational> grid;
  for (const PolePair& rs : pole_pairs(level)) {
    const Rational loc = pole_location(rs);
    if (loc == one)
      throw NonGenericError("pole grid touches 1 at (r,s)=(" + std::to_string(rs.r) + "," +
                            std::to_string(rs.s) + ")");
    if (!grid.insert(loc).second)
      throw NonGenericError("pole grid collision at " + loc.to_string());
  }

  if (sigma_) {
    if (*sigma_ == one || *sigma_ == -one) throw NonGenericError("sigma must differ from ±1");
    const Rational qq = big_q();
    if (grid.count(qq)) throw NonGenericError("Q = sigma^2 lies on the pole grid");
  }
}

bool ParamPoint::sigma_window_clear(int window) const {
  const Rational qq = big_q();
  for (int a = -window; a <= window; ++a)
    for (int b = -window; b <= window; ++b)
      if (qq == qt_monomial(a, b)) return false;
  return true;
}

void ParamPoint::require_sigma_window(int window) const {
  if (!sigma_window_clear(window))
    throw NonGenericError("Q = sigma^2 collides with a monomial q^a t^b, |a|,|b| <= " +
                          std::to_string(window));
}

}  // namespace qagt

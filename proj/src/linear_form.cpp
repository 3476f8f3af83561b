#include "meanforge/linear_form.hpp"

#include <algorithm>

#include "meanforge/error.hpp"

namespace meanforge {

namespace {

void add_gini(std::vector<GiniTerm>& terms, const GiniTerm& t) {
  auto it = std::find_if(terms.begin(), terms.end(),
                         [&](const GiniTerm& g) { return g.r == t.r && g.s == t.s; });
  if (it == terms.end()) {
    if (!t.coef.is_zero()) terms.push_back(t);
  } else {
    it->coef = it->coef + t.coef;
    if (it->coef.is_zero()) terms.erase(it);
  }
}

void sort_terms(std::vector<GiniTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const GiniTerm& x, const GiniTerm& y) {
    return x.r != y.r ? x.r < y.r : x.s < y.s;
  });
}

}  // namespace

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm out = *this;
  for (std::size_t k = 0; k < coef.size(); ++k) out.coef[k] = coef[k] + o.coef[k];
  out.constant = constant + o.constant;
  for (const GiniTerm& t : o.gini) add_gini(out.gini, t);
  sort_terms(out.gini);
  return out;
}

LinearForm LinearForm::scaled(const Rational& k) const {
  LinearForm out;
  if (k.is_zero()) return out;
  for (std::size_t i = 0; i < coef.size(); ++i) out.coef[i] = coef[i] * k;
  out.constant = constant * k;
  for (const GiniTerm& t : gini) out.gini.push_back({t.r, t.s, t.coef * k});
  return out;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + o.scaled(Rational(-1)); }

LinearForm LinearForm::compile(const Expr& e) {
  using K = Expr::Kind;
  LinearForm out;
  switch (e.kind()) {
    case K::Literal:
      out.constant = e.value();
      return out;
    case K::Mean:
      out.coef[index_of(e.mean_kind())] = Rational(1);
      return out;
    case K::Delta:
      out.coef[kernels::kDelta] = Rational(1);
      return out;
    case K::Hel:
      out.coef[kernels::kHel] = Rational(1);
      return out;
    case K::Difference:
      out.coef[index_of(e.pair().upper())] = Rational(1);
      out.coef[index_of(e.pair().lower())] = Rational(-1);
      return out;
    case K::Gini: {
      Rational r = e.gini_r();
      Rational s = e.gini_s();
      if (r < s) std::swap(r, s);
      out.gini.push_back({r, s, Rational(1)});
      return out;
    }
    case K::Add: return compile(e.lhs()) + compile(e.rhs());
    case K::Sub: return compile(e.lhs()) - compile(e.rhs());
    case K::Mul:
      if (e.lhs().is_constant()) return compile(e.rhs()).scaled(e.lhs().fold());
      return compile(e.lhs()).scaled(e.rhs().fold());
    case K::Div: return compile(e.lhs()).scaled(Rational(1) / e.rhs().fold());
  }
  throw DomainError("unknown expression kind");
}

}  // namespace meanforge

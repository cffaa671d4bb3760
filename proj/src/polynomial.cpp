#include "glc/polynomial.hpp"

#include "glc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace glc {

Polynomial Polynomial::from_terms(std::vector<Term> ts, const PrimeField& F) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return cmp_grevlex(a.mono, b.mono) > 0; });
  Polynomial p;
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw WrongShape("lead term of the zero polynomial");
  return terms_.front();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

Polynomial poly_zero() { return Polynomial(); }

Polynomial poly_const(std::size_t nvars, Scalar c) {
  return poly_monomial(Exponents(nvars, 0), c);
}

Polynomial poly_monomial(Exponents e, Scalar c) {
  Polynomial p;
  if (c != 0) {
    std::vector<Term> ts;
    ts.push_back(Term{std::move(e), c});
    PrimeField dummy(2);
    p = Polynomial::from_terms(std::move(ts), dummy);
  }
  return p;
}

Polynomial poly_var(std::size_t nvars, std::size_t v) {
  Exponents e(nvars, 0);
  e[v] = 1;
  return poly_monomial(std::move(e), 1);
}

Polynomial poly_add(const PrimeField& F, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = cmp_grevlex(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      Scalar s = F.add(ta[i].coeff, tb[j].coeff);
      if (s != 0) out.push_back(Term{ta[i].mono, s});
      ++i;
      ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return Polynomial::from_terms(std::move(out), F);
}

Polynomial poly_neg(const PrimeField& F, const Polynomial& a) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial::from_terms(std::move(out), F);
}

Polynomial poly_sub(const PrimeField& F, const Polynomial& a, const Polynomial& b) {
  return poly_add(F, a, poly_neg(F, b));
}

Polynomial poly_scale(const PrimeField& F, Scalar c, const Polynomial& a) {
  if (c == 0) return Polynomial();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = F.mul(c, t.coeff);
  return Polynomial::from_terms(std::move(out), F);
}

Polynomial poly_term_mul(const PrimeField& F, const Exponents& e, Scalar c, const Polynomial& a) {
  if (c == 0) return Polynomial();
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back(Term{mono_mul(e, t.mono), F.mul(c, t.coeff)});
  return Polynomial::from_terms(std::move(out), F);
}

Polynomial poly_mul(const PrimeField& F, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      out.push_back(Term{mono_mul(s.mono, t.mono), F.mul(s.coeff, t.coeff)});
  return Polynomial::from_terms(std::move(out), F);
}

std::optional<Multidegree> poly_degree(const GradingData& g, const Polynomial& a) {
  if (a.is_zero()) return std::nullopt;
  Multidegree d = mono_degree(g, a.terms()[0].mono);
  for (std::size_t i = 1; i < a.size(); ++i)
    if (mono_degree(g, a.terms()[i].mono) != d) return std::nullopt;
  return d;
}

bool poly_homogeneous(const GradingData& g, const Polynomial& a) {
  return a.is_zero() || poly_degree(g, a).has_value();
}

std::string poly_str(const RingSpec& ring, const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || total_weight(t.mono) == 0) {
      os << t.coeff;
      printed = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (printed) os << "*";
      os << ring.var_name(v);
      if (t.mono[v] > 1) os << "^" << t.mono[v];
      printed = true;
    }
  }
  return os.str();
}

// ----- module elements ------------------------------------------------------

ModuleElement mod_zero(std::size_t rank) { return ModuleElement(rank); }

bool mod_is_zero(const ModuleElement& e) {
  for (const auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

ModuleTerm mod_lead(const ModuleElement& e) {
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (!e[c].is_zero()) {
      const Term& t = e[c].lead();
      return ModuleTerm{c, t.mono, t.coeff};
    }
  }
  throw WrongShape("lead term of the zero module element");
}

ModuleElement mod_add(const PrimeField& F, const ModuleElement& a, const ModuleElement& b) {
  if (a.size() != b.size()) throw WrongShape("module element rank mismatch in add");
  ModuleElement out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = poly_add(F, a[c], b[c]);
  return out;
}

ModuleElement mod_sub(const PrimeField& F, const ModuleElement& a, const ModuleElement& b) {
  if (a.size() != b.size()) throw WrongShape("module element rank mismatch in sub");
  ModuleElement out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = poly_sub(F, a[c], b[c]);
  return out;
}

ModuleElement mod_scale(const PrimeField& F, Scalar c, const ModuleElement& a) {
  ModuleElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_scale(F, c, a[i]);
  return out;
}

ModuleElement mod_term_mul(const PrimeField& F, const Exponents& e, Scalar c,
                           const ModuleElement& a) {
  ModuleElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_term_mul(F, e, c, a[i]);
  return out;
}

std::optional<Multidegree> mod_degree(const GradingData& g,
                                      const std::vector<Multidegree>& shifts,
                                      const ModuleElement& e) {
  if (e.size() != shifts.size()) throw WrongShape("module element rank mismatch in degree");
  std::optional<Multidegree> deg;
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (e[c].is_zero()) continue;
    auto pd = poly_degree(g, e[c]);
    if (!pd) return std::nullopt;
    Multidegree d = *pd + shifts[c];
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;  // nullopt for the zero element
}

std::string mod_str(const RingSpec& ring, const ModuleElement& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < e.size(); ++c) {
    if (e[c].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << poly_str(ring, e[c]) << ")*e" << c + 1;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace glc

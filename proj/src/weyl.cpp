#include "sympcliff/weyl.hpp"

#include <algorithm>
#include <vector>

namespace sympcliff {

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r, 1);
}

Rational factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r, 1);
}

GaussianRational power(const GaussianRational& z, int k) {
  GaussianRational r(1);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

std::string monomial_name(int m, int n) {
  std::string out;
  auto put = [&](const char* sym, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += sym;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put("q̂", m);
  put("p̂", n);
  return out;
}

}  // namespace

WeylElement WeylElement::scalar(const GaussianRational& c) { return monomial(0, 0, c); }

WeylElement WeylElement::monomial(int m, int n, const GaussianRational& c) {
  WeylElement w;
  w.add_term(m, n, c);
  return w;
}

GaussianRational WeylElement::coefficient(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int WeylElement::degree() const {
  int d = -1;
  for (const auto& [mn, c] : terms_) d = std::max(d, mn.first + mn.second);
  return d;
}

void WeylElement::add_term(int m, int n, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mn, c] : terms_) c *= s;
  return *this;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then by power of q^.
  std::vector<std::pair<Monomial, GaussianRational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [mn, c] : ordered) {
    std::string name = monomial_name(mn.first, mn.second);
    bool negative = false;
    std::string body;
    if (c.im.is_zero() || c.re.is_zero()) {
      bool imaginary = c.re.is_zero();
      Rational mag = imaginary ? c.im : c.re;
      negative = mag.sign() < 0;
      mag = mag.abs();
      std::string unit = imaginary ? "i" : "";
      std::string num = mag.num() == 1 ? "" : mag.num().get_str();
      std::string den = mag.den() == 1 ? "" : "/" + mag.den().get_str();
      std::string lead = num;
      if (!unit.empty()) lead += lead.empty() ? unit : "*" + unit;
      if (name.empty()) body = (lead.empty() ? "1" : lead) + den;
      else body = (lead.empty() ? "" : lead + "*") + name + den;
    } else {
      body = c.to_string() + (name.empty() ? "" : "*" + name);
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) {
  const GaussianRational minus_i(0, -1);
  WeylElement out;
  for (const auto& [ab, cx] : x.terms())
    for (const auto& [cd, cy] : y.terms()) {
      auto [a, b] = ab;
      auto [c, d] = cd;
      // q^a (p^b q^c) p^d
      GaussianRational base = cx * cy;
      for (int k = 0; k <= std::min(b, c); ++k) {
        GaussianRational coeff = base * GaussianRational(binomial(b, k) * binomial(c, k) * factorial(k)) *
                                 power(minus_i, k);
        out.add_term(a + c - k, b + d - k, coeff);
      }
    }
  return out;
}

WeylElement adjoint(const WeylElement& x) {
  // (c q^m p^n)^+ = conj(c) p^n q^m
  WeylElement out;
  for (const auto& [mn, c] : x.terms())
    out += weyl_mul(WeylElement::monomial(0, mn.second, c.conj()), WeylElement::monomial(mn.first, 0));
  return out;
}

std::map<WeylElement::Monomial, GaussianRational> to_symmetric_basis(const WeylElement& x) {
  const GaussianRational half_i(0, Rational(mpz_class(1), mpz_class(2)));
  std::map<WeylElement::Monomial, GaussianRational> out;
  for (const auto& [mn, c] : x.terms()) {
    auto [m, n] = mn;
    for (int k = 0; k <= std::min(m, n); ++k) {
      GaussianRational coeff =
          c * GaussianRational(binomial(m, k) * binomial(n, k) * factorial(k)) * power(half_i, k);
      auto& slot = out[{m - k, n - k}];
      slot += coeff;
      if (slot.is_zero()) out.erase({m - k, n - k});
    }
  }
  return out;
}

WeylElement weyl_quantize(const QuadPoly& f) {
  const GaussianRational minus_i(0, -1);
  // Symmetric ordering: q^2 -> q^^2, p^2 -> p^^2, qp -> (q^p^ + p^q^)/2 = q^p^ - i/2.
  WeylElement sym;
  sym.add_term(2, 0, f.cqq);
  sym.add_term(0, 2, f.cpp);
  sym.add_term(1, 1, f.cqp);
  sym.add_term(0, 0, GaussianRational(0, -f.cqp * Rational(mpz_class(1), mpz_class(2))));
  return sym * minus_i;
}

WeylElement hermitian_part(const QuadPoly& f) { return weyl_quantize(f) * GaussianRational::i(); }

WeylElement quantize_clifford(const PoissonCliffordElement& x) {
  return WeylElement::scalar(x.scalar) + weyl_quantize(x.quad);
}

PoissonCommutatorWitness verify_poisson_commutator(const QuadPoly& f, const QuadPoly& g) {
  WeylElement lhs = weyl_quantize(pbracket(f, g));
  WeylElement rhs = weyl_commutator(weyl_quantize(f), weyl_quantize(g));
  WeylElement diff = lhs - rhs;
  return {diff.is_zero(), lhs, rhs, diff};
}

}  // namespace sympcliff

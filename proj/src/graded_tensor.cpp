#include "sympcliff/graded_tensor.hpp"

#include "sympcliff/error.hpp"
#include "sympcliff/format.hpp"

namespace sympcliff {

std::string slot_name(Slot s) {
  switch (s) {
    case Slot::E: return "e";
    case Slot::Q: return "e_q";
    case Slot::P: return "e_p";
    case Slot::J: return "j";
  }
  return "?";
}

std::pair<int, Slot> slot_product(Slot a, Slot b) {
  if (a == Slot::E) return {1, b};
  if (b == Slot::E) return {1, a};
  if (a == b) return {-1, Slot::E};
  // Cyclic order (e_q, e_p, j): forward products are positive.
  auto idx = [](Slot s) { return static_cast<int>(s) - 1; };
  int d = (idx(b) - idx(a) + 3) % 3;
  Slot third = static_cast<Slot>(3 - idx(a) - idx(b) + 1);
  return {d == 1 ? 1 : -1, third};
}

GradedTensorElement::GradedTensorElement(int n) : n_(n) {
  if (n < 1 || n > kMaxFactors)
    throw DomainError("factor count must be in [1, " + std::to_string(kMaxFactors) + "]");
}

GradedTensorElement GradedTensorElement::unit(int n) {
  GradedTensorElement x(n);
  x.add_term(0, 1);
  return x;
}

GradedTensorElement GradedTensorElement::basis(const std::vector<Slot>& slots, Rational coeff) {
  GradedTensorElement x(static_cast<int>(slots.size()));
  x.add_term(encode(slots), coeff);
  return x;
}

GradedTensorElement::Key GradedTensorElement::encode(const std::vector<Slot>& slots) {
  Key k = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) k |= static_cast<Key>(slots[s]) << (2 * s);
  return k;
}

std::vector<Slot> GradedTensorElement::decode(Key key, int n) {
  std::vector<Slot> out(n);
  for (int s = 0; s < n; ++s) out[s] = static_cast<Slot>((key >> (2 * s)) & 3u);
  return out;
}

void GradedTensorElement::add_term(Key key, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational GradedTensorElement::coefficient(const std::vector<Slot>& slots) const {
  auto it = terms_.find(encode(slots));
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedTensorElement& GradedTensorElement::operator+=(const GradedTensorElement& o) {
  if (o.n_ != n_) throw DomainError("factor counts differ");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

GradedTensorElement& GradedTensorElement::operator-=(const GradedTensorElement& o) {
  if (o.n_ != n_) throw DomainError("factor counts differ");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

GradedTensorElement& GradedTensorElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string GradedTensorElement::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::string name;
    for (Slot s : decode(k, n_)) name += (name.empty() ? "" : "⊗") + slot_name(s);
    parts.emplace_back(c, name);
  }
  return format_combination(parts);
}

namespace {

// Sign and key of the product of two basis elements.
std::pair<int, GradedTensorElement::Key> basis_product(GradedTensorElement::Key a, GradedTensorElement::Key b,
                                                       int n) {
  int sign = 1;
  int odd_after = 0;  // odd a-symbols at positions > r
  GradedTensorElement::Key out = 0;
  for (int r = n - 1; r >= 0; --r) {
    Slot as = static_cast<Slot>((a >> (2 * r)) & 3u);
    Slot bs = static_cast<Slot>((b >> (2 * r)) & 3u);
    if (is_odd(bs) && (odd_after % 2) == 1) sign = -sign;
    if (is_odd(as)) ++odd_after;
    auto [s, prod] = slot_product(as, bs);
    sign *= s;
    out |= static_cast<GradedTensorElement::Key>(prod) << (2 * r);
  }
  return {sign, out};
}

}  // namespace

GradedTensorElement graded_mul(const GradedTensorElement& x, const GradedTensorElement& y) {
  if (x.factors() != y.factors()) throw DomainError("graded_mul: factor counts differ");
  GradedTensorElement out(x.factors());
  for (const auto& [ka, ca] : x.terms())
    for (const auto& [kb, cb] : y.terms()) {
      auto [sign, key] = basis_product(ka, kb, x.factors());
      Rational c = ca * cb;
      out.add_term(key, sign > 0 ? c : -c);
    }
  return out;
}

GradedTensorElement embed_generator(int slot, Slot v, int n) {
  if (slot < 1 || slot > n) throw DomainError("slot index out of range");
  if (!is_odd(v)) throw DomainError("generator must be e_q or e_p");
  std::vector<Slot> slots(n, Slot::E);
  slots[slot - 1] = v;
  return GradedTensorElement::basis(slots);
}

namespace {
bool is_embedded_generator(const GradedTensorElement& x) {
  if (x.terms().size() != 1) return false;
  int odd = 0, other = 0;
  for (Slot s : GradedTensorElement::decode(x.terms().begin()->first, x.factors())) {
    if (is_odd(s)) ++odd;
    else if (s != Slot::E) ++other;
  }
  return odd == 1 && other == 0;
}
}  // namespace

Rational clifford_relation_check(const GradedTensorElement& u, const GradedTensorElement& v) {
  if (!is_embedded_generator(u) || !is_embedded_generator(v))
    throw DomainError("clifford_relation_check expects embedded generators");
  GradedTensorElement anti = u * v + v * u;
  if (anti.is_zero()) return 0;
  if (anti.terms().size() != 1 || anti.terms().begin()->first != 0)
    throw Error("anticommutator " + anti.to_string() + " is not a multiple of the unit");
  return anti.terms().begin()->second;
}

PoissonCliffordElement slot_to_poisson(Slot s) {
  const Rational half(mpz_class(1), mpz_class(2));
  switch (s) {
    case Slot::E: return {1, {}};
    case Slot::Q: return {0, QuadPoly::qp()};
    case Slot::P: return {0, {-half, half, 0}};
    case Slot::J: return {0, {half, half, 0}};
  }
  return {};
}

std::string to_poisson_clifford_string(const GradedTensorElement& x) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : x.terms()) {
    std::string name;
    for (Slot s : GradedTensorElement::decode(k, x.factors())) {
      std::string label = s == Slot::E ? "e" : "(" + slot_to_poisson(s).quad.to_string() + ")";
      name += (name.empty() ? "" : "⊗") + label;
    }
    parts.emplace_back(c, name);
  }
  return format_combination(parts);
}

std::string to_string(const QuadraticForm2n& form) {
  auto var = [](int a) { return std::string(a % 2 == 0 ? "q" : "p") + std::to_string(a / 2 + 1); };
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [ab, c] : form) {
    auto [a, b] = ab;
    parts.emplace_back(c, a == b ? var(a) + "^2" : var(a) + "*" + var(b));
  }
  return format_combination(parts);
}

QuadraticForm2n quadratic_image(const GradedTensorElement& x) {
  QuadraticForm2n out;
  auto add = [&](int a, int b, const Rational& c) {
    if (a > b) std::swap(a, b);
    Rational& slot = out[{a, b}];
    slot += c;
    if (slot.is_zero()) out.erase({a, b});
  };
  auto coord = [](int s, Slot v) { return 2 * s + (v == Slot::Q ? 0 : 1); };
  for (const auto& [k, c] : x.terms()) {
    std::vector<std::pair<int, Slot>> pure;
    auto slots = GradedTensorElement::decode(k, x.factors());
    for (int s = 0; s < x.factors(); ++s)
      if (slots[s] != Slot::E) pure.emplace_back(s, slots[s]);
    if (pure.size() == 1) {
      auto [s, sym] = pure[0];
      QuadPoly f = slot_to_poisson(sym).quad;
      add(2 * s, 2 * s, c * f.cqq);
      add(2 * s + 1, 2 * s + 1, c * f.cpp);
      add(2 * s, 2 * s + 1, c * f.cqp);
    } else if (pure.size() == 2 && is_odd(pure[0].second) && is_odd(pure[1].second)) {
      add(coord(pure[0].first, pure[0].second), coord(pure[1].first, pure[1].second), c);
    } else {
      throw DomainError("quadratic_image: component " + GradedTensorElement::basis(slots).to_string() +
                        " lies outside the quadratic subspace");
    }
  }
  return out;
}

}  // namespace sympcliff

#include "sympcliff/process.hpp"

#include <utility>

#include "sympcliff/error.hpp"

namespace sympcliff {
namespace {

std::size_t slot(ProcessKind k) { return static_cast<std::size_t>(k); }

std::pair<int, int> poles_of(ProcessKind k) {
  switch (k) {
    case ProcessKind::P01: return {0, 1};
    case ProcessKind::P02: return {0, 2};
    case ProcessKind::P12: return {1, 2};
    case ProcessKind::Unit: break;
  }
  throw DomainError("unit has no poles");
}

/// A simplex written with an explicit orientation: sign * [PfromPto].
struct Directed {
  int sign;
  int from;
  int to;
  Directed reversed() const { return {-sign, to, from}; }
};

}  // namespace

Pole::Pole(int index) : index_(index) {
  if (index < 0 || index > 2) throw DomainError("pole index must be 0, 1 or 2");
}

SignedProcess SignedProcess::simplex(Pole a, Pole b) {
  int lo = std::min(a.index(), b.index());
  int hi = std::max(a.index(), b.index());
  if (lo == hi) return unit();
  int sign = a.index() < b.index() ? 1 : -1;
  ProcessKind kind = lo == 0 ? (hi == 1 ? ProcessKind::P01 : ProcessKind::P02) : ProcessKind::P12;
  return {sign, kind};
}

std::string SignedProcess::to_string() const {
  std::string body;
  switch (kind) {
    case ProcessKind::Unit: body = "e"; break;
    case ProcessKind::P01: body = "[P0P1]"; break;
    case ProcessKind::P02: body = "[P0P2]"; break;
    case ProcessKind::P12: body = "[P1P2]"; break;
  }
  return (sign < 0 ? "-" : "") + body;
}

std::array<SignedProcess, 8> all_signed_processes() {
  std::array<SignedProcess, 8> out;
  std::size_t n = 0;
  for (int s : {1, -1})
    for (ProcessKind k : kAllProcessKinds) out[n++] = {s, k};
  return out;
}

const std::array<std::array<SignedProcess, 4>, 4>& process_table() {
  using K = ProcessKind;
  static const std::array<std::array<SignedProcess, 4>, 4> table = {{
      {{{1, K::Unit}, {1, K::P01}, {1, K::P02}, {1, K::P12}}},
      {{{1, K::P01}, {-1, K::Unit}, {-1, K::P12}, {1, K::P02}}},
      {{{1, K::P02}, {1, K::P12}, {-1, K::Unit}, {-1, K::P01}}},
      {{{1, K::P12}, {-1, K::P02}, {1, K::P01}, {-1, K::Unit}}},
  }};
  return table;
}

SignedProcess compose(const SignedProcess& a, const SignedProcess& b) {
  SignedProcess r = process_table()[slot(a.kind)][slot(b.kind)];
  r.sign *= a.sign * b.sign;
  return r;
}

SignedProcess compose_by_pole_rule(const SignedProcess& a, const SignedProcess& b) {
  if (a.kind == ProcessKind::Unit) return {a.sign * b.sign, b.kind};
  if (b.kind == ProcessKind::Unit) return {a.sign * b.sign, a.kind};
  auto [a0, a1] = poles_of(a.kind);
  auto [b0, b1] = poles_of(b.kind);
  Directed left{a.sign, a0, a1};
  Directed right{b.sign, b0, b1};
  // Orient both simplexes so the end pole of the left one is the start pole
  // of the right one; on three poles two simplexes always share a pole.
  if (left.to != right.from) {
    if (left.to == right.to) {
      right = right.reversed();
    } else if (left.from == right.from) {
      left = left.reversed();
    } else {
      left = left.reversed();
      right = right.reversed();
    }
  }
  SignedProcess r = SignedProcess::simplex(Pole(left.from), Pole(right.to));
  r.sign *= left.sign * right.sign;
  return r;
}

Quaternion to_quaternion_unit(const SignedProcess& p) {
  Quaternion q;
  switch (p.kind) {
    case ProcessKind::Unit: q = Quaternion::e(); break;
    case ProcessKind::P01: q = Quaternion::i(); break;
    case ProcessKind::P02: q = Quaternion::j(); break;
    case ProcessKind::P12: q = Quaternion::k(); break;
  }
  return p.sign < 0 ? -q : q;
}

}  // namespace sympcliff

#pragma once

#include <array>
#include <string>

#include "sympcliff/quaternion.hpp"

namespace sympcliff {

/// One of the three poles P0, P1, P2.
class Pole {
 public:
  explicit Pole(int index);
  int index() const { return index_; }
  friend bool operator==(Pole, Pole) = default;

 private:
  int index_;
};

enum class ProcessKind { Unit, P01, P02, P12 };

inline constexpr std::array<ProcessKind, 4> kAllProcessKinds = {
    ProcessKind::Unit, ProcessKind::P01, ProcessKind::P02, ProcessKind::P12};

/// +/- a directed one-simplex [PaPb] with a < b, or +/- the unity e.
/// [PbPa] is stored as -[PaPb].
struct SignedProcess {
  int sign = 1;
  ProcessKind kind = ProcessKind::Unit;

  static SignedProcess unit() { return {}; }
  /// The directed simplex [PaPb]; [PaPa] is the unity.
  static SignedProcess simplex(Pole a, Pole b);

  SignedProcess operator-() const { return {-sign, kind}; }
  friend bool operator==(const SignedProcess&, const SignedProcess&) = default;

  /// "e", "-e", "[P0P1]", "-[P1P2]".
  std::string to_string() const;
};

/// All eight signed processes, unit first.
std::array<SignedProcess, 8> all_signed_processes();

/// Inner multiplication looked up in the stored multiplication table,
/// extended bilinearly in the sign.
SignedProcess compose(const SignedProcess& a, const SignedProcess& b);

/// Inner multiplication derived from the pole rule [PaPb][PbPc] = [PaPc],
/// antisymmetry [PaPb] = -[PbPa] and [PaPa] = e. Independent of the table.
SignedProcess compose_by_pole_rule(const SignedProcess& a, const SignedProcess& b);

/// Stored table; row r, column c holds kind(r) * kind(c).
const std::array<std::array<SignedProcess, 4>, 4>& process_table();

/// e -> e, [P0P1] -> i, [P0P2] -> j, [P1P2] -> k, signs preserved.
///
/// Under this identification the process product is the *reversed*
/// quaternion product: to_quaternion_unit(a*b) = to_quaternion_unit(b) *
/// to_quaternion_unit(a) (the table has [P0P1][P0P2] = -[P1P2], i.e. ij = -k).
Quaternion to_quaternion_unit(const SignedProcess& p);

}  // namespace sympcliff

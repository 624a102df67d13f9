#include "sympcliff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sympcliff/dsl.hpp"
#include "sympcliff/endf_sp.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/fock.hpp"
#include "sympcliff/graded_tensor.hpp"
#include "sympcliff/poisson.hpp"
#include "sympcliff/process.hpp"
#include "sympcliff/quaternion.hpp"
#include "sympcliff/rng.hpp"
#include "sympcliff/symplectic.hpp"
#include "sympcliff/weyl.hpp"

namespace sympcliff {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ErratumDocumented: return "erratum-documented";
  }
  return "?";
}

std::string tool_version() { return SYMPCLIFF_VERSION; }

namespace {

const Rational kHalf(mpz_class(1), mpz_class(2));

Xoshiro256 stream(const CheckContext& ctx) { return Xoshiro256(derive_seed(ctx.seed, ctx.name)); }

QuadPoly random_quad(Xoshiro256& rng) { return {random_rational(rng), random_rational(rng), random_rational(rng)}; }

Poly2 random_poly2(Xoshiro256& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng),
          random_rational(rng), random_rational(rng), random_rational(rng)};
}

Vector3 random_vector(Xoshiro256& rng) { return {random_rational(rng), random_rational(rng), random_rational(rng)}; }

Quaternion random_quaternion(Xoshiro256& rng) { return {random_rational(rng), random_vector(rng)}; }

// Rational point of S^2 by inverse stereographic projection.
Quaternion random_pure_unit(Xoshiro256& rng) {
  Rational u = random_rational(rng), v = random_rational(rng);
  Rational d = u * u + v * v + 1;
  return Quaternion::pure({2 * u / d, 2 * v / d, (u * u + v * v - 1) / d});
}

Quaternion random_unit(Xoshiro256& rng) {
  Quaternion x;
  do x = random_quaternion(rng);
  while (x.is_zero());
  return (x * x) * x.norm2().inverse();
}

Vector3 random_tangent(Xoshiro256& rng, const Quaternion& j) { return cross(j.vec, random_vector(rng)); }

// Admissible (omega, J): J = [[a, b], [c, -a]], c = -(1 + a^2)/b, sign(b) = sign(w).
std::pair<SymplecticForm2, Endo2> random_admissible(Xoshiro256& rng) {
  Rational w = random_nonzero_rational(rng), a = random_rational(rng), b = random_nonzero_rational(rng);
  if (b.sign() != w.sign()) b = -b;
  Rational c = -(1 + a * a) / b;
  return {SymplecticForm2(Endo2::from(0, w, -w, 0)), Endo2::from(a, b, c, -a)};
}

Coords2 apply_col(const Endo2& m, const Coords2& h) {
  return {m(0, 0) * h[0] + m(0, 1) * h[1], m(1, 0) * h[0] + m(1, 1) * h[1]};
}

GradedTensorElement random_graded(Xoshiro256& rng, int n, int max_terms = 4) {
  GradedTensorElement x(n);
  int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<Slot> slots(n);
    for (auto& s : slots) s = static_cast<Slot>(rng.uniform(0, 3));
    x.add_term(GradedTensorElement::encode(slots), random_nonzero_rational(rng));
  }
  return x;
}

const std::vector<QuadPoly>& generators() {
  static const std::vector<QuadPoly> g = {QuadPoly::q2_half(), QuadPoly::p2_half(), QuadPoly::qp()};
  return g;
}

std::string cases_detail(int n, const std::string& what) { return std::to_string(n) + " " + what; }

// Exact rank of a rational matrix (rows as vectors).
int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// ---- scalars ----

CheckOutcome scalars_field_axioms(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if ((a + b) + c != a + (b + c) || a + b != b + a || (a * b) * c != a * (b * c) || a * b != b * a ||
        a * (b + c) != a * b + a * c)
      return CheckOutcome::fail("Rational axiom violated for " + a.to_string() + ", " + b.to_string() + ", " +
                                c.to_string());
    GaussianRational x = random_gaussian(rng), y = random_gaussian(rng), z = random_gaussian(rng);
    if ((x + y) + z != x + (y + z) || x + y != y + x || (x * y) * z != x * (y * z) || x * y != y * x ||
        x * (y + z) != x * y + x * z)
      return CheckOutcome::fail("GaussianRational axiom violated for " + x.to_string() + ", " + y.to_string() +
                                ", " + z.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random triples, exact"));
}

CheckOutcome scalars_complex_f64_ulp(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  auto within_ulp = [](const Rational& r, double d) {
    double mag = std::abs(d);
    double ulp = std::nextafter(mag, INFINITY) - mag;
    return (from_double(d) - r).abs() <= from_double(ulp);
  };
  for (int t = 0; t < n; ++t) {
    GaussianRational z{random_rational(rng, 1000000007, 999983), random_rational(rng, 1000000007, 999983)};
    ComplexF64 c = to_complex_f64(z);
    if (!within_ulp(z.re, c.real()) || !within_ulp(z.im, c.imag()))
      return CheckOutcome::fail("conversion of " + z.to_string() + " off by more than 1 ulp");
  }
  return CheckOutcome::pass(cases_detail(n, "random Gaussian rationals within 1 ulp per component"));
}

// ---- process ----

CheckOutcome process_compose_associative(const CheckContext&) {
  auto all = all_signed_processes();
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (compose(compose(a, b), c) != compose(a, compose(b, c)))
          return CheckOutcome::fail("(ab)c != a(bc) for " + a.to_string() + ", " + b.to_string() + ", " +
                                    c.to_string());
  return CheckOutcome::pass("all 512 triples");
}

CheckOutcome process_table_pole_rule(const CheckContext&) {
  for (const auto& a : all_signed_processes())
    for (const auto& b : all_signed_processes())
      if (compose(a, b) != compose_by_pole_rule(a, b))
        return CheckOutcome::fail("stored table and pole rule disagree at " + a.to_string() + " * " + b.to_string());
  return CheckOutcome::pass("stored table equals the pole-rule product on all 64 pairs");
}

CheckOutcome process_quaternion_map(const CheckContext&) {
  for (const auto& a : all_signed_processes())
    for (const auto& b : all_signed_processes()) {
      Quaternion ab = to_quaternion_unit(compose(a, b));
      if (ab != to_quaternion_unit(b) * to_quaternion_unit(a))
        return CheckOutcome::fail("to_q(ab) != to_q(b) to_q(a) at " + a.to_string() + ", " + b.to_string());
      if (ab.conj() != to_quaternion_unit(a).conj() * to_quaternion_unit(b).conj())
        return CheckOutcome::fail("conjugated map is not multiplicative at " + a.to_string() + ", " + b.to_string());
    }
  return CheckOutcome::pass(
      "64 pairs: the literal map [P0P1]->i, [P0P2]->j, [P1P2]->k reverses products ([P0P1][P0P2] = -[P1P2]); "
      "followed by quaternion conjugation it is a group isomorphism");
}

// ---- quaternion ----

CheckOutcome quaternion_associative_unital(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    Quaternion a = random_quaternion(rng), b = random_quaternion(rng), c = random_quaternion(rng);
    if ((a * b) * c != a * (b * c)) return CheckOutcome::fail("(ab)c != a(bc) for a = " + a.to_string());
    if (Quaternion::e() * a != a || a * Quaternion::e() != a) return CheckOutcome::fail("e is not a unit");
  }
  return CheckOutcome::pass(cases_detail(n, "random triples, exact"));
}

CheckOutcome quaternion_clifford(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    Quaternion j = random_pure_unit(rng);
    Quaternion v = Quaternion::pure(random_tangent(rng, j));
    if (v * v != Quaternion::e() * (-dot(v.vec, v.vec)))
      return CheckOutcome::fail("v^2 != -<v,v> e for v = " + v.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "tangent vectors at random rational unit j"));
}

CheckOutcome quaternion_norm_multiplicative(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    if ((a * b).norm2() != a.norm2() * b.norm2())
      return CheckOutcome::fail("|ab|^2 != |a|^2 |b|^2 for " + a.to_string() + ", " + b.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random pairs, exact"));
}

CheckOutcome quaternion_z2_grading(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    Quaternion j = random_pure_unit(rng);
    Quaternion v = Quaternion::pure(random_tangent(rng, j)), w = Quaternion::pure(random_tangent(rng, j));
    Quaternion vw = v * w;
    if (!cross(vw.vec, j.vec).is_zero()) return CheckOutcome::fail("vw leaves span{e, j}");
    Quaternion even = Quaternion::e() * random_rational(rng) + j * random_rational(rng);
    Quaternion ev = even * v, ve = v * even;
    if (!ev.is_pure() || !dot(ev.vec, j.vec).is_zero() || !ve.is_pure() || !dot(ve.vec, j.vec).is_zero())
      return CheckOutcome::fail("span{e, j} times the tangent plane leaves the tangent plane");
  }
  return CheckOutcome::pass(cases_detail(n, "random planes"));
}

CheckOutcome quaternion_conjugate_pure(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    Quaternion g = random_unit(rng), a = random_pure_unit(rng), b = random_pure_unit(rng);
    Quaternion ga = conjugate_pure(g, a), gb = conjugate_pure(g, b);
    if (!ga.is_pure() || !ga.is_unit()) return CheckOutcome::fail("g a g~ left S^2 for a = " + a.to_string());
    if (dot(ga.vec, gb.vec) != dot(a.vec, b.vec)) return CheckOutcome::fail("dot product not preserved");
  }
  return CheckOutcome::pass(cases_detail(n, "random rational unit g and points of S^2"));
}

CheckOutcome quaternion_omega_dual(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    Quaternion j = random_pure_unit(rng);
    Vector3 v = random_tangent(rng, j), w = random_tangent(rng, j);
    Rational om = omega_on_tangent(j, v, w);  // throws if <jv, w> != <j, vw>
    if (om != dot(cross(j.vec, v), w)) return CheckOutcome::fail("omega(v, w) != <j x v, w>");
    if (om != -omega_on_tangent(j, w, v)) return CheckOutcome::fail("omega not skew");
  }
  return CheckOutcome::pass(cases_detail(n, "random tangent pairs: <jv, w> = <j, vw>"));
}

// ---- symplectic ----

CheckOutcome symplectic_roundtrip(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    auto [omega, J] = random_admissible(rng);
    Endo2 g = scalar_from_form(omega, J);
    ComplexStructure cs = j_from_form(omega, g);
    if (cs.J != J || cs.kappa != Rational(1))
      return CheckOutcome::fail("roundtrip failed for J = " + J.to_string() + ", omega = " + omega.matrix().to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random admissible (omega, J), exact"));
}

CheckOutcome symplectic_j_in_sp(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  const std::array<Coords2, 2> basis = {Coords2{1, 0}, Coords2{0, 1}};
  for (int t = 0; t < n; ++t) {
    auto [omega, J0] = random_admissible(rng);
    Endo2 g = scalar_from_form(omega, J0) * random_nonzero_rational(rng).abs();
    Endo2 J = j_from_form(omega, g).J;
    if (J * J != -Endo2::id()) return CheckOutcome::fail("J^2 != -id for J = " + J.to_string());
    for (const auto& v : basis)
      for (const auto& w : basis)
        if (omega(apply_row(J, v), apply_row(J, w)) != omega(v, w))
          return CheckOutcome::fail("omega(Jv, Jw) != omega(v, w) for J = " + J.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random forms and scaled scalar products"));
}

CheckOutcome symplectic_block_diagonal(const CheckContext&) {
  for (int m = 1; m <= 3; ++m) {
    SymplecticSpace2n space = particle_phase_space(m);
    for (int a = 0; a < 2 * space.n; ++a)
      for (int b = 0; b < 2 * space.n; ++b) {
        Rational expected = (a / 2 != b / 2) ? Rational(0) : Rational(b - a);
        if (space.omega(a, b) != expected)
          return CheckOutcome::fail("omega(b_" + std::to_string(a) + ", b_" + std::to_string(b) + ") = " +
                                    space.omega(a, b).to_string() + " for m = " + std::to_string(m));
      }
  }
  return CheckOutcome::pass("m = 1..3 particles: cross-plane pairings vanish, omega(q_s, p_s) = 1");
}

// ---- endf_sp ----

CheckOutcome endf_table_composition(const CheckContext&) {
  for (EndfBasis x : kEndfBasis)
    for (EndfBasis y : kEndfBasis)
      if (as_signed_basis(basis_matrix(x) * basis_matrix(y)) != endf_table(x, y))
        return CheckOutcome::fail("table entry " + basis_name(x) + "*" + basis_name(y) + " differs from the product");
  return CheckOutcome::pass("all 16 entries equal the matrix products");
}

CheckOutcome endf_table_vs_process(const CheckContext&) {
  auto kind_of = [](EndfBasis b) {
    switch (b) {
      case EndfBasis::Id: return ProcessKind::Unit;
      case EndfBasis::J: return ProcessKind::P01;
      case EndfBasis::A: return ProcessKind::P02;
      case EndfBasis::B: return ProcessKind::P12;
    }
    return ProcessKind::Unit;
  };
  std::vector<std::string> diffs;
  for (EndfBasis x : kEndfBasis)
    for (EndfBasis y : kEndfBasis) {
      SignedBasis m = endf_table(x, y);
      SignedProcess p = compose({1, kind_of(x)}, {1, kind_of(y)});
      if (m.sign != p.sign || kind_of(m.basis) != p.kind) diffs.push_back("(" + basis_name(x) + "," + basis_name(y) + ")");
    }
  std::string list;
  for (const auto& d : diffs) list += (list.empty() ? "" : " ") + d;
  const std::vector<std::string> diagonal = {"(A,A)", "(B,B)"};
  const std::vector<std::string> observed = {"(A,A)", "(A,B)", "(B,A)", "(B,B)"};
  if (diffs == diagonal) return CheckOutcome::pass("tables differ exactly in the A/B diagonal signs");
  if (diffs == observed)
    return CheckOutcome::erratum(
        "the End F table does not differ from the process table only in the diagonal signs of A and B; "
        "computed positional differences (J,A,B <-> [P0P1],[P0P2],[P1P2]): " + list +
        "; End F is the split-quaternion algebra, so no signed relabelling confines the difference to the diagonal");
  return CheckOutcome::fail("unexpected difference set: " + list);
}

CheckOutcome endf_hsp_isomorphism(const CheckContext& ctx) {
  const std::array<Quaternion, 4> units = {Quaternion::e(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (const auto& a : units)
    for (const auto& b : units)
      if (quaternion_to_hsp(a * b) != hsp_product(quaternion_to_hsp(a), quaternion_to_hsp(b)))
        return CheckOutcome::fail("basis pair " + a.to_string() + ", " + b.to_string());
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    if (quaternion_to_hsp(a * b) != hsp_product(quaternion_to_hsp(a), quaternion_to_hsp(b)))
      return CheckOutcome::fail("random pair " + a.to_string() + ", " + b.to_string());
    if (hsp_to_quaternion(quaternion_to_hsp(a)) != a) return CheckOutcome::fail("inverse map");
  }
  return CheckOutcome::pass("16 basis pairs and " + cases_detail(n, "random pairs: e->id, i->J, j->A, k->B"));
}

CheckOutcome endf_sp_not_closed(const CheckContext&) {
  Endo2 aa = Endo2::A() * Endo2::A();
  if (!in_sp(Endo2::A()) || aa != Endo2::id() || in_sp(aa))
    return CheckOutcome::fail("expected A in sp(F) and A*A = id outside sp(F)");
  return CheckOutcome::pass("A in sp(F), A*A = id, tr(id) = 2");
}

CheckOutcome endf_sp_cross_sigma(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    Endo2 x = Endo2::A() * random_rational(rng) + Endo2::B() * random_rational(rng);
    Endo2 y = Endo2::A() * random_rational(rng) + Endo2::B() * random_rational(rng);
    if (sp_cross(x, y) != commutator(x, y) * kHalf) return CheckOutcome::fail("sp_cross != [X,Y]/2 on Sigma");
    if (omega_sigma(x, y) != trace_inner(sp_cross(x, y), Endo2::J())) return CheckOutcome::fail("omega_Sigma");
  }
  if (omega_sigma(Endo2::A(), Endo2::B()) != Rational(1)) return CheckOutcome::fail("omega_Sigma(A, B) != 1");
  return CheckOutcome::pass(cases_detail(n, "random pairs in Sigma; omega_Sigma(A, B) = 1"));
}

// ---- poisson ----

CheckOutcome poisson_lie_isomorphism(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng), g = random_quad(rng);
    if (ham(pbracket(f, g)).matrix != commutator(ham(f).matrix, ham(g).matrix))
      return CheckOutcome::fail("ham{f,g} != [ham f, ham g] for f = " + f.to_string() + ", g = " + g.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random pairs, exact"));
}

CheckOutcome poisson_vector_field_sign(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  const std::array<Coords2, 2> basis = {Coords2{1, 0}, Coords2{0, 1}};
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng), g = random_quad(rng);
    Endo2 a = ham(f).matrix, b = ham(g).matrix, abr = ham(pbracket(f, g)).matrix;
    // Matrix route: a_{f,g} = -(B A - A B).
    if (abr != -(b * a - a * b)) return CheckOutcome::fail("matrix route failed for f = " + f.to_string());
    // Pointwise route: [a_f, a_g](h) = da_g(a_f(h)) - da_f(a_g(h)) for linear fields.
    for (const auto& h : basis) {
      Coords2 lie_b = apply_col(b, apply_col(a, h)), lie_a = apply_col(a, apply_col(b, h));
      Coords2 lhs = apply_col(abr, h);
      if (lhs[0] != -(lie_b[0] - lie_a[0]) || lhs[1] != -(lie_b[1] - lie_a[1]))
        return CheckOutcome::fail("pointwise route failed for f = " + f.to_string());
    }
  }
  return CheckOutcome::pass(cases_detail(n, "random pairs: a_{f,g} = -[a_f, a_g] by both routes"));
}

CheckOutcome poisson_jacobi(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    QuadPoly a = random_quad(rng), b = random_quad(rng), c = random_quad(rng);
    QuadPoly s = pbracket(pbracket(a, b), c) + pbracket(pbracket(b, c), a) + pbracket(pbracket(c, a), b);
    if (!s.is_zero()) return CheckOutcome::fail("Jacobi sum " + s.to_string());
    Poly2 x = random_poly2(rng), y = random_poly2(rng), z = random_poly2(rng);
    Poly2 s2 = pbracket(pbracket(x, y), z) + pbracket(pbracket(y, z), x) + pbracket(pbracket(z, x), y);
    if (!(s2 == Poly2{})) return CheckOutcome::fail("Jacobi sum on degree <= 2: " + s2.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random triples in Q and in degree <= 2 polynomials"));
}

CheckOutcome poisson_hamfield_cross(const CheckContext& ctx) {
  auto rng = stream(ctx);
  const auto& gen = generators();
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {2, 0}, {2, 1}}};
  for (int t = 0; t < 20; ++t) {
    Coords2 h{random_rational(rng), random_rational(rng)};
    for (auto [i, k] : pairs) {
      Poly2 f = Poly2::from(gen[i]), g = Poly2::from(gen[k]);
      if (hamfield_cross(f, g, h) != pbracket(f, g).eval(h[0], h[1]))
        return CheckOutcome::fail("j-coefficient of a_f x a_g != {f,g}(h) for " + f.to_string() + ", " + g.to_string());
    }
    if (hamfield_cross(Poly2::coord_q(), Poly2::coord_p(), h) != Rational(1))
      return CheckOutcome::fail("a_{f_q} x a_{f_p} != j");
  }
  return CheckOutcome::pass("generator pairs (q^2/2, p^2/2), (qp, q^2/2), (qp, p^2/2) at 20 points: relating constant +1");
}

CheckOutcome poisson_cross_sign_erratum(const CheckContext&) {
  const auto& gen = generators();
  const Coords2 h{3, -2};
  for (const auto& f : gen)
    for (const auto& g : gen) {
      Vector3 c = cross(hamiltonian_field_at(Poly2::from(f), h), hamiltonian_field_at(Poly2::from(g), h));
      Rational bracket = pbracket(f, g).eval(h[0], h[1]);
      if (c.z != bracket || !c.x.is_zero() || !c.y.is_zero())
        return CheckOutcome::fail("a_f x a_g != +{f,g} j for " + f.to_string() + ", " + g.to_string());
    }
  return CheckOutcome::erratum(
      "a_f x a_g = -{f,g} j does not hold; from e_q x e_p = j and a_f = f_p e_q - f_q e_p: "
      "a_f x a_g = +{f,g} j on all generator pairs (consistent with df(a_g) = <j, a_f x a_g>)");
}

CheckOutcome poisson_ham_traceless(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng);
    if (!ham(f).matrix.trace().is_zero()) return CheckOutcome::fail("tr ham(f) != 0 for f = " + f.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random f"));
}

CheckOutcome poisson_ham_inverse(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng);
    if (ham_inverse(ham(f)) != f) return CheckOutcome::fail("ham_inverse(ham f) != f for f = " + f.to_string());
    Rational x = random_rational(rng);
    Endo2 m = Endo2::from(x, random_rational(rng), random_rational(rng), -x);
    if (ham(ham_inverse(m)).matrix != m) return CheckOutcome::fail("ham(ham_inverse X) != X for X = " + m.to_string());
  }
  return CheckOutcome::pass(cases_detail(n, "random f and traceless X"));
}

CheckOutcome poisson_generator_matrices(const CheckContext&) {
  if (ham(QuadPoly::q2_half()).matrix != Endo2::from(0, 0, -1, 0) ||
      ham(QuadPoly::p2_half()).matrix != Endo2::from(0, 1, 0, 0) || ham(QuadPoly::qp()).matrix != Endo2::from(1, 0, 0, -1))
    return CheckOutcome::fail("generator matrices differ");
  return CheckOutcome::pass("ham(q^2/2) = [[0,0],[-1,0]], ham(p^2/2) = [[0,1],[0,0]], ham(qp) = [[1,0],[0,-1]]");
}

CheckOutcome poisson_qp_bracket_erratum(const CheckContext&) {
  const QuadPoly q2{1, 0, 0}, p2{0, 1, 0};
  if (pbracket(QuadPoly::q2_half(), QuadPoly::p2_half()) != QuadPoly::qp())
    return CheckOutcome::fail("{q^2/2, p^2/2} != qp");
  if (pbracket(QuadPoly::qp(), QuadPoly::p2_half()) != p2) return CheckOutcome::fail("{qp, p^2/2} != p^2");
  QuadPoly closed = pbracket(QuadPoly::qp(), QuadPoly::q2_half());
  QuadPoly symbolic = pbracket(Poly2::from(QuadPoly::qp()), Poly2::from(QuadPoly::q2_half())).to_quad();
  QuadPoly matrix = ham_inverse(commutator(ham(QuadPoly::qp()).matrix, ham(QuadPoly::q2_half()).matrix));
  if (closed != -q2 || symbolic != -q2 || matrix != -q2)
    return CheckOutcome::fail("{qp, q^2/2}: closed form " + closed.to_string() + ", derivatives " +
                              symbolic.to_string() + ", matrix commutator " + matrix.to_string());
  return CheckOutcome::erratum(
      "{qp, q^2/2} = q^2 does not hold; with {f,g} = f_q g_p - f_p g_q it is -q^2 (closed form, symbolic "
      "derivatives and ham^-1[ham qp, ham q^2/2] agree); {q^2/2, p^2/2} = qp and {qp, p^2/2} = p^2 hold");
}

CheckOutcome poisson_clifford_product(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  auto random_pc = [&] { return PoissonCliffordElement{random_rational(rng), random_quad(rng)}; };
  for (int t = 0; t < n; ++t) {
    auto x = random_pc(), y = random_pc(), z = random_pc();
    if (pclifford_mul(pclifford_mul(x, y), z) != pclifford_mul(x, pclifford_mul(y, z)))
      return CheckOutcome::fail("H_Q product not associative");
    if (ham_extended(pclifford_mul(x, y)) != hsp_product(ham_extended(x), ham_extended(y)))
      return CheckOutcome::fail("ham is not multiplicative on H_Q");
  }
  return CheckOutcome::pass(cases_detail(n, "random triples: associative, ham_extended multiplicative"));
}

// ---- graded_tensor ----

CheckOutcome graded_associative(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n2 = ctx.count(200), n3 = 50;
  for (int t = 0; t < n2 + n3 + 20; ++t) {
    int n = t < n2 ? 2 : (t < n2 + n3 ? 3 : 1);
    auto x = random_graded(rng, n), y = random_graded(rng, n), z = random_graded(rng, n);
    if ((x * y) * z != x * (y * z)) return CheckOutcome::fail("(xy)z != x(yz) at n = " + std::to_string(n));
  }
  return CheckOutcome::pass(std::to_string(n2) + " triples at n = 2, " + std::to_string(n3) + " at n = 3, 20 at n = 1");
}

CheckOutcome graded_unit(const CheckContext& ctx) {
  auto rng = stream(ctx);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 50; ++t) {
      auto x = random_graded(rng, n);
      auto e = GradedTensorElement::unit(n);
      if (e * x != x || x * e != x) return CheckOutcome::fail("unit law fails at n = " + std::to_string(n));
    }
  return CheckOutcome::pass("50 random elements for each n = 1..3");
}

CheckOutcome graded_clifford_relations(const CheckContext&) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<GradedTensorElement> gens;
    for (int s = 1; s <= n; ++s)
      for (Slot v : {Slot::Q, Slot::P}) gens.push_back(embed_generator(s, v, n));
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (gens[a] * gens[a] != GradedTensorElement::unit(n) * Rational(-1))
        return CheckOutcome::fail("generator squares to " + (gens[a] * gens[a]).to_string());
      for (std::size_t b = 0; b < gens.size(); ++b) {
        Rational c = clifford_relation_check(gens[a], gens[b]);
        if (c != (a == b ? Rational(-2) : Rational(0)))
          return CheckOutcome::fail("uv + vu = " + c.to_string() + " e for " + gens[a].to_string() + ", " +
                                    gens[b].to_string());
      }
    }
  }
  return CheckOutcome::pass("n = 1..3: all 2n generators square to -e and pairwise anticommute");
}

CheckOutcome graded_closed_basis(const CheckContext& ctx) {
  auto rng = stream(ctx);
  for (int n = 1; n <= 4; ++n) {
    const GradedTensorElement::Key limit = GradedTensorElement::Key{1} << (2 * n);
    for (int t = 0; t < 50; ++t) {
      auto x = random_graded(rng, n, 1), y = random_graded(rng, n, 1);
      auto xy = x * y;
      if (xy.terms().size() != 1) return CheckOutcome::fail("basis product is not a single basis element");
      if (xy.terms().begin()->first >= limit) return CheckOutcome::fail("product key outside the 4^n basis");
    }
  }
  return CheckOutcome::pass("n = 1..4: basis products stay in the 4^n basis");
}

CheckOutcome graded_factor_subalgebra(const CheckContext& ctx) {
  auto rng = stream(ctx);
  const int n = 3;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < 50; ++t) {
      auto supported = [&] {
        GradedTensorElement x(n);
        for (int k = 0; k < 3; ++k) {
          std::vector<Slot> slots(n, Slot::E);
          slots[s] = static_cast<Slot>(rng.uniform(0, 3));
          x.add_term(GradedTensorElement::encode(slots), random_rational(rng));
        }
        return x;
      };
      auto xy = supported() * supported();
      for (const auto& [key, c] : xy.terms()) {
        auto slots = GradedTensorElement::decode(key, n);
        for (int r = 0; r < n; ++r)
          if (r != s && slots[r] != Slot::E) return CheckOutcome::fail("product left factor " + std::to_string(s + 1));
      }
    }
  return CheckOutcome::pass("n = 3: products of slot-supported elements stay in the slot");
}

CheckOutcome graded_poisson_relabel(const CheckContext&) {
  const std::array<Slot, 4> all = {Slot::E, Slot::Q, Slot::P, Slot::J};
  for (Slot a : all)
    for (Slot b : all) {
      auto [sign, c] = slot_product(a, b);
      PoissonCliffordElement expected = slot_to_poisson(c);
      if (sign < 0) expected = {-expected.scalar, -expected.quad};
      if (pclifford_mul(slot_to_poisson(a), slot_to_poisson(b)) != expected)
        return CheckOutcome::fail("relabelling not multiplicative at " + slot_name(a) + ", " + slot_name(b));
    }
  return CheckOutcome::pass("e_q -> qp, e_p -> (p^2 - q^2)/2, j -> (q^2 + p^2)/2 is an algebra isomorphism onto H_Q");
}

CheckOutcome graded_quadratic_surjection(const CheckContext&) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<Rational>> rows;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int a = 0; a < 2 * n; ++a)
      for (int b = a; b < 2 * n; ++b) index.emplace(std::make_pair(a, b), index.size());
    auto push = [&](const std::vector<Slot>& slots) {
      std::vector<Rational> row(index.size());
      for (const auto& [ab, c] : quadratic_image(GradedTensorElement::basis(slots))) row[index.at(ab)] = c;
      rows.push_back(row);
    };
    for (int s = 0; s < n; ++s)
      for (Slot v : {Slot::Q, Slot::P, Slot::J}) {
        std::vector<Slot> slots(n, Slot::E);
        slots[s] = v;
        push(slots);
      }
    for (int s = 0; s < n; ++s)
      for (int r = s + 1; r < n; ++r)
        for (Slot u : {Slot::Q, Slot::P})
          for (Slot v : {Slot::Q, Slot::P}) {
            std::vector<Slot> slots(n, Slot::E);
            slots[s] = u;
            slots[r] = v;
            push(slots);
          }
    int rank = rational_rank(rows);
    if (rank != n * (2 * n + 1))
      return CheckOutcome::fail("rank " + std::to_string(rank) + " at n = " + std::to_string(n));
  }
  return CheckOutcome::pass("n = 1..4: image has full dimension n(2n+1)");
}

// ---- quantize ----

CheckOutcome quantize_poisson_commutator(const CheckContext& ctx) {
  for (const auto& f : generators())
    for (const auto& g : generators())
      if (!verify_poisson_commutator(f, g).equal)
        return CheckOutcome::fail("Q({f,g}) != [Q f, Q g] for " + f.to_string() + ", " + g.to_string());
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng), g = random_quad(rng);
    auto w = verify_poisson_commutator(f, g);
    if (!w.equal) return CheckOutcome::fail("difference " + w.difference.to_string() + " for f = " + f.to_string());
  }
  return CheckOutcome::pass("9 generator pairs and " + cases_detail(n, "random pairs, exact in the Weyl algebra"));
}

CheckOutcome quantize_anti_hermitian(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(500);
  for (int t = 0; t < n; ++t) {
    QuadPoly f = random_quad(rng);
    WeylElement q = weyl_quantize(f);
    if (!(q + adjoint(q)).is_zero()) return CheckOutcome::fail("Q(f) + Q(f)^+ != 0 for f = " + f.to_string());
    WeylElement h = hermitian_part(f);
    if (adjoint(h) != h) return CheckOutcome::fail("i Q(f) not formally Hermitian");
  }
  return CheckOutcome::pass(cases_detail(n, "random f"));
}

CheckOutcome quantize_fock_block(const CheckContext&) {
  const std::size_t n = 32;
  double worst = 0;
  for (const auto& f : generators())
    for (const auto& g : generators()) worst = std::max(worst, poisson_commutator_defect(f, g, n));
  std::string detail = "N = 32, leading 30x30 block, max defect " + dsl::format_double(worst);
  return worst <= 1e-9 ? CheckOutcome::pass(detail) : CheckOutcome::fail(detail);
}

CheckOutcome quantize_hermitian_numeric(const CheckContext& ctx) {
  auto rng = stream(ctx);
  for (std::size_t n : {3u, 8u, 16u, 33u, 64u})
    for (int t = 0; t < 8; ++t) {
      QuadPoly f = random_quad(rng);
      FockMatrix h = fock_hermitian_part(f, n);
      if (!h.is_hermitian(1e-12))
        return CheckOutcome::fail("i Q_N(f) not Hermitian at N = " + std::to_string(n) + " for f = " + f.to_string());
    }
  return CheckOutcome::pass("8 random f at each N in {3, 8, 16, 33, 64}, tolerance 1e-12");
}

CheckOutcome quantize_ladder_spectrum(const CheckContext&) {
  QuadPoly osc = QuadPoly::q2_half() + QuadPoly::p2_half();
  for (std::size_t n : {8u, 16u, 32u}) {
    std::vector<double> expected;
    for (std::size_t k = 0; k + 1 < n; ++k) expected.push_back(k + 0.5);
    expected.push_back((n - 1) / 2.0);
    std::sort(expected.begin(), expected.end());
    std::vector<double> got = spectrum(osc, n);
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(got[k] - expected[k]) > 1e-10)
        return CheckOutcome::fail("N = " + std::to_string(n) + ": eigenvalue " + dsl::format_double(got[k]) +
                                  " expected " + dsl::format_double(expected[k]));
  }
  return CheckOutcome::pass("N in {8, 16, 32}: {n + 1/2 : n <= N-2} plus the corner value (N-1)/2, tolerance 1e-10");
}

CheckOutcome quantize_hermitian_convention(const CheckContext&) {
  for (const auto& f : generators())
    for (const auto& g : generators()) {
      WeylElement qf = weyl_quantize(f), qg = weyl_quantize(g);
      WeylElement hf = hermitian_part(f), hg = hermitian_part(g);
      WeylElement comm_h = weyl_commutator(hf, hg);
      if (!(qf + adjoint(qf)).is_zero() || adjoint(hf) != hf)
        return CheckOutcome::fail("convention broken for " + f.to_string());
      if (!(comm_h + adjoint(comm_h)).is_zero()) return CheckOutcome::fail("commutator of Hermitian parts");
      if (!verify_poisson_commutator(f, g).equal) return CheckOutcome::fail("Q({f,g}) != [Q f, Q g]");
    }
  return CheckOutcome::erratum(
      "Q({f,g}) = [Q(f), Q(g)] forces Q(f) to be anti-Hermitian (a commutator of Hermitian operators is "
      "anti-Hermitian), so Q(f) cannot itself be Hermitian; Q(f) is anti-Hermitian and the Hermitian "
      "observable is i*Q(f), verified on all generator pairs");
}

CheckOutcome quantize_tensor(const CheckContext&) {
  QuadPoly osc = QuadPoly::q2_half() + QuadPoly::p2_half();
  const std::size_t n = 4;
  FockMatrix single = fock_quantize(osc, n);
  if (tensor_quantize({osc}, n).entries.data() != single.entries.data())
    return CheckOutcome::fail("n = 1 differs from fock_realize");
  std::vector<double> base = hermitian_spectrum(fock_hermitian_part(osc, n));
  FockMatrix t = tensor_quantize({osc, QuadPoly{}}, n);
  std::vector<double> got = hermitian_spectrum(FockMatrix(t.dim, t.entries * Complex(0, 1)));
  std::vector<double> expected;
  for (double v : base) expected.insert(expected.end(), n, v);
  for (std::size_t k = 0; k < got.size(); ++k)
    if (std::abs(got[k] - expected[k]) > 1e-10) return CheckOutcome::fail("slot spectrum multiplicity");
  CMatrix x1 = embed_in_slot(fock_quantize(QuadPoly::qp(), n).entries, 0, 2);
  CMatrix x2 = embed_in_slot(fock_quantize(osc, n).entries, 1, 2);
  double comm = (x1 * x2 - x2 * x1).max_abs();
  if (comm > 1e-12) return CheckOutcome::fail("slot-local operators do not commute: " + dsl::format_double(comm));
  return CheckOutcome::pass("n = 2, N = 4: slot-1 spectrum with multiplicity 4; different slots commute");
}

CheckOutcome quantize_clifford_unit(const CheckContext& ctx) {
  auto rng = stream(ctx);
  if (quantize_clifford({1, QuadPoly{}}) != WeylElement::identity()) return CheckOutcome::fail("Q(e) != 1");
  for (int t = 0; t < 100; ++t) {
    QuadPoly f = random_quad(rng);
    Rational l = random_rational(rng);
    if (quantize_clifford({l, f}) != WeylElement::scalar(l) + weyl_quantize(f))
      return CheckOutcome::fail("Q(l e + f) != l + Q(f)");
  }
  return CheckOutcome::pass("id_F -> identity operator; linear extension on 100 random elements");
}

// ---- dsl ----

dsl::ExprPtr random_expr(Xoshiro256& rng, int depth) {
  using dsl::Expr;
  using dsl::ExprKind;
  auto e = std::make_shared<Expr>();
  int pick = depth <= 0 ? static_cast<int>(rng.uniform(0, 1)) : static_cast<int>(rng.uniform(0, 10));
  static const char* kSymbols[] = {"q", "p", "i", "j", "k", "e", "A", "B", "J", "id", "x1"};
  switch (pick) {
    case 0: e->kind = ExprKind::Literal; e->value = Rational(rng.uniform(0, 40)); break;
    case 1: e->kind = ExprKind::Symbol; e->name = kSymbols[rng.uniform(0, 10)]; break;
    case 2: e->kind = ExprKind::Neg; e->args = {random_expr(rng, depth - 1)}; break;
    case 3: case 4: case 5: case 6: {
      static const ExprKind kBinary[] = {ExprKind::Add, ExprKind::Sub, ExprKind::Mul, ExprKind::Div};
      e->kind = kBinary[pick - 3];
      e->args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
      break;
    }
    case 7: e->kind = ExprKind::Pow; e->exponent = static_cast<int>(rng.uniform(1, 2)); e->args = {random_expr(rng, depth - 1)}; break;
    case 8: e->kind = ExprKind::PoissonBracket; e->args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}; break;
    case 9: e->kind = ExprKind::Commutator; e->args = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}; break;
    default: {
      e->kind = ExprKind::Call;
      e->name = dsl::kFunctions[rng.uniform(0, 4)];
      int args = static_cast<int>(rng.uniform(1, 3));
      for (int a = 0; a < args; ++a) e->args.push_back(random_expr(rng, depth - 1));
    }
  }
  return e;
}

CheckOutcome dsl_print_roundtrip(const CheckContext& ctx) {
  auto rng = stream(ctx);
  int n = ctx.count(1000);
  for (int t = 0; t < n; ++t) {
    dsl::ExprPtr e = random_expr(rng, static_cast<int>(rng.uniform(0, 5)));
    std::string s = dsl::print(*e);
    dsl::ExprPtr p = dsl::parse(s);
    if (!(*p == *e)) return CheckOutcome::fail("parse(print(e)) != e for " + s);
    if (dsl::print(*dsl::parse(dsl::print(*p))) != s) return CheckOutcome::fail("print not stable for " + s);
  }
  return CheckOutcome::pass(cases_detail(n, "random syntax trees: parse(print(e)) = e"));
}

CheckOutcome dsl_fuzz(const CheckContext& ctx) {
  auto rng = stream(ctx);
  const int n = 100000;
  static const std::string kAlphabet = "qpeijkJABid0123456789+-*/^(){}[], hamquntizespcrod";
  int parsed = 0;
  for (int t = 0; t < n; ++t) {
    std::string s(static_cast<std::size_t>(rng.uniform(0, 24)), ' ');
    bool raw = rng.uniform(0, 3) == 0;
    for (auto& c : s)
      c = raw ? static_cast<char>(rng.uniform(0, 255)) : kAlphabet[rng.uniform(0, kAlphabet.size() - 1)];
    dsl::ExprPtr e;
    try {
      e = dsl::parse(s);
    } catch (const ParseError& err) {
      if (err.position() > s.size()) return CheckOutcome::fail("parse error position out of range");
      continue;
    } catch (const std::exception& err) {
      return CheckOutcome::fail(std::string("parse raised a non-positioned error: ") + err.what());
    }
    ++parsed;
    for (auto mode : {dsl::Mode::Quaternion, dsl::Mode::Poly, dsl::Mode::Endf}) {
      try {
        dsl::evaluate(*e, mode);
      } catch (const EvalError& err) {
        if (err.position() == EvalError::npos) return CheckOutcome::fail("unpositioned evaluation error for " + s);
      } catch (const std::exception& err) {
        return CheckOutcome::fail("evaluation raised " + std::string(err.what()) + " for " + s);
      }
    }
  }
  return CheckOutcome::pass(std::to_string(n) + " random inputs (" + std::to_string(parsed) +
                            " parsed); every failure is a positioned ParseError or EvalError");
}

CheckOutcome dsl_precedence(const CheckContext&) {
  static const std::pair<const char*, const char*> kGolden[] = {
      {"1 + 2*3", "Add(1,Mul(2,3))"},
      {"1 - 2 - 3", "Sub(Sub(1,2),3)"},
      {"8/4/2", "Div(Div(8,4),2)"},
      {"-q^2", "Neg(Pow(q,2))"},
      {"(-q)^2", "Pow(Neg(q),2)"},
      {"q*p^2", "Mul(q,Pow(p,2))"},
      {"q^2/2", "Div(Pow(q,2),2)"},
      {"3/4 + q*p", "Add(Div(3,4),Mul(q,p))"},
      {"-q*p", "Mul(Neg(q),p)"},
      {"q*-p", "Mul(q,Neg(p))"},
      {"{q*p, q^2/2}", "PoissonBracket(Mul(q,p),Div(Pow(q,2),2))"},
      {"[i, j]", "Commutator(i,j)"},
      {"2*[A, B]^2", "Mul(2,Pow(Commutator(A,B),2))"},
      {"ham(q^2 + p^2)", "Call(ham,Add(Pow(q,2),Pow(p,2)))"},
      {"spectrum(q*p, 8)", "Call(spectrum,Mul(q,p),8)"},
      {"i*j*k", "Mul(Mul(i,j),k)"},
  };
  for (const auto& [input, tree] : kGolden) {
    std::string got = dsl::tree_string(*dsl::parse(input));
    if (got != tree) return CheckOutcome::fail(std::string(input) + " parsed as " + got + ", expected " + tree);
  }
  return CheckOutcome::pass(std::to_string(std::size(kGolden)) + " golden parses");
}

// ---- cli ----

CheckOutcome cli_deterministic(const CheckContext& ctx) {
  std::vector<Check> subset;
  for (const auto& c : default_checks())
    if (c.module != "cli" && c.name != "dsl.fuzz_no_crash") subset.push_back(c);
  std::string first = report_to_string(run_checks(subset, ctx.seed, ctx.cases, "determinism"));
  std::string second = report_to_string(run_checks(subset, ctx.seed, ctx.cases, "determinism"));
  if (first != second) return CheckOutcome::fail("two runs with the same seed produced different reports");
  return CheckOutcome::pass("two in-process runs of " + std::to_string(subset.size()) +
                            " checks produced identical report bytes");
}

CheckOutcome cli_registry_coverage(const CheckContext&) {
  auto missing = missing_coverage(default_checks());
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    return CheckOutcome::fail("uncovered: " + list);
  }
  std::set<std::string> modules;
  for (const auto& r : required_invariants()) modules.insert(r.module);
  return CheckOutcome::pass(std::to_string(required_invariants().size()) + " invariants across " +
                            std::to_string(modules.size()) + " modules are covered");
}

std::vector<Check> build_checks() {
  std::vector<Check> c = {
      {"cli.registry_coverage", "cli", "every module invariant has a named check", cli_registry_coverage},
      {"cli.verify_deterministic", "cli", "identical report bytes for a fixed seed", cli_deterministic},
      {"dsl.fuzz_no_crash", "dsl", "random inputs evaluate or give positioned errors", dsl_fuzz},
      {"dsl.precedence_golden", "dsl", "operator precedence matches the grammar", dsl_precedence},
      {"dsl.print_roundtrip", "dsl", "parse . print . parse = parse", dsl_print_roundtrip},
      {"endf_sp.hsp_isomorphism", "endf_sp", "H_F -> H_sp(F) is an algebra isomorphism", endf_hsp_isomorphism},
      {"endf_sp.sp_cross_on_sigma", "endf_sp", "cross product equals [X,Y]/2 on Sigma", endf_sp_cross_sigma},
      {"endf_sp.sp_not_closed", "endf_sp", "sp(F) is not closed under composition", endf_sp_not_closed},
      {"endf_sp.table_matches_composition", "endf_sp", "End F table equals matrix products", endf_table_composition},
      {"endf_sp.table_vs_process_erratum", "endf_sp", "End F table versus process table", endf_table_vs_process},
      {"graded_tensor.associative", "graded_tensor", "graded_mul is associative", graded_associative},
      {"graded_tensor.clifford_relations", "graded_tensor", "generators anticommute and square to -e",
       graded_clifford_relations},
      {"graded_tensor.closed_basis", "graded_tensor", "products stay in the 4^n basis", graded_closed_basis},
      {"graded_tensor.factor_subalgebra", "graded_tensor", "each factor is a subalgebra", graded_factor_subalgebra},
      {"graded_tensor.poisson_relabel", "graded_tensor", "relabelling onto H_Q is multiplicative",
       graded_poisson_relabel},
      {"graded_tensor.quadratic_surjection", "graded_tensor", "surjection onto quadratic forms",
       graded_quadratic_surjection},
      {"graded_tensor.unit", "graded_tensor", "e x .. x e is a two-sided unit", graded_unit},
      {"poisson.clifford_product", "poisson", "H_Q product is associative and ham-compatible", poisson_clifford_product},
      {"poisson.cross_sign_erratum", "poisson", "sign relating a_f x a_g and {f,g} j", poisson_cross_sign_erratum},
      {"poisson.qp_bracket_sign_erratum", "poisson", "{qp, q^2/2} = -q^2", poisson_qp_bracket_erratum},
      {"poisson.generator_matrices", "poisson", "generator matrices of ham", poisson_generator_matrices},
      {"poisson.ham_inverse_roundtrip", "poisson", "ham_inverse . ham = id", poisson_ham_inverse},
      {"poisson.ham_lie_isomorphism", "poisson", "ham{f,g} = [ham f, ham g]", poisson_lie_isomorphism},
      {"poisson.ham_traceless", "poisson", "ham lands in sp(F)", poisson_ham_traceless},
      {"poisson.hamfield_cross_generators", "poisson", "j-coefficient of a_f x a_g is {f,g}", poisson_hamfield_cross},
      {"poisson.jacobi_identity", "poisson", "Jacobi identity", poisson_jacobi},
      {"poisson.vector_field_bracket_sign", "poisson", "a_{f,g} = -[a_f, a_g]", poisson_vector_field_sign},
      {"process.compose_associative", "process", "compose is associative", process_compose_associative},
      {"process.quaternion_map", "process", "to_quaternion_unit versus the quaternion product", process_quaternion_map},
      {"process.table_matches_pole_rule", "process", "stored table equals the pole rule", process_table_pole_rule},
      {"quantize.anti_hermitian", "quantize", "Q(f) is anti-Hermitian", quantize_anti_hermitian},
      {"quantize.clifford_unit", "quantize", "Q(e) is the identity operator", quantize_clifford_unit},
      {"quantize.fock_commutator_block", "quantize", "truncated commutators on the leading block", quantize_fock_block},
      {"quantize.hermitian_convention_erratum", "quantize", "Hermitian versus anti-Hermitian image",
       quantize_hermitian_convention},
      {"quantize.hermitian_numeric", "quantize", "i Q_N(f) is Hermitian", quantize_hermitian_numeric},
      {"quantize.ladder_spectrum", "quantize", "oscillator spectrum", quantize_ladder_spectrum},
      {"quantize.poisson_commutator_exact", "quantize", "Q({f,g}) = [Q f, Q g] exactly", quantize_poisson_commutator},
      {"quantize.tensor_slots", "quantize", "tensor quantization slot structure", quantize_tensor},
      {"quaternion.associative_unital", "quaternion", "qmul associative and unital", quaternion_associative_unital},
      {"quaternion.clifford_property", "quaternion", "v^2 = -<v,v> e on the tangent plane", quaternion_clifford},
      {"quaternion.conjugate_pure_isometry", "quaternion", "g a g~ preserves dot and S^2", quaternion_conjugate_pure},
      {"quaternion.omega_dual_expression", "quaternion", "<jv, w> = <j, vw>", quaternion_omega_dual},
      {"quaternion.norm_multiplicative", "quaternion", "|ab|^2 = |a|^2 |b|^2", quaternion_norm_multiplicative},
      {"quaternion.z2_grading", "quaternion", "Z2 grading of H_F", quaternion_z2_grading},
      {"scalars.complex_f64_ulp", "scalars", "conversion within 1 ulp", scalars_complex_f64_ulp},
      {"scalars.field_axioms", "scalars", "field axioms, exact", scalars_field_axioms},
      {"symplectic.block_diagonal", "symplectic", "different planes are omega-orthogonal", symplectic_block_diagonal},
      {"symplectic.form_structure_roundtrip", "symplectic", "omega <-> J <-> <,> roundtrip", symplectic_roundtrip},
      {"symplectic.j_in_sp", "symplectic", "J^2 = -id and J preserves omega", symplectic_j_in_sp},
  };
  std::sort(c.begin(), c.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return c;
}

}  // namespace

const std::vector<Check>& default_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

const std::vector<RequiredInvariant>& required_invariants() {
  static const std::vector<RequiredInvariant> r = {
      {"scalars", "field axioms on Rational and GaussianRational", "scalars.field_axioms"},
      {"scalars", "to_complex_f64 within 1 ulp", "scalars.complex_f64_ulp"},
      {"process", "to_quaternion_unit against the quaternion product", "process.quaternion_map"},
      {"process", "compose associative on all 512 triples", "process.compose_associative"},
      {"quaternion", "qmul associative and e-unital", "quaternion.associative_unital"},
      {"quaternion", "Clifford property on the tangent plane", "quaternion.clifford_property"},
      {"quaternion", "norm multiplicativity", "quaternion.norm_multiplicative"},
      {"quaternion", "Z2 grading", "quaternion.z2_grading"},
      {"quaternion", "conjugate_pure preserves dot products and S^2", "quaternion.conjugate_pure_isometry"},
      {"symplectic", "scalar_from_form then j_from_form roundtrip", "symplectic.form_structure_roundtrip"},
      {"symplectic", "J^2 = -id and J in Sp(F)", "symplectic.j_in_sp"},
      {"symplectic", "block diagonality across planes", "symplectic.block_diagonal"},
      {"endf_sp", "End F table equals matrix composition", "endf_sp.table_matches_composition"},
      {"endf_sp", "difference from the process table", "endf_sp.table_vs_process_erratum"},
      {"endf_sp", "H_F -> H_sp(F) algebra isomorphism", "endf_sp.hsp_isomorphism"},
      {"endf_sp", "sp(F) not closed under composition", "endf_sp.sp_not_closed"},
      {"poisson", "ham is a Lie-algebra isomorphism", "poisson.ham_lie_isomorphism"},
      {"poisson", "vector-field bracket sign", "poisson.vector_field_bracket_sign"},
      {"poisson", "Jacobi identity", "poisson.jacobi_identity"},
      {"poisson", "cross/bracket link on generator pairs", "poisson.hamfield_cross_generators"},
      {"poisson", "ham output traceless", "poisson.ham_traceless"},
      {"poisson", "ham_inverse . ham = id", "poisson.ham_inverse_roundtrip"},
      {"graded_tensor", "graded_mul associative", "graded_tensor.associative"},
      {"graded_tensor", "two-sided unit", "graded_tensor.unit"},
      {"graded_tensor", "Clifford relations of the 2n generators", "graded_tensor.clifford_relations"},
      {"graded_tensor", "closure on the 4^n basis", "graded_tensor.closed_basis"},
      {"graded_tensor", "each factor is a subalgebra", "graded_tensor.factor_subalgebra"},
      {"quantize", "Q({f,g}) = [Q f, Q g] exactly", "quantize.poisson_commutator_exact"},
      {"quantize", "Q(f) anti-Hermitian", "quantize.anti_hermitian"},
      {"quantize", "truncated commutator defect on the leading block", "quantize.fock_commutator_block"},
      {"quantize", "i Q_N(f) Hermitian", "quantize.hermitian_numeric"},
      {"quantize", "oscillator ladder spectrum", "quantize.ladder_spectrum"},
      {"dsl", "parse . print . parse = parse", "dsl.print_roundtrip"},
      {"dsl", "fuzzed inputs never crash", "dsl.fuzz_no_crash"},
      {"dsl", "precedence golden suite", "dsl.precedence_golden"},
      {"cli", "verify deterministic for a seed", "cli.verify_deterministic"},
      {"cli", "registry coverage", "cli.registry_coverage"},
  };
  return r;
}

std::vector<std::string> missing_coverage(const std::vector<Check>& checks) {
  std::set<std::string> names;
  for (const auto& c : checks) names.insert(c.name);
  std::vector<std::string> missing;
  for (const auto& r : required_invariants())
    if (!names.count(r.check)) missing.push_back(r.check);
  return missing;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.status != CheckStatus::Fail; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

VerificationReport run_checks(const std::vector<Check>& checks, std::uint64_t seed, int cases,
                              const std::string& suite) {
  std::vector<Check> sorted = checks;
  std::sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  std::vector<CheckResult> results(sorted.size());
  const auto n = static_cast<std::ptrdiff_t>(sorted.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Check& c = sorted[k];
    CheckContext ctx{seed, cases, c.name};
    CheckOutcome out;
    try {
      out = c.run(ctx);
    } catch (const std::exception& e) {
      out = CheckOutcome::fail(std::string("exception: ") + e.what());
    }
    results[k] = {c.name, out.status, out.detail};
  }
  return {suite, std::move(results), seed, tool_version()};
}

VerificationReport run_default_suite(std::uint64_t seed, int cases) {
  return run_checks(default_checks(), seed, cases, "default");
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return {{"suite", report.suite},
          {"checks", checks},
          {"summary", {{"passed", report.passed()}, {"failed", report.failed()}}},
          {"seed", report.seed},
          {"tool_version", report.tool_version}};
}

std::string report_to_string(const VerificationReport& report) { return report_to_json(report).dump() + "\n"; }

void emit_report(const VerificationReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open report file '" + path + "' for writing");
  out << report_to_string(report);
  out.flush();
  if (!out) throw Error("failed writing report file '" + path + "'");
}

}  // namespace sympcliff

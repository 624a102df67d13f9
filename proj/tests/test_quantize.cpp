#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/fock.hpp"
#include "sympcliff/weyl.hpp"

using namespace sympcliff;
using test::R;

namespace {
const GaussianRational kI = GaussianRational::i();

// Oracle: words over {q, p}, normal ordered by repeatedly rewriting the
// leftmost "pq" as "qp" - i.
using Words = std::map<std::string, GaussianRational>;

void add(Words& w, const std::string& word, const GaussianRational& c) {
  w[word] += c;
  if (w[word].is_zero()) w.erase(word);
}

Words normal_order(Words w) {
  for (;;) {
    auto it = std::find_if(w.begin(), w.end(), [](const auto& kv) { return kv.first.find("pq") != std::string::npos; });
    if (it == w.end()) return w;
    std::string word = it->first;
    GaussianRational c = it->second;
    w.erase(it);
    auto pos = word.find("pq");
    add(w, word.substr(0, pos) + "qp" + word.substr(pos + 2), c);
    add(w, word.substr(0, pos) + word.substr(pos + 2), c * -kI);
  }
}

Words from_weyl(const WeylElement& x) {
  Words w;
  for (const auto& [mn, c] : x.terms()) add(w, std::string(mn.first, 'q') + std::string(mn.second, 'p'), c);
  return w;
}

Words product(const Words& a, const Words& b) {
  Words out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add(out, u + v, c * d);
  return normal_order(out);
}

WeylElement random_weyl(Xoshiro256& rng) {
  WeylElement x;
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int t = 0; t < terms; ++t)
    x.add_term(static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)), random_gaussian(rng));
  return x;
}

std::vector<double> eigen_oracle(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

const QuadPoly kOsc = QuadPoly::q2_half() + QuadPoly::p2_half();
}  // namespace

TEST_CASE("weyl_mul examples") {
  auto q = WeylElement::q(), p = WeylElement::p();
  CHECK(p * q == WeylElement::monomial(1, 1) - WeylElement::scalar(kI));
  CHECK(q * p == WeylElement::monomial(1, 1));
  auto q2 = q * q, p2 = p * p;
  CHECK(weyl_commutator(q2, p2) == (WeylElement::monomial(1, 1) * 2 - WeylElement::scalar(kI)) * (kI * 2));
  CHECK((p * q).to_string() == "q̂*p̂ - i");
}

TEST_CASE("weyl_mul agrees with the word-rewriting oracle") {
  Xoshiro256 rng(61);
  for (int t = 0; t < 300; ++t) {
    auto x = random_weyl(rng), y = random_weyl(rng), z = random_weyl(rng);
    REQUIRE(from_weyl(x * y) == product(from_weyl(x), from_weyl(y)));
    REQUIRE((x * y) * z == x * (y * z));
  }
}

TEST_CASE("adjoint reverses products") {
  Xoshiro256 rng(63);
  for (int t = 0; t < 200; ++t) {
    auto x = random_weyl(rng), y = random_weyl(rng);
    REQUIRE(adjoint(x * y) == adjoint(y) * adjoint(x));
    REQUIRE(adjoint(adjoint(x)) == x);
  }
  CHECK(adjoint(WeylElement::monomial(1, 1)) == WeylElement::monomial(1, 1) - WeylElement::scalar(kI));
}

TEST_CASE("weyl_quantize") {
  CHECK(weyl_quantize(QuadPoly::q2_half()) == WeylElement::monomial(2, 0, GaussianRational(0, R(-1, 2))));
  CHECK(weyl_quantize(QuadPoly::qp()) == WeylElement::monomial(1, 1, -kI) - WeylElement::scalar(R(1, 2)));
  CHECK(weyl_quantize(QuadPoly::qp()).to_string() == "-i*q̂*p̂ - 1/2");
  CHECK(weyl_quantize({}).is_zero());
  // Q(qp) = -i (q p + p q) / 2 via the oracle.
  Words sym = normal_order({{"qp", GaussianRational(0, R(-1, 2))}, {"pq", GaussianRational(0, R(-1, 2))}});
  CHECK(from_weyl(weyl_quantize(QuadPoly::qp())) == sym);
}

TEST_CASE("quantization is anti-Hermitian and hermitian_part is Hermitian") {
  Xoshiro256 rng(65);
  for (int t = 0; t < 200; ++t) {
    QuadPoly f = test::random_quad(rng);
    REQUIRE(adjoint(weyl_quantize(f)) == -weyl_quantize(f));
    REQUIRE(adjoint(hermitian_part(f)) == hermitian_part(f));
  }
}

TEST_CASE("verify_poisson_commutator") {
  auto w = verify_poisson_commutator(QuadPoly::q2_half(), QuadPoly::p2_half());
  CHECK(w.equal);
  CHECK(w.lhs == weyl_quantize(QuadPoly::qp()));
  auto same = verify_poisson_commutator(QuadPoly::qp(), QuadPoly::qp());
  CHECK(same.equal);
  CHECK(same.lhs.is_zero());
  auto w2 = verify_poisson_commutator(QuadPoly::qp(), QuadPoly::q2_half());
  CHECK(w2.equal);
  CHECK(w2.lhs == weyl_quantize(QuadPoly{-1, 0, 0}));
  Xoshiro256 rng(67);
  for (int t = 0; t < 200; ++t) REQUIRE(verify_poisson_commutator(test::random_quad(rng), test::random_quad(rng)).equal);
}

TEST_CASE("quantize_clifford sends e to the identity") {
  CHECK(quantize_clifford({1, {}}) == WeylElement::identity());
  CHECK(quantize_clifford({R(2), QuadPoly::qp()}) == WeylElement::scalar(2) + weyl_quantize(QuadPoly::qp()));
}

TEST_CASE("Fock ladder matrices") {
  CMatrix q = fock_q(3);
  CHECK(std::abs(q(0, 1) - Complex(1 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(q(1, 2) - Complex(1, 0)) < 1e-15);
  CHECK((q - q.adjoint()).max_abs() == 0);
  CHECK(fock_realize(WeylElement::q(), 3).entries.max_abs() > 0);
  CHECK((fock_realize(WeylElement::q(), 3).entries - q).max_abs() < 1e-15);
  CHECK(fock_realize(WeylElement(), 3).entries.max_abs() == 0);
  CHECK_THROWS_AS(fock_realize(WeylElement::q(), 2), DomainError);
}

TEST_CASE("canonical commutator holds away from the truncation corner") {
  const std::size_t n = 8;
  CMatrix q = fock_q(n), p = fock_p(n);
  CMatrix c = q * p - p * q;
  CMatrix target = CMatrix::identity(n) * Complex(0, 1);
  CHECK((c - target).max_abs(6, 6) < 1e-10);
  CHECK((c - target).max_abs() > 1);
}

TEST_CASE("realized operators are Hermitian up to the factor i") {
  Xoshiro256 rng(69);
  for (int t = 0; t < 50; ++t) {
    QuadPoly f = test::random_quad(rng);
    REQUIRE(fock_hermitian_part(f, 6).is_hermitian());
    REQUIRE((fock_hermitian_part(f, 6).entries - fock_quantize(f, 6).entries * Complex(0, 1)).max_abs() < 1e-12);
  }
}

TEST_CASE("spectrum of the oscillator") {
  auto ev = spectrum(kOsc, 8);
  std::vector<double> expected = {0.5, 1.5, 2.5, 3.5, 3.5, 4.5, 5.5, 6.5};
  REQUIRE(ev.size() == expected.size());
  for (std::size_t k = 0; k < ev.size(); ++k) CHECK(ev[k] == doctest::Approx(expected[k]).epsilon(1e-10));
  auto oracle = eigen_oracle(fock_hermitian_part(kOsc, 8).entries);
  for (std::size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] - oracle[k]) < 1e-10);
}

TEST_CASE("spectra agree with the Eigen oracle") {
  Xoshiro256 rng(71);
  for (int t = 0; t < 30; ++t) {
    QuadPoly f = test::random_quad(rng);
    std::size_t n = static_cast<std::size_t>(rng.uniform(3, 12));
    auto ev = spectrum(f, n);
    auto oracle = eigen_oracle(fock_hermitian_part(f, n).entries);
    REQUIRE(ev.size() == oracle.size());
    double scale = 1;
    for (double x : oracle) scale = std::max(scale, std::abs(x));
    for (std::size_t k = 0; k < ev.size(); ++k) REQUIRE(std::abs(ev[k] - oracle[k]) < 1e-9 * scale);
  }
}

TEST_CASE("spectrum of qp is symmetric") {
  auto ev = spectrum(QuadPoly::qp(), 8);
  for (std::size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] + ev[ev.size() - 1 - k]) < 1e-8);
  for (double x : spectrum({}, 5)) CHECK(x == 0);
}

TEST_CASE("tensor_quantize") {
  auto one = tensor_quantize({QuadPoly::qp()}, 5);
  CHECK((one.entries - fock_quantize(QuadPoly::qp(), 5).entries).max_abs() == 0);

  auto two = tensor_quantize({kOsc, {}}, 4);
  CHECK(two.dim == 16);
  auto ev = hermitian_spectrum(FockMatrix(16, two.entries * Complex(0, 1)));
  auto slot = spectrum(kOsc, 4);
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(ev[k] - slot[k / 4]) < 1e-10);

  CMatrix x1 = embed_in_slot(fock_quantize(kOsc, 4).entries, 0, 2);
  CMatrix x2 = embed_in_slot(fock_quantize(QuadPoly::qp(), 4).entries, 1, 2);
  CHECK((x1 * x2 - x2 * x1).max_abs() < 1e-12);

  CHECK_THROWS_AS(tensor_quantize({}, 4), DomainError);
  CHECK_THROWS_AS(tensor_quantize({kOsc}, 2), DomainError);
  CHECK_THROWS_AS(tensor_quantize({kOsc, kOsc, kOsc, kOsc, kOsc}, 6), DomainError);  // 6^5 > 4096
  CHECK_NOTHROW(tensor_quantize({kOsc, kOsc}, 64));
}

TEST_CASE("Poisson commutator on the Fock block") {
  Xoshiro256 rng(73);
  for (int t = 0; t < 30; ++t) {
    QuadPoly f = test::random_quad(rng), g = test::random_quad(rng);
    REQUIRE(poisson_commutator_defect(f, g, 10) < 1e-9);
  }
}

TEST_CASE("Weyl formatting") {
  CHECK(weyl_quantize(QuadPoly::q2_half() + QuadPoly::p2_half()).to_string() == "-i*q̂^2/2 - i*p̂^2/2");
  CHECK(WeylElement::scalar(GaussianRational(0, R(1, 2))).to_string() == "i/2");
  CHECK(WeylElement::scalar(R(-1, 2)).to_string() == "-1/2");
  CHECK(WeylElement::monomial(1, 2, GaussianRational(0, R(3, 2))).to_string() == "3*i*q̂*p̂^2/2");
  CHECK(WeylElement::monomial(0, 1, GaussianRational(1, 1)).to_string() == "(1 + i)*p̂");
}

#include "sympcliff/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "sympcliff/dsl.hpp"
#include "sympcliff/endf_sp.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/fock.hpp"
#include "sympcliff/process.hpp"
#include "sympcliff/symplectic.hpp"
#include "sympcliff/verify.hpp"

namespace sympcliff::cli {

namespace {

constexpr const char* kGrammar =
    "expression grammar:\n"
    "  expr    := term ((\"+\"|\"-\") term)*\n"
    "  term    := factor ((\"*\"|\"/\") factor)*\n"
    "  factor  := \"-\" factor | primary (\"^\" integer)?     exponent 1 or 2\n"
    "  primary := number | ident | \"(\" expr \")\" | \"{\" expr \",\" expr \"}\"\n"
    "           | \"[\" expr \",\" expr \"]\" | ident \"(\" expr (\",\" expr)* \")\"\n"
    "symbols: quaternion mode e i j k; poly mode q p; endf mode id J A B\n"
    "functions: ham(f) quantize(f) spectrum(f[, N]) cross(x, y) dot(x, y)\n";

struct Table {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
};

Table make_table(const std::string& algebra) {
  Table t;
  if (algebra == "process") {
    for (ProcessKind k : kAllProcessKinds) t.labels.push_back(SignedProcess{1, k}.to_string());
    for (ProcessKind r : kAllProcessKinds) {
      t.cells.emplace_back();
      for (ProcessKind c : kAllProcessKinds) t.cells.back().push_back(compose({1, r}, {1, c}).to_string());
    }
  } else if (algebra == "quaternion") {
    const std::array<Quaternion, 4> units = {Quaternion::e(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    for (const auto& u : units) t.labels.push_back(u.to_string());
    for (const auto& r : units) {
      t.cells.emplace_back();
      for (const auto& c : units) t.cells.back().push_back(qmul(r, c).to_string());
    }
  } else {
    for (EndfBasis b : kEndfBasis) t.labels.push_back(basis_name(b));
    for (EndfBasis r : kEndfBasis) {
      t.cells.emplace_back();
      for (EndfBasis c : kEndfBasis) t.cells.back().push_back(endf_table(r, c).to_string());
    }
  }
  return t;
}

void print_table(const Table& t, std::ostream& out) {
  std::size_t w = 1;
  for (const auto& l : t.labels) w = std::max(w, l.size());
  for (const auto& row : t.cells)
    for (const auto& c : row) w = std::max(w, c.size());
  auto cell = [&](const std::string& s) { return s + std::string(w - s.size() + 2, ' '); };
  std::string line = cell("*") + "|";
  for (const auto& l : t.labels) line += " " + cell(l);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << "\n" << std::string(line.size(), '-') << "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    line = cell(t.labels[r]) + "|";
    for (const auto& c : t.cells[r]) line += " " + cell(c);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

std::string format_complex(Complex z) {
  std::string re = dsl::format_double(z.real()), im = dsl::format_double(std::abs(z.imag()));
  if (z.imag() == 0.0) return re;
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

nlohmann::json matrix_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

QuadPoly eval_quad(const std::string& text) {
  dsl::Value v = dsl::evaluate(text, dsl::Mode::Poly);
  auto f = std::get_if<Poly2>(&v);
  if (!f) throw EvalError("expected a polynomial in q, p");
  if (!f->is_homogeneous_quadratic())
    throw EvalError("expected a homogeneous quadratic polynomial, got " + f->to_string());
  return f->to_quad();
}

void report_parse_error(const ParseError& e, const std::string& input, std::ostream& err) {
  err << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
  if (!e.expected().empty()) {
    err << "expected one of:";
    for (const auto& x : e.expected()) err << " " << x;
    err << "\n";
  }
  err << kGrammar;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMPCLIFF_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford, symplectic and quantization algebra toolkit", "sympcliff"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string algebra;
  auto* tables = app.add_subcommand("tables", "Print a 4x4 multiplication table");
  tables->add_option("--algebra", algebra, "process, quaternion or endf")
      ->required()
      ->check(CLI::IsMember({"process", "quaternion", "endf"}));
  add_format(tables);

  std::string expr;
  auto* bracket = app.add_subcommand("bracket", "Evaluate a Poisson bracket expression in q, p");
  bracket->add_option("expr", expr, "Expression, e.g. \"{q*p, p^2/2}\"")->required();
  add_format(bracket);

  auto* hamc = app.add_subcommand("ham", "Matrix of the Hamiltonian field of a quadratic polynomial");
  hamc->add_option("poly", expr, "Homogeneous quadratic polynomial in q, p")->required();
  add_format(hamc);

  std::size_t fock_dim = 0;
  auto* quant = app.add_subcommand("quantize", "Weyl quantization (normal-ordered form, optional Fock matrix)");
  quant->add_option("poly", expr, "Homogeneous quadratic polynomial in q, p")->required();
  quant->add_option("--fock-dim", fock_dim, "Also print the matrix on N oscillator levels")
      ->check(CLI::Range(std::size_t{3}, kMaxTensorDim));
  add_format(quant);

  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of i*Q_N(f)");
  spec->add_option("poly", expr, "Homogeneous quadratic polynomial in q, p")->required();
  spec->add_option("--fock-dim", fock_dim, "Number of oscillator levels N")
      ->required()
      ->check(CLI::Range(std::size_t{3}, std::size_t{512}));
  add_format(spec);

  int particles = 0;
  auto* decomp = app.add_subcommand("decompose", "Phase-space decomposition for m particles in R^3");
  decomp->add_option("--particles", particles, "Number of particles m")->required()->check(CLI::Range(1, 64));
  add_format(decomp);

  std::uint64_t seed = default_seed();
  int cases = kDefaultCases;
  std::string report_path;
  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("--seed", seed, "PRNG seed (default: $SYMPCLIFF_SEED or 42)");
  ver->add_option("--cases", cases, "Random cases per randomized check")->check(CLI::Range(1, 1000000));
  ver->add_option("--report", report_path, "Write the JSON report to FILE");

  std::string mode = "poly";
  auto* evalc = app.add_subcommand("eval", "Evaluate an expression");
  evalc->add_option("--mode", mode, "quaternion, poly or endf")
      ->required()
      ->check(CLI::IsMember({"quaternion", "poly", "endf"}));
  evalc->add_option("expr", expr, "Expression")->required();
  add_format(evalc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  bool json = format == "json";
  try {
    if (app.got_subcommand(tables)) {
      Table t = make_table(algebra);
      if (json) out << nlohmann::json{{"algebra", algebra}, {"labels", t.labels}, {"table", t.cells}}.dump() << "\n";
      else print_table(t, out);
    } else if (app.got_subcommand(bracket) || app.got_subcommand(evalc)) {
      dsl::Mode m = app.got_subcommand(bracket) ? dsl::Mode::Poly : dsl::parse_mode(mode);
      dsl::Value v = dsl::evaluate(expr, m);
      if (json) out << dsl::value_to_json(v).dump() << "\n";
      else out << dsl::format_value(v) << "\n";
    } else if (app.got_subcommand(hamc)) {
      Endo2 m = ham(eval_quad(expr)).matrix;
      if (json) out << dsl::value_to_json(m).dump() << "\n";
      else out << m.to_string() << "\n";
    } else if (app.got_subcommand(quant)) {
      WeylElement w = weyl_quantize(eval_quad(expr));
      if (json) {
        nlohmann::json j = dsl::value_to_json(w);
        if (fock_dim) {
          j["fock_dim"] = fock_dim;
          j["matrix"] = matrix_json(fock_realize(w, fock_dim).entries);
        }
        out << j.dump() << "\n";
      } else {
        out << w.to_string() << "\n";
        if (fock_dim) {
          CMatrix m = fock_realize(w, fock_dim).entries;
          for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_complex(m(r, c));
            out << "\n";
          }
        }
      }
    } else if (app.got_subcommand(spec)) {
      dsl::Spectrum s{fock_dim, spectrum(eval_quad(expr), fock_dim)};
      if (json) out << dsl::value_to_json(s).dump() << "\n";
      else
        for (double v : s.eigenvalues) out << dsl::format_double(v) << "\n";
    } else if (app.got_subcommand(decomp)) {
      SymplecticSpace2n space = particle_phase_space(particles);
      if (json) {
        nlohmann::json planes = nlohmann::json::array();
        for (const auto& p : space.planes)
          planes.push_back({{"q", p.q_label}, {"p", p.p_label}, {"particle", p.particle}, {"axis", std::string(1, p.axis)}});
        out << nlohmann::json{{"particles", particles}, {"n", space.n}, {"dimension", 2 * space.n}, {"planes", planes}}.dump()
            << "\n";
      } else {
        out << "phase space dimension 2n = " << 2 * space.n << " (n = " << space.n << " planes)\n";
        for (std::size_t s = 0; s < space.planes.size(); ++s) {
          const auto& p = space.planes[s];
          out << "F_" << s + 1 << " = span{" << p.q_label << ", " << p.p_label << "}  particle " << p.particle
              << ", axis " << p.axis << ", omega(" << p.q_label << ", " << p.p_label << ") = 1\n";
        }
        out << "planes are pairwise omega-orthogonal; H_F = H_F_1 (x) ... (x) H_F_" << space.n
            << " (graded), dimension 4^" << space.n << "\n";
      }
    } else if (app.got_subcommand(ver)) {
      VerificationReport report = run_default_suite(seed, cases);
      for (const auto& c : report.checks) out << std::left << std::setw(19) << status_name(c.status) << c.name << "\n";
      out << "passed " << report.passed() << ", failed " << report.failed() << " (seed " << seed << ", cases " << cases
          << ")\n";
      if (!report_path.empty()) emit_report(report, report_path);
      return report.failed() == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const ParseError& e) {
    report_parse_error(e, expr, err);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvalError;
  }
  return kExitOk;
}

}  // namespace sympcliff::cli

// spectre: build, verify, combine and perturb finite real spectral triples.
//
// Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 resource cap.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spectre/catalog.hpp"
#include "spectre/fluctuation.hpp"
#include "spectre/io.hpp"
#include "spectre/product.hpp"

namespace {

using namespace spectre;

constexpr int kExitPass = 0;
constexpr int kExitAxiomFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string format_signs(const SignTriple& s) {
  std::ostringstream out;
  out << "eps=" << sign_char(s.eps) << " eps'=" << sign_char(s.eps_prime);
  if (s.eps_double_prime) out << " eps''=" << sign_char(*s.eps_double_prime);
  return out.str();
}

void print_report(const AxiomReport& report, bool json) {
  if (json) {
    std::cout << canonical_dump(report_to_json(report));
    return;
  }
  for (const auto& c : report.checks)
    std::printf("%-26s residual %.3e  threshold %.3e  %s\n", c.name.c_str(), c.residual,
                c.threshold, c.pass ? "pass" : "FAIL");
  std::printf("overall: %s\n", report.pass() ? "pass" : "FAIL");
}

int cmd_verify(const std::string& path, bool json, const Tolerance& tol) {
  const RealSpectralTriple t = load_triple(path);
  const AxiomReport report = verify(t, tol);
  print_report(report, json);
  return report.pass() ? kExitPass : kExitAxiomFail;
}

int cmd_table(const std::string& label_text, bool json) {
  if (!label_text.empty()) {
    const KOLabel label = KOLabel::parse(label_text);
    const SignTriple s = sign_table(label);
    if (json) {
      Json out{{"label", label.str()}, {"eps", s.eps}, {"eps_prime", s.eps_prime}};
      if (s.eps_double_prime) out["eps_double_prime"] = *s.eps_double_prime;
      std::cout << canonical_dump(out);
    } else {
      std::cout << format_signs(s) << "\n";
    }
    return kExitPass;
  }
  if (json) {
    Json out = Json::array();
    for (const KOLabel& label : all_labels()) {
      const SignTriple s = sign_table(label);
      Json col{{"label", label.str()}, {"eps", s.eps}, {"eps_prime", s.eps_prime}};
      if (s.eps_double_prime) col["eps_double_prime"] = *s.eps_double_prime;
      out.push_back(std::move(col));
    }
    std::cout << canonical_dump(out);
    return kExitPass;
  }
  std::printf("%-8s", "n");
  for (const KOLabel& l : all_labels()) std::printf("%4s", l.str().c_str());
  std::printf("\n%-8s", "eps");
  for (const KOLabel& l : all_labels()) std::printf("%4s", sign_char(sign_table(l).eps).c_str());
  std::printf("\n%-8s", "eps'");
  for (const KOLabel& l : all_labels())
    std::printf("%4s", sign_char(sign_table(l).eps_prime).c_str());
  std::printf("\n%-8s", "eps''");
  for (const KOLabel& l : all_labels()) {
    const auto epp = sign_table(l).eps_double_prime;
    std::printf("%4s", epp ? sign_char(*epp).c_str() : "");
  }
  std::printf("\n");
  return kExitPass;
}

int cmd_product(const std::string& left, const std::string& right, const std::string& variant,
                const std::string& out_path, int cap, bool json, const Tolerance& tol) {
  const RealSpectralTriple t1 = load_triple(left);
  const RealSpectralTriple t2 = load_triple(right);
  ProductOptions opts;
  opts.variant = variant == "minus" ? -1 : +1;
  opts.dimension_cap = cap;
  opts.tol = tol;
  const RealSpectralTriple p = product(t1, t2, opts);
  if (!out_path.empty()) save_triple(p, out_path);
  const AxiomReport report = verify(p, tol);
  if (json) {
    Json out{{"ko", p.ko.str()},
             {"hilbert_dim", p.hilbert_dim()},
             {"signs", format_signs(sign_table(p.ko))},
             {"report", report_to_json(report)}};
    std::cout << canonical_dump(out);
  } else {
    std::cout << "product KO " << p.ko.str() << " (" << format_signs(sign_table(p.ko))
              << "), hilbert_dim " << p.hilbert_dim() << ", verify "
              << (report.pass() ? "pass" : "FAIL") << "\n";
  }
  return report.pass() ? kExitPass : kExitAxiomFail;
}

int cmd_toggle(const std::string& path, const std::string& out_path, bool json,
               const Tolerance& tol) {
  const RealSpectralTriple t = load_triple(path);
  const RealSpectralTriple flipped = toggle(t);
  if (!out_path.empty()) save_triple(flipped, out_path);
  const AxiomReport report = verify(flipped, tol);
  if (json) {
    Json out{{"ko", flipped.ko.str()}, {"report", report_to_json(report)}};
    std::cout << canonical_dump(out);
  } else {
    std::cout << "toggled to KO " << flipped.ko.str() << ", verify "
              << (report.pass() ? "pass" : "FAIL") << "\n";
  }
  return report.pass() ? kExitPass : kExitAxiomFail;
}

int cmd_fixed_subalg(const std::string& path, bool no_star, bool json, const Tolerance& tol) {
  const RealSpectralTriple t = load_triple(path);
  const auto basis = j_fixed_subalgebra(t, !no_star, tol);
  if (json) {
    Json vecs = Json::array();
    for (const auto& v : basis) vecs.push_back(coefficients_to_json(v));
    std::cout << canonical_dump(Json{{"real_dimension", basis.size()}, {"basis", std::move(vecs)}});
  } else {
    std::cout << "J-fixed subalgebra: real dimension " << basis.size() << "\n";
    for (const auto& v : basis) {
      std::cout << " ";
      for (Eigen::Index i = 0; i < v.size(); ++i)
        std::printf(" (%+.4f%+.4fi)", v(i).real(), v(i).imag());
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int cmd_split(const std::string& path, bool json, const Tolerance& tol) {
  const RealSpectralTriple t = load_triple(path);
  const SplitResult split = j_compatible_split(t.dirac, t.real_structure, sign_table(t.ko), tol);
  const double m_norm = split.m.norm();
  const SplitResult resplit = j_compatible_split(split.d0, t.real_structure, sign_table(t.ko), tol);
  const double m_prime = max_abs(resplit.m);
  if (json) {
    std::cout << canonical_dump(Json{{"m_frobenius_norm", m_norm},
                                     {"resid_d0_commutation", split.resid_d0},
                                     {"resid_m_anticommutation", split.resid_m},
                                     {"resplit_m_max", m_prime}});
  } else {
    std::printf("||M||_F = %.12g\n", m_norm);
    std::printf("residual d0 J = eps' J d0 : %.3e\n", split.resid_d0);
    std::printf("residual  m J = -eps' J m : %.3e\n", split.resid_m);
    std::printf("re-split of d0, max|M'|   : %.3e\n", m_prime);
  }
  return kExitPass;
}

int cmd_fluctuate(const std::string& path, const std::string& pairs_path,
                  const std::string& out_path, bool symmetrize, bool json, const Tolerance& tol) {
  const RealSpectralTriple t = load_triple(path);
  const auto pairs = pairs_from_json(load_json(pairs_path));
  OneForm a = one_form(t, pairs);
  if (symmetrize) a = symmetrized(t, a);
  const RealSpectralTriple result = fluctuate(t, a, tol);
  if (!out_path.empty()) save_triple(result, out_path);
  const AxiomReport report = verify(result, tol);
  if (json) {
    std::cout << canonical_dump(Json{{"one_form_hermitian", a.hermitian(tol)},
                                     {"dirac_shift_max", max_abs(result.dirac - t.dirac)},
                                     {"report", report_to_json(report)}});
  } else {
    std::cout << "fluctuated; max|D' - D| = " << max_abs(result.dirac - t.dirac) << ", verify "
              << (report.pass() ? "pass" : "FAIL") << "\n";
  }
  return report.pass() ? kExitPass : kExitAxiomFail;
}

int cmd_spectrum(const std::string& path, double cutoff, const std::string& weights_text,
                 bool json) {
  const RealSpectralTriple t = load_triple(path);
  const auto eigenvalues = eigenvalues_hermitian(t.dirac);
  std::vector<std::pair<int, double>> weights;
  if (!weights_text.empty()) {
    std::istringstream stream(weights_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("weights: expected power:coeff[,power:coeff...]");
      weights.emplace_back(std::stoi(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    }
  }
  if (json) {
    Json out{{"eigenvalues", eigenvalues}};
    if (!weights.empty()) out["spectral_action"] = spectral_action(t, cutoff, weights);
    std::cout << canonical_dump(out);
  } else {
    std::cout << "eigenvalues:";
    for (double ev : eigenvalues) std::printf(" %.12g", ev);
    std::cout << "\n";
    if (!weights.empty())
      std::printf("spectral action (cutoff %g): %.12g\n", cutoff,
                  spectral_action(t, cutoff, weights));
  }
  return kExitPass;
}

int cmd_make_example(const std::string& kind, const std::string& ko_text,
                     const std::string& out_path, bool json) {
  RealSpectralTriple t = [&]() -> RealSpectralTriple {
    if (kind == "one-point")
      return one_point(KOLabel::parse(ko_text.empty() ? "0+" : ko_text));
    if (kind == "two-point") {
      RealSpectralTriple tp = two_point();
      if (!ko_text.empty()) {
        const KOLabel want = KOLabel::parse(ko_text);
        if (want.n != 0) throw std::invalid_argument("two-point example has KO dimension 0");
        if (want.variant == Variant::Minus) tp = toggle(tp);
      }
      return tp;
    }
    throw std::invalid_argument("unknown example kind '" + kind + "'");
  }();
  save_triple(t, out_path);
  if (json) {
    std::cout << canonical_dump(Json{{"kind", kind},
                                     {"ko", t.ko.str()},
                                     {"hilbert_dim", t.hilbert_dim()},
                                     {"path", out_path}});
  } else {
    std::cout << "wrote " << kind << " triple of KO " << t.ko.str() << " (hilbert_dim "
              << t.hilbert_dim() << ") to " << out_path << "\n";
  }
  return kExitPass;
}

int cmd_search_j(const std::string& path, const std::string& ko_text, int budget,
                 std::uint64_t seed, const std::string& out_path, bool json,
                 const Tolerance& tol) {
  const TripleData data = triple_data_from_json(load_json(path));
  const KOLabel label = KOLabel::parse(ko_text);
  SearchOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  opts.tol = tol;
  const SearchOutcome outcome = search_real_structure(data.rep, data.dirac, data.grading, label, opts);
  if (json) {
    Json sols = Json::array();
    for (const auto& s : outcome.solutions) sols.push_back(matrix_to_json(s.unitary_part()));
    std::cout << canonical_dump(Json{{"solutions", std::move(sols)},
                                     {"linear_system_infeasible", outcome.linear_system_infeasible}});
  } else if (outcome.linear_system_infeasible) {
    std::cout << "infeasible: the linear constraint system has nullity 0\n";
  } else {
    std::cout << "found " << outcome.solutions.size() << " real structure(s)\n";
  }
  if (!out_path.empty() && !outcome.solutions.empty()) {
    RealSpectralTriple t{data.rep, data.dirac, data.grading, outcome.solutions.front(), label};
    save_triple(t, out_path);
  }
  return outcome.solutions.empty() ? kExitAxiomFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite real spectral triples: sign tables, products, fluctuations"};
  app.require_subcommand(1);
  app.fallthrough();
  const Tolerance tol = Tolerance::from_env();

  bool json = false;
  app.add_flag("--json", json, "emit JSON on stdout (all subcommands)");

  std::string path, left, right, out_path, variant = "plus", ko_text, kind = "one-point";
  std::string weights_text, pairs_path;
  int cap = 4096, budget = 32;
  double cutoff = 1.0;
  std::uint64_t seed = 0x5EED;
  bool no_star = false, symmetrize = false;

  auto* verify_cmd = app.add_subcommand("verify", "run the axiom report on a triple file");
  verify_cmd->add_option("triple", path, "triple JSON file")->required();

  auto* product_cmd = app.add_subcommand("product", "Dabrowski-Dossena product of two triples");
  product_cmd->add_option("--left", left)->required();
  product_cmd->add_option("--right", right)->required();
  product_cmd->add_option("--variant", variant)->check(CLI::IsMember({"plus", "minus"}));
  product_cmd->add_option("--out", out_path);
  product_cmd->add_option("--cap", cap, "Hilbert dimension cap (default 4096)");

  auto* toggle_cmd = app.add_subcommand("toggle", "swap J for J gamma (variant flip)");
  toggle_cmd->add_option("triple", path)->required();
  toggle_cmd->add_option("--out", out_path);

  auto* table_cmd = app.add_subcommand("table", "print the KO sign table");
  table_cmd->add_option("label", ko_text, "optional column label, e.g. 2- or 5");

  auto* fixed_cmd = app.add_subcommand("fixed-subalg", "compute the J-fixed subalgebra");
  fixed_cmd->add_option("triple", path)->required();
  fixed_cmd->add_flag("--no-star", no_star, "use the trivial-* predicate J a J* = a");

  auto* split_cmd = app.add_subcommand("split", "J-compatible splitting D = D0 + M");
  split_cmd->add_option("triple", path)->required();

  auto* fluct_cmd = app.add_subcommand("fluctuate", "inner fluctuation D + A + eps' J A J*");
  fluct_cmd->add_option("--triple", path)->required();
  fluct_cmd->add_option("--pairs", pairs_path, "JSON list of {a, b} coefficient pairs")->required();
  fluct_cmd->add_option("--out", out_path);
  fluct_cmd->add_flag("--symmetrize", symmetrize, "replace A by its Hermitian closure first");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of D and spectral action");
  spectrum_cmd->add_option("triple", path)->required();
  spectrum_cmd->add_option("--cutoff", cutoff, "spectral action cutoff scale");
  spectrum_cmd->add_option("--weights", weights_text, "power:coeff[,power:coeff...]");

  auto* make_cmd = app.add_subcommand("make-example", "write a catalog triple");
  make_cmd->add_option("--kind", kind)->check(CLI::IsMember({"one-point", "two-point"}));
  make_cmd->add_option("--ko", ko_text, "KO label, e.g. 3 or 6+");
  make_cmd->add_option("--out", out_path)->required();

  auto* search_cmd = app.add_subcommand("search-j", "search real structures for given (A, H, D, gamma)");
  search_cmd->add_option("--triple-without-j", path)->required();
  search_cmd->add_option("--ko", ko_text)->required();
  search_cmd->add_option("--budget", budget, "random restarts");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--out", out_path, "write the first solution as a full triple");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify_cmd)) return cmd_verify(path, json, tol);
    if (app.got_subcommand(product_cmd))
      return cmd_product(left, right, variant, out_path, cap, json, tol);
    if (app.got_subcommand(toggle_cmd)) return cmd_toggle(path, out_path, json, tol);
    if (app.got_subcommand(table_cmd)) return cmd_table(ko_text, json);
    if (app.got_subcommand(fixed_cmd)) return cmd_fixed_subalg(path, no_star, json, tol);
    if (app.got_subcommand(split_cmd)) return cmd_split(path, json, tol);
    if (app.got_subcommand(fluct_cmd))
      return cmd_fluctuate(path, pairs_path, out_path, symmetrize, json, tol);
    if (app.got_subcommand(spectrum_cmd)) return cmd_spectrum(path, cutoff, weights_text, json);
    if (app.got_subcommand(make_cmd)) return cmd_make_example(kind, ko_text, out_path, json);
    if (app.got_subcommand(search_cmd))
      return cmd_search_j(path, ko_text, budget, seed, out_path, json, tol);
  } catch (const spectre::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

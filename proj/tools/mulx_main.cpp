#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mulx/json_io.hpp"
#include "mulx/mullineux.hpp"
#include "mulx/rank1.hpp"
#include "weyl_parse.hpp"

namespace {

using nlohmann::json;

mulx::Modulus parse_e(const std::string& text) {
  if (text == "inf") return mulx::Modulus::infinity();
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return mulx::Modulus::finite(value);
  } catch (const mulx::Error&) {
    throw;
  } catch (const std::exception&) {
    mulx::fail(mulx::errc::malformed_input, "--e expects an integer >= 2 or 'inf'");
  }
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) mulx::fail(mulx::errc::malformed_input, "cannot open output file " + out_path);
  out << payload << "\n";
}

struct Options {
  std::string e;
  std::string partition;
  std::string mp;
  std::string charge_class;
  std::string charge;
  std::string word;
  std::string order = "uglov";
  std::string out;
  int nmax = 0;
  std::optional<int> n;
  std::size_t layer_cap = 5'000'000;
  int level = 0;
  bool trace = false;
  bool dot = false;
  bool edges = true;
  bool json_out = false;
};

int run_m1(const Options& opt) {
  const mulx::Partition p = mulx::partition_from_json(mulx::parse_json(opt.partition));
  const mulx::Modulus e = parse_e(opt.e);
  const mulx::Partition image = e.is_finite() ? mulx::m1(p, e.value()) : mulx::m1_infinity(p);
  emit(mulx::to_json(image).dump(), opt.out);
  return 0;
}

int run_mullineux(const Options& opt) {
  const mulx::Multipartition mp = mulx::multipartition_from_json(mulx::parse_json(opt.mp));
  const std::vector<int> cls = mulx::int_vector_from_json(mulx::parse_json(opt.charge_class));
  const mulx::Modulus e = parse_e(opt.e);
  if (e.is_finite()) {
    const mulx::MullineuxResult result = mulx::mullineux(mp, cls, e.value(), opt.n);
    emit(opt.trace ? mulx::to_json(result).dump() : mulx::to_json(result.image).dump(), opt.out);
    return 0;
  }
  const mulx::Multicharge s{cls, e};
  const mulx::Multipartition image = mulx::mullineux_infinity(mp, s);
  if (!opt.trace) {
    emit(mulx::to_json(image).dump(), opt.out);
    return 0;
  }
  std::vector<int> target;
  for (auto it = cls.rbegin(); it != cls.rend(); ++it) target.push_back(-*it);
  json payload;
  payload["image"] = mulx::to_json(image);
  payload["source_charges"] = cls;
  payload["target_charges"] = target;
  payload["word"] = "w0";
  emit(payload.dump(), opt.out);
  return 0;
}

int run_psi(const Options& opt) {
  const mulx::Multipartition mp = mulx::multipartition_from_json(mulx::parse_json(opt.mp));
  const std::vector<int> charges = mulx::int_vector_from_json(mulx::parse_json(opt.charge));
  const mulx::Multicharge s{charges, parse_e(opt.e)};
  if (s.level() != mp.level())
    mulx::fail(mulx::errc::malformed_input, "--charge level does not match --mp");
  const mulx::WeylWord word = mulx::cli::parse_weyl_word(opt.word, mp.level());
  const mulx::PsiResult result = mulx::psi_word(mp, s, word);
  json payload;
  payload["image"] = mulx::to_json(result.image);
  payload["charges"] = result.charge.charges;
  emit(payload.dump(), opt.out);
  return 0;
}

mulx::NodeOrder order_for(const Options& opt) {
  const mulx::Modulus e = parse_e(opt.e);
  if (opt.order == "uglov") {
    if (opt.charge.empty())
      mulx::fail(mulx::errc::malformed_input, "--order uglov needs --charge (integer lift)");
    return mulx::NodeOrder::uglov({mulx::int_vector_from_json(mulx::parse_json(opt.charge)), e});
  }
  if (opt.order == "kleshchev") {
    if (opt.charge_class.empty())
      mulx::fail(mulx::errc::malformed_input, "--order kleshchev needs --charge-class");
    return mulx::NodeOrder::kleshchev(
        {mulx::int_vector_from_json(mulx::parse_json(opt.charge_class)), e});
  }
  mulx::fail(mulx::errc::malformed_input, "--order must be uglov or kleshchev");
}

int run_crystal(const Options& opt) {
  const mulx::NodeOrder ord = order_for(opt);
  const mulx::CrystalGraph graph =
      mulx::enumerate_crystal(ord, opt.nmax, {.with_edges = opt.edges, .layer_cap = opt.layer_cap});
  if (opt.dot) {
    emit(mulx::to_dot(graph, [](const mulx::Multipartition& mp) { return mulx::compact(mp); }),
         opt.out);
  } else {
    emit(mulx::to_json(graph).dump(), opt.out);
  }
  return 0;
}

int run_enumerate(const Options& opt) {
  const mulx::NodeOrder ord = order_for(opt);
  const mulx::CrystalGraph graph =
      mulx::enumerate_crystal(ord, opt.nmax, {.with_edges = false, .layer_cap = opt.layer_cap});
  emit(mulx::to_json(graph).dump(), opt.out);
  return 0;
}

int run_verify(const Options& opt) {
  const mulx::Modulus e = parse_e(opt.e);
  if (!e.is_finite()) mulx::fail(mulx::errc::malformed_input, "verify needs a finite --e");
  const mulx::SweepReport report = mulx::verify_sweep(opt.level, e.value(), opt.nmax);
  if (opt.json_out) {
    emit(mulx::to_json(report).dump(), opt.out);
  } else {
    std::string line = "verify l=" + std::to_string(report.level) +
                       " e=" + std::to_string(report.e) + " nmax=" + std::to_string(report.n_max) +
                       ": classes=" + std::to_string(report.classes) +
                       " vertices=" + std::to_string(report.vertices) +
                       " mismatches=" + std::to_string(report.mismatches.size()) +
                       " involution_failures=" + std::to_string(report.involution_failures) +
                       " membership_failures=" + std::to_string(report.membership_failures) +
                       " component_stage_failures=" +
                       std::to_string(report.component_stage_failures) + " -> " +
                       (report.ok() ? "OK" : "FAIL");
    emit(line, opt.out);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Mullineux involution on Kleshchev multipartitions"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* m1 = app.add_subcommand("m1", "level-1 Mullineux image of a partition");
  m1->add_option("--e", opt.e, "modulus (>= 2) or 'inf'")->required();
  m1->add_option("--partition", opt.partition, "partition as a JSON array")->required();
  m1->add_option("--out", opt.out, "write the payload to a file");

  CLI::App* mull = app.add_subcommand("mullineux", "generalized Mullineux image");
  mull->add_option("--e", opt.e)->required();
  mull->add_option("--charge-class", opt.charge_class,
                   "residue class as a JSON array (integer charges at e=inf)")
      ->required();
  mull->add_option("--mp", opt.mp, "multipartition as a JSON array of arrays")->required();
  mull->add_flag("--trace", opt.trace, "include the stage-by-stage trace");
  auto* n_opt = mull->add_option("--n", "rank bound for the asymptotic lift");
  mull->add_option("--out", opt.out);

  CLI::App* psi = app.add_subcommand("psi", "crystal isomorphism along a word");
  psi->add_option("--e", opt.e)->required();
  psi->add_option("--charge", opt.charge, "integer multicharge as a JSON array")->required();
  psi->add_option("--word", opt.word, "word such as 'a1^8 a2^8 w0'")->required();
  psi->add_option("--mp", opt.mp)->required();
  psi->add_option("--out", opt.out);

  CLI::App* crystal = app.add_subcommand("crystal", "enumerate a crystal with its edges");
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate crystal vertices only");
  for (CLI::App* sub : {crystal, enumerate}) {
    sub->add_option("--order", opt.order, "uglov | kleshchev");
    sub->add_option("--charge", opt.charge, "integer lift (uglov)");
    sub->add_option("--charge-class", opt.charge_class, "residue class (kleshchev)");
    sub->add_option("--e", opt.e)->required();
    sub->add_option("--nmax", opt.nmax, "largest rank layer")->required();
    sub->add_option("--layer-cap", opt.layer_cap, "abort when a layer exceeds this many vertices");
    sub->add_option("--out", opt.out);
  }
  crystal->add_flag("--dot", opt.dot, "emit graphviz instead of JSON");
  crystal->add_flag("!--no-edges", opt.edges, "skip edge bookkeeping");

  CLI::App* verify = app.add_subcommand("verify", "pipeline-vs-oracle sweep");
  verify->add_option("--l", opt.level, "number of components")->required();
  verify->add_option("--e", opt.e)->required();
  verify->add_option("--nmax", opt.nmax, "largest rank to sweep")->required();
  verify->add_flag("--json", opt.json_out, "machine-readable report");
  verify->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
    if (n_opt->count() > 0) opt.n = n_opt->as<int>();
    if (m1->parsed()) return run_m1(opt);
    if (mull->parsed()) return run_mullineux(opt);
    if (psi->parsed()) return run_psi(opt);
    if (crystal->parsed()) return run_crystal(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (verify->parsed()) return run_verify(opt);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::json err;
    err["error"] = {{"code", "MalformedInput"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const mulx::Error& e) {
    std::cout << mulx::to_json(e).dump() << "\n";
    return e.code() == mulx::errc::malformed_input || e.code() == mulx::errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliffroots/errors.hpp"
#include "cliffroots/golden.hpp"
#include "cliffroots/report.hpp"

using namespace cliffroots;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  int grid = 41;
  int max_n = kDefaultMaxN;
  std::string golden_dir;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw ParseError("cannot write " + cfg.out);
  os << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string basis_name(const MultiVector& b) {
  return b == MultiVector::scalar(b.signature(), 1) ? "Id" : to_string(b);
}

int cmd_classify(const Config& cfg, int p, int q) {
  const AlgebraClassification cls = classify(p, q, cfg.max_n);
  emit(cfg, cfg.format == "json" ? dump(to_json(cls)) : classification_text(cls));
  return kExitPass;
}

int cmd_roots(const Config& cfg, int p, int q) {
  const auto reports = root_classes(Signature(p, q, cfg.max_n));
  if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    emit(cfg, dump(j));
  } else if (cfg.format == "csv") {
    emit(cfg, roots_csv(reports));
  } else {
    emit(cfg, roots_text(reports));
  }
  return kExitPass;
}

int cmd_verify(const Config& cfg, std::optional<std::pair<int, int>> sig, const std::string& golden,
               bool all) {
  std::vector<std::filesystem::path> files;
  const std::filesystem::path dir = cfg.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(cfg.golden_dir);
  if (!golden.empty()) {
    files.push_back(golden);
  } else {
    for (const auto& path : golden_files(dir)) {
      if (all) {
        files.push_back(path);
        continue;
      }
      const GoldenTable t = load_golden(path);
      if (sig && t.sig.p() == sig->first && t.sig.q() == sig->second) files.push_back(path);
    }
    if (files.empty()) throw ParseError("no golden table found in " + dir.string());
  }
  std::vector<GoldenResult> results;
  for (const auto& f : files) results.push_back(verify_golden(load_golden(f)));
  bool ok = true;
  std::string text;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    text += golden_text(r);
    j.push_back(to_json(r));
  }
  emit(cfg, cfg.format == "json" ? dump(j) : text);
  return ok ? kExitPass : kExitFail;
}

int cmd_represent(const Config& cfg, int p, int q) {
  const MatrixRep rep(Signature(p, q, cfg.max_n));
  emit(cfg, cfg.format == "json" ? dump(to_json(rep)) : represent_text(rep));
  return kExitPass;
}

int cmd_centralizer(const Config& cfg, int p, int q, const std::string& expr) {
  const Signature sig(p, q, cfg.max_n);
  const auto basis = centralizer(parse_multivector(expr, sig));
  if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& b : basis) j.push_back(to_string(b));
    emit(cfg, dump(Json{{"element", to_string(parse_multivector(expr, sig))}, {"dim", basis.size()}, {"basis", j}}));
    return kExitPass;
  }
  std::string text;
  for (std::size_t i = 0; i < basis.size(); ++i) text += (i ? ", " : "") + basis_name(basis[i]);
  emit(cfg, text + "\n");
  return kExitPass;
}

int cmd_conjugate(const Config& cfg, int p, int q, const std::string& fs, const std::string& gs) {
  const Signature sig(p, q, cfg.max_n);
  const MultiVector f = parse_multivector(fs, sig), g = parse_multivector(gs, sig);
  const auto v = find_conjugator(f, g, cfg.seed);
  if (cfg.format == "json") {
    emit(cfg, dump(Json{{"f", to_string(f)}, {"g", to_string(g)},
                        {"conjugator", v ? Json(to_string(*v)) : Json(nullptr)}}));
  } else {
    emit(cfg, v ? to_string(*v) + "\n" : std::string("none\n"));
  }
  return kExitPass;
}

int cmd_manifold(const Config& cfg, int p, int q) {
  emit(cfg, manifold_csv(sample_manifold(Signature(p, q, cfg.max_n), cfg.grid)));
  return kExitPass;
}

int cmd_split(const Config& cfg, int p, int q, const std::string& as, const std::string& rs) {
  const Signature sig(p, q, cfg.max_n);
  const MultiVector a = parse_multivector(as, sig);
  Json j;
  std::ostringstream os;
  if (!rs.empty()) {
    const CommutingSplit s = split_commuting(a, parse_multivector(rs, sig));
    j = Json{{"commuting", to_string(s.commuting)}, {"anticommuting", to_string(s.anticommuting)}};
    os << "commuting: " << s.commuting << "\nanticommuting: " << s.anticommuting << "\n";
  } else {
    const DoubleSplit s = double_split(sig);
    j = Json{{"eps_plus", to_string(s.eps_plus)},
             {"eps_minus", to_string(s.eps_minus)},
             {"plus_part", to_string(s.plus_part(a))},
             {"minus_part", to_string(s.minus_part(a))},
             {"swap", to_string(swap(a, s))}};
    os << "eps_plus: " << s.eps_plus << "\neps_minus: " << s.eps_minus << "\nplus part: " << s.plus_part(a)
       << "\nminus part: " << s.minus_part(a) << "\nswap: " << swap(a, s) << "\n";
  }
  emit(cfg, cfg.format == "json" ? dump(j) : os.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square roots of -1 in real Clifford algebras Cl(p,q)"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--grid", cfg.grid, "Grid points per axis for manifold sampling")->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Largest accepted p+q")->capture_default_str();
  app.add_option("--golden-dir", cfg.golden_dir, "Directory of golden tables (overrides GA_GOLDEN_DIR)");
  app.fallthrough();

  int p = 0, q = 0;
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "Generators squaring to +1")->required();
    sub->add_option("q", q, "Generators squaring to -1")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Matrix algebra and root classes of Cl(p,q)");
  add_pq(classify_cmd);
  auto* roots_cmd = app.add_subcommand("roots", "One representative root per conjugacy class");
  add_pq(roots_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check golden root tables");
  std::vector<int> verify_pq;
  std::string golden_file;
  bool verify_all = false;
  verify_cmd->add_option("pq", verify_pq, "Signature p q")->expected(0, 2);
  verify_cmd->add_option("--golden", golden_file, "Golden table file");
  verify_cmd->add_flag("--all", verify_all, "Every table in the golden directory");

  auto* represent_cmd = app.add_subcommand("represent", "Spinor representation (ring C)");
  add_pq(represent_cmd);

  std::string expr, expr2;
  auto* centralizer_cmd = app.add_subcommand("centralizer", "Basis of the centralizer of an element");
  add_pq(centralizer_cmd);
  centralizer_cmd->add_option("element", expr, "Multivector literal")->required();

  auto* conjugate_cmd = app.add_subcommand("conjugate", "Find v with v^-1 f v = g");
  add_pq(conjugate_cmd);
  conjugate_cmd->add_option("f", expr, "Root f")->required();
  conjugate_cmd->add_option("g", expr2, "Root g")->required();

  auto* manifold_cmd = app.add_subcommand("manifold", "Sample the n = 2 root manifold as CSV");
  add_pq(manifold_cmd);

  auto* split_cmd = app.add_subcommand("split", "Commuting split by a root r, or the double-algebra split");
  add_pq(split_cmd);
  split_cmd->add_option("A", expr, "Element to split")->required();
  split_cmd->add_option("r", expr2, "Root of -1 (omit for the double split)");

  // CLI11 reads "-e123" as a flag; a leading space keeps literals positional.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, p, q);
    if (*roots_cmd) return cmd_roots(cfg, p, q);
    if (*verify_cmd) {
      std::optional<std::pair<int, int>> sig;
      if (verify_pq.size() == 2) sig = std::make_pair(verify_pq[0], verify_pq[1]);
      if (!sig && golden_file.empty() && !verify_all) {
        std::cerr << "verify: give p q, --golden FILE or --all\n";
        return kExitUsage;
      }
      return cmd_verify(cfg, sig, golden_file, verify_all);
    }
    if (*represent_cmd) return cmd_represent(cfg, p, q);
    if (*centralizer_cmd) return cmd_centralizer(cfg, p, q, expr);
    if (*conjugate_cmd) return cmd_conjugate(cfg, p, q, expr, expr2);
    if (*manifold_cmd) return cmd_manifold(cfg, p, q);
    if (*split_cmd) return cmd_split(cfg, p, q, expr, expr2);
  } catch (const InconsistencyError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

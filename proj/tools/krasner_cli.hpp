#ifndef KRASNER_TOOLS_KRASNER_CLI_HPP
#define KRASNER_TOOLS_KRASNER_CLI_HPP

// The `krasner` command line: construct, verify, enumerate, iso, show.
//
// Exit status: 0 success / true, 1 mathematical negative (verification
// failed, not isomorphic), 2 usage or parse error, 3 capacity or budget
// exceeded.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krasner/krasner.hpp"

namespace krasner::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kCapacity = 3,
};

namespace detail {

inline ExitStatus status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::capacity: return kCapacity;
    case ErrorKind::construction:
    case ErrorKind::precondition:
    case ErrorKind::axiom_violation: return kNegative;
    default: return kUsage;
  }
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorKind::domain, flag + " expects comma-separated integers");
    }
    out.push_back(value);
  }
  return out;
}

inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline HyperfieldDocument load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw Error(ErrorKind::domain, "no such file: " + path);
  return parse_document(read_file(path));
}

inline std::string hex16(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct ConstructArgs {
  int order = 0;
  std::string method = "auto";
  std::string field;
  std::string gens;
  std::vector<std::string> factors;
  std::string out;
};

inline int run_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  const bool order_given = args.order != 0;
  if (order_given && args.order < 2) throw Error(ErrorKind::domain, "order must be at least 2");

  auto field_arg = [&]() -> std::pair<int, int> {
    const auto pk = parse_int_list(args.field, "--field");
    if (pk.size() != 2) throw Error(ErrorKind::domain, "--field expects p,k");
    return {pk[0], pk[1]};
  };

  std::optional<Hyperfield> result;
  std::string recipe;
  if (args.method == "auto") {
    if (!order_given) throw Error(ErrorKind::domain, "--method auto needs --order");
    result = hyperfield_of_order(args.order);
    recipe = "auto order " + std::to_string(args.order);
  } else if (args.method == "massouros") {
    int p = 0;
    int k = 0;
    if (!args.field.empty()) {
      std::tie(p, k) = field_arg();
    } else if (order_given) {
      const auto factors = factor_integer(args.order);
      if (factors.size() != 1) throw Error(ErrorKind::domain, "massouros needs a prime-power order");
      p = static_cast<int>(factors[0].p);
      k = factors[0].k;
    } else {
      throw Error(ErrorKind::domain, "massouros needs --field or --order");
    }
    result = massouros(gf(p, k));
    recipe = "massouros GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  } else if (args.method == "quotient") {
    if (args.field.empty()) throw Error(ErrorKind::domain, "quotient needs --field p,k");
    const auto [p, k] = field_arg();
    const FieldTable f = gf(p, k);
    const auto gens = parse_int_list(args.gens, "--gens");
    result = quotient(f, subgroup_closure(f, gens));
    recipe = "quotient GF(" + std::to_string(p) + "^" + std::to_string(k) + ") / <" + args.gens + ">";
  } else if (args.method == "product") {
    if (args.factors.size() != 2) throw Error(ErrorKind::domain, "product needs exactly two --factor files");
    const auto left = to_candidate(load(args.factors[0]));
    const auto right = to_candidate(load(args.factors[1]));
    result = product(left, right);
    recipe = "product";
  } else {
    throw Error(ErrorKind::domain, "unknown method " + args.method);
  }

  if (order_given && result->order() != args.order) {
    throw Error(ErrorKind::domain, "constructed order " + std::to_string(result->order()) +
                                       " does not match --order");
  }
  const std::string text = render_document(result->table(), default_labels(result->order()), recipe);
  const std::string summary = "order=" + std::to_string(result->order()) + " method=" + args.method +
                              " verification=pass\n";
  if (args.out.empty()) {
    out << text;
    err << summary;
  } else {
    write_file(args.out, text);
    out << summary;
  }
  return kSuccess;
}

inline int run_verify(const std::string& path, bool full_report, std::ostream& out) {
  const auto doc = load(path);
  const auto report = verify(to_candidate(doc));
  if (full_report) out << report;
  if (report.passed()) {
    out << "verification: pass\n";
    return kSuccess;
  }
  out << "verification: FAIL";
  for (const auto& r : report.results()) {
    if (r.passed) continue;
    out << ' ' << r.axiom;
  }
  out << '\n';
  return kNegative;
}

struct EnumerateArgs {
  int order = 0;
  bool count_only = false;
  std::string out_dir;
  int jobs = 1;
  double budget_seconds = 3600.0;
  int progress_ms = 1000;
};

inline int run_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.order < 2) throw Error(ErrorKind::domain, "order must be at least 2");
  if (args.jobs < 1) throw Error(ErrorKind::domain, "--jobs must be positive");
  SearchOptions options;
  options.jobs = args.jobs;
  options.progress_interval = std::chrono::milliseconds(args.progress_ms);
  options.budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(args.budget_seconds));
  options.on_progress = [&err](const SearchProgress& p) {
    err << "progress: shards " << p.shards_done << "/" << p.shards_total << " scanned=" << p.scanned
        << " survivors=" << p.survivors << '\n';
  };
  const auto result = enumerate_hyperfields(args.order, options);
  if (!result.complete) {
    err << "budget exceeded: shards " << result.progress.shards_done << "/" << result.progress.shards_total
        << " scanned=" << result.progress.scanned << " survivors=" << result.progress.survivors << '\n';
    return kCapacity;
  }

  std::vector<std::string> names;
  std::map<std::uint64_t, int> seen;
  for (const auto& h : result.classes) {
    const auto hash = fingerprint(h).hash();
    names.push_back("order" + std::to_string(args.order) + "-" + hex16(hash) + "-" +
                    std::to_string(seen[hash]++) + ".json");
  }

  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
      const auto& h = result.classes[i];
      write_file((std::filesystem::path(args.out_dir) / names[i]).string(),
                 render_document(h.table(), default_labels(h.order()),
                                 "enumerated class " + std::to_string(i + 1) + " of " +
                                     std::to_string(result.classes.size()) + ", " + fingerprint(h).to_string()));
    }
  }

  out << result.classes.size() << '\n';
  if (!args.count_only) {
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
      out << names[i] << ' ' << fingerprint(result.classes[i]).to_string() << '\n';
    }
  }
  return kSuccess;
}

inline int run_iso(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const auto a = to_candidate(load(path_a));
  const auto b = to_candidate(load(path_b));
  const std::pair<const std::string*, const HyperfieldCandidate*> inputs[] = {{&path_a, &a}, {&path_b, &b}};
  for (const auto& [path, c] : inputs) {
    const auto report = verify(*c);
    if (!report.passed()) {
      out << "input " << *path << " is not a Krasner hyperfield (";
      const auto failed = report.failures();
      for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? "," : "") << failed[i];
      out << ")\n";
      return kNegative;
    }
  }
  const auto witness = are_isomorphic(Hyperfield::verified(a), Hyperfield::verified(b));
  if (!witness) {
    out << "not isomorphic\n";
    return kNegative;
  }
  out << "isomorphic:";
  for (std::size_t i = 0; i < witness->mapping.size(); ++i) out << ' ' << i << "->" << witness->mapping[i];
  out << '\n';
  return kSuccess;
}

inline int run_show(const std::string& path, const std::string& labels, std::ostream& out) {
  const auto doc = load(path);
  std::optional<std::vector<std::string>> names = doc.labels;
  if (!labels.empty()) names = split_labels(labels);
  out << pretty_table(to_candidate(doc), names);
  return kSuccess;
}

}  // namespace detail

/// Runs the CLI on `args` (program name first) and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, classify and render finite Krasner hyperfields", "krasner"};
  app.require_subcommand(1);

  detail::ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a verified hyperfield document");
  construct->add_option("--order", construct_args.order, "Number of elements");
  construct->add_option("--method", construct_args.method, "auto, massouros, quotient or product")
      ->check(CLI::IsMember({"auto", "massouros", "quotient", "product"}));
  construct->add_option("--field", construct_args.field, "Base field as p,k");
  construct->add_option("--gens", construct_args.gens, "Subgroup generators as comma-separated indices");
  construct->add_option("--factor", construct_args.factors, "Factor document (give twice for product)");
  construct->add_option("--out", construct_args.out, "Output path (default: standard output)");

  std::string verify_path;
  bool verify_report = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check every hyperfield axiom");
  verify_cmd->add_option("input", verify_path, "Document to verify")->required();
  verify_cmd->add_flag("--report", verify_report, "Print every axiom with witnesses");

  detail::EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List all hyperfields of an order up to isomorphism");
  enumerate->add_option("--order", enumerate_args.order, "Number of elements (2..6)")->required();
  enumerate->add_flag("--count-only", enumerate_args.count_only, "Print only the count");
  enumerate->add_option("--out", enumerate_args.out_dir, "Directory for one document per class");
  enumerate->add_option("--jobs", enumerate_args.jobs, "Worker threads");
  enumerate->add_option("--budget", enumerate_args.budget_seconds, "Wall-clock budget in seconds");
  enumerate->add_option("--progress-ms", enumerate_args.progress_ms, "Progress interval in milliseconds");

  std::string iso_a;
  std::string iso_b;
  auto* iso = app.add_subcommand("iso", "Test two hyperfields for isomorphism");
  iso->add_option("first", iso_a, "First document")->required();
  iso->add_option("second", iso_b, "Second document")->required();

  std::string show_path;
  std::string show_labels;
  auto* show = app.add_subcommand("show", "Render the addition and multiplication tables");
  show->add_option("input", show_path, "Document to render")->required();
  show->add_option("--labels", show_labels, "Comma-separated element labels");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) return detail::run_construct(construct_args, out, err);
    if (verify_cmd->parsed()) return detail::run_verify(verify_path, verify_report, out);
    if (enumerate->parsed()) return detail::run_enumerate(enumerate_args, out, err);
    if (iso->parsed()) return detail::run_iso(iso_a, iso_b, out);
    if (show->parsed()) return detail::run_show(show_path, show_labels, out);
  } catch (const VerificationError& e) {
    err << e.what() << '\n' << e.report();
    return detail::status_for(e.kind());
  } catch (const Error& e) {
    err << e.what() << '\n';
    return detail::status_for(e.kind());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace krasner::cli

#endif  // KRASNER_TOOLS_KRASNER_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "s2tlab/checks.hpp"
#include "s2tlab/context.hpp"
#include "s2tlab/errors.hpp"
#include "s2tlab/nearfield.hpp"
#include "s2tlab/search.hpp"
#include "s2tlab/textio.hpp"

namespace {

using namespace s2tlab;

// Exit code contract: 0 success, 1 check failure, 2 usage error,
// 3 input rejection, 4 resource cap.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRejected = 3;
constexpr int kExitResourceCap = 4;

long resource_cap() {
  if (const char* env = std::getenv("S2TLAB_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return v;
    std::cerr << "warning: ignoring malformed S2TLAB_MAX_ORDER\n";
  }
  return kDefaultOrderCap;
}

struct Source {
  std::optional<int> field_order;
  bool dickson = false;
  std::string file;
};

// Builds the group named by the source flags; label describes provenance.
PermGroup load_group(const Source& src, std::string& label) {
  if (src.field_order) {
    label = "GF(" + std::to_string(*src.field_order) + ")";
    return affine_group(finite_field(*src.field_order));
  }
  if (src.dickson) {
    label = "Dickson(9)";
    return affine_group(dickson_nearfield_9());
  }
  label = "file:" + src.file;
  GeneratorFile gf = parse_group_text_file(src.file);
  return closure(gf.degree, gf.generators, resource_cap());
}

void add_source_flags(CLI::App* cmd, Source& src) {
  auto* f = cmd->add_option("--field", src.field_order,
                            "affine group of the field of this prime-power order");
  auto* d = cmd->add_flag("--dickson", src.dickson,
                          "affine group of the order-9 Dickson near-field");
  auto* g = cmd->add_option("--file", src.file,
                            "group text file (generators; will be closed)");
  f->excludes(d)->excludes(g);
  d->excludes(g);
}

void require_one_source(const Source& src) {
  int n = (src.field_order ? 1 : 0) + (src.dickson ? 1 : 0) +
          (src.file.empty() ? 0 : 1);
  if (n != 1)
    throw CLI::ValidationError("exactly one of --field/--dickson/--file is required");
}

void print_reports(const std::vector<CheckReport>& reports, bool as_json) {
  for (const CheckReport& r : reports) {
    if (as_json)
      std::cout << to_json_record(r).dump() << "\n";
    else
      std::cout << to_text_record(r) << "\n";
  }
}

int cmd_construct(const Source& src) {
  std::string label;
  PermGroup g = load_group(src, label);
  std::cout << "# " << label << ": degree " << g.degree << ", order "
            << g.order() << ", " << g.generators.size() << " generators\n"
            << write_group_text(g.degree, g.generators);
  std::cerr << "degree " << g.degree << ", order " << g.order() << ", "
            << g.generators.size() << " generators\n";
  return kExitOk;
}

int cmd_check(const Source& src, bool as_json) {
  std::string label;
  PermGroup g = load_group(src, label);
  S2TContext ctx = build_context(g, label);
  std::vector<CheckReport> reports = run_all(ctx);
  print_reports(reports, as_json);
  for (const CheckReport& r : reports)
    if (r.failed())
      return kExitCheckFailed;
  return kExitOk;
}

int cmd_char(const Source& src, bool as_json) {
  std::string label;
  PermGroup g = load_group(src, label);
  S2TContext ctx = build_context(g, label);
  if (as_json)
    std::cout << json{{"instance", label},
                      {"characteristic", to_string(ctx.chr)}}
                     .dump()
              << "\n";
  else
    std::cout << label << ": characteristic " << to_string(ctx.chr) << "\n";
  return kExitOk;
}

int cmd_split(const Source& src, bool as_json) {
  std::string label;
  PermGroup g = load_group(src, label);
  S2TContext ctx = build_context(g, label);
  SplitCertificate cert = splitting_certificate(ctx);
  if (as_json) {
    std::cout << json{{"instance", label},
                      {"kernel_size", cert.kernel.size()},
                      {"kernel_normal", cert.kernel_normal},
                      {"trivial_intersection", cert.trivial_intersection},
                      {"product_covers", cert.product_covers},
                      {"used_fallback", cert.used_fallback},
                      {"splits", cert.valid()}}
                     .dump()
              << "\n";
  } else {
    std::cout << label << ": " << (cert.valid() ? "splits" : "does not split")
              << ", kernel size " << cert.kernel.size() << ", checks (normal="
              << cert.kernel_normal << ", meet=" << cert.trivial_intersection
              << ", cover=" << cert.product_covers << ")"
              << (cert.used_fallback ? ", via fallback search" : "") << "\n";
  }
  return cert.valid() ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(int degree, bool dump, bool as_json) {
  SearchResult res = enumerate_degree(degree, resource_cap() * 1000L);
  if (!as_json)
    std::cout << "degree " << degree << ": " << res.groups.size()
              << (res.groups.size() == 1 ? " group" : " groups")
              << (res.complete ? "" : " (incomplete: resource cap)") << "\n";
  int index = 0;
  for (const PermGroup& g : res.groups) {
    ++index;
    S2TContext ctx = build_context(
        g, "search:n=" + std::to_string(degree) + "#" + std::to_string(index));
    SplitCertificate cert = splitting_certificate(ctx);
    if (as_json) {
      std::cout << json{{"degree", degree},
                        {"index", index},
                        {"order", g.order()},
                        {"characteristic", to_string(ctx.chr)},
                        {"split_kernel", cert.kernel.size()},
                        {"splits", cert.valid()},
                        {"complete", res.complete}}
                       .dump()
                << "\n";
    } else {
      std::cout << "  group " << index << ": order " << g.order()
                << ", characteristic " << to_string(ctx.chr)
                << ", split kernel " << cert.kernel.size() << "\n";
    }
    if (dump) {
      std::cout << "# degree " << degree << ", order " << g.order()
                << ", char " << to_string(ctx.chr) << "\n"
                << write_group_text(g.degree, g.generators);
    }
  }
  if (as_json && res.groups.empty())
    std::cout << json{{"degree", degree},
                      {"groups", 0},
                      {"complete", res.complete}}
                     .dump()
              << "\n";
  return res.complete ? kExitOk : kExitResourceCap;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "s2tlab: exact laboratory for finite sharply 2-transitive groups.\n"
      "The environment variable S2TLAB_MAX_ORDER overrides the group\n"
      "materialization cap (default 20000); enumerate uses 1000x that\n"
      "value as its search node budget."};
  app.require_subcommand(1);

  Source src;
  bool as_json = false;
  int degree = 0;
  bool dump = false;

  auto* construct = app.add_subcommand("construct", "build a group and print it");
  add_source_flags(construct, src);

  auto* check = app.add_subcommand("check", "run every lemma/theorem check");
  add_source_flags(check, src);
  check->add_flag("--json", as_json, "line-delimited JSON records");

  auto* chr = app.add_subcommand("char", "print the characteristic");
  add_source_flags(chr, src);
  chr->add_flag("--json", as_json, "JSON output");

  auto* split = app.add_subcommand("split", "print the splitting certificate");
  add_source_flags(split, src);
  split->add_flag("--json", as_json, "JSON output");

  auto* enumerate = app.add_subcommand(
      "enumerate", "classify all sharply 2-transitive groups of a degree");
  enumerate->add_option("-n,--degree", degree, "degree to search")->required();
  enumerate->add_flag("--dump", dump, "dump each group in group text format");
  enumerate->add_flag("--json", as_json, "line-delimited JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      require_one_source(src);
      return cmd_construct(src);
    }
    if (check->parsed()) {
      require_one_source(src);
      return cmd_check(src, as_json);
    }
    if (chr->parsed()) {
      require_one_source(src);
      return cmd_char(src, as_json);
    }
    if (split->parsed()) {
      require_one_source(src);
      return cmd_split(src, as_json);
    }
    if (enumerate->parsed())
      return cmd_enumerate(degree, dump, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotSharplyTransitiveError& e) {
    const auto& w = e.witness;
    std::cerr << "rejected: not sharply 2-transitive; pair (" << w.x << ","
              << w.y << ") -> (" << w.z << "," << w.t << ") has " << w.count
              << " solutions\n";
    return kExitRejected;
  } catch (const CapExceededError& e) {
    std::cerr << "resource cap exceeded (partial count " << e.partial_count
              << ")\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

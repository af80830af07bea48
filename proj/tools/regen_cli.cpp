#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regen/regen.hpp"

namespace fs = std::filesystem;
using namespace regen;
using namespace regen::harness;

namespace {

constexpr int kUsageError = 2;
constexpr int kCodecError = 1;

std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> out;
  for (auto v : nodes) {
    if (v == 0) raise(ErrorCode::IndexOutOfRange, "node numbers start at 1");
    out.push_back(v - 1);
  }
  return out;
}

struct Cluster {
  CodecParams params;
  NodeTable nodes;
};

// Loads every node_<i>.frag found in `dir`; all headers must agree.
Cluster load_cluster(const fs::path& dir) {
  if (!fs::is_directory(dir)) raise(ErrorCode::IoError, dir.string() + " is not a directory");
  std::vector<FragmentFile> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("node_", 0) == 0 && entry.path().extension() == ".frag") {
      files.push_back(read_fragment(entry.path()));
    }
  }
  if (files.empty()) raise(ErrorCode::InsufficientSymbols, "no fragments in " + dir.string());
  Cluster cluster;
  cluster.params = files.front().params;
  cluster.nodes.assign(cluster.params.n, std::nullopt);
  for (auto& f : files) {
    const auto& p = f.params;
    if (p.tag != cluster.params.tag || !(p.field == cluster.params.field) ||
        p.n != cluster.params.n || p.k != cluster.params.k || p.d != cluster.params.d) {
      raise(ErrorCode::FormatError, "fragments in " + dir.string() + " belong to different codes");
    }
    if (f.node >= p.n) raise(ErrorCode::FormatError, "fragment node index exceeds n");
    if (cluster.nodes[f.node]) raise(ErrorCode::FormatError, "two fragments for one node");
    cluster.nodes[f.node] = std::move(f.symbols);
  }
  return cluster;
}

int cmd_encode(const fs::path& msg_path, const std::string& codec_name, std::size_t n,
               std::size_t k, std::optional<std::size_t> d, const std::string& field_spec,
               const fs::path& out_dir) {
  CodecParams params;
  params.tag = parse_codec(codec_name);
  params.field = Field::parse(field_spec);
  params.n = n;
  params.k = k;
  params.d = d;
  const Codec codec = Codec::make(params);
  const auto message = read_message(msg_path, codec.field(), codec.message_size());
  OpCounter ops;
  const auto fragments = codec.encode(message, &ops);
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    write_fragment(fragment_path(out_dir, i), {codec.params(), i, fragments[i]});
  }
  std::cout << "encoded B=" << codec.message_size() << " symbols into " << fragments.size()
            << " fragments of " << codec.alpha() << " symbols; multiplications="
            << ops.multiplications << " additions=" << ops.additions << '\n';
  return 0;
}

int cmd_repair(std::size_t failed_1, const fs::path& dir, const std::vector<std::size_t>& helpers) {
  Cluster cluster = load_cluster(dir);
  const Codec codec = Codec::make(cluster.params);
  const std::size_t failed = to_zero_based({failed_1}).front();
  if (failed >= codec.n()) raise(ErrorCode::IndexOutOfRange, "failed node out of range");
  cluster.nodes[failed].reset();
  std::optional<std::vector<std::size_t>> chosen;
  if (!helpers.empty()) chosen = to_zero_based(helpers);
  const auto res = codec.repair(cluster.nodes, failed, chosen);
  write_fragment(fragment_path(dir, failed), {codec.params(), failed, res.fragment});
  std::cout << "repaired node " << failed_1 << " from " << res.helpers.size()
            << " helpers; symbols=" << res.symbols << " multiplications=" << res.ops.multiplications
            << " additions=" << res.ops.additions << '\n';
  return 0;
}

int cmd_reconstruct(const std::vector<std::size_t>& nodes_1, const std::string& scheme_name,
                    std::size_t rounds, const fs::path& dir, const fs::path& out) {
  const Cluster cluster = load_cluster(dir);
  const Codec codec = Codec::make(cluster.params);
  const auto connected = to_zero_based(nodes_1);
  const auto res = codec.reconstruct(cluster.nodes, connected, parse_scheme(scheme_name), rounds);
  write_message(out, codec.field(), res.data);
  std::cout << "reconstructed B=" << res.data.size() << " symbols; downloaded=" << res.symbols;
  std::cout << " per-node=";
  for (std::size_t j = 0; j < connected.size(); ++j) {
    std::cout << (j ? "," : "") << connected[j] + 1 << ':' << res.per_node[j];
  }
  std::cout << " multiplications=" << res.ops.multiplications << '\n';
  return 0;
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& sizes,
              const std::string& field_spec, const std::string& report_path) {
  const auto fam = parse_family(family);
  const Field field = Field::parse(field_spec);
  const auto report = bench_compare(fam, sizes, field);
  if (report_path.empty() || report_path == "-") {
    write_csv(std::cout, report);
  } else {
    std::ofstream out(report_path);
    if (!out) raise(ErrorCode::IoError, "cannot write " + report_path);
    write_csv(out, report);
    std::cout << "wrote " << report.rows.size() << " rows to " << report_path << "; trend "
              << report.trend << '\n';
  }
  if (report.trend_checked && !report.trend_holds) raise(ErrorCode::TrendViolated, report.trend);
  return 0;
}

int cmd_simulate(const fs::path& script, const std::string& report_path) {
  const auto result = sim_run_file(script);
  if (report_path.empty() || report_path == "-") {
    write_report_csv(std::cout, result.report);
  } else {
    std::ofstream out(report_path);
    if (!out) raise(ErrorCode::IoError, "cannot write " + report_path);
    write_report_csv(out, result.report);
  }
  std::cout << "# events=" << result.report.events.size()
            << " symbols=" << result.report.total_symbols()
            << " multiplications=" << result.report.total_ops().multiplications << '\n';
  return 0;
}

int cmd_fields(const std::string& field_spec, std::size_t n, std::size_t k, std::size_t d) {
  const Field field = Field::parse(field_spec);
  write_field_report(std::cout, field, n, k, d, field_size_report(field, n, k, d));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerating-code toolkit: encode, repair, reconstruct, benchmark"};
  app.require_subcommand(1);

  std::string codec_name, field_spec = "prime:7", scheme_name = "full", family, report_path;
  std::size_t n = 0, k = 0, d = 0, failed = 0, rounds = 2;
  fs::path msg_path, out_dir, frags_dir, out_path, script;
  std::vector<std::size_t> nodes, helpers, sizes;

  auto* encode = app.add_subcommand("encode", "Encode a message file into node fragments");
  encode->add_option("message", msg_path, "Message file (B little-endian symbols)")->required();
  encode->add_option("--codec", codec_name, "rbt | rbt-sys | mbr-psrs | mbr-vdm | shah")->required();
  encode->add_option("--n", n, "Number of nodes")->required();
  encode->add_option("--k", k, "Nodes needed for reconstruction")->required();
  auto* d_opt = encode->add_option("--d", d, "Repair degree (product-matrix codecs)");
  encode->add_option("--field", field_spec, "prime:<p> | binary:<m> | gf2^<m> | fermat");
  encode->add_option("--out-dir", out_dir, "Directory for node_<i>.frag")->required();

  auto* repair = app.add_subcommand("repair", "Regenerate one node's fragment");
  repair->add_option("--failed", failed, "Node to rebuild (1-based)")->required();
  repair->add_option("--frags", frags_dir, "Fragment directory")->required();
  repair->add_option("--helpers", helpers, "Helper nodes (1-based)")->delimiter(',');

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the message from k nodes");
  reconstruct->add_option("--nodes", nodes, "Connected nodes (1-based)")->delimiter(',')->required();
  reconstruct->add_option("--scheme", scheme_name, "full | partial | lower | upper | gong | timeshare");
  reconstruct->add_option("--rounds", rounds, "Rounds for the timeshare scheme");
  reconstruct->add_option("--frags", frags_dir, "Fragment directory")->required();
  reconstruct->add_option("--out", out_path, "Output message file")->required();

  auto* bench = app.add_subcommand("bench", "Operation-count comparison");
  bench->add_option("--family", family, "rbt-vs-shah | mbr-naive-vs-ntt")->required();
  bench->add_option("--sizes", sizes, "Code lengths")->delimiter(',')->required();
  std::string bench_field;
  bench->add_option("--field", bench_field,
                    "Field specification (default binary:16, or fermat for mbr-naive-vs-ntt)");
  bench->add_option("--report", report_path, "CSV output path ('-' for stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive small-parameter suites");

  auto* simulate = app.add_subcommand("simulate", "Run a cluster scenario script");
  simulate->add_option("--script", script, "Scenario file")->required();
  simulate->add_option("--report", report_path, "CSV output path ('-' for stdout)");

  auto* fields = app.add_subcommand("fields", "Field-size requirements of each construction");
  fields->add_option("--field", field_spec, "Field specification");
  fields->add_option("--n", n)->required();
  fields->add_option("--k", k)->required();
  fields->add_option("--d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*encode) {
      std::optional<std::size_t> d_value;
      if (*d_opt) d_value = d;
      return cmd_encode(msg_path, codec_name, n, k, d_value, field_spec, out_dir);
    }
    if (*repair) return cmd_repair(failed, frags_dir, helpers);
    if (*reconstruct) return cmd_reconstruct(nodes, scheme_name, rounds, frags_dir, out_path);
    if (*bench) {
      if (bench_field.empty()) bench_field = family == "mbr-naive-vs-ntt" ? "fermat" : "binary:16";
      return cmd_bench(family, sizes, bench_field, report_path);
    }
    if (*selftest) return print_selftest(std::cout, run_selftest()) ? 0 : kCodecError;
    if (*simulate) return cmd_simulate(script, report_path);
    if (*fields) return cmd_fields(field_spec, n, k, d);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kCodecError;
  } catch (const std::exception& e) {
    std::cerr << "error: IoError: " << e.what() << '\n';
    return kCodecError;
  }
  return kUsageError;
}

#include "regen/harness/simulator.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>


namespace regen::harness {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::size_t parse_number(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    raise(ErrorCode::ScriptInvalid, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_node(std::string_view text) {
  const std::size_t v = parse_number(text);
  if (v == 0) raise(ErrorCode::ScriptInvalid, "node numbers start at 1");
  return v - 1;
}

std::vector<std::size_t> parse_nodes(const std::vector<std::string>& words, std::size_t first,
                                     std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < last; ++i)
    for (const auto& part : split(words[i], ',')) out.push_back(parse_node(part));
  return out;
}

bool is_scheme(std::string_view word) {
  for (auto s : {"full", "partial", "lower", "upper", "gong", "timeshare"})
    if (word == s) return true;
  return false;
}

class Runner {
 public:
  SimResult run(std::string_view script) {
    std::istringstream in{std::string(script)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::vector<std::string> words;
      std::istringstream ls(line);
      for (std::string w; ls >> w;) words.push_back(w);
      if (words.empty()) continue;
      try {
        execute(words, line_no);
      } catch (const Error& e) {
        raise(e.code(), "event " + std::to_string(result_.report.events.size()) + " (line " +
                            std::to_string(line_no) + "): " + e.what());
      }
    }
    return std::move(result_);
  }

 private:
  ClusterState& state() { return result_.state; }

  const Codec& codec() {
    if (!state().codec) raise(ErrorCode::ScriptInvalid, "no codec declared yet");
    return *state().codec;
  }

  void require_encoded() {
    if (state().codeword.empty()) raise(ErrorCode::ScriptInvalid, "nothing encoded yet");
  }

  std::size_t checked_node(std::size_t node) {
    if (node >= codec().n()) {
      raise(ErrorCode::IndexOutOfRange, "node " + std::to_string(node + 1) + " out of range");
    }
    return node;
  }

  EventRecord& record(EventKind kind, std::size_t line) {
    EventRecord r;
    r.index = result_.report.events.size();
    r.line = line;
    r.kind = kind;
    result_.report.events.push_back(std::move(r));
    return result_.report.events.back();
  }

  void send(EventRecord& r, std::size_t node, std::size_t count) {
    r.sent_by.emplace_back(node, count);
    r.symbols += count;
    result_.report.per_node[node] += count;
  }

  void execute(const std::vector<std::string>& words, std::size_t line) {
    const std::string& cmd = words[0];
    if (cmd == "codec") return declare(words);
    if (cmd == "encode") return encode(words, line);
    if (cmd == "fail") return fail(words, line);
    if (cmd == "repair") return repair(words, line);
    if (cmd == "reconstruct") return reconstruct(words, line);
    raise(ErrorCode::ScriptInvalid, "unknown command '" + cmd + "'");
  }

  void declare(const std::vector<std::string>& words) {
    if (words.size() < 2) raise(ErrorCode::ScriptInvalid, "codec needs a name");
    CodecParams p;
    p.tag = parse_codec(words[1]);
    std::optional<Field> field;
    for (std::size_t i = 2; i < words.size(); ++i) {
      const auto eq = words[i].find('=');
      if (eq == std::string::npos) raise(ErrorCode::ScriptInvalid, "expected key=value: " + words[i]);
      const std::string key = words[i].substr(0, eq);
      const std::string value = words[i].substr(eq + 1);
      if (key == "n") p.n = parse_number(value);
      else if (key == "k") p.k = parse_number(value);
      else if (key == "d") p.d = parse_number(value);
      else if (key == "field") field = Field::parse(value);
      else if (key == "seed") state().seed = parse_number(value);
      else raise(ErrorCode::ScriptInvalid, "unknown codec option '" + key + "'");
    }
    if (!field) raise(ErrorCode::ScriptInvalid, "codec needs field=<spec>");
    p.field = *field;
    state().codec.emplace(Codec::make(p));
    state().codeword.clear();
    state().nodes.assign(p.n, std::nullopt);
    result_.report.per_node.assign(p.n, 0);
  }

  void encode(const std::vector<std::string>& words, std::size_t line) {
    if (words.size() != 1) raise(ErrorCode::ScriptInvalid, "encode takes no arguments");
    const Codec& c = codec();
    std::mt19937_64 rng(state().seed + result_.report.events.size());
    std::uniform_int_distribution<std::uint64_t> dist(0, c.field().order() - 1);
    state().message.resize(c.message_size());
    for (auto& s : state().message) s = static_cast<Symbol>(dist(rng));
    auto& r = record(EventKind::encode, line);
    state().codeword = c.encode(state().message, &r.ops);
    state().nodes.assign(state().codeword.begin(), state().codeword.end());
  }

  void fail(const std::vector<std::string>& words, std::size_t line) {
    if (words.size() != 2) raise(ErrorCode::ScriptInvalid, "usage: fail <node>");
    require_encoded();
    const std::size_t node = checked_node(parse_node(words[1]));
    state().nodes[node].reset();
    record(EventKind::fail, line);
  }

  void repair(const std::vector<std::string>& words, std::size_t line) {
    if (words.size() < 2) raise(ErrorCode::ScriptInvalid, "usage: repair <node> [helpers]");
    require_encoded();
    const std::size_t node = checked_node(parse_node(words[1]));
    if (state().nodes[node]) {
      raise(ErrorCode::ScriptInvalid, "node " + std::to_string(node + 1) + " has not failed");
    }
    std::optional<std::vector<std::size_t>> helpers;
    if (words.size() > 2) helpers = parse_nodes(words, 2, words.size());
    auto res = codec().repair(state().nodes, node, helpers);
    if (res.fragment != state().codeword[node]) {
      raise(ErrorCode::ReconstructMismatch,
            "repaired fragment of node " + std::to_string(node + 1) + " differs from the original");
    }
    auto& r = record(EventKind::repair, line);
    r.ops = res.ops;
    for (auto h : res.helpers) send(r, h, 1);
    state().nodes[node] = std::move(res.fragment);
  }

  void reconstruct(const std::vector<std::string>& words, std::size_t line) {
    if (words.size() < 2) raise(ErrorCode::ScriptInvalid, "usage: reconstruct <nodes> [scheme]");
    require_encoded();
    std::size_t last = words.size();
    Scheme scheme = Scheme::full;
    if (is_scheme(words.back())) {
      scheme = parse_scheme(words.back());
      --last;
    }
    const auto nodes = parse_nodes(words, 1, last);
    auto res = codec().reconstruct(state().nodes, nodes, scheme);
    if (res.data != state().message) {
      raise(ErrorCode::ReconstructMismatch, "reconstructed message differs from the original");
    }
    auto& r = record(EventKind::reconstruct, line);
    r.scheme = scheme;
    r.ops = res.ops;
    for (std::size_t j = 0; j < nodes.size(); ++j) send(r, nodes[j], res.per_node[j]);
  }

  SimResult result_;
};

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::encode: return "encode";
    case EventKind::fail: return "fail";
    case EventKind::repair: return "repair";
    case EventKind::reconstruct: return "reconstruct";
  }
  return "?";
}

std::size_t CostReport::total_symbols() const noexcept {
  std::size_t total = 0;
  for (const auto& e : events) total += e.symbols;
  return total;
}

OpCounter CostReport::total_ops() const noexcept {
  OpCounter total;
  for (const auto& e : events) total += e.ops;
  return total;
}

std::size_t ClusterState::alive() const noexcept {
  std::size_t count = 0;
  for (const auto& n : nodes) count += n.has_value();
  return count;
}

SimResult sim_run(std::string_view script) { return Runner().run(script); }

SimResult sim_run_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open script " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return sim_run(text.str());
}

void write_report_csv(std::ostream& out, const CostReport& report) {
  out << "index,line,event,scheme,symbols,multiplications,additions\n";
  for (const auto& e : report.events) {
    out << e.index << ',' << e.line << ',' << to_string(e.kind) << ','
        << (e.scheme ? to_string(*e.scheme) : std::string_view{}) << ',' << e.symbols << ','
        << e.ops.multiplications << ',' << e.ops.additions << '\n';
  }
}

}  // namespace regen::harness

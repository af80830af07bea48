#include "regen/harness/bench.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include "regen/mbr.hpp"
#include "regen/rbt.hpp"
#include "regen/shah.hpp"

namespace regen::harness {

namespace {

std::vector<Symbol> random_symbols(const Field& field, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
  std::vector<Symbol> out(count);
  for (auto& s : out) s = static_cast<Symbol>(dist(rng));
  return out;
}

void rbt_vs_shah(BenchReport& report, std::size_t n, const Field& field) {
  if (n < 2 || n % 2 != 0) {
    report.excluded.push_back({n, "rbt", "k = n/2 needs even n >= 2"});
    report.excluded.push_back({n, "shah", "k = n/2 needs even n >= 2"});
    return;
  }
  const std::size_t k = n / 2;
  try {
    const RbtCode code(field, n, k, true);
    const auto data = random_symbols(field, code.message_size(), n);
    OpCounter ops;
    code.encode(data, &ops);
    report.rows.push_back({n, "rbt", ops.multiplications, ops.additions, n * (n - 1)});
  } catch (const Error& e) {
    report.excluded.push_back({n, "rbt", std::string(to_string(e.code())) + ": " + e.what()});
  }
  try {
    const ShahCode code(field, n, k);
    const auto data = random_symbols(field, code.message_size(), n);
    OpCounter ops;
    code.encode(data, &ops);
    report.rows.push_back({n, "shah", ops.multiplications, ops.additions, n * (n - 1)});
  } catch (const Error& e) {
    report.excluded.push_back({n, "shah", std::string(to_string(e.code())) + ": " + e.what()});
  }
}

void mbr_naive_vs_ntt(BenchReport& report, std::size_t n, const Field& field) {
  const auto exclude = [&](const std::string& why) {
    report.excluded.push_back({n, "naive", why});
    report.excluded.push_back({n, "ntt", why});
  };
  if (field.kind() != FieldKind::fermat) {
    exclude("WrongField: the NTT route needs GF(65537)");
    return;
  }
  if (n % 8 != 0 || n < 8) {
    exclude("k = 3n/8 and d = n/2 need n divisible by 8");
    return;
  }
  try {
    const MbrCode code = MbrCode::psrs_on_roots_of_unity(n, 3 * n / 8, n / 2);
    const auto data = random_symbols(field, code.message_size(), n);
    OpCounter naive;
    OpCounter fast;
    const Matrix a = code.encode(data, &naive, MbrCode::EncodeRoute::matrix);
    const Matrix b = code.encode(data, &fast, MbrCode::EncodeRoute::polynomial);
    if (!(a == b)) raise(ErrorCode::DecodeMismatch, "encoding routes disagree");
    const std::uint64_t stored = n * code.d();
    report.rows.push_back({n, "naive", naive.multiplications, naive.additions, stored});
    report.rows.push_back({n, "ntt", fast.multiplications, fast.additions, stored});
  } catch (const Error& e) {
    exclude(std::string(to_string(e.code())) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(BenchFamily family) {
  return family == BenchFamily::rbt_vs_shah ? "rbt-vs-shah" : "mbr-naive-vs-ntt";
}

BenchFamily parse_family(std::string_view text) {
  if (text == "rbt-vs-shah") return BenchFamily::rbt_vs_shah;
  if (text == "mbr-naive-vs-ntt") return BenchFamily::mbr_naive_vs_ntt;
  raise(ErrorCode::ParamsInvalid, "unknown bench family '" + std::string(text) + "'");
}

const BenchRow* BenchReport::find(std::size_t n, std::string_view contender) const {
  for (const auto& r : rows)
    if (r.n == n && r.contender == contender) return &r;
  return nullptr;
}

BenchReport bench_compare(BenchFamily family, const std::vector<std::size_t>& sizes,
                          const Field& field) {
  BenchReport report;
  report.family = family;
  for (auto n : sizes) {
    if (family == BenchFamily::rbt_vs_shah) rbt_vs_shah(report, n, field);
    else mbr_naive_vs_ntt(report, n, field);
  }

  const char* first = family == BenchFamily::rbt_vs_shah ? "rbt" : "naive";
  const char* second = family == BenchFamily::rbt_vs_shah ? "shah" : "ntt";
  std::vector<std::size_t> paired;
  for (auto n : sizes)
    if (report.find(n, first) && report.find(n, second)) paired.push_back(n);
  if (paired.size() < 2) {
    report.trend = "not checked (fewer than two sizes with both contenders)";
    return report;
  }
  report.trend_checked = true;
  std::ostringstream msg;
  if (family == BenchFamily::rbt_vs_shah) {
    double previous = 0.0;
    for (auto n : paired) {
      const double rbt = static_cast<double>(report.find(n, "rbt")->multiplications);
      const double shah = static_cast<double>(report.find(n, "shah")->multiplications);
      const double ratio = rbt > 0 ? shah / rbt : 0.0;
      msg << " n=" << n << ":" << ratio;
      if (ratio <= previous) report.trend_holds = false;
      previous = ratio;
    }
    report.trend = std::string(report.trend_holds ? "holds" : "violated") +
                   ": shah/rbt multiplication ratio strictly increasing;" + msg.str();
  } else {
    report.trend_holds = false;
    for (auto n : paired) {
      const auto naive = report.find(n, "naive")->multiplications;
      const auto ntt = report.find(n, "ntt")->multiplications;
      if (ntt < naive) {
        report.trend_holds = true;
        msg << " first at n=" << n << " (" << ntt << " < " << naive << ")";
        break;
      }
    }
    report.trend = std::string(report.trend_holds ? "holds" : "violated") +
                   ": ntt multiplications fall below naive within the range;" + msg.str();
  }
  return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "n,contender,multiplications,additions,symbols\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.contender << ',' << r.multiplications << ',' << r.additions << ','
        << r.symbols << '\n';
  }
  for (const auto& e : report.excluded) {
    out << "# excluded n=" << e.n << " contender=" << e.contender << ": " << e.reason << '\n';
  }
  out << "# trend " << report.trend << '\n';
}

}  // namespace regen::harness

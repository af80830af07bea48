#include "regen/harness/field_report.hpp"

#include <functional>
#include <ostream>

#include "regen/mbr.hpp"
#include "regen/psrs.hpp"
#include "regen/rbt.hpp"
#include "regen/shah.hpp"

namespace regen::harness {

namespace {

std::optional<bool> try_build(const std::function<void()>& build) {
  try {
    build();
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::vector<FieldSizeRow> field_size_report(const Field& field, std::size_t n, std::size_t k,
                                            std::size_t d) {
  const std::uint64_t q = field.order();
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  std::vector<FieldSizeRow> rows;

  rows.push_back({"shah", "C(n,2) <= q+1", pairs <= q + 1,
                  try_build([&] { ShahCode(field, n, k); })});
  rows.push_back({"rbt", "n <= q+1", n <= q + 1, try_build([&] { RbtCode(field, n, k); })});
  rows.push_back({"mbr-psrs", "n <= q", n <= q,
                  try_build([&] { MbrCode(field, n, k, d, MbrBackend::psrs); })});
  rows.push_back({"mbr-vdm", "n <= q", n <= q,
                  try_build([&] { MbrCode(field, n, k, d, MbrBackend::vandermonde); })});
  rows.push_back({"rashmi-cauchy", "n <= q+k-d", n + d <= q + k, std::nullopt});
  rows.push_back({"psrs-genpoly", "n <= q-1", n + 1 <= q,
                  try_build([&] { PsrsGenPolyCode(field, n, k, d); })});
  return rows;
}

void write_field_report(std::ostream& out, const Field& field, std::size_t n, std::size_t k,
                        std::size_t d, const std::vector<FieldSizeRow>& rows) {
  out << "# field " << field.name() << " q=" << field.order() << " n=" << n << " k=" << k
      << " d=" << d << '\n';
  out << "construction,bound,bound_met,built\n";
  for (const auto& r : rows) {
    out << r.construction << ',' << r.bound << ',' << (r.bound_met ? "yes" : "no") << ','
        << (r.built ? (*r.built ? "yes" : "no") : "n/a") << '\n';
  }
}

}  // namespace regen::harness

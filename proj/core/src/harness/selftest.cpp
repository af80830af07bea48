#include "regen/harness/selftest.hpp"

#include <functional>
#include <ostream>
#include <random>

#include "regen/harness/codec.hpp"
#include "regen/harness/fragment_io.hpp"
#include "regen/psrs.hpp"

namespace regen::harness {

namespace {

class Failure : public std::exception {
 public:
  explicit Failure(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

std::vector<Symbol> random_message(const Field& f, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  std::vector<Symbol> out(count);
  for (auto& s : out) s = static_cast<Symbol>(dist(rng));
  return out;
}

void field_axioms() {
  for (const Field& f : {Field::prime(7), Field::binary(2), Field::binary(4), Field::prime(11)}) {
    const auto q = static_cast<Symbol>(f.order());
    for (Symbol a = 0; a < q; ++a) {
      if (a != 0) expect(f.mul(a, f.inv(a)) == 1, f.name() + ": a * inv(a) != 1");
      expect(f.add(a, f.neg(a)) == 0, f.name() + ": a + (-a) != 0");
      for (Symbol b = 0; b < q; ++b) {
        expect(f.mul(a, b) == f.mul(b, a), f.name() + ": multiplication not commutative");
        for (Symbol c = 0; c < q; ++c) {
          expect(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                 f.name() + ": distributivity fails");
        }
      }
    }
  }
}

// Every k-subset under every scheme the codec offers, every single failure
// from the default helpers, for a few random messages.
void codec_suite(const CodecParams& params, const std::vector<Scheme>& schemes) {
  const Codec codec = Codec::make(params);
  std::mt19937_64 rng(params.n * 101 + params.k);
  for (int trial = 0; trial < 3; ++trial) {
    const auto msg = random_message(codec.field(), codec.message_size(), rng);
    const auto frags = codec.encode(msg);
    NodeTable nodes(frags.begin(), frags.end());
    for (const auto& subset : subsets(codec.n(), codec.k())) {
      for (auto scheme : schemes) {
        const auto res = codec.reconstruct(nodes, subset, scheme);
        expect(res.data == msg, std::string(to_string(codec.tag())) + " " +
                                    std::string(to_string(scheme)) + " reconstruction mismatch");
      }
    }
    for (std::size_t failed = 0; failed < codec.n(); ++failed) {
      NodeTable broken = nodes;
      broken[failed].reset();
      const auto res = codec.repair(broken, failed);
      expect(res.fragment == frags[failed], std::string(to_string(codec.tag())) + " repair mismatch");
    }
  }
}

void psrs_suite() {
  const Field f = Field::prime(11);
  const PsrsEvalCode code(f, 8, 3, 5);
  std::mt19937_64 rng(5);
  const auto a = random_message(f, 3, rng);
  const auto b = random_message(f, 2, rng);
  const auto cw = code.encode(a, b);
  for (const auto& subset : subsets(8, 5)) {
    std::vector<Share> shares;
    for (auto p : subset) shares.push_back({p, cw[p]});
    const auto msg = code.decode_full(shares);
    expect(msg.a == a && msg.b == b, "psrs full decode mismatch");
  }
  for (const auto& subset : subsets(8, 3)) {
    std::vector<Share> shares;
    for (auto p : subset) shares.push_back({p, cw[p]});
    expect(code.decode_partial(shares, b) == a, "psrs partial decode mismatch");
  }
}

void fragment_roundtrip() {
  for (const Field& f : {Field::prime(7), Field::binary(4), Field::binary(16), Field::fermat()}) {
    FragmentFile frag;
    frag.params = {CodecTag::mbr_vdm, f, 6, 3, 4};
    frag.node = 4;
    std::mt19937_64 rng(f.order());
    frag.symbols = random_message(f, 4, rng);
    expect(parse_fragment(serialize_fragment(frag)) == frag, f.name() + " fragment round trip");
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
  const Field gf7 = Field::prime(7);
  const std::vector<std::pair<std::string, std::function<void()>>> suites = {
      {"field-axioms", field_axioms},
      {"rbt GF(7) n=6 k=3",
       [&] { codec_suite({CodecTag::rbt, gf7, 6, 3, {}}, {Scheme::full, Scheme::partial}); }},
      {"rbt-sys GF(7) n=6 k=3",
       [&] { codec_suite({CodecTag::rbt_sys, gf7, 6, 3, {}}, {Scheme::full, Scheme::partial}); }},
      {"rbt GF(4) n=5 k=3",
       [&] {
         codec_suite({CodecTag::rbt, Field::binary(2), 5, 3, {}}, {Scheme::full, Scheme::partial});
       }},
      {"mbr-psrs GF(7) n=6 k=3 d=4",
       [&] {
         codec_suite({CodecTag::mbr_psrs, gf7, 6, 3, 4},
                     {Scheme::full, Scheme::lower, Scheme::upper, Scheme::timeshare});
       }},
      {"mbr-vdm GF(7) n=6 k=3 d=4",
       [&] {
         codec_suite({CodecTag::mbr_vdm, gf7, 6, 3, 4},
                     {Scheme::full, Scheme::lower, Scheme::upper, Scheme::gong});
       }},
      {"shah GF(64) n=5 k=3",
       [&] {
         codec_suite({CodecTag::shah, Field::binary(6), 5, 3, {}}, {Scheme::full, Scheme::partial});
       }},
      {"psrs GF(11) n=8 k=3 d=5", psrs_suite},
      {"fragment-format", fragment_roundtrip},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, run] : suites) {
    SuiteResult r{name, false, ""};
    try {
      run();
      r.passed = true;
    } catch (const Failure& e) {
      r.detail = e.what();
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool print_selftest(std::ostream& out, const std::vector<SuiteResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace regen::harness

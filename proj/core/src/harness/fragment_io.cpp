#include "regen/harness/fragment_io.hpp"

#include <bit>
#include <fstream>
#include <iterator>
#include <string>

namespace regen::harness {

namespace {

constexpr std::uint8_t kMagic[4] = {'R', 'G', 'C', '1'};

void put(std::vector<std::uint8_t>& out, std::uint64_t value, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t get(std::span<const std::uint8_t> in, std::size_t offset, std::size_t width) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) value |= std::uint64_t{in[offset + i]} << (8 * i);
  return value;
}

Field field_from_header(std::uint8_t kind, std::uint32_t parameter) {
  switch (kind) {
    case 0: return Field::prime(parameter);
    case 1: return Field::binary(parameter);
    case 2:
      if (parameter != 65537) raise(ErrorCode::FormatError, "fermat field parameter must be 65537");
      return Field::fermat();
    default: raise(ErrorCode::FormatError, "unknown field kind " + std::to_string(kind));
  }
}

std::size_t fit_u16(std::size_t value, const char* what) {
  if (value > 0xFFFF) raise(ErrorCode::FormatError, std::string(what) + " does not fit in 16 bits");
  return value;
}

}  // namespace

std::size_t symbol_width(const Field& field) noexcept {
  if (field.kind() == FieldKind::fermat) return 4;
  const auto bits = std::bit_width(field.order() - 1);
  return std::max<std::size_t>(1, (bits + 7) / 8);
}

std::vector<std::uint8_t> serialize_fragment(const FragmentFile& f) {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  put(out, static_cast<std::uint8_t>(f.params.tag), 1);
  put(out, static_cast<std::uint8_t>(f.params.field.kind()), 1);
  put(out, f.params.field.parameter(), 4);
  put(out, fit_u16(f.params.n, "n"), 2);
  put(out, fit_u16(f.params.k, "k"), 2);
  put(out, fit_u16(f.params.d.value_or(0), "d"), 2);
  put(out, fit_u16(f.node + 1, "node index"), 2);
  put(out, f.symbols.size(), 4);
  const std::size_t width = symbol_width(f.params.field);
  for (auto s : f.symbols) {
    if (!f.params.field.contains(s)) raise(ErrorCode::FieldMismatch, "symbol outside field");
    put(out, s, width);
  }
  return out;
}

FragmentFile parse_fragment(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFragmentHeaderSize) raise(ErrorCode::FormatError, "fragment file truncated");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    raise(ErrorCode::FormatError, "bad fragment magic");
  }
  FragmentFile f;
  const auto tag = bytes[4];
  if (tag > static_cast<std::uint8_t>(CodecTag::shah)) {
    raise(ErrorCode::FormatError, "unknown codec tag " + std::to_string(tag));
  }
  f.params.tag = static_cast<CodecTag>(tag);
  f.params.field = field_from_header(bytes[5], static_cast<std::uint32_t>(get(bytes, 6, 4)));
  f.params.n = get(bytes, 10, 2);
  f.params.k = get(bytes, 12, 2);
  f.params.d = get(bytes, 14, 2);
  const std::size_t node = get(bytes, 16, 2);
  if (node == 0) raise(ErrorCode::FormatError, "node index is 1-based");
  f.node = node - 1;
  const std::size_t count = get(bytes, 18, 4);
  const std::size_t width = symbol_width(f.params.field);
  if (bytes.size() != kFragmentHeaderSize + count * width) {
    raise(ErrorCode::FormatError, "fragment length does not match its symbol count");
  }
  f.symbols.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto v = get(bytes, kFragmentHeaderSize + i * width, width);
    if (!f.params.field.contains(v)) raise(ErrorCode::FormatError, "symbol outside field");
    f.symbols.push_back(static_cast<Symbol>(v));
  }
  return f;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::IoError, "short write to " + path.string());
}

void write_fragment(const std::filesystem::path& path, const FragmentFile& fragment) {
  write_bytes(path, serialize_fragment(fragment));
}

FragmentFile read_fragment(const std::filesystem::path& path) {
  return parse_fragment(read_bytes(path));
}

std::filesystem::path fragment_path(const std::filesystem::path& dir, std::size_t node) {
  return dir / ("node_" + std::to_string(node + 1) + ".frag");
}

std::vector<std::uint8_t> serialize_message(const Field& field, std::span<const Symbol> symbols) {
  std::vector<std::uint8_t> out;
  const std::size_t width = symbol_width(field);
  for (auto s : symbols) {
    if (!field.contains(s)) raise(ErrorCode::FieldMismatch, "symbol outside field");
    put(out, s, width);
  }
  return out;
}

std::vector<Symbol> parse_message(const Field& field, std::span<const std::uint8_t> bytes,
                                  std::size_t expected) {
  const std::size_t width = symbol_width(field);
  if (bytes.size() != expected * width) {
    raise(ErrorCode::WrongMessageLength,
          "message holds " + std::to_string(bytes.size()) + " bytes, expected B*width = " +
              std::to_string(expected) + "*" + std::to_string(width));
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < expected; ++i) {
    const auto v = get(bytes, i * width, width);
    if (!field.contains(v)) {
      raise(ErrorCode::FieldMismatch, "message symbol " + std::to_string(i) + " = " +
                                          std::to_string(v) + " is outside " + field.name());
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

void write_message(const std::filesystem::path& path, const Field& field,
                   std::span<const Symbol> symbols) {
  write_bytes(path, serialize_message(field, symbols));
}

std::vector<Symbol> read_message(const std::filesystem::path& path, const Field& field,
                                 std::size_t expected) {
  return parse_message(field, read_bytes(path), expected);
}

}  // namespace regen::harness

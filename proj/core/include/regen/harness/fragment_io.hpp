#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "regen/gf.hpp"
#include "regen/harness/codec.hpp"

namespace regen::harness {

/// Bytes per stored symbol: enough for q-1, except GF(65537) which always
/// uses four.
std::size_t symbol_width(const Field& field) noexcept;

/// Fragment file layout (little-endian):
///   "RGC1" | codec u8 | field kind u8 | field parameter u32 |
///   n u16 | k u16 | d u16 | node u16 (1-based) | count u32 | symbols
inline constexpr std::size_t kFragmentHeaderSize = 22;

struct FragmentFile {
  CodecParams params;
  std::size_t node = 0;  // 0-based in memory
  std::vector<Symbol> symbols;

  friend bool operator==(const FragmentFile& a, const FragmentFile& b) {
    return a.params.tag == b.params.tag && a.params.field == b.params.field &&
           a.params.n == b.params.n && a.params.k == b.params.k && a.params.d == b.params.d &&
           a.node == b.node && a.symbols == b.symbols;
  }
};

std::vector<std::uint8_t> serialize_fragment(const FragmentFile& fragment);
FragmentFile parse_fragment(std::span<const std::uint8_t> bytes);

void write_fragment(const std::filesystem::path& path, const FragmentFile& fragment);
FragmentFile read_fragment(const std::filesystem::path& path);

/// node_<i>.frag with i 1-based.
std::filesystem::path fragment_path(const std::filesystem::path& dir, std::size_t node);

/// Message files are bare symbols at symbol_width(field) bytes each.
std::vector<std::uint8_t> serialize_message(const Field& field, std::span<const Symbol> symbols);
std::vector<Symbol> parse_message(const Field& field, std::span<const std::uint8_t> bytes,
                                  std::size_t expected);

void write_message(const std::filesystem::path& path, const Field& field,
                   std::span<const Symbol> symbols);
std::vector<Symbol> read_message(const std::filesystem::path& path, const Field& field,
                                 std::size_t expected);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace regen::harness

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfkit/hopf_truss.hpp"
#include "hopfkit/twisted_post_hopf.hpp"
#include "hopfkit/twisted_rota_baxter.hpp"

namespace hopfkit {

enum class StructureKind { hopf, truss, wtph, wtrb };

std::string_view to_string(StructureKind kind);
/// Throws UnknownKind.
StructureKind parse_kind(std::string_view text);

using Structure = std::variant<HopfAlgebraData, HopfTrussData, WTPHData, WTRBData>;

/// A structure together with the free-form annotations a file may carry.
struct StructureFile {
  Structure value;
  std::vector<std::string> basis;
  std::map<std::string, std::string> metadata;

  StructureKind kind() const noexcept { return static_cast<StructureKind>(value.index()); }
};

inline constexpr int kFormatVersion = 1;

/// Canonical text encoding: fixed key order, reduced scalars, one string per matrix row.
std::string serialize(const StructureFile& file);
/// Throws ParseError (with line or field), ShapeError or UnknownKind.
StructureFile deserialize(std::string_view text);

StructureFile load(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over the target.
void save(const StructureFile& file, const std::filesystem::path& path);

/// The full checker suite for the structure's kind.
CheckReport check_structure(const Structure& s);

}  // namespace hopfkit

#pragma once

#include <string>
#include <vector>

namespace mmk::tables {

enum class Format { markdown, csv };

/// Header and rows of one classification table, built from computed data.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Known ids: "vir-mod-I", "min-I", "min-II", "su2-ext". Family rows are
/// checked against the computed classification for every instance with
/// m <= max_m (levels k <= max_m + 2 for su2-ext); a mismatch throws
/// ClassificationError. Unknown ids throw DomainError.
Table build(const std::string& which, int max_m = 30);

std::string render(const Table& table, Format format);

const std::vector<std::string>& table_ids();

}  // namespace mmk::tables

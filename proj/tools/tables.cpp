#include "tables.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "mmk/classification.hpp"
#include "mmk/errors.hpp"

namespace mmk::tables {
namespace {

using Counts = SectorCounts;

std::string sub(const DynkinDiagram& G) {
  const std::string letter = G.name().substr(0, 1);
  const std::string r = std::to_string(G.rank());
  return letter + (r.size() == 1 ? "_" + r : "_{" + r + "}");
}

std::string pair_text(const InvariantLabel& label) {
  if (!label.second) return sub(label.first);
  return "(" + sub(label.first) + "," + sub(*label.second) + ")";
}

std::vector<std::string> count_cells(const Counts& c) {
  return {std::to_string(c.ab), std::to_string(c.full), std::to_string(c.chiral), std::to_string(c.ambichiral)};
}

// A one-parameter family of rows, printed with its closed forms.
struct Family {
  std::string m_text;
  std::string label_text;
  std::vector<std::string> formulas;  // count columns, or the expansion for vir-mod-I
  int n_min;
  std::function<int(int)> m_of;
  std::function<InvariantLabel(int)> label_of;
  std::function<Counts(int)> counts_of;
};

using D = DynkinDiagram;

std::vector<Family> type_one_families() {
  return {
      {"n", "(A_{n-1},A_n)", {"n(n-1)/2", "n(n-1)/2", "n(n-1)/2", "n(n-1)/2"}, 3, [](int n) { return n; },
       [](int n) { return InvariantLabel{D::A(n - 1), D::A(n)}; },
       [](int n) {
         const int v = n * (n - 1) / 2;
         return Counts{v, v, v, v};
       }},
      {"4n+1", "(A_{4n},D_{2n+2})", {"2n(2n+2)", "2n(4n+4)", "2n(2n+2)", "2n(n+2)"}, 1,
       [](int n) { return 4 * n + 1; }, [](int n) { return InvariantLabel{D::A(4 * n), D::D(2 * n + 2)}; },
       [](int n) {
         return Counts{2 * n * (2 * n + 2), 2 * n * (4 * n + 4), 2 * n * (2 * n + 2), 2 * n * (n + 2)};
       }},
      {"4n+2", "(D_{2n+2},A_{4n+2})", {"(2n+1)(2n+2)", "(2n+1)(4n+4)", "(2n+1)(2n+2)", "(2n+1)(n+2)"}, 1,
       [](int n) { return 4 * n + 2; }, [](int n) { return InvariantLabel{D::D(2 * n + 2), D::A(4 * n + 2)}; },
       [](int n) {
         const int a = 2 * n + 1;
         return Counts{a * (2 * n + 2), a * (4 * n + 4), a * (2 * n + 2), a * (n + 2)};
       }},
  };
}

std::vector<Family> type_two_families() {
  return {
      {"4n", "(D_{2n+1},A_{4n})", {"2n(2n+1)", "2n(4n-1)", "2n(4n-1)", "2n(4n-1)"}, 2, [](int n) { return 4 * n; },
       [](int n) { return InvariantLabel{D::D(2 * n + 1), D::A(4 * n)}; },
       [](int n) {
         const int v = 2 * n * (4 * n - 1);
         return Counts{2 * n * (2 * n + 1), v, v, v};
       }},
      {"4n+3", "(A_{4n+2},D_{2n+3})", {"(2n+1)(2n+3)", "(2n+1)(4n+3)", "(2n+1)(4n+3)", "(2n+1)(4n+3)"}, 1,
       [](int n) { return 4 * n + 3; }, [](int n) { return InvariantLabel{D::A(4 * n + 2), D::D(2 * n + 3)}; },
       [](int n) {
         const int v = (2 * n + 1) * (4 * n + 3);
         return Counts{(2 * n + 1) * (2 * n + 3), v, v, v};
       }},
  };
}

// Family index and parameter n matching an entry, if any.
std::optional<std::pair<std::size_t, int>> match_family(const std::vector<Family>& families,
                                                        const ClassificationEntry& e) {
  const int m = e.algebra.level;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (int n = families[f].n_min; families[f].m_of(n) <= m; ++n)
      if (families[f].m_of(n) == m && families[f].label_of(n) == e.label) return std::pair{f, n};
  return std::nullopt;
}

struct Sorted {
  std::vector<std::size_t> families_seen;
  std::vector<ClassificationEntry> exceptional;
};

// Walks every entry up to max_m, checks family rows against their closed
// forms and returns the entries that belong to no family.
Sorted sort_entries(const std::vector<Family>& families, bool type_one, int max_m) {
  Sorted out;
  std::vector<bool> seen(families.size(), false);
  for (int m = 3; m <= max_m; ++m) {
    const auto entries = type_one ? classify_minimal(m) : classify_minimal_type_II(m);
    for (const auto& e : entries) {
      if (const auto hit = match_family(families, e)) {
        const auto [f, n] = *hit;
        if (!(families[f].counts_of(n) == e.counts))
          throw ClassificationError("row " + families[f].label_text + " disagrees with computed counts at m=" +
                                    std::to_string(m));
        seen[f] = true;
      } else {
        out.exceptional.push_back(e);
      }
    }
  }
  for (std::size_t f = 0; f < families.size(); ++f)
    if (seen[f]) out.families_seen.push_back(f);
  return out;
}

Table counts_table(bool type_one, int max_m) {
  const auto families = type_one ? type_one_families() : type_two_families();
  const Sorted sorted = sort_entries(families, type_one, max_m);
  Table t;
  t.header = {"m", "Labels for Z", "A-B sectors", "B-B sectors", "alpha-induced B-B", "ambichiral B-B"};
  for (const std::size_t f : sorted.families_seen) {
    std::vector<std::string> row{families[f].m_text, families[f].label_text};
    for (const auto& s : families[f].formulas) row.push_back(s);
    t.rows.push_back(std::move(row));
  }
  for (const auto& e : sorted.exceptional) {
    std::vector<std::string> row{std::to_string(e.algebra.level), pair_text(e.label)};
    for (auto& s : count_cells(e.counts)) row.push_back(std::move(s));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// Character expansion of an exceptional minimal invariant, read from the
// blocks of its non-A SU(2) factor.
std::string expansion(const ClassificationEntry& e) {
  const int m = e.algebra.level;
  const bool first_is_special = e.label.first.kind() != DynkinKind::A;
  const DynkinDiagram& G = first_is_special ? e.label.first : *e.label.second;
  const int level = first_is_special ? m - 2 : m - 1;
  const auto decision = is_type_I(su2_invariant(G, level));
  std::ostringstream os;
  if (first_is_special)
    os << "sum_{q=1}^{" << m << "} {";
  else
    os << "sum_{p=1}^{" << m - 1 << "} {";
  bool first_block = true;
  for (const auto& block : decision.blocks) {
    if (!first_block) os << " + ";
    first_block = false;
    os << "|";
    bool first_term = true;
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (int r = 0; r < block[a]; ++r) {
        if (!first_term) os << "+";
        first_term = false;
        if (first_is_special)
          os << "chi_(" << a + 1 << ",q)";
        else
          os << "chi_(p," << a + 1 << ")";
      }
    }
    os << "|^2";
  }
  os << "}/2";
  return os.str();
}

Table expansion_table(int max_m) {
  auto families = type_one_families();
  families[0].formulas = {"sum_{p,q} |chi_(p,q)|^2/2"};
  families[1].formulas = {"sum_{q odd} |chi_(p,q)+chi_(p,4n+2-q)|^2/2"};
  families[2].formulas = {"sum_{p odd} |chi_(p,q)+chi_(4n+2-p,q)|^2/2"};
  const Sorted sorted = sort_entries(families, true, max_m);
  Table t;
  t.header = {"Label", "sum Z_{(p,q),(p',q')} chi_(p,q) conj(chi_(p',q'))"};
  for (const std::size_t f : sorted.families_seen) t.rows.push_back({families[f].label_text, families[f].formulas[0]});
  for (const auto& e : sorted.exceptional) t.rows.push_back({pair_text(e.label), expansion(e)});
  return t;
}

Table su2_table(int max_k) {
  Table t;
  t.header = {"level k", "Dynkin diagram", "Description"};
  bool seen_a = false;
  std::optional<double> d_index;
  std::vector<ClassificationEntry> exceptional;
  for (int k = 1; k <= max_k; ++k) {
    for (const auto& e : classify_su2(k)) {
      const DynkinDiagram& G = e.label.first;
      if (G == D::A(k + 1)) {
        seen_a = true;
      } else if (G.kind() == DynkinKind::D && k % 4 == 0 && G.rank() == k / 2 + 2) {
        if (d_index && std::abs(*d_index - e.index) > 1e-9)
          throw ClassificationError("simple current extensions of SU(2) have differing indices");
        d_index = e.index;
      } else {
        exceptional.push_back(e);
      }
    }
  }
  if (seen_a) t.rows.push_back({"n-1, (n>=1)", "A_n", "SU(2)_k itself"});
  if (d_index) {
    std::ostringstream os;
    os << "Simple current extension of index " << std::llround(*d_index);
    t.rows.push_back({"4n-4, (n>=2)", "D_{2n}", os.str()});
  }
  static const std::map<std::string, std::string> targets = {{"E6", "SO(5)_1"}, {"E8", "(G_2)_1"}};
  for (const auto& e : exceptional) {
    const int k = e.algebra.level;
    const auto it = targets.find(e.label.first.name());
    const std::string target = it != targets.end() ? it->second : "?";
    t.rows.push_back({std::to_string(k), sub(e.label.first),
                      "Conformal inclusion SU(2)_{" + std::to_string(k) + "} in " + target});
  }
  return t;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"vir-mod-I", "min-I", "min-II", "su2-ext"};
  return ids;
}

Table build(const std::string& which, int max_m) {
  if (max_m < 3) throw DomainError("tables need max m >= 3");
  if (which == "min-I") return counts_table(true, max_m);
  if (which == "min-II") return counts_table(false, max_m);
  if (which == "vir-mod-I") return expansion_table(max_m);
  if (which == "su2-ext") return su2_table(max_m + 2);
  throw DomainError("unknown table '" + which + "' (expected vir-mod-I, min-I, min-II or su2-ext)");
}

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  if (format == Format::csv) {
    const auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
      os << "\n";
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
    return os.str();
  }
  const auto line = [&os](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) {
      os << " ";
      for (char ch : c) os << (ch == '|' ? "\\|" : std::string(1, ch));
      os << " |";
    }
    os << "\n";
  };
  line(table.header);
  os << "|";
  for (std::size_t i = 0; i < table.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : table.rows) line(r);
  return os.str();
}

}  // namespace mmk::tables

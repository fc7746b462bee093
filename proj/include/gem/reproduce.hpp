#ifndef GEM_REPRODUCE_HPP
#define GEM_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace gem {

struct ReproductionRow {
  std::string theorem;
  std::string item;     // family + parameters + what is checked
  int vertices = 0;
  std::string claimed;
  std::string computed;
  bool pass = false;
};

// Builds the graphs behind one of the claimed-invariant tables and compares
// computed invariants against the claimed values. theorem is "1.1".."1.4";
// d/q/h restrict the parameter sweep (1.1: d in 3..6, 1.2: q in 2..5,
// 1.4: h in 1..2).
std::vector<ReproductionRow> reproduce(const std::string& theorem, std::optional<int> d = {},
                                       std::optional<int> q = {}, std::optional<int> h = {});

std::string format_rows_table(const std::vector<ReproductionRow>& rows);
std::string format_rows_json(const std::vector<ReproductionRow>& rows);

}  // namespace gem

#endif

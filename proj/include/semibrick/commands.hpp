#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semibrick/io.hpp"
#include "semibrick/tame.hpp"

namespace semibrick {

struct CommandOptions {
  bool assume_brick = false;
  std::size_t budget = kDefaultDimensionBudget;
  std::size_t levels = 1;
  std::optional<std::uint64_t> seed;  // randomized Ext bases for universal/tower
};

// A computed report: the JSON payload of a "report" document and its
// plain-text rendering.
struct Report {
  io::Json payload;
  std::string text;
};

Report cmd_hom(const Rep& left, const Rep& right);
Report cmd_ext(const Rep& left, const Rep& right);
Report cmd_euler(const Rep& left, const Rep& right);
Report cmd_defect(const Rep& m);
Report cmd_brick(const Rep& m);
Report cmd_semibrick(const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_socle(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_filtration(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_membership(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_universal(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_tower(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_endtower(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_uniserial(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts);
Report cmd_preproj(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts);
// Five (1,1) modules X_0 .. X_4 on K_r: brick status, Hom and Ext tables.
Report cmd_demo_kronecker(std::size_t r, const Field& field);

}  // namespace semibrick

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace rqte {

/// Column-labelled results table. Doubles are printed with 17 significant
/// digits so CSV output round-trips bit-for-bit.
struct Table {
  using Cell = std::variant<std::int64_t, double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_double(double v);  // %.17g
std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

}  // namespace rqte

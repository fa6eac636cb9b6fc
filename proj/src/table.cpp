#include "hecke/table.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace hecke {

namespace {

constexpr std::string_view kKeys[] = {"g",           "N",           "p",
                                      "c_g",         "gsp_order",   "signed_product",
                                      "sigma_count", "rep_sum_bound", "total"};
constexpr std::size_t kColumns = std::size(kKeys);

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

Integer parse_big(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed integer cell '" + text + "'");
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Range Range::parse(std::string_view text) {
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(text.substr(0, dots), text);
    r.hi = parse_int(text.substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

SweepResult build_sweep(const Range& g, const Range& N, const Range& p, unsigned jobs) {
  std::vector<Parameters> cells;
  SweepResult result;
  for (auto gi = g.lo; gi <= g.hi; ++gi) {
    for (auto ni = N.lo; ni <= N.hi; ++ni) {
      for (auto pi = p.lo; pi <= p.hi; ++pi) {
        try {
          cells.emplace_back(gi, ni, pi);
        } catch (const HypothesisError&) {
          ++result.skipped;
        }
      }
    }
  }

  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::optional<BoundBreakdown>> rows(cells.size());
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < cells.size(); i += jobs) rows[i] = hecke_bound(cells[i]);
  };
  std::vector<std::future<void>> pending;
  for (unsigned w = 1; w < jobs; ++w) pending.push_back(std::async(std::launch::async, work, w));
  work(0);
  for (auto& f : pending) f.get();

  result.table.rows.reserve(rows.size());
  for (auto& row : rows) result.table.rows.push_back(std::move(*row));
  return result;
}

std::vector<std::string> breakdown_cells(const BoundBreakdown& row) {
  return {std::to_string(row.params.g()),
          std::to_string(row.params.N()),
          std::to_string(row.params.p()),
          row.mass_constant.to_string(),
          to_decimal(row.gsp_order),
          to_decimal(row.signed_product),
          to_decimal(row.sigma_count),
          to_decimal(row.rep_sum_bound),
          to_decimal(row.total)};
}

BoundBreakdown breakdown_from_cells(const std::vector<std::string>& cells) {
  if (cells.size() != kColumns) {
    throw std::invalid_argument("expected " + std::to_string(kColumns) + " cells, got " +
                                std::to_string(cells.size()));
  }
  BoundBreakdown row{
      .params = Parameters(parse_int(cells[0], cells[0]), parse_int(cells[1], cells[1]),
                           parse_int(cells[2], cells[2])),
      .mass_constant = ExactRational::parse(cells[3]),
      .gsp_order = parse_big(cells[4]),
      .signed_product = parse_big(cells[5]),
      .sigma_count = parse_big(cells[6]),
      .rep_sum_bound = parse_big(cells[7]),
      .total = parse_big(cells[8]),
  };
  if (row.total != row.sigma_count * row.rep_sum_bound) {
    throw std::invalid_argument("row violates total = sigma_count * rep_sum_bound");
  }
  if (!(ExactRational(row.sigma_count) ==
        row.mass_constant * ExactRational(row.gsp_order) * ExactRational(row.signed_product))) {
    throw std::invalid_argument("row violates sigma_count = c_g * gsp_order * signed_product");
  }
  return row;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << kCsvHeader << '\n';
  for (const auto& row : table.rows) {
    const auto cells = breakdown_cells(row);
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

SweepTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing or wrong CSV header");
  }
  SweepTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    table.rows.push_back(breakdown_from_cells(split_csv_line(line)));
  }
  return table;
}

std::string breakdown_json(const BoundBreakdown& row, int indent) {
  nlohmann::ordered_json obj;
  const auto cells = breakdown_cells(row);
  for (std::size_t i = 0; i < kColumns; ++i) obj[std::string(kKeys[i])] = cells[i];
  return obj.dump(indent);
}

void write_jsonl(std::ostream& out, const SweepTable& table) {
  for (const auto& row : table.rows) out << breakdown_json(row, -1) << '\n';
}

SweepTable read_jsonl(std::istream& in) {
  SweepTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto obj = nlohmann::json::parse(line);
    std::vector<std::string> cells;
    for (auto key : kKeys) cells.push_back(obj.at(std::string(key)).get<std::string>());
    table.rows.push_back(breakdown_from_cells(cells));
  }
  return table;
}

}  // namespace hecke

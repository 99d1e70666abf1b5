#include "conway/design.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace conway {
namespace {

std::string PairString(Point a, Point b) {
  return "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
}

std::size_t Intersection(const Line& x, const Line& y) {
  std::size_t common = 0;
  for (Point p : x) common += std::count(y.begin(), y.end(), p);
  return common;
}

// 1-based listings; converted to 0-based on construction.
constexpr std::array<std::array<int, 4>, 18> kNinePointLines{{
    {1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 9}, {1, 3, 6, 7},
    {1, 4, 5, 8}, {1, 4, 7, 9}, {1, 6, 8, 9}, {2, 3, 5, 7}, {2, 3, 8, 9},
    {2, 4, 5, 9}, {2, 4, 6, 8}, {2, 6, 7, 9}, {3, 4, 6, 9}, {3, 4, 7, 8},
    {3, 5, 6, 8}, {4, 5, 6, 7}, {5, 7, 8, 9},
}};

constexpr std::array<std::array<int, 4>, 30> kTenPointLines{{
    {5, 7, 8, 9},  {4, 6, 8, 9},  {4, 5, 6, 7},  {3, 6, 7, 9},  {3, 4, 5, 8},
    {2, 6, 7, 8},  {2, 4, 5, 9},  {2, 3, 8, 9},  {2, 3, 5, 6},  {2, 3, 4, 7},
    {1, 5, 6, 8},  {1, 4, 7, 9},  {1, 3, 7, 8},  {1, 3, 5, 9},  {1, 3, 4, 6},
    {1, 2, 6, 9},  {1, 2, 5, 7},  {1, 2, 4, 8},  {10, 5, 6, 9}, {10, 4, 7, 8},
    {10, 3, 6, 8}, {10, 3, 5, 7}, {10, 3, 4, 9}, {10, 2, 7, 9}, {10, 2, 5, 8},
    {10, 2, 4, 6}, {10, 1, 8, 9}, {10, 1, 6, 7}, {10, 1, 4, 5}, {10, 1, 2, 3},
}};

template <std::size_t N>
Design FromOneBased(std::size_t n, std::size_t lambda,
                    const std::array<std::array<int, 4>, N>& listing) {
  std::vector<Line> lines;
  lines.reserve(N);
  for (const auto& row : listing) {
    Line line;
    for (std::size_t i = 0; i < 4; ++i) line[i] = static_cast<Point>(row[i] - 1);
    lines.push_back(line);
  }
  return Design(n, lambda, std::move(lines));
}

}  // namespace

Design::Design(std::size_t n, std::size_t lambda, std::vector<Line> lines)
    : n_(n), lambda_(lambda), lines_(std::move(lines)), pair_index_(n * n) {
  if (n < 4) throw Error("a design needs at least 4 points");
  if (lambda == 0) throw Error("lambda must be positive");
  for (auto& line : lines_) {
    std::sort(line.begin(), line.end());
    if (line[3] >= n) {
      throw Error("point " + std::to_string(line[3] + 1) + " out of range [1, " +
                  std::to_string(n) + "]");
    }
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw Error("line " + FormatLine(line) + " repeats a point");
    }
  }
  std::sort(lines_.begin(), lines_.end());
  auto dup = std::adjacent_find(lines_.begin(), lines_.end());
  if (dup != lines_.end()) throw Error("duplicate line " + FormatLine(*dup));

  for (std::size_t idx = 0; idx < lines_.size(); ++idx) {
    const Line& line = lines_[idx];
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        pair_index_[line[i] * n_ + line[j]].push_back(idx);
      }
    }
  }
}

std::size_t Design::PairSlot(Point a, Point b) const {
  if (a >= n_ || b >= n_) throw Error("point out of range");
  if (a == b) throw Error("pair needs two distinct points");
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(a) * n_ + b;
}

std::span<const std::size_t> Design::LineIndicesThrough(Point a, Point b) const {
  return pair_index_[PairSlot(a, b)];
}

std::vector<Line> Design::LinesThroughPair(Point a, Point b) const {
  std::vector<Line> out;
  for (std::size_t idx : LineIndicesThrough(a, b)) out.push_back(lines_[idx]);
  return out;
}

bool Design::IsCollinear(Point a, Point b) const {
  if (a == b) return false;
  return !pair_index_[PairSlot(a, b)].empty();
}

std::vector<Point> Design::Overline(Point a, Point b) const {
  auto through = LineIndicesThrough(a, b);
  if (through.empty()) {
    throw Error("points " + PairString(a, b) + " are not collinear");
  }
  std::vector<Point> points;
  for (std::size_t idx : through) {
    points.insert(points.end(), lines_[idx].begin(), lines_[idx].end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::optional<std::size_t> Design::ExpectedLineCount(std::size_t n,
                                                     std::size_t lambda) {
  if (n < 1) return std::nullopt;
  std::size_t numerator = lambda * n * (n - 1);
  if (numerator % 12 != 0) return std::nullopt;
  return numerator / 12;
}

ValidationReport Validate(const Design& d) {
  ValidationReport report;
  const std::size_t n = d.n();
  std::size_t lo = SIZE_MAX, hi = 0;
  std::optional<std::string> coverage_witness;
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      std::size_t count = d.LineIndicesThrough(a, b).size();
      lo = std::min(lo, count);
      hi = std::max(hi, count);
      if (count != d.lambda() && !coverage_witness) {
        coverage_witness = "pair " + PairString(a, b) + " lies on " +
                           std::to_string(count) + " lines, expected " +
                           std::to_string(d.lambda());
      }
    }
  }
  report.observed_lambda_range = {lo, hi};
  report.is_2_design = !coverage_witness.has_value();

  const auto& lines = d.lines();
  report.is_simple =
      std::adjacent_find(lines.begin(), lines.end()) == lines.end();
  std::optional<std::string> intersection_witness;
  for (std::size_t i = 0; i < lines.size() && !intersection_witness; ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (Intersection(lines[i], lines[j]) > 2) {
        intersection_witness = "lines " + FormatLine(lines[i]) + " and " +
                               FormatLine(lines[j]) + " share more than 2 points";
        break;
      }
    }
  }
  report.is_supersimple = report.is_simple && !intersection_witness;
  report.first_violation =
      coverage_witness ? coverage_witness : intersection_witness;
  return report;
}

Design ParseDesign(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_number = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Line> lines;
  std::set<Line> seen;

  while (std::getline(in, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<long> values;
    std::string token;
    while (fields >> token) {
      long value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_number, "expected an integer, got '" + token + "'");
      }
      values.push_back(value);
    }
    if (values.empty()) continue;

    if (!header) {
      if (values.size() != 2 || values[0] < 4 || values[1] < 1) {
        throw ParseError(line_number, "header must be 'n lambda' with n >= 4, lambda >= 1");
      }
      if (values[0] > 1024) throw ParseError(line_number, "n too large");
      header = {static_cast<std::size_t>(values[0]),
                static_cast<std::size_t>(values[1])};
      continue;
    }
    if (values.size() != 4) {
      throw ParseError(line_number, "a line needs exactly 4 points, got " +
                                        std::to_string(values.size()));
    }
    Line line;
    for (std::size_t i = 0; i < 4; ++i) {
      if (values[i] < 1 || static_cast<std::size_t>(values[i]) > header->first) {
        throw ParseError(line_number, "point " + std::to_string(values[i]) +
                                          " out of range [1, " +
                                          std::to_string(header->first) + "]");
      }
      line[i] = static_cast<Point>(values[i] - 1);
    }
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw ParseError(line_number, "line repeats a point");
    }
    if (!seen.insert(line).second) {
      throw ParseError(line_number, "duplicate line " + FormatLine(line));
    }
    lines.push_back(line);
  }
  if (!header) throw ParseError(line_number, "missing 'n lambda' header");
  auto expected = Design::ExpectedLineCount(header->first, header->second);
  if (!expected) {
    throw ParseError(line_number, "lambda*n*(n-1) is not divisible by 12");
  }
  if (lines.size() != *expected) {
    throw ParseError(line_number, "expected " + std::to_string(*expected) +
                                      " lines, got " + std::to_string(lines.size()));
  }
  return Design(header->first, header->second, std::move(lines));
}

std::string SerializeDesign(const Design& d) {
  std::string out = std::to_string(d.n()) + " " + std::to_string(d.lambda()) + "\n";
  for (const Line& line : d.lines()) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) out += ' ';
      out += std::to_string(line[i] + 1);
    }
    out += '\n';
  }
  return out;
}

Design LoadDesign(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open design file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return ParseDesign(buffer.str());
}

Design Relabel(const Design& d, const Permutation& g) {
  if (g.degree() != d.n()) {
    throw Error("relabeling has degree " + std::to_string(g.degree()) +
                ", design has " + std::to_string(d.n()) + " points");
  }
  std::vector<Line> lines;
  lines.reserve(d.lines().size());
  for (const Line& line : d.lines()) {
    Line image;
    for (std::size_t i = 0; i < 4; ++i) image[i] = g[line[i]];
    lines.push_back(image);
  }
  return Design(d.n(), d.lambda(), std::move(lines));
}

Design BooleanQuadrupleSystem(std::size_t k, std::size_t size_cap) {
  if (k < 2) throw Error("Boolean quadruple system needs k >= 2");
  if (k >= 16 || (std::size_t{1} << k) > size_cap) {
    throw Error("2^" + std::to_string(k) + " points exceeds the size cap of " +
                std::to_string(size_cap));
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<Line> lines;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::size_t d = a ^ b ^ c;
        if (d > c) {
          lines.push_back({static_cast<Point>(a), static_cast<Point>(b),
                           static_cast<Point>(c), static_cast<Point>(d)});
        }
      }
    }
  }
  return Design(n, (n / 2) - 1, std::move(lines));
}

Design ProjectivePlane3() {
  // Normalized nonzero vectors of GF(3)^3: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      for (int z = 0; z < 3; ++z) {
        std::array<int, 3> v{x, y, z};
        auto lead = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
        if (lead != v.end() && *lead == 1) points.push_back(v);
      }
    }
  }
  // Each line is the set of points orthogonal to some point.
  std::vector<Line> lines;
  for (const auto& normal : points) {
    Line line{};
    std::size_t filled = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& v = points[i];
      if ((normal[0] * v[0] + normal[1] * v[1] + normal[2] * v[2]) % 3 == 0) {
        line[filled++] = static_cast<Point>(i);
      }
    }
    lines.push_back(line);
  }
  return Design(points.size(), 1, std::move(lines));
}

Design Builtin(std::string_view name) {
  if (name == "bqs8") return BooleanQuadrupleSystem(3);
  if (name == "bqs16") return BooleanQuadrupleSystem(4);
  if (name == "pg3") return ProjectivePlane3();
  if (name == "paper9") return FromOneBased(9, 3, kNinePointLines);
  if (name == "paper10") return FromOneBased(10, 4, kTenPointLines);
  throw Error("unknown builtin design '" + std::string(name) + "'");
}

std::vector<std::string> BuiltinNames() {
  return {"bqs8", "bqs16", "pg3", "paper9", "paper10"};
}

std::string FormatLine(const Line& line) {
  return "(" + std::to_string(line[0] + 1) + "," + std::to_string(line[1] + 1) +
         "," + std::to_string(line[2] + 1) + "," + std::to_string(line[3] + 1) + ")";
}

}  // namespace conway

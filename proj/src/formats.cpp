#include "tomo/formats.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>

#include "tomo/errors.hpp"

namespace tomo::io {

namespace {

std::string num(long long v) { return std::to_string(v); }

// Integers print bare, everything else with six decimals.
std::string num(double v) {
  if (std::isfinite(v) && v == std::rint(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::optional<int> parse_coordinate(std::string_view token) {
  if (token.empty() || token.size() > 7) return std::nullopt;
  if (token[0] == '0') return std::nullopt;  // no leading zeros
  long long value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value < 1 || value > kMaxCoordinate) return std::nullopt;
  return static_cast<int>(value);
}

std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t space = line.find(' ', start);
    if (space == std::string_view::npos) {
      tokens.push_back(line.substr(start));
      break;
    }
    tokens.push_back(line.substr(start, space - start));
    start = space + 1;
  }
  return tokens;
}

std::vector<std::string> split_lines(const std::string& text, int& last_line) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  last_line = static_cast<int>(lines.size());
  return lines;
}

}  // namespace

InstancePair parse_pair(const std::string& text) {
  int n_lines = 0;
  const std::vector<std::string> lines = split_lines(text, n_lines);
  if (lines.empty()) {
    throw ParseError(1, "expected header 'tomo-pair 1'");
  }
  if (lines[0] != kPairHeader) {
    throw ParseError(1, "expected header 'tomo-pair 1'");
  }
  std::vector<LatticePoint> f1, f2;
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string& line = lines[i];
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) throw ParseError(lineno, "blank line");
    if (line.find('\r') != std::string::npos) {
      throw ParseError(lineno, "carriage return not allowed");
    }
    const auto tokens = split_single_spaces(line);
    if (tokens.size() != 3) {
      throw ParseError(lineno, "expected 'F1 <row> <col>' or 'F2 <row> <col>'");
    }
    int which = 0;
    if (tokens[0] == "F1") which = 1;
    else if (tokens[0] == "F2") which = 2;
    else throw ParseError(lineno, "point set must be F1 or F2");
    const auto row = parse_coordinate(tokens[1]);
    const auto col = parse_coordinate(tokens[2]);
    if (!row || !col) {
      throw ParseError(lineno, "coordinates must be integers in 1..1000000");
    }
    if (!seen.insert({which, *row, *col}).second) {
      throw ParseError(lineno, "duplicate point line");
    }
    (which == 1 ? f1 : f2).push_back({*row, *col});
  }
  return InstancePair(PointSet(std::move(f1)), PointSet(std::move(f2)));
}

std::string render_pair(const PointSet& original, const PointSet& reconstruction) {
  std::string out = std::string(kPairHeader) + "\n";
  for (const auto& p : original) {
    out += "F1 " + num(p.row) + " " + num(p.col) + "\n";
  }
  for (const auto& p : reconstruction) {
    out += "F2 " + num(p.row) + " " + num(p.col) + "\n";
  }
  return out;
}

std::string render_certificate(const InstancePair& pair,
                               const std::vector<Staircase>& staircases) {
  const Metrics& m = pair.metrics();
  std::string out = std::string(kCertHeader) + "\n";
  out += "alpha " + num(m.alpha) + " p " + num(m.overlap) + " u " +
         num(m.half_diff()) + "\n";
  int k = 1;
  for (const auto& s : staircases) {
    out += "S " + num(k++) + ":";
    bool first = true;
    for (const auto& lp : s.points) {
      out += first ? " " : " -> ";
      first = false;
      out += "(" + num(lp.pt.row) + "," + num(lp.pt.col) + ")/";
      out += lp.side == DiffSide::kOriginalOnly ? "1" : "2";
    }
    out += "\n";
  }
  return out;
}

namespace {

LabeledPoint parse_cert_point(std::string_view token, int lineno) {
  // "(<row>,<col>)/<1|2>"
  const auto bad = [&]() -> ParseError {
    return ParseError(lineno, "expected point of the form (r,c)/1 or (r,c)/2");
  };
  if (token.size() < 8 || token.front() != '(') throw bad();
  const std::size_t comma = token.find(',');
  const std::size_t close = token.find(')');
  if (comma == std::string_view::npos || close == std::string_view::npos ||
      comma > close || close + 2 >= token.size() || token[close + 1] != '/') {
    throw bad();
  }
  const auto row = parse_coordinate(token.substr(1, comma - 1));
  const auto col = parse_coordinate(token.substr(comma + 1, close - comma - 1));
  const std::string_view side = token.substr(close + 2);
  if (!row || !col || (side != "1" && side != "2")) throw bad();
  return LabeledPoint{{*row, *col}, side == "1"
                                        ? DiffSide::kOriginalOnly
                                        : DiffSide::kReconstructionOnly};
}

std::optional<int> parse_small_int(std::string_view token) {
  if (token.empty() || token.size() > 9) return std::nullopt;
  if (token.size() > 1 && token[0] == '0') return std::nullopt;
  long long value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return static_cast<int>(value);
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  int n_lines = 0;
  const std::vector<std::string> lines = split_lines(text, n_lines);
  if (lines.empty() || lines[0] != kCertHeader) {
    throw ParseError(1, "expected header 'tomo-cert 1'");
  }
  if (lines.size() < 2) {
    throw ParseError(2, "expected metrics line 'alpha <a> p <p> u <u>'");
  }
  Certificate cert;
  {
    const auto tokens = split_single_spaces(lines[1]);
    std::optional<int> a, p, u;
    if (tokens.size() == 6 && tokens[0] == "alpha" && tokens[2] == "p" &&
        tokens[4] == "u") {
      a = parse_small_int(tokens[1]);
      p = parse_small_int(tokens[3]);
      u = parse_small_int(tokens[5]);
    }
    if (!a || !p || !u) {
      throw ParseError(2, "expected metrics line 'alpha <a> p <p> u <u>'");
    }
    cert.alpha = *a;
    cert.overlap = *p;
    cert.half_diff = *u;
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string& line = lines[i];
    if (line.empty()) throw ParseError(lineno, "blank line");
    const int expected_index = static_cast<int>(cert.staircases.size()) + 1;
    const std::string prefix = "S " + num(expected_index) + ": ";
    if (line.rfind(prefix, 0) != 0) {
      throw ParseError(lineno, "expected staircase line 'S " +
                                   num(expected_index) + ": ...'");
    }
    Staircase s;
    std::string_view rest = std::string_view(line).substr(prefix.size());
    while (!rest.empty()) {
      const std::size_t arrow = rest.find(" -> ");
      const std::string_view token =
          arrow == std::string_view::npos ? rest : rest.substr(0, arrow);
      s.points.push_back(parse_cert_point(token, lineno));
      if (arrow == std::string_view::npos) break;
      rest = rest.substr(arrow + 4);
    }
    if (s.points.empty()) throw ParseError(lineno, "staircase has no points");
    cert.staircases.push_back(std::move(s));
  }
  return cert;
}

void verify_certificate(const InstancePair& pair, const Certificate& cert) {
  const Metrics& m = pair.metrics();
  if (cert.alpha != m.alpha || cert.overlap != m.overlap ||
      2 * cert.half_diff != m.sym_diff) {
    throw std::invalid_argument("certificate metrics do not match the pair");
  }
  validate_decomposition(cert.staircases, pair);
}

std::string render_metrics_block(const Metrics& m, bool unique) {
  std::string u = m.sym_diff % 2 == 0 ? num(m.sym_diff / 2)
                                      : num(m.sym_diff / 2.0);
  std::string out;
  out += "alpha " + num(m.alpha) + " p " + num(m.overlap) + " u " + u + "\n";
  out += "a " + num(m.occupied_rows) + " b " + num(m.occupied_cols) +
         " size1 " + num(m.size1) + " size2 " + num(m.size2) + "\n";
  out += std::string("unique ") + (unique ? "yes" : "no") + "\n";
  return out;
}

std::string render_bound_report(const bounds::BoundReport& report) {
  std::string out;
  for (const auto& e : report.entries) {
    char name[32];
    std::snprintf(name, sizeof(name), "%-22s", e.name);
    out += "bound ";
    out += name;
    out += std::string(e.quantity) + " " + num(e.measured);
    out += e.direction == bounds::Direction::kUpper ? " <= " : " >= ";
    out += num(e.limit);
    out += e.holds ? " OK" : " VIOLATED";
    out += " slack " + num(e.slack);
    if (e.advisory()) out += std::string(" (") + e.note + ")";
    out += "\n";
  }
  return out;
}

std::string render_ascii(const PointSet& original, const PointSet& reconstruction) {
  const int rows = std::max(max_row(original), max_row(reconstruction));
  const int cols = std::max(max_col(original), max_col(reconstruction));
  if (rows == 0) return "";
  if (static_cast<long long>(rows) * cols > 4000000LL) {
    throw std::invalid_argument("render grid larger than 4e6 cells");
  }
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(cols), '.'));
  for (const auto& p : original) {
    grid[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)] = 'o';
  }
  for (const auto& p : reconstruction) {
    char& c = grid[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)];
    c = c == 'o' ? '@' : 'x';
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(rows) * (static_cast<std::size_t>(cols) + 1));
  for (const auto& line : grid) {
    out += line;
    out += "\n";
  }
  return out;
}

std::string render_pbm(const PointSet& s, int rows, int cols) {
  if (static_cast<long long>(rows) * cols > 4000000LL) {
    throw std::invalid_argument("render grid larger than 4e6 cells");
  }
  std::string out = "P1\n" + num(cols) + " " + num(rows) + "\n";
  std::vector<std::vector<char>> grid(
      static_cast<std::size_t>(rows),
      std::vector<char>(static_cast<std::size_t>(cols), 0));
  for (const auto& p : s) {
    if (p.row <= rows && p.col <= cols) {
      grid[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)] = 1;
    }
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out += grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ? '1' : '0';
      out += c + 1 < cols ? ' ' : '\n';
    }
  }
  return out;
}

namespace {

const char* mode_name(oracle::Mode mode) {
  switch (mode) {
    case oracle::Mode::kDisjoint:
      return "disjoint";
    case oracle::Mode::kGeneral:
      return "general";
    case oracle::Mode::kUnequal:
      return "unequal";
  }
  return "?";
}

}  // namespace

std::string render_summary(const oracle::VerificationSummary& s) {
  std::string out;
  out += std::string("mode ") + mode_name(s.mode) + "\n";
  out += "max-cells " + num(s.max_cells) + "\n";
  out += "box " + num(s.box.rows) + "x" + num(s.box.cols) + "\n";
  out += "f1-sets " + num(s.f1_count) + "\n";
  out += "pairs " + num(s.pairs) + "\n";
  out += "parity-checks " + num(s.parity_checks) + "\n";
  out += "staircase-checks " + num(s.staircase_checks) + "\n";
  out += "bound-checks " + num(s.bound_checks) + "\n";
  out += "equalize-checks " + num(s.equalize_checks) + "\n";
  out += "violations " + num(s.violations) + "\n";
  if (s.first_violation) {
    out += "first-violation f1 " + num(s.first_violation->f1_rank) + " f2 " +
           num(s.first_violation->f2_rank) + " check " +
           s.first_violation->check + "\n";
  }
  return out;
}

}  // namespace tomo::io

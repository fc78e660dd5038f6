#include "bzip/sample.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "bzip/errors.hpp"

namespace bzip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_count(std::string_view field, std::int64_t& out) {
  field = trim(field);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() && out >= 0;
}

}  // namespace

PairCounts PairCounts::from(const CountSample& sample) {
  PairCounts pc;
  pc.n = static_cast<std::int64_t>(sample.size());
  std::map<CountPair, std::int64_t> tally;
  for (const auto& p : sample) {
    pc.max_x1 = std::max(pc.max_x1, p.x1);
    pc.max_x2 = std::max(pc.max_x2, p.x2);
    if (p.x1 == 0 && p.x2 == 0) {
      ++pc.m0;
    } else {
      ++tally[p];
    }
  }
  pc.nonzero.reserve(tally.size());
  for (const auto& [pair, count] : tally) pc.nonzero.push_back({pair, count});
  return pc;
}

SampleMoments SampleMoments::from(const CountSample& sample) {
  SampleMoments m;
  m.n = static_cast<std::int64_t>(sample.size());
  if (m.n == 0) throw NoInformation("empty sample");
  const double n = static_cast<double>(m.n);
  double s1 = 0.0, s2 = 0.0, q1 = 0.0, q2 = 0.0;
  for (const auto& p : sample) {
    const auto a = static_cast<double>(p.x1);
    const auto b = static_cast<double>(p.x2);
    s1 += a;
    s2 += b;
    q1 += a * a;
    q2 += b * b;
  }
  m.mean1 = s1 / n;
  m.mean2 = s2 / n;
  m.second1 = q1 / n;
  m.second2 = q2 / n;
  // Centred cross products in a second pass.
  double c11 = 0.0, c22 = 0.0, c12 = 0.0;
  for (const auto& p : sample) {
    const double d1 = static_cast<double>(p.x1) - m.mean1;
    const double d2 = static_cast<double>(p.x2) - m.mean2;
    c11 += d1 * d1;
    c22 += d2 * d2;
    c12 += d1 * d2;
  }
  if (m.n > 1) {
    m.var1 = c11 / (n - 1.0);
    m.var2 = c22 / (n - 1.0);
    m.cov12 = c12 / (n - 1.0);
  }
  return m;
}

bool has_degenerate_margin(const CountSample& sample) {
  bool wide1 = false, wide2 = false;
  for (const auto& p : sample) {
    wide1 = wide1 || p.x1 >= 2;
    wide2 = wide2 || p.x2 >= 2;
  }
  return !(wide1 && wide2);
}

Grid contingency_table(const CountSample& sample) {
  std::int64_t r = 0, c = 0;
  for (const auto& p : sample) {
    r = std::max(r, p.x1);
    c = std::max(c, p.x2);
  }
  Grid t(sample.empty() ? 0 : r + 1, sample.empty() ? 0 : c + 1);
  for (const auto& p : sample) t(p.x1, p.x2) += 1.0;
  return t;
}

CountSample expand_table(const std::vector<std::vector<std::int64_t>>& counts) {
  CountSample out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      for (std::int64_t k = 0; k < counts[i][j]; ++k) {
        out.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
      }
    }
  }
  return out;
}

CountSample read_csv(std::istream& in) {
  CountSample out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      const auto comma = view.find(',');
      if (comma == std::string_view::npos || trim(view.substr(0, comma)) != "x1" ||
          trim(view.substr(comma + 1)) != "x2") {
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected header 'x1,x2'");
      }
      continue;
    }
    const auto comma = view.find(',');
    CountPair p;
    if (comma == std::string_view::npos || !parse_count(view.substr(0, comma), p.x1) ||
        !parse_count(view.substr(comma + 1), p.x2)) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected two non-negative integers");
    }
    out.push_back(p);
  }
  if (!header_seen) throw std::runtime_error("empty input: expected header 'x1,x2'");
  if (out.empty()) throw std::runtime_error("no data rows after header");
  return out;
}

CountSample read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_csv(in);
}

void write_csv(std::ostream& out, const CountSample& sample) {
  out << "x1,x2\n";
  for (const auto& p : sample) out << p.x1 << ',' << p.x2 << '\n';
}

}  // namespace bzip

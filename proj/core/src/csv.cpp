#include "atxxz/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "atxxz/errors.hpp"

namespace atxxz {

namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string& field, std::size_t line) {
  if (field == "nan") return std::nan("");
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || *end != '\0') {
    throw ArgumentError("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string quote_if_needed(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : result.rows) {
    os << r.model << ',' << r.chain_spins << ',' << number(r.delta) << ',' << number(r.beta) << ','
       << quote_if_needed(r.block) << ',' << r.quantity << ',' << number(r.value) << ',' << (r.converged ? 1 : 0)
       << '\n';
  }
  return os.str();
}

SweepResult parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw ArgumentError("CSV header mismatch");
  SweepResult out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 8) throw ArgumentError("line " + std::to_string(lineno) + ": expected 8 fields");
    SweepRow r;
    r.model = f[0];
    r.chain_spins = static_cast<int>(parse_number(f[1], lineno));
    r.delta = parse_number(f[2], lineno);
    r.beta = parse_number(f[3], lineno);
    r.block = f[4];
    r.quantity = f[5];
    r.value = parse_number(f[6], lineno);
    if (f[7] != "0" && f[7] != "1") throw ArgumentError("line " + std::to_string(lineno) + ": bad converged flag");
    r.converged = f[7] == "1";
    out.rows.push_back(std::move(r));
  }
  return out;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ArgumentError("cannot open " + tmp.string() + " for writing");
    os << to_csv(result);
    if (!os.flush()) throw ArgumentError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SweepResult read_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ArgumentError("cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace atxxz

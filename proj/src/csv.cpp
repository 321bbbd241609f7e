#include "prab/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "prab/error.hpp"

namespace prab {

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

double parse_number(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw Error(ErrorKind::IoError, "bad number '" + s + "' on line " + std::to_string(line));
  return v;
}

}  // namespace

std::string format_csv(const SolutionField& field) {
  const std::size_t nt = field.t_nodes.size(), nx = field.x_nodes.size();
  if (field.values.size() != nt * nx)
    throw Error(ErrorKind::GridMismatch, "field values do not match its node vectors");
  std::string out = "t,x,u\n";
  out.reserve(out.size() + nt * nx * 64);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nx; ++j) {
      const double v = field.at(i, j);
      if (!std::isfinite(v)) throw Error(ErrorKind::IoError, "refusing to write a non-finite value");
      append_number(out, field.t_nodes[i]);
      out += ',';
      append_number(out, field.x_nodes[j]);
      out += ',';
      append_number(out, v);
      out += '\n';
    }
  }
  return out;
}

void emit_csv(const SolutionField& field, const std::string& path) {
  const std::string text = format_csv(field);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) throw Error(ErrorKind::IoError, "write failed for " + path);
}

SolutionField parse_csv_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "t,x,u")
    throw Error(ErrorKind::IoError, "missing 't,x,u' header");
  std::vector<double> ts, xs, us;
  std::size_t ln = 1;
  while (std::getline(is, line)) {
    ++ln;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw Error(ErrorKind::IoError, "expected three columns on line " + std::to_string(ln));
    ts.push_back(parse_number(line.substr(0, c1), ln));
    xs.push_back(parse_number(line.substr(c1 + 1, c2 - c1 - 1), ln));
    us.push_back(parse_number(line.substr(c2 + 1), ln));
  }
  SolutionField f;
  std::size_t nx = 0;
  while (nx < ts.size() && ts[nx] == ts[0]) ++nx;
  if (nx == 0 || ts.size() % nx != 0) throw Error(ErrorKind::IoError, "rows do not form a t-major grid");
  const std::size_t nt = ts.size() / nx;
  f.x_nodes.assign(xs.begin(), xs.begin() + nx);
  for (std::size_t i = 0; i < nt; ++i) {
    f.t_nodes.push_back(ts[i * nx]);
    for (std::size_t j = 0; j < nx; ++j) {
      const std::size_t k = i * nx + j;
      if (ts[k] != ts[i * nx] || xs[k] != f.x_nodes[j])
        throw Error(ErrorKind::IoError, "rows do not form a t-major grid at line " + std::to_string(k + 2));
    }
  }
  f.values = std::move(us);
  return f;
}

SolutionField parse_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_csv_text(ss.str());
}

}  // namespace prab

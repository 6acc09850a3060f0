#include "mselab/vc_instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mselab/error.hpp"

namespace mselab {

void VcInstance::validate() const {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  if (k < 0 || k > n) {
    throw PreconditionError("cover budget k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} has an endpoint outside [1, " + std::to_string(n) + "]");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw PreconditionError("duplicate edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
    }
  }
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::vector<long long> read_ints(std::string_view line, std::size_t expected, std::size_t lineno) {
  std::istringstream is{std::string(line)};
  std::vector<long long> values;
  long long x = 0;
  while (is >> x) values.push_back(x);
  if (!is.eof()) throw ParseError("expected integers", lineno);
  if (values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " integers, found " +
                         std::to_string(values.size()),
                     lineno);
  }
  return values;
}

}  // namespace

VcInstance parse_vc_instance(std::string_view text) {
  VcInstance vc;
  std::size_t lineno = 0;
  std::size_t declared_m = 0;
  bool header = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? text.size() - start
                                                                         : end - start);
    ++lineno;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (is_blank_or_comment(line)) continue;
    if (!header) {
      const auto v = read_ints(line, 3, lineno);
      if (v[0] < 0 || v[1] < 0 || v[2] < 0) throw ParseError("negative header value", lineno);
      vc.n = static_cast<int>(v[0]);
      declared_m = static_cast<std::size_t>(v[1]);
      vc.k = static_cast<int>(v[2]);
      header = true;
      continue;
    }
    if (vc.edges.size() == declared_m) throw ParseError("more edges than declared", lineno);
    const auto v = read_ints(line, 2, lineno);
    vc.edges.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    try {
      VcInstance partial{vc.n, vc.edges, std::min(vc.k, vc.n)};
      partial.validate();
    } catch (const PreconditionError& ex) {
      throw ParseError(ex.what(), lineno);
    }
  }
  if (!header) throw ParseError("missing header line \"n m k\"", lineno);
  if (vc.edges.size() != declared_m) {
    throw ParseError("declared " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(vc.edges.size()),
                     lineno);
  }
  try {
    vc.validate();
  } catch (const PreconditionError& ex) {
    throw ParseError(ex.what(), 1);
  }
  return vc;
}

std::string format_vc_instance(const VcInstance& vc) {
  std::ostringstream os;
  os << vc.n << ' ' << vc.m() << ' ' << vc.k << '\n';
  for (const auto& [u, v] : vc.edges) os << u << ' ' << v << '\n';
  return os.str();
}

VcInstance pad_to_power_of_two(const VcInstance& vc) {
  VcInstance out = vc;
  int target = 1;
  while (target < vc.n + 1) target *= 2;
  out.n = target - 1;
  return out;
}

bool is_vertex_cover(const VcInstance& vc, const std::vector<int>& cover) {
  for (const auto& [u, v] : vc.edges) {
    if (std::find(cover.begin(), cover.end(), u) == cover.end() &&
        std::find(cover.begin(), cover.end(), v) == cover.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace mselab

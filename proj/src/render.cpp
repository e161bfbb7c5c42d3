#include "detlinks/render.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "detlinks/errors.hpp"
#include "detlinks/presentation.hpp"

namespace detlinks {

using nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  if (s == "json") return Format::json;
  throw InvalidArgument("unknown format '" + s + "' (expected csv, md or json)");
}

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

IntRange parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d{1,6})\s*(?:\.\.\s*(-?\d{1,6})\s*)?$)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw InvalidArgument("malformed range '" + s + "'");
  IntRange r{std::stoi(mt[1]), mt[2].matched ? std::stoi(mt[2]) : std::stoi(mt[1])};
  if (r.hi < r.lo) throw InvalidArgument("empty range '" + s + "'");
  return r;
}

namespace {

std::string matrix_name(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += "---|";
  return out + "\n";
}

std::string joined(const std::vector<BigInt>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
  return out;
}

ordered_json strings(const std::vector<BigInt>& v) {
  ordered_json a = ordered_json::array();
  for (auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string spaced(const Partition& p) {
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out + ")";
}

}  // namespace

std::string render_polar(const std::vector<PolarProfile>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::csv) {
    os << "m,n,r,k,e\n";
    for (auto& p : rows)
      for (int k = 0; k <= p.top(); ++k)
        os << p.m << ',' << p.n << ',' << p.r << ',' << k << ',' << p.values[k] << '\n';
  } else if (f == Format::json) {
    ordered_json a = ordered_json::array();
    for (auto& p : rows)
      a.push_back({{"m", p.m}, {"n", p.n}, {"r", p.r}, {"values", strings(p.values)},
                   {"raw_signs", p.raw_signs}});
    os << a.dump(2) << '\n';
  } else {
    int top = 0;
    for (auto& p : rows) top = std::max(top, p.top());
    std::vector<std::string> head{"matrix", "r"};
    for (int k = 0; k <= top; ++k) head.push_back(std::to_string(k));
    os << md_row(head) << md_rule(head.size());
    for (auto& p : rows) {
      std::vector<std::string> cells{matrix_name(p.m, p.n), std::to_string(p.r)};
      for (int k = 0; k <= top; ++k) cells.push_back(p.at(k).get_str());
      os << md_row(cells);
    }
  }
  return os.str();
}

std::string render_euler(const std::vector<EulerRow>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::csv) {
    os << "m,n,s,i,chi,smooth\n";
    for (auto& r : rows)
      os << r.spec.m << ',' << r.spec.n << ',' << r.spec.s << ',' << r.codim << ',' << r.chi << ','
         << (r.smooth ? 1 : 0) << '\n';
  } else if (f == Format::json) {
    ordered_json a = ordered_json::array();
    for (auto& r : rows)
      a.push_back({{"m", r.spec.m}, {"n", r.spec.n}, {"s", r.spec.s}, {"i", r.codim},
                   {"chi", r.chi.get_str()}, {"smooth", r.smooth}});
    os << a.dump(2) << '\n';
  } else {
    const std::vector<std::string> head{"matrix", "s", "i", "chi", "smooth"};
    os << md_row(head) << md_rule(head.size());
    for (auto& r : rows)
      os << md_row({matrix_name(r.spec.m, r.spec.n), std::to_string(r.spec.s),
                    std::to_string(r.codim), r.chi.get_str(), r.smooth ? "yes" : "no"});
  }
  return os.str();
}

std::string render_hilbert_burch(const std::vector<std::vector<BigInt>>& table, Format f) {
  std::ostringstream os;
  const std::size_t cols = table.empty() ? 0 : table.front().size();
  if (f == Format::csv) {
    os << "d,m,chi\n";
    for (std::size_t d = 0; d < table.size(); ++d)
      for (std::size_t j = 0; j < cols; ++j) os << d << ',' << j + 1 << ',' << table[d][j] << '\n';
  } else if (f == Format::json) {
    ordered_json a = ordered_json::array();
    for (std::size_t d = 0; d < table.size(); ++d)
      a.push_back({{"d", d}, {"chi", strings(table[d])}});
    os << a.dump(2) << '\n';
  } else {
    std::vector<std::string> head{"d \\ m"};
    for (std::size_t j = 0; j < cols; ++j) head.push_back(std::to_string(j + 1));
    os << md_row(head) << md_rule(head.size());
    for (std::size_t d = 0; d < table.size(); ++d) {
      std::vector<std::string> cells{std::to_string(d)};
      for (auto& v : table[d]) cells.push_back(v.get_str());
      os << md_row(cells);
    }
  }
  return os.str();
}

std::string render_betti(const std::vector<LinkProfile>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::csv) {
    os << "m,n,s,i,k,b\n";
    for (auto& p : rows)
      for (std::size_t k = 0; k < p.betti.size(); ++k)
        os << p.spec.m << ',' << p.spec.n << ',' << p.spec.s << ',' << p.codim << ',' << k << ','
           << p.betti[k] << '\n';
  } else if (f == Format::json) {
    ordered_json a = ordered_json::array();
    for (auto& p : rows)
      a.push_back({{"m", p.spec.m}, {"n", p.spec.n}, {"s", p.spec.s}, {"i", p.codim},
                   {"chi", p.chi.get_str()}, {"middle", p.middle}, {"betti", strings(p.betti)},
                   {"torsion", to_string(p.torsion)}});
    os << a.dump(2) << '\n';
  } else {
    const std::vector<std::string> head{"matrix", "s", "i", "chi", "betti", "middle torsion"};
    os << md_row(head) << md_rule(head.size());
    for (auto& p : rows)
      os << md_row({matrix_name(p.spec.m, p.spec.n), std::to_string(p.spec.s),
                    std::to_string(p.codim), p.chi.get_str(), joined(p.betti, ", "),
                    to_string(p.torsion)});
  }
  return os.str();
}

std::string render_real_betti(const std::vector<RealLinkProfile>& rows, Format f) {
  auto cell = [](const std::optional<BigInt>& b, const char* unknown) {
    return b ? b->get_str() : std::string(unknown);
  };
  std::ostringstream os;
  if (f == Format::csv) {
    os << "m,n,s,i,k,b\n";
    for (auto& p : rows)
      for (std::size_t k = 0; k < p.betti.size(); ++k)
        os << p.spec.m << ',' << p.spec.n << ',' << p.spec.s << ',' << p.codim << ',' << k << ','
           << cell(p.betti[k], "") << '\n';
  } else if (f == Format::json) {
    ordered_json a = ordered_json::array();
    for (auto& p : rows) {
      ordered_json b = ordered_json::array();
      for (auto& x : p.betti) b.push_back(x ? ordered_json(x->get_str()) : ordered_json(nullptr));
      a.push_back({{"m", p.spec.m}, {"n", p.spec.n}, {"s", p.spec.s}, {"i", p.codim},
                   {"real_dim", p.real_dim}, {"betti", b}, {"complete", p.complete}});
    }
    os << a.dump(2) << '\n';
  } else {
    const std::vector<std::string> head{"matrix", "s", "i", "real dim", "betti"};
    os << md_row(head) << md_rule(head.size());
    for (auto& p : rows) {
      std::string b;
      for (std::size_t k = 0; k < p.betti.size(); ++k) b += (k ? ", " : "") + cell(p.betti[k], "?");
      os << md_row({matrix_name(p.spec.m, p.spec.n), std::to_string(p.spec.s),
                    std::to_string(p.codim), std::to_string(p.real_dim), b});
    }
  }
  return os.str();
}

std::string render_ring(const GrassSpec& spec, Format f) {
  spec.validate();
  auto ring = GrassRing::get(spec);
  const IntPolynomial pp = poincare(spec);
  std::vector<std::string> relations;
  for (auto& g : grassmann_relations(spec)) relations.push_back(g.to_string("x"));

  std::ostringstream os;
  if (f == Format::csv) {
    os << "index,partition,degree\n";
    for (std::size_t i = 0; i < ring->size(); ++i)
      os << i << ',' << spaced(ring->basis(i)) << ',' << ring->degree(i) << '\n';
  } else if (f == Format::json) {
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < ring->size(); ++i) {
      auto parts = ring->basis(i).parts();
      basis.push_back({{"partition", std::vector<int>(parts.begin(), parts.end())},
                       {"degree", ring->degree(i)}});
    }
    ordered_json poly = ordered_json::object();
    for (auto& [deg, c] : pp.coefficients()) poly[std::to_string(deg)] = c.get_str();
    ordered_json doc = {{"r", spec.r},           {"m", spec.m},
                        {"dimension", spec.dimension()}, {"rank", ring->size()},
                        {"poincare", poly},      {"basis", basis},
                        {"relations", relations}};
    os << doc.dump(2) << '\n';
  } else {
    os << "## Grass(" << spec.r << "," << spec.m << ")\n\n";
    os << "dimension " << spec.dimension() << ", rank " << ring->size() << "\n\n";
    os << "Poincare polynomial: " << pp.to_string("t") << "\n\n";
    os << md_row({"index", "partition", "degree"}) << md_rule(3);
    for (std::size_t i = 0; i < ring->size(); ++i)
      os << md_row({std::to_string(i), ring->basis(i).to_string(), std::to_string(ring->degree(i))});
    os << "\nRelations (x_i = c_i(S), deg x_i = i):\n\n";
    if (relations.empty()) os << "- none\n";
    for (auto& rel : relations) os << "- " << rel << " = 0\n";
  }
  return os.str();
}

}  // namespace detlinks

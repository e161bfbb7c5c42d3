#pragma once

#include <string>
#include <vector>

#include "detlinks/grass_ring.hpp"
#include "detlinks/links.hpp"
#include "detlinks/polar.hpp"

namespace detlinks {

enum class Format { csv, md, json };

/// Throws InvalidArgument for anything but csv, md or json.
Format parse_format(const std::string& s);

/// Inclusive integer range written "a" or "a..b".
struct IntRange {
  int lo = 0;
  int hi = 0;
  std::vector<int> values() const;
};

/// Throws InvalidArgument on malformed or empty ranges.
IntRange parse_range(const std::string& s);

/// One row per profile, k across. The CSV form has one line per (profile, k)
/// under the header m,n,r,k,e.
std::string render_polar(const std::vector<PolarProfile>& rows, Format f);

struct EulerRow {
  DetSpec spec;
  int codim = 0;
  BigInt chi;
  bool smooth = false;
};
std::string render_euler(const std::vector<EulerRow>& rows, Format f);

/// table[d][m-1] for link dimension d = 0..3 and m = 1..max_m.
std::string render_hilbert_burch(const std::vector<std::vector<BigInt>>& table, Format f);

std::string render_betti(const std::vector<LinkProfile>& rows, Format f);
std::string render_real_betti(const std::vector<RealLinkProfile>& rows, Format f);

/// Schubert basis with degrees, Poincare polynomial and the relations of the
/// presentation Z[x_1..x_r]/J of one Grassmannian.
std::string render_ring(const GrassSpec& spec, Format f);

}  // namespace detlinks

#include "detlinks/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <set>
#include <tuple>

#include "detlinks/cache.hpp"
#include "detlinks/errors.hpp"
#include "detlinks/exec.hpp"
#include "detlinks/render.hpp"

namespace detlinks {

namespace {

using Triple = std::tuple<int, int, int>;

struct Options {
  std::string m, n, r, s, codim;
  std::string format = "md";
  bool verify = false;
  bool no_cache = false;
  int jobs = 0;
  bool hilbert_burch = false;
  int max_m = 4;
  bool real = false;
  bool clear = false;
};

std::vector<int> range_of(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string("missing ") + flag);
  try {
    return parse_range(text).values();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(flag) + ": " + e.what());
  }
}

// (m, n) pairs with m <= n; at least one must survive.
std::vector<std::pair<int, int>> sizes(const Options& o) {
  std::vector<std::pair<int, int>> out;
  for (int m : range_of(o.m, "--m"))
    for (int n : range_of(o.n, "--n")) {
      if (m < 1) throw InvalidArgument("--m must be positive");
      if (n >= m) out.emplace_back(m, n);
    }
  if (out.empty()) throw InvalidArgument("no matrix sizes with m <= n in the requested ranges");
  return out;
}

std::vector<DetSpec> det_specs(const Options& o) {
  std::vector<DetSpec> out;
  for (auto [m, n] : sizes(o))
    for (int s : range_of(o.s, "--s")) {
      DetSpec spec{m, n, s};
      spec.validate();
      out.push_back(spec);
    }
  return out;
}

std::vector<int> codims(const Options& o, const DetSpec& spec) {
  const int d = spec.dimension();
  if (o.codim.empty()) {
    if (d == 0) throw InvalidArgument(spec.to_string() + " is a point and has no links");
    return IntRange{0, d - 1}.values();
  }
  auto out = range_of(o.codim, "--codim");
  for (int i : out)
    if (i < 0 || i >= d)
      throw InvalidArgument("--codim " + std::to_string(i) + " outside 0.." + std::to_string(d - 1) +
                            " for " + spec.to_string());
  return out;
}

std::vector<Triple> strata_profiles(const DetSpec& spec) {
  std::vector<Triple> out;
  for (int rp = 1; rp < spec.s; ++rp) out.emplace_back(spec.m, spec.n, rp);
  return out;
}

class Session {
 public:
  Session(const Options& o, std::ostream& err)
      : err_(err), cache_(ProfileCache::default_file()), store_(o.no_cache ? nullptr : &cache_, o.verify) {
    if (o.no_cache) return;
    if (auto w = cache_.load()) err_ << "warning: " << *w << "\n";
  }
  void prepare(std::vector<Triple> needed) {
    std::set<Triple> seen;
    std::vector<Triple> unique;
    for (auto& t : needed)
      if (seen.insert(t).second) unique.push_back(t);
    store_.prepare(unique);
  }
  void finish() {
    if (auto w = store_.flush()) err_ << "warning: " << *w << "\n";
  }

 private:
  std::ostream& err_;
  ProfileCache cache_;
  ProfileStore store_;
};

std::string cmd_polar(const Options& o, std::ostream& err) {
  std::vector<Triple> triples;
  for (auto [m, n] : sizes(o))
    for (int r : range_of(o.r, "--r")) {
      validate_polar(m, n, r);
      triples.emplace_back(m, n, r);
    }
  Session session(o, err);
  session.prepare(triples);
  std::vector<PolarProfile> rows;
  for (auto& [m, n, r] : triples) rows.push_back(polar_profile(m, n, r));
  session.finish();
  return render_polar(rows, parse_format(o.format));
}

std::string cmd_euler(const Options& o, std::ostream& err) {
  const Format f = parse_format(o.format);
  if (o.hilbert_burch) {
    if (o.max_m < 1) throw InvalidArgument("--max-m must be at least 1");
    std::vector<Triple> needed{{1, 2, 0}};
    for (int m = 2; m <= o.max_m; ++m)
      for (int rp = 1; rp < m; ++rp) needed.emplace_back(m, m + 1, rp);
    Session session(o, err);
    session.prepare(needed);
    auto table = hilbert_burch_chi_table(o.max_m);
    session.finish();
    return render_hilbert_burch(table, f);
  }
  std::vector<std::pair<DetSpec, std::vector<int>>> jobs;
  std::vector<Triple> needed;
  for (auto& spec : det_specs(o)) {
    jobs.emplace_back(spec, codims(o, spec));
    for (auto& t : strata_profiles(spec)) needed.push_back(t);
  }
  Session session(o, err);
  session.prepare(needed);
  std::vector<EulerRow> rows;
  for (auto& [spec, is] : jobs)
    for (int i : is) rows.push_back({spec, i, euler_complex_link(spec, i), spec.smooth_at(i)});
  session.finish();
  return render_euler(rows, f);
}

std::string cmd_betti(const Options& o, std::ostream& err) {
  const Format f = parse_format(o.format);
  std::vector<std::pair<DetSpec, std::vector<int>>> jobs;
  std::vector<Triple> needed;
  for (auto& spec : det_specs(o)) {
    jobs.emplace_back(spec, codims(o, spec));
    for (auto& t : strata_profiles(spec)) needed.push_back(t);
  }
  Session session(o, err);
  session.prepare(needed);
  std::string text;
  if (o.real) {
    std::vector<RealLinkProfile> rows;
    for (auto& [spec, is] : jobs)
      for (int i : is) rows.push_back(betti_smooth_real_link(spec, i));
    text = render_real_betti(rows, f);
  } else {
    std::vector<LinkProfile> rows;
    for (auto& [spec, is] : jobs)
      for (int i : is) rows.push_back(betti_smooth_complex_link(spec, i));
    text = render_betti(rows, f);
  }
  session.finish();
  return text;
}

std::string cmd_ring(const Options& o) {
  const auto rs = range_of(o.r, "--r");
  const auto ms = range_of(o.m, "--m");
  if (rs.size() != 1 || ms.size() != 1) throw InvalidArgument("ring takes a single --r and --m");
  return render_ring(GrassSpec{rs[0], ms[0]}, parse_format(o.format));
}

std::string cmd_cache(const Options& o, std::ostream& err) {
  ProfileCache cache(ProfileCache::default_file());
  if (o.clear) {
    if (auto e = cache.remove_file()) err << "warning: " << *e << "\n";
    return "cleared " + cache.file().string() + "\n";
  }
  if (auto w = cache.load()) err << "warning: " << *w << "\n";
  std::string out = "cache " + cache.file().string() + "\n";
  out += std::to_string(cache.entries().size()) + " profiles\n";
  for (auto& [key, p] : cache.entries())
    out += ProfileCache::key(p.m, p.n, p.r) + " (" + std::to_string(p.values.size()) + " values)\n";
  if (o.verify)
    for (auto& [key, p] : cache.entries())
      if (compute_polar_profile(p.m, p.n, p.r) != p)
        throw ConsistencyError("cached profile " + ProfileCache::key(p.m, p.n, p.r) +
                               " does not match recomputation");
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polar multiplicities, Euler characteristics and Betti numbers of links of "
               "generic determinantal varieties."};
  app.name("detlinks");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "md", "json"}))
      ->capture_default_str();
  app.add_flag("--verify", o.verify, "Recompute cached profiles and fail on mismatch");
  app.add_flag("--no-cache", o.no_cache, "Neither read nor write the profile cache");
  app.add_option("--jobs", o.jobs, "Worker threads (default: all cores)")
      ->check(CLI::NonNegativeNumber);

  auto* polar = app.add_subcommand("polar", "Polar multiplicities e_{m,n}^{r,k}");
  polar->add_option("--m", o.m, "Rows, a or a..b")->required();
  polar->add_option("--n", o.n, "Columns, a or a..b")->required();
  polar->add_option("--r", o.r, "Rank bound, a or a..b")->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristics of complex links");
  euler->add_option("--m", o.m, "Rows, a or a..b");
  euler->add_option("--n", o.n, "Columns, a or a..b");
  euler->add_option("--s", o.s, "Matrices of rank < s, a or a..b");
  euler->add_option("--codim", o.codim, "Codimension i, a or a..b (default: all)");
  euler->add_flag("--hilbert-burch", o.hilbert_burch, "Table for M_{m,m+1}^m by link dimension");
  euler->add_option("--max-m", o.max_m, "Largest m of the Hilbert-Burch table")->capture_default_str();

  auto* betti = app.add_subcommand("betti", "Betti numbers of smooth links");
  betti->add_option("--m", o.m, "Rows, a or a..b")->required();
  betti->add_option("--n", o.n, "Columns, a or a..b")->required();
  betti->add_option("--s", o.s, "Matrices of rank < s, a or a..b")->required();
  betti->add_option("--codim", o.codim, "Codimension i, a or a..b (default: all)");
  betti->add_flag("--real", o.real, "Real links instead of complex links");

  auto* ring = app.add_subcommand("ring", "Schubert basis, Poincare polynomial and relations");
  ring->add_option("--r", o.r, "Subspace dimension")->required();
  ring->add_option("--m", o.m, "Ambient dimension")->required();

  auto* cache = app.add_subcommand("cache", "Inspect or clear the profile cache");
  cache->add_flag("--clear", o.clear, "Delete the cache file");

  std::ostringstream cli_out, cli_err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_jobs(o.jobs);
    if (!o.hilbert_burch && euler->parsed() && (o.m.empty() || o.n.empty() || o.s.empty()))
      throw InvalidArgument("euler needs --m, --n and --s, or --hilbert-burch");
    std::string text;
    if (polar->parsed()) text = cmd_polar(o, err);
    else if (euler->parsed()) text = cmd_euler(o, err);
    else if (betti->parsed()) text = cmd_betti(o, err);
    else if (ring->parsed()) text = cmd_ring(o);
    else text = cmd_cache(o, err);
    out << text;
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace detlinks

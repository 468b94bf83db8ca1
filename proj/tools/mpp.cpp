// mpp: coherent monotone paths on the hypersimplex Δ(n,k).
//
// Exit codes: 0 ok, 1 oracle disagreement or internal error, 2 bad usage or
// parameter, 3 budget exceeded, 4 non-generic secondary direction.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mpp/coherence.hpp"
#include "mpp/counting.hpp"
#include "mpp/errors.hpp"
#include "mpp/generator.hpp"
#include "mpp/geometry.hpp"
#include "mpp/io.hpp"
#include "mpp/kernels.hpp"

namespace {

using mpp::io::Json;

struct RunConfig {
  int n = 0;
  int k = 2;
  std::string c;
  std::string omega;
  std::string format;
  std::string out;
  bool coherent_only = false;
  std::string oracle;
  bool by_length = false;
  int n_max = 0;
  int threads = 1;
  std::size_t max_paths = 5'000'000;
  double max_seconds = 0;
};

// Exit status of a subcommand that ran to completion.
constexpr int kOk = 0;
constexpr int kDisagreement = 1;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw mpp::InvalidParameter("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void require_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw mpp::InvalidParameter("--format must be json or csv, got " + cfg.format);
}

// Direction in the caller's coordinates. Everything is computed in the sorted
// frame and mapped back through permutation() on output.
mpp::Direction direction_for(const RunConfig& cfg) {
  if (cfg.c.empty()) return mpp::default_direction(cfg.n);
  auto values = mpp::parse_rational_list(cfg.c);
  if (static_cast<int>(values.size()) != cfg.n)
    throw mpp::InvalidParameter("--c has " + std::to_string(values.size()) + " entries, expected " +
                                std::to_string(cfg.n));
  return mpp::Direction::from_values(std::move(values));
}

std::vector<int> to_user(const mpp::Support& s, const mpp::Direction& c) {
  std::vector<int> out;
  for (int e : s.elems()) out.push_back(c.permutation()[e - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string user_label(const mpp::Support& s, const mpp::Direction& c) {
  return mpp::io::support_label(mpp::Support(s.n(), to_user(s, c)));
}

mpp::RationalVector vector_to_user(const mpp::RationalVector& v, const mpp::Direction& c) {
  mpp::RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[c.permutation()[i] - 1] = v[i];
  return out;
}

mpp::RationalVector vector_from_user(const mpp::RationalVector& v, const mpp::Direction& c) {
  mpp::RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[c.permutation()[i] - 1];
  return out;
}

Json path_json(const mpp::MonotonePath& p, const mpp::Direction& c) {
  Json supports = Json::array();
  for (const auto& s : p.supports()) supports.push_back(to_user(s, c));
  return {{"n", p.n()}, {"k", p.k()}, {"supports", supports}};
}

std::string path_labels(const mpp::MonotonePath& p, const mpp::Direction& c) {
  std::string out;
  for (const auto& s : p.supports()) {
    if (!out.empty()) out += ' ';
    out += user_label(s, c);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg) {
  require_format(cfg);
  mpp::validate_dimensions(cfg.n, cfg.k);
  std::string oracle = cfg.oracle;
  if (oracle.empty() && cfg.coherent_only) oracle = "lp";
  if (!oracle.empty() && oracle != "lp" && oracle != "criterion" && oracle != "both")
    throw mpp::InvalidParameter("--oracle must be lp, criterion or both");
  const bool want_lp = oracle == "lp" || oracle == "both";
  const bool want_criterion = oracle == "criterion" || oracle == "both";
  const mpp::Direction c = direction_for(cfg);

  const auto start = std::chrono::steady_clock::now();
  std::vector<mpp::MonotonePath> paths;
  mpp::enumerate_monotone_paths(cfg.n, cfg.k, c, [&](const mpp::MonotonePath& p) {
    if (paths.size() >= cfg.max_paths)
      throw mpp::ResourceLimit("more than " + std::to_string(cfg.max_paths) + " monotone paths");
    if (cfg.max_seconds > 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > cfg.max_seconds) throw mpp::ResourceLimit("time budget exceeded");
    }
    paths.push_back(p);
    return true;
  });

  // The criterion is cheap next to the LP, so both are computed whenever one is asked for.
  std::vector<mpp::CoherenceVerdict> verdicts(paths.size());
  if (want_lp) {
    verdicts = cfg.threads > 1 ? mpp::omp::coherence_census(paths, c, cfg.threads)
                               : mpp::serial::coherence_census(paths, c);
  } else if (want_criterion) {
    for (std::size_t i = 0; i < paths.size(); ++i) verdicts[i].criterion = mpp::satisfies_criterion(paths[i]);
  }

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "csv") {
    std::vector<std::string> header{"index", "length", "supports"};
    if (want_lp) header.push_back("lp");
    if (want_criterion) header.push_back("criterion");
    mpp::io::write_csv_row(os, header);
  }
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& v = verdicts[i];
    if (want_lp && want_criterion && v.lp != v.criterion) {
      ++disagreements;
      std::cerr << "disagreement: " << path_labels(paths[i], c) << " lp=" << bool_text(v.lp)
                << " criterion=" << bool_text(v.criterion) << '\n';
    }
    if (cfg.coherent_only && !(want_lp ? v.lp : v.criterion)) continue;
    if (cfg.format == "json") {
      Json rec = path_json(paths[i], c);
      if (want_lp) rec["lp"] = v.lp;
      if (want_criterion) rec["criterion"] = v.criterion;
      os << rec.dump() << '\n';
    } else {
      std::vector<std::string> row{std::to_string(i), std::to_string(paths[i].length()), path_labels(paths[i], c)};
      if (want_lp) row.push_back(bool_text(v.lp));
      if (want_criterion) row.push_back(bool_text(v.criterion));
      mpp::io::write_csv_row(os, row);
    }
  }
  if (want_lp && want_criterion) {
    std::cerr << "oracle disagreements: " << disagreements << " of " << paths.size() << '\n';
    if (disagreements > 0) {
      if (cfg.k == 2) {
        std::cerr << "error: criterion and LP must agree for k = 2\n";
        return kDisagreement;
      }
      std::cerr << "warning: the criterion is not sufficient for k >= 3; disagreements are expected\n";
    }
  }
  return kOk;
}

// -------------------------------------------------------------------- count

int cmd_count(const RunConfig& cfg) {
  require_format(cfg);
  const int first = cfg.n_max > 0 && cfg.n == 0 ? 4 : cfg.n;
  const int last = cfg.n_max > 0 ? cfg.n_max : cfg.n;
  if (first < 4) throw mpp::InvalidParameter("count needs n >= 4 (use --n or --n-max)");
  if (last < first) throw mpp::InvalidParameter("--n-max is below --n");

  const auto counts = mpp::count_vectors_up_to(last);
  std::vector<mpp::PolyCountState> polys;
  if (cfg.by_length) polys = mpp::length_polys_up_to(last);

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "csv")
    mpp::io::write_csv_row(os, cfg.by_length ? std::vector<std::string>{"n", "length", "count"}
                                             : std::vector<std::string>{"n", "t", "q", "c", "total"});
  for (int n = first; n <= last; ++n) {
    const auto& s = counts[static_cast<std::size_t>(n - 4)];
    if (s.total() != mpp::count_total(n)) {
      std::cerr << "error: recursion and closed form disagree at n=" << n << '\n';
      return kDisagreement;
    }
    if (cfg.by_length) {
      const auto& p = polys[static_cast<std::size_t>(n - 4)];
      if (p.total().evaluate(1) != s.total()) {
        std::cerr << "error: length polynomial does not evaluate to the total at n=" << n << '\n';
        return kDisagreement;
      }
      const auto row = mpp::length_row(p);
      if (cfg.format == "csv") {
        for (std::size_t i = 0; i < row.size(); ++i)
          mpp::io::write_csv_row(os, {std::to_string(n), std::to_string(i + 3), row[i].get_str()});
      } else {
        Json counts_json = Json::array();
        for (const auto& v : row) counts_json.push_back(v.get_str());
        os << Json{{"n", n}, {"first_length", 3}, {"counts", counts_json}}.dump() << '\n';
      }
    } else if (cfg.format == "csv") {
      mpp::io::write_csv_row(os, {std::to_string(n), s.t.get_str(), s.q.get_str(), s.c.get_str(), s.total().get_str()});
    } else {
      os << Json{{"n", n}, {"t", s.t.get_str()}, {"q", s.q.get_str()}, {"c", s.c.get_str()}, {"total", s.total().get_str()}}
                .dump()
         << '\n';
    }
  }
  return kOk;
}

// -------------------------------------------------------------------- embed

int cmd_embed(const RunConfig& cfg) {
  require_format(cfg);
  mpp::validate_dimensions(cfg.n, cfg.k);
  const mpp::Direction c = direction_for(cfg);
  const auto report = mpp::mpp_vertices(cfg.n, cfg.k, c, cfg.max_paths, cfg.threads);

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "csv") {
    std::vector<std::string> header;
    for (int i = 1; i <= cfg.n; ++i) header.push_back("coord_" + std::to_string(i));
    header.push_back("is_vertex");
    mpp::io::write_csv_row(os, header);
  }
  for (std::size_t i = 0; i < report.paths.size(); ++i) {
    const auto coords = vector_to_user(report.points[i].coords, c);
    if (cfg.format == "csv") {
      std::vector<std::string> row;
      for (const auto& x : coords) row.push_back(mpp::to_fraction_string(x));
      row.push_back(bool_text(report.is_vertex[i]));
      mpp::io::write_csv_row(os, row);
    } else {
      os << Json{{"path", path_json(report.paths[i], c)},
                 {"coords", mpp::io::to_json(coords)},
                 {"is_vertex", static_cast<bool>(report.is_vertex[i])},
                 {"lp", static_cast<bool>(report.lp_coherent[i])}}
                .dump()
         << '\n';
    }
  }
  std::cerr << "paths: " << report.paths.size() << ", distinct points: " << report.distinct_points
            << ", vertices: " << report.vertex_count << ", disagreements with LP: " << report.disagreements << '\n';
  return report.disagreements == 0 ? kOk : kDisagreement;
}

// ------------------------------------------------------------------ capture

int cmd_capture(const RunConfig& cfg) {
  require_format(cfg);
  mpp::validate_dimensions(cfg.n, cfg.k);
  if (cfg.omega.empty()) throw mpp::InvalidParameter("capture needs --omega");
  const mpp::Direction c = direction_for(cfg);
  const auto omega_user = mpp::parse_rational_list(cfg.omega);
  if (static_cast<int>(omega_user.size()) != cfg.n)
    throw mpp::InvalidParameter("--omega has " + std::to_string(omega_user.size()) + " entries, expected " +
                                std::to_string(cfg.n));
  const auto omega = vector_from_user(omega_user, c);
  const auto path = mpp::captured_path(omega, c, cfg.n, cfg.k);
  const bool inside = mpp::strictly_inside(mpp::capture_cone(path, c), omega);
  const bool coherent = mpp::is_coherent_lp(path, c).coherent;

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "csv") {
    mpp::io::write_csv_row(os, {"length", "supports", "lp"});
    mpp::io::write_csv_row(os, {std::to_string(path.length()), path_labels(path, c), bool_text(coherent)});
  } else {
    Json rec = path_json(path, c);
    rec["lp"] = coherent;
    os << rec.dump() << '\n';
  }
  if (!inside || !coherent) {
    std::cerr << "error: captured path fails its own capture cone\n";
    return kDisagreement;
  }
  return kOk;
}

// --------------------------------------------------------------- gap-search

int cmd_gap_search(const RunConfig& cfg) {
  require_format(cfg);
  if (cfg.n_max <= 0) throw mpp::InvalidParameter("gap-search needs --n-max");
  const auto result = mpp::search_criterion_gap(cfg.k, cfg.n_max, cfg.max_paths);
  Output out(cfg.out);
  auto& os = out.stream();
  std::cerr << "paths examined: " << result.examined << ", LP calls: " << result.lp_calls << '\n';
  if (!result.path) {
    os << "none\n";
    return kOk;
  }
  const mpp::Direction c = mpp::default_direction(result.n);
  if (cfg.format == "csv") {
    mpp::io::write_csv_row(os, {"n", "k", "length", "supports"});
    mpp::io::write_csv_row(os, {std::to_string(result.n), std::to_string(cfg.k), std::to_string(result.path->length()),
                                path_labels(*result.path, c)});
  } else {
    Json steps = Json::array();
    for (const auto& s : mpp::enhanced_steps(*result.path)) steps.push_back(mpp::io::to_json(s));
    Json rec = mpp::io::to_json(*result.path);
    rec["steps"] = steps;
    rec["criterion"] = true;
    rec["lp"] = false;
    os << rec.dump() << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- generate

int cmd_generate(const RunConfig& cfg) {
  require_format(cfg);
  if (cfg.n < 3) throw mpp::InvalidParameter("generate needs n >= 3");
  if (cfg.n > 12 && cfg.max_paths < mpp::count_total(cfg.n))
    throw mpp::ResourceLimit("size " + std::to_string(cfg.n) + " has " + mpp::count_total(cfg.n).get_str() +
                             " coherent paths; raise --max-paths");
  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "csv") mpp::io::write_csv_row(os, {"index", "type", "length", "points"});
  std::size_t index = 0;
  auto emit = [&](const mpp::LatticePath& p) {
    if (cfg.format == "json") {
      os << mpp::io::to_json(p).dump() << '\n';
    } else {
      std::string pts;
      for (const auto& pt : p.points()) {
        if (!pts.empty()) pts += ' ';
        pts += "(" + std::to_string(pt[0]) + "," + std::to_string(pt[1]) + ")";
      }
      const std::string type = p.n() >= 4 ? mpp::to_string(mpp::classify(p).kind) : "";
      mpp::io::write_csv_row(os, {std::to_string(index), type, std::to_string(p.length()), pts});
    }
    ++index;
    return true;
  };
  if (cfg.threads > 1) mpp::omp::for_each_coherent(cfg.n, emit, cfg.threads);
  else mpp::for_each_coherent(cfg.n, emit);
  std::cerr << "coherent paths: " << index << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent monotone paths on the hypersimplex"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<const CLI::App*, std::string> default_formats;

  auto add_nk = [&](CLI::App* cmd, bool k_required) {
    cmd->add_option("--n", cfg.n, "ambient dimension n")->required();
    auto* k = cmd->add_option("--k", cfg.k, "number of ones k");
    if (k_required) k->required();
  };
  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--format", cfg.format, "json or csv (default " + default_format + ")");
    default_formats[cmd] = default_format;
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", cfg.threads, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-paths", cfg.max_paths, "path budget")->default_val(5'000'000);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list monotone paths, optionally with coherence verdicts");
  add_nk(enumerate, true);
  add_common(enumerate, "json");
  add_threads(enumerate);
  add_budget(enumerate);
  enumerate->add_option("--c", cfg.c, "primary direction \"c1,c2,...\" (default 1..n)");
  enumerate->add_flag("--coherent-only", cfg.coherent_only, "only coherent paths");
  enumerate->add_option("--oracle", cfg.oracle, "lp, criterion or both");
  enumerate->add_option("--max-seconds", cfg.max_seconds, "wall-clock budget for enumeration");

  auto* count = app.add_subcommand("count", "number of coherent paths of Δ(n,2)");
  count->add_option("--n", cfg.n, "size n (>= 4)");
  count->add_option("--n-max", cfg.n_max, "emit every size up to n-max");
  count->add_flag("--by-length", cfg.by_length, "split by path length");
  add_common(count, "csv");

  auto* embed = app.add_subcommand("embed", "points of the monotone path polytope with vertex flags");
  add_nk(embed, true);
  add_common(embed, "csv");
  add_threads(embed);
  add_budget(embed);
  embed->add_option("--c", cfg.c, "primary direction \"c1,c2,...\" (default 1..n)");

  auto* capture = app.add_subcommand("capture", "path selected by a secondary direction");
  add_nk(capture, true);
  add_common(capture, "json");
  capture->add_option("--c", cfg.c, "primary direction \"c1,c2,...\" (default 1..n)");
  capture->add_option("--omega", cfg.omega, "secondary direction \"w1,w2,...\"")->required();

  auto* gap = app.add_subcommand("gap-search", "first criterion-passing path that is not coherent");
  gap->add_option("--k", cfg.k, "number of ones k (>= 3)")->required();
  gap->add_option("--n-max", cfg.n_max, "largest n to search")->required();
  add_common(gap, "json");
  add_budget(gap);

  auto* generate = app.add_subcommand("generate", "coherent lattice paths of size n (k = 2)");
  generate->add_option("--n", cfg.n, "size n")->required();
  add_common(generate, "json");
  add_threads(generate);
  add_budget(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (cfg.format.empty())
    for (const auto& [cmd, format] : default_formats)
      if (cmd->parsed()) cfg.format = format;

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*count) return cmd_count(cfg);
    if (*embed) return cmd_embed(cfg);
    if (*capture) return cmd_capture(cfg);
    if (*gap) return cmd_gap_search(cfg);
    if (*generate) return cmd_generate(cfg);
  } catch (const mpp::ResourceLimit& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const mpp::NonGenericOmega& e) {
    std::cerr << "non-generic omega: " << e.what() << '\n';
    return 4;
  } catch (const mpp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

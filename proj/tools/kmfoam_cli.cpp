// kmfoam: inspect webs, generate half-foams, evaluate closed foams and
// compute lower bounds for J-flat.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kmfoam/kmfoam.hpp"

using namespace kmfoam;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

BoundsConfig make_config(std::uint64_t budget, const std::string& filter, unsigned workers,
                         const std::string& cache_dir, bool no_cache, bool self_check) {
  BoundsConfig c;
  c.budget = budget;
  c.workers = workers;
  c.self_check = self_check;
  if (!no_cache) c.cache_dir = cache_dir.empty() ? EvalCache::default_dir() : fs::path(cache_dir);
  if (filter == "coloring") {
    c.coloring = true;
  } else if (filter != "all") {
    c.kinds.clear();
    std::stringstream ss(filter);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto k = parse_move_kind(tok);
      if (!k || is_elimination(*k)) throw ValidationError("unknown filter '" + tok + "'");
      c.kinds.push_back(*k);
    }
  }
  return c;
}

void cmd_info(const std::string& path, const std::string& format) {
  Web w = load_web(path);
  auto fs_ = faces(w);
  std::map<int, int> sizes;
  for (const auto& f : fs_) ++sizes[f.size()];
  auto bridges = find_bridges(w);
  auto red = reduce(w);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["web"] = stem(path);
    j["vertices"] = w.num_vertices();
    j["edges"] = w.num_edges();
    j["loops"] = w.num_loops();
    j["faces"] = fs_.size();
    nlohmann::ordered_json fj = nlohmann::ordered_json::object();
    for (auto [s, n] : sizes) fj[std::to_string(s)] = n;
    j["face_sizes"] = fj;
    j["tait"] = tait_count(w);
    std::vector<std::string> b;
    for (Label l : bridges) b.push_back(w.name(l));
    j["bridges"] = b;
    j["reducible"] = red.ok();
    if (red.ok()) j["basis_size"] = red.tree->basis_size;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "web " << stem(path) << ": V=" << w.num_vertices() << " E=" << w.num_edges()
            << " loops=" << w.num_loops() << " faces=" << fs_.size() << '\n';
  std::cout << "face sizes:";
  for (auto [s, n] : sizes) std::cout << ' ' << n << "x" << s;
  std::cout << "\nTait=" << tait_count(w) << '\n';
  std::cout << "bridges:";
  if (bridges.empty()) std::cout << " none";
  for (Label l : bridges) std::cout << ' ' << w.name(l);
  std::cout << '\n' << (red.ok() ? "reducible" : "nonreducible") << '\n';
}

void print_tree(const ReductionNode& n, int depth) {
  if (n.leaf()) return;
  std::string pad(2 * depth, ' ');
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    MoveSite s = n.site;
    s.variant = static_cast<std::uint8_t>(i);
    std::cout << pad << cobordism_name(s) << " at " << site_text(*n.web, s) << "  (basis " << n.basis_size << ")\n";
    print_tree(*n.children[i], depth + (n.children.size() > 1 ? 1 : 0));
  }
}

int cmd_reduce(const std::string& path) {
  Web w = load_web(path);
  auto r = reduce(w);
  if (!r.ok()) {
    std::cout << "nonreducible; stuck at a web with no eliminable face:\n" << write_web(*r.stuck);
    return 0;
  }
  print_tree(*r.tree, 0);
  std::cout << "basis size " << r.tree->basis_size << " (Tait " << tait_count(w) << ")\n";
  return 0;
}

void cmd_generate(const std::string& path, const BoundsConfig& cfg, const std::string& out_dir) {
  Web w = load_web(path);
  Reducer red;
  auto set = half_foams(w, cfg, red);
  std::cout << "# " << set.foams.size() << " of " << set.total << " half-foams\n";
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (std::size_t i = 0; i < set.foams.size(); ++i) {
    const auto& f = set.foams[i];
    auto text = serialize(f);
    std::cout << i << ' ' << f.degree << ' ' << sha256_hex(text).substr(0, 16) << ' ' << f.provenance << '\n';
    if (!out_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "foam_%05zu.%s", i, f.coloring ? "foam" : "movie");
      write_file((fs::path(out_dir) / name).string(), text);
    }
  }
}

void cmd_eval(const std::vector<std::string>& files) {
  CellComplex c;
  if (files.size() == 1) {
    Movie m = parse_movie(read_file(files[0]));
    if (!m.closed()) throw ValidationError("movie is not a closed foam (its first and last slices must be empty)");
    c = build_complex(m);
  } else if (files.size() == 2) {
    Movie a = parse_movie(read_file(files[0])), b = parse_movie(read_file(files[1]));
    c = glue(a, b);
  } else {
    throw ValidationError("eval takes one closed movie or two half-foam movies");
  }
  auto g = facet_graph(c);
  auto s = evaluate_bracket(c, g);
  int deg = foam_degree(c, g);
  auto phi = phi_eval(s);
  std::cout << "<F> = " << s.str() << '\n';
  std::cout << "phi = " << phi.str() << '\n';
  std::cout << "J = " << (s.contains({0, 0, 0}) ? 1 : 0) << '\n';
  std::cout << "deg = " << deg << '\n';
  std::cout << "grading " << (s.zero() ? "n/a (zero)" : s.degree() == deg ? "ok" : "MISMATCH") << '\n';
  std::cout << "facets = " << g.num_facets << ", colorings = " << admissible_colorings(g).size() << '\n';
}

void emit_bounds(const BoundsReport& r, const std::string& format, const std::string& csv_out) {
  if (format == "json")
    std::cout << report_json(r).dump(2) << '\n';
  else if (format == "csv")
    std::cout << saturation_csv(r);
  else
    std::cout << table_text({{r.web, r, ""}});
  if (!csv_out.empty()) write_file(csv_out, saturation_csv(r));
}

int cmd_cache(const std::string& action, const std::string& dir) {
  fs::path p = dir.empty() ? EvalCache::default_dir() : fs::path(dir);
  EvalCache cache(p, true);
  auto s = cache.stats();
  std::cout << "cache " << cache.path().string() << ": " << s.entries << " entries, " << s.lines << " lines, "
            << s.bytes << " bytes";
  if (action == "verify") {
    std::cout << ", " << s.bad_lines << " bad lines\n";
    if (s.bad_lines) throw CacheCorruption(std::to_string(s.bad_lines) + " cache lines fail their checksum");
  } else {
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for J-flat of planar webs from half-foam Gram matrices"};
  app.require_subcommand(1);

  std::uint64_t budget = 1000;
  std::string filter = "all", cache_dir, format = "text", csv_out, out_dir;
  unsigned workers = 1;
  bool self_check = false, no_cache = false;
  auto add_run_flags = [&](CLI::App* c) {
    c->add_option("--budget", budget, "Maximum number of half-foams (N_e)")->check(CLI::PositiveNumber);
    c->add_option("--filter", filter, "all | zip | unzip | saddle | ih | coloring (comma list of kinds allowed)");
    c->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--cache-dir", cache_dir, "Evaluation cache directory (default $KMFOAM_CACHE_DIR or .kmfoam-cache)");
    c->add_flag("--no-cache", no_cache, "Do not read or write the evaluation cache");
    c->add_flag("--self-check", self_check, "Re-evaluate sampled pairs exactly, in both orders");
  };

  std::string web;
  std::vector<std::string> files;

  auto* info = app.add_subcommand("info", "Summarise a web");
  info->add_option("web", web)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* red = app.add_subcommand("reduce", "Show the greedy reduction of a web");
  red->add_option("web", web)->required();

  auto* gen = app.add_subcommand("generate", "List (and optionally write) the half-foams of a web");
  gen->add_option("web", web)->required();
  gen->add_option("--out", out_dir, "Directory for one movie file per half-foam");
  add_run_flags(gen);

  auto* ev = app.add_subcommand("eval", "Evaluate a closed movie, or the foam glued from two half-foam movies");
  ev->add_option("movies", files)->required()->expected(1, 2);

  auto* bounds = app.add_subcommand("bounds", "Compute l, l_q, r, r_q for a web");
  bounds->add_option("web", web)->required();
  bounds->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  bounds->add_option("--saturation-csv", csv_out, "Write the (n, l_n) curve to this file");
  add_run_flags(bounds);

  auto* table = app.add_subcommand("table", "Bounds for several webs in one table");
  table->add_option("webs", files);
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  add_run_flags(table);

  std::string action;
  auto* cache = app.add_subcommand("cache", "Inspect the evaluation cache");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"stats", "verify"}));
  cache->add_option("--cache-dir", cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto log = [](const std::string& s) { std::cerr << s << '\n'; };
  try {
    if (*info) cmd_info(web, format);
    if (*red) return cmd_reduce(web);
    if (*gen) cmd_generate(web, make_config(budget, filter, workers, cache_dir, true, false), out_dir);
    if (*ev) cmd_eval(files);
    if (*bounds) {
      auto cfg = make_config(budget, filter, workers, cache_dir, no_cache, self_check);
      emit_bounds(compute_bounds(load_web(web), stem(web), cfg, log), format, csv_out);
    }
    if (*table) {
      auto cfg = make_config(budget, filter, workers, cache_dir, no_cache, self_check);
      std::vector<TableRow> rows;
      for (const auto& f : files) {
        TableRow row{stem(f), std::nullopt, ""};
        try {
          row.report = compute_bounds(load_web(f), stem(f), cfg, log);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
      if (format == "json")
        std::cout << table_json(rows).dump(2) << '\n';
      else if (format == "csv")
        std::cout << table_csv(rows);
      else
        std::cout << table_text(rows);
    }
    if (*cache) return cmd_cache(action, cache_dir);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

// Library walkthrough on the dodecahedral web: why it is not reducible, the
// lower bounds from both generating sets, and the saturation curve.
//
//   demo_dodecahedron [budget] [saturation.csv]

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "kmfoam/kmfoam.hpp"

using namespace kmfoam;

int main(int argc, char** argv) {
  std::uint64_t budget = argc > 1 ? std::stoull(argv[1]) : 400;
  Web w = load_web(std::string(KMFOAM_DATA_DIR) + "/webs/dodecahedron.web");

  auto fs = faces(w);
  int smallest = fs.front().size();
  for (const auto& f : fs) smallest = std::min(smallest, f.size());
  // every face is a pentagon, so no disk, bigon, triangle or square to remove
  std::cout << "V=" << w.num_vertices() << " E=" << w.num_edges() << " faces=" << fs.size()
            << " smallest face=" << smallest << '\n';
  std::cout << "Tait=" << tait_count(w) << ", reducible: " << (reduce(w).ok() ? "yes" : "no") << "\n\n";

  BoundsConfig cfg;
  cfg.budget = budget;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  auto movies = compute_bounds(w, "W1/movies", cfg);
  cfg.coloring = true;
  auto colorings = compute_bounds(w, "W1/colorings", cfg);

  std::vector<TableRow> rows{{"W1 movies", movies, ""}, {"W1 colorings", colorings, ""}};
  std::cout << table_text(rows) << '\n';
  std::cout << "r=" << movies.r << " r_q=" << movies.rq.str() << '\n';
  std::cout << "l_q / [3]! = " << (movies.lq_diag.factorial_quotient ? movies.lq_diag.factorial_quotient->str() : "-")
            << '\n';

  // l_n at a few checkpoints
  for (std::size_t n : {10, 25, 50, 100, 200, 400, 800})
    if (n <= movies.history.size()) std::cout << "l_" << n << " = " << movies.history[n - 1] << '\n';

  if (argc > 2) {
    std::ofstream(argv[2]) << saturation_csv(movies);
    std::cout << "saturation curve written to " << argv[2] << '\n';
  }
}

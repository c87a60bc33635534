#pragma once

#include "kmfoam/bounds.hpp"
#include "kmfoam/cache.hpp"
#include "kmfoam/canonical.hpp"
#include "kmfoam/coloring.hpp"
#include "kmfoam/complex.hpp"
#include "kmfoam/evaluate.hpp"
#include "kmfoam/generate.hpp"
#include "kmfoam/moves.hpp"
#include "kmfoam/movie.hpp"
#include "kmfoam/poly.hpp"
#include "kmfoam/qpoly.hpp"
#include "kmfoam/rank.hpp"
#include "kmfoam/reduce.hpp"
#include "kmfoam/report.hpp"
#include "kmfoam/smith.hpp"
#include "kmfoam/tait.hpp"
#include "kmfoam/web.hpp"
#include "kmfoam/web_io.hpp"

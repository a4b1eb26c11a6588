#pragma once

#include "bounds.hpp"
#include "brute_force.hpp"
#include "clique.hpp"
#include "distance.hpp"
#include "equalizer.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "matching.hpp"
#include "polytope.hpp"
#include "report_io.hpp"
#include "repro.hpp"
#include "solver.hpp"
#include "stats.hpp"
#include "tables.hpp"
#include "vertex_set.hpp"

#pragma once

#include "twspan/abstract_graph.hpp"
#include "twspan/bounded_tw.hpp"
#include "twspan/delaunay.hpp"
#include "twspan/dilation.hpp"
#include "twspan/geo_graph.hpp"
#include "twspan/geometry.hpp"
#include "twspan/greedy_spanner.hpp"
#include "twspan/io.hpp"
#include "twspan/minor_core.hpp"
#include "twspan/plane_check.hpp"
#include "twspan/pointgen.hpp"
#include "twspan/tree_tools.hpp"
#include "twspan/treewidth.hpp"
#include "twspan/version.hpp"

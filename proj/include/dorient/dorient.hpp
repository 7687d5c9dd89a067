#pragma once

#include "dorient/canonical.hpp"
#include "dorient/claims.hpp"
#include "dorient/coloring.hpp"
#include "dorient/count.hpp"
#include "dorient/decomposition.hpp"
#include "dorient/embedding.hpp"
#include "dorient/exact.hpp"
#include "dorient/extremal.hpp"
#include "dorient/families.hpp"
#include "dorient/graph.hpp"
#include "dorient/graph_io.hpp"
#include "dorient/json_io.hpp"
#include "dorient/orientation.hpp"
#include "dorient/parallel.hpp"

#pragma once

#include "vertex_set.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "structure.hpp"
#include "patterns.hpp"
#include "enumeration.hpp"
#include "coloring.hpp"
#include "verify.hpp"
#include "solve.hpp"
#include "threshold.hpp"
#include "netblock.hpp"
#include "easy_classes.hpp"
#include "gadgets.hpp"
#include "reduce.hpp"
#include "generators.hpp"

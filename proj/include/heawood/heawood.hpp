#pragma once

#include "heawood/bounds.hpp"
#include "heawood/enumerate.hpp"
#include "heawood/errors.hpp"
#include "heawood/graph.hpp"
#include "heawood/graph6.hpp"
#include "heawood/invariants.hpp"
#include "heawood/planarity.hpp"
#include "heawood/spectral.hpp"
#include "heawood/surfaces.hpp"
#include "heawood/sweep.hpp"

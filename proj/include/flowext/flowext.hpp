#pragma once

#include "flowext/constructions.hpp"
#include "flowext/dfa.hpp"
#include "flowext/errors.hpp"
#include "flowext/graph_spec.hpp"
#include "flowext/network.hpp"
#include "flowext/optimize.hpp"
#include "flowext/oracle.hpp"
#include "flowext/paths.hpp"
#include "flowext/point_set.hpp"
#include "flowext/profile.hpp"
#include "flowext/rational.hpp"
#include "flowext/transforms.hpp"

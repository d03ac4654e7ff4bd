#pragma once

#include "core.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "partition.hpp"
#include "permrep.hpp"
#include "permutation.hpp"
#include "surface.hpp"
#include "svg.hpp"
#include "tessellate.hpp"

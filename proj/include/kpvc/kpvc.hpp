#pragma once

#include "kpvc/approx.hpp"
#include "kpvc/bounds.hpp"
#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/generators.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/outerplanar.hpp"
#include "kpvc/partition.hpp"
#include "kpvc/random.hpp"
#include "kpvc/tree.hpp"
#include "kpvc/verify.hpp"

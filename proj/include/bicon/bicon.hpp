#pragma once

#include "bicon/bounds.hpp"
#include "bicon/connectivity.hpp"
#include "bicon/constructions.hpp"
#include "bicon/enumerate.hpp"
#include "bicon/errors.hpp"
#include "bicon/flow.hpp"
#include "bicon/graph.hpp"
#include "bicon/io.hpp"
#include "bicon/oracle.hpp"
#include "bicon/parallel.hpp"
#include "bicon/verifier.hpp"

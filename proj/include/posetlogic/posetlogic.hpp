#pragma once

#include "posetlogic/bridges.hpp"
#include "posetlogic/census.hpp"
#include "posetlogic/errors.hpp"
#include "posetlogic/io.hpp"
#include "posetlogic/logic.hpp"
#include "posetlogic/orthoset.hpp"
#include "posetlogic/poset.hpp"
#include "posetlogic/structure.hpp"
#include "posetlogic/subset.hpp"

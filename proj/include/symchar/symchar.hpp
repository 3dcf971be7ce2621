#pragma once

#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/exact.hpp"
#include "symchar/generic_group.hpp"
#include "symchar/io.hpp"
#include "symchar/partitions.hpp"
#include "symchar/sampling.hpp"
#include "symchar/stats.hpp"
#include "symchar/table_stats.hpp"
#include "symchar/theorem_stats.hpp"

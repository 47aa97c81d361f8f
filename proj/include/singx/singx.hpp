#pragma once

#include "singx/cayley.hpp"
#include "singx/cones.hpp"
#include "singx/cross_connection.hpp"
#include "singx/foundation.hpp"
#include "singx/ideals.hpp"
#include "singx/normal_dual.hpp"
#include "singx/partition_category.hpp"
#include "singx/powerset_category.hpp"
#include "singx/report.hpp"
#include "singx/suites.hpp"

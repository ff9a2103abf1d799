#pragma once

#include "ribbon/types.hpp"
#include "ribbon/shape.hpp"
#include "ribbon/tableau.hpp"
#include "ribbon/deadline.hpp"
#include "ribbon/lr.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/rmatrix.hpp"
#include "ribbon/conditions.hpp"
#include "ribbon/json.hpp"
#include "ribbon/sweep.hpp"

#pragma once

#include "error.hpp"
#include "roots.hpp"
#include "perms.hpp"
#include "closure.hpp"
#include "fan.hpp"
#include "orders.hpp"
#include "lattice.hpp"
#include "json_io.hpp"

#pragma once

#include "harmshear/errors.hpp"
#include "harmshear/maps.hpp"
#include "harmshear/minsurf.hpp"
#include "harmshear/numerics.hpp"
#include "harmshear/shear.hpp"
#include "harmshear/specfun.hpp"

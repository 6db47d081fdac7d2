#pragma once

#include "alcove/affine.hpp"
#include "alcove/bruhat.hpp"
#include "alcove/geomformula.hpp"
#include "alcove/paperboat.hpp"
#include "alcove/polytopes.hpp"
#include "alcove/tables_a3.hpp"
#include "alcove/weights.hpp"

// projqm.hpp - convenience umbrella header
#pragma once

#include "bloch.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "operators.hpp"
#include "projective.hpp"
#include "types.hpp"

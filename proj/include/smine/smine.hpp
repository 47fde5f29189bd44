#pragma once

// Umbrella header for the service relationship mining library.

#include "smine/config.hpp"
#include "smine/errors.hpp"
#include "smine/harness.hpp"
#include "smine/json_io.hpp"
#include "smine/mining.hpp"
#include "smine/model.hpp"
#include "smine/recognition.hpp"
#include "smine/scoring.hpp"
#include "smine/synth.hpp"

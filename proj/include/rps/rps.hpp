#pragma once

// Umbrella header: permutation event spaces, permutation mass functions,
// the negation map with its closed form, entropy and distance measures,
// iterated-negation traces, and JSON model-file I/O.

#include "rps/counting.hpp"
#include "rps/distributions.hpp"
#include "rps/errors.hpp"
#include "rps/event.hpp"
#include "rps/event_space.hpp"
#include "rps/frame.hpp"
#include "rps/mass_function.hpp"
#include "rps/measures.hpp"
#include "rps/model_io.hpp"
#include "rps/negation.hpp"
#include "rps/trace.hpp"

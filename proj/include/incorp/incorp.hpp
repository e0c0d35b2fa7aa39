#pragma once

// Umbrella header for the whole library.
#include "clauses.hpp"        // IWYU pragma: export
#include "conformance.hpp"    // IWYU pragma: export
#include "engine.hpp"         // IWYU pragma: export
#include "equations.hpp"      // IWYU pragma: export
#include "errors.hpp"         // IWYU pragma: export
#include "generators.hpp"     // IWYU pragma: export
#include "irreducible.hpp"    // IWYU pragma: export
#include "simplifier.hpp"     // IWYU pragma: export

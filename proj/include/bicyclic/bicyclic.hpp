// Umbrella header.

#ifndef BICYCLIC_BICYCLIC_HPP_
#define BICYCLIC_BICYCLIC_HPP_

#include "coverage.hpp"      // IWYU pragma: export
#include "element.hpp"       // IWYU pragma: export
#include "iorder.hpp"        // IWYU pragma: export
#include "regions.hpp"       // IWYU pragma: export
#include "rewrite.hpp"       // IWYU pragma: export
#include "spec_io.hpp"       // IWYU pragma: export
#include "subsemigroup.hpp"  // IWYU pragma: export
#include "witness.hpp"       // IWYU pragma: export

#endif  // BICYCLIC_BICYCLIC_HPP_

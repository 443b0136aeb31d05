#pragma once

#include "lax/sampling.hpp"

namespace lax::testing {
using lax::Sampler;
}  // namespace lax::testing

#pragma once

#include "mdh/generators.hpp"

namespace mdh::testing {

using mdh::corpus_labels;
using mdh::path;
using mdh::random_complex;
using mdh::random_subdivision;
using mdh::theta;

}  // namespace mdh::testing

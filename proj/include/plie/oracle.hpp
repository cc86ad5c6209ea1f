#pragma once

#include <cstddef>
#include <vector>

#include "plie/local.hpp"

namespace plie {

/// Dimensions by degree -N..N of the minimal graded algebra over `local`,
/// computed without building it: each degree-m right-normed bracket word in
/// one generator family is contracted, one opposite generator at a time,
/// down to the generator space; a word vanishes in the minimal algebra
/// exactly when every such contraction sequence kills it, so the component
/// dimension is the rank of the word-vs-sequence profile matrix. Everything
/// is evaluated through the local data alone. Combinatorial in n^N; guarded
/// by default. Throws std::invalid_argument when max_degree exceeds `guard`
/// and `force` is not set.
std::vector<std::size_t> oracle_dims(const LocalPart& local, int max_degree, bool force = false,
                                     int guard = 5);

}  // namespace plie

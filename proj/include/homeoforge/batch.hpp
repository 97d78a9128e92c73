#pragma once

#include "homeoforge/ring.hpp"
#include "homeoforge/word.hpp"

namespace homeoforge::batch {

/*
 * Batch verification kernels. Each kernel comes in a serial reference version
 * and an OpenMP version over independent inputs; results are bit-identical
 * (all arithmetic is exact and inputs are independent). The bench target
 * compares the two.
 */

/// Signed-index encoding of reduced words: letter k in [0, 2n) is generator
/// k/2 + 1 with sign (k%2 ? -1 : +1); successive letters never cancel.
long reduced_word_count(int n, int len);
std::vector<int> decode_reduced_word(int n, int len, long index);

struct ProbeScan {
    long words_checked = 0;
    std::vector<std::vector<int>> trivial;  // letters of identity-acting words
};
ProbeScan free_probe_serial(const RingConfig& config, int max_len,
                            const std::vector<QuadScalar>& points);
ProbeScan free_probe_parallel(const RingConfig& config, int max_len,
                              const std::vector<QuadScalar>& points);

std::vector<QuadScalar> eval_batch_serial(const GeneratorRegistry& reg, const Word& w,
                                          const std::vector<QuadScalar>& points);
std::vector<QuadScalar> eval_batch_parallel(const GeneratorRegistry& reg, const Word& w,
                                            const std::vector<QuadScalar>& points);

std::vector<int> compare_batch_serial(const std::vector<std::pair<QuadScalar, QuadScalar>>& pairs);
std::vector<int> compare_batch_parallel(const std::vector<std::pair<QuadScalar, QuadScalar>>& pairs);

std::vector<long> winding_batch_serial(const RingConfig& config,
                                       const std::vector<std::vector<int>>& words);
std::vector<long> winding_batch_parallel(const RingConfig& config,
                                         const std::vector<std::vector<int>>& words);

}  // namespace homeoforge::batch

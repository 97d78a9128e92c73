#include "homeoforge/batch.hpp"

#include <omp.h>

namespace homeoforge::batch {

long reduced_word_count(int n, int len) {
    if (len < 1) return 0;
    long count = 2L * n;
    for (int i = 1; i < len; ++i) count *= 2L * n - 1;
    return count;
}

std::vector<int> decode_reduced_word(int n, int len, long index) {
    std::vector<int> letters;
    letters.reserve(len);
    long first = index % (2L * n);
    index /= 2L * n;
    auto to_signed = [](long k) {
        return static_cast<int>(k / 2 + 1) * (k % 2 ? -1 : 1);
    };
    letters.push_back(to_signed(first));
    long prev = first;
    for (int i = 1; i < len; ++i) {
        long c = index % (2L * n - 1);
        index /= 2L * n - 1;
        long forbidden = prev ^ 1L;  // the cancelling letter
        long k = c < forbidden ? c : c + 1;
        letters.push_back(to_signed(k));
        prev = k;
    }
    return letters;
}

namespace {

bool acts_trivially(const RingConfig& config, const std::vector<int>& letters,
                    const std::vector<QuadScalar>& points) {
    const QuadScalar& c = config.circumference;
    for (const QuadScalar& p : points) {
        QuadScalar z = p;
        for (int l : letters) {
            const GenEntry& e = config.reg.at("f" + std::to_string(l > 0 ? l : -l));
            z = reduce_mod((l > 0 ? e.map : e.inverse_map).eval(z), c);
        }
        if (z != p) return false;
    }
    return true;
}

}  // namespace

ProbeScan free_probe_serial(const RingConfig& config, int max_len,
                            const std::vector<QuadScalar>& points) {
    ProbeScan scan;
    std::vector<QuadScalar> base;
    for (const QuadScalar& p : points) base.push_back(reduce_mod(p, config.circumference));
    for (int len = 1; len <= max_len; ++len) {
        long total = reduced_word_count(config.n, len);
        for (long idx = 0; idx < total; ++idx) {
            std::vector<int> letters = decode_reduced_word(config.n, len, idx);
            ++scan.words_checked;
            if (acts_trivially(config, letters, base)) scan.trivial.push_back(letters);
        }
    }
    return scan;
}

ProbeScan free_probe_parallel(const RingConfig& config, int max_len,
                              const std::vector<QuadScalar>& points) {
    ProbeScan scan;
    std::vector<QuadScalar> base;
    for (const QuadScalar& p : points) base.push_back(reduce_mod(p, config.circumference));
    for (int len = 1; len <= max_len; ++len) {
        long total = reduced_word_count(config.n, len);
        scan.words_checked += total;
        std::vector<std::pair<long, std::vector<int>>> found;
#pragma omp parallel
        {
            std::vector<std::pair<long, std::vector<int>>> local;
#pragma omp for schedule(dynamic, 256) nowait
            for (long idx = 0; idx < total; ++idx) {
                std::vector<int> letters = decode_reduced_word(config.n, len, idx);
                if (acts_trivially(config, letters, base)) local.emplace_back(idx, letters);
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
        std::sort(found.begin(), found.end());
        for (auto& [idx, letters] : found) scan.trivial.push_back(std::move(letters));
    }
    return scan;
}

std::vector<QuadScalar> eval_batch_serial(const GeneratorRegistry& reg, const Word& w,
                                          const std::vector<QuadScalar>& points) {
    std::vector<QuadScalar> out;
    out.reserve(points.size());
    for (const QuadScalar& p : points) out.push_back(evaluate_word(reg, w, p));
    return out;
}

std::vector<QuadScalar> eval_batch_parallel(const GeneratorRegistry& reg, const Word& w,
                                            const std::vector<QuadScalar>& points) {
    std::vector<QuadScalar> out(points.size());
    long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) out[i] = evaluate_word(reg, w, points[i]);
    return out;
}

std::vector<int> compare_batch_serial(const std::vector<std::pair<QuadScalar, QuadScalar>>& pairs) {
    std::vector<int> out;
    out.reserve(pairs.size());
    for (const auto& [x, y] : pairs) out.push_back(compare(x, y));
    return out;
}

std::vector<int> compare_batch_parallel(const std::vector<std::pair<QuadScalar, QuadScalar>>& pairs) {
    std::vector<int> out(pairs.size());
    long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) out[i] = compare(pairs[i].first, pairs[i].second);
    return out;
}

std::vector<long> winding_batch_serial(const RingConfig& config,
                                       const std::vector<std::vector<int>>& words) {
    std::vector<long> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(lift_winding_check(config, w).winding.get_si());
    return out;
}

std::vector<long> winding_batch_parallel(const RingConfig& config,
                                         const std::vector<std::vector<int>>& words) {
    std::vector<long> out(words.size());
    long count = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i)
        out[i] = lift_winding_check(config, words[i]).winding.get_si();
    return out;
}

}  // namespace homeoforge::batch

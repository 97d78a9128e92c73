// Benchmark: serial reference kernels vs their OpenMP variants. Results must
// agree bit-for-bit; the table reports times and speedup.

#include <homeoforge/batch.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

using namespace homeoforge;
using Clock = std::chrono::steady_clock;

namespace {

double timed(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-24s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
                serial / parallel, equal ? "results identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-24s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        RingConfig cfg = synthesize_ring(2);
        auto pts = default_probe_points(cfg);
        int len = scale > 1 ? 9 : 8;
        batch::ProbeScan a, b;
        double ts = timed([&] { a = batch::free_probe_serial(cfg, len, pts); });
        double tp = timed([&] { b = batch::free_probe_parallel(cfg, len, pts); });
        row("free probe scan", ts, tp, a.words_checked == b.words_checked && a.trivial == b.trivial);
    }
    {
        GeneratorRegistry reg;
        reg.register_periodized("x0bar", nu_embed(f_generator_x0()));
        reg.register_periodized("x1bar", nu_embed(f_generator_x1()));
        Word w = Word::parse("x0bar x1bar^-1 x0bar^2 x1bar");
        std::vector<QuadScalar> pts;
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<long> num(-4000, 4000);
        for (int i = 0; i < 4000 * scale; ++i)
            pts.push_back(QuadScalar(Rational(num(rng), 128)));
        std::vector<QuadScalar> a, b;
        double ts = timed([&] { a = batch::eval_batch_serial(reg, w, pts); });
        double tp = timed([&] { b = batch::eval_batch_parallel(reg, w, pts); });
        row("word evaluation", ts, tp, a == b);
    }
    {
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<long> num(-100000, 100000);
        std::uniform_int_distribution<long> den(1, 100000);
        std::vector<std::pair<QuadScalar, QuadScalar>> pairs;
        for (int i = 0; i < 60000 * scale; ++i)
            pairs.emplace_back(
                QuadScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2),
                QuadScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 2));
        std::vector<int> a, b;
        double ts = timed([&] { a = batch::compare_batch_serial(pairs); });
        double tp = timed([&] { b = batch::compare_batch_parallel(pairs); });
        row("exact comparisons", ts, tp, a == b);
    }
    {
        RingConfig cfg = synthesize_ring(3);
        std::vector<std::vector<int>> words;
        long total = batch::reduced_word_count(3, 6);
        for (long idx = 0; idx < total; idx += (scale > 1 ? 3 : 9))
            words.push_back(batch::decode_reduced_word(3, 6, idx));
        std::vector<long> a, b;
        double ts = timed([&] { a = batch::winding_batch_serial(cfg, words); });
        double tp = timed([&] { b = batch::winding_batch_parallel(cfg, words); });
        row("lift windings", ts, tp, a == b);
    }
    return 0;
}

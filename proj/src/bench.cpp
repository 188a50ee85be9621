#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcycle/harness.hpp"
#include "blockcycle/rotation.hpp"

namespace blockcycle::harness {

namespace {

template <std::size_t Bytes>
struct Blob {
    std::array<unsigned char, Bytes> bytes{};
};

// Rotations per timed repetition, so that short arrays still take long
// enough for the clock.
constexpr std::size_t kBytesPerRepetition = std::size_t{1} << 20;

template <class T>
void run_algorithm(const std::string& name, std::span<T> seq, std::size_t k, const BenchOptions& o) {
    const std::size_t batch = std::max<std::size_t>(1, o.batch_bytes / sizeof(T));
    if (name == "block_cycle") {
        rotate_block_cycle(seq, k, BlockCycleConfig{o.buffer_items, batch});
    } else if (name == "block_swap") {
        rotate_block_swap(seq, k);
    } else if (name == "trinity") {
        rotate_trinity(seq, k);
    } else if (name == "buffering_trinity") {
        rotate_trinity(seq, k, BlockCycleConfig{o.buffer_items, 1});
    } else if (name == "triple_reverse") {
        rotate_triple_reverse(seq, k);
    } else if (name == "buffering_triple_reverse") {
        rotate_buffered_triple_reverse(seq, k, o.buffer_items);
    } else {
        std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end());
    }
}

template <class T>
void bench_width(std::ostream& os, const BenchOptions& o) {
    using clock = std::chrono::steady_clock;
    const std::vector<std::size_t> sizes = bench_sizes(o);
    const std::vector<std::size_t> shifts = bench_shifts(o);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::size_t bytes = sizes[i];
        const std::size_t n = bytes / sizeof(T);
        const std::size_t k = shifts[i];
        const std::size_t rounds = std::max<std::size_t>(1, kBytesPerRepetition / bytes);
        std::vector<T> data(n);
        for (std::size_t j = 0; j < n; ++j) {
            data[j].bytes[0] = static_cast<unsigned char>(j);
        }
        for (const std::string& name : bench_algorithms()) {
            std::span<T> seq(data);
            for (int w = 0; w < o.warmup; ++w) {
                run_algorithm(name, seq, k, o);
            }
            std::vector<double> per_rotation;
            for (int r = 0; r < o.repetitions; ++r) {
                const auto start = clock::now();
                for (std::size_t round = 0; round < rounds; ++round) {
                    run_algorithm(name, seq, k, o);
                }
                const std::chrono::duration<double, std::nano> elapsed = clock::now() - start;
                per_rotation.push_back(elapsed.count() / static_cast<double>(rounds));
            }
            std::nth_element(per_rotation.begin(), per_rotation.begin() + per_rotation.size() / 2,
                             per_rotation.end());
            const double median = per_rotation[per_rotation.size() / 2];
            char line[128];
            std::snprintf(line, sizeof line, "%zu,%.6f,%s\n", bytes, median / static_cast<double>(bytes),
                          name.c_str());
            os << line;
        }
    }
}

void validate(const BenchOptions& o) {
    const std::size_t e = o.elem_bytes;
    if (e != 1 && e != 2 && e != 4 && e != 8 && e != 16) {
        throw std::invalid_argument("bench: elem_bytes must be one of 1, 2, 4, 8, 16");
    }
    if (o.min_bytes < 2 * e || o.max_bytes < o.min_bytes) {
        throw std::invalid_argument("bench: need 2 * elem_bytes <= min_bytes <= max_bytes");
    }
    if (o.repetitions < 5 || o.warmup < 0) {
        throw std::invalid_argument("bench: need at least 5 repetitions and a non-negative warm-up");
    }
    if (o.buffer_items < 1) {
        throw std::invalid_argument("bench: buffer must hold at least one element");
    }
}

}  // namespace

std::vector<std::size_t> bench_sizes(const BenchOptions& o) {
    validate(o);
    std::vector<std::size_t> sizes;
    for (std::size_t b = o.min_bytes; b <= o.max_bytes; b *= 2) {
        sizes.push_back(b);
        if (b > o.max_bytes / 2) {
            break;
        }
    }
    return sizes;
}

std::vector<std::size_t> bench_shifts(const BenchOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::vector<std::size_t> shifts;
    for (std::size_t bytes : bench_sizes(o)) {
        const std::size_t n = bytes / o.elem_bytes;
        std::uniform_int_distribution<std::size_t> dist(1, n - 1);
        shifts.push_back(dist(rng));
    }
    return shifts;
}

const std::vector<std::string>& bench_algorithms() {
    static const std::vector<std::string> names{
        "block_cycle",    "block_swap",     "trinity",   "buffering_trinity",
        "triple_reverse", "buffering_triple_reverse", "std_rotate"};
    return names;
}

void run_bench(std::ostream& os, const BenchOptions& o) {
    validate(o);
    os << "# seed=" << o.seed << " elem_bytes=" << o.elem_bytes << " repetitions=" << o.repetitions
       << " warmup=" << o.warmup << " buffer_items=" << o.buffer_items << " batch_bytes=" << o.batch_bytes
       << " shifts=uniform[1,n-1]\n";
    os << "bytes,ns_per_byte,algorithm\n";
    switch (o.elem_bytes) {
        case 1: bench_width<Blob<1>>(os, o); break;
        case 2: bench_width<Blob<2>>(os, o); break;
        case 4: bench_width<Blob<4>>(os, o); break;
        case 8: bench_width<Blob<8>>(os, o); break;
        default: bench_width<Blob<16>>(os, o); break;
    }
}

}  // namespace blockcycle::harness

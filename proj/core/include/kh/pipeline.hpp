#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kh/braid.hpp"
#include "kh/homology.hpp"

namespace kh {

// Everything one homology job needs.
struct JobSpec {
    BraidWord word;
    GradingMode mode = GradingMode::Classical;
    bool reduce = true;
    std::vector<std::int64_t> mod_p_probes; // primes
    int threads = 1;
    std::size_t memory_budget_bytes = std::size_t(2048) * 1024 * 1024;
    std::string cache_dir; // empty = no cache
    bool force_large = false;
};

// Estimated generator count (sum over states of 2^{circles}); exact when
// 2^n is small enough to enumerate, otherwise sampled from 1024 random
// states.
struct SizeEstimate {
    double generators = 0;
    bool exact = true;
};

SizeEstimate estimate_generators(const LinkDiagram& d);
std::size_t estimate_bytes(const SizeEstimate& e);

struct ModPReport {
    std::int64_t p = 0;
    // Bigradings where the F_p rank exceeds the rational free rank
    // (torsion evidence), with the excess.
    std::vector<std::tuple<int, int, int>> rank_jumps;
};

struct ComputeResult {
    BraidWord word;
    int writhe = 0;
    int components = 0;
    bool reduction_used = true;
    GradingMode mode = GradingMode::Classical;
    HomologyTable framed;   // always kept; classical derived from it
    HomologyTable rendered; // in the requested mode
    std::vector<std::tuple<int, int, Int>> torsion; // classical summary
    std::vector<ModPReport> mod_p;
    std::map<std::string, double> timings_ms;
    bool cache_hit = false;
};

// Runs the full pipeline: closure, budget check, complex, optional
// reduction, homology, torsion summary, optional mod-p probes.
// Throws budget_error when the estimate exceeds the budget and
// force_large is unset.
ComputeResult run_compute(const JobSpec& spec);

// Deterministic JSON for a result (sorted keys, 2-space indent, trailing
// newline). parse/render round-trips byte-identically.
std::string result_to_json(const ComputeResult& r);
ComputeResult result_from_json(const std::string& text);

// Plain-text table rendering.
std::string result_to_table(const ComputeResult& r);

std::string render_group(const HomologyGroup& g); // "Z^2 + Z_2"

// Cache: one JSON file per key under dir. The key covers everything that
// affects the stored content (word, reduce flag, probe list). Timings are
// not part of the stored result.
std::string cache_key(const JobSpec& spec);
std::optional<ComputeResult> cache_load(const JobSpec& spec);
void cache_store(const JobSpec& spec, const ComputeResult& r);

const char* version_string();

} // namespace kh

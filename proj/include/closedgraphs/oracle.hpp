#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "closedgraphs/graph.hpp"
#include "closedgraphs/groebner.hpp"

namespace closedgraphs {

inline constexpr std::size_t default_brute_force_cap = 9;

/// Seeded 64-bit Mersenne Twister. Bounded draws use rejection sampling on
/// the raw stream, so sequences match across standard libraries.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Tries every labelling of each component in lexicographic order of the
/// label vector (vertices in name order) and returns the first closed one,
/// components concatenated. Throws CapExceeded when |V(g)| > cap.
std::optional<Labelling> brute_force_closed(const Graph& g, std::size_t cap = default_brute_force_cap);

struct ClosedSample {
    Graph graph;
    Labelling labelling;  // identity on the zero-padded names
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
};

/// Graph whose maximal cliques are the intervals [m_i, M_i] with
/// 1 = m_1 < ... < m_r < n, M_1 < ... < M_r = n, m_i < M_i, m_{i+1} <= M_i.
/// Requires n >= 2 and 1 <= r <= n - 1 (InputError otherwise).
ClosedSample random_closed_graph(RandomSource& rs, std::size_t n, std::size_t r);

/// Random ranking of the 2n slots, random base order and, half the time,
/// weights drawn from {0,..,3}.
TermOrder random_term_order(RandomSource& rs, std::size_t n);

struct OrderTrial {
    TermOrder order;
    bool quadratic = false;
    std::uint64_t max_degree = 0;
    std::size_t basis_size = 0;
    bool acyclic = false;
    bool certified = false;  // all S-pairs reduce, every element multihomogeneous
    std::optional<Labelling> topological;
};

struct EquivalenceReport {
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::optional<Labelling> brute_force;
    std::optional<Labelling> pipeline;
    std::string pipeline_failure;
    bool lex_quadratic = false;
    bool lex_certified = false;
    std::vector<OrderTrial> trials;
    std::vector<std::string> counterexamples;
    std::optional<double> seconds;

    bool closed() const { return brute_force.has_value(); }
    bool passed() const { return counterexamples.empty(); }
};

/// Cross-checks brute force, the clique-complex pipeline and Groebner bases:
/// the two closedness verdicts agree; a closed graph has a quadratic lex
/// basis under the pipeline labelling; a non-closed graph has no quadratic
/// basis under the lex order or any of `trials` random orders; every
/// orientation is acyclic; a quadratic case yields a closed topological
/// labelling; every basis certifies itself. Violations are recorded as
/// counterexamples rather than thrown. Throws CapExceeded.
EquivalenceReport equivalence_suite(const Graph& g, std::size_t trials, RandomSource& rs,
                                    std::size_t cap = default_brute_force_cap, bool timed = false);

/// Self-certification of a computed basis.
bool certify_basis(const GroebnerBasis& gb);

}  // namespace closedgraphs

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "closedgraphs/graph.hpp"

namespace closedgraphs {

using Exponent = std::uint32_t;

/// Exponent vector over 2n variables: slots 0..n-1 are x_1..x_n, slots
/// n..2n-1 are y_1..y_n.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

    /// x_i * y_j over 2n variables, 1-based indices.
    static Monomial xy(std::size_t n, std::size_t i, std::size_t j);

    std::size_t variables() const { return exponents_.size(); }
    Exponent operator[](std::size_t slot) const { return exponents_[slot]; }
    const std::vector<Exponent>& exponents() const { return exponents_; }
    std::uint64_t degree() const;

    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    /// Throws InternalError on exponent overflow.
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient. Throws InternalError unless `divisor` divides *this.
    Monomial operator/(const Monomial& divisor) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exponents_;
};

enum class BaseOrder { lex, deglex, degrevlex };

/// Optional weight vector, then one of lex/deglex/degrevlex over a ranking
/// of the variable slots.
class TermOrder {
public:
    /// `ranking[0]` is the most significant slot. Empty ranking means the
    /// natural x_1 > ... > x_n > y_1 > ... > y_n. Empty weights mean none.
    TermOrder(std::size_t variables, BaseOrder base, std::vector<std::size_t> ranking = {},
              std::vector<std::uint64_t> weights = {});

    /// Lex with x_1 > ... > x_n > y_1 > ... > y_n over 2n variables.
    static TermOrder lex(std::size_t n) { return TermOrder(2 * n, BaseOrder::lex); }

    /// Parses "lex|deglex|degrevlex[:ranking][:weights]" where the ranking is
    /// a comma list of variable names ("y1,x1,...") and the weights a comma
    /// list of 2n integers in slot order. Throws InputError.
    static TermOrder parse(std::string_view spec, std::size_t n);
    std::string to_spec() const;

    std::size_t variables() const { return ranking_.size(); }
    BaseOrder base() const { return base_; }
    const std::vector<std::size_t>& ranking() const { return ranking_; }
    const std::vector<std::uint64_t>& weights() const { return weights_; }

    /// Throws InputError on a length mismatch.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    BaseOrder base_;
    std::vector<std::size_t> ranking_;
    std::vector<std::uint64_t> weights_;
};

std::string_view to_string(BaseOrder base);
std::string variable_name(std::size_t slot, std::size_t n);
std::string to_string(const Monomial& m);

inline std::strong_ordering cmp(const TermOrder& o, const Monomial& a, const Monomial& b) { return o.compare(a, b); }

/// lead - trail with lead > trail under the order it was built for.
struct Binomial {
    Monomial lead;
    Monomial trail;

    std::uint64_t degree() const { return lead.degree() > trail.degree() ? lead.degree() : trail.degree(); }
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orders the pair under `o`; nullopt when the two monomials coincide.
std::optional<Binomial> orient(const Monomial& a, const Monomial& b, const TermOrder& o);

std::string to_string(const Binomial& b);
/// Parses "x1*y2 - x2*y1" over 2n variables and orients it under `o`.
std::optional<Binomial> parse_binomial(std::string_view text, std::size_t n, const TermOrder& o);

/// x_i y_j and x_j y_i for an edge with labels i < j.
struct GeneratorPair {
    std::size_t i;
    std::size_t j;
    Monomial first;   // x_i y_j
    Monomial second;  // x_j y_i
};

/// One pair per edge, sorted by (i, j) under `lab`.
std::vector<GeneratorPair> edge_binomials(const Graph& g, const Labelling& lab);
/// The generators f_ij oriented under `o`.
std::vector<Binomial> oriented_generators(const Graph& g, const Labelling& lab, const TermOrder& o);

std::optional<Binomial> s_polynomial(const Binomial& a, const Binomial& b, const TermOrder& o);

/// Rewrites lead and trail until neither is divisible by a leading monomial
/// of `reducers`; the first divisor by position is always used.
std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& reducers, const TermOrder& o);

struct GroebnerBasis {
    std::vector<Binomial> elements;
    TermOrder order;
    bool reduced = false;

    std::uint64_t max_degree() const;
};

/// Buchberger completion with the normal selection strategy (smallest lcm
/// degree first, ties in creation order) and the coprime-leads criterion.
GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& o);

/// Minimal, tail-reduced basis sorted by descending lead.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// Reduced basis of J_G under `lab` and `o`.
GroebnerBasis reduced_groebner_basis(const Graph& g, const Labelling& lab, const TermOrder& o);

/// Every element has degree 2 in both monomials.
bool is_quadratic(const GroebnerBasis& gb);

/// Re-checks every S-pair, coprime pairs included; true iff all reduce to zero.
bool all_s_pairs_reduce(const GroebnerBasis& gb);

/// Reduced-basis shape: no lead divides another lead, no lead divides a trail.
bool is_interreduced(const GroebnerBasis& gb);

/// Multidegree in N^n with x_i and y_i both counting towards entry i. Throws
/// InternalError when lead and trail disagree.
std::vector<Exponent> multidegree(const Binomial& b);
std::vector<Exponent> multidegree(const Monomial& m);

}  // namespace closedgraphs

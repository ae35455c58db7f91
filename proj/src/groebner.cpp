#include "closedgraphs/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

#include "closedgraphs/error.hpp"

namespace closedgraphs {

Monomial Monomial::xy(std::size_t n, std::size_t i, std::size_t j) {
    Monomial m(2 * n);
    m.exponents_.at(i - 1) += 1;
    m.exponents_.at(n + j - 1) += 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exponents_.size(); ++k) {
        if (exponents_[k] > other.exponents_[k]) return false;
    }
    return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t k = 0; k < exponents_.size(); ++k) {
        if (exponents_[k] != 0 && other.exponents_[k] != 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t k = 0; k < exponents_.size(); ++k) {
        if (other.exponents_[k] > std::numeric_limits<Exponent>::max() - out.exponents_[k]) {
            throw InternalError("exponent overflow");
        }
        out.exponents_[k] += other.exponents_[k];
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw InternalError("inexact monomial division");
    Monomial out = *this;
    for (std::size_t k = 0; k < exponents_.size(); ++k) out.exponents_[k] -= divisor.exponents_[k];
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t k = 0; k < a.exponents_.size(); ++k) {
        out.exponents_[k] = std::max(a.exponents_[k], b.exponents_[k]);
    }
    return out;
}

TermOrder::TermOrder(std::size_t variables, BaseOrder base, std::vector<std::size_t> ranking,
                     std::vector<std::uint64_t> weights)
    : base_(base), ranking_(std::move(ranking)), weights_(std::move(weights)) {
    if (ranking_.empty()) {
        ranking_.resize(variables);
        std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
    }
    std::vector<std::size_t> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k || sorted.size() != variables) {
            throw InputError("variable ranking is not a permutation of the " + std::to_string(variables) + " slots");
        }
    }
    if (!weights_.empty() && weights_.size() != variables) {
        throw InputError("expected " + std::to_string(variables) + " weights");
    }
    if (std::all_of(weights_.begin(), weights_.end(), [](std::uint64_t w) { return w == 0; })) weights_.clear();
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.variables() != ranking_.size() || b.variables() != ranking_.size()) {
        throw InputError("monomial length does not match the term order");
    }
    if (!weights_.empty()) {
        std::uint64_t wa = 0;
        std::uint64_t wb = 0;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            wa += weights_[k] * a[k];
            wb += weights_[k] * b[k];
        }
        if (wa != wb) return wa <=> wb;
    }
    if (base_ != BaseOrder::lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    }
    if (base_ == BaseOrder::degrevlex) {
        for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t slot : ranking_) {
        if (a[slot] != b[slot]) return a[slot] <=> b[slot];
    }
    return std::strong_ordering::equal;
}

std::string_view to_string(BaseOrder base) {
    switch (base) {
        case BaseOrder::lex: return "lex";
        case BaseOrder::deglex: return "deglex";
        case BaseOrder::degrevlex: return "degrevlex";
    }
    return "?";
}

std::string variable_name(std::size_t slot, std::size_t n) {
    return slot < n ? "x" + std::to_string(slot + 1) : "y" + std::to_string(slot - n + 1);
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::size_t parse_variable(std::string_view name, std::size_t n) {
    name = trim(name);
    if (name.size() < 2 || (name.front() != 'x' && name.front() != 'y')) {
        throw InputError("bad variable '" + std::string(name) + "'");
    }
    const auto index = parse_number<std::size_t>(name.substr(1), "variable index");
    if (index < 1 || index > n) throw InputError("variable '" + std::string(name) + "' out of range");
    return (name.front() == 'x' ? 0 : n) + index - 1;
}

}  // namespace

TermOrder TermOrder::parse(std::string_view spec, std::size_t n) {
    const auto parts = split(spec, ':');
    if (parts.size() > 3) throw InputError("bad term order '" + std::string(spec) + "'");
    BaseOrder base;
    if (parts[0] == "lex") {
        base = BaseOrder::lex;
    } else if (parts[0] == "deglex") {
        base = BaseOrder::deglex;
    } else if (parts[0] == "degrevlex") {
        base = BaseOrder::degrevlex;
    } else {
        throw InputError("unknown term order '" + std::string(parts[0]) + "'");
    }
    std::vector<std::size_t> ranking;
    if (parts.size() > 1 && !trim(parts[1]).empty()) {
        for (auto name : split(parts[1], ',')) ranking.push_back(parse_variable(name, n));
    }
    std::vector<std::uint64_t> weights;
    if (parts.size() > 2 && !trim(parts[2]).empty()) {
        for (auto w : split(parts[2], ',')) weights.push_back(parse_number<std::uint64_t>(w, "weight"));
    }
    return TermOrder(2 * n, base, std::move(ranking), std::move(weights));
}

std::string TermOrder::to_spec() const {
    const std::size_t n = ranking_.size() / 2;
    std::string out(to_string(base_));
    out += ':';
    for (std::size_t k = 0; k < ranking_.size(); ++k) {
        if (k) out += ',';
        out += variable_name(ranking_[k], n);
    }
    if (!weights_.empty()) {
        out += ':';
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(weights_[k]);
        }
    }
    return out;
}

std::string to_string(const Monomial& m) {
    const std::size_t n = m.variables() / 2;
    std::string out;
    for (std::size_t slot = 0; slot < m.variables(); ++slot) {
        if (m[slot] == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(slot, n);
        if (m[slot] > 1) out += '^' + std::to_string(m[slot]);
    }
    return out.empty() ? "1" : out;
}

std::optional<Binomial> orient(const Monomial& a, const Monomial& b, const TermOrder& o) {
    const auto c = o.compare(a, b);
    if (c == 0) return std::nullopt;
    return c > 0 ? Binomial{a, b} : Binomial{b, a};
}

std::string to_string(const Binomial& b) { return to_string(b.lead) + " - " + to_string(b.trail); }

namespace {

Monomial parse_monomial(std::string_view text, std::size_t n) {
    text = trim(text);
    Monomial m(2 * n);
    if (text == "1") return m;
    for (auto factor : split(text, '*')) {
        const auto caret = factor.find('^');
        const std::size_t slot = parse_variable(factor.substr(0, caret), n);
        const Exponent power =
            caret == std::string_view::npos ? 1 : parse_number<Exponent>(factor.substr(caret + 1), "exponent");
        std::vector<Exponent> e(2 * n, 0);
        e[slot] = power;
        m = m * Monomial(std::move(e));
    }
    return m;
}

}  // namespace

std::optional<Binomial> parse_binomial(std::string_view text, std::size_t n, const TermOrder& o) {
    const auto minus = text.find(" - ");
    if (minus == std::string_view::npos) throw InputError("binomial must have the form 'm1 - m2'");
    return orient(parse_monomial(text.substr(0, minus), n), parse_monomial(text.substr(minus + 3), n), o);
}

std::vector<GeneratorPair> edge_binomials(const Graph& g, const Labelling& lab) {
    const auto labels = lab.labels_for(g);
    const std::size_t n = g.size();
    std::vector<GeneratorPair> out;
    for (const auto& [u, v] : g.edges()) {
        const auto i = static_cast<std::size_t>(std::min(labels[u], labels[v]));
        const auto j = static_cast<std::size_t>(std::max(labels[u], labels[v]));
        out.push_back(GeneratorPair{i, j, Monomial::xy(n, i, j), Monomial::xy(n, j, i)});
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorPair& a, const GeneratorPair& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return out;
}

std::vector<Binomial> oriented_generators(const Graph& g, const Labelling& lab, const TermOrder& o) {
    std::vector<Binomial> out;
    for (const auto& pair : edge_binomials(g, lab)) out.push_back(*orient(pair.first, pair.second, o));
    return out;
}

std::optional<Binomial> s_polynomial(const Binomial& a, const Binomial& b, const TermOrder& o) {
    const Monomial l = lcm(a.lead, b.lead);
    return orient((l / a.lead) * a.trail, (l / b.lead) * b.trail, o);
}

namespace {

const Binomial* first_divisor(const Monomial& m, const std::vector<Binomial>& reducers) {
    for (const auto& r : reducers) {
        if (r.lead.divides(m)) return &r;
    }
    return nullptr;
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& b, const std::vector<Binomial>& reducers, const TermOrder& o) {
    Binomial current = b;
    while (true) {
        if (const Binomial* r = first_divisor(current.lead, reducers)) {
            auto next = orient((current.lead / r->lead) * r->trail, current.trail, o);
            if (!next) return std::nullopt;
            current = std::move(*next);
            continue;
        }
        if (const Binomial* r = first_divisor(current.trail, reducers)) {
            // The rewritten trail is smaller than the old one, so the lead stays.
            current.trail = (current.trail / r->lead) * r->trail;
            continue;
        }
        return current;
    }
}

std::uint64_t GroebnerBasis::max_degree() const {
    std::uint64_t out = 0;
    for (const auto& e : elements) out = std::max(out, e.degree());
    return out;
}

GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& o) {
    struct Pair {
        std::uint64_t degree;
        std::uint64_t sequence;
        std::size_t first;
        std::size_t second;
        bool operator>(const Pair& other) const {
            return std::tie(degree, sequence) > std::tie(other.degree, other.sequence);
        }
    };
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
    std::uint64_t sequence = 0;
    std::vector<Binomial> basis;

    auto add = [&](Binomial b) {
        const std::size_t index = basis.size();
        basis.push_back(std::move(b));
        for (std::size_t k = 0; k < index; ++k) {
            if (basis[k].lead.coprime_with(basis[index].lead)) continue;
            pairs.push(Pair{lcm(basis[k].lead, basis[index].lead).degree(), sequence++, k, index});
        }
    };

    for (const auto& g : generators) {
        if (o.compare(g.lead, g.trail) <= 0) throw InputError("generator is not oriented under the term order");
        if (std::find(basis.begin(), basis.end(), g) == basis.end()) add(g);
    }
    while (!pairs.empty()) {
        const Pair p = pairs.top();
        pairs.pop();
        auto s = s_polynomial(basis[p.first], basis[p.second], o);
        if (!s) continue;
        if (auto reduced = normal_form(*s, basis, o)) add(std::move(*reduced));
    }
    return GroebnerBasis{std::move(basis), o, false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    const TermOrder& o = gb.order;
    std::vector<Binomial> sorted = gb.elements;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Binomial& a, const Binomial& b) { return o.compare(a.lead, b.lead) < 0; });
    // Divisors precede their multiples in ascending order.
    std::vector<Binomial> minimal;
    for (auto& b : sorted) {
        const bool redundant =
            std::any_of(minimal.begin(), minimal.end(), [&](const Binomial& m) { return m.lead.divides(b.lead); });
        if (!redundant) minimal.push_back(std::move(b));
    }
    std::vector<Binomial> reduced;
    for (const auto& b : minimal) {
        Binomial tail_reduced = b;
        while (const Binomial* r = first_divisor(tail_reduced.trail, minimal)) {
            tail_reduced.trail = (tail_reduced.trail / r->lead) * r->trail;
        }
        if (tail_reduced.lead == tail_reduced.trail) throw InternalError("basis element reduced to zero");
        reduced.push_back(std::move(tail_reduced));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Binomial& a, const Binomial& b) { return o.compare(a.lead, b.lead) > 0; });
    return GroebnerBasis{std::move(reduced), o, true};
}

GroebnerBasis reduced_groebner_basis(const Graph& g, const Labelling& lab, const TermOrder& o) {
    return reduce_basis(buchberger(oriented_generators(g, lab, o), o));
}

bool is_quadratic(const GroebnerBasis& gb) {
    return std::all_of(gb.elements.begin(), gb.elements.end(),
                       [](const Binomial& b) { return b.lead.degree() == 2 && b.trail.degree() == 2; });
}

bool all_s_pairs_reduce(const GroebnerBasis& gb) {
    for (std::size_t a = 0; a < gb.elements.size(); ++a) {
        for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
            auto s = s_polynomial(gb.elements[a], gb.elements[b], gb.order);
            if (s && normal_form(*s, gb.elements, gb.order)) return false;
        }
    }
    return true;
}

bool is_interreduced(const GroebnerBasis& gb) {
    for (std::size_t a = 0; a < gb.elements.size(); ++a) {
        for (std::size_t b = 0; b < gb.elements.size(); ++b) {
            if (gb.elements[a].lead.divides(gb.elements[b].trail)) return false;
            if (a != b && gb.elements[a].lead.divides(gb.elements[b].lead)) return false;
        }
    }
    return true;
}

std::vector<Exponent> multidegree(const Monomial& m) {
    const std::size_t n = m.variables() / 2;
    std::vector<Exponent> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] + m[n + i];
    return out;
}

std::vector<Exponent> multidegree(const Binomial& b) {
    auto lead = multidegree(b.lead);
    if (lead != multidegree(b.trail)) {
        throw InternalError("binomial " + to_string(b) + " is not multihomogeneous");
    }
    return lead;
}

}  // namespace closedgraphs

#include "epcd/objectives.hpp"

#include <cmath>
#include <string>

#include "epcd/error.hpp"

namespace epcd {

BlockCounts block_counts(const Graph& graph, std::span<const int> labels) {
    validate_labels(labels, graph.num_nodes());
    if (graph.num_nodes() == 0) throw Error("block_counts: empty graph");
    BlockCounts c;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto u = static_cast<NodeId>(i);
        const int own = labels[i];
        (own > 0 ? c.n1 : c.n2) += 1;
        for (NodeId v : graph.neighbors(u)) {
            if (labels[v] != own) {
                if (own > 0) ++c.o12;
            } else if (own > 0) {
                ++c.o11;
            } else {
                ++c.o22;
            }
        }
    }
    return c;
}

BlockCounts flip_update(const BlockCounts& counts, const Graph& graph, std::span<int> labels, NodeId i) {
    const int own = labels[i];
    std::int64_t same = 0;
    for (NodeId v : graph.neighbors(i)) same += labels[v] == own;
    const std::int64_t other = static_cast<std::int64_t>(graph.degree(i)) - same;

    BlockCounts c = counts;
    if (own > 0) {
        c.o11 -= 2 * same;
        c.o22 += 2 * other;
        --c.n1;
        ++c.n2;
    } else {
        c.o22 -= 2 * same;
        c.o11 += 2 * other;
        --c.n2;
        ++c.n1;
    }
    c.o12 += same - other;
    labels[i] = -own;
    return c;
}

Criterion parse_criterion(std::string_view name) {
    if (name == "bm" || name == "BM") return Criterion::BM;
    if (name == "dc" || name == "DC") return Criterion::DC;
    if (name == "ng" || name == "NG") return Criterion::NG;
    if (name == "ex" || name == "EX") return Criterion::EX;
    throw Error("unknown criterion '" + std::string(name) + "' (expected bm, dc, ng or ex)");
}

std::string_view criterion_name(Criterion c) {
    switch (c) {
        case Criterion::BM: return "bm";
        case Criterion::DC: return "dc";
        case Criterion::NG: return "ng";
        case Criterion::EX: return "ex";
    }
    return "?";
}

namespace {

// x log x with 0 log 0 = 0.
double xlogx(std::int64_t x) {
    if (x <= 0) return 0.0;
    const auto v = static_cast<double>(x);
    return v * std::log(v);
}

}  // namespace

// Terms are paired so that swapping the communities only swaps operands of a single
// addition; the result is then bitwise symmetric.
double q_dc(const BlockCounts& c) {
    const double within = xlogx(c.o11) + xlogx(c.o22);
    const double degrees = xlogx(c.o1()) + xlogx(c.o2());
    return within + 2.0 * xlogx(c.o12) - 2.0 * degrees;
}

double q_bm(const BlockCounts& c) {
    auto size_term = [](std::int64_t ok, std::int64_t nk) {
        if (ok == 0) return 0.0;
        if (nk == 0) return kInvalidCandidate;
        return static_cast<double>(ok) * std::log(static_cast<double>(ok) / static_cast<double>(nk));
    };
    const double sizes = size_term(c.o1(), c.n1) + size_term(c.o2(), c.n2);
    if (std::isinf(sizes)) return kInvalidCandidate;
    return q_dc(c) + 2.0 * sizes;
}

double q_ng(const BlockCounts& c) {
    const std::int64_t m = c.o1() + c.o2();
    if (m <= 0) throw Error("modularity is undefined on a graph without edges");
    const auto o1 = static_cast<double>(c.o1());
    const auto o2 = static_cast<double>(c.o2());
    return 2.0 * (o1 * o2) / static_cast<double>(m) - 2.0 * static_cast<double>(c.o12);
}

double q_ex(const BlockCounts& c) {
    if (c.n1 == 0) return kInvalidCandidate;
    return static_cast<double>(c.n2) / static_cast<double>(c.n1) * static_cast<double>(c.o11) -
           static_cast<double>(c.o12);
}

double evaluate(Criterion criterion, const BlockCounts& counts) {
    switch (criterion) {
        case Criterion::BM: return q_bm(counts);
        case Criterion::DC: return q_dc(counts);
        case Criterion::NG: return q_ng(counts);
        case Criterion::EX: return q_ex(counts);
    }
    throw Error("unknown criterion");
}

}  // namespace epcd

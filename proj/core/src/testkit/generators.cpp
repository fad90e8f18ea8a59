#include "bcmc/testkit/generators.hpp"

#include <charconv>
#include <vector>

#include "bcmc/rng.hpp"

namespace bcmc::testkit {

namespace {

std::vector<std::string_view> split_fields(std::string_view text) {
    std::vector<std::string_view> fields;
    while (true) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            fields.push_back(text);
            return fields;
        }
        fields.push_back(text.substr(0, colon));
        text.remove_prefix(colon + 1);
    }
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidParameterError(std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

double parse_probability(std::string_view token) {
    // from_chars for double needs GCC>=11 with charconv FP support; parse via stod
    // to stay portable and validate the full token.
    std::string s(token);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &consumed);
    } catch (const std::exception&) {
        throw InvalidParameterError("malformed probability '" + s + "'");
    }
    if (consumed != s.size() || !(value >= 0.0 && value <= 1.0)) {
        throw InvalidParameterError("edge probability must be in [0, 1]");
    }
    return value;
}

std::vector<std::string> letter_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    }
    return labels;
}

void add_clique(std::vector<EdgeSpec>& edges, Vertex first, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            edges.push_back({static_cast<Vertex>(first + i), static_cast<Vertex>(first + j)});
        }
    }
}

Graph generate_gnp(const GeneratorSpec& spec) {
    if (spec.n < 2) throw InvalidParameterError("gnp needs at least 2 vertices");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < spec.n; ++i) labels.push_back("v" + std::to_string(i));

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SplitMix64 rng = SplitMix64::derive(spec.seed, static_cast<std::uint64_t>(attempt));
        std::vector<EdgeSpec> edges;
        for (std::size_t i = 0; i < spec.n; ++i) {
            for (std::size_t j = i + 1; j < spec.n; ++j) {
                if (rng.uniform01() < spec.p) {
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                }
            }
        }
        if (edges.empty()) continue;
        Graph g(labels, edges, false);
        if (component_sizes(g).size() == 1) return g;
    }
    throw InvalidParameterError("gnp(" + std::to_string(spec.n) + ", p=" + std::to_string(spec.p) +
                                "): no connected sample after 1000 attempts");
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
    auto fields = split_fields(text);
    const std::string_view family = fields[0];
    GeneratorSpec spec;

    auto expect_fields = [&](std::size_t count) {
        if (fields.size() != count) {
            throw InvalidParameterError("generator spec '" + std::string(text) + "' has wrong arity");
        }
    };

    if (family == "path" || family == "cycle" || family == "star" || family == "complete") {
        expect_fields(2);
        spec.family = family == "path"    ? GraphFamily::path
                      : family == "cycle" ? GraphFamily::cycle
                      : family == "star"  ? GraphFamily::star
                                          : GraphFamily::complete;
        spec.n = parse_number<std::size_t>(fields[1], "vertex count");
    } else if (family == "barbell") {
        expect_fields(3);
        spec.family = GraphFamily::barbell;
        spec.k1 = parse_number<std::size_t>(fields[1], "clique size");
        spec.bridge = parse_number<std::size_t>(fields[2], "bridge length");
    } else if (family == "two_blocks_cut") {
        expect_fields(3);
        spec.family = GraphFamily::two_blocks_cut;
        spec.k1 = parse_number<std::size_t>(fields[1], "block size");
        spec.k2 = parse_number<std::size_t>(fields[2], "block size");
    } else if (family == "gnp") {
        expect_fields(4);
        spec.family = GraphFamily::gnp;
        spec.n = parse_number<std::size_t>(fields[1], "vertex count");
        spec.p = parse_probability(fields[2]);
        spec.seed = parse_number<std::uint64_t>(fields[3], "seed");
    } else {
        throw InvalidParameterError("unknown generator family '" + std::string(family) + "'");
    }
    return spec;
}

std::string to_string(const GeneratorSpec& spec) {
    switch (spec.family) {
        case GraphFamily::path: return "path:" + std::to_string(spec.n);
        case GraphFamily::cycle: return "cycle:" + std::to_string(spec.n);
        case GraphFamily::star: return "star:" + std::to_string(spec.n);
        case GraphFamily::complete: return "complete:" + std::to_string(spec.n);
        case GraphFamily::barbell:
            return "barbell:" + std::to_string(spec.k1) + ":" + std::to_string(spec.bridge);
        case GraphFamily::two_blocks_cut:
            return "two_blocks_cut:" + std::to_string(spec.k1) + ":" + std::to_string(spec.k2);
        case GraphFamily::gnp: {
            std::string p = std::to_string(spec.p);
            p.erase(p.find_last_not_of('0') + 1);
            if (!p.empty() && p.back() == '.') p.pop_back();
            return "gnp:" + std::to_string(spec.n) + ":" + p + ":" + std::to_string(spec.seed);
        }
    }
    throw InvalidParameterError("unknown generator family");
}

Graph generate(const GeneratorSpec& spec) {
    std::vector<EdgeSpec> edges;
    switch (spec.family) {
        case GraphFamily::path: {
            if (spec.n < 2) throw InvalidParameterError("path needs at least 2 vertices");
            for (std::size_t i = 0; i + 1 < spec.n; ++i) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
            }
            return Graph(letter_labels(spec.n), edges, false);
        }
        case GraphFamily::cycle: {
            if (spec.n < 3) throw InvalidParameterError("cycle needs at least 3 vertices");
            for (std::size_t i = 0; i < spec.n; ++i) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % spec.n)});
            }
            return Graph(letter_labels(spec.n), edges, false);
        }
        case GraphFamily::star: {
            if (spec.n < 2) throw InvalidParameterError("star needs at least 2 vertices");
            std::vector<std::string> labels{"c"};
            for (std::size_t i = 1; i < spec.n; ++i) labels.push_back("l" + std::to_string(i));
            for (std::size_t i = 1; i < spec.n; ++i) {
                edges.push_back({0, static_cast<Vertex>(i)});
            }
            return Graph(std::move(labels), edges, false);
        }
        case GraphFamily::complete: {
            if (spec.n < 2) throw InvalidParameterError("complete graph needs at least 2 vertices");
            add_clique(edges, 0, spec.n);
            return Graph(letter_labels(spec.n), edges, false);
        }
        case GraphFamily::barbell: {
            if (spec.k1 < 2) throw InvalidParameterError("barbell cliques need at least 2 vertices");
            if (spec.bridge < 1) throw InvalidParameterError("barbell bridge needs at least 1 vertex");
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < spec.k1; ++i) labels.push_back("a" + std::to_string(i));
            for (std::size_t i = 0; i < spec.bridge; ++i) labels.push_back("r" + std::to_string(i + 1));
            for (std::size_t i = 0; i < spec.k1; ++i) labels.push_back("b" + std::to_string(i));
            const Vertex bridge_first = static_cast<Vertex>(spec.k1);
            const Vertex b_first = static_cast<Vertex>(spec.k1 + spec.bridge);
            add_clique(edges, 0, spec.k1);
            add_clique(edges, b_first, spec.k1);
            edges.push_back({0, bridge_first});
            for (std::size_t i = 0; i + 1 < spec.bridge; ++i) {
                edges.push_back({static_cast<Vertex>(bridge_first + i), static_cast<Vertex>(bridge_first + i + 1)});
            }
            edges.push_back({static_cast<Vertex>(bridge_first + spec.bridge - 1), b_first});
            return Graph(std::move(labels), edges, false);
        }
        case GraphFamily::two_blocks_cut: {
            if (spec.k1 < 1 || spec.k2 < 1) throw InvalidParameterError("blocks need at least 1 vertex");
            std::vector<std::string> labels{"r"};
            for (std::size_t i = 0; i < spec.k1; ++i) labels.push_back("a" + std::to_string(i));
            for (std::size_t i = 0; i < spec.k2; ++i) labels.push_back("b" + std::to_string(i));
            const Vertex a_first = 1;
            const Vertex b_first = static_cast<Vertex>(1 + spec.k1);
            add_clique(edges, a_first, spec.k1);
            add_clique(edges, b_first, spec.k2);
            for (std::size_t i = 0; i < spec.k1 + spec.k2; ++i) {
                edges.push_back({0, static_cast<Vertex>(1 + i)});
            }
            return Graph(std::move(labels), edges, false);
        }
        case GraphFamily::gnp: return generate_gnp(spec);
    }
    throw InvalidParameterError("unknown generator family");
}

Graph generate(std::string_view spec_text) { return generate(parse_generator_spec(spec_text)); }

}  // namespace bcmc::testkit

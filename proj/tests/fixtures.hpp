#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indub/graph.hpp"
#include "indub/graph6.hpp"
#include "indub/spectral.hpp"

#ifndef TEST_DATA_DIR
#error "TEST_DATA_DIR must be defined"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing test data " + name);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

inline std::vector<indub::Graph> read_graph6_file(const std::string& name)
{
    std::vector<indub::Graph> out;
    for (const auto& line : read_lines(name)) out.push_back(indub::parse_graph6(line));
    return out;
}

struct MinedInstance {
    std::string graph6, check, expected, provenance;
};

inline std::vector<MinedInstance> mined()
{
    std::vector<MinedInstance> out;
    for (const auto& line : read_lines("mined.tsv")) {
        std::istringstream fields(line);
        MinedInstance m;
        std::getline(fields, m.graph6, '\t');
        std::getline(fields, m.check, '\t');
        std::getline(fields, m.expected, '\t');
        std::getline(fields, m.provenance);
        out.push_back(m);
    }
    return out;
}

inline indub::Graph family(const std::string& spec) { return indub::generate(indub::FamilySpec::parse(spec)); }

/// The named graph set used throughout the acceptance and property tests.
inline std::vector<std::pair<std::string, indub::Graph>> named_fixtures()
{
    using namespace indub;
    return {
        {"C6", cycle_graph(6)},
        {"C12", cycle_graph(12)},
        {"K4,4", complete_multipartite({4, 4})},
        {"crown(4)", family("crown:4")},
        {"grid(3,4)", family("grid:3,4")},
        {"complement grid(2,5)", complement(family("grid:2,5"))},
        {"K2,2,2", complete_multipartite({2, 2, 2})},
        {"C4 x K5", cartesian_product(cycle_graph(4), complete_graph(5))},
        {"double K2,2,2", bipartite_double(complete_multipartite({2, 2, 2}))},
    };
}

/// Named fixtures plus a few extra regular graphs used by property tests.
inline std::vector<std::pair<std::string, indub::Graph>> extended_fixtures()
{
    using namespace indub;
    auto out = named_fixtures();
    out.emplace_back("C4", cycle_graph(4));
    out.emplace_back("C5", cycle_graph(5));
    out.emplace_back("C8", cycle_graph(8));
    out.emplace_back("C9", cycle_graph(9));
    out.emplace_back("K5", complete_graph(5));
    out.emplace_back("Petersen", family("petersen"));
    out.emplace_back("complement grid(3,4)", complement(family("grid:3,4")));
    out.emplace_back("double K3,3,3", bipartite_double(complete_multipartite({3, 3, 3})));
    out.emplace_back("K3,3,3", complete_multipartite({3, 3, 3}));
    out.emplace_back("grid(2,3)", family("grid:2,3"));
    return out;
}

/// Spectrum as a value -> multiplicity map with values rounded to integers;
/// only meaningful for integral spectra.
inline std::map<long long, std::size_t> integral_spectrum(const indub::Spectrum& s)
{
    std::map<long long, std::size_t> out;
    for (const auto& c : s.classes) out[std::llround(c.value)] += c.multiplicity;
    return out;
}

} // namespace fixtures

#include "indub/graph6.hpp"

#include <iterator>
#include <sstream>

#include "indub/errors.hpp"

namespace indub {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size()) throw ParseError("graph6 input truncated at byte " + std::to_string(pos), pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > 126)
        throw ParseError("graph6 byte " + std::to_string(c) + " out of range at offset " +
                             std::to_string(pos),
                         pos);
    return c - kOffset;
}

std::string encode_order(std::size_t n)
{
    std::string out;
    auto push_bits = [&](std::size_t value, int sextets) {
        for (int s = sextets - 1; s >= 0; --s)
            out.push_back(static_cast<char>(((value >> (6 * s)) & 63) + kOffset));
    };
    if (n <= 62) {
        push_bits(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        push_bits(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        push_bits(n, 6);
    }
    return out;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() <= base) throw ParseError("empty graph6 string", base);

    std::size_t pos = base;
    std::size_t n = 0;
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = static_cast<std::size_t>(sextet(text, pos));
        pos += 1;
    } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
        for (int s = 0; s < 6; ++s) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + 2 + s));
        pos += 8;
    } else {
        for (int s = 0; s < 3; ++s) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + 1 + s));
        pos += 4;
    }
    if (n == 0) throw ParseError("graph6 order 0 is not supported", base);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos != payload)
        throw ParseError("graph6 header claims " + std::to_string(n) + " vertices (" +
                             std::to_string(payload) + " payload bytes) but " +
                             std::to_string(text.size() - pos) + " bytes follow",
                         pos);

    const auto v = static_cast<Eigen::Index>(n);
    IntMatrix adj = IntMatrix::Zero(v, v);
    std::size_t bit = 0;
    for (Eigen::Index j = 1; j < v; ++j) {
        for (Eigen::Index i = 0; i < j; ++i, ++bit) {
            const int value = sextet(text, pos + bit / 6);
            if ((value >> (5 - static_cast<int>(bit % 6))) & 1) adj(i, j) = adj(j, i) = 1;
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + payload - 1;
        const int pad_mask = (1 << (6 - static_cast<int>(bits % 6))) - 1;
        if (sextet(text, last) & pad_mask)
            throw ParseError("graph6 padding bits nonzero at offset " + std::to_string(last), last);
    }
    return Graph(std::move(adj));
}

std::string write_graph6(const Graph& g)
{
    const auto n = g.order();
    std::string out = encode_order(n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("edge list is empty", 1);
    std::size_t n = 0;
    std::size_t m = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra))
            throw ParseError("edge list header must be 'n m' (line " + std::to_string(line_no) + ")",
                             line_no);
    }
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e) {
        if (!next_line())
            throw ParseError("edge list ends after " + std::to_string(e) + " of " +
                                 std::to_string(m) + " edges",
                             line_no + 1);
        std::istringstream row(line);
        long long u = -1;
        long long w = -1;
        std::string extra;
        if (!(row >> u >> w) || (row >> extra) || u < 0 || w < 0)
            throw ParseError("bad edge on line " + std::to_string(line_no), line_no);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    }
    try {
        return build_graph(n, edges);
    } catch (const PreconditionError& err) {
        throw ParseError(err.what(), line_no);
    }
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in)
{
    std::string first;
    while (std::getline(in, first))
        if (first.find_first_not_of(" \t\r") != std::string::npos) break;
    if (first.find_first_not_of(" \t\r") == std::string::npos) throw ParseError("no graph in input", 1);
    std::istringstream probe(first);
    std::size_t n = 0;
    std::size_t m = 0;
    std::string extra;
    if (probe >> n >> m && !(probe >> extra)) {
        std::string remaining{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        std::istringstream rest(first + '\n' + remaining);
        return parse_edge_list(rest);
    }
    while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
    return parse_graph6(first);
}

} // namespace indub

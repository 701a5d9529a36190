#include "regspan/edge_list_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regspan {

BipartiteGraph read_edge_list(std::istream& in) {
    long long n = 0;
    if (!(in >> n)) throw std::runtime_error("edge list: missing size header");
    if (n <= 0 || n > 1000000) throw std::runtime_error("edge list: size header out of range");
    BipartiteGraph g(static_cast<int>(n));
    long long a = 0, b = 0;
    while (in >> a) {
        if (!(in >> b)) throw std::runtime_error("edge list: dangling A-index without B-index");
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw std::runtime_error("edge list: vertex index out of range");
        }
        if (g.has_edge(static_cast<int>(a), static_cast<int>(b))) {
            std::ostringstream msg;
            msg << "edge list: duplicate edge " << a << ' ' << b;
            throw std::runtime_error(msg.str());
        }
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    if (!in.eof()) throw std::runtime_error("edge list: malformed token");
    return g;
}

BipartiteGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("edge list: cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
    out << g.size() << '\n';
    std::vector<int> row;
    for (int a = 0; a < g.size(); ++a) {
        row = g.neighbors_a(a);
        std::sort(row.begin(), row.end());
        for (int b : row) out << a << ' ' << b << '\n';
    }
}

void write_edge_list_file(const std::string& path, const BipartiteGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("edge list: cannot open " + path + " for writing");
    write_edge_list(out, g);
}

}  // namespace regspan

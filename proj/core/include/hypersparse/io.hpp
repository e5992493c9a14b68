// io.hpp - text formats for hypergraphs
//
// Undirected (.hgr):  line 1 "hgr <n> <m> <w>", w in {0,1}; then m lines
// "[weight] v1 v2 ... vk" (weight present iff w=1). Ids are 0-based, repeats
// allowed. '#' begins a comment line.
// Directed (.dhgr):   line 1 "dhgr <n> <m> <w>"; then m lines
// "[weight] t1 ... tk | h1 ... hj".
#ifndef HYPERSPARSE_IO_HPP
#define HYPERSPARSE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hypersparse/directed_hypergraph.hpp"
#include "hypersparse/hypergraph.hpp"

namespace hypersparse {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

DirectedHypergraph read_directed_hypergraph(std::istream& in);
DirectedHypergraph read_directed_hypergraph_file(const std::string& path);
void write_directed_hypergraph(std::ostream& out, const DirectedHypergraph& d);
void write_directed_hypergraph_file(const std::string& path, const DirectedHypergraph& d);

}  // namespace hypersparse

#endif

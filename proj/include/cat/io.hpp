#ifndef CAT_IO_HPP
#define CAT_IO_HPP

#include <iosfwd>
#include <string>

#include "cat/arborescence.hpp"
#include "cat/dataset.hpp"
#include "cat/graph.hpp"
#include "cat/identifiability.hpp"
#include "cat/inference.hpp"
#include "cat/learner.hpp"
#include "cat/metrics.hpp"

namespace cat {

// Numbers are written with 17 significant digits, so every value read back is
// bit-identical. Graph files use 1-indexed node labels.

// Comma-separated with a header row. Throws FormatError on ragged rows,
// unparsable fields or a missing header, NonFiniteInput on nan/inf.
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const Dataset& d);
void write_csv_file(const std::string& path, const Dataset& d);

// {"p": p, "root": r, "edges": [[j, i], ...]} with edges sorted.
std::string tree_json(const DirectedTree& t);
// Same layout; "root" is present only when exactly one node has no parent.
std::string dag_json(const Dag& g);
// Accepts either layout. read_tree throws graph errors when the edges do not form a tree.
DirectedTree read_tree_json(const std::string& text);
Dag read_dag_json(const std::string& text);

// "from,to,weight" rows for every non-forbidden off-diagonal entry.
std::string weights_csv(const WeightMatrix& w);
WeightMatrix read_weights_csv(std::istream& in, std::size_t p);

std::string learn_json(const LearnResult& r);
std::string gap_json(const GapReport& g);
std::string test_json(const TestReport& r);
std::string metrics_json(const MetricReport& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// %.17g formatting
std::string format_number(double v);

}  // namespace cat

#endif  // CAT_IO_HPP

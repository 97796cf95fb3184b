#ifndef GSTAR_EXPORT_HPP
#define GSTAR_EXPORT_HPP

#include "gstar/invariants.hpp"

#include <map>
#include <string>
#include <vector>

namespace gstar {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(const std::string& text); // throws InvalidArgument

// Sequences of c_n^# or l_n^# over an inclusive n-range. The table form is a
// single space-joined line; CSV and JSON are byte-deterministic.
std::string render_sequence(const std::string& column, const std::vector<int>& ns,
                            const std::vector<std::string>& values, OutputFormat format);

// Cocharacter tables, one per n. CSV columns:
//   n,multidegree,multipartition,multiplicity,character_degree,c_multideg,
//   c_n_sharp,l_n_sharp
// Detail rows leave the last two empty; one summary row per n fills them.
std::string render_cocharacter_tables(const std::vector<CocharacterTable>& tables,
                                      const FiniteAbelianGroup& group,
                                      const std::map<std::string, GroupElement>& names,
                                      OutputFormat format);

} // namespace gstar

#endif

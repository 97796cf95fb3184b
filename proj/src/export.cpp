#include "gstar/export.hpp"

#include "gstar/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace gstar {

using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw InvalidArgument("unknown format \"" + text + "\" (want table, csv or json)");
}

std::string render_sequence(const std::string& column, const std::vector<int>& ns,
                            const std::vector<std::string>& values, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::table:
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) os << " ";
                os << values[i];
            }
            os << "\n";
            break;
        case OutputFormat::csv:
            os << "n," << column << "\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                os << ns[i] << "," << values[i] << "\n";
            break;
        case OutputFormat::json: {
            ordered_json j = ordered_json::array();
            for (std::size_t i = 0; i < values.size(); ++i) {
                ordered_json row;
                row["n"] = ns[i];
                row[column] = values[i];
                j.push_back(row);
            }
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

std::string render_cocharacter_tables(const std::vector<CocharacterTable>& tables,
                                      const FiniteAbelianGroup& group,
                                      const std::map<std::string, GroupElement>& names,
                                      OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::table:
            for (const CocharacterTable& t : tables) {
                os << "n = " << t.n << "\n";
                for (const CocharacterRow& r : t.rows) {
                    os << "  <n> = (" << r.multidegree.str() << ")  "
                       << (r.multiplicity > 1 ? std::to_string(r.multiplicity) + "*" : "")
                       << "chi_" << multipartition_str(r.multipartition, group, names)
                       << "  deg = " << r.character_degree << "\n";
                }
                os << "  c_" << t.n << "^# = " << t.c_n_sharp.get_str() << "   l_" << t.n
                   << "^# = " << t.l_n_sharp << "\n";
            }
            break;
        case OutputFormat::csv:
            os << "n,multidegree,multipartition,multiplicity,character_degree,c_multideg,"
                  "c_n_sharp,l_n_sharp\n";
            for (const CocharacterTable& t : tables) {
                for (const CocharacterRow& r : t.rows) {
                    os << t.n << "," << r.multidegree.str() << ",\""
                       << multipartition_str(r.multipartition, group, names) << "\","
                       << r.multiplicity << "," << r.character_degree << ","
                       << r.multidegree_codim << ",,\n";
                }
                os << t.n << ",,,,,," << t.c_n_sharp.get_str() << "," << t.l_n_sharp << "\n";
            }
            break;
        case OutputFormat::json: {
            ordered_json out = ordered_json::array();
            for (const CocharacterTable& t : tables) {
                ordered_json jt;
                jt["n"] = t.n;
                ordered_json rows = ordered_json::array();
                for (const CocharacterRow& r : t.rows) {
                    ordered_json jr;
                    jr["multidegree"] = r.multidegree.str();
                    jr["multipartition"] = multipartition_str(r.multipartition, group, names);
                    jr["multiplicity"] = r.multiplicity;
                    jr["character_degree"] = r.character_degree;
                    jr["c_multideg"] = r.multidegree_codim;
                    rows.push_back(jr);
                }
                jt["rows"] = rows;
                jt["c_n_sharp"] = t.c_n_sharp.get_str();
                jt["l_n_sharp"] = t.l_n_sharp;
                out.push_back(jt);
            }
            os << out.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

} // namespace gstar

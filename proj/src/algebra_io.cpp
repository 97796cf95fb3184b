#include "gstar/algebra_io.hpp"

#include "gstar/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gstar {

namespace {

using nlohmann::ordered_json;

Rational parse_rational_or_throw(const std::string& text, const std::string& where) {
    auto q = parse_rational(text);
    if (!q) throw ParseError("malformed rational \"" + text + "\" in " + where);
    return *q;
}

} // namespace

GStarAlgebra algebra_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::vector<int> orders = j.at("group").get<std::vector<int>>();
        for (int m : orders)
            if (m < 1) throw ParseError("group orders must be >= 1");
        FiniteAbelianGroup group(orders);
        int dim = j.at("dim").get<int>();
        if (dim < 0) throw ParseError("dim must be >= 0");
        GStarAlgebra a(j.value("name", std::string("algebra")), group, dim);

        if (j.contains("basis")) {
            auto labels = j.at("basis").get<std::vector<std::string>>();
            if (static_cast<int>(labels.size()) != dim)
                throw ParseError("basis label count does not match dim");
            for (int i = 0; i < dim; ++i) a.set_label(i, labels[i]);
        }

        auto grading = j.at("grading").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(grading.size()) != dim)
            throw ParseError("grading length does not match dim");
        for (int i = 0; i < dim; ++i) {
            if (!group.contains(grading[i]))
                throw ParseError("grading entry " + std::to_string(i) +
                                 " is not a canonical element of the group");
            a.set_degree(i, grading[i]);
        }

        auto inv_rows = j.at("involution").get<std::vector<std::vector<std::string>>>();
        if (static_cast<int>(inv_rows.size()) != dim)
            throw ParseError("involution must be a dim x dim matrix");
        RationalMatrix inv(dim, dim);
        for (int r = 0; r < dim; ++r) {
            if (static_cast<int>(inv_rows[r].size()) != dim)
                throw ParseError("involution must be a dim x dim matrix");
            for (int c = 0; c < dim; ++c)
                inv.at(r, c) = parse_rational_or_throw(inv_rows[r][c], "involution");
        }
        a.set_involution(std::move(inv));

        if (j.contains("products")) {
            for (const auto& entry : j.at("products")) {
                if (!entry.is_array() || entry.size() != 4)
                    throw ParseError("each product entry must be [i, j, k, coeff]");
                int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
                if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
                    throw ParseError("product index out of range");
                a.add_product_term(i, jj, k,
                                   parse_rational_or_throw(entry[3].get<std::string>(), "products"));
            }
        }

        if (j.contains("unit")) {
            auto unit_text = j.at("unit").get<std::vector<std::string>>();
            if (static_cast<int>(unit_text.size()) != dim)
                throw ParseError("unit vector length does not match dim");
            RationalVector u(dim);
            for (int i = 0; i < dim; ++i) u[i] = parse_rational_or_throw(unit_text[i], "unit");
            a.set_unit(std::move(u));
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad algebra file: ") + e.what());
    }
}

GStarAlgebra algebra_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return algebra_from_json_text(ss.str());
}

std::string algebra_to_json_text(const GStarAlgebra& a) {
    ordered_json j;
    j["name"] = a.name();
    j["group"] = a.group().cyclic_orders();
    j["dim"] = a.dim();
    j["basis"] = a.basis_labels();
    ordered_json grading = ordered_json::array();
    for (const auto& g : a.grading()) grading.push_back(g);
    j["grading"] = grading;
    ordered_json inv = ordered_json::array();
    for (int r = 0; r < a.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < a.dim(); ++c) row.push_back(rational_str(a.involution().at(r, c)));
        inv.push_back(row);
    }
    j["involution"] = inv;
    ordered_json products = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int jj = 0; jj < a.dim(); ++jj)
            for (const auto& [k, c] : a.basis_product(i, jj))
                products.push_back(ordered_json::array({i, jj, k, rational_str(c)}));
    j["products"] = products;
    if (a.unit()) {
        ordered_json u = ordered_json::array();
        for (const auto& q : *a.unit()) u.push_back(rational_str(q));
        j["unit"] = u;
    }
    return j.dump(2) + "\n";
}

} // namespace gstar

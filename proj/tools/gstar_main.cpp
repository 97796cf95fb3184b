#include "gstar/algebra_io.hpp"
#include "gstar/catalog.hpp"
#include "gstar/errors.hpp"
#include "gstar/export.hpp"
#include "gstar/invariants.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gstar;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
    std::string catalog_spec;
    std::string file;
    std::string group_text = "1";
    std::string g_text, h_text, degs_text, elems_text;
    int k = 0;
    std::string n_text = "1..4";
    int cap = 6;
    long long budget = 200'000'000;
    int jobs = 1;
    std::string format = "table";
    std::string out;
};

void add_algebra_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option("--catalog", opt.catalog_spec, "catalog algebra spec, e.g. G2:tau or C3_star");
    cmd->add_option("--file", opt.file, "algebra file (JSON interchange format)");
    cmd->add_option("--group", opt.group_text, "cyclic orders, e.g. 4 or 2,2 (default 1)");
    cmd->add_option("--g", opt.g_text, "group element, e.g. (1), or a name from --elems");
    cmd->add_option("--h", opt.h_text, "second group element");
    cmd->add_option("--k", opt.k, "size parameter for Ck/Nk/Uk/Ak/Gk families");
    cmd->add_option("--degs", opt.degs_text, "semicolon-joined generator degrees for Gk");
    cmd->add_option("--elems", opt.elems_text, "element name bindings, e.g. \"g=(1),h=(0,1)\"");
    cmd->add_option("--cap", opt.cap, "degree cap (default 6)");
    cmd->add_option("--budget", opt.budget, "evaluation cell budget");
    cmd->add_option("--jobs", opt.jobs, "worker threads for frame-level parallelism");
}

std::map<std::string, GroupElement> parse_elems(const std::string& text,
                                                const FiniteAbelianGroup& group) {
    if (text.empty()) return {};
    return parse_element_bindings(text, group);
}

GroupElement resolve_element(const std::string& text, const FiniteAbelianGroup& group,
                             const std::map<std::string, GroupElement>& elems) {
    if (text == "1") return group.identity();
    if (!text.empty() && text[0] == '(') {
        auto e = group.parse_element(text);
        if (!e) throw ParseError("element " + text + " is not in the group");
        return *e;
    }
    auto it = elems.find(text);
    if (it == elems.end()) throw ParseError("unbound element name \"" + text + "\"");
    return it->second;
}

struct LoadedAlgebra {
    GStarAlgebra algebra;
    FiniteAbelianGroup group;
    std::map<std::string, GroupElement> elems;
    CapPolicy policy;
};

void warn_unverified_reflection(const std::string& spec, const std::optional<int>& k_param) {
    std::string part;
    std::stringstream ss(spec + "+");
    while (std::getline(ss, part, '+')) {
        std::string s;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s.size() >= 3 && (s[0] == 'n' || s[0] == 'u' || s[0] == 'a') && s.back() == 'g') {
            int k = 0;
            if (s[1] == 'k') {
                k = k_param.value_or(0);
            } else {
                std::size_t p = 1;
                while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
                    k = k * 10 + (s[p++] - '0');
                if (p + 1 != s.size()) continue;
            }
            if (k > 3)
                std::cerr << "note: graded " << static_cast<char>(std::toupper(s[0])) << k
                          << " gradings with k > 3 are unverified against the reference tables\n";
        }
    }
}

LoadedAlgebra load_algebra(const CommonOptions& opt) {
    auto group = FiniteAbelianGroup::parse(opt.group_text);
    if (!group) throw ParseError("bad --group \"" + opt.group_text + "\"");
    std::map<std::string, GroupElement> elems = parse_elems(opt.elems_text, *group);

    CapPolicy policy;
    policy.degree_cap = opt.cap;
    policy.cell_budget = opt.budget;
    policy.jobs = opt.jobs;

    if (!opt.file.empty()) {
        GStarAlgebra a = algebra_from_file(opt.file);
        ValidationReport report = validate(a);
        if (!report.ok)
            throw InvalidArgument("algebra file fails validation:\n" + report.str());
        FiniteAbelianGroup g = a.group();
        return LoadedAlgebra{std::move(a), std::move(g), std::move(elems), policy};
    }
    if (opt.catalog_spec.empty())
        throw ParseError("need an algebra: pass --catalog or --file");

    catalog::CatalogParams params;
    params.group = *group;
    if (!opt.g_text.empty()) params.g = resolve_element(opt.g_text, *group, elems);
    if (!opt.h_text.empty()) params.h = resolve_element(opt.h_text, *group, elems);
    if (opt.k > 0) params.k = opt.k;
    if (!opt.degs_text.empty()) {
        std::stringstream ss(opt.degs_text);
        std::string part;
        while (std::getline(ss, part, ';'))
            params.degrees.push_back(resolve_element(part, *group, elems));
    }
    warn_unverified_reflection(opt.catalog_spec, params.k);
    GStarAlgebra a = catalog::build(opt.catalog_spec, params);
    return LoadedAlgebra{std::move(a), *group, std::move(elems), policy};
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        int a, b;
        if (dots == std::string::npos) {
            a = b = std::stoi(text);
        } else {
            a = std::stoi(text.substr(0, dots));
            b = std::stoi(text.substr(dots + 2));
        }
        if (a < 1 || b < a) throw ParseError("bad --n range \"" + text + "\"");
        return {a, b};
    } catch (const std::exception&) {
        throw ParseError("bad --n range \"" + text + "\"");
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file " + out_path);
    out << text;
}

int run_sequence_command(const CommonOptions& opt, bool codim) {
    LoadedAlgebra loaded = load_algebra(opt);
    auto [from, to] = parse_range(opt.n_text);
    std::vector<int> ns;
    std::vector<std::string> values;
    for (int n = from; n <= to; ++n) {
        ns.push_back(n);
        if (codim)
            values.push_back(codim_total(loaded.algebra, n, loaded.policy).get_str());
        else
            values.push_back(std::to_string(colength(loaded.algebra, n, loaded.policy)));
    }
    write_output(render_sequence(codim ? "c_n_sharp" : "l_n_sharp", ns, values,
                                 parse_format(opt.format)),
                 opt.out);
    return kExitOk;
}

int run_cocharacter_command(const CommonOptions& opt) {
    LoadedAlgebra loaded = load_algebra(opt);
    auto [from, to] = parse_range(opt.n_text);
    std::vector<CocharacterTable> tables;
    for (int n = from; n <= to; ++n)
        tables.push_back(cocharacter_table(loaded.algebra, n, loaded.policy));
    write_output(render_cocharacter_tables(tables, loaded.group, loaded.elems,
                                           parse_format(opt.format)),
                 opt.out);
    return kExitOk;
}

int run_validate(const std::string& path) {
    GStarAlgebra a = algebra_from_file(path);
    ValidationReport report = validate(a);
    if (report.ok) {
        std::cout << "ok\n";
        return kExitOk;
    }
    std::cout << report.str();
    return kExitSemantic;
}

int run_verify_basis(const CommonOptions& opt, const std::string& generators_path, int max_n) {
    LoadedAlgebra loaded = load_algebra(opt);
    std::ifstream in(generators_path);
    if (!in) throw ParseError("cannot open generators file " + generators_path);
    std::stringstream ss;
    ss << in.rdbuf();
    GeneratorFile gf = parse_generators(ss.str(), loaded.group);

    BasisVerification result =
        verify_generating_set(loaded.algebra, gf.generators, max_n, loaded.policy);
    if (!result.generators_ok) {
        std::cout << "rejected: " << result.rejected_witness << "\n";
        return kExitSemantic;
    }
    for (const FrameVerification& fv : result.frames) {
        if (fv.complete) continue;
        std::cout << "incomplete at <n> = (" << fv.multidegree.str() << "): consequences span "
                  << fv.consequence_rank << " of " << fv.kernel_dim << "\n";
    }
    std::cout << (result.all_complete ? "complete" : "incomplete") << " up to n = " << max_n
              << "\n";
    return result.all_complete ? kExitOk : kExitSemantic;
}

int run_member(const CommonOptions& opt, const std::string& sub_spec, const std::string& sub_file,
               const std::string& super_spec, const std::string& super_file, int max_n) {
    CommonOptions sub_opt = opt;
    sub_opt.catalog_spec = sub_spec;
    sub_opt.file = sub_file;
    CommonOptions super_opt = opt;
    super_opt.catalog_spec = super_spec;
    super_opt.file = super_file;
    LoadedAlgebra sub = load_algebra(sub_opt);
    LoadedAlgebra sup = load_algebra(super_opt);

    // B in var#(A) means Id#(A) <= Id#(B): A is the generator (--super).
    ContainmentReport report =
        variety_contains_upto(sup.algebra, sub.algebra, max_n, sub.policy);
    for (const auto& [n, ok] : report.per_n)
        std::cout << "n = " << n << ": " << (ok ? "contained" : "NOT contained") << "\n";
    if (!report.contained && report.witness)
        std::cout << "witness multidegree: (" << report.witness->str() << ")\n";
    return report.contained ? kExitOk : kExitSemantic;
}

int run_catalog_list() {
    for (const catalog::CatalogEntry& e : catalog::entries()) {
        std::cout << e.name;
        if (!e.parameters.empty()) std::cout << "  [" << e.parameters << "]";
        std::cout << "\n    " << e.constraints << "\n";
    }
    return kExitOk;
}

int run_catalog_export(const CommonOptions& opt, const std::string& name) {
    CommonOptions export_opt = opt;
    export_opt.catalog_spec = name;
    export_opt.file.clear();
    LoadedAlgebra loaded = load_algebra(export_opt);
    write_output(algebra_to_json_text(loaded.algebra), opt.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of finite-dimensional algebras with graded involution"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    CommonOptions opt;

    std::string validate_file;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check the axioms of an algebra file");
    cmd_validate->add_option("--file", validate_file, "algebra file")->required();

    CLI::App* cmd_codim = app.add_subcommand("codim", "total (G,*)-codimensions c_n^#");
    CLI::App* cmd_colength = app.add_subcommand("colength", "(G,*)-colengths l_n^#");
    CLI::App* cmd_cochar =
        app.add_subcommand("cocharacter", "cocharacter decompositions per multidegree");
    for (CLI::App* cmd : {cmd_codim, cmd_colength, cmd_cochar}) {
        add_algebra_flags(cmd, opt);
        cmd->add_option("--n", opt.n_text, "degree or inclusive range a..b");
        cmd->add_option("--format", opt.format, "table | csv | json");
        cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    }

    std::string generators_path;
    int max_n = 4;
    CLI::App* cmd_verify =
        app.add_subcommand("verify-basis", "check a generating set of identities up to a degree");
    add_algebra_flags(cmd_verify, opt);
    cmd_verify->add_option("--generators", generators_path, "generators file")->required();
    cmd_verify->add_option("--max-n", max_n, "largest multilinear degree to check");

    std::string sub_spec, sub_file, super_spec, super_file;
    CLI::App* cmd_member = app.add_subcommand(
        "member", "bounded-degree variety containment: is --sub in var#(--super)?");
    add_algebra_flags(cmd_member, opt);
    cmd_member->add_option("--sub", sub_spec, "catalog spec of the candidate member");
    cmd_member->add_option("--sub-file", sub_file, "algebra file of the candidate member");
    cmd_member->add_option("--super", super_spec, "catalog spec of the variety generator");
    cmd_member->add_option("--super-file", super_file, "algebra file of the variety generator");
    cmd_member->add_option("--max-n", max_n, "largest multilinear degree to check");

    CLI::App* cmd_catalog = app.add_subcommand("catalog", "list or export catalog algebras");
    CLI::App* cmd_list = cmd_catalog->add_subcommand("list", "list catalog entries");
    std::string export_name;
    CLI::App* cmd_export = cmd_catalog->add_subcommand("export", "emit the algebra file");
    add_algebra_flags(cmd_export, opt);
    cmd_export->add_option("name", export_name, "catalog name")->required();
    cmd_export->add_option("--out", opt.out, "write output to a file instead of stdout");
    cmd_catalog->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (cmd_validate->parsed()) return run_validate(validate_file);
        if (cmd_codim->parsed()) return run_sequence_command(opt, true);
        if (cmd_colength->parsed()) return run_sequence_command(opt, false);
        if (cmd_cochar->parsed()) return run_cocharacter_command(opt);
        if (cmd_verify->parsed()) return run_verify_basis(opt, generators_path, max_n);
        if (cmd_member->parsed())
            return run_member(opt, sub_spec, sub_file, super_spec, super_file, max_n);
        if (cmd_list->parsed()) return run_catalog_list();
        if (cmd_export->parsed()) return run_catalog_export(opt, export_name);
    } catch (const BudgetExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidArgument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitInput;
}

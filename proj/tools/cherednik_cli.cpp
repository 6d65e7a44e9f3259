#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherednik/dunkl.hpp"
#include "cherednik/findim.hpp"
#include "cherednik/namikawa.hpp"
#include "cherednik/parse.hpp"
#include "cherednik/rankone.hpp"
#include "cherednik/symmpair.hpp"
#include "cherednik/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cherednik;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat_or_throw(const std::string& text) {
    auto v = parse_rat(text);
    if (!v) throw UsageError("cannot parse rational '" + text + "'");
    return *v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

RatVec parse_rat_list(const std::string& text) {
    RatVec out;
    for (const auto& part : split(text, ',')) out.push_back(parse_rat_or_throw(part));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) out.push_back(std::stoi(part));
    return out;
}

std::pair<GroupType, int> parse_group_label(const std::string& label) {
    if (label == "G2") return {GroupType::G2, 2};
    if (label == "F4") return {GroupType::F4, 4};
    if (label.size() >= 2) {
        const char t = label[0];
        const int rank = std::stoi(label.substr(1));
        switch (t) {
            case 'A': return {GroupType::A, rank};
            case 'B': return {GroupType::B, rank};
            case 'C': return {GroupType::C, rank};
            case 'D': return {GroupType::D, rank};
            default: break;
        }
    }
    throw UsageError("unknown group label '" + label + "' (expected A<r>|B<r>|C<r>|D<r>|G2|F4)");
}

std::vector<std::string> coordinate_names(std::size_t dim) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= dim; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

// Factored affine input for b-functions: an optional leading rational
// followed by parenthesized affine factors, e.g. "4(s+1)(s+7/2)" or
// "(a1+a2+2)*(a1+1)".
BFunction parse_bfunction(const std::string& src, const std::vector<std::string>& vars) {
    BFunction b;
    b.num_alphas = vars.size();
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < src.size() && (std::isspace(static_cast<unsigned char>(src[pos])) ||
                                    src[pos] == '*'))
            ++pos;
    };
    skip();
    if (pos < src.size() && src[pos] != '(') {
        std::size_t start = pos;
        while (pos < src.size() && src[pos] != '(' && src[pos] != '*') ++pos;
        std::string head = src.substr(start, pos - start);
        while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back())))
            head.pop_back();
        b.constant = parse_rat_or_throw(head);
    }
    while (true) {
        skip();
        if (pos >= src.size()) break;
        if (src[pos] != '(') throw UsageError("expected '(' in b-function at position " +
                                              std::to_string(pos));
        int depth = 0;
        std::size_t start = pos;
        for (; pos < src.size(); ++pos) {
            if (src[pos] == '(') ++depth;
            if (src[pos] == ')' && --depth == 0) break;
        }
        if (depth != 0) throw UsageError("unbalanced parentheses in b-function");
        const std::string inner = src.substr(start + 1, pos - start - 1);
        ++pos;
        const MultiPoly p = parse_poly(inner, vars);
        if (p.degree() > 1) throw UsageError("b-function factor '" + inner + "' is not affine");
        AffineFactor factor;
        factor.coeffs.assign(vars.size(), Rat(0));
        for (const auto& [m, coeff] : p.terms()) {
            if (total_degree(m) == 0) {
                factor.constant = coeff;
                continue;
            }
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (m[i] == 1) factor.coeffs[i] = coeff;
        }
        b.factors.push_back(std::move(factor));
    }
    if (b.factors.empty()) throw UsageError("b-function needs at least one factor");
    return b;
}

bool want_json(bool flag) {
    if (flag) return true;
    const char* env = std::getenv("CHEREDNIK_OUTPUT");
    return env != nullptr && std::string(env) == "json";
}

json rat_json(const Rat& r) { return rat_to_string(r); }

json rat_vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

json instance_json(const PairInstance& inst) {
    json j;
    j["label"] = inst.display;
    j["restricted"] = inst.restricted_label();
    j["rank"] = inst.rank;
    j["dim_p"] = inst.dim_p;
    json k;
    if (inst.num_orbits == 2) {
        k["short"] = rat_json(inst.k_short);
        k["long"] = rat_json(inst.k_long);
    } else {
        k["all"] = rat_json(inst.k_short);
    }
    j["k"] = k;
    return j;
}

json report_json(const SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.ok ? "pass" : "fail";
        e["detail"] = c.detail;
        e["seconds"] = c.seconds;
        checks.push_back(e);
    }
    json j;
    j["status"] = rep.ok() ? "pass" : "fail";
    j["checks"] = checks;
    return j;
}

void print_report_text(const SuiteReport& rep) {
    for (const auto& c : rep.checks) {
        std::ostringstream line;
        line << (c.ok ? "PASS" : "FAIL") << "  " << c.name;
        std::cout << line.str();
        for (std::size_t i = line.str().size(); i < 36; ++i) std::cout << ' ';
        std::cout << c.detail << "  (" << c.seconds << "s)\n";
    }
    std::cout << (rep.ok() ? "all checks passed" : "FAILURES present") << "\n";
}

const char kTableHeader[] = "label\trestricted\tconstraint\trank\tdim_p\tk\tsimple\tjustification";

void export_table_tsv(std::ostream& out) {
    out << kTableHeader << "\n";
    for (const auto& rec : builtin_table()) {
        // A representative verdict; the verdict column is constant per row.
        const PairInstance sample =
            instantiations(rec, 2, 12).empty() ? rec.make(PairParams{})
                                               : instantiations(rec, 2, 12).front();
        out << rec.label << '\t' << rec.restricted_display << '\t' << rec.constraint_display
            << '\t' << rec.rank_display << '\t' << rec.dim_display << '\t' << rec.k_display
            << '\t' << (sample.simple_expected ? 'Y' : 'N') << '\t' << sample.justification
            << "\n";
    }
}

json export_table_json() {
    json rows = json::array();
    for (const auto& rec : builtin_table()) {
        const auto insts = instantiations(rec, 2, 12);
        const PairInstance sample = insts.empty() ? rec.make(PairParams{}) : insts.front();
        json r;
        r["label"] = rec.label;
        r["restricted"] = rec.restricted_display;
        r["constraint"] = rec.constraint_display;
        r["rank"] = rec.rank_display;
        r["dim_p"] = rec.dim_display;
        r["k"] = rec.k_display;
        r["simple"] = sample.simple_expected ? "Y" : "N";
        r["justification"] = sample.justification;
        rows.push_back(r);
    }
    return rows;
}

// Loads user rows in the export format with concrete numeric fields and
// classifies each one.
int classify_tsv_file(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != kTableHeader)
        throw UsageError("TSV header mismatch; expected: " + std::string(kTableHeader));
    json rows = json::array();
    bool all_match = true;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 8)
            throw UsageError("line " + std::to_string(lineno) + ": expected 8 columns");
        PairInstance inst;
        inst.record_label = cols[0];
        inst.display = cols[0];
        std::string restricted = cols[1];
        restricted.erase(std::remove(restricted.begin(), restricted.end(), '_'),
                         restricted.end());
        try {
            const auto [type, rank] = parse_group_label(restricted);
            inst.rank = rank;
            inst.dim_p = std::stol(cols[4]);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("line " + std::to_string(lineno) +
                             ": restricted/rank/dim columns must be concrete "
                             "(e.g. B2, 2, 20), not parametric");
        }
        inst.family = restricted[0] == 'G'   ? 'G'
                      : restricted[0] == 'F' ? 'F'
                                             : restricted[0];
        const auto kparts = split(cols[5], ';');
        if (kparts.size() == 2) {
            inst.num_orbits = 2;
            inst.k_long = parse_rat_or_throw(kparts[0]);
            inst.k_short = parse_rat_or_throw(kparts[1]);
        } else {
            inst.num_orbits = 1;
            inst.k_short = inst.k_long = parse_rat_or_throw(kparts[0]);
        }
        for (const auto& k : inst.k_values())
            if (k < 0 || !(is_integer(k) || is_half_integer(k)))
                throw UsageError("line " + std::to_string(lineno) +
                                 ": multiplicity must lie in (1/2)N");
        const Verdict v = simplicity_verdict_irreducible(inst);
        const bool has_expected = cols[6] == "Y" || cols[6] == "N";
        const bool matches = !has_expected || v.simple == (cols[6] == "Y");
        all_match = all_match && matches;
        json r = instance_json(inst);
        r["simple"] = v.simple;
        r["reason"] = v.reason;
        if (has_expected) r["matches_expected"] = matches;
        rows.push_back(r);
    }
    if (as_json) {
        json j;
        j["rows"] = rows;
        j["status"] = all_match ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << r["label"].get<std::string>() << ": "
                      << (r["simple"].get<bool>() ? "simple" : "not simple") << " ("
                      << r["reason"].get<std::string>() << ")\n";
    }
    return all_match ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for rational Cherednik algebras"};
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON on stdout (also via CHEREDNIK_OUTPUT=json)");

    // dunkl apply
    auto* dunkl_cmd = app.add_subcommand("dunkl", "Dunkl operators on polynomials");
    auto* dunkl_apply = dunkl_cmd->add_subcommand("apply", "apply T_y to a polynomial");
    std::string group_label = "A1", dir_text = "1", poly_text, c_short_text = "0",
                c_long_text;
    dunkl_apply->add_option("--group", group_label, "group label A<r>|B<r>|C<r>|D<r>|G2|F4");
    dunkl_apply->add_option("--c-short", c_short_text, "multiplicity on the short orbit");
    dunkl_apply->add_option("--c-long", c_long_text, "multiplicity on the long orbit");
    dunkl_apply->add_option("--dir", dir_text, "direction vector, comma separated");
    dunkl_apply->add_option("--poly", poly_text, "input polynomial over x1..xn")->required();

    // rank1
    auto* rank1_cmd = app.add_subcommand("rank1", "rank-one radial pipeline");
    std::string b_text, sigma_text = "0", alphas_text;
    int rank1_l = 2;
    rank1_cmd->add_option("--l", rank1_l, "degree l of the b-function");
    rank1_cmd->add_option("--b", b_text, "factored b-function, e.g. \"(s+1)(s+7/2)\"")
        ->required();
    rank1_cmd->add_option("--sigma", sigma_text, "shift parameters, comma separated");
    rank1_cmd->add_option("--alphas", alphas_text,
                          "variable names of b (default: single variable s)");
    std::string d_text = "0";
    rank1_cmd->add_option("--d", d_text, "Euler shift d");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "symmetric-pair simplicity verdict");
    std::string pair_label;
    int opt_p = 0, opt_q = 0, opt_n = 0;
    classify_cmd->add_option("--pair", pair_label, "table row label")->required();
    classify_cmd->add_option("--p", opt_p, "parameter p");
    classify_cmd->add_option("--q", opt_q, "parameter q");
    classify_cmd->add_option("--n", opt_n, "parameter n");

    // table
    auto* table_cmd = app.add_subcommand("table", "dump or classify symmetric-pair tables");
    std::string table_format = "tsv", load_path;
    table_cmd->add_option("--format", table_format, "tsv or json");
    table_cmd->add_option("--load", load_path, "classify user-supplied TSV rows");

    // findim
    auto* findim_cmd = app.add_subcommand("findim", "finite-dimensional module reports");
    auto* findim_a1 = findim_cmd->add_subcommand("a1", "rank-one module at c = m + 1/2");
    int findim_m = 0;
    findim_a1->add_option("--m", findim_m, "parameter m")->required();
    auto* findim_br = findim_cmd->add_subcommand("br", "signed-permutation module X_r");
    int findim_p = 2;
    std::string c1_text = "1/2", c2_text = "1/2";
    findim_br->add_option("--p", findim_p, "rank p");
    findim_br->add_option("--c1", c1_text, "multiplicity c1");
    findim_br->add_option("--c2", c2_text, "multiplicity c2");
    auto* findim_wit = findim_cmd->add_subcommand("witness", "non-simplicity witness scan");
    std::string wit_pair;
    int wit_p = 0, wit_q = 0, wit_n = 0;
    findim_wit->add_option("--pair", wit_pair, "table row label")->required();
    findim_wit->add_option("--p", wit_p, "parameter p");
    findim_wit->add_option("--q", wit_q, "parameter q");
    findim_wit->add_option("--n", wit_n, "parameter n");

    // namikawa
    auto* nami_cmd = app.add_subcommand("namikawa", "twisted parameter action");
    int nami_l = 2;
    std::string kappa_text, nami_sigma_text;
    nami_cmd->add_option("--l", nami_l, "cyclic order l");
    nami_cmd->add_option("--kappa", kappa_text, "kappa_0,..,kappa_{l-1}")->required();
    nami_cmd->add_option("--sigma", nami_sigma_text, "permutation image list")->required();
    int nami_range = 8;
    nami_cmd->add_option("--range", nami_range, "check z^m for |m| <= range");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    std::uint64_t seed = 20240816;
    int max_degree = 6;
    verify_cmd->add_option("--suite", suite, "all|dunkl|rank1|table|findim|namikawa");
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_option("--max-degree", max_degree, "degree bound for commutativity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitOk;  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const bool as_json = want_json(json_flag);
    try {
        if (dunkl_apply->parsed()) {
            const auto [type, rank] = parse_group_label(group_label);
            const RootSystem rs = build_root_system(type, rank);
            const Rat c_sh = parse_rat_or_throw(c_short_text);
            const Rat c_lg =
                c_long_text.empty() ? c_sh : parse_rat_or_throw(c_long_text);
            RatVec dir = parse_rat_list(dir_text);
            if (dir.size() != rs.dim)
                throw UsageError("direction needs " + std::to_string(rs.dim) +
                                 " coordinates for " + rs.label());
            const auto vars = coordinate_names(rs.dim);
            const MultiPoly f = parse_poly(poly_text, vars);
            const MultiPoly result = dunkl_apply_c(rs, CMult{c_sh, c_lg}, dir, f);
            if (as_json) {
                json j;
                j["group"] = rs.label();
                j["c_short"] = rat_json(c_sh);
                j["c_long"] = rat_json(c_lg);
                j["result"] = result.to_string(vars);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << result.to_string(vars) << "\n";
            }
            return kExitOk;
        }
        if (rank1_cmd->parsed()) {
            std::vector<std::string> vars =
                alphas_text.empty() ? std::vector<std::string>{"s"} : split(alphas_text, ',');
            const BFunction b = parse_bfunction(b_text, vars);
            if (b.ell() != rank1_l)
                throw UsageError("--l=" + std::to_string(rank1_l) + " but b has " +
                                 std::to_string(b.ell()) + " factors");
            const RatVec sigma = parse_rat_list(sigma_text);
            const LambdaRoots roots = shift_roots(b, sigma);
            const RatVec kappa = kappa_from_lambda(roots.lambda, b.ell());
            const Rat d = parse_rat_or_throw(d_text);
            const RadialGenerators gen = radial_generators(b.ell(), d, roots);
            json j;
            j["l"] = b.ell();
            j["lambda"] = rat_vec_json(roots.lambda);
            j["lambda_ordering"] = roots.ordering;
            j["constant"] = rat_json(roots.constant);
            j["kappa"] = rat_vec_json(kappa);
            json preview;
            for (long m = -3; m <= 3; ++m) {
                const Laurent1 z = Laurent1::monomial(m);
                json row;
                row["X"] = gen.apply_X(z).to_string();
                row["Eu"] = gen.apply_Eu(z).to_string();
                row["Nabla"] = gen.apply_Nabla(z).to_string();
                preview["z^" + std::to_string(m)] = row;
            }
            j["generators"] = preview;
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "lambda = " << j["lambda"].dump()
                          << " (" << roots.ordering << ")\n"
                          << "kappa  = " << j["kappa"].dump() << "\n"
                          << "constant = " << rat_to_string(roots.constant) << "\n";
            }
            return kExitOk;
        }
        if (classify_cmd->parsed()) {
            const PairInstance inst =
                instantiate(find_record(pair_label), PairParams{opt_p, opt_q, opt_n});
            const Verdict v = simplicity_verdict_irreducible(inst);
            const auto ks = inst.k_values();
            const auto wit = parabolic_witness(inst);
            json j = instance_json(inst);
            const KappaParam kappa = kappa_of_pair(inst);
            json korb = json::array();
            for (const auto& orbit : kappa.per_orbit) korb.push_back(rat_vec_json(orbit));
            j["kappa"] = korb;
            j["nice"] = is_nice(ks);
            j["integral"] = is_integral(ks);
            j["robust"] = is_nice(ks) || is_integral(ks);
            j["simple"] = v.simple;
            j["justification"] = inst.justification;
            j["expected_simple"] = inst.simple_expected;
            if (wit) {
                json w;
                w["mechanism"] = std::string(1, wit->mechanism);
                w["simple_root"] = wit->root_index;
                w["r"] = wit->r;
                w["m"] = wit->m;
                j["witness"] = w;
            }
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << inst.display << ": "
                          << (v.simple ? "simple" : "not simple") << " (" << v.reason
                          << ")\n";
                if (wit)
                    std::cout << "witness (" << wit->mechanism << ") at simple root "
                              << wit->root_index << ", r = " << wit->r << ", m = " << wit->m
                              << "\n";
            }
            return v.simple == inst.simple_expected ? kExitOk : kExitVerificationFailure;
        }
        if (table_cmd->parsed()) {
            if (!load_path.empty()) return classify_tsv_file(load_path, as_json);
            if (table_format == "tsv" && !as_json) {
                export_table_tsv(std::cout);
            } else if (table_format == "json" || as_json) {
                std::cout << export_table_json().dump(2) << "\n";
            } else {
                throw UsageError("unknown format '" + table_format + "'");
            }
            return kExitOk;
        }
        if (findim_a1->parsed()) {
            const CherednikModuleA1 M(findim_m);
            const RelationReport rel = module_relation_check(M);
            json j;
            j["m"] = findim_m;
            j["c"] = rat_json(M.c());
            j["dim"] = M.dim();
            j["dim_trivial"] = M.dim_trivial();
            j["dim_sign"] = M.dim_sign();
            j["relations_ok"] = rel.ok;
            j["relation_failures"] = rel.failures;
            if (as_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "dim = " << M.dim() << ", isotypic (triv,sgn) = ("
                          << M.dim_trivial() << "," << M.dim_sign() << "), relations "
                          << (rel.ok ? "ok" : "FAIL") << "\n";
            return rel.ok ? kExitOk : kExitVerificationFailure;
        }
        if (findim_br->parsed()) {
            const XrModule M =
                build_X_r(findim_p, parse_rat_or_throw(c1_text), parse_rat_or_throw(c2_text));
            const SgnDimReport rep = sgn_isotypic_dim(M);
            json j;
            j["p"] = M.p();
            j["r"] = M.r();
            j["dim"] = M.dim();
            j["sgn_dim_projection"] = rep.by_projection;
            j["sgn_dim_trace"] = rat_to_string(rep.by_trace);
            j["sgn_dim_exterior"] = rep.by_exterior;
            j["sgn_dim_expected"] = rep.expected_binom;
            j["agree"] = rep.agree;
            if (as_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "X_r: p = " << M.p() << ", r = " << M.r() << ", dim = "
                          << M.dim() << ", sgn-isotypic dim = " << rep.by_projection
                          << (rep.agree ? " (all three computations agree)" : " (DISAGREE)")
                          << "\n";
            return rep.agree ? kExitOk : kExitVerificationFailure;
        }
        if (findim_wit->parsed()) {
            const PairInstance inst =
                instantiate(find_record(wit_pair), PairParams{wit_p, wit_q, wit_n});
            const auto wit = parabolic_witness(inst);
            json j = instance_json(inst);
            if (wit) {
                json w;
                w["mechanism"] = std::string(1, wit->mechanism);
                w["simple_root"] = wit->root_index;
                w["c"] = rat_json(wit->c);
                w["r"] = wit->r;
                w["m"] = wit->m;
                j["witness"] = w;
            } else {
                j["witness"] = nullptr;
            }
            if (as_json)
                std::cout << j.dump(2) << "\n";
            else if (wit)
                std::cout << inst.display << ": witness (" << wit->mechanism
                          << ") at simple root " << wit->root_index << ", r = " << wit->r
                          << ", m = " << wit->m << "\n";
            else
                std::cout << inst.display << ": no witness\n";
            return kExitOk;
        }
        if (nami_cmd->parsed()) {
            const RatVec kappa = parse_rat_list(kappa_text);
            if (static_cast<int>(kappa.size()) != nami_l)
                throw UsageError("--kappa needs l entries");
            const std::vector<int> sigma = parse_int_list(nami_sigma_text);
            const InvarianceReport rep =
                verify_invariance_rank1(nami_l, kappa, sigma, nami_range);
            json j;
            j["l"] = nami_l;
            j["kappa"] = rat_vec_json(kappa);
            j["twisted_kappa"] = rat_vec_json(rep.twisted_kappa);
            j["invariant"] = rep.ok;
            j["checked_range"] = nami_range;
            if (as_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "twisted kappa = " << j["twisted_kappa"].dump()
                          << "; spherical generator " << (rep.ok ? "unchanged" : "CHANGED")
                          << " on |m| <= " << nami_range << "\n";
            return rep.ok ? kExitOk : kExitVerificationFailure;
        }
        if (verify_cmd->parsed()) {
            const SuiteReport rep = run_suite(suite, seed, max_degree);
            if (as_json)
                std::cout << report_json(rep).dump(2) << "\n";
            else
                print_report_text(rep);
            return rep.ok() ? kExitOk : kExitVerificationFailure;
        }
        if (dunkl_cmd->parsed() || findim_cmd->parsed())
            throw UsageError("missing sub-subcommand; see --help");
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

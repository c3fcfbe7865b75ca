#pragma once

#include <sl2orbit/classify.hpp>
#include <sl2orbit/diagram.hpp>
#include <sl2orbit/identities.hpp>
#include <sl2orbit/json_io.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sl2orbit::cli {

inline constexpr const char* usage_text = R"(usage: sl2orbit <subcommand> [flags]

subcommands:
  decompose    highest-weight components of a product of two polynomials
               flags: --in FILE|-  (JSON {"p1": poly, "p2": poly}), --svg FILE
  admissible   pair/w-vector admissibility check of a graded subalgebra
               flags: --in FILE|-  (JSON {"generators":[poly,...],"bound":N}),
                      --bound N (overrides the presentation bound)
  classify     classification label of an algebra or semigroup input
               flags: --in FILE|-  (algebra JSON or {"gens":[[i,j],...]}),
                      --bound N, --seed N
  hilbert      Hilbert basis of the cone j >= q i in the sublattice f | (j-i)
               flags: --q P/Q, --f N
  gens         algebra generators of the full SL2-span inside k[SL2]
               flags: --in FILE|-  (algebra JSON)
  molien       invariant-dimension series of a catalog subgroup
               flags: --group A|D|E6|E7|E8, --f N (TypeA/TypeD), --degree N
  invariants   basis of degree-d right invariants via Reynolds averaging
               flags: --group A|D|E6|E7|E8, --f N, --degree N
  verify-sums  evaluate the three binomial-sum identities over a grid
               flags: --max N (grid size, default 12)
  diagram      Newton-polygon SVG for a pair input or a raw diagram spec
               flags: --in FILE|-, --svg FILE (default: SVG to stdout), --f N

common:
  --in -       read the JSON input from standard input
  --help       this text
exit codes: 0 success, 1 check failed (witness on stdout), 2 malformed input
)";

struct ParsedArgs {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    bool help = false;
};

inline std::optional<ParsedArgs> parse_args(const std::vector<std::string>& argv,
                                            std::string& error) {
    ParsedArgs args;
    std::size_t t = 0;
    if (t < argv.size() && !argv[t].empty() && argv[t][0] != '-') args.subcommand = argv[t++];
    for (; t < argv.size(); ++t) {
        const std::string& token = argv[t];
        if (token == "--help" || token == "-h") {
            args.help = true;
            continue;
        }
        if (token.rfind("--", 0) != 0) {
            error = "unexpected argument: " + token;
            return std::nullopt;
        }
        if (t + 1 >= argv.size()) {
            error = "flag needs a value: " + token;
            return std::nullopt;
        }
        args.flags[token.substr(2)] = argv[++t];
    }
    return args;
}

inline json read_input_json(const ParsedArgs& args) {
    auto it = args.flags.find("in");
    if (it == args.flags.end()) throw std::invalid_argument("--in FILE is required (use - for stdin)");
    std::string text;
    if (it->second == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(it->second);
        if (!file) throw std::invalid_argument("cannot open input file: " + it->second);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw std::invalid_argument("input is not valid JSON");
    return parsed;
}

inline long flag_long(const ParsedArgs& args, const std::string& name, long fallback) {
    auto it = args.flags.find(name);
    if (it == args.flags.end()) return fallback;
    try {
        std::size_t used = 0;
        long value = std::stol(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("");
        return value;
    } catch (...) {
        throw std::invalid_argument("--" + name + " must be an integer, got: " + it->second);
    }
}

inline void write_svg_output(const ParsedArgs& args, const DiagramSpec& spec, bool to_stdout) {
    std::string svg = render_svg(spec);
    auto it = args.flags.find("svg");
    if (it != args.flags.end()) {
        std::ofstream file(it->second);
        if (!file) throw std::invalid_argument("cannot open output file: " + it->second);
        file << svg;
    } else if (to_stdout) {
        std::cout << svg;
    }
}

inline GroupLabel group_from_flag(const std::string& name) {
    if (name == "A") return GroupLabel::TypeA;
    if (name == "D") return GroupLabel::TypeD;
    if (name == "E6") return GroupLabel::E6;
    if (name == "E7") return GroupLabel::E7;
    if (name == "E8") return GroupLabel::E8;
    throw std::invalid_argument("--group must be one of A, D, E6, E7, E8");
}

inline int run_decompose(const ParsedArgs& args) {
    json input = read_input_json(args);
    if (!input.contains("p1") || !input.contains("p2"))
        throw std::invalid_argument("decompose input needs \"p1\" and \"p2\"");
    ProductDecomposition decomposition =
        decompose_product(hompoly_from_json(input["p1"]), hompoly_from_json(input["p2"]));
    std::cout << to_json(decomposition).dump(2) << "\n";
    write_svg_output(args, diagram_from_decomposition(decomposition), false);
    return 0;
}

inline int run_admissible(const ParsedArgs& args) {
    json input = read_input_json(args);
    GradedAlgebraPresentation algebra = algebra_from_json(input);
    long bound = flag_long(args, "bound", algebra.degree_bound);
    algebra = GradedAlgebraPresentation(algebra.generators, static_cast<int>(bound));
    AdmissibilityReport report = check_admissible(algebra);
    std::cout << to_json(report).dump(2) << "\n";
    return report.verdict == AdmissibilityReport::Verdict::pass ? 0 : 1;
}

inline int run_classify(const ParsedArgs& args) {
    json input = read_input_json(args);
    bool is_semigroup = input.is_object() && input.contains("gens");
    GradedAlgebraPresentation algebra;
    Semigroup2D semigroup;
    uint64_t seed = default_classify_seed;
    if (is_semigroup) {
        semigroup = semigroup_from_json(input);
    } else {
        algebra = algebra_from_json(input);
        long bound = flag_long(args, "bound", algebra.degree_bound);
        algebra = GradedAlgebraPresentation(algebra.generators, static_cast<int>(bound));
        if (args.flags.count("seed")) seed = static_cast<uint64_t>(flag_long(args, "seed", 0));
    }
    try {
        ClassLabel label = is_semigroup ? classify(semigroup) : classify(algebra, seed);
        std::cout << to_json(label).dump(2) << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        // Well-formed input outside the classified normal forms: a failed
        // check, not a usage error.
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}

inline int run_hilbert(const ParsedArgs& args) {
    auto q_it = args.flags.find("q");
    if (q_it == args.flags.end()) throw std::invalid_argument("--q P/Q is required");
    Rational q = parse_rational(q_it->second);
    long f = flag_long(args, "f", 1);
    Semigroup2D s = hilbert_basis(q, f);
    std::cout << to_json(s).dump(2) << "\n";
    return 0;
}

inline int run_gens(const ParsedArgs& args) {
    json input = read_input_json(args);
    GradedAlgebraPresentation algebra = algebra_from_json(input);
    json out = json::array();
    for (const auto& v : sl2_span_generators(algebra)) out.push_back(to_json(v));
    std::cout << out.dump(2) << "\n";
    return 0;
}

inline int run_molien(const ParsedArgs& args) {
    auto group_it = args.flags.find("group");
    if (group_it == args.flags.end()) throw std::invalid_argument("--group is required");
    GroupLabel label = group_from_flag(group_it->second);
    long f = flag_long(args, "f", 0);
    long degree = flag_long(args, "degree", 16);
    if (degree < 0) throw std::invalid_argument("--degree must be nonnegative");
    FiniteSubgroup group = catalog(label, f);
    json out{{"group", group.name()},
             {"order", group.order()},
             {"coefficients", molien_coefficients(group, static_cast<int>(degree))}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

inline int run_invariants(const ParsedArgs& args) {
    auto group_it = args.flags.find("group");
    if (group_it == args.flags.end()) throw std::invalid_argument("--group is required");
    GroupLabel label = group_from_flag(group_it->second);
    long f = flag_long(args, "f", 0);
    long degree = flag_long(args, "degree", 2);
    if (degree < 0) throw std::invalid_argument("--degree must be nonnegative");
    FiniteSubgroup group = catalog(label, f);
    json basis = json::array();
    for (const auto& p : reynolds_invariants(group, static_cast<int>(degree)))
        basis.push_back(to_json(p));
    json out{{"group", group.name()}, {"degree", degree}, {"basis", basis}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

inline int run_verify_sums(const ParsedArgs& args) {
    long max = flag_long(args, "max", 12);
    if (max < 1) throw std::invalid_argument("--max must be positive");
    long cells = 0, failures = 0;
    for (long i = 0; i <= max; ++i)
        for (long j = i; j <= max; ++j) {
            auto check = verify_central_binomial_sum(i, j);
            ++cells;
            if (!check.equal || check.lhs == 0) ++failures;
        }
    for (long m = 1; m <= max; ++m)
        for (long i = 0; i <= m; ++i) {
            auto check = verify_quadratic_term_sum(m, i);
            ++cells;
            if (!check.equal) ++failures;
        }
    for (long f = 1; f <= max; ++f)
        for (long m = f; m <= max; ++m)
            for (long n = m; n <= max; ++n) {
                auto check = verify_ratio_sum(f, m, n);
                ++cells;
                if (!check.equal || check.rhs == 0) ++failures;
            }
    json out{{"max", max}, {"cells", cells}, {"failures", failures}};
    std::cout << out.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

inline int run_diagram(const ParsedArgs& args) {
    json input = read_input_json(args);
    DiagramSpec spec;
    if (input.is_object() && input.contains("p1") && input.contains("p2")) {
        spec = diagram_from_decomposition(
            decompose_product(hompoly_from_json(input["p1"]), hompoly_from_json(input["p2"])));
    } else if (input.is_object() && input.contains("polygons")) {
        for (const auto& poly_json : input["polygons"]) {
            DiagramSpec::Polygon poly;
            if (poly_json.contains("label")) poly.label = poly_json["label"].get<std::string>();
            if (poly_json.contains("style")) poly.style = poly_json["style"].get<std::string>();
            if (!poly_json.contains("points") || !poly_json["points"].is_array())
                throw std::invalid_argument("each polygon needs a \"points\" array");
            for (const auto& pt : poly_json["points"]) {
                if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer() ||
                    !pt[1].is_number_integer() || pt[0].get<int>() < 0 || pt[1].get<int>() < 0)
                    throw std::invalid_argument("points must be nonnegative [u, v] pairs");
                poly.points.emplace_back(pt[0].get<int>(), pt[1].get<int>());
            }
            spec.polygons.push_back(std::move(poly));
        }
        if (input.contains("diagonal")) spec.diagonal = input["diagonal"].get<bool>();
        spec.fit_extent();
    } else {
        throw std::invalid_argument("diagram input must carry p1/p2 or polygons");
    }
    spec.f = flag_long(args, "f", spec.f);
    write_svg_output(args, spec, true);
    return 0;
}

inline int dispatch(const std::vector<std::string>& argv) {
    std::string parse_error;
    auto parsed = parse_args(argv, parse_error);
    if (!parsed) {
        std::cerr << "error: " << parse_error << "\n" << usage_text;
        return 2;
    }
    const ParsedArgs& args = *parsed;
    if (args.help || args.subcommand.empty()) {
        std::cout << usage_text;
        return args.help ? 0 : 2;
    }
    try {
        if (args.subcommand == "decompose") return run_decompose(args);
        if (args.subcommand == "admissible") return run_admissible(args);
        if (args.subcommand == "classify") return run_classify(args);
        if (args.subcommand == "hilbert") return run_hilbert(args);
        if (args.subcommand == "gens") return run_gens(args);
        if (args.subcommand == "molien") return run_molien(args);
        if (args.subcommand == "invariants") return run_invariants(args);
        if (args.subcommand == "verify-sums") return run_verify_sums(args);
        if (args.subcommand == "diagram") return run_diagram(args);
        std::cerr << "error: unknown subcommand: " << args.subcommand << "\n" << usage_text;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args);
}

}  // namespace sl2orbit::cli

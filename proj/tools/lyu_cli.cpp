#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lyu/corpus.hpp"
#include "lyu/io.hpp"

namespace {

using namespace lyu;

struct JobSpec {
    std::string input;  // path, inline JSON, or "-" for stdin
    long characteristic = 0;
    bool char_given = false;
    std::string rank_mode = "exact";
    std::optional<std::uint64_t> seed;
    int trials = 3;
    std::string format = "text";
    bool check = false;
    std::string oracle = "none";
    int subdivide = 0;
    int threads = 1;
    int generator_budget = 20;
    int vertex_budget = 24;
};

std::string slurp(const std::string& input) {
    if (input == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
        return input;  // inline JSON
    std::ifstream f(input);
    if (!f) throw InputError("cannot open input '" + input + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// accepts either an ideal or a complex (converted through its nonfaces)
MonomialIdeal load_ideal(const std::string& input, bool* normalized) {
    std::string text = slurp(input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("empty input");
    if (text[first] == '{') {
        auto j = io::json::parse(text, nullptr, true, true);
        if (j.contains("gens")) return io::ideal_from_json(j);
        if (j.contains("facets")) return from_complex(io::complex_from_json(j, normalized));
        throw InputError("JSON input needs \"gens\" or \"facets\"");
    }
    if (io::sniff_text(text) == io::TextKind::facets)
        return from_complex(io::complex_from_text(text, normalized));
    return io::ideal_from_text(text);
}

RankOptions rank_options(const JobSpec& s) {
    RankOptions opt;
    if (s.rank_mode == "randomized") {
        if (!s.seed) throw InputError("--rank-mode randomized requires --seed");
        opt.mode = RankMode::randomized;
        opt.seed = *s.seed;
    }
    opt.trials = s.trials;
    return opt;
}

void add_common(CLI::App* cmd, JobSpec& s, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", s.input, "input path, inline JSON, or - for stdin")->required();
    cmd->add_option("--char", s.characteristic, "coefficient field characteristic (0 or a prime)")
        ->check([](const std::string& v) -> std::string {
            try {
                long c = std::stol(v);
                if (c == 0 || (c < (1L << 31) && FieldSpec::is_prime(c))) return "";
            } catch (const std::exception&) {
            }
            return "must be 0 or a prime < 2^31";
        });
    cmd->add_option("--rank-mode", s.rank_mode, "exact | randomized")
        ->check(CLI::IsMember({"exact", "randomized"}));
    cmd->add_option("--seed", s.seed, "RNG seed (required with --rank-mode randomized)");
    cmd->add_option("--trials", s.trials, "evaluation trials in randomized mode")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", s.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--threads", s.threads, "cap on internal parallelism")
        ->check(CLI::PositiveNumber);
}

void print_warning(bool normalized) {
    if (normalized) std::cerr << "warning: non-maximal faces in the input were dropped\n";
}

int run(const JobSpec& s, const std::string& command, const std::string& corpus,
        bool inject_fault) {
    FieldSpec k = FieldSpec::from_characteristic(s.characteristic);
    if (command == "betti") {
        bool normalized = false;
        MonomialIdeal ideal = load_ideal(s.input, &normalized);
        print_warning(normalized);
        BettiTable t;
        if (s.oracle == "hochster")
            t = hochster_betti(ideal, k);
        else if (s.oracle == "koszul")
            t = koszul_betti(ideal, k);
        else
            t = resolution_betti(ideal, k, s.generator_budget);
        if (s.format == "json")
            std::cout << io::betti_to_json(t).dump(2) << "\n";
        else if (s.format == "csv")
            std::cout << io::betti_csv(t);
        else
            std::cout << io::betti_text(t);
        return 0;
    }
    if (command == "nu") {
        bool normalized = false;
        MonomialIdeal ideal = load_ideal(s.input, &normalized);
        print_warning(normalized);
        NuTable t = nu_table(ideal, k, rank_options(s), s.generator_budget);
        if (s.format == "json")
            std::cout << io::nu_to_json(t).dump(2) << "\n";
        else if (s.format == "csv")
            std::cout << io::nu_csv(t);
        else
            std::cout << io::nu_text(t);
        if (s.check) {
            auto rep = check_nu_consecutiveness(t);
            std::cout << "euler: " << t.alternating_sum() << "\n";
            std::cout << "consecutiveness: " << (rep.pass ? "pass" : "FAIL (" + rep.clause + ")")
                      << "\n";
            if (!rep.pass) throw PropertyViolation("nu consecutiveness failed");
        }
        return 0;
    }
    if (command == "lyubeznik") {
        bool normalized = false;
        MonomialIdeal ideal = load_ideal(s.input, &normalized);
        print_warning(normalized);
        if (s.subdivide > 0) {
            SimplicialComplex delta = to_complex(ideal.is_squarefree() ? ideal : ideal.radical());
            for (int i = 0; i < s.subdivide; ++i)
                delta = barycentric_subdivision(delta, s.vertex_budget);
            ideal = from_complex(delta);
        }
        LyubeznikTable t = lyubeznik_table(ideal, k, rank_options(s), s.generator_budget);
        if (t.radical_substituted)
            std::cerr << "warning: input was not squarefree; its radical was used\n";
        if (s.format == "json")
            std::cout << io::lyubeznik_to_json(t).dump(2) << "\n";
        else if (s.format == "csv")
            std::cout << io::lyubeznik_csv(t);
        else
            std::cout << io::lyubeznik_text(t);
        if (s.check) {
            auto rep = check_lambda_consecutiveness(t);
            std::cout << "euler: " << t.euler_characteristic() << "\n";
            std::cout << "consecutiveness: " << (rep.pass ? "pass" : "FAIL (" + rep.clause + ")")
                      << "\n";
            if (!rep.pass) throw PropertyViolation("lambda consecutiveness failed");
        }
        return 0;
    }
    // verify
    corpus::BatteryOptions opt;
    if (s.char_given) opt.characteristics = {s.characteristic};
    opt.rank = rank_options(s);
    opt.inject_fault = inject_fault;
    opt.generator_budget = s.generator_budget;
    opt.subdivision_vertex_budget = s.vertex_budget;
    auto res = corpus::run_battery(corpus, opt);
    std::cout << "corpus: " << corpus << "\n";
    std::cout << "checks: " << res.checks << "\n";
    std::cout << "skipped (budget): " << res.skipped_budget << "\n";
    std::cout << "violations: " << res.violations.size() << "\n";
    for (auto& v : res.violations) std::cout << "  " << v << "\n";
    if (!res.violations.empty()) throw PropertyViolation("verification suite reported violations");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolutions, linear strands, nu-tables, and Lyubeznik tables of monomial ideals"};
    app.require_subcommand(1);

    JobSpec spec;
    if (const char* env = std::getenv("LYU_BUDGET")) {
        try {
            int b = std::stoi(env);
            if (b < 1) throw std::invalid_argument("nonpositive");
            spec.generator_budget = b;
            spec.vertex_budget = b;
        } catch (const std::exception&) {
            std::cerr << "error: LYU_BUDGET must be a positive integer\n";
            return 1;
        }
    }

    auto* betti = app.add_subcommand("betti", "Betti table of a monomial ideal");
    add_common(betti, spec);
    betti->add_option("--oracle", spec.oracle, "hochster | koszul | none")
        ->check(CLI::IsMember({"hochster", "koszul", "none"}));

    auto* nu = app.add_subcommand("nu", "nu-table of a monomial ideal");
    add_common(nu, spec);
    nu->add_flag("--check", spec.check, "append Euler and consecutiveness report");

    auto* lyu_cmd = app.add_subcommand("lyubeznik", "Lyubeznik table of a Stanley-Reisner ring");
    add_common(lyu_cmd, spec);
    lyu_cmd->add_flag("--check", spec.check, "append Euler and consecutiveness report");
    lyu_cmd->add_option("--subdivide", spec.subdivide,
                        "compute the table of the k-fold barycentric subdivision")
        ->check(CLI::NonNegativeNumber);

    std::string corpus_name;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("corpus", corpus_name,
                       "n5-exhaustive | paper-examples | random-compositions")
        ->required();
    add_common(verify, spec, false);
    verify->add_flag("--inject-fault", inject_fault,
                     "self-test: perturb one computed table and expect a detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto* sub = app.get_subcommands().front();
    spec.char_given = sub->count("--char") > 0;
    try {
        return run(spec, sub->get_name(), corpus_name, inject_fault);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 3;
    } catch (const io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

// ebraid: compute the osp(1|2)-type oriented-link invariant of braid closures
// by three independent methods, and the Z x Z_4 graded Khovanov-style and
// covering homologies that categorify it.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebraid/corpus.hpp"
#include "ebraid/covering.hpp"
#include "ebraid/errors.hpp"
#include "ebraid/homology.hpp"
#include "ebraid/rep.hpp"
#include "ebraid/skein.hpp"
#include "ebraid/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitMethodDisagreement = 3;
constexpr int kExitResourceCap = 4;

struct BraidArgs {
    int strands = 2;
    std::string word;
};

void add_braid_options(CLI::App* cmd, BraidArgs& args) {
    cmd->add_option("--strands", args.strands, "strand count")->required();
    cmd->add_option("word", args.word, "braid word: whitespace-separated signed letters");
}

int run_jhat(const BraidArgs& args, const std::string& format, const std::string& method) {
    ebraid::BraidWord b = ebraid::parse_braid(args.word, args.strands);
    ebraid::TauLaurent value;
    if (method == "statesum") {
        value = ebraid::jhat(b);
    } else if (method == "tl") {
        value = ebraid::jhat_via_tl(b);
    } else if (method == "oracle") {
        value = ebraid::jhat_oracle(b);
    } else {  // all
        ebraid::TauLaurent via_states = ebraid::jhat(b);
        ebraid::TauLaurent via_tl = ebraid::jhat_via_tl(b);
        ebraid::TauLaurent via_tensors = ebraid::jhat_oracle(b);
        if (via_states != via_tl || via_states != via_tensors) {
            std::cerr << "method disagreement:\n"
                      << "  statesum: " << via_states.to_text() << "\n"
                      << "  tl:       " << via_tl.to_text() << "\n"
                      << "  oracle:   " << via_tensors.to_text() << "\n";
            return kExitMethodDisagreement;
        }
        value = via_states;
    }
    std::cout << (format == "json" ? value.to_json() : value.to_text()) << "\n";
    return kExitOk;
}

int run_homology(const BraidArgs& args, const std::string& format, bool forget, bool dump_cube) {
    ebraid::BraidWord b = ebraid::parse_braid(args.word, args.strands);
    ebraid::ShiftedCube cube = ebraid::build_cube(b);
    if (dump_cube) {
        std::cout << ebraid::cube_to_json(cube) << "\n";
        return kExitOk;
    }
    ebraid::HomologyTable table = ebraid::homology(ebraid::tqft_complex(cube));
    if (forget) {
        ebraid::QTable qt = ebraid::forget_tau(table);
        std::cout << (format == "json" ? ebraid::qtable_to_json(qt) : ebraid::qtable_to_text(qt));
    } else {
        std::cout << (format == "json" ? table.to_json() : table.to_text());
    }
    if (format == "json") std::cout << "\n";
    return kExitOk;
}

int run_covering(const BraidArgs& args, int pi, bool mod2, bool forget, const std::string& format,
                 bool dump_complex) {
    ebraid::BraidWord b = ebraid::parse_braid(args.word, args.strands);
    ebraid::PiComplex cov = ebraid::build_cov_complex(b);
    if (dump_complex) {
        std::cout << cov.to_json() << "\n";
        return kExitOk;
    }
    ebraid::EGradedComplex c = ebraid::specialize_pi(cov, pi);
    if (mod2) {
        auto dims = ebraid::gf2_homology_dims(c);
        if (format == "json") {
            std::cout << "{\"pi\":" << pi << ",\"mod2_dims\":[";
            bool first = true;
            for (const auto& [key, dim] : dims) {
                if (!first) std::cout << ",";
                first = false;
                std::cout << "{\"i\":" << key.first << ",\"q\":" << key.second << ",\"dim\":" << dim
                          << "}";
            }
            std::cout << "]}\n";
        } else {
            std::cout << "  i    q  dim_F2\n";
            for (const auto& [key, dim] : dims)
                std::cout << "  " << key.first << "  " << key.second << "  " << dim << "\n";
        }
        return kExitOk;
    }
    ebraid::HomologyTable table = ebraid::homology(c);
    if (forget) {
        ebraid::QTable qt = ebraid::forget_tau(table);
        if (format == "json")
            std::cout << "{\"pi\":" << pi << ",\"table\":" << ebraid::qtable_to_json(qt) << "}\n";
        else
            std::cout << "pi = " << pi << "\n" << ebraid::qtable_to_text(qt);
    } else {
        if (format == "json")
            std::cout << "{\"pi\":" << pi << ",\"table\":" << table.to_json() << "}\n";
        else
            std::cout << "pi = " << pi << "\n" << table.to_text();
    }
    return kExitOk;
}

std::vector<ebraid::CorpusEntry> corpus_or_builtin(const std::string& path) {
    if (!path.empty()) return ebraid::load_corpus(path);
    if (std::filesystem::exists("corpus.jsonl")) return ebraid::load_corpus("corpus.jsonl");
    return ebraid::builtin_corpus();
}

int run_verify(const std::string& suite, const ebraid::VerifyOptions& opts, const std::string& corpus) {
    ebraid::VerifyReport report;
    if (suite == "markov") {
        report = ebraid::verify_markov(opts);
    } else if (suite == "euler") {
        report = ebraid::verify_euler(opts, corpus_or_builtin(corpus));
    } else if (suite == "oracle") {
        report = ebraid::verify_oracle(opts);
    } else {
        report = ebraid::verify_signs(opts, corpus_or_builtin(corpus));
    }
    std::cout << "suite " << suite << ": " << (report.checks - report.failures) << "/" << report.checks
              << " checks passed\n";
    for (const std::string& msg : report.messages) std::cout << "  FAIL " << msg << "\n";
    return report.ok() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"osp(1|2)-type braid-closure invariant and e-graded homology"};
    app.require_subcommand(1);

    BraidArgs jhat_args;
    std::string jhat_format = "text", jhat_method = "all";
    CLI::App* jhat_cmd = app.add_subcommand("jhat", "evaluate the oriented-link invariant");
    add_braid_options(jhat_cmd, jhat_args);
    jhat_cmd->add_option("--format", jhat_format)->check(CLI::IsMember({"text", "json"}));
    jhat_cmd->add_option("--method", jhat_method)
        ->check(CLI::IsMember({"statesum", "tl", "oracle", "all"}));

    BraidArgs hom_args;
    std::string hom_format = "text";
    bool hom_forget = false, hom_dump = false;
    CLI::App* hom_cmd = app.add_subcommand("homology", "integral e-graded homology of the closure");
    add_braid_options(hom_cmd, hom_args);
    hom_cmd->add_option("--format", hom_format)->check(CLI::IsMember({"text", "json"}));
    hom_cmd->add_flag("--forget-tau", hom_forget, "collapse the Z_4 grading");
    hom_cmd->add_flag("--dump-cube", hom_dump, "print the cube of resolutions as JSON and exit");

    BraidArgs cov_args;
    std::string cov_format = "text";
    int cov_pi = 1;
    bool cov_mod2 = false, cov_forget = false, cov_dump = false;
    CLI::App* cov_cmd = app.add_subcommand("covering", "covering homology at pi = +1 or -1");
    add_braid_options(cov_cmd, cov_args);
    cov_cmd->add_option("--pi", cov_pi, "specialization of pi")->required()->check(CLI::IsMember({1, -1}));
    cov_cmd->add_flag("--mod2", cov_mod2, "report F_2 dimensions per (i, q)");
    cov_cmd->add_flag("--forget-tau", cov_forget, "collapse the Z_4 grading");
    cov_cmd->add_option("--format", cov_format)->check(CLI::IsMember({"text", "json"}));
    cov_cmd->add_flag("--dump-complex", cov_dump, "print the generic Z^pi complex as JSON and exit");

    std::string verify_suite;
    std::string verify_corpus;
    ebraid::VerifyOptions verify_opts;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite on random braids");
    verify_cmd->add_option("suite", verify_suite, "markov | euler | oracle | signs")
        ->required()
        ->check(CLI::IsMember({"markov", "euler", "oracle", "signs"}));
    verify_cmd->add_option("--trials", verify_opts.trials);
    verify_cmd->add_option("--max-strands", verify_opts.max_strands);
    verify_cmd->add_option("--max-crossings", verify_opts.max_crossings);
    verify_cmd->add_option("--seed", verify_opts.seed);
    verify_cmd->add_option("--corpus", verify_corpus, "corpus.jsonl path (default: ./corpus.jsonl)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (jhat_cmd->parsed()) return run_jhat(jhat_args, jhat_format, jhat_method);
        if (hom_cmd->parsed()) return run_homology(hom_args, hom_format, hom_forget, hom_dump);
        if (cov_cmd->parsed())
            return run_covering(cov_args, cov_pi, cov_mod2, cov_forget, cov_format, cov_dump);
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_opts, verify_corpus);
    } catch (const ebraid::MalformedBraid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ebraid::TooManyCrossings& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const ebraid::TooManyStrands& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
    return kExitOk;
}

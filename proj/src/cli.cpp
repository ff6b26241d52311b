#include "multitilde/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "multitilde/json_io.hpp"
#include "multitilde/worked_examples.hpp"

namespace multitilde::cli {

namespace {

// Reads an argument that is inline JSON, "-" for standard input, or a path.
std::string read_document(const std::string& arg, std::istream& in) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        return arg;
    }
    if (arg == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(arg);
    if (!file) {
        throw Error("cannot open '" + arg + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

unsigned default_workers() {
    if (const char* env = std::getenv("TILDE_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct Options {
    std::string output;
    std::string first;
    std::string second;
    std::string third;
    int k = 0;
    long long max_len = -1;
    unsigned workers = 1;
};

int execute(const std::string& command, const Options& opt, std::ostream& out, std::istream& in) {
    auto tilde_arg = [&](const std::string& arg) { return multitilde_from_json(parse_json(read_document(arg, in))); };

    if (command == "compose") {
        const Multitilde t1 = tilde_arg(opt.first);
        const Multitilde t2 = tilde_arg(opt.third);
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(opt.second, &used);
            if (used != opt.second.size()) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception&) {
            throw Error("composition slot '" + opt.second + "' is not an integer");
        }
        out << to_json(compose_partial(t1, k, t2)).dump() << '\n';
        return kSuccess;
    }
    if (command == "act") {
        const Multitilde t = tilde_arg(opt.first);
        const auto langs = languages_from_json(parse_json(read_document(opt.second, in)));
        out << to_json(act_tilde(t, langs)).dump() << '\n';
        return kSuccess;
    }
    if (command == "vectorize") {
        out << to_json(vectorize(tilde_arg(opt.first))).dump() << '\n';
        return kSuccess;
    }
    if (command == "closure") {
        out << to_json(pseudo_closure(tilde_arg(opt.first))).dump() << '\n';
        return kSuccess;
    }
    if (command == "equiv") {
        const bool eq = equivalent(tilde_arg(opt.first), tilde_arg(opt.second));
        Json j;
        j["equivalent"] = eq;
        out << j.dump() << '\n';
        return eq ? kSuccess : kNegative;
    }
    if (command == "count") {
        out << to_json(count_ptt(opt.k, opt.workers)).dump() << '\n';
        return kSuccess;
    }
    if (command == "enumerate") {
        if (opt.workers == 1) {
            PttEnumerator stream(opt.k);
            while (auto t = stream.next()) {
                out << to_json(*t).dump() << '\n';
            }
        } else {
            for (const auto& t : enumerate_ptt(opt.k, opt.workers)) {
                out << to_json(t).dump() << '\n';
            }
        }
        return kSuccess;
    }
    if (command == "compile") {
        out << to_json(compile_star_free(parse(opt.first))).dump() << '\n';
        return kSuccess;
    }
    if (command == "eval") {
        const Emtre e = parse(opt.first);
        if (opt.max_len < 0 && contains_star(e)) {
            throw InvalidValue("expression contains a star; pass --max-len");
        }
        const std::size_t bound = opt.max_len < 0 ? kUnbounded : static_cast<std::size_t>(opt.max_len);
        out << to_json(eval_emtre(e, bound)).dump() << '\n';
        return kSuccess;
    }
    if (command == "paper-examples") {
        const auto results = run_worked_examples();
        const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) {
                out << ": " << r.detail;
            }
            out << '\n';
        }
        out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
        return failed == 0 ? kSuccess : kNegative;
    }
    throw Error("unknown command '" + command + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Multitilde operators: composition, actions on languages, closures and enumeration", "multitilde"};
    app.require_subcommand(1);
    Options opt;
    opt.workers = default_workers();
    app.add_option("-o,--output", opt.output, "Write results to this file instead of standard output");

    auto tilde_help = "multitilde JSON: inline, a file path, or - for standard input";
    auto* compose = app.add_subcommand("compose", "Partial composition T1 o_k T2");
    compose->add_option("t1", opt.first, tilde_help)->required();
    compose->add_option("k", opt.second, "Slot in T1 (1-based)")->required();
    compose->add_option("t2", opt.third, tilde_help)->required();

    auto* act = app.add_subcommand("act", "Apply a multitilde to a list of finite languages");
    act->add_option("tilde", opt.first, tilde_help)->required();
    act->add_option("languages", opt.second, "JSON array of {\"words\": [...]} documents")->required();

    auto* vec = app.add_subcommand("vectorize", "Boolean vectors of the free subsets of T");
    vec->add_option("tilde", opt.first, tilde_help)->required();

    auto* closure = app.add_subcommand("closure", "Pseudotransitive closure of T");
    closure->add_option("tilde", opt.first, tilde_help)->required();

    auto* equiv = app.add_subcommand("equiv", "Exit 0 if T1 and T2 are equivalent, 3 otherwise");
    equiv->add_option("t1", opt.first, tilde_help)->required();
    equiv->add_option("t2", opt.second, tilde_help)->required();

    auto* count = app.add_subcommand("count", "Count pseudotransitive multitildes of arity k");
    count->add_option("k", opt.k, "Arity")->required();
    count->add_option("--workers", opt.workers, "Worker threads (0 = all cores; default TILDE_WORKERS or 1)");

    auto* enumerate = app.add_subcommand("enumerate", "Stream pseudotransitive multitildes of arity k as NDJSON");
    enumerate->add_option("k", opt.k, "Arity")->required();
    enumerate->add_option("--workers", opt.workers, "Worker threads (0 = all cores; default TILDE_WORKERS or 1)");

    auto* compile = app.add_subcommand("compile", "Compile a star-free expression to one multitilde");
    compile->add_option("expr", opt.first, "Expression, e.g. \"ab+1\"")->required();

    auto* eval = app.add_subcommand("eval", "Words of an expression's language up to a length bound");
    eval->add_option("expr", opt.first, "Expression, e.g. \"(a+b)*c\"")->required();
    eval->add_option("--max-len", opt.max_len, "Length bound (required when the expression has a star)")
        ->check(CLI::NonNegativeNumber);

    app.add_subcommand("paper-examples", "Run the reference worked examples and report pass/fail");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            err << "error: cannot write '" << opt.output << "'\n";
            return kInputError;
        }
        sink = &file;
    }
    try {
        return execute(command, opt, *sink, in);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace multitilde::cli

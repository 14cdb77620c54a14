// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Subcommands of the tlsynth command line tool.
 *
 * Exit codes: 0 success, 1 input or usage error, 2 verification or
 * consistency failure.
 */
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlsynth/tlsynth.hpp"

namespace tlsynth::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCheckFailed = 2;

namespace detail {

inline std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw ParseError("cannot write '" + path + "'");
    }
}

inline Matrix load_matrix_file(const std::string &path) {
    std::istringstream is(slurp(path));
    return read_matrix(is);
}

/// "conventional", "poa" or the path of an order file.
inline OrderArray resolve_order(const std::string &choice, int n) {
    if (choice == "conventional") {
        return conventional_order(n);
    }
    if (choice == "poa") {
        return poa_order(n);
    }
    OrderArray o = load_order(slurp(choice));
    if (o.n != n) {
        throw ParseError("order file '" + choice + "' is for n=" +
                         std::to_string(o.n) + ", expected n=" +
                         std::to_string(n));
    }
    return o;
}

inline std::pair<int, int> parse_range(const std::string &text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw ParseError("range must look like a..b, got '" + text + "'");
    }
    const auto lo = parse_uint(std::string_view(text).substr(0, dots), "range");
    const auto hi = parse_uint(std::string_view(text).substr(dots + 2), "range");
    if (lo < 2 || hi < lo || hi > 20) {
        throw ParseError("range must satisfy 2 <= a <= b <= 20");
    }
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

inline void print_row(std::ostream &out, const GateCountRow &row) {
    out << row.n << '\t' << row.palindromic << '\t' << row.conventional
        << '\t' << row.no_canceling << '\n';
}

} // namespace detail

struct CompileArgs {
    std::string input;
    std::string order = "poa";
    std::string output;
    bool cancel = false;
    bool skip_identity = false;
    bool verify = false;
};

inline int cmd_compile(const CompileArgs &args, std::ostream &out,
                       std::ostream &err) {
    Matrix u;
    try {
        u = detail::load_matrix_file(args.input);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (!is_qubit_dim(u.dim())) {
        err << "error: input dimension " << u.dim()
            << " is not a power of two >= 2\n";
        return kInputError;
    }
    if (!all_finite(u)) {
        err << "error: input matrix has non-finite entries\n";
        return kInputError;
    }
    if (!is_unitary(u, kUnitaryTol)) {
        err << "error: input matrix is not unitary: some entry of "
               "U^dagger U - I has magnitude >= 1e-10\n";
        return kInputError;
    }
    const int n = qubit_count(u.dim());

    Circuit circuit;
    try {
        const OrderArray order = detail::resolve_order(args.order, n);
        DecomposeOptions opts;
        opts.update = UpdateMode::TwoRow;
        const Decomposition d = two_level_decompose(u, order, opts);
        circuit = construct_circuit(d, args.skip_identity);
        if (args.cancel) {
            circuit = cancel_pass(circuit);
        }
        detail::write_file(args.output, to_text(circuit));
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (args.verify) {
        const VerificationReport report = verify(u, circuit, kReconstructTol);
        out << report << '\n';
        if (!report.pass) {
            return kCheckFailed;
        }
    }
    return kOk;
}

inline int cmd_verify(const std::string &input, const std::string &circuit_path,
                      double tol, std::ostream &out, std::ostream &err) {
    try {
        const Matrix u = detail::load_matrix_file(input);
        const Circuit c = read_circuit(detail::slurp(circuit_path));
        const VerificationReport report = verify(u, c, tol);
        out << report << '\n';
        return report.pass ? kOk : kCheckFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

/// Writes the gate-count table as TSV. In "both" mode the formulas and the
/// structural enumeration must agree.
inline int cmd_count(int lo, int hi, const std::string &mode, std::ostream &out,
                     std::ostream &err) {
    if (mode != "formula" && mode != "enumerate" && mode != "both") {
        err << "error: --mode must be formula, enumerate or both\n";
        return kInputError;
    }
    int status = kOk;
    out << "n\tpalindromic\tconventional\tno_canceling\n";
    for (int n = lo; n <= hi; ++n) {
        if (mode == "enumerate") {
            detail::print_row(out, table_row_enumerated(n));
            continue;
        }
        const GateCountRow formula = table_row_formula(n);
        if (mode == "both") {
            const GateCountRow counted = table_row_enumerated(n);
            if (!(counted == formula)) {
                err << "mismatch at n=" << n << ": enumerated ";
                detail::print_row(err, counted);
                status = kCheckFailed;
            }
        }
        detail::print_row(out, formula);
    }
    return status;
}

inline int cmd_gray(int n, std::uint64_t from, std::uint64_t to,
                    std::ostream &out, std::ostream &err) {
    try {
        const GrayCode codes = gray_code(from, to, n);
        for (std::size_t i = 0; i < codes.size(); ++i) {
            out << (i ? "," : "") << to_bits(codes[i], n);
        }
        out << '\n';
        return kOk;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

inline void print_trie(std::ostream &out, const GateTrie &trie, int n,
                       const std::vector<PalindromicSubcircuit> &subs,
                       bool id_is_row) {
    auto find = [&](std::size_t id) -> const PalindromicSubcircuit & {
        if (!id_is_row) {
            return subs.at(id);
        }
        for (const auto &s : subs) {
            if (s.row == id) {
                return s;
            }
        }
        throw std::logic_error("leaf without subcircuit");
    };
    trie.dump(
        out, [n](const GateKey &k) { return gate_label(n, k); },
        [&](const std::size_t &id) {
            const auto &m = find(id).middle;
            return std::string("U t=") + std::to_string(m.target) +
                   " c=" + m.pattern();
        },
        [](const std::size_t &id) { return std::to_string(id); });
    out << "leaves=" << trie.leaf_count() << " interior=" << trie.interior_count()
        << " count=" << trie.gate_count() << '\n';
}

/// Trie over the palindromic subcircuits of an uncancelled circuit file.
inline int cmd_trie_circuit(const std::string &path, std::ostream &out,
                            std::ostream &err) {
    try {
        const Circuit c = read_circuit(detail::slurp(path));
        const auto subs = split_palindromes(c);
        print_trie(out, build_trie(subs), c.n, subs, false);
        return kOk;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

/// Trie over one column of an order; leaves are labelled by row.
inline int cmd_trie_column(int n, const std::string &order_choice,
                           std::size_t column, std::ostream &out,
                           std::ostream &err) {
    try {
        const OrderArray order = detail::resolve_order(order_choice, n);
        if (column >= order.columns.size()) {
            err << "error: column " << column << " outside [0, "
                << order.columns.size() - 1 << "]\n";
            return kInputError;
        }
        std::vector<PalindromicSubcircuit> subs;
        for (auto r : order.columns[column]) {
            subs.push_back(build_subcircuit(
                {r, column, ComponentMatrix::identity(), order.dim()}, n));
        }
        const GateTrie trie = build_trie(
            subs, [](const PalindromicSubcircuit &s, std::size_t) {
                return s.row;
            });
        print_trie(out, trie, n, subs, true);
        return kOk;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

/// Parses argv-style arguments (without the program name) and dispatches.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
    CLI::App app{"Compile unitaries into (n-1)-controlled gate circuits"};
    app.name("tlsynth");
    app.require_subcommand(1);

    CompileArgs compile;
    auto *compile_cmd = app.add_subcommand(
        "compile", "Decompose a unitary and write its circuit");
    compile_cmd->add_option("--input", compile.input, "Matrix file")
        ->required();
    compile_cmd
        ->add_option("--order", compile.order,
                     "conventional, poa, or an order file")
        ->capture_default_str();
    compile_cmd
        ->add_option("--output", compile.output, "Circuit file ('-' = stdout)")
        ->required();
    compile_cmd->add_flag("--cancel", compile.cancel,
                          "Remove adjacent identical X gates");
    compile_cmd->add_flag("--skip-identity", compile.skip_identity,
                          "Omit subcircuits whose component is the identity");
    compile_cmd->add_flag("--verify", compile.verify,
                          "Simulate the circuit and compare with the input");

    std::string verify_input, verify_circuit;
    double verify_tol = kReconstructTol;
    auto *verify_cmd =
        app.add_subcommand("verify", "Check a circuit file against a matrix");
    verify_cmd->add_option("--input", verify_input, "Matrix file")->required();
    verify_cmd->add_option("--circuit", verify_circuit, "Circuit file")
        ->required();
    verify_cmd->add_option("--tol", verify_tol, "Frobenius tolerance")
        ->capture_default_str();

    int count_n = 0;
    std::string count_range, count_mode = "both";
    auto *count_cmd =
        app.add_subcommand("count", "Print the gate-count table as TSV");
    auto *count_n_opt =
        count_cmd->add_option("--n", count_n, "Single qubit count")
            ->check(CLI::Range(2, 20));
    auto *count_range_opt =
        count_cmd->add_option("--range", count_range, "Qubit range a..b");
    count_n_opt->excludes(count_range_opt);
    count_cmd
        ->add_option("--mode", count_mode, "formula, enumerate or both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}))
        ->capture_default_str();

    int order_n = 0;
    std::string order_mode = "poa";
    auto *order_cmd = app.add_subcommand("order", "Print an order array");
    order_cmd->add_option("--n", order_n, "Qubit count")->required();
    order_cmd->add_option("--mode", order_mode, "poa or conventional")
        ->check(CLI::IsMember({"poa", "conventional"}))
        ->capture_default_str();

    int gray_n = 0;
    std::uint64_t gray_from = 0, gray_to = 0;
    auto *gray_cmd =
        app.add_subcommand("gray", "Print the Gray code between two states");
    gray_cmd->add_option("--n", gray_n, "Qubit count")->required();
    gray_cmd->add_option("--from", gray_from, "Start state c")->required();
    gray_cmd->add_option("--to", gray_to, "End state r")->required();

    std::string trie_input, trie_order = "poa";
    int trie_n = 0;
    std::size_t trie_column = 0;
    auto *trie_cmd = app.add_subcommand(
        "trie", "Dump the palindrome trie of a circuit or an order column");
    auto *trie_input_opt = trie_cmd->add_option(
        "--input", trie_input, "Uncancelled circuit file");
    auto *trie_n_opt = trie_cmd->add_option("--n", trie_n, "Qubit count");
    trie_cmd->add_option("--order", trie_order,
                         "conventional, poa, or an order file")
        ->capture_default_str();
    auto *trie_col_opt =
        trie_cmd->add_option("--column", trie_column, "Column index");
    trie_input_opt->excludes(trie_n_opt)->excludes(trie_col_opt);

    int random_n = 0;
    std::uint64_t random_seed = 0;
    std::string random_output = "-";
    auto *random_cmd =
        app.add_subcommand("random", "Write a seeded random unitary");
    random_cmd->add_option("--n", random_n, "Qubit count")
        ->required()
        ->check(CLI::Range(1, 7));
    random_cmd->add_option("--seed", random_seed, "Generator seed")
        ->capture_default_str();
    random_cmd->add_option("--output", random_output, "Matrix file")
        ->capture_default_str();

    std::vector<const char *> argv{"tlsynth"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (*compile_cmd) {
        return cmd_compile(compile, out, err);
    }
    if (*verify_cmd) {
        return cmd_verify(verify_input, verify_circuit, verify_tol, out, err);
    }
    if (*count_cmd) {
        try {
            int lo = 2, hi = 7;
            if (*count_n_opt) {
                lo = hi = count_n;
            } else if (*count_range_opt) {
                std::tie(lo, hi) = detail::parse_range(count_range);
            }
            return cmd_count(lo, hi, count_mode, out, err);
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
    }
    if (*order_cmd) {
        try {
            out << save_order(order_mode == "poa" ? poa_order(order_n)
                                                  : conventional_order(order_n));
            return kOk;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
    }
    if (*gray_cmd) {
        return cmd_gray(gray_n, gray_from, gray_to, out, err);
    }
    if (*trie_cmd) {
        if (*trie_input_opt) {
            return cmd_trie_circuit(trie_input, out, err);
        }
        if (!*trie_n_opt || !*trie_col_opt) {
            err << "error: trie needs --input, or --n with --column\n";
            return kInputError;
        }
        return cmd_trie_column(trie_n, trie_order, trie_column, out, err);
    }
    if (*random_cmd) {
        try {
            detail::write_file(random_output,
                               to_text(random_unitary(random_n, random_seed)));
            return kOk;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kInputError;
        }
    }
    return kInputError;
}

} // namespace tlsynth::cli

// subnum - query complement numeration systems built from substitution
// periodic points: representations, values, letters, tables, DOT export
// and verification sweeps.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "subnum/automaton.hpp"
#include "subnum/bundled.hpp"
#include "subnum/compat.hpp"
#include "subnum/multidim.hpp"
#include "subnum/numeration.hpp"

using namespace subnum;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Position parse_position(const std::string& text) {
    try {
        return Position(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

struct SystemOpts {
    std::string system;
    std::string seed;
    std::string digit_sep;

    void attach(CLI::App* cmd, bool with_seed = true) {
        cmd->add_option("--system", system, "bundled substitution name or config file path")
            ->required();
        if (with_seed)
            cmd->add_option("--seed", seed, "two-sided seed \"LEFT|RIGHT\"")->required();
        cmd->add_option("--digit-sep", digit_sep,
                        "separator for digit words (default: none, comma when a digit > 9)");
    }

    PeriodicPoint make() const {
        return PeriodicPoint::make(load_substitution(system), seed);
    }

    char sep() const {
        if (digit_sep.empty()) return '\0';
        if (digit_sep.size() != 1) throw UsageError("--digit-sep takes a single character");
        return digit_sep[0];
    }

    std::string render(const DigitWord& w) const {
        return digit_sep.empty() ? w.str() : w.str(sep());
    }

    DigitWord parse_word(const std::string& text) const {
        return digit_sep.empty() ? DigitWord::parse(text) : DigitWord::parse(text, sep());
    }
};

std::vector<Position> positions_from(const std::vector<std::string>& args) {
    std::vector<Position> out;
    out.reserve(args.size());
    for (const std::string& a : args) out.push_back(parse_position(a));
    return out;
}

std::vector<Position> merged_positions(const std::vector<std::string>& via_option,
                                       const std::vector<std::string>& positional) {
    std::vector<std::string> all = via_option;
    all.insert(all.end(), positional.begin(), positional.end());
    if (all.empty()) throw UsageError("no values given (pass positions after -- or via --n)");
    return positions_from(all);
}

int run_check(const PeriodicPoint& pp, long range) {
    const long N = range;
    Word oracle = pp.expand_segment(-N, N + 1);
    Dfao d = build_dfao(pp);
    DigitWord prev;
    for (long n = -N; n <= N; ++n) {
        DigitWord w = rep(pp, n);
        if (eval(d, w) != oracle[static_cast<std::size_t>(n + N)]) {
            std::cout << "FAIL automaton letter at n=" << n << "\n";
            return 1;
        }
        if (val(pp, w) != n) {
            std::cout << "FAIL round trip at n=" << n << "\n";
            return 1;
        }
        if (n > -N && !order_less(prev, w)) {
            std::cout << "FAIL monotonicity between " << n - 1 << " and " << n << "\n";
            return 1;
        }
        prev = w;
    }
    std::cout << "OK (3 properties × " << 2 * N + 1 << " points)\n";
    return 0;
}

int run_compat_verify(const std::string& which, long range) {
    const bool is_2c = which == "2c";
    PeriodicPoint pp = is_2c ? PeriodicPoint::make(load_substitution("psi2"), "b|a")
                             : PeriodicPoint::make(load_substitution("fibonacci"), "b|a");
    for (long n = -range; n <= range; ++n) {
        DigitWord lhs = rep(pp, n);
        DigitWord rhs = is_2c ? rep_twos_complement(n) : rep_fib_complement(n);
        if (lhs != rhs) {
            std::cout << "FAIL at n=" << n << ": " << lhs.str() << " != " << rhs.str() << "\n";
            return 1;
        }
        Position back = is_2c ? val_twos_complement(rhs) : val_fib_complement(rhs);
        if (back != n) {
            std::cout << "FAIL value round trip at n=" << n << "\n";
            return 1;
        }
    }
    std::cout << "OK (" << which << " equivalence × " << 2 * range + 1 << " points)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complement numeration systems from substitution periodic points"};
    app.require_subcommand(1);

    SystemOpts rep_opts, val_opts, letter_opts, table_opts, dot_opts, pad_opts, zd_opts,
        check_opts;
    std::vector<std::string> rep_no, rep_np, val_words, letter_no, letter_np, pad_no, pad_np,
        zd_ns, zd_seeds;
    long table_from = -10, table_to = 10;
    std::size_t pad_width = 0;
    long check_range = 1000, verify_range = 10000;
    std::string seeds_system, compat_system, compat_rep_n, compat_val_word;

    auto* cmd_rep = app.add_subcommand("rep", "representation of integers");
    rep_opts.attach(cmd_rep);
    cmd_rep->add_option("--n", rep_no, "integer (repeatable)");
    cmd_rep->add_option("values", rep_np, "integers (negatives after --)");

    auto* cmd_val = app.add_subcommand("val", "value of digit words");
    val_opts.attach(cmd_val);
    cmd_val->add_option("words", val_words, "digit words")->required();

    auto* cmd_letter = app.add_subcommand("letter-at", "letter of the periodic point at n");
    letter_opts.attach(cmd_letter);
    cmd_letter->add_option("--n", letter_no, "position (repeatable)");
    cmd_letter->add_option("values", letter_np, "positions (negatives after --)");

    auto* cmd_seeds = app.add_subcommand("seeds", "growing two-sided seeds and their periods");
    cmd_seeds->add_option("--system", seeds_system, "substitution name or path")->required();

    auto* cmd_table = app.add_subcommand("table", "n and rep(n) rows, TSV");
    table_opts.attach(cmd_table);
    cmd_table->add_option("--from", table_from, "lowest n")->required();
    cmd_table->add_option("--to", table_to, "highest n")->required();

    auto* cmd_dot = app.add_subcommand("dot", "automaton in DOT format");
    dot_opts.attach(cmd_dot);

    auto* cmd_pad = app.add_subcommand("pad", "neutral-padded representations");
    pad_opts.attach(cmd_pad);
    cmd_pad->add_option("--width", pad_width, "target length (1 mod p)")->required();
    cmd_pad->add_option("--n", pad_no, "integer (repeatable)");
    cmd_pad->add_option("values", pad_np, "integers (negatives after --)");

    auto* cmd_zd = app.add_subcommand("zd", "vector representation over Z^d");
    zd_opts.attach(cmd_zd, false);
    cmd_zd->add_option("--seed", zd_seeds, "seed per coordinate, or one seed for all")
        ->required();
    cmd_zd->add_option("--n", zd_ns, "coordinate (repeat d times)")->required();

    auto* cmd_compat = app.add_subcommand("compat", "reference complement systems");
    cmd_compat->add_option("--system", compat_system, "2c or fc")
        ->required()
        ->check(CLI::IsMember({"2c", "fc"}));
    auto* compat_rep = cmd_compat->add_subcommand("rep", "representation of an integer");
    compat_rep->add_option("value", compat_rep_n, "integer (negative after --)")->required();
    auto* compat_val = cmd_compat->add_subcommand("val", "value of a binary word");
    compat_val->add_option("word", compat_val_word, "binary word")->required();
    auto* compat_verify =
        cmd_compat->add_subcommand("verify", "sweep against the substitution system");
    compat_verify->add_option("--range", verify_range, "check |n| <= range");
    cmd_compat->require_subcommand(1);

    auto* cmd_check = app.add_subcommand("check", "oracle sweep over one system");
    check_opts.attach(cmd_check);
    cmd_check->add_option("--range", check_range, "check |n| <= range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_rep) {
            PeriodicPoint pp = rep_opts.make();
            for (const Position& n : merged_positions(rep_no, rep_np))
                std::cout << rep_opts.render(rep(pp, n)) << "\n";
        } else if (*cmd_val) {
            PeriodicPoint pp = val_opts.make();
            for (const std::string& w : val_words)
                std::cout << val(pp, val_opts.parse_word(w)) << "\n";
        } else if (*cmd_letter) {
            PeriodicPoint pp = letter_opts.make();
            for (const Position& n : merged_positions(letter_no, letter_np))
                std::cout << pp.substitution().letter_name(letter_at(pp, n)) << "\n";
        } else if (*cmd_seeds) {
            Substitution s = load_substitution(seeds_system);
            for (const SeedInfo& info : enumerate_seeds(s))
                std::cout << s.letter_name(info.seed.left) << "|"
                          << s.letter_name(info.seed.right) << "\t" << info.period << "\n";
        } else if (*cmd_table) {
            if (table_from > table_to) throw UsageError("--from must be <= --to");
            PeriodicPoint pp = table_opts.make();
            std::cout << "n\trep\n";
            for (long n = table_to; n >= table_from; --n)
                std::cout << n << "\t" << table_opts.render(rep(pp, n)) << "\n";
        } else if (*cmd_dot) {
            std::cout << export_dot(build_dfao(dot_opts.make()));
        } else if (*cmd_pad) {
            PeriodicPoint pp = pad_opts.make();
            for (const Position& n : merged_positions(pad_no, pad_np))
                std::cout << pad_opts.render(pad(pp, rep(pp, n), pad_width)) << "\n";
        } else if (*cmd_zd) {
            Substitution s = load_substitution(zd_opts.system);
            std::vector<Position> coords = positions_from(zd_ns);
            if (zd_seeds.size() != 1 && zd_seeds.size() != coords.size())
                throw UsageError("give one --seed or exactly one per coordinate");
            std::vector<PeriodicPoint> pps;
            for (std::size_t i = 0; i < coords.size(); ++i)
                pps.push_back(PeriodicPoint::make(
                    s, zd_seeds[zd_seeds.size() == 1 ? 0 : i]));
            RepMatrix m = rep_zd(pps, coords);
            for (const DigitWord& row : m.rows) std::cout << zd_opts.render(row) << "\n";
            std::cout << m.column_string() << "\n";
        } else if (*cmd_compat) {
            if (*compat_rep) {
                const Position n = parse_position(compat_rep_n);
                DigitWord w = compat_system == "2c" ? rep_twos_complement(n)
                                                    : rep_fib_complement(n);
                std::cout << w.str() << "\n";
            } else if (*compat_val) {
                DigitWord w = DigitWord::parse(compat_val_word);
                std::cout << (compat_system == "2c" ? val_twos_complement(w)
                                                    : val_fib_complement(w))
                          << "\n";
            } else if (*compat_verify) {
                if (verify_range < 0) throw UsageError("--range must be nonnegative");
                return run_compat_verify(compat_system, verify_range);
            }
        } else if (*cmd_check) {
            if (check_range < 0) throw UsageError("--range must be nonnegative");
            return run_check(check_opts.make(), check_range);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

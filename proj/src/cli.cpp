#include "rns/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rns/costmodel.hpp"
#include "rns/matrix_io.hpp"
#include "rns/random.hpp"

namespace rns {

namespace {

struct SystemSpec {
    unsigned Q = 0;
    std::size_t p = 0;
    std::string moduli_csv;
    std::string select = "max";  // max | power-augmented | power-augmented-top
    std::size_t count = 43;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--Q", Q, "digit width in bits; uses all primes below 2^Q");
        cmd->add_option("--p", p, "digit count; uses the first p primes");
        cmd->add_option("--moduli", moduli_csv, "explicit comma-separated modulus list");
        cmd->add_option("--select", select,
                        "modulus selection for --Q: max | power-augmented | power-augmented-top")
            ->check(CLI::IsMember({"max", "power-augmented", "power-augmented-top"}));
        cmd->add_option("--count", count, "modulus count for power-augmented-top (default 43)");
    }

    int sources() const { return (Q != 0) + (p != 0) + (!moduli_csv.empty()); }

    SystemPtr build() const {
        if (sources() != 1)
            throw CLI::ValidationError("system", "give exactly one of --Q, --p, --moduli");
        if (!moduli_csv.empty()) {
            std::vector<std::uint32_t> moduli;
            std::stringstream ss(moduli_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                moduli.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            return RnsSystem::make(moduli);
        }
        if (p != 0) return natural_system(p);
        if (select == "power-augmented") return power_augmented_system(Q);
        if (select == "power-augmented-top") return power_augmented_top_system(Q, count);
        return max_system_for_digit_width(Q);
    }
};

struct SplitSpec {
    std::string frac_moduli_csv;
    unsigned frac_bits = 0;

    void add_flags(CLI::App* cmd, unsigned default_bits) {
        cmd->add_option("--frac-moduli", frac_moduli_csv,
                        "comma-separated moduli forming the fractional range F");
        cmd->add_option("--frac-bits", frac_bits,
                        "pick largest moduli until F >= 2^bits (default " +
                            std::to_string(default_bits) + ")");
        default_bits_ = default_bits;
    }

    SplitPtr build(SystemPtr sys) const {
        if (!frac_moduli_csv.empty()) {
            std::vector<std::uint32_t> moduli;
            std::stringstream ss(frac_moduli_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                moduli.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            return FracSplit::make(std::move(sys), moduli);
        }
        return FracSplit::make_for_precision(std::move(sys), frac_bits ? frac_bits : default_bits_);
    }

private:
    unsigned default_bits_ = 16;
};

std::pair<unsigned, unsigned> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        unsigned v = static_cast<unsigned>(std::stoul(spec));
        return {v, v};
    }
    unsigned a = static_cast<unsigned>(std::stoul(spec.substr(0, dots)));
    unsigned b = static_cast<unsigned>(std::stoul(spec.substr(dots + 2)));
    if (a > b) throw CLI::ValidationError("--q", "range start exceeds end");
    return {a, b};
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::ios_base::failure("cannot open " + path + " for writing");
    f << text;
    if (!f.good()) throw std::ios_base::failure("short write to " + path);
}

std::string format_magnitude(const SystemMetrics& m, const BigInt& R) {
    if (m.decimal_digits <= 40) return R.to_decimal();
    return "~10^" + std::to_string(m.decimal_digits) + " (" +
           std::to_string(m.decimal_digits + 1) + " decimal digits)";
}

void print_system(const RnsSystem& sys, std::ostream& out) {
    SystemMetrics m = metrics(sys);
    out << "p (digits):          " << m.p << "\n";
    out << "P (largest modulus): " << m.P << "\n";
    out << "Q (bits per digit):  " << m.Q << "\n";
    out << "R (range):           " << format_magnitude(m, sys.range()) << "\n";
    out << "n_e = log2(R):       " << format_fixed(m.n_e, 4) << "\n";
    out << "decimal digits:      " << m.decimal_digits << "\n";
    out << "binary digits (2^Q): " << m.binary_digits << "\n";
    out << "efficiency E_R:      " << format_fixed(m.efficiency, 2) << "%\n";
    out << "p / n_e:             " << format_fixed(m.ratio_p_over_ne, 4) << "\n";
}

std::vector<std::uint32_t> parse_digit_list(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return out;
}

std::string join_digits(const std::vector<std::uint32_t>& digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(digits[i]);
    }
    return out;
}

// --- expression evaluation over fractional values ------------------------

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;
    SplitPtr split;
    StepCounter* counter;       // arithmetic steps
    StepCounter* conv_counter;  // literal encoding steps

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos));
    }

    RnsFixed parse_expr() {
        RnsFixed v = parse_term();
        for (;;) {
            if (eat('+'))
                v = add(v, parse_term(), counter);
            else if (eat('-'))
                v = sub(v, parse_term(), counter);
            else
                return v;
        }
    }

    RnsFixed parse_term() {
        RnsFixed v = parse_factor();
        for (;;) {
            if (eat('*'))
                v = mul(v, parse_factor(), counter);
            else if (eat('/'))
                v = div(v, parse_factor(), counter);
            else
                return v;
        }
    }

    RnsFixed parse_factor() {
        skip_ws();
        if (eat('(')) {
            RnsFixed v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) {
            RnsFixed v = parse_factor();
            v.payload = neg(v.payload, counter);
            return v;
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '/'))
            ++pos;
        // "a/b" literal only when the slash is directly between digits with no
        // spaces; otherwise '/' already stopped the scan above. Disambiguate by
        // trying the rational parse and backing off to the integer part.
        std::string_view tok = text.substr(start, pos - start);
        if (tok.empty()) fail("expected a number");
        // greedy "1/3" capture also swallows "6/ (" forms; retry shrinking at '/'
        for (;;) {
            try {
                Rational r = Rational::parse(tok);
                return forward_frac(r, split, conv_counter);
            } catch (const ParseError&) {
                auto slash = tok.rfind('/');
                if (slash == std::string_view::npos || slash == 0) fail("bad number");
                tok = tok.substr(0, slash);
                pos = start + tok.size();
            }
        }
    }

    RnsFixed run() {
        RnsFixed v = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input");
        return v;
    }
};

// --- subcommand bodies ----------------------------------------------------

int cmd_system(const SystemSpec& spec, std::ostream& out) {
    print_system(*spec.build(), out);
    return 0;
}

int cmd_tables(int id, const std::string& range, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    unsigned lo = 0, hi = 0;
    if (!range.empty()) {
        std::tie(lo, hi) = parse_range(range);
    } else {
        switch (id) {
            case 2: lo = 8; hi = 14; break;
            case 3: lo = 4; hi = 14; break;
            case 5: lo = 6; hi = 14; break;
            default: lo = hi = 9; break;
        }
    }
    Table t = emit_table(id, lo, hi);
    std::string text = format == "csv"    ? render_csv(t)
                       : format == "json" ? render_json(t) + "\n"
                                          : render_text(t);
    write_output(text, out_path, out);
    return 0;
}

int cmd_graphs(int id, const std::string& range, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    unsigned lo = 0, hi = 0;
    if (!range.empty()) {
        std::tie(lo, hi) = parse_range(range);
    } else {
        switch (id) {
            case 1: lo = 1; hi = 32; break;
            case 2: lo = 4; hi = 14; break;
            default: lo = 6; hi = 14; break;
        }
    }
    Table t = emit_graph_data(id, lo, hi);
    std::string text = format == "csv"    ? render_csv(t)
                       : format == "json" ? render_json(t) + "\n"
                                          : render_text(t);
    write_output(text, out_path, out);
    return 0;
}

struct ConvertArgs {
    SystemSpec system;
    SplitSpec split;
    std::string forward_int_value;
    std::string forward_frac_value;
    std::string digits_csv;
    bool reverse = false;
    bool reverse_frac_mode = false;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out) {
    SystemPtr sys = args.system.build();
    StepCounter sc;
    if (!args.forward_int_value.empty()) {
        RnsInt v = forward_int(BigInt::from_decimal(args.forward_int_value), sys, &sc);
        out << "digits: " << join_digits(v.digits) << "\n";
        out << "mixed-radix: " << join_digits(to_mixed_radix(v).digits) << "\n";
        out << "digit steps: " << sc.digit_steps << "\n";
        return 0;
    }
    if (!args.forward_frac_value.empty()) {
        SplitPtr split = args.split.build(sys);
        RnsFixed v = forward_frac(Rational::parse(args.forward_frac_value), split, &sc);
        out << "payload digits: " << join_digits(v.payload.digits) << "\n";
        out << "F: " << split->frac_range().to_decimal() << "\n";
        out << "payload: " << reverse_int(v.payload).to_decimal() << "\n";
        out << "digit steps: " << sc.digit_steps << "\n";
        return 0;
    }
    if (args.reverse || args.reverse_frac_mode) {
        if (args.digits_csv.empty())
            throw CLI::ValidationError("convert", "--reverse needs --digits d1,d2,...");
        auto digits = parse_digit_list(args.digits_csv);
        if (digits.size() != sys->p())
            throw CLI::ValidationError("convert", "need exactly " + std::to_string(sys->p()) +
                                                      " digits for this system");
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] >= sys->moduli()[i])
                throw RangeError("digit " + std::to_string(digits[i]) +
                                 " is out of range for modulus " +
                                 std::to_string(sys->moduli()[i]));
        RnsInt v{sys, digits};
        if (args.reverse_frac_mode) {
            SplitPtr split = args.split.build(sys);
            Rational r = reverse_frac(RnsFixed{split, v}, &sc);
            out << "value: " << r.to_string() << "\n";
            out << "decimal: " << r.to_decimal(12) << "\n";
        } else {
            out << "value: " << reverse_int(v, &sc).to_decimal() << "\n";
            out << "representative: " << from_mixed_radix(to_mixed_radix(v)).to_decimal() << "\n";
        }
        out << "digit steps: " << sc.digit_steps << "\n";
        return 0;
    }
    throw CLI::ValidationError("convert", "give one of --int, --frac, --reverse");
}

int cmd_eval(const SystemSpec& system, const SplitSpec& split_spec, const std::string& expr,
             std::ostream& out) {
    SystemPtr sys = system.sources() == 0 ? natural_system(8) : system.build();
    SplitPtr split = split_spec.build(sys);
    StepCounter ops, conv;
    ExprParser parser{expr, 0, split, &ops, &conv};
    RnsFixed v = parser.run();
    Rational r = reverse_frac(v);
    out << "value: " << r.to_string() << "\n";
    out << "decimal: " << r.to_decimal(12) << "\n";
    out << "payload: " << reverse_int(v.payload).to_decimal() << " / "
        << split->frac_range().to_decimal() << "\n";
    out << "digit steps: " << ops.digit_steps << " arithmetic + " << conv.digit_steps
        << " conversion (p = " << sys->p() << ")\n";
    return 0;
}

struct MatmulArgs {
    SystemSpec system;
    SplitSpec split;
    std::string a_path, b_path;
    std::size_t random_M = 0;
    std::uint64_t seed = 1;
    std::size_t places = 8;
};

int cmd_matmul(const MatmulArgs& args, std::ostream& out) {
    SystemPtr sys = args.system.build();
    SplitPtr split = args.split.build(sys);

    FixedMatrix a, b;
    if (args.random_M > 0) {
        SplitMix64 rng(args.seed);
        a = random_matrix(split, args.random_M, rng);
        b = random_matrix(split, args.random_M, rng);
    } else {
        if (args.a_path.empty() || args.b_path.empty())
            throw CLI::ValidationError("matmul", "give --a FILE and --b FILE, or --random M");
        std::ifstream fa(args.a_path), fb(args.b_path);
        if (!fa) throw std::ios_base::failure("cannot open " + args.a_path);
        if (!fb) throw std::ios_base::failure("cannot open " + args.b_path);
        a = encode_matrix(parse_matrix_csv(fa), split);
        b = encode_matrix(parse_matrix_csv(fb), split);
    }

    StepCounter sc;
    FixedMatrix c = matmul_delayed(a, b, &sc);

    // exact oracle on the decoded inputs
    auto av = decode_matrix(a), bv = decode_matrix(b);
    Rational max_err;
    Rational ulp(BigInt(1), split->frac_range());
    auto cv = decode_matrix(c);
    for (std::size_t i = 0; i < c.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j) {
            Rational exact;
            for (std::size_t k = 0; k < a.cols; ++k) exact = exact + av[i][k] * bv[k][j];
            Rational err = (cv[i][j] - exact).abs();
            if (err > max_err) max_err = err;
        }

    out << matrix_to_csv(cv, args.places);
    out << "max |error|: " << max_err.to_string() << " (ulp = " << ulp.to_string() << ")\n";
    out << "normalizations: " << sc.normalizations << "\n";
    SystemMetrics m = metrics(*sys);
    const std::size_t M = a.rows;
    const std::uint64_t expected_steps =
        M * M * M + M * M * (M - 1) + M * M * (2 * m.p - 1);
    out << "digit steps: " << sc.digit_steps << " (expected " << expected_steps << ")\n";
    out << "model clocks, delayed rns: "
        << format_fixed(matmul_clocks_rns_delayed(M, m.p), 0) << "\n";
    out << "model clocks, binary 2N/digit: "
        << format_fixed(matmul_clocks_binary(M, m.binary_digits), 0) << "\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"residue number system calculator"};
    app.require_subcommand(1);

    // system
    auto* sys_cmd = app.add_subcommand("system", "print system metrics");
    SystemSpec sys_spec;
    sys_spec.add_flags(sys_cmd);

    // tables
    auto* tab_cmd = app.add_subcommand("tables", "emit digit-growth and cost tables");
    int table_id = 3;
    std::string tab_range, tab_format = "text", tab_out;
    tab_cmd->add_option("--id", table_id, "table id: 2, 3 or 5")->required();
    tab_cmd->add_option("--q", tab_range, "digit width range A..B");
    tab_cmd->add_option("--format", tab_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    tab_cmd->add_option("--out", tab_out, "write to file instead of stdout");

    // graphs
    auto* gr_cmd = app.add_subcommand("graphs", "emit plot data series");
    int graph_id = 1;
    std::string gr_range, gr_format = "text", gr_out;
    gr_cmd->add_option("--id", graph_id, "graph id: 1 (n vs p), 2 (digit counts), 3 (ratio)")
        ->required();
    gr_cmd->add_option("--q", gr_range, "range A..B (graph 1: digit count, 2-3: digit width)");
    gr_cmd->add_option("--format", gr_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    gr_cmd->add_option("--out", gr_out, "write to file instead of stdout");

    // convert
    auto* conv_cmd = app.add_subcommand("convert", "forward and reverse conversion");
    ConvertArgs conv;
    conv.system.add_flags(conv_cmd);
    conv.split.add_flags(conv_cmd, 16);
    conv_cmd->add_option("--int", conv.forward_int_value, "integer to convert into residues");
    conv_cmd->add_option("--frac", conv.forward_frac_value,
                         "fraction (a/b or decimal) to convert");
    conv_cmd->add_flag("--reverse", conv.reverse, "reverse-convert --digits");
    conv_cmd->add_flag("--reverse-frac", conv.reverse_frac_mode,
                       "reverse-convert --digits as a fractional payload");
    conv_cmd->add_option("--digits", conv.digits_csv, "residue digits d1,d2,...");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate +,-,*,/ over fractional values");
    SystemSpec eval_sys;
    SplitSpec eval_split;
    std::string expr;
    eval_sys.add_flags(eval_cmd);
    eval_split.add_flags(eval_cmd, 16);
    eval_cmd->add_option("expr", expr, "expression, e.g. \"1/3 * 3/5\"")->required();

    // matmul
    auto* mm_cmd = app.add_subcommand("matmul", "delayed-normalization matrix multiply");
    MatmulArgs mm;
    mm.system.add_flags(mm_cmd);
    mm.split.add_flags(mm_cmd, 32);
    mm_cmd->add_option("--a", mm.a_path, "left matrix CSV");
    mm_cmd->add_option("--b", mm.b_path, "right matrix CSV");
    mm_cmd->add_option("--random", mm.random_M, "random square size M instead of files");
    mm_cmd->add_option("--seed", mm.seed, "PRNG seed for --random (SplitMix64)");
    mm_cmd->add_option("--places", mm.places, "decimal places in the printed result");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        // CLI11 renders contextual help or the error message itself; fold its
        // exit codes into the documented 0/2 convention
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (sys_cmd->parsed()) return cmd_system(sys_spec, out);
        if (tab_cmd->parsed()) return cmd_tables(table_id, tab_range, tab_format, tab_out, out);
        if (gr_cmd->parsed()) return cmd_graphs(graph_id, gr_range, gr_format, gr_out, out);
        if (conv_cmd->parsed()) return cmd_convert(conv, out);
        if (eval_cmd->parsed()) return cmd_eval(eval_sys, eval_split, expr, out);
        if (mm_cmd->parsed()) return cmd_matmul(mm, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SystemError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SystemMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DivideByZeroError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rns

#include "rns/costmodel.hpp"

#include <cmath>
#include <cstdio>

namespace rns {

namespace {

std::int64_t iround(double v) { return static_cast<std::int64_t>(std::llround(v)); }

CostParams params_for(const RnsSystem& sys) {
    SystemMetrics m = metrics(sys);
    CostParams out;
    out.Q = m.Q;
    out.p = m.p;
    out.n_e = m.n_e;
    out.n_e_int = static_cast<std::int64_t>(std::ceil(m.n_e));
    out.binary_digits = m.binary_digits;
    return out;
}

}  // namespace

std::string format_fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

double matmul_clocks_binary(std::size_t M, std::int64_t N) {
    double m = static_cast<double>(M);
    return m * m * m * 2.0 * static_cast<double>(N);
}

double matmul_clocks_rns_delayed(std::size_t M, std::size_t p) {
    double m = static_cast<double>(M);
    return m * m * m + m * m * 2.0 * static_cast<double>(p);
}

double matmul_clocks_strassen_binary(std::size_t M, std::int64_t N) {
    return std::pow(static_cast<double>(M), 2.807) * static_cast<double>(N);
}

double matmul_clocks_strassen_rns(std::size_t M, std::size_t p) {
    double m = static_cast<double>(M);
    return std::pow(m, 2.807) + m * m * static_cast<double>(p);
}

Model model_for(unsigned Q) {
    if (Q < 4 || Q > 20) throw SystemError("model_for supports Q in [4, 20]");
    SystemPtr sys = max_system_for_digit_width(Q);
    Model m;
    m.params = params_for(*sys);
    const double p = static_cast<double>(m.params.p);
    const double N = static_cast<double>(m.params.binary_digits);
    m.report.frac_mul = {p, 2 * p};
    m.report.compare = {p, 2 * p};
    m.report.reverse = {p, p};
    m.report.forward = {N, N};
    m.report.schoolbook_add = N;
    m.report.lookahead_add = N / std::log2(N);
    m.report.digit_mul = 2 * N;
    m.report.karatsuba = std::pow(N, 1.585);
    m.report.newton_div = N;
    const double ne_int = static_cast<double>(m.params.n_e_int);
    m.interpretation.log2_p = std::log2(p);
    m.interpretation.ne_over_log2p = ne_int / m.interpretation.log2_p;
    m.interpretation.log2p_over_q = m.interpretation.log2_p / Q;
    m.interpretation.ne_over_q = ne_int / Q;
    m.interpretation.two_ne_over_q = iround(2.0 * ne_int / Q);
    return m;
}

Table emit_table(int table_id, unsigned q_lo, unsigned q_hi) {
    if (q_lo > q_hi) throw SystemError("empty digit-width range");
    Table t;
    t.id = "table" + std::to_string(table_id);
    switch (table_id) {
        case 2:
            t.columns = {"Q", "p", "decimal_digits", "n_e", "p_over_ne"};
            break;
        case 3:
            t.columns = {"Q", "p", "binary_digits", "n_e", "P"};
            break;
        case 5:
            t.columns = {"Q",         "p",          "n_e",       "log2_p",
                         "ne_over_log2p", "log2p_over_Q", "ne_over_Q", "two_ne_over_Q"};
            break;
        default:
            throw SystemError("unknown table id " + std::to_string(table_id));
    }
    for (unsigned Q = q_lo; Q <= q_hi; ++Q) {
        std::vector<std::string> row;
        if (table_id == 5) {
            Model model = model_for(Q);
            const InterpretationRow& r5 = model.interpretation;
            row = {std::to_string(Q),
                   std::to_string(model.params.p),
                   std::to_string(model.params.n_e_int),
                   format_fixed(r5.log2_p, 5),
                   format_fixed(r5.ne_over_log2p, 2),
                   format_fixed(r5.log2p_over_q, 4),
                   format_fixed(r5.ne_over_q, 2),
                   std::to_string(r5.two_ne_over_q)};
        } else {
            SystemMetrics m = metrics(*max_system_for_digit_width(Q));
            if (table_id == 2)
                row = {std::to_string(Q), std::to_string(m.p), std::to_string(m.decimal_digits),
                       std::to_string(static_cast<std::int64_t>(std::ceil(m.n_e))),
                       format_fixed(m.ratio_p_over_ne, 2)};
            else
                row = {std::to_string(Q), std::to_string(m.p), std::to_string(m.binary_digits),
                       format_fixed(m.n_e, 2), std::to_string(m.P)};
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table emit_graph_data(int graph_id, unsigned lo, unsigned hi) {
    if (lo > hi || lo == 0) throw SystemError("invalid graph range");
    Table t;
    t.id = "graph" + std::to_string(graph_id);
    switch (graph_id) {
        case 1: {
            t.columns = {"p", "n_e", "karatsuba"};
            for (unsigned p = lo; p <= hi; ++p) {
                SystemMetrics m = metrics(*natural_system(p));
                t.rows.push_back({std::to_string(p), format_fixed(m.n_e, 2),
                                  format_fixed(std::pow(m.n_e, 1.585), 2)});
            }
            break;
        }
        case 2: {
            t.columns = {"Q", "p", "binary_digits"};
            for (unsigned Q = lo; Q <= hi; ++Q) {
                SystemMetrics m = metrics(*max_system_for_digit_width(Q));
                t.rows.push_back(
                    {std::to_string(Q), std::to_string(m.p), std::to_string(m.binary_digits)});
            }
            break;
        }
        case 3: {
            t.columns = {"Q", "log2p_over_Q"};
            for (unsigned Q = lo; Q <= hi; ++Q) {
                SystemMetrics m = metrics(*max_system_for_digit_width(Q));
                t.rows.push_back(
                    {std::to_string(Q),
                     format_fixed(std::log2(static_cast<double>(m.p)) / Q, 4)});
            }
            break;
        }
        default:
            throw SystemError("unknown graph id " + std::to_string(graph_id));
    }
    return t;
}

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string render_text(const Table& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += "  ";
        out += pad(t.columns[i], width[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += pad(row[i], width[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    auto is_number = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        bool dot = false;
        for (; i < s.size(); ++i) {
            if (s[i] == '.' && !dot)
                dot = true;
            else if (s[i] < '0' || s[i] > '9')
                return false;
        }
        return true;
    };
    std::string out = "{\"table_id\":" + quote(t.id) + ",\"columns\":[";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += quote(t.columns[i]);
    }
    out += "],\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) out += ',';
            out += is_number(t.rows[r][i]) ? t.rows[r][i] : quote(t.rows[r][i]);
        }
        out += ']';
    }
    out += "]}";
    return out;
}

ValidationResult validate_counters(const CostParams& params, std::span<const MeasuredOp> measured) {
    ValidationResult res;
    const auto p = static_cast<std::uint64_t>(params.p);
    auto fail = [&](const MeasuredOp& m, const std::string& bound) {
        res.pass = false;
        res.failures.push_back(m.op + " measured " + std::to_string(m.steps) + " steps, expected " +
                               bound);
    };
    for (const MeasuredOp& m : measured) {
        if (m.op == "add" || m.op == "sub" || m.op == "int_mul") {
            if (m.steps != 1) fail(m, "1");
        } else if (m.op == "frac_mul") {
            if (m.steps < p || m.steps > 2 * p)
                fail(m, "[" + std::to_string(p) + ", " + std::to_string(2 * p) + "]");
        } else if (m.op == "compare") {
            if (m.steps > 2 * p) fail(m, "<= " + std::to_string(2 * p));
        } else if (m.op == "reverse") {
            if (m.steps != p) fail(m, std::to_string(p));
        } else {
            fail(m, "a known operation name");
        }
    }
    return res;
}

ApproxCheckpoint approx_checkpoint(unsigned Q) {
    SystemPtr sys = max_system_for_digit_width(Q);
    ApproxCheckpoint c;
    c.Q = Q;
    c.p_true = sys->p();
    c.n_e = sys->range().log2();
    const double log2p = std::log2(static_cast<double>(c.p_true));
    c.estimate = c.n_e / log2p;
    c.solved = approx_digits(c.n_e);
    const double t = static_cast<double>(c.p_true);
    const double gap = std::abs(c.estimate - t);
    c.err_vs_estimate = 100.0 * gap / c.estimate;
    c.err_vs_true = 100.0 * gap / t;
    c.err_symmetric = 100.0 * gap / (0.5 * (c.estimate + t));
    return c;
}

}  // namespace rns

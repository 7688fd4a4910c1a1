#include "rns/matrix_io.hpp"

#include <istream>
#include <sstream>

#include "rns/random.hpp"

namespace rns {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<std::vector<Rational>> parse_matrix_csv(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<Rational> row;
        std::stringstream ss(line);
        std::string token;
        while (std::getline(ss, token, ',')) row.push_back(Rational::parse(trim(token)));
        if (!rows.empty() && rows.front().size() != row.size())
            throw ParseError("ragged matrix row: expected " +
                             std::to_string(rows.front().size()) + " columns, found " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    return rows;
}

FixedMatrix encode_matrix(const std::vector<std::vector<Rational>>& values, SplitPtr split) {
    FixedMatrix m;
    m.rows = values.size();
    m.cols = values.front().size();
    m.payloads.reserve(m.rows * m.cols);
    for (const auto& row : values)
        for (const auto& v : row) m.payloads.push_back(forward_frac(v, split).payload);
    m.split = std::move(split);
    return m;
}

std::vector<std::vector<Rational>> decode_matrix(const FixedMatrix& m) {
    std::vector<std::vector<Rational>> out(m.rows, std::vector<Rational>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out[i][j] = Rational(reverse_int(m.at(i, j)), m.split->frac_range());
    return out;
}

std::string matrix_to_csv(const std::vector<std::vector<Rational>>& values, std::size_t places) {
    std::string out;
    for (const auto& row : values) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += row[j].to_decimal(places);
        }
        out += '\n';
    }
    return out;
}

FixedMatrix random_matrix(SplitPtr split, std::size_t M, SplitMix64& rng) {
    FixedMatrix m;
    m.rows = m.cols = M;
    m.payloads.reserve(M * M);
    for (std::size_t i = 0; i < M * M; ++i) {
        BigInt payload = random_signed(rng, split->frac_range());
        m.payloads.push_back(forward_int(payload, split->system()));
    }
    m.split = std::move(split);
    return m;
}

}  // namespace rns

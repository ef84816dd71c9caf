#include "sroots/io.hpp"

#include <charconv>
#include <sstream>

namespace sroots {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

template <class Int>
Int to_int(std::string_view tok, const char* what) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
    return v;
}

// Next line with content; false at end of input.
bool next_line(std::istream& in, std::vector<std::string>& toks) {
    for (std::string line; std::getline(in, line);) {
        toks = tokens_of(line);
        if (!toks.empty()) return true;
    }
    return false;
}

}  // namespace

SeriesPoly Instance::poly(const PrimeField& F) const {
    std::vector<Fp> data;
    data.reserve(rows.size() * d);
    for (const auto& row : rows)
        for (std::uint64_t c : row) data.push_back(F.from_uint(c));
    return SeriesPoly(d, std::move(data));
}

Instance parse_instance(std::istream& in) {
    std::vector<std::string> toks;
    if (!next_line(in, toks) || toks.size() != 2) throw ParseError("first line must be 'p d'");
    const auto p = to_int<std::int64_t>(toks[0], "modulus");
    const auto d = to_int<std::int64_t>(toks[1], "precision");
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParameters("p = " + toks[0] + " is not a prime below 2^31");
    if (d < 1) throw InvalidParameters("d = " + toks[1] + " must be >= 1");

    if (!next_line(in, toks) || toks.size() != 1) throw ParseError("second line must be 'n'");
    const auto n = to_int<std::size_t>(toks[0], "degree");

    Instance inst{static_cast<std::uint64_t>(p), static_cast<std::size_t>(d), {}};
    inst.rows.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (!next_line(in, toks)) throw ParseError("missing coefficient row " + std::to_string(j));
        if (toks.size() != inst.d)
            throw ParseError("row " + std::to_string(j) + " has " + std::to_string(toks.size()) +
                             " entries, expected " + std::to_string(inst.d));
        std::vector<std::uint64_t> row;
        row.reserve(inst.d);
        for (const auto& tok : toks) {
            const auto c = to_int<std::uint64_t>(tok, "coefficient");
            if (c >= inst.p) throw ParseError("coefficient " + tok + " not reduced modulo p");
            row.push_back(c);
        }
        inst.rows.push_back(std::move(row));
    }
    if (next_line(in, toks)) throw ParseError("trailing data after the last row");
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.p << ' ' << inst.d << '\n' << inst.n() << '\n';
    for (const auto& row : inst.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

Instance make_instance(const SeriesPoly& Q, std::uint64_t p) {
    Instance inst{p, Q.prec(), {}};
    // The zero polynomial still needs one row.
    const std::size_t rows = std::max<std::size_t>(Q.rows(), 1);
    for (std::size_t j = 0; j < rows; ++j) {
        std::vector<std::uint64_t> row(Q.prec());
        for (std::size_t i = 0; i < Q.prec(); ++i) row[i] = Q.at(j, i).v;
        inst.rows.push_back(std::move(row));
    }
    return inst;
}

RootSet parse_root_set(std::istream& in, std::uint64_t p) {
    std::vector<Root> roots;
    std::vector<std::string> toks;
    for (std::size_t lineno = 1; next_line(in, toks); ++lineno) {
        const std::string where = "root line " + std::to_string(lineno);
        if (toks.size() < 3 || !toks[0].starts_with("t=") || !toks[1].starts_with("m=") || !toks[2].starts_with("f="))
            throw ParseError(where + ": expected 't=<t> m=<m> f= ...'");
        const auto t = to_int<std::size_t>(std::string_view(toks[0]).substr(2), "t");
        const auto m = to_int<std::size_t>(std::string_view(toks[1]).substr(2), "m");
        std::vector<std::string_view> coeffs;
        if (toks[2].size() > 2) coeffs.push_back(std::string_view(toks[2]).substr(2));
        for (std::size_t k = 3; k < toks.size(); ++k) coeffs.push_back(toks[k]);
        if (coeffs.size() != t)
            throw ParseError(where + ": t=" + std::to_string(t) + " but " + std::to_string(coeffs.size()) +
                             " coefficients");
        Root r{{}, m};
        for (auto c : coeffs) {
            const auto v = to_int<std::uint64_t>(c, "coefficient");
            if (v >= p) throw ParseError(where + ": coefficient not reduced modulo p");
            r.f.push_back(Fp{static_cast<std::uint32_t>(v)});
        }
        roots.push_back(std::move(r));
    }
    return RootSet(std::move(roots));
}

RootSet parse_root_set(const std::string& text, std::uint64_t p) {
    std::istringstream ss(text);
    return parse_root_set(ss, p);
}

std::string format_root_set(const RootSet& rs) {
    std::string out;
    for (const Root& r : rs) out += format_root(r) + "\n";
    return out;
}

}  // namespace sroots

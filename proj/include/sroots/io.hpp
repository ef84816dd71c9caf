#pragma once

#include "sroots/rootset.hpp"

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sroots {

/// Malformed text input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input with unusable parameters (p not prime, d < 1, ...).
struct InvalidParameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text instance: "p d", then "n", then n+1 rows of d residues; row j holds
/// the x-coefficients of y^j.
struct Instance {
    std::uint64_t p = 0;
    std::size_t d = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    std::size_t n() const noexcept { return rows.empty() ? 0 : rows.size() - 1; }
    SeriesPoly poly(const PrimeField& F) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);
Instance make_instance(const SeriesPoly& Q, std::uint64_t p);

/// Root lines "t=<t> m=<m> f= c0 c1 ...". Coefficients must lie in [0, p).
RootSet parse_root_set(std::istream& in, std::uint64_t p);
RootSet parse_root_set(const std::string& text, std::uint64_t p);
std::string format_root_set(const RootSet& rs);

}  // namespace sroots

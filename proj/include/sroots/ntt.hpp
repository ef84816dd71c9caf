#pragma once

#include "sroots/field.hpp"

#include <span>
#include <vector>

namespace sroots::ntt {

// Univariate product kernel over F_p. Small operands go through schoolbook
// multiplication. Larger ones use a number-theoretic transform directly
// modulo p when p - 1 has enough factors of two, and otherwise three
// transform-friendly 30-bit primes with CRT recombination (enough headroom
// for any p < 2^31 and lengths up to 2^23).

std::vector<Fp> multiply(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b);

std::vector<Fp> multiply_schoolbook(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b);

/// Forces the transform path (direct or CRT), regardless of operand sizes.
std::vector<Fp> multiply_transform(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b);

/// a * b modulo z^len - 1; len is a power of two at least as long as each
/// operand.
std::vector<Fp> multiply_cyclic(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b, std::size_t len);
/// Transform of one operand, kept so that it can enter several products.
/// One lane for a direct transform, three for the CRT route.
struct Spectrum {
    std::size_t len = 0;
    std::vector<std::vector<std::uint32_t>> lanes;
};
/// Spectrum of a zero-padded to len (a power of two, at least a.size()).
Spectrum spectrum(const PrimeField& F, std::span<const Fp> a, std::size_t len);
/// a * b modulo z^len - 1 from two spectra of the same length.
std::vector<Fp> multiply_spectra(const PrimeField& F, const Spectrum& a, const Spectrum& b);
/// True when a length-`len` cyclic transform exists modulo p itself.
bool supports_direct_transform(const PrimeField& F, std::size_t len);

}  // namespace sroots::ntt

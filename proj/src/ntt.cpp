#include "sroots/ntt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace sroots::ntt {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr std::size_t kSchoolbookCutoff = 48;

// Montgomery arithmetic for an odd modulus below 2^31, R = 2^32.
class Montgomery {
public:
    explicit Montgomery(u32 m) : m_(m) {
        u32 inv = m;
        for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
        neg_inv_ = ~inv + 1;
        r2_ = static_cast<u32>((static_cast<unsigned __int128>(1) << 64) % m);
    }

    u32 modulus() const { return m_; }
    // Branch-free so the butterfly loops vectorise.
    u32 reduce(u64 t) const {
        const u32 q = static_cast<u32>(t) * neg_inv_;
        const u32 u = static_cast<u32>((t + static_cast<u64>(q) * m_) >> 32);
        return std::min(u, u - m_);
    }
    u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
    u32 to(u32 a) const { return mul(a, r2_); }
    u32 from(u32 a) const { return reduce(a); }
    u32 add(u32 a, u32 b) const {
        const u32 s = a + b;
        return std::min(s, s - m_);
    }
    u32 sub(u32 a, u32 b) const {
        const u32 s = a - b;
        return std::min(s, s + m_);
    }
    u32 pow(u32 a, u64 e) const {
        u32 r = to(1);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

private:
    u32 m_;
    u32 neg_inv_;
    u32 r2_;
};

// Twiddles for one modulus: entries [h, 2h) hold the powers w^0..w^(h-1) of
// a primitive 2h-th root of unity, forward and inverse, in Montgomery form.
struct Twiddles {
    std::vector<u32> fwd{0}, inv{0};  // slot 0 unused
};

const Twiddles& twiddles_for(const Montgomery& M, u32 root, std::size_t n) {
    thread_local std::map<u32, Twiddles> cache;
    Twiddles& t = cache[M.modulus()];
    const u32 m = M.modulus();
    while (t.fwd.size() < n) {
        const std::size_t h = t.fwd.size();  // append level [h, 2h)
        const u32 w = M.pow(M.to(root), (m - 1) / (2 * h));
        const u32 wi = M.pow(w, m - 2);
        u32 a = M.to(1), b = M.to(1);
        for (std::size_t j = 0; j < h; ++j) {
            t.fwd.push_back(a);
            t.inv.push_back(b);
            a = M.mul(a, w);
            b = M.mul(b, wi);
        }
    }
    return t;
}

// Decimation in frequency: natural order in, bit-reversed order out.
void forward(std::vector<u32>& a, const Montgomery& M, const std::vector<u32>& w) {
    const std::size_t n = a.size();
    for (std::size_t half = n / 2; half >= 1; half >>= 1) {
        const u32* tw = w.data() + half;
        for (std::size_t i = 0; i < n; i += 2 * half) {
            u32* x = a.data() + i;
            u32* y = x + half;
            for (std::size_t j = 0; j < half; ++j) {
                const u32 u = x[j], v = y[j];
                x[j] = M.add(u, v);
                y[j] = M.mul(M.sub(u, v), tw[j]);
            }
        }
    }
}

// Decimation in time with inverse twiddles; undoes forward() up to a factor n.
void backward(std::vector<u32>& a, const Montgomery& M, const std::vector<u32>& w) {
    const std::size_t n = a.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        const u32* tw = w.data() + half;
        for (std::size_t i = 0; i < n; i += 2 * half) {
            u32* x = a.data() + i;
            u32* y = x + half;
            for (std::size_t j = 0; j < half; ++j) {
                const u32 u = x[j], v = M.mul(y[j], tw[j]);
                x[j] = M.add(u, v);
                y[j] = M.sub(u, v);
            }
        }
    }
}

// Transform of raw residues (read as Montgomery forms of a R^-1) modulo the
// transform-friendly prime m, zero-padded to n.
std::vector<u32> lane_forward(std::span<const Fp> a, u32 m, u32 root, std::size_t n) {
    const Montgomery M(m);
    const Twiddles& tw = twiddles_for(M, root, n);
    std::vector<u32> fa(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i].v % m;
    forward(fa, M, tw.fwd);
    return fa;
}

// Pointwise product of two lane transforms, back to coefficients.
std::vector<u32> lane_product(std::vector<u32> fa, const std::vector<u32>& fb, u32 m, u32 root,
                              std::size_t out_len) {
    const std::size_t n = fa.size();
    const Montgomery M(m);
    const Twiddles& tw = twiddles_for(M, root, n);
    for (std::size_t i = 0; i < n; ++i) fa[i] = M.mul(fa[i], fb[i]);
    backward(fa, M, tw.inv);
    fa.resize(out_len);
    // x holds a b R^-1 n; multiply by R^2 / n and reduce once.
    const u32 n_inv = M.pow(M.to(static_cast<u32>(n % m)), m - 2);  // Montgomery form of 1/n
    const u32 scale = M.to(M.to(M.from(n_inv)));                      // (1/n) R^2, plain
    for (auto& x : fa) x = M.mul(x, scale);
    return fa;
}

// Convolution modulo m; linear when cyclic == 0, otherwise wrapped modulo
// z^cyclic (a power of two).
std::vector<u32> convolve(std::span<const Fp> a, std::span<const Fp> b, u32 m, u32 root, std::size_t cyclic = 0) {
    const std::size_t out_len = cyclic ? cyclic : a.size() + b.size() - 1;
    const std::size_t n = cyclic ? cyclic : std::bit_ceil(out_len);
    auto fa = lane_forward(a, m, root, n);
    if (a.data() == b.data() && a.size() == b.size()) return lane_product(fa, fa, m, root, out_len);
    return lane_product(std::move(fa), lane_forward(b, m, root, n), m, root, out_len);
}

struct AuxPrime {
    u32 modulus;
    u32 root;
    unsigned two_adicity;
};

constexpr std::array<AuxPrime, 3> kAux = {{
    {998244353u, 3u, 23},  // 119 * 2^23 + 1
    {167772161u, 3u, 25},  // 5 * 2^25 + 1
    {469762049u, 3u, 26},  // 7 * 2^26 + 1
}};

u64 pow_plain(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::vector<Fp> crt_combine(const PrimeField& F, const std::vector<u32>& r1, const std::vector<u32>& r2,
                            const std::vector<u32>& r3) {
    const std::size_t out_len = r1.size();
    const u64 m1 = kAux[0].modulus, m2 = kAux[1].modulus, m3 = kAux[2].modulus;
    const u64 m1_inv_m2 = pow_plain(m1, m2 - 2, m2);
    const u64 m12_inv_m3 = pow_plain(m1 * m2 % m3, m3 - 2, m3);
    const u64 p = F.modulus();
    const u64 m1_p = m1 % p;
    const u64 m12_p = (m1 % p) * (m2 % p) % p;

    std::vector<Fp> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        const u64 v1 = r1[i];
        const u64 v2 = (r2[i] + m2 - v1 % m2) % m2 * m1_inv_m2 % m2;
        // x = v1 + m1 v2 + m1 m2 v3
        const u64 partial_m3 = (v1 % m3 + (m1 % m3) * v2) % m3;
        const u64 v3 = (r3[i] + m3 - partial_m3) % m3 * m12_inv_m3 % m3;
        const u64 x = (v1 % p + m1_p * v2 % p + m12_p * v3 % p) % p;
        out[i] = Fp{static_cast<u32>(x)};
    }
    return out;
}

std::vector<Fp> multiply_crt(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b,
                             std::size_t cyclic = 0) {
    const std::size_t out_len = cyclic ? cyclic : a.size() + b.size() - 1;
    if (std::bit_ceil(out_len) > (std::size_t{1} << kAux[0].two_adicity))
        throw std::length_error("product too long for the transform kernel");
    const auto r1 = convolve(a, b, kAux[0].modulus, kAux[0].root, cyclic);
    const auto r2 = convolve(a, b, kAux[1].modulus, kAux[1].root, cyclic);
    const auto r3 = convolve(a, b, kAux[2].modulus, kAux[2].root, cyclic);

    return crt_combine(F, r1, r2, r3);
}

}  // namespace

bool supports_direct_transform(const PrimeField& F, std::size_t len) {
    if (F.modulus() == 2) return false;
    const std::size_t n = std::bit_ceil(len);
    return std::countr_zero(n) <= static_cast<int>(F.two_adicity());
}

std::vector<Fp> multiply_schoolbook(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b) {
    if (a.empty() || b.empty()) return {};
    const u64 p = F.modulus();
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const u64 ai = a[i].v;
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + ai * b[j].v) % p;
    }
    std::vector<Fp> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = Fp{static_cast<u32>(acc[i])};
    return out;
}

std::vector<Fp> multiply_transform(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    if (supports_direct_transform(F, out_len)) {
        auto r = convolve(a, b, F.modulus(), F.primitive_root().v);
        std::vector<Fp> out(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) out[i] = Fp{r[i]};
        return out;
    }
    return multiply_crt(F, a, b);
}

std::vector<Fp> multiply_cyclic(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b, std::size_t len) {
    if (!std::has_single_bit(len) || a.size() > len || b.size() > len)
        throw std::invalid_argument("cyclic length must be a power of two covering both operands");
    if (a.empty() || b.empty()) return std::vector<Fp>(len);
    if (supports_direct_transform(F, len)) {
        auto r = convolve(a, b, F.modulus(), F.primitive_root().v, len);
        std::vector<Fp> out(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = Fp{r[i]};
        return out;
    }
    return multiply_crt(F, a, b, len);
}

Spectrum spectrum(const PrimeField& F, std::span<const Fp> a, std::size_t len) {
    if (!std::has_single_bit(len) || a.size() > len)
        throw std::invalid_argument("spectrum length must be a power of two covering the operand");
    Spectrum out;
    out.len = len;
    if (supports_direct_transform(F, len)) {
        out.lanes.push_back(lane_forward(a, F.modulus(), F.primitive_root().v, len));
        return out;
    }
    if (len > (std::size_t{1} << kAux[0].two_adicity)) throw std::length_error("product too long for the transform kernel");
    for (const auto& q : kAux) out.lanes.push_back(lane_forward(a, q.modulus, q.root, len));
    return out;
}

std::vector<Fp> multiply_spectra(const PrimeField& F, const Spectrum& a, const Spectrum& b) {
    if (a.len != b.len || a.lanes.size() != b.lanes.size()) throw std::invalid_argument("spectra do not match");
    if (a.lanes.size() == 1) {
        const auto r = lane_product(a.lanes[0], b.lanes[0], F.modulus(), F.primitive_root().v, a.len);
        std::vector<Fp> out(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) out[i] = Fp{r[i]};
        return out;
    }
    std::array<std::vector<u32>, 3> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = lane_product(a.lanes[i], b.lanes[i], kAux[i].modulus, kAux[i].root, a.len);
    return crt_combine(F, r[0], r[1], r[2]);
}

std::vector<Fp> multiply(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) return multiply_schoolbook(F, a, b);
    return multiply_transform(F, a, b);
}

}  // namespace sroots::ntt

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace fatlas {

using cplx = std::complex<double>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Parity { Even, Odd, Inhomogeneous };

/// Element of the complex exterior algebra on `num_generators` anticommuting
/// generators. Terms are kept as a sparse map from generator bitmask to
/// coefficient; the mask's ascending bit order is the canonical monomial order.
/// Values are immutable in practice: every operation returns a new element.
class Grassmann {
public:
    static constexpr double prune_eps = 1e-14;
    static constexpr int max_generators = 62;

    Grassmann() : n_(0) {}
    explicit Grassmann(int num_generators);

    static Grassmann scalar(cplx c, int num_generators);
    static Grassmann generator(int i, int num_generators);
    static Grassmann monomial(std::uint64_t mask, cplx c, int num_generators);

    int generators() const { return n_; }
    bool is_zero() const { return terms_.empty(); }

    cplx coeff(std::uint64_t mask) const;
    cplx body() const { return coeff(0); }
    Grassmann soul() const;

    Parity parity() const;
    bool is_odd() const { return parity() == Parity::Odd; }
    bool is_even() const { return parity() == Parity::Even; }

    Grassmann operator+(const Grassmann& rhs) const;
    Grassmann operator-(const Grassmann& rhs) const;
    Grassmann operator-() const;
    Grassmann operator*(const Grassmann& rhs) const;
    Grassmann operator*(cplx s) const;
    bool operator==(const Grassmann& rhs) const;

    /// Multiplicative inverse; requires a nonzero body. Computed from the
    /// finite geometric series in soul/body, which terminates by nilpotency.
    Grassmann inverse() const;
    Grassmann pow(int k) const;

    /// Largest coefficient magnitude over all stored terms.
    double max_abs() const;

    /// Highest power p such that (this)^p != 0 when the body vanishes;
    /// used to truncate Taylor expansions. Returns 0 for the zero element.
    int nilpotency_bound() const;

    /// One term per line: "re im : i1<i2<...", empty subset written "re im :".
    std::string serialize() const;
    static Grassmann deserialize(const std::string& text, int num_generators);

    std::string str() const;

    const std::map<std::uint64_t, cplx>& terms() const { return terms_; }

private:
    void insert(std::uint64_t mask, cplx c);
    void check_compatible(const Grassmann& rhs) const;

    std::map<std::uint64_t, cplx> terms_;
    int n_;
};

inline Grassmann operator*(cplx s, const Grassmann& g) { return g * s; }

/// Sign (+1/-1) acquired when reordering the concatenation of two disjoint
/// ascending monomials into one ascending monomial.
int merge_sign(std::uint64_t a, std::uint64_t b);

}  // namespace fatlas

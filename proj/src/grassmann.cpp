#include "fatlas/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace fatlas {

Grassmann::Grassmann(int num_generators) : n_(num_generators) {
    if (num_generators < 0 || num_generators > max_generators)
        throw error("generator count out of range: " + std::to_string(num_generators));
}

Grassmann Grassmann::scalar(cplx c, int num_generators) {
    Grassmann g(num_generators);
    g.insert(0, c);
    return g;
}

Grassmann Grassmann::generator(int i, int num_generators) {
    if (i < 0 || i >= num_generators) throw error("generator index out of range");
    Grassmann g(num_generators);
    g.insert(std::uint64_t{1} << i, 1.0);
    return g;
}

Grassmann Grassmann::monomial(std::uint64_t mask, cplx c, int num_generators) {
    Grassmann g(num_generators);
    if (num_generators < max_generators && (mask >> num_generators) != 0)
        throw error("monomial uses generators beyond the declared count");
    g.insert(mask, c);
    return g;
}

void Grassmann::insert(std::uint64_t mask, cplx c) {
    if (std::abs(c) <= prune_eps) return;
    auto [it, fresh] = terms_.emplace(mask, c);
    if (!fresh) {
        it->second += c;
        if (std::abs(it->second) <= prune_eps) terms_.erase(it);
    }
}

void Grassmann::check_compatible(const Grassmann& rhs) const {
    if (n_ != rhs.n_) throw error("generator-count mismatch");
}

cplx Grassmann::coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? cplx{0.0} : it->second;
}

Grassmann Grassmann::soul() const {
    Grassmann s(*this);
    s.terms_.erase(0);
    return s;
}

Parity Grassmann::parity() const {
    bool has_even = false, has_odd = false;
    for (const auto& [mask, c] : terms_)
        (std::popcount(mask) % 2 ? has_odd : has_even) = true;
    if (has_even && has_odd) return Parity::Inhomogeneous;
    return has_odd ? Parity::Odd : Parity::Even;
}

Grassmann Grassmann::operator+(const Grassmann& rhs) const {
    check_compatible(rhs);
    Grassmann out(*this);
    for (const auto& [mask, c] : rhs.terms_) out.insert(mask, c);
    return out;
}

Grassmann Grassmann::operator-(const Grassmann& rhs) const {
    check_compatible(rhs);
    Grassmann out(*this);
    for (const auto& [mask, c] : rhs.terms_) out.insert(mask, -c);
    return out;
}

Grassmann Grassmann::operator-() const {
    Grassmann out(n_);
    for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
    return out;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
    // Count pairs (i in a, j in b) with i > j; each is one transposition.
    int inversions = 0;
    std::uint64_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions % 2) ? -1 : 1;
}

Grassmann Grassmann::operator*(const Grassmann& rhs) const {
    check_compatible(rhs);
    Grassmann out(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma & mb) continue;  // repeated generator
            out.insert(ma | mb, static_cast<double>(merge_sign(ma, mb)) * ca * cb);
        }
    }
    return out;
}

Grassmann Grassmann::operator*(cplx s) const {
    Grassmann out(n_);
    for (const auto& [mask, c] : terms_) out.insert(mask, c * s);
    return out;
}

bool Grassmann::operator==(const Grassmann& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
}

Grassmann Grassmann::inverse() const {
    cplx b = body();
    if (std::abs(b) <= prune_eps) throw error("non-invertible: zero body");
    Grassmann out = scalar(1.0 / b, n_);
    Grassmann t = soul() * (-1.0 / b);  // -soul/body
    Grassmann p = t;
    while (!p.is_zero()) {
        out = out + p * (1.0 / b);
        p = p * t;
    }
    return out;
}

Grassmann Grassmann::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Grassmann out = scalar(1.0, n_);
    for (int i = 0; i < k; ++i) {
        out = out * (*this);
        if (out.is_zero()) break;
    }
    return out;
}

double Grassmann::max_abs() const {
    double m = 0.0;
    for (const auto& [mask, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

int Grassmann::nilpotency_bound() const {
    if (terms_.empty()) return 0;
    // A product of more than n_ soul factors always repeats a generator.
    return n_ + 1;
}

std::string Grassmann::serialize() const {
    std::ostringstream os;
    os.precision(17);
    for (const auto& [mask, c] : terms_) {
        os << c.real() << " " << c.imag() << " :";
        std::uint64_t mm = mask;
        bool first = true;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            os << (first ? " " : "<") << i;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

Grassmann Grassmann::deserialize(const std::string& text, int num_generators) {
    Grassmann out(num_generators);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double re, im;
        std::string colon;
        if (!(ls >> re >> im >> colon) || colon != ":")
            throw error("bad grassmann term at line " + std::to_string(lineno));
        std::uint64_t mask = 0;
        std::string rest;
        if (ls >> rest) {
            std::istringstream gs(rest);
            std::string tok;
            while (std::getline(gs, tok, '<')) {
                int i = std::stoi(tok);
                if (i < 0 || i >= num_generators)
                    throw error("generator index out of range at line " + std::to_string(lineno));
                std::uint64_t bit = std::uint64_t{1} << i;
                if (mask & bit) throw error("repeated generator at line " + std::to_string(lineno));
                if (bit <= mask) throw error("generators not ascending at line " + std::to_string(lineno));
                mask |= bit;
            }
        }
        out.insert(mask, cplx{re, im});
    }
    return out;
}

std::string Grassmann::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        std::uint64_t mm = mask;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            os << "*t" << i;
        }
    }
    return os.str();
}

}  // namespace fatlas

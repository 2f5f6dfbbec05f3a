#pragma once

#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "fatlas/grassmann.hpp"

namespace fatlas {

struct branch_error : error {
    using error::error;
};
struct domain_error : error {
    using error::error;
};

/// Admissible argument sector for the operand of a power or logarithm.
/// The default sector is the full principal range; a narrower declared
/// sector turns evaluation outside it into a hard error instead of a
/// silent continuation onto another branch.
struct BranchSector {
    double arg_min = -std::numbers::pi;
    double arg_max = std::numbers::pi;
    bool declared = false;

    static BranchSector principal() { return {}; }
    static BranchSector window(double lo, double hi) { return {lo, hi, true}; }
    bool contains(double arg) const { return arg > arg_min && arg < arg_max; }
};

/// Reduced fraction exponent. Powers keep the exact fraction so that
/// derivative exponents stay exact; evaluation uses the principal branch.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational operator-(long long k) const { return Rational(num - k * den, den); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    virtual ~Expr() = default;
    virtual cplx eval(cplx x) const = 0;
    virtual Grassmann eval(const Grassmann& x) const = 0;
    virtual ExprPtr deriv() const = 0;
    virtual void print(std::string& out) const = 0;
};

ExprPtr constant(cplx c);
ExprPtr var();
ExprPtr affine(cplx a, cplx b);  // a*x + b
ExprPtr pow_rat(ExprPtr base, long long num, long long den,
                BranchSector sector = BranchSector::principal());
ExprPtr exp_of(ExprPtr e);
ExprPtr log_of(ExprPtr e, BranchSector sector = BranchSector::principal());
ExprPtr sum(std::vector<ExprPtr> parts);
ExprPtr prod(std::vector<ExprPtr> parts);
ExprPtr compose(ExprPtr outer, ExprPtr inner);

inline ExprPtr operator+(ExprPtr a, ExprPtr b) { return sum({std::move(a), std::move(b)}); }
inline ExprPtr operator*(ExprPtr a, ExprPtr b) { return prod({std::move(a), std::move(b)}); }

ExprPtr deriv(const ExprPtr& e);
cplx eval(const ExprPtr& e, cplx x);
Grassmann eval(const ExprPtr& e, const Grassmann& x);
std::string to_string(const ExprPtr& e);

}  // namespace fatlas

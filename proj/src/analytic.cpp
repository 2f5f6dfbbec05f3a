#include "fatlas/analytic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace fatlas {

namespace {

bool is_const(const ExprPtr& e, cplx* out = nullptr);

std::string fmt(cplx c) {
    std::ostringstream os;
    os.precision(12);
    if (c.imag() == 0.0) {
        os << c.real();
    } else {
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    return os.str();
}

void check_sector(const BranchSector& s, cplx body, const char* what) {
    if (std::abs(body) == 0.0) throw domain_error(std::string(what) + " of zero");
    if (s.declared && !s.contains(std::arg(body)))
        throw branch_error(std::string(what) + ": operand argument " +
                           std::to_string(std::arg(body)) + " outside declared sector");
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw error("rational exponent with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------------------
// nodes

class ConstNode : public Expr {
public:
    explicit ConstNode(cplx c) : c_(c) {}
    cplx eval(cplx) const override { return c_; }
    Grassmann eval(const Grassmann& x) const override {
        return Grassmann::scalar(c_, x.generators());
    }
    ExprPtr deriv() const override { return constant(0.0); }
    void print(std::string& out) const override { out += fmt(c_); }
    cplx value() const { return c_; }

private:
    cplx c_;
};

class VarNode : public Expr {
public:
    cplx eval(cplx x) const override { return x; }
    Grassmann eval(const Grassmann& x) const override { return x; }
    ExprPtr deriv() const override { return constant(1.0); }
    void print(std::string& out) const override { out += "x"; }
};

class AffineNode : public Expr {
public:
    AffineNode(cplx a, cplx b) : a_(a), b_(b) {}
    cplx eval(cplx x) const override { return a_ * x + b_; }
    Grassmann eval(const Grassmann& x) const override {
        return x * a_ + Grassmann::scalar(b_, x.generators());
    }
    ExprPtr deriv() const override { return constant(a_); }
    void print(std::string& out) const override {
        out += "(" + fmt(a_) + "*x+" + fmt(b_) + ")";
    }

private:
    cplx a_, b_;
};

class PowNode : public Expr {
public:
    PowNode(ExprPtr base, Rational e, BranchSector sector)
        : base_(std::move(base)), e_(e), sector_(sector) {}

    cplx eval(cplx x) const override {
        cplx v = base_->eval(x);
        if (e_.is_integer()) return int_pow(v, e_.num);
        check_sector(sector_, v, "pow");
        return std::pow(v, e_.value());
    }

    Grassmann eval(const Grassmann& x) const override {
        Grassmann v = base_->eval(x);
        if (e_.is_integer() && e_.num >= 0) return v.pow(static_cast<int>(e_.num));
        cplx b = v.body();
        if (e_.is_integer()) {
            if (std::abs(b) == 0.0) throw domain_error("negative power of zero body");
            return v.inverse().pow(static_cast<int>(-e_.num));
        }
        check_sector(sector_, b, "pow");
        // (b+s)^e = b^e * sum_k C(e,k) (s/b)^k, truncated by nilpotency.
        Grassmann s = v.soul();
        cplx head = std::pow(b, e_.value());
        Grassmann acc = Grassmann::scalar(head, x.generators());
        Grassmann p = s * (1.0 / b);
        double ek = e_.value();
        cplx c = 1.0;
        int k = 1;
        while (!p.is_zero()) {
            c *= (ek - (k - 1)) / static_cast<double>(k);
            acc = acc + p * (head * c);
            p = p * (s * (1.0 / b));
            ++k;
        }
        return acc;
    }

    ExprPtr deriv() const override {
        if (e_.num == 0) return constant(0.0);
        ExprPtr inner = base_->deriv();
        ExprPtr shifted = pow_rat(base_, e_.num - e_.den, e_.den, sector_);
        return prod({constant(e_.value()), std::move(shifted), std::move(inner)});
    }

    void print(std::string& out) const override {
        out += "(";
        base_->print(out);
        out += ")^(" + e_.str() + ")";
    }

private:
    static cplx int_pow(cplx v, long long k) {
        if (k < 0) return 1.0 / int_pow(v, -k);
        cplx r = 1.0;
        while (k) {
            if (k & 1) r *= v;
            v *= v;
            k >>= 1;
        }
        return r;
    }

    ExprPtr base_;
    Rational e_;
    BranchSector sector_;
};

class ExpNode : public Expr {
public:
    explicit ExpNode(ExprPtr e) : e_(std::move(e)) {}
    cplx eval(cplx x) const override { return std::exp(e_->eval(x)); }
    Grassmann eval(const Grassmann& x) const override {
        Grassmann v = e_->eval(x);
        Grassmann s = v.soul();
        cplx head = std::exp(v.body());
        Grassmann acc = Grassmann::scalar(head, x.generators());
        Grassmann p = s;
        double fact = 1.0;
        int k = 1;
        while (!p.is_zero()) {
            fact *= k;
            acc = acc + p * (head / fact);
            p = p * s;
            ++k;
        }
        return acc;
    }
    ExprPtr deriv() const override { return prod({e_->deriv(), exp_of(e_)}); }
    void print(std::string& out) const override {
        out += "exp(";
        e_->print(out);
        out += ")";
    }

private:
    ExprPtr e_;
};

class LogNode : public Expr {
public:
    LogNode(ExprPtr e, BranchSector sector) : e_(std::move(e)), sector_(sector) {}
    cplx eval(cplx x) const override {
        cplx v = e_->eval(x);
        check_sector(sector_, v, "log");
        return std::log(v);
    }
    Grassmann eval(const Grassmann& x) const override {
        Grassmann v = e_->eval(x);
        cplx b = v.body();
        check_sector(sector_, b, "log");
        Grassmann s = v.soul();
        Grassmann acc = Grassmann::scalar(std::log(b), x.generators());
        Grassmann t = s * (1.0 / b);
        Grassmann p = t;
        int k = 1;
        while (!p.is_zero()) {
            acc = acc + p * (((k % 2) ? 1.0 : -1.0) / static_cast<double>(k));
            p = p * t;
            ++k;
        }
        return acc;
    }
    ExprPtr deriv() const override {
        return prod({e_->deriv(), pow_rat(e_, -1, 1, sector_)});
    }
    void print(std::string& out) const override {
        out += "log(";
        e_->print(out);
        out += ")";
    }

private:
    ExprPtr e_;
    BranchSector sector_;
};

class SumNode : public Expr {
public:
    explicit SumNode(std::vector<ExprPtr> parts) : parts_(std::move(parts)) {}
    cplx eval(cplx x) const override {
        cplx acc = 0.0;
        for (const auto& p : parts_) acc += p->eval(x);
        return acc;
    }
    Grassmann eval(const Grassmann& x) const override {
        Grassmann acc(x.generators());
        for (const auto& p : parts_) acc = acc + p->eval(x);
        return acc;
    }
    ExprPtr deriv() const override {
        std::vector<ExprPtr> d;
        d.reserve(parts_.size());
        for (const auto& p : parts_) d.push_back(p->deriv());
        return sum(std::move(d));
    }
    void print(std::string& out) const override {
        out += "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += "+";
            parts_[i]->print(out);
        }
        out += ")";
    }
    const std::vector<ExprPtr>& parts() const { return parts_; }

private:
    std::vector<ExprPtr> parts_;
};

class ProdNode : public Expr {
public:
    explicit ProdNode(std::vector<ExprPtr> parts) : parts_(std::move(parts)) {}
    cplx eval(cplx x) const override {
        cplx acc = 1.0;
        for (const auto& p : parts_) acc *= p->eval(x);
        return acc;
    }
    Grassmann eval(const Grassmann& x) const override {
        Grassmann acc = Grassmann::scalar(1.0, x.generators());
        for (const auto& p : parts_) acc = acc * p->eval(x);
        return acc;
    }
    ExprPtr deriv() const override {
        std::vector<ExprPtr> terms;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            std::vector<ExprPtr> factors;
            for (std::size_t j = 0; j < parts_.size(); ++j)
                factors.push_back(j == i ? parts_[j]->deriv() : parts_[j]);
            terms.push_back(prod(std::move(factors)));
        }
        return sum(std::move(terms));
    }
    void print(std::string& out) const override {
        out += "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += "*";
            parts_[i]->print(out);
        }
        out += ")";
    }

private:
    std::vector<ExprPtr> parts_;
};

class ComposeNode : public Expr {
public:
    ComposeNode(ExprPtr outer, ExprPtr inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {}
    cplx eval(cplx x) const override { return outer_->eval(inner_->eval(x)); }
    Grassmann eval(const Grassmann& x) const override {
        return outer_->eval(inner_->eval(x));
    }
    ExprPtr deriv() const override {
        return prod({compose(outer_->deriv(), inner_), inner_->deriv()});
    }
    void print(std::string& out) const override {
        out += "(";
        outer_->print(out);
        out += " o ";
        inner_->print(out);
        out += ")";
    }

private:
    ExprPtr outer_, inner_;
};

namespace {

bool is_const(const ExprPtr& e, cplx* out) {
    if (auto c = dynamic_cast<const ConstNode*>(e.get())) {
        if (out) *out = c->value();
        return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// factories (with light constant folding)

ExprPtr constant(cplx c) { return std::make_shared<ConstNode>(c); }
ExprPtr var() { return std::make_shared<VarNode>(); }
ExprPtr affine(cplx a, cplx b) { return std::make_shared<AffineNode>(a, b); }

ExprPtr pow_rat(ExprPtr base, long long num, long long den, BranchSector sector) {
    Rational e(num, den);
    if (e.num == 0) return constant(1.0);
    if (e.num == e.den) return base;
    return std::make_shared<PowNode>(std::move(base), e, sector);
}

ExprPtr exp_of(ExprPtr e) { return std::make_shared<ExpNode>(std::move(e)); }

ExprPtr log_of(ExprPtr e, BranchSector sector) {
    return std::make_shared<LogNode>(std::move(e), sector);
}

ExprPtr sum(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> kept;
    cplx folded = 0.0;
    for (auto& p : parts) {
        cplx c;
        if (is_const(p, &c))
            folded += c;
        else
            kept.push_back(std::move(p));
    }
    if (folded != 0.0 || kept.empty()) kept.push_back(constant(folded));
    if (kept.size() == 1) return kept.front();
    return std::make_shared<SumNode>(std::move(kept));
}

ExprPtr prod(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> kept;
    cplx folded = 1.0;
    for (auto& p : parts) {
        cplx c;
        if (is_const(p, &c))
            folded *= c;
        else
            kept.push_back(std::move(p));
    }
    if (folded == 0.0) return constant(0.0);
    if (folded != 1.0 || kept.empty()) kept.push_back(constant(folded));
    if (kept.size() == 1) return kept.front();
    return std::make_shared<ProdNode>(std::move(kept));
}

ExprPtr compose(ExprPtr outer, ExprPtr inner) {
    if (dynamic_cast<const VarNode*>(inner.get())) return outer;
    if (dynamic_cast<const VarNode*>(outer.get())) return inner;
    cplx c;
    if (is_const(outer, &c)) return constant(c);
    return std::make_shared<ComposeNode>(std::move(outer), std::move(inner));
}

ExprPtr deriv(const ExprPtr& e) { return e->deriv(); }
cplx eval(const ExprPtr& e, cplx x) { return e->eval(x); }
Grassmann eval(const ExprPtr& e, const Grassmann& x) { return e->eval(x); }

std::string to_string(const ExprPtr& e) {
    std::string out;
    e->print(out);
    return out;
}

}  // namespace fatlas

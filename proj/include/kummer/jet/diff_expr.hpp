#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kummer/algebra/rational_function.hpp"

namespace kummer {

/// Differential rational expression in l, phi, phi', ..., phi^(k), with
/// rational-function coefficients that may be applied to any subexpression.
///
/// Immutable DAG of shared nodes. The smart constructors fold constants and
/// drop neutral elements; nothing more ambitious is attempted, symbolic
/// simplification happens after evaluation into a field.
class DiffExpr {
public:
    enum class Kind { Const, Lambda, Jet, Apply, Add, Sub, Mul, Div, Pow, Neg };

    struct Node {
        Kind kind;
        Rational value{};        // Const
        int index = 0;           // Jet order, Pow exponent
        RationalFunction rf{};   // Apply
        std::shared_ptr<const Node> a{}, b{};
        int order = -1;          // highest jet coordinate present
        std::uint64_t deps = 0;  // bit 0: l, bit j+1: phi^(j)
    };
    using NodePtr = std::shared_ptr<const Node>;

    DiffExpr() : DiffExpr(Rational(0)) {}
    DiffExpr(const Rational& c) : n_(make_const(c)) {}
    DiffExpr(int c) : DiffExpr(Rational(c)) {}

    static DiffExpr lambda()
    {
        Node n{Kind::Lambda};
        n.deps = 1;
        return DiffExpr(std::make_shared<const Node>(std::move(n)));
    }

    /// phi^(j); jet(0) is phi itself.
    static DiffExpr jet(int j)
    {
        if (j < 0 || j > 62)
            fail(Errc::InvalidArgument, "jet coordinate out of range");
        Node n{Kind::Jet};
        n.index = j;
        n.order = j;
        n.deps = std::uint64_t(1) << (j + 1);
        return DiffExpr(std::make_shared<const Node>(std::move(n)));
    }
    static DiffExpr phi(int j = 0) { return jet(j); }

    /// rf evaluated at arg, e.g. R(phi) or R(l).
    static DiffExpr apply(const RationalFunction& rf, const DiffExpr& arg)
    {
        if (rf.is_constant())
            return DiffExpr(rf.constant_value());
        if (arg.is_const())
            return DiffExpr(rf.eval(arg.constant()));
        if (arg.kind() == Kind::Lambda && rf.is_polynomial() && rf.num().degree() == 1 && rf.num()[1] == 1 &&
            sgn(rf.num()[0]) == 0)
            return arg;
        Node n{Kind::Apply};
        n.rf = rf;
        n.a = arg.n_;
        n.order = arg.order();
        n.deps = arg.n_->deps;
        return DiffExpr(std::make_shared<const Node>(std::move(n)));
    }

    Kind kind() const { return n_->kind; }
    const Node& node() const { return *n_; }
    const NodePtr& ptr() const { return n_; }
    int order() const { return n_->order; }
    bool is_const() const { return n_->kind == Kind::Const; }
    const Rational& constant() const { return n_->value; }
    bool is_zero() const { return is_const() && sgn(n_->value) == 0; }
    bool is_one() const { return is_const() && n_->value == 1; }
    bool depends_on_lambda() const { return n_->deps & 1; }
    bool depends_on_jet(int j) const { return (n_->deps >> (j + 1)) & 1; }

    friend DiffExpr operator+(const DiffExpr& x, const DiffExpr& y)
    {
        if (x.is_const() && y.is_const())
            return DiffExpr(x.constant() + y.constant());
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        return binary(Kind::Add, x, y);
    }
    friend DiffExpr operator-(const DiffExpr& x, const DiffExpr& y)
    {
        if (x.is_const() && y.is_const())
            return DiffExpr(x.constant() - y.constant());
        if (y.is_zero())
            return x;
        if (x.is_zero())
            return -y;
        return binary(Kind::Sub, x, y);
    }
    DiffExpr operator-() const
    {
        if (is_const())
            return DiffExpr(-constant());
        if (kind() == Kind::Neg)
            return DiffExpr(n_->a);
        Node n{Kind::Neg};
        n.a = n_;
        n.order = order();
        n.deps = n_->deps;
        return DiffExpr(std::make_shared<const Node>(std::move(n)));
    }
    friend DiffExpr operator*(const DiffExpr& x, const DiffExpr& y)
    {
        if (x.is_const() && y.is_const())
            return DiffExpr(x.constant() * y.constant());
        if (x.is_zero() || y.is_zero())
            return DiffExpr(0);
        if (x.is_one())
            return y;
        if (y.is_one())
            return x;
        if (x.is_const() && x.constant() == -1)
            return -y;
        if (y.is_const() && y.constant() == -1)
            return -x;
        return binary(Kind::Mul, x, y);
    }
    friend DiffExpr operator/(const DiffExpr& x, const DiffExpr& y)
    {
        if (y.is_zero())
            fail(Errc::DivisionByZero, "expression divided by zero");
        if (x.is_const() && y.is_const())
            return DiffExpr(x.constant() / y.constant());
        if (x.is_zero())
            return DiffExpr(0);
        if (y.is_one())
            return x;
        return binary(Kind::Div, x, y);
    }
    friend DiffExpr pow(const DiffExpr& x, int n)
    {
        if (n == 0)
            return DiffExpr(1);
        if (n == 1)
            return x;
        if (x.is_const()) {
            if (sgn(x.constant()) == 0 && n < 0)
                fail(Errc::DivisionByZero, "zero to a negative power");
            Rational p = rational_pow(x.constant(), static_cast<unsigned>(n < 0 ? -n : n));
            return DiffExpr(n < 0 ? Rational(1 / p) : p);
        }
        Node nd{Kind::Pow};
        nd.index = n;
        nd.a = x.n_;
        nd.order = x.order();
        nd.deps = x.n_->deps;
        return DiffExpr(std::make_shared<const Node>(std::move(nd)));
    }

    DiffExpr& operator+=(const DiffExpr& o) { return *this = *this + o; }
    DiffExpr& operator-=(const DiffExpr& o) { return *this = *this - o; }
    DiffExpr& operator*=(const DiffExpr& o) { return *this = *this * o; }

    /// Partial derivative in l (j = -1) or in phi^(j).
    DiffExpr partial(int j) const
    {
        std::unordered_map<const Node*, DiffExpr> memo;
        return partial_rec(n_, j, memo);
    }
    DiffExpr partial_lambda() const { return partial(-1); }
    DiffExpr partial_jet(int j) const { return partial(j); }

    /// d/dl = partial_l + sum_j phi^(j+1) partial_phi^(j).
    DiffExpr total_derivative() const
    {
        std::unordered_map<const Node*, DiffExpr> memo;
        return total_rec(n_, memo);
    }

    std::string to_string() const { return print(n_, 0); }

private:
    NodePtr n_;

    explicit DiffExpr(NodePtr p) : n_(std::move(p)) {}

    static NodePtr make_const(const Rational& c)
    {
        Node n{Kind::Const};
        n.value = c;
        return std::make_shared<const Node>(std::move(n));
    }

    static DiffExpr binary(Kind k, const DiffExpr& x, const DiffExpr& y)
    {
        Node n{k};
        n.a = x.n_;
        n.b = y.n_;
        n.order = std::max(x.order(), y.order());
        n.deps = x.n_->deps | y.n_->deps;
        return DiffExpr(std::make_shared<const Node>(std::move(n)));
    }

    static bool depends(const NodePtr& p, int j) { return (p->deps >> (j + 1)) & 1; }

    static DiffExpr partial_rec(const NodePtr& p, int j, std::unordered_map<const Node*, DiffExpr>& memo)
    {
        if (!depends(p, j))
            return DiffExpr(0);
        if (auto it = memo.find(p.get()); it != memo.end())
            return it->second;
        DiffExpr r;
        DiffExpr a = p->a ? DiffExpr(p->a) : DiffExpr();
        DiffExpr b = p->b ? DiffExpr(p->b) : DiffExpr();
        switch (p->kind) {
        case Kind::Const:
            r = DiffExpr(0);
            break;
        case Kind::Lambda:
        case Kind::Jet:
            r = DiffExpr(1);
            break;
        case Kind::Apply:
            r = apply(p->rf.derivative(), a) * partial_rec(p->a, j, memo);
            break;
        case Kind::Add:
            r = partial_rec(p->a, j, memo) + partial_rec(p->b, j, memo);
            break;
        case Kind::Sub:
            r = partial_rec(p->a, j, memo) - partial_rec(p->b, j, memo);
            break;
        case Kind::Neg:
            r = -partial_rec(p->a, j, memo);
            break;
        case Kind::Mul:
            r = partial_rec(p->a, j, memo) * b + a * partial_rec(p->b, j, memo);
            break;
        case Kind::Div: {
            DiffExpr da = partial_rec(p->a, j, memo), db = partial_rec(p->b, j, memo);
            r = da / b - a * db / pow(b, 2);
            break;
        }
        case Kind::Pow:
            r = DiffExpr(p->index) * pow(a, p->index - 1) * partial_rec(p->a, j, memo);
            break;
        }
        memo.emplace(p.get(), r);
        return r;
    }

    static DiffExpr total_rec(const NodePtr& p, std::unordered_map<const Node*, DiffExpr>& memo)
    {
        if (p->deps == 0)
            return DiffExpr(0);
        if (auto it = memo.find(p.get()); it != memo.end())
            return it->second;
        DiffExpr r;
        DiffExpr a = p->a ? DiffExpr(p->a) : DiffExpr();
        DiffExpr b = p->b ? DiffExpr(p->b) : DiffExpr();
        switch (p->kind) {
        case Kind::Const:
            r = DiffExpr(0);
            break;
        case Kind::Lambda:
            r = DiffExpr(1);
            break;
        case Kind::Jet:
            r = jet(p->index + 1);
            break;
        case Kind::Apply:
            r = apply(p->rf.derivative(), a) * total_rec(p->a, memo);
            break;
        case Kind::Add:
            r = total_rec(p->a, memo) + total_rec(p->b, memo);
            break;
        case Kind::Sub:
            r = total_rec(p->a, memo) - total_rec(p->b, memo);
            break;
        case Kind::Neg:
            r = -total_rec(p->a, memo);
            break;
        case Kind::Mul:
            r = total_rec(p->a, memo) * b + a * total_rec(p->b, memo);
            break;
        case Kind::Div: {
            DiffExpr da = total_rec(p->a, memo), db = total_rec(p->b, memo);
            r = da / b - a * db / pow(b, 2);
            break;
        }
        case Kind::Pow:
            r = DiffExpr(p->index) * pow(a, p->index - 1) * total_rec(p->a, memo);
            break;
        }
        memo.emplace(p.get(), r);
        return r;
    }

    // precedence: 0 sum, 1 product, 2 power/atom
    static std::string print(const NodePtr& p, int ctx)
    {
        auto wrap = [&](std::string s, int prec) { return prec < ctx ? "(" + s + ")" : s; };
        switch (p->kind) {
        case Kind::Const: {
            std::string s = p->value.get_str();
            bool simple = sgn(p->value) >= 0 && p->value.get_den() == 1;
            return simple ? s : wrap(s, sgn(p->value) < 0 ? 0 : 1);
        }
        case Kind::Lambda:
            return "l";
        case Kind::Jet:
            if (p->index <= 3)
                return "p" + std::string(static_cast<std::size_t>(p->index), '\'');
            return "p^(" + std::to_string(p->index) + ")";
        case Kind::Apply: {
            std::string arg = print(p->a, 2);
            std::string body = p->rf.to_string(arg);
            return "[" + body + "]";
        }
        case Kind::Add:
            return wrap(print(p->a, 0) + " + " + print(p->b, 0), 0);
        case Kind::Sub:
            return wrap(print(p->a, 0) + " - " + print(p->b, 1), 0);
        case Kind::Neg:
            return wrap("-" + print(p->a, 1), 0);
        case Kind::Mul:
            return wrap(print(p->a, 1) + "*" + print(p->b, 1), 1);
        case Kind::Div:
            return wrap(print(p->a, 1) + "/" + print(p->b, 2), 1);
        case Kind::Pow:
            if (p->index < 0)
                return wrap("1/" + print(p->a, 2) + "^" + std::to_string(-p->index), 1);
            return print(p->a, 2) + "^" + std::to_string(p->index);
        }
        return "?";
    }
};

/// Values substituted for l and the jet coordinates phi, phi', ...
template <class T>
struct JetEnv {
    T lambda;
    std::vector<T> jet;
};

/// How a value type lifts rational constants and applies a rational function.
template <class T>
struct EvalTraits;

template <Field F>
struct EvalTraits<F> {
    static F lift(const Rational& q) { return embed<F>(q); }
    static F apply(const RationalFunction& rf, const F& x) { return rf.eval(x); }
};

template <Field F>
struct EvalTraits<RatFunc<F>> {
    static RatFunc<F> lift(const Rational& q) { return RatFunc<F>(embed<F>(q)); }
    static RatFunc<F> apply(const RationalFunction& rf, const RatFunc<F>& x) { return rf.template to<F>().compose(x); }
};

namespace detail {

template <class T>
T eval_pow(const T& x, int n)
{
    using Tr = EvalTraits<T>;
    unsigned m = static_cast<unsigned>(n < 0 ? -n : n);
    T r = Tr::lift(Rational(1)), b = x;
    while (m) {
        if (m & 1)
            r = r * b;
        m >>= 1;
        if (m)
            b = b * b;
    }
    if (n < 0) {
        if (is_zero(r))
            fail(Errc::DivisionByZero, "negative power of zero");
        return Tr::lift(Rational(1)) / r;
    }
    return r;
}

template <class T>
T eval_rec(const DiffExpr::NodePtr& p, const JetEnv<T>& env, std::unordered_map<const DiffExpr::Node*, T>& memo)
{
    using Tr = EvalTraits<T>;
    using K = DiffExpr::Kind;
    if (auto it = memo.find(p.get()); it != memo.end())
        return it->second;
    T r;
    switch (p->kind) {
    case K::Const:
        r = Tr::lift(p->value);
        break;
    case K::Lambda:
        r = env.lambda;
        break;
    case K::Jet:
        if (static_cast<std::size_t>(p->index) >= env.jet.size())
            fail(Errc::OrderTooLow, "jet coordinate of order " + std::to_string(p->index) + " not supplied");
        r = env.jet[static_cast<std::size_t>(p->index)];
        break;
    case K::Apply:
        r = Tr::apply(p->rf, eval_rec(p->a, env, memo));
        break;
    case K::Add:
        r = eval_rec(p->a, env, memo) + eval_rec(p->b, env, memo);
        break;
    case K::Sub:
        r = eval_rec(p->a, env, memo) - eval_rec(p->b, env, memo);
        break;
    case K::Neg:
        r = Tr::lift(Rational(0)) - eval_rec(p->a, env, memo);
        break;
    case K::Mul:
        r = eval_rec(p->a, env, memo) * eval_rec(p->b, env, memo);
        break;
    case K::Div: {
        T d = eval_rec(p->b, env, memo);
        if (is_zero(d))
            fail(Errc::DivisionByZero, "expression denominator vanishes");
        r = eval_rec(p->a, env, memo) / d;
        break;
    }
    case K::Pow:
        r = eval_pow(eval_rec(p->a, env, memo), p->index);
        break;
    }
    memo.emplace(p.get(), r);
    return r;
}

} // namespace detail

template <class T>
T evaluate(const DiffExpr& e, const JetEnv<T>& env)
{
    std::unordered_map<const DiffExpr::Node*, T> memo;
    return detail::eval_rec(e.ptr(), env, memo);
}

/// Environment of a jet: l = source, phi = target, phi^(j) = c_j.
template <class Jet>
auto jet_env(const Jet& j)
{
    using S = std::decay_t<decltype(j.source())>;
    JetEnv<S> env{j.source(), {j.target()}};
    for (const auto& c : j.coeffs())
        env.jet.push_back(c);
    return env;
}

} // namespace kummer

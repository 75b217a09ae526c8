#pragma once

#include "ncgqw/param_scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncgqw {

/// Exponent vector over a context's generators; always a normal-ordered monomial.
using Monomial = std::vector<int>;
/// A word in the free algebra: generator indices left to right, any order.
using Word = std::vector<int>;
/// Canonical term store of an operator polynomial.
using TermMap = std::map<Monomial, ParamScalar>;

/// A named list of operator generators together with their commutation table.
///
/// The table entry for i < j is the canonical form of [g_i, g_j]. Every entry
/// may reference only generators with index < j (or be a pure scalar); this
/// lowering condition is what makes normal-ordering terminate, and it is
/// enforced at construction.
class AlgebraContext {
public:
    struct CommutatorRule {
        int lo;
        int hi;
        TermMap rhs;
    };

    static std::shared_ptr<const AlgebraContext> make(std::string name,
                                                      std::vector<std::string> generators,
                                                      std::vector<CommutatorRule> rules) {
        auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
        ctx->name_ = std::move(name);
        ctx->generators_ = std::move(generators);
        const int n = static_cast<int>(ctx->generators_.size());
        for (auto& rule : rules) {
            if (rule.lo < 0 || rule.hi >= n || rule.lo >= rule.hi)
                throw std::invalid_argument("algebra context '" + ctx->name_ +
                                            "': bad commutator pair");
            for (const auto& [mono, coeff] : rule.rhs) {
                (void)coeff;
                if (static_cast<int>(mono.size()) != n)
                    throw std::invalid_argument("algebra context '" + ctx->name_ +
                                                "': monomial arity mismatch");
                for (int g = rule.hi; g < n; ++g) {
                    if (mono[g] != 0)
                        throw std::invalid_argument(
                            "algebra context '" + ctx->name_ +
                            "': commutator rhs must only use generators below " +
                            ctx->generators_[rule.hi]);
                }
            }
            ctx->rules_.emplace(std::make_pair(rule.lo, rule.hi), std::move(rule.rhs));
        }
        return ctx;
    }

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(generators_.size()); }
    const std::string& generator_name(int i) const { return generators_.at(i); }

    bool has_rule(int lo, int hi) const { return rules_.count({lo, hi}) != 0; }

    /// Canonical terms of [g_lo, g_hi], lo < hi. Throws when the context does
    /// not define the bracket (generator-only source contexts).
    const TermMap& rule_terms(int lo, int hi) const {
        auto it = rules_.find({lo, hi});
        if (it == rules_.end())
            throw std::logic_error("context '" + name_ + "' has no commutation rule for [" +
                                   generators_.at(lo) + ", " + generators_.at(hi) + "]");
        return it->second;
    }

    /// All generators are self-adjoint in every context used here.
    bool self_adjoint(int) const { return true; }

private:
    AlgebraContext() = default;

    std::string name_;
    std::vector<std::string> generators_;
    std::map<std::pair<int, int>, TermMap> rules_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

inline Word word_of(const Monomial& mono) {
    Word w;
    for (int g = 0; g < static_cast<int>(mono.size()); ++g) {
        for (int r = 0; r < mono[g]; ++r) w.push_back(g);
    }
    return w;
}

inline Monomial monomial_of(int n_generators, const Word& sorted_word) {
    Monomial m(n_generators, 0);
    for (int g : sorted_word) ++m[g];
    return m;
}

/// Normal-ordered noncommutative polynomial over a context's generators.
///
/// Invariants: monomials are stored in canonical order, no zero coefficients
/// are kept, and equality is exact equality of the term map. Values are
/// immutable; all operations return new expressions.
class OpExpr {
public:
    explicit OpExpr(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("OpExpr requires a context");
    }

    static OpExpr zero(ContextPtr ctx) { return OpExpr(std::move(ctx)); }
    static OpExpr scalar(ContextPtr ctx, ParamScalar s) {
        OpExpr e(std::move(ctx));
        if (!s.is_zero()) e.terms_.emplace(Monomial(e.ctx_->size(), 0), std::move(s));
        return e;
    }
    static OpExpr one(ContextPtr ctx) { return scalar(std::move(ctx), ParamScalar::integer(1)); }
    static OpExpr generator(ContextPtr ctx, int index) {
        OpExpr e(std::move(ctx));
        if (index < 0 || index >= e.ctx_->size())
            throw std::invalid_argument("generator index out of range");
        Monomial m(e.ctx_->size(), 0);
        m[index] = 1;
        e.terms_.emplace(std::move(m), ParamScalar::integer(1));
        return e;
    }
    static OpExpr monomial(ContextPtr ctx, Monomial m, ParamScalar s) {
        OpExpr e(std::move(ctx));
        if (static_cast<int>(m.size()) != e.ctx_->size())
            throw std::invalid_argument("monomial arity mismatch");
        if (!s.is_zero()) e.terms_.emplace(std::move(m), std::move(s));
        return e;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const OpExpr& a, const OpExpr& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const OpExpr& a, const OpExpr& b) { return !(a == b); }

    OpExpr& operator+=(const OpExpr& o) {
        require_same_context(o);
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }
    OpExpr& operator-=(const OpExpr& o) {
        require_same_context(o);
        for (const auto& [m, s] : o.terms_) add_term(m, -s);
        return *this;
    }
    friend OpExpr operator+(OpExpr a, const OpExpr& b) { return a += b; }
    friend OpExpr operator-(OpExpr a, const OpExpr& b) { return a -= b; }
    friend OpExpr operator-(const OpExpr& a) {
        OpExpr r(a.ctx_);
        for (const auto& [m, s] : a.terms_) r.terms_.emplace(m, -s);
        return r;
    }

    /// Product, rewritten to canonical order through the commutation table.
    friend OpExpr operator*(const OpExpr& a, const OpExpr& b) {
        a.require_same_context(b);
        OpExpr r(a.ctx_);
        for (const auto& [ma, sa] : a.terms_) {
            for (const auto& [mb, sb] : b.terms_) {
                Word w = word_of(ma);
                Word wb = word_of(mb);
                w.insert(w.end(), wb.begin(), wb.end());
                accumulate(r.terms_, *a.ctx_, sa * sb, std::move(w));
            }
        }
        r.prune();
        return r;
    }

    friend OpExpr operator*(OpExpr a, const ParamScalar& s) {
        TermMap scaled;
        for (const auto& [m, c] : a.terms_) {
            ParamScalar p = c * s;
            if (!p.is_zero()) scaled.emplace(m, std::move(p));
        }
        a.terms_ = std::move(scaled);
        return a;
    }
    friend OpExpr operator*(const ParamScalar& s, OpExpr a) { return std::move(a) * s; }

    /// Hermitian adjoint: conjugate coefficients, reverse each word, reorder.
    /// Valid because every generator in the built-in contexts is self-adjoint.
    OpExpr adjoint() const {
        OpExpr r(ctx_);
        for (const auto& [m, s] : terms_) {
            Word w = word_of(m);
            std::reverse(w.begin(), w.end());
            accumulate(r.terms_, *ctx_, s.conjugate(), std::move(w));
        }
        r.prune();
        return r;
    }

    /// Drops terms whose parameter degrees exceed the caps.
    OpExpr truncated(const DegreeCaps& caps) const {
        OpExpr r(ctx_);
        for (const auto& [m, s] : terms_) {
            ParamScalar t = s.truncated(caps);
            if (!t.is_zero()) r.terms_.emplace(m, std::move(t));
        }
        return r;
    }

    /// Keeps only terms for which `keep(monomial)` is true.
    template <typename Pred>
    OpExpr filtered(Pred&& keep) const {
        OpExpr r(ctx_);
        for (const auto& [m, s] : terms_) {
            if (keep(m)) r.terms_.emplace(m, s);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, s] : terms_) {
            ParamScalar coeff = s;
            if (first) {
                first = false;
            } else if (coeff.terms().size() == 1 && coeff.display_negative()) {
                out += " - ";
                coeff = -coeff;
            } else {
                out += " + ";
            }
            out += render_term(coeff, m);
        }
        return out;
    }

    /// Core rewriting loop: folds coeff * word into `acc` in canonical form by
    /// repeatedly replacing the first adjacent out-of-order pair g_j g_i with
    /// g_i g_j - [g_i, g_j]. Terminates by the context's lowering condition.
    static void accumulate(TermMap& acc, const AlgebraContext& ctx, ParamScalar coeff,
                           Word word) {
        std::vector<std::pair<ParamScalar, Word>> work;
        work.emplace_back(std::move(coeff), std::move(word));
        while (!work.empty()) {
            auto [c, w] = std::move(work.back());
            work.pop_back();
            if (c.is_zero()) continue;
            std::size_t t = 0;
            while (t + 1 < w.size() && w[t] <= w[t + 1]) ++t;
            if (t + 1 >= w.size()) {
                Monomial m = monomial_of(ctx.size(), w);
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                }
                continue;
            }
            const int j = w[t];
            const int i = w[t + 1];
            Word swapped = w;
            std::swap(swapped[t], swapped[t + 1]);
            const TermMap& bracket = ctx.rule_terms(i, j);
            for (const auto& [mono_b, coeff_b] : bracket) {
                Word nw(w.begin(), w.begin() + t);
                Word mid = word_of(mono_b);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + t + 2, w.end());
                work.emplace_back(-(c * coeff_b), std::move(nw));
            }
            work.emplace_back(std::move(c), std::move(swapped));
        }
    }

private:
    ContextPtr ctx_;
    TermMap terms_;

    void require_same_context(const OpExpr& o) const {
        if (ctx_ != o.ctx_)
            throw std::invalid_argument("context mismatch: '" + ctx_->name() + "' vs '" +
                                        o.ctx_->name() + "'");
    }

    void add_term(const Monomial& m, const ParamScalar& s) {
        if (s.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    std::string render_term(const ParamScalar& s, const Monomial& m) const {
        std::string gens;
        for (int g = 0; g < static_cast<int>(m.size()); ++g) {
            if (m[g] == 0) continue;
            if (!gens.empty()) gens += "*";
            gens += ctx_->generator_name(g);
            if (m[g] != 1) gens += "^" + std::to_string(m[g]);
        }
        if (gens.empty()) return s.terms().size() > 1 ? "(" + s.to_string() + ")" : s.to_string();
        if (s.is_one()) return gens;
        if (s.terms().size() > 1) return "(" + s.to_string() + ")*" + gens;
        if (s == -ParamScalar::integer(1)) return "-" + gens;
        return s.to_string() + "*" + gens;
    }
};

inline OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

inline OpExpr adjoint(const OpExpr& a) { return a.adjoint(); }

/// Homomorphic image of `a` under generator -> expression substitution. All
/// images must share one target context; the stored canonical word order of
/// each monomial is preserved when multiplying the (noncommuting) images.
inline OpExpr substitute(const OpExpr& a, const std::vector<OpExpr>& images) {
    if (static_cast<int>(images.size()) != a.context()->size())
        throw std::invalid_argument("substitution image count does not match generator count");
    for (const auto& img : images) {
        if (img.context() != images.front().context())
            throw std::invalid_argument("substitution images live in different contexts");
    }
    ContextPtr target = images.front().context();
    OpExpr result = OpExpr::zero(target);
    for (const auto& [m, s] : a.terms()) {
        OpExpr acc = OpExpr::scalar(target, s);
        for (int g = 0; g < static_cast<int>(m.size()); ++g) {
            for (int r = 0; r < m[g]; ++r) acc = acc * images[g];
        }
        result += acc;
    }
    return result;
}

/// Partial-map overload; throws naming the first generator without an image.
inline OpExpr substitute(const OpExpr& a, const std::map<int, OpExpr>& images) {
    if (images.empty()) throw std::invalid_argument("substitution map is empty");
    std::vector<OpExpr> full;
    full.reserve(a.context()->size());
    for (int g = 0; g < a.context()->size(); ++g) {
        auto it = images.find(g);
        if (it == images.end()) {
            bool used = false;
            for (const auto& [m, s] : a.terms()) {
                (void)s;
                if (m[g] != 0) used = true;
            }
            if (used)
                throw std::invalid_argument("substitution map missing generator '" +
                                            a.context()->generator_name(g) + "'");
            full.push_back(OpExpr::zero(images.begin()->second.context()));
        } else {
            full.push_back(it->second);
        }
    }
    return substitute(a, full);
}

/// A polynomial in the free algebra over a context's generators: words are kept
/// exactly as written, with no ordering applied. Used to state expected
/// right-hand sides and operator definitions whose word order matters before
/// any normal ordering happens.
class FreeExpr {
public:
    struct Term {
        ParamScalar coeff;
        Word word;
    };

    explicit FreeExpr(ContextPtr source) : source_(std::move(source)) {}

    static FreeExpr term(ContextPtr source, ParamScalar coeff, Word word) {
        FreeExpr e(std::move(source));
        e.add(std::move(coeff), std::move(word));
        return e;
    }

    FreeExpr& add(ParamScalar coeff, Word word) {
        for (int g : word) {
            if (g < 0 || g >= source_->size())
                throw std::invalid_argument("free expression uses unknown generator index");
        }
        terms_.push_back({std::move(coeff), std::move(word)});
        return *this;
    }

    const ContextPtr& source() const { return source_; }
    const std::vector<Term>& terms() const { return terms_; }

    /// Evaluates the words under `images`, multiplying left-to-right in the
    /// images' context.
    OpExpr evaluate(const std::vector<OpExpr>& images) const {
        if (static_cast<int>(images.size()) != source_->size())
            throw std::invalid_argument("image count does not match generator count");
        ContextPtr target = images.empty() ? source_ : images.front().context();
        OpExpr result = OpExpr::zero(target);
        for (const auto& t : terms_) {
            OpExpr acc = OpExpr::scalar(target, t.coeff);
            for (int g : t.word) acc = acc * images[g];
            result += acc;
        }
        return result;
    }

private:
    ContextPtr source_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Built-in contexts.
// ---------------------------------------------------------------------------

namespace detail {

inline TermMap scalar_rule(int n, ParamScalar s) {
    TermMap m;
    if (!s.is_zero()) m.emplace(Monomial(n, 0), std::move(s));
    return m;
}

}  // namespace detail

/// Canonical (Heisenberg) phase space: [x_s, p_xs] = [y_s, p_ys] = i*hbar,
/// every other bracket zero.
inline const ContextPtr& heisenberg_context() {
    static const ContextPtr ctx = [] {
        ParamScalar ihbar = ParamScalar::i() * ParamScalar::symbol(Param::hbar);
        std::vector<AlgebraContext::CommutatorRule> rules;
        rules.push_back({0, 1, detail::scalar_rule(4, {})});      // [x_s, y_s]
        rules.push_back({0, 2, detail::scalar_rule(4, ihbar)});   // [x_s, p_xs]
        rules.push_back({0, 3, detail::scalar_rule(4, {})});      // [x_s, p_ys]
        rules.push_back({1, 2, detail::scalar_rule(4, {})});      // [y_s, p_xs]
        rules.push_back({1, 3, detail::scalar_rule(4, ihbar)});   // [y_s, p_ys]
        rules.push_back({2, 3, detail::scalar_rule(4, {})});      // [p_xs, p_ys]
        return AlgebraContext::make("heisenberg", {"x_s", "y_s", "p_xs", "p_ys"},
                                    std::move(rules));
    }();
    return ctx;
}

/// Flat noncommutative phase space: adds [x0, y0] = i*theta to the canonical
/// brackets.
inline const ContextPtr& flat_nc_context() {
    static const ContextPtr ctx = [] {
        ParamScalar ihbar = ParamScalar::i() * ParamScalar::symbol(Param::hbar);
        ParamScalar itheta = ParamScalar::i() * ParamScalar::symbol(Param::theta);
        std::vector<AlgebraContext::CommutatorRule> rules;
        rules.push_back({0, 1, detail::scalar_rule(4, itheta)});  // [x0, y0]
        rules.push_back({0, 2, detail::scalar_rule(4, ihbar)});   // [x0, p_x0]
        rules.push_back({1, 3, detail::scalar_rule(4, ihbar)});   // [y0, p_y0]
        rules.push_back({0, 3, detail::scalar_rule(4, {})});
        rules.push_back({1, 2, detail::scalar_rule(4, {})});
        rules.push_back({2, 3, detail::scalar_rule(4, {})});
        return AlgebraContext::make("flat-nc", {"x0", "y0", "p_x0", "p_y0"}, std::move(rules));
    }();
    return ctx;
}

/// Generator-only context for the position-dependent algebra. Its brackets are
/// position dependent and cannot satisfy the lowering condition, so the algebra
/// is never used for rewriting; it is only a source of names for realizations
/// and expected relations.
inline const ContextPtr& posdep_context() {
    static const ContextPtr ctx =
        AlgebraContext::make("posdep", {"x", "y", "p_x", "p_y"}, {});
    return ctx;
}

}  // namespace ncgqw

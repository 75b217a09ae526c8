#pragma once

#include "ncgqw/op_expr.hpp"

#include <string>
#include <vector>

namespace ncgqw {

/// A realization of one algebra inside another: an image expression for every
/// source generator, all living in one target context.
struct RepMap {
    std::string name;
    ContextPtr source;
    ContextPtr target;
    std::vector<OpExpr> images;

    const OpExpr& image(int g) const { return images.at(g); }
};

/// Composition: apply `inner` (A -> B), then push every image through `outer`
/// (B -> C). The result realizes A in C.
inline RepMap compose(const RepMap& inner, const RepMap& outer, std::string name) {
    if (inner.target != outer.source)
        throw std::invalid_argument("rep composition: target/source contexts do not match");
    RepMap r{std::move(name), inner.source, outer.target, {}};
    r.images.reserve(inner.images.size());
    for (const auto& img : inner.images) r.images.push_back(substitute(img, outer.images));
    return r;
}

namespace detail {

inline ParamScalar theta_over_hbar(long num, long den) {
    return ParamScalar::rational(num, den) * ParamScalar::symbol(Param::theta) *
           ParamScalar::symbol(Param::hbar, -1);
}

}  // namespace detail

/// Asymmetric Bopp shift acting on x only: x0 -> x_s - (theta/hbar) p_ys.
inline const RepMap& rep_bopp_x() {
    static const RepMap rep = [] {
        const auto& h = heisenberg_context();
        auto gen = [&](int g) { return OpExpr::generator(h, g); };
        return RepMap{"bopp-x",
                      flat_nc_context(),
                      h,
                      {gen(0) - gen(3) * detail::theta_over_hbar(1, 1), gen(1), gen(2), gen(3)}};
    }();
    return rep;
}

/// Asymmetric Bopp shift acting on y only: y0 -> y_s + (theta/hbar) p_xs.
inline const RepMap& rep_bopp_y() {
    static const RepMap rep = [] {
        const auto& h = heisenberg_context();
        auto gen = [&](int g) { return OpExpr::generator(h, g); };
        return RepMap{"bopp-y",
                      flat_nc_context(),
                      h,
                      {gen(0), gen(1) + gen(2) * detail::theta_over_hbar(1, 1), gen(2), gen(3)}};
    }();
    return rep;
}

/// Symmetric Bopp shift: x0 -> x_s - (theta/2hbar) p_ys,
/// y0 -> y_s + (theta/2hbar) p_xs.
inline const RepMap& rep_bopp_sym() {
    static const RepMap rep = [] {
        const auto& h = heisenberg_context();
        auto gen = [&](int g) { return OpExpr::generator(h, g); };
        return RepMap{"bopp-sym",
                      flat_nc_context(),
                      h,
                      {gen(0) - gen(3) * detail::theta_over_hbar(1, 2),
                       gen(1) + gen(2) * detail::theta_over_hbar(1, 2), gen(2), gen(3)}};
    }();
    return rep;
}

/// The defining realization of the position-dependent algebra over flat
/// noncommutative operators:
///   x   = x0 + i*theta*tau*y0 + tau*y0^2*x0
///   y   = y0
///   p_x = p_x0
///   p_y = p_y0 - i*hbar*tau*y0 + tau*y0^2*p_y0
inline const RepMap& rep_posdep_in_flat() {
    static const RepMap rep = [] {
        const auto& f = flat_nc_context();
        auto gen = [&](int g) { return OpExpr::generator(f, g); };
        ParamScalar tau = ParamScalar::symbol(Param::tau);
        ParamScalar i_theta_tau =
            ParamScalar::i() * ParamScalar::symbol(Param::theta) * tau;
        ParamScalar i_hbar_tau = ParamScalar::i() * ParamScalar::symbol(Param::hbar) * tau;
        OpExpr x = gen(0) + gen(1) * i_theta_tau + (gen(1) * gen(1) * gen(0)) * tau;
        OpExpr py = gen(3) - gen(1) * i_hbar_tau + (gen(1) * gen(1) * gen(3)) * tau;
        return RepMap{"posdep/flat", posdep_context(), f, {x, gen(1), gen(2), py}};
    }();
    return rep;
}

/// Closed-form realization of the position-dependent algebra directly over
/// canonical operators, transcribed term by term in its published word order.
/// Kept separate from the composed route so discrepancies between the two are
/// detected instead of silently adopted.
inline const RepMap& rep_posdep_in_canonical_direct() {
    static const RepMap rep = [] {
        const auto& h = heisenberg_context();
        auto gen = [&](int g) { return OpExpr::generator(h, g); };
        const ParamScalar i = ParamScalar::i();
        const ParamScalar hbar = ParamScalar::symbol(Param::hbar);
        const ParamScalar inv_h = ParamScalar::symbol(Param::hbar, -1);
        const ParamScalar inv_h2 = ParamScalar::symbol(Param::hbar, -2);
        const ParamScalar inv_h3 = ParamScalar::symbol(Param::hbar, -3);
        const ParamScalar theta = ParamScalar::symbol(Param::theta);
        const ParamScalar tau = ParamScalar::symbol(Param::tau);
        const ParamScalar half = ParamScalar::rational(1, 2);
        const ParamScalar quarter = ParamScalar::rational(1, 4);

        // x = x_s - (theta/2hbar) p_ys + tau y_s^2 x_s
        //     + theta*tau ( i y_s + (1/hbar) y_s p_xs x_s - (1/2hbar) y_s^2 p_ys )
        //     + theta^2*tau ( (i/2hbar) p_ys + (1/4hbar^2) p_xs^2 x_s
        //                     - (1/2hbar^2) y_s p_xs p_ys )
        //     - (theta^3*tau/8hbar^3) p_xs^2 p_ys
        OpExpr x = gen(0) - gen(3) * (half * theta * inv_h) +
                   (gen(1) * gen(1) * gen(0)) * tau +
                   (gen(1) * (i * theta * tau) +
                    (gen(1) * gen(2) * gen(0)) * (theta * tau * inv_h) -
                    (gen(1) * gen(1) * gen(3)) * (half * theta * tau * inv_h)) +
                   (gen(3) * (i * half * theta * theta * tau * inv_h) +
                    (gen(2) * gen(2) * gen(0)) * (quarter * theta * theta * tau * inv_h2) -
                    (gen(1) * gen(2) * gen(3)) * (half * theta * theta * tau * inv_h2)) -
                   (gen(2) * gen(2) * gen(3)) *
                       (ParamScalar::rational(1, 8) * theta * theta * theta * tau * inv_h3);

        // y = y_s + (theta/2hbar) p_xs
        OpExpr y = gen(1) + gen(2) * (half * theta * inv_h);

        // p_y = p_ys + tau (-i hbar y_s + y_s^2 p_ys)
        //       + theta*tau ( -(i/2) p_xs + (1/hbar) y_s p_xs p_ys )
        //       + (theta^2*tau/4hbar^2) p_xs^2 p_ys
        OpExpr py = gen(3) +
                    (gen(1) * (-(i * hbar * tau)) + (gen(1) * gen(1) * gen(3)) * tau) +
                    (gen(2) * (-(i * half * theta * tau)) +
                     (gen(1) * gen(2) * gen(3)) * (theta * tau * inv_h)) +
                    (gen(2) * gen(2) * gen(3)) * (quarter * theta * theta * tau * inv_h2);

        return RepMap{"posdep/canonical-direct", posdep_context(), h, {x, y, gen(2), py}};
    }();
    return rep;
}

/// Engine-derived realization over canonical operators: the flat realization
/// pushed through the symmetric Bopp shift.
inline const RepMap& rep_posdep_in_canonical_composed() {
    static const RepMap rep =
        compose(rep_posdep_in_flat(), rep_bopp_sym(), "posdep/canonical-composed");
    return rep;
}

// ---------------------------------------------------------------------------
// Expected commutation relations, stated as free expressions over the source
// generators. A right-hand side is evaluated through a realization's images,
// so e.g. the word {y, y} means image(y)^2 in the target context.
// ---------------------------------------------------------------------------

struct Relation {
    std::string label;
    int gi;
    int gj;
    FreeExpr rhs;
};

namespace detail {

inline std::string bracket_label(const ContextPtr& ctx, int i, int j) {
    return "[" + ctx->generator_name(i) + ", " + ctx->generator_name(j) + "]";
}

}  // namespace detail

/// Canonical brackets: [x, p_x] = [y, p_y] = i*hbar, all others zero.
inline std::vector<Relation> heisenberg_relations() {
    const auto& c = heisenberg_context();
    ParamScalar ihbar = ParamScalar::i() * ParamScalar::symbol(Param::hbar);
    std::vector<Relation> rels;
    auto scalar_rhs = [&](ParamScalar s) {
        return s.is_zero() ? FreeExpr(c) : FreeExpr::term(c, std::move(s), {});
    };
    rels.push_back({detail::bracket_label(c, 0, 1), 0, 1, scalar_rhs({})});
    rels.push_back({detail::bracket_label(c, 0, 2), 0, 2, scalar_rhs(ihbar)});
    rels.push_back({detail::bracket_label(c, 1, 3), 1, 3, scalar_rhs(ihbar)});
    rels.push_back({detail::bracket_label(c, 0, 3), 0, 3, scalar_rhs({})});
    rels.push_back({detail::bracket_label(c, 1, 2), 1, 2, scalar_rhs({})});
    rels.push_back({detail::bracket_label(c, 2, 3), 2, 3, scalar_rhs({})});
    return rels;
}

/// Flat noncommutative brackets: [x0, y0] = i*theta plus canonical momenta.
inline std::vector<Relation> flat_relations() {
    const auto& c = flat_nc_context();
    ParamScalar ihbar = ParamScalar::i() * ParamScalar::symbol(Param::hbar);
    ParamScalar itheta = ParamScalar::i() * ParamScalar::symbol(Param::theta);
    std::vector<Relation> rels;
    auto scalar_rhs = [&](ParamScalar s) {
        return s.is_zero() ? FreeExpr(c) : FreeExpr::term(c, std::move(s), {});
    };
    rels.push_back({detail::bracket_label(c, 0, 1), 0, 1, scalar_rhs(itheta)});
    rels.push_back({detail::bracket_label(c, 0, 2), 0, 2, scalar_rhs(ihbar)});
    rels.push_back({detail::bracket_label(c, 1, 3), 1, 3, scalar_rhs(ihbar)});
    rels.push_back({detail::bracket_label(c, 0, 3), 0, 3, scalar_rhs({})});
    rels.push_back({detail::bracket_label(c, 1, 2), 1, 2, scalar_rhs({})});
    rels.push_back({detail::bracket_label(c, 2, 3), 2, 3, scalar_rhs({})});
    return rels;
}

/// Position-dependent brackets:
///   [x, y]    = i*theta (1 + tau y^2)
///   [x, p_x]  = i*hbar  (1 + tau y^2)
///   [y, p_y]  = i*hbar  (1 + tau y^2)
///   [x, p_y]  = 2 i tau y (theta p_y + hbar x)
///   [y, p_x] = [p_x, p_y] = 0
inline std::vector<Relation> posdep_relations() {
    const auto& c = posdep_context();
    const ParamScalar i = ParamScalar::i();
    const ParamScalar hbar = ParamScalar::symbol(Param::hbar);
    const ParamScalar theta = ParamScalar::symbol(Param::theta);
    const ParamScalar tau = ParamScalar::symbol(Param::tau);
    const ParamScalar two = ParamScalar::integer(2);

    std::vector<Relation> rels;
    auto deformed = [&](ParamScalar lead) {
        FreeExpr e = FreeExpr::term(c, lead, {});
        e.add(lead * tau, {1, 1});
        return e;
    };
    rels.push_back({detail::bracket_label(c, 0, 1), 0, 1, deformed(i * theta)});
    rels.push_back({detail::bracket_label(c, 0, 2), 0, 2, deformed(i * hbar)});
    rels.push_back({detail::bracket_label(c, 1, 3), 1, 3, deformed(i * hbar)});
    FreeExpr xy_py = FreeExpr::term(c, two * i * tau * theta, {1, 3});
    xy_py.add(two * i * tau * hbar, {1, 0});
    rels.push_back({detail::bracket_label(c, 0, 3), 0, 3, std::move(xy_py)});
    rels.push_back({detail::bracket_label(c, 1, 2), 1, 2, FreeExpr(c)});
    rels.push_back({detail::bracket_label(c, 2, 3), 2, 3, FreeExpr(c)});
    return rels;
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

/// One verified claim. `pass` is true exactly when the residual is the zero
/// expression; nothing is compared within tolerances here.
struct Claim {
    std::string label;
    OpExpr computed;
    OpExpr expected;
    OpExpr residual;
    bool pass;
    bool must_pass;
};

struct VerificationReport {
    std::vector<Claim> claims;

    bool all_passed() const {
        for (const auto& c : claims) {
            if (!c.pass) return false;
        }
        return true;
    }
    bool must_pass_ok() const {
        for (const auto& c : claims) {
            if (c.must_pass && !c.pass) return false;
        }
        return true;
    }

    VerificationReport& merge(VerificationReport other) {
        for (auto& c : other.claims) claims.push_back(std::move(c));
        return *this;
    }
};

namespace detail {

inline Claim make_claim(std::string label, OpExpr computed, OpExpr expected, bool must_pass) {
    OpExpr residual = computed - expected;
    bool pass = residual.is_zero();
    return Claim{std::move(label), std::move(computed), std::move(expected),
                 std::move(residual), pass, must_pass};
}

}  // namespace detail

/// Checks that the realization's images satisfy the expected source-algebra
/// brackets, exactly. Failures are report entries, never exceptions.
inline VerificationReport verify_algebra(const RepMap& rep,
                                         const std::vector<Relation>& relations) {
    VerificationReport report;
    for (const auto& rel : relations) {
        OpExpr computed = commutator(rep.image(rel.gi), rep.image(rel.gj));
        OpExpr expected = rel.rhs.evaluate(rep.images);
        report.claims.push_back(
            detail::make_claim(rep.name + ": " + rel.label, std::move(computed),
                               std::move(expected), true));
    }
    return report;
}

/// Checks self-adjointness of every image: residual = adjoint(e) - e.
inline VerificationReport verify_hermiticity(const RepMap& rep) {
    VerificationReport report;
    for (int g = 0; g < rep.source->size(); ++g) {
        const OpExpr& e = rep.image(g);
        report.claims.push_back(detail::make_claim(
            rep.name + ": adjoint(" + rep.source->generator_name(g) + ")", adjoint(e), e,
            true));
    }
    return report;
}

namespace detail {

inline VerificationReport verify_jacobi_impl(const std::string& who, const ContextPtr& names,
                                             const std::vector<OpExpr>& ops) {
    VerificationReport report;
    const int n = static_cast<int>(ops.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                OpExpr cyclic = commutator(ops[a], commutator(ops[b], ops[c])) +
                                commutator(ops[b], commutator(ops[c], ops[a])) +
                                commutator(ops[c], commutator(ops[a], ops[b]));
                std::string label = who + ": jacobi(" + names->generator_name(a) + ", " +
                                    names->generator_name(b) + ", " +
                                    names->generator_name(c) + ")";
                report.claims.push_back(make_claim(std::move(label), std::move(cyclic),
                                                   OpExpr::zero(ops[a].context()), true));
            }
        }
    }
    return report;
}

}  // namespace detail

/// Jacobi identity over all generator triples of a rewriting context.
inline VerificationReport verify_jacobi(const ContextPtr& ctx) {
    std::vector<OpExpr> gens;
    for (int g = 0; g < ctx->size(); ++g) gens.push_back(OpExpr::generator(ctx, g));
    return detail::verify_jacobi_impl(ctx->name(), ctx, gens);
}

/// Jacobi identity over all triples of a realization's images.
inline VerificationReport verify_jacobi(const RepMap& rep) {
    return detail::verify_jacobi_impl(rep.name, rep.source, rep.images);
}

/// Per-generator exact difference of two realizations with identical
/// source/target contexts. Reported, not asserted: rows are not must-pass.
inline VerificationReport compare_reps(const RepMap& a, const RepMap& b) {
    if (a.source != b.source || a.target != b.target)
        throw std::invalid_argument("compare_reps: realizations use different contexts");
    VerificationReport report;
    for (int g = 0; g < a.source->size(); ++g) {
        report.claims.push_back(detail::make_claim(
            a.name + " vs " + b.name + ": " + a.source->generator_name(g), a.image(g),
            b.image(g), false));
    }
    return report;
}

}  // namespace ncgqw

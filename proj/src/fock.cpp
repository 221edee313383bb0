#include "qfock/fock.hpp"

#include <sstream>
#include <stdexcept>

#include "qfock/errors.hpp"

namespace qfock {

FockSpace space_for(int which) {
    if (which == 1) return FockSpace::F1;
    if (which == 2) return FockSpace::F2;
    throw UsageError("realization selector must be 1 or 2");
}

int which_for(FockSpace space) {
    return space == FockSpace::F1 ? 1 : 2;
}

std::string FockLabel::str() const {
    std::ostringstream os;
    os << (space == FockSpace::F1 ? 'f' : 'g') << "(" << r1 << "," << r2 << ")";
    return os.str();
}

namespace {

template <typename Scalar>
bool scalar_is_zero(const Scalar& s) {
    return s.is_zero();
}

template <typename Scalar>
std::string scalar_str(const Scalar& s) {
    return s.str();
}

template <typename Scalar>
bool scalar_is_one(const Scalar& s);

template <>
bool scalar_is_one<LaurentPoly>(const LaurentPoly& s) {
    return s.is_one();
}

template <>
bool scalar_is_one<CyclotomicNumber>(const CyclotomicNumber& s) {
    return !s.is_zero() && s == CyclotomicNumber::one(s.context());
}

template <typename Scalar>
bool scalar_is_plain(const Scalar& s);

template <>
bool scalar_is_plain<LaurentPoly>(const LaurentPoly& s) {
    return s.terms().size() <= 1;
}

template <>
bool scalar_is_plain<CyclotomicNumber>(const CyclotomicNumber& s) {
    size_t nonzero = 0;
    for (const auto& c : s.coefficients()) nonzero += c != 0 ? 1 : 0;
    return nonzero <= 1;
}

} // namespace

template <typename Scalar>
FockVector<Scalar> FockVector<Scalar>::basis(const FockLabel& label, Scalar one) {
    FockVector<Scalar> v;
    v.space = label.space;
    v.terms.emplace(label, std::move(one));
    return v;
}

template <typename Scalar>
void FockVector<Scalar>::add(const FockLabel& label, const Scalar& c) {
    if (label.space != space) throw std::invalid_argument("Fock label space mismatch");
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (scalar_is_zero(it->second)) terms.erase(it);
    }
}

template <typename Scalar>
FockVector<Scalar>& FockVector<Scalar>::operator+=(const FockVector& rhs) {
    if (rhs.space != space) throw std::invalid_argument("Fock vector space mismatch");
    for (const auto& [label, c] : rhs.terms) add(label, c);
    return *this;
}

template <typename Scalar>
std::string FockVector<Scalar>::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (!scalar_is_one(c)) {
            const bool parens = !scalar_is_plain(c);
            if (parens) os << "(";
            os << scalar_str(c);
            if (parens) os << ")";
            os << " · ";
        }
        os << label.str();
    }
    return os.str();
}

template struct FockVector<LaurentPoly>;
template struct FockVector<CyclotomicNumber>;

GenericFockVector generic_basis(const FockLabel& label) {
    return GenericFockVector::basis(label, LaurentPoly::one());
}

RootFockVector root_basis(const FockLabel& label, const CycloContextPtr& ctx) {
    return RootFockVector::basis(label, CyclotomicNumber::one(ctx));
}

namespace {

// The scalar contexts let the action formulas be written once: qbinom and
// qpow produce the coefficient either generically or at the root of unity.
struct GenericScalarOps {
    using Scalar = LaurentPoly;
    LaurentPoly qbinom(std::int64_t n, std::int64_t m) const { return q_binomial(n, m); }
    LaurentPoly qpow(std::int64_t k) const { return LaurentPoly::monomial(k); }
    LaurentPoly integer(std::int64_t n) const { return LaurentPoly::integer(n); }
};

struct RootScalarOps {
    using Scalar = CyclotomicNumber;
    CycloContextPtr ctx;
    CyclotomicNumber qbinom(std::int64_t n, std::int64_t m) const {
        return specialize(q_binomial(n, m), ctx);
    }
    CyclotomicNumber qpow(std::int64_t k) const { return CyclotomicNumber::root_power(k, ctx); }
    CyclotomicNumber integer(std::int64_t n) const {
        return CyclotomicNumber::from_rational(BigRat(n), ctx);
    }
};

template <typename Ops>
FockVector<typename Ops::Scalar> act_impl(const UGenerator& g,
                                          const FockVector<typename Ops::Scalar>& v, int which,
                                          const Ops& ops) {
    if (space_for(which) != v.space) {
        throw std::invalid_argument("realization " + std::to_string(which) +
                                    " does not act on this Fock space");
    }
    FockVector<typename Ops::Scalar> out;
    out.space = v.space;
    const bool f1 = v.space == FockSpace::F1;
    for (const auto& [label, c] : v.terms) {
        const std::int64_t r1 = label.r1;
        const std::int64_t r2 = label.r2;
        switch (g.kind) {
            case UKind::EDivided: {
                const std::int64_t r = g.r;
                FockLabel target{v.space, f1 ? r1 + r : r1 - r, f1 ? r2 - r : r2 - r};
                if (target.r1 < 0 || target.r2 < 0) break; // vector absent or coefficient zero
                auto coeff = f1 ? ops.qbinom(r + r1, r) : ops.qbinom(r2, r2 - r);
                coeff *= c;
                out.add(target, coeff);
                break;
            }
            case UKind::FDivided: {
                const std::int64_t r = g.r;
                FockLabel target{v.space, f1 ? r1 - r : r1 + r, f1 ? r2 + r : r2 + r};
                if (target.r1 < 0 || target.r2 < 0) break;
                auto coeff = f1 ? ops.qbinom(r + r2, r) : ops.qbinom(r + r1, r);
                if (!f1 && r % 2 != 0) coeff = -coeff; // (-1)^r on F2
                coeff *= c;
                out.add(target, coeff);
                break;
            }
            case UKind::K:
            case UKind::KInv: {
                std::int64_t w = f1 ? r1 - r2 : -(r1 + r2 + 1);
                if (g.kind == UKind::KInv) w = -w;
                auto coeff = ops.qpow(w);
                coeff *= c;
                out.add(label, coeff);
                break;
            }
            case UKind::KZero: {
                // Diagonal with the weight's upper digit; generically this is
                // the full binomial [weight over p]_q, which specializes to it.
                const std::int64_t w = f1 ? r1 - r2 : -(r1 + r2 + 1);
                auto coeff = ops.kzero_eigenvalue(w, g.p);
                coeff *= c;
                out.add(label, coeff);
                break;
            }
        }
    }
    return out;
}

} // namespace

GenericFockVector act(const UGenerator& g, const GenericFockVector& v, int which) {
    struct Ops : GenericScalarOps {
        LaurentPoly kzero_eigenvalue(std::int64_t w, std::int64_t p) const {
            require_valid_p(p);
            return q_binomial(w, p);
        }
    };
    return act_impl(g, v, which, Ops{});
}

RootFockVector act(const UGenerator& g, const RootFockVector& v, int which) {
    if (v.terms.empty()) {
        RootFockVector out;
        out.space = space_for(which);
        return out;
    }
    struct Ops : RootScalarOps {
        CyclotomicNumber kzero_eigenvalue(std::int64_t w, std::int64_t p) const {
            if (p != ctx->p()) {
                throw std::invalid_argument("[K;0;p] root order differs from the vector's field");
            }
            return integer(digits(w, p).n1);
        }
    };
    Ops ops;
    ops.ctx = v.terms.begin()->second.context();
    return act_impl(g, v, which, ops);
}

GenericFockVector act_oracle(const UGenerator& g, const FockLabel& label, int which) {
    if (space_for(which) != label.space) {
        throw std::invalid_argument("realization " + std::to_string(which) +
                                    " does not act on this Fock space");
    }
    const BosonElement op = realize(g, which); // rejects KZero
    GenericFockVector out;
    out.space = label.space;
    for (const auto& [pos, c] : apply_to_vacuum(op, label.r1, label.r2)) {
        out.add(FockLabel{label.space, pos.first, pos.second}, c);
    }
    return out;
}

Weight weight_of(const FockLabel& label, int which, std::int64_t p) {
    if (space_for(which) != label.space) {
        throw std::invalid_argument("label space does not match the realization");
    }
    const std::int64_t w =
        label.space == FockSpace::F1 ? label.r1 - label.r2 : -(label.r1 + label.r2 + 1);
    return weight_digits(w, p);
}

RootFockVector specialize_vector(const GenericFockVector& v, const CycloContextPtr& ctx) {
    RootFockVector out;
    out.space = v.space;
    for (const auto& [label, c] : v.terms) out.add(label, specialize(c, ctx));
    return out;
}

RootFockVector specialize_vector(const GenericFockVector& v, std::int64_t p) {
    return specialize_vector(v, make_cyclo_context(p));
}

} // namespace qfock

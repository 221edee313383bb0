#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

/// The two integral forms of the rank-2 q-boson algebra. They differ in
/// which powers are divided: Res1 divides the creators on both sites,
/// Res2 divides the site-1 creators and the site-2 annihilators.
enum class BosonForm { Res1, Res2 };

std::string to_string(BosonForm form);

enum class GenKind {
    A,            // a_i^n        (ordinary annihilator power)
    ADivided,     // a_i^(n)      (divided annihilator power)
    APlus,        // a_i^+n       (ordinary creator power)
    APlusDivided, // a_i^+(n)     (divided creator power)
    K,            // K_i
    KInv          // K_i^-1
};

/// One letter of a generator word. `power` is the (divided) power order for
/// the a-kinds and is fixed at 1 for K and K^-1.
struct Generator {
    GenKind kind;
    int site;                // 1 or 2
    std::int64_t power = 1;  // >= 1

    static Generator a(int site, std::int64_t n = 1);
    static Generator a_divided(int site, std::int64_t n);
    static Generator a_plus(int site, std::int64_t n = 1);
    static Generator a_plus_divided(int site, std::int64_t n);
    static Generator k(int site);
    static Generator k_inv(int site);

    std::string str() const;
};

/// PBW basis monomial. Under Res1 it reads
///   a1+^(r1) a2+^(r2) a1^s1 a2^s2 K1^t1 K2^t2,
/// under Res2
///   a1+^(r1) a2+^r2 a1^s1 a2^(s2) K1^t1 K2^t2.
struct PBWMonomial {
    BosonForm form = BosonForm::Res1;
    std::int64_t r1 = 0, r2 = 0; // creator exponents, >= 0
    std::int64_t s1 = 0, s2 = 0; // annihilator exponents, >= 0
    std::int64_t t1 = 0, t2 = 0; // K exponents, any sign

    bool operator==(const PBWMonomial&) const = default;
    // lexicographic on (r1, r2, s1, s2, t1, t2); deterministic printing
    auto operator<=>(const PBWMonomial&) const = default;

    bool is_unit() const { return r1 == 0 && r2 == 0 && s1 == 0 && s2 == 0 && t1 == 0 && t2 == 0; }
    std::string str() const;
};

/// Finite linear combination of PBW monomials with Laurent-polynomial
/// coefficients; all monomials share the element's form and no stored
/// coefficient is zero.
class BosonElement {
public:
    using TermMap = std::map<PBWMonomial, LaurentPoly>;

    explicit BosonElement(BosonForm form = BosonForm::Res1) : form_(form) {}

    static BosonElement zero(BosonForm form) { return BosonElement(form); }
    static BosonElement unit(BosonForm form);
    static BosonElement monomial(const PBWMonomial& m, LaurentPoly coeff = LaurentPoly::one());

    BosonForm form() const { return form_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add(const PBWMonomial& m, const LaurentPoly& c);
    BosonElement& operator+=(const BosonElement& rhs);
    friend BosonElement operator+(BosonElement a, const BosonElement& b) { return a += b; }
    BosonElement& operator*=(const LaurentPoly& scalar);
    friend BosonElement operator*(const LaurentPoly& scalar, BosonElement e) { return e *= scalar; }

    bool operator==(const BosonElement& rhs) const = default;

    std::string str() const;

private:
    BosonForm form_;
    TermMap terms_;
};

/// A coordinate that fails to be a Laurent polynomial when expressing an
/// element in the requested integral form.
struct NotIntegral {
    PBWMonomial monomial;
    std::string remainder;
    std::string message() const;
};

using BosonResult = std::variant<BosonElement, NotIntegral>;

/// Order in which a word is folded into normal form. Both must agree on
/// every input; the confluence property tests exercise exactly this.
enum class RewriteStrategy { LeftmostInnermost, RightmostInnermost };

/// Expansion of an arbitrary generator word in the PBW basis of `form`.
/// Fails with NotIntegral when the word does not lie in that integral form
/// (e.g. a divided annihilator folded into Res1).
BosonResult normal_order(std::span<const Generator> word, BosonForm form,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostInnermost);

/// normal_order for words known to lie in the form; throws std::logic_error
/// on NotIntegral.
BosonElement normal_order_integral(std::span<const Generator> word, BosonForm form);

/// Bilinear, associative product of two normal-form elements (same form).
BosonElement multiply(const BosonElement& x, const BosonElement& y);

/// Rewrite into the other integral form's PBW basis. Succeeds iff every
/// resulting coordinate is an exact Laurent polynomial, which is precisely
/// membership of `x` in the target restricted form.
BosonResult convert_basis(const BosonElement& x, BosonForm target);

/// Image of (x * a1+^{(x1)} a2+^{(x2)/x2} |0>) written on the creator-label
/// basis: annihilator terms die on the vacuum, K factors act trivially.
/// Keys are (r1, r2) creator exponents.
using VacuumImage = std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly>;
VacuumImage apply_to_vacuum(const BosonElement& x, std::int64_t x1, std::int64_t x2);

} // namespace qfock

#ifndef VFUNC_RAMIFICATION_HPP
#define VFUNC_RAMIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vfunc/extension_algebra.hpp"
#include "vfunc/vfunction.hpp"

namespace vfunc {

/// An F_p-line lambda*g1 + mu*g2 of the Artin-Schreier span, i.e. a degree-p
/// subextension. (lambda, mu) is normalized to (1, 0) or (lambda, 1).
struct Line {
    int lambda = 0;
    int mu = 0;
    LaurentPoly rep;
    std::int64_t jump = 0;  // -v_K(rep)
};

/// Subgroup of G = (Z/p)^2, stored as its sorted element list.
class Subgroup {
public:
    static Subgroup trivial(int p);
    static Subgroup whole(int p);
    static Subgroup generated_by(const std::vector<GroupElement>& gens, int p);

    int p() const noexcept { return p_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    bool contains(const GroupElement& g) const;
    bool is_subgroup_of(const Subgroup& other) const;
    /// Empty for order 1; ((1,0),(0,1)) for G; the generator with first
    /// nonzero exponent equal to 1 for order p.
    std::vector<GroupElement> canonical_basis() const;

    friend Subgroup intersect(const Subgroup& a, const Subgroup& b);
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

private:
    Subgroup(int p, std::vector<GroupElement> elements) : p_(p), elements_(std::move(elements)) {}

    int p_;
    std::vector<GroupElement> elements_;
};

enum class Numbering { Upper, Lower };

struct FiltrationBreak {
    Rational at;
    Subgroup after;
};

/// Step function v -> subgroup: G up to and including the first break, then
/// the subgroup attached to the largest break strictly below v.
struct Filtration {
    Numbering numbering = Numbering::Upper;
    int p = 2;
    std::vector<FiltrationBreak> breaks;

    Subgroup at(const Rational& v) const;
};

/// Continuous increasing piecewise-linear function on [0, inf) with f(0) = 0.
/// slopes[k] applies on [knots[k], knots[k+1]), the last one to infinity.
class HerbrandFn {
public:
    HerbrandFn(std::vector<Rational> knots, std::vector<Rational> slopes);

    Rational operator()(const Rational& x) const;
    HerbrandFn inverse() const;
    const std::vector<Rational>& knots() const noexcept { return knots_; }
    const std::vector<Rational>& slopes() const noexcept { return slopes_; }

private:
    std::vector<Rational> knots_;
    std::vector<Rational> slopes_;
};

/// The p + 1 lines: (1, 0) first, then (lambda, 1) for lambda = 0..p-1.
std::vector<Line> lines(const ExtensionPair& pair);

/// {sigma^i tau^j : i*mu + j*lambda = 0}, the subgroup fixing the root of
/// x^p - x = lambda*g1 + mu*g2.
Subgroup annihilator(const Line& line, int p);

/// G^v = intersection of annihilators of the lines with jump < v.
Filtration upper_filtration(const ExtensionPair& pair);
/// Upper breaks transported through psi.
Filtration lower_filtration(const ExtensionPair& pair);

/// phi with slope |G_x| / |G_0|. Throws NumberingMismatch for upper input.
HerbrandFn herbrand_phi(const Filtration& lower);
/// psi with slope |G^0| / |G^v|. Throws NumberingMismatch for lower input.
HerbrandFn herbrand_psi(const Filtration& upper);

/// "upper|u1:o1,u2:o2,..." where u is a reduced fraction and o the order of
/// the subgroup after the break; order-p subgroups carry their canonical
/// generator as "@(i;j)".
std::string filtration_fingerprint(const Filtration& filt);

/// For every order-p subgroup H, compares the cyclic quotient filtration of
/// G/H (read off its line's own jump) with G^v H / H at rational test points
/// straddling every break.
bool quotient_compat_check(const ExtensionPair& pair);

std::string format_rational(const Rational& r);

}  // namespace vfunc

#endif  // VFUNC_RAMIFICATION_HPP

#include "vfunc/ramification.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vfunc/error.hpp"

namespace vfunc {

Subgroup Subgroup::trivial(int p) { return Subgroup(p, {GroupElement{0, 0}}); }

Subgroup Subgroup::whole(int p) { return Subgroup(p, group_elements(p)); }

Subgroup Subgroup::generated_by(const std::vector<GroupElement>& gens, int p) {
    std::set<GroupElement> elems{GroupElement{0, 0}};
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<GroupElement> current(elems.begin(), elems.end());
        for (const auto& x : current)
            for (const auto& g : gens)
                if (elems.insert(x.compose(GroupElement::make(g.sigma, g.tau, p), p)).second) grew = true;
    }
    return Subgroup(p, std::vector<GroupElement>(elems.begin(), elems.end()));
}

bool Subgroup::contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), GroupElement::make(g.sigma, g.tau, p_));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::vector<GroupElement> Subgroup::canonical_basis() const {
    if (order() == 1) return {};
    if (order() == static_cast<std::size_t>(p_ * p_)) return {GroupElement{1, 0}, GroupElement{0, 1}};
    for (const auto& g : elements_) {
        const int first = g.sigma != 0 ? g.sigma : g.tau;
        if (first == 1) return {g};
    }
    return {};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<GroupElement> out;
    std::set_intersection(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                          std::back_inserter(out));
    return Subgroup(a.p_, std::move(out));
}

Subgroup Filtration::at(const Rational& v) const {
    Subgroup current = Subgroup::whole(p);
    for (const auto& br : breaks) {
        if (br.at < v)
            current = br.after;
        else
            break;
    }
    return current;
}

HerbrandFn::HerbrandFn(std::vector<Rational> knots, std::vector<Rational> slopes)
    : knots_(std::move(knots)), slopes_(std::move(slopes)) {
    if (knots_.empty() || knots_.front() != Rational(0) || knots_.size() != slopes_.size())
        throw Error(ErrorKind::DimensionMismatch, "Herbrand function needs knots starting at 0, one slope each");
}

Rational HerbrandFn::operator()(const Rational& x) const {
    Rational y = 0;
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        const bool last = k + 1 == knots_.size();
        if (last || x <= knots_[k + 1]) return y + slopes_[k] * (x - knots_[k]);
        y += slopes_[k] * (knots_[k + 1] - knots_[k]);
    }
    return y;
}

HerbrandFn HerbrandFn::inverse() const {
    std::vector<Rational> knots;
    std::vector<Rational> slopes;
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        knots.push_back((*this)(knots_[k]));
        slopes.push_back(1 / slopes_[k]);
    }
    return HerbrandFn(std::move(knots), std::move(slopes));
}

std::vector<Line> lines(const ExtensionPair& pair) {
    const FiniteField& F = pair.F();
    const int p = pair.p();
    std::vector<std::pair<int, int>> coords{{1, 0}};
    for (int lambda = 0; lambda < p; ++lambda) coords.emplace_back(lambda, 1);
    std::vector<Line> out;
    for (const auto& [lambda, mu] : coords) {
        const LaurentPoly combo = pair.g1().scaled(F.from_int(lambda)) + pair.g2().scaled(F.from_int(mu));
        LaurentPoly rep = reduce_to_J(combo).rep;
        const std::int64_t jump = -v_K(rep).value();
        out.push_back(Line{lambda, mu, std::move(rep), jump});
    }
    return out;
}

Subgroup annihilator(const Line& line, int p) {
    std::vector<GroupElement> gens;
    for (const auto& g : group_elements(p))
        if ((g.sigma * line.mu + g.tau * line.lambda) % p == 0) gens.push_back(g);
    return Subgroup::generated_by(gens, p);
}

Filtration upper_filtration(const ExtensionPair& pair) {
    const int p = pair.p();
    const auto ls = lines(pair);
    std::set<std::int64_t> jumps;
    for (const auto& l : ls) jumps.insert(l.jump);
    Filtration filt{Numbering::Upper, p, {}};
    for (std::int64_t u : jumps) {
        Subgroup after = Subgroup::whole(p);
        for (const auto& l : ls)
            if (l.jump <= u) after = intersect(after, annihilator(l, p));
        filt.breaks.push_back(FiltrationBreak{Rational(u), std::move(after)});
    }
    return filt;
}

namespace {

HerbrandFn build_herbrand(const Filtration& filt, bool index_slope) {
    const Rational full(static_cast<std::int64_t>(filt.p) * filt.p);
    std::vector<Rational> knots{Rational(0)};
    std::vector<Rational> slopes{Rational(1)};
    for (const auto& br : filt.breaks) {
        const Rational order(static_cast<std::int64_t>(br.after.order()));
        const Rational slope = index_slope ? full / order : order / full;
        if (br.at == Rational(0)) {
            slopes.back() = slope;
            continue;
        }
        knots.push_back(br.at);
        slopes.push_back(slope);
    }
    return HerbrandFn(std::move(knots), std::move(slopes));
}

}  // namespace

HerbrandFn herbrand_phi(const Filtration& lower) {
    if (lower.numbering != Numbering::Lower)
        throw Error(ErrorKind::NumberingMismatch, "phi is built from the lower filtration");
    return build_herbrand(lower, false);
}

HerbrandFn herbrand_psi(const Filtration& upper) {
    if (upper.numbering != Numbering::Upper)
        throw Error(ErrorKind::NumberingMismatch, "psi is built from the upper filtration");
    return build_herbrand(upper, true);
}

Filtration lower_filtration(const ExtensionPair& pair) {
    const Filtration upper = upper_filtration(pair);
    const HerbrandFn psi = herbrand_psi(upper);
    Filtration lower{Numbering::Lower, upper.p, {}};
    for (const auto& br : upper.breaks) lower.breaks.push_back(FiltrationBreak{psi(br.at), br.after});
    return lower;
}

std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

std::string filtration_fingerprint(const Filtration& filt) {
    std::ostringstream out;
    out << (filt.numbering == Numbering::Upper ? "upper" : "lower") << '|';
    for (std::size_t k = 0; k < filt.breaks.size(); ++k) {
        const auto& br = filt.breaks[k];
        if (k) out << ',';
        out << format_rational(br.at) << ':' << br.after.order();
        if (br.after.order() == static_cast<std::size_t>(filt.p)) {
            const GroupElement g = br.after.canonical_basis().front();
            out << "@(" << g.sigma << ';' << g.tau << ')';
        }
    }
    return out.str();
}

bool quotient_compat_check(const ExtensionPair& pair) {
    const int p = pair.p();
    const Filtration upper = upper_filtration(pair);
    std::vector<Rational> points{Rational(0)};
    for (const auto& br : upper.breaks) {
        points.push_back(br.at - Rational(1, 2));
        points.push_back(br.at);
        points.push_back(br.at + Rational(1, 2));
    }
    if (!upper.breaks.empty()) points.push_back(upper.breaks.back().at + 1);

    for (const auto& line : lines(pair)) {
        const Subgroup h = annihilator(line, p);
        for (const auto& v : points) {
            // Cyclic quotient of order p: whole group up to its jump, trivial after.
            const bool quotient_whole = v <= Rational(line.jump);
            // G^v H / H is trivial exactly when G^v lies in H.
            const bool image_whole = !upper.at(v).is_subgroup_of(h);
            if (quotient_whole != image_whole) return false;
        }
    }
    return true;
}

}  // namespace vfunc

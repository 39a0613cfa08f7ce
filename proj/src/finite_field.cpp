#include "vfunc/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vfunc/error.hpp"

namespace vfunc {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a modulo b over F_p; b must have a nonzero leading coefficient.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> b, int p) {
    const std::size_t db = b.size() - 1;
    int lead_inv = 1;
    for (int k = 1; k < p; ++k)
        if (mod_p(static_cast<long long>(k) * b[db], p) == 1) lead_inv = k;
    while (a.size() > db) {
        const int top = a.back();
        if (top != 0) {
            const int factor = mod_p(static_cast<long long>(top) * lead_inv, p);
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = mod_p(a[shift + i] - static_cast<long long>(factor) * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

std::vector<int> digits(std::uint32_t code, int p, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(p));
        code /= static_cast<std::uint32_t>(p);
    }
    return out;
}

std::uint32_t encode(std::span<const int> coords, int p) {
    std::uint32_t code = 0;
    for (std::size_t i = coords.size(); i-- > 0;)
        code = code * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(coords[i]);
    return code;
}

std::optional<std::vector<int>> default_modulus(int p, int n) {
    if (p == 2 && n == 2) return std::vector<int>{1, 1, 1};
    if (p == 3 && n == 2) return std::vector<int>{1, 0, 1};
    if (p == 5 && n == 2) return std::vector<int>{3, 0, 1};
    return std::nullopt;
}

std::vector<int> smallest_irreducible(int p, int n) {
    std::uint32_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<int> poly = digits(code, p, n);
        poly.push_back(1);
        if (is_irreducible_mod_p(poly, p)) return poly;
    }
    throw Error(ErrorKind::InvalidField, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(int p) noexcept {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
    if (poly.empty() || poly.back() % p == 0) return false;
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) return false;
    std::vector<int> f(poly.begin(), poly.end());
    for (auto& c : f) c = mod_p(c, p);
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
        for (std::uint32_t code = 0; code < count; ++code) {
            std::vector<int> g = digits(code, p, d);
            g.push_back(1);
            const auto r = poly_rem(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::shared_ptr<const FiniteField> FiniteField::create(int p, int n, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw Error(ErrorKind::InvalidField, "field order exceeds " + std::to_string(kMaxOrder));
    }
    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != static_cast<std::size_t>(n) + 1)
            throw Error(ErrorKind::InvalidField, "modulus must have n+1 coefficients");
        for (int c : mod)
            if (c < 0 || c >= p) throw Error(ErrorKind::InvalidField, "modulus coefficient out of range");
        if (mod.back() != 1) throw Error(ErrorKind::InvalidField, "modulus must be monic");
        if (!is_irreducible_mod_p(mod, p)) throw Error(ErrorKind::InvalidField, "modulus is reducible");
    } else if (auto def = default_modulus(p, n)) {
        mod = *def;
    } else {
        mod = smallest_irreducible(p, n);
    }
    return std::shared_ptr<const FiniteField>(new FiniteField(p, n, std::move(mod)));
}

FiniteField::FiniteField(int p, int n, std::vector<int> modulus) : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < n_; ++i) q_ *= static_cast<std::uint32_t>(p_);

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
        const auto dx = digits(x, p_, n_);
        std::vector<int> nx(dx.size());
        for (std::size_t i = 0; i < dx.size(); ++i) nx[i] = mod_p(-dx[i], p_);
        neg_[x] = encode(nx, p_);
        for (std::uint32_t y = 0; y < q_; ++y) {
            const auto dy = digits(y, p_, n_);
            std::vector<int> s(dx.size());
            for (std::size_t i = 0; i < dx.size(); ++i) s[i] = mod_p(dx[i] + dy[i], p_);
            add_[static_cast<std::size_t>(x) * q_ + y] = encode(s, p_);
        }
    }

    auto slow_mul = [&](std::uint32_t x, std::uint32_t y) {
        const auto dx = digits(x, p_, n_);
        const auto dy = digits(y, p_, n_);
        std::vector<int> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    mod_p(prod[static_cast<std::size_t>(i + j)] + static_cast<long long>(dx[i]) * dy[j], p_);
        auto r = poly_rem(std::move(prod), modulus_, p_);
        r.resize(static_cast<std::size_t>(n_), 0);
        return encode(r, p_);
    };

    // Primitive element search; q is small enough for brute force.
    const std::uint32_t units = q_ - 1;
    std::uint32_t primitive = 1;
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = g;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = slow_mul(x, g);
            ++ord;
        }
        if (ord == units) {
            primitive = g;
            break;
        }
    }
    exp_.resize(2 * static_cast<std::size_t>(units));
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < units; ++k) {
        exp_[k] = x;
        exp_[k + units] = x;
        log_[x] = k;
        x = slow_mul(x, primitive);
    }

    frob_.resize(q_);
    root_.resize(q_);
    long long root_exp = 1;
    for (int i = 0; i + 1 < n_; ++i) root_exp *= p_;
    for (std::uint32_t c = 0; c < q_; ++c) {
        frob_[c] = pow(FqElem{c}, p_).code;
        root_[c] = pow(FqElem{c}, root_exp).code;
    }

    as_root_.assign(q_, q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        const std::uint32_t image = sub(frobenius(FqElem{c}), FqElem{c}).code;
        const std::uint32_t current = as_root_[image];
        if (current == q_ || coeffs(FqElem{c}) < coeffs(FqElem{current})) as_root_[image] = c;
    }
}

FqElem FiniteField::generator() const {
    if (n_ < 2) throw Error(ErrorKind::InvalidField, "prime field has no element outside F_p");
    return FqElem{static_cast<std::uint32_t>(p_)};
}

FqElem FiniteField::from_int(long long k) const noexcept { return FqElem{static_cast<std::uint32_t>(mod_p(k, p_))}; }

FqElem FiniteField::from_coeffs(std::span<const int> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(n_))
        throw Error(ErrorKind::ParseError, "too many coordinates for F_q element");
    std::vector<int> c(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_) throw Error(ErrorKind::ParseError, "coordinate out of range [0, p)");
        c[i] = coeffs[i];
    }
    return FqElem{encode(c, p_)};
}

std::vector<int> FiniteField::coeffs(FqElem x) const { return digits(x.code, p_, n_); }

FqElem FiniteField::element(std::uint32_t code) const {
    if (code >= q_) throw Error(ErrorKind::InvalidField, "element code out of range");
    return FqElem{code};
}

FqElem FiniteField::inv(FqElem x) const {
    if (x.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
    const std::uint32_t units = q_ - 1;
    return FqElem{exp_[(units - log_[x.code]) % units]};
}

FqElem FiniteField::pow(FqElem x, long long e) const {
    if (x.code == 0) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const long long units = q_ - 1;
    long long k = (static_cast<long long>(log_[x.code]) * (e % units)) % units;
    if (k < 0) k += units;
    return FqElem{exp_[static_cast<std::size_t>(k)]};
}

int FiniteField::abs_trace(FqElem x) const noexcept {
    FqElem acc = zero();
    FqElem y = x;
    for (int i = 0; i < n_; ++i) {
        acc = add(acc, y);
        y = frobenius(y);
    }
    return static_cast<int>(acc.code);
}

std::optional<FqElem> FiniteField::artin_schreier_solve(FqElem c) const {
    const std::uint32_t r = as_root_[c.code];
    if (r == q_) return std::nullopt;
    return FqElem{r};
}

std::string FiniteField::format(FqElem x) const {
    std::ostringstream out;
    const auto c = coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    return out.str();
}

FqElem FiniteField::parse(std::string_view text) const {
    std::vector<int> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string token(text.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                    token.end());
        if (token.empty()) throw Error(ErrorKind::ParseError, "empty coordinate in \"" + std::string(text) + "\"");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad coordinate \"" + token + "\"");
        }
        if (used != token.size()) throw Error(ErrorKind::ParseError, "bad coordinate \"" + token + "\"");
        c.push_back(value);
        pos = comma + 1;
    }
    return from_coeffs(c);
}

}  // namespace vfunc

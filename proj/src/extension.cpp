#include "dickson/extension.hpp"

#include "dickson/error.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/oracle.hpp"

namespace dickson {

ExtensionView ExtensionView::over(FieldPtr base) {
    const auto p = base->characteristic();
    const auto k = base->degree();
    auto ext = Field::create_bounded(p, 2 * k, std::nullopt, kMaxExtensionOrder);

    std::vector<std::vector<std::uint64_t>> basis;
    if (k == 1) {
        basis.push_back(ext->coords(1));
    } else {
        // Roots of the base modulus in the extension; all coefficients live in F_p.
        const Polynomial modulus(ext, base->modulus());
        const auto split = oracle::factor(modulus, 0);
        std::optional<Code> theta;
        for (const auto& [lin, mult] : split.factors) {
            if (lin.degree() != 1) fail(ErrorCode::InternalInconsistency, "base modulus does not split in F_{q^2}");
            const auto root = ext->neg(lin.coeff(0));
            if (!theta || root < *theta) theta = root;
        }
        Code power = 1;
        for (unsigned i = 0; i < k; ++i) {
            basis.push_back(ext->coords(power));
            power = ext->mul(power, *theta);
        }
    }
    return ExtensionView(std::move(base), std::move(ext), std::move(basis));
}

ExtensionView::ExtensionView(FieldPtr base, FieldPtr ext, std::vector<std::vector<std::uint64_t>> basis)
    : base_(std::move(base)), ext_(std::move(ext)), basis_(std::move(basis)) {}

Code ExtensionView::embed(Code c) const {
    if (!base_->contains(c)) fail(ErrorCode::InvalidArgument, "code outside the base field");
    const auto p = base_->characteristic();
    const auto digits = base_->coords(c);
    std::vector<std::uint64_t> acc(2 * base_->degree(), 0);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + digits[i] * basis_[i][j]) % p;
    }
    return ext_->from_coords(acc);
}

FieldElement ExtensionView::embed(const FieldElement& e) const {
    require_same_field(*e.field(), *base_);
    return {ext_, embed(e.code())};
}

// Solves sum c_i basis_i = coords(c) over F_p by Gaussian elimination.
std::optional<Code> ExtensionView::restrict(Code c) const {
    if (!ext_->contains(c)) fail(ErrorCode::InvalidArgument, "code outside the extension field");
    const auto p = base_->characteristic();
    const auto k = base_->degree();
    const auto rows = 2 * k;
    const auto target = ext_->coords(c);
    if (k == 1) {
        for (std::size_t j = 1; j < rows; ++j) {
            if (target[j] != 0) return std::nullopt;
        }
        return target[0];
    }
    // augmented matrix: rows x (k + 1)
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(k + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < k; ++i) m[r][i] = basis_[i][r];
        m[r][k] = target[r];
    }
    auto inv_mod = [&](std::uint64_t a) {
        std::uint64_t result = 1, base = a % p, e = p - 2;
        while (e != 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) fail(ErrorCode::InternalInconsistency, "embedding basis is degenerate");
        std::swap(m[piv], m[row]);
        const auto inv = inv_mod(m[row][col]);
        for (auto& v : m[row]) v = v * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const auto f = m[r][col];
            for (std::size_t j = 0; j <= k; ++j) m[r][j] = (m[r][j] + (p - f) * m[row][j]) % p;
        }
        pivot_rows[col] = row++;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (m[r][k] != 0) return std::nullopt;
    }
    std::vector<std::uint64_t> digits(k);
    for (std::size_t col = 0; col < k; ++col) digits[col] = m[pivot_rows[col]][k];
    return base_->from_coords(digits);
}

Code ExtensionView::frobenius(Code c) const { return ext_->pow(c, base_->order()); }

FieldElement ExtensionView::frobenius(const FieldElement& e) const {
    require_same_field(*e.field(), *ext_);
    return {ext_, frobenius(e.code())};
}

Polynomial ExtensionView::embed(const Polynomial& f) const {
    require_same_field(*f.field(), *base_);
    std::vector<Code> out;
    out.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) out.push_back(embed(c));
    return Polynomial(ext_, std::move(out));
}

std::optional<Polynomial> ExtensionView::restrict(const Polynomial& f) const {
    require_same_field(*f.field(), *ext_);
    std::vector<Code> out;
    out.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) {
        auto r = restrict(c);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return Polynomial(base_, std::move(out));
}

Polynomial ExtensionView::frobenius(const Polynomial& f) const {
    require_same_field(*f.field(), *ext_);
    std::vector<Code> out;
    out.reserve(f.coeffs().size());
    for (auto c : f.coeffs()) out.push_back(frobenius(c));
    return Polynomial(ext_, std::move(out));
}

}  // namespace dickson

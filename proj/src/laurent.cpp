#include "qdt/laurent.hpp"

namespace qdt {

LaurentZ3 LaurentZ3::monomial(const Exponent& e, long long c) {
    LaurentZ3 l;
    l.add_term(e, c);
    return l;
}

long long LaurentZ3::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentZ3::coefficient_sum() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentZ3::add_term(const Exponent& e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentZ3 LaurentZ3::bar() const {
    LaurentZ3 out;
    for (const auto& [e, c] : terms_) out.add_term({-e[0], -e[1], -e[2]}, c);
    return out;
}

LaurentZ3 LaurentZ3::shifted(const Exponent& shift) const {
    LaurentZ3 out;
    for (const auto& [e, c] : terms_)
        out.add_term({e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]}, c);
    return out;
}

std::string LaurentZ3::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*t^(" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
             "," + std::to_string(e[2]) + ")";
    }
    return s;
}

LaurentZ3 operator+(const LaurentZ3& a, const LaurentZ3& b) {
    LaurentZ3 out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

LaurentZ3 operator-(const LaurentZ3& a, const LaurentZ3& b) {
    LaurentZ3 out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

LaurentZ3 operator-(const LaurentZ3& a) {
    LaurentZ3 out;
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

LaurentZ3 operator*(const LaurentZ3& a, const LaurentZ3& b) {
    LaurentZ3 out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

bool WeightTriple::is_admissible() const {
    if (s1 % 2 != 0 || s2 % 2 != 0 || s3 % 2 != 0) return false;
    long long sum = s1 + s2 + s3;
    return ((sum % 4) + 4) % 4 == 2;
}

std::string WeightTriple::to_string() const {
    return "(" + std::to_string(s1) + "," + std::to_string(s2) + "," + std::to_string(s3) + ")";
}

void WeightChar::add(long long w, long long m) {
    if (m == 0) return;
    auto [it, inserted] = mult_.emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) mult_.erase(it);
    }
}

long long WeightChar::multiplicity(long long w) const {
    auto it = mult_.find(w);
    return it == mult_.end() ? 0 : it->second;
}

long long WeightChar::virtual_rank() const {
    long long r = 0;
    for (const auto& [w, m] : mult_) r += m;
    return r;
}

WeightChar WeightChar::disjoint_union(const WeightChar& o) const {
    WeightChar out = *this;
    for (const auto& [w, m] : o.mult_) out.add(w, m);
    return out;
}

std::string WeightChar::to_string() const {
    if (mult_.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (const auto& [w, m] : mult_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(w) + ":" + std::to_string(m);
    }
    return s + "}";
}

}  // namespace qdt

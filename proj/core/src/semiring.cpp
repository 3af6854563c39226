#include "modhom/semiring.hpp"

#include <stdexcept>

namespace modhom {

SemiringValue Semiring::zero() const {
    if (kind == Kind::Naturals) return BigCount(0);
    return zero_idx;
}

SemiringValue Semiring::one() const {
    if (kind == Kind::Naturals) return BigCount(1);
    return one_idx;
}

SemiringValue Semiring::add(const SemiringValue& a, const SemiringValue& b) const {
    if (kind == Kind::Naturals) return std::get<BigCount>(a) + std::get<BigCount>(b);
    return add_table[std::get<int>(a)][std::get<int>(b)];
}

SemiringValue Semiring::mul(const SemiringValue& a, const SemiringValue& b) const {
    if (kind == Kind::Naturals) return std::get<BigCount>(a) * std::get<BigCount>(b);
    return mul_table[std::get<int>(a)][std::get<int>(b)];
}

std::string Semiring::render(const SemiringValue& v) const {
    if (kind == Kind::Naturals) return std::get<BigCount>(v).str();
    return elements[std::get<int>(v)];
}

SemiringValue Semiring::count(const BigCount& n) const {
    if (n < 0) throw std::invalid_argument("count_S expects a natural number");
    if (kind == Kind::Naturals) return n;
    const int prefix = static_cast<int>(count_prefix_.size());
    if (n < prefix) return count_prefix_[static_cast<int>(n)];
    BigCount offset = (n - count_preperiod_) % count_period_;
    return count_prefix_[count_preperiod_ + static_cast<int>(offset)];
}

SemiringValue count_in(const Semiring& s, const BigCount& n) { return s.count(n); }

void Semiring::precompute_counting() {
    count_prefix_.clear();
    count_prefix_.push_back(zero_idx);
    // The counting sequence steps by +1_S, so the first repeated value
    // closes the cycle; pigeonhole bounds the scan by the carrier size.
    std::vector<int> seen_at(elements.size(), -1);
    seen_at[zero_idx] = 0;
    for (int i = 1;; ++i) {
        int next = add_table[count_prefix_.back()][one_idx];
        if (seen_at[next] >= 0) {
            count_preperiod_ = seen_at[next];
            count_period_ = i - seen_at[next];
            break;
        }
        seen_at[next] = i;
        count_prefix_.push_back(next);
    }
}

std::optional<std::string> Semiring::check_axioms() const {
    if (kind == Kind::Naturals) return std::nullopt;
    const int k = carrier_size();
    auto name_of = [&](int i) { return elements[i]; };
    for (int a = 0; a < k; ++a) {
        if (add_table[a][zero_idx] != a || add_table[zero_idx][a] != a)
            return "zero is not an additive identity at " + name_of(a);
        if (mul_table[a][one_idx] != a || mul_table[one_idx][a] != a)
            return "one is not a multiplicative identity at " + name_of(a);
        if (mul_table[a][zero_idx] != zero_idx || mul_table[zero_idx][a] != zero_idx)
            return "zero does not annihilate at " + name_of(a);
        for (int b = 0; b < k; ++b) {
            if (add_table[a][b] != add_table[b][a])
                return "addition is not commutative at " + name_of(a) + "," + name_of(b);
            for (int c = 0; c < k; ++c) {
                if (add_table[add_table[a][b]][c] != add_table[a][add_table[b][c]])
                    return "addition is not associative";
                if (mul_table[mul_table[a][b]][c] != mul_table[a][mul_table[b][c]])
                    return "multiplication is not associative";
                if (mul_table[a][add_table[b][c]] != add_table[mul_table[a][b]][mul_table[a][c]])
                    return "left distributivity fails";
                if (mul_table[add_table[a][b]][c] != add_table[mul_table[a][c]][mul_table[b][c]])
                    return "right distributivity fails";
            }
        }
    }
    return std::nullopt;
}

Semiring Semiring::naturals() {
    Semiring s;
    s.kind = Kind::Naturals;
    s.name = "nat";
    return s;
}

Semiring Semiring::from_table(std::string name, std::vector<std::string> elements,
                              std::vector<std::vector<int>> add_table,
                              std::vector<std::vector<int>> mul_table, int zero_idx,
                              int one_idx) {
    Semiring s;
    s.kind = Kind::Finite;
    s.name = std::move(name);
    s.elements = std::move(elements);
    s.add_table = std::move(add_table);
    s.mul_table = std::move(mul_table);
    s.zero_idx = zero_idx;
    s.one_idx = one_idx;
    const int k = s.carrier_size();
    if (k == 0) throw std::invalid_argument("empty carrier");
    auto check_table = [&](const std::vector<std::vector<int>>& t) {
        if (static_cast<int>(t.size()) != k) throw std::invalid_argument("bad table shape");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != k) throw std::invalid_argument("bad table shape");
            for (int v : row)
                if (v < 0 || v >= k) throw std::invalid_argument("table value out of carrier");
        }
    };
    check_table(s.add_table);
    check_table(s.mul_table);
    if (auto err = s.check_axioms()) throw std::invalid_argument("not a semiring: " + *err);
    s.precompute_counting();
    return s;
}

Semiring Semiring::booleans() {
    return from_table("bool", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

Semiring Semiring::mod(int p) {
    if (p < 2) throw std::invalid_argument("modp needs p >= 2");
    std::vector<std::string> elements;
    std::vector<std::vector<int>> add(p, std::vector<int>(p)), mul(p, std::vector<int>(p));
    for (int a = 0; a < p; ++a) {
        elements.push_back(std::to_string(a));
        for (int b = 0; b < p; ++b) {
            add[a][b] = (a + b) % p;
            mul[a][b] = (a * b) % p;
        }
    }
    return from_table("modp:" + std::to_string(p), std::move(elements), std::move(add),
                      std::move(mul), 0, 1);
}

Semiring Semiring::min_plus(int cap) {
    if (cap < 1) throw std::invalid_argument("minplus needs cap >= 1");
    // Carrier 0..cap plus infinity (index cap+1); min as addition with
    // infinity as its identity, clipped plus as multiplication.
    const int inf = cap + 1;
    const int k = cap + 2;
    std::vector<std::string> elements;
    for (int a = 0; a <= cap; ++a) elements.push_back(std::to_string(a));
    elements.push_back("inf");
    std::vector<std::vector<int>> add(k, std::vector<int>(k)), mul(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a == inf) add[a][b] = b;
            else if (b == inf) add[a][b] = a;
            else add[a][b] = std::min(a, b);
            if (a == inf || b == inf) mul[a][b] = inf;
            else mul[a][b] = std::min(a + b, cap);
        }
    }
    return from_table("minplus:" + std::to_string(cap), std::move(elements), std::move(add),
                      std::move(mul), inf, 0);
}

Semiring Semiring::from_selector(const std::string& selector) {
    if (selector == "bool") return booleans();
    if (selector == "nat") return naturals();
    if (selector.rfind("modp:", 0) == 0) return mod(std::stoi(selector.substr(5)));
    if (selector.rfind("minplus:", 0) == 0) return min_plus(std::stoi(selector.substr(8)));
    throw std::invalid_argument("unknown semiring selector: " + selector +
                                " (expected bool, nat, modp:<p>, minplus:<cap>)");
}

int default_probe(const Semiring& s) {
    return s.kind == Semiring::Kind::Finite ? s.carrier_size() + 1 : 64;
}

PeriodicityReport analyze_periodicity(const Semiring& s, int probe) {
    if (probe < 2) throw std::invalid_argument("probe must be at least 2");
    PeriodicityReport report;
    report.probe = probe;
    std::vector<SemiringValue> seq;
    seq.reserve(probe + 1);
    for (BigCount n = 0; n <= probe; ++n) seq.push_back(s.count(n));

    int first = -1, repeat = -1;
    for (int m = 1; m <= probe && repeat < 0; ++m)
        for (int l = 0; l < m; ++l)
            if (seq[m] == seq[l]) {
                first = l;
                repeat = m;
                break;
            }
    if (repeat < 0) {
        report.injective_up_to_probe = true;
        return report;
    }
    report.preperiod_length = first;
    report.period = repeat - first;
    for (int n = first; n + report.period <= probe; ++n)
        if (seq[n] != seq[n + report.period])
            throw std::logic_error("counting sequence is not periodic past the first repeat");
    for (int n = 0; n < first; ++n) report.preperiod.push_back(s.render(seq[n]));
    for (int n = first; n < repeat; ++n) report.segment.push_back(s.render(seq[n]));
    return report;
}

} // namespace modhom

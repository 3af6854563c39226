#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace modhom {

using BigCount = boost::multiprecision::cpp_int;

// Naturals carry the number itself; finite carriers carry an index into the
// element table.
using SemiringValue = std::variant<BigCount, int>;

struct Semiring {
    enum class Kind { Naturals, Finite };

    Kind kind = Kind::Naturals;
    std::string name = "nat";

    // Finite carriers only.
    std::vector<std::string> elements;
    std::vector<std::vector<int>> add_table;
    std::vector<std::vector<int>> mul_table;
    int zero_idx = 0;
    int one_idx = 0;

    int carrier_size() const { return static_cast<int>(elements.size()); }

    SemiringValue zero() const;
    SemiringValue one() const;
    SemiringValue add(const SemiringValue& a, const SemiringValue& b) const;
    SemiringValue mul(const SemiringValue& a, const SemiringValue& b) const;
    std::string render(const SemiringValue& v) const;

    // count_S(n): zero for n = 0, else the n-fold sum of one. Uses the
    // precomputed rho shape of the counting sequence, so n may be huge.
    SemiringValue count(const BigCount& n) const;

    // nullopt when all axioms hold; finite carriers are checked over all
    // triples, the unbounded carrier is accepted as-is.
    std::optional<std::string> check_axioms() const;

    static Semiring naturals();
    static Semiring booleans();
    static Semiring mod(int p);
    static Semiring min_plus(int cap);
    static Semiring from_table(std::string name, std::vector<std::string> elements,
                               std::vector<std::vector<int>> add_table,
                               std::vector<std::vector<int>> mul_table, int zero_idx,
                               int one_idx);
    // Selector strings: "bool", "nat", "modp:<p>", "minplus:<cap>".
    static Semiring from_selector(const std::string& selector);

  private:
    // count_S(0..L+P-1) for finite carriers; count is periodic beyond.
    std::vector<int> count_prefix_;
    int count_preperiod_ = 0;
    int count_period_ = 0;
    void precompute_counting();
};

SemiringValue count_in(const Semiring& s, const BigCount& n);

struct PeriodicityReport {
    bool injective_up_to_probe = false;
    int probe = 0;
    int preperiod_length = 0;
    int period = 0;
    std::vector<std::string> preperiod;
    std::vector<std::string> segment;
};

// Scans count_S(0..probe) for the first repeated value; validates
// count_S(n) = count_S(n+P) across the probed range.
PeriodicityReport analyze_periodicity(const Semiring& s, int probe);

// 64 for the unbounded carrier, |carrier|+1 for finite ones.
int default_probe(const Semiring& s);

} // namespace modhom

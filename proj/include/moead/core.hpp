#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "moead/kernels.hpp"

namespace moead {

inline constexpr int kMaxObjectives = 3;

// Objective vector for minimization, m in {2,3} (1 allowed for internal use).
class ObjectiveVector {
public:
    ObjectiveVector() = default;
    ObjectiveVector(std::initializer_list<double> values);
    ObjectiveVector(const double* values, int m);

    int size() const { return m_; }
    double operator[](int j) const { return v_[j]; }
    double& operator[](int j) { return v_[j]; }
    const double* data() const { return v_.data(); }

    bool all_finite() const;
    bool operator==(const ObjectiveVector&) const = default;

private:
    std::array<double, kMaxObjectives> v_{};
    int m_ = 0;
};

// Point on the unit simplex defining one scalar sub-problem.
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(std::initializer_list<double> values);
    WeightVector(const double* values, int m);

    int size() const { return m_; }
    double operator[](int j) const { return v_[j]; }
    const double* data() const { return v_.data(); }

    // Exactly one nonzero component (an objective-axis sub-problem).
    bool is_edge() const;

    bool operator==(const WeightVector&) const = default;

private:
    std::array<double, kMaxObjectives> v_{};
    int m_ = 0;
};

struct DecisionVector {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    bool operator==(const DecisionVector&) const = default;
};

struct Bounds {
    std::vector<double> low;
    std::vector<double> high;

    std::size_t size() const { return low.size(); }
    bool contains(const DecisionVector& x) const;
};

struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    WeightVector weight;
};

// Pareto dominance for minimization: a dominates b iff a <= b componentwise
// and a < b somewhere. Throws std::invalid_argument on length mismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// All mutually non-dominated (decision, objective) pairs ever inserted.
// Entries are removed only when a later insertion dominates them; exact
// duplicates of a stored objective vector are rejected.
class UnboundedArchive {
public:
    explicit UnboundedArchive(int num_objectives);

    // Returns true iff the candidate was accepted. Rejects non-finite
    // objective vectors, dominated candidates, and exact duplicates.
    bool insert(const DecisionVector& x, const ObjectiveVector& f);

    std::size_t size() const { return xs_.size(); }
    bool empty() const { return xs_.empty(); }
    int num_objectives() const { return m_; }

    ObjectiveVector objective_at(std::size_t i) const;
    const DecisionVector& decision_at(std::size_t i) const { return xs_[i]; }

    kernels::SoaView objectives_view() const;
    std::vector<ObjectiveVector> objectives() const;

    // Monotone insertion counter; each entry keeps the value it had when
    // accepted. Entries are only ever removed by a dominating insertion, so
    // "birth < cutoff" identifies the members of any past live set that are
    // still present.
    std::uint64_t births_total() const { return next_birth_; }
    std::size_t count_births_before(std::uint64_t cutoff) const;

private:
    int m_;
    std::array<std::vector<double>, kMaxObjectives> f_cols_;
    std::vector<DecisionVector> xs_;
    std::vector<std::uint64_t> births_;
    std::uint64_t next_birth_ = 0;
    std::vector<std::uint8_t> scratch_;

    void remove_at(std::size_t i);
};

// Maximal mutually non-dominated subset; duplicates collapse to one copy.
// Order of the result is unspecified (treat as a set).
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points);

}  // namespace moead

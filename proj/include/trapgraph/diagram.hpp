#pragma once
#include <cstdint>
#include <vector>

#include "trapgraph/graph.hpp"

namespace trapgraph {

// One trapezoid: corners a < b on the upper line, c < d on the lower line.
// Labels are integer ranks 1..2n per line (purely ordinal; no real
// coordinates anywhere).
struct Trapezoid {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

// A collection of n trapezoids whose upper labels and lower labels each form
// a permutation of 1..2n. Trapezoid indices are 1-based throughout; n = 0 is
// a legal degenerate diagram.
class TrapezoidDiagram {
public:
    TrapezoidDiagram() = default;
    explicit TrapezoidDiagram(std::vector<Trapezoid> trapezoids) : traps_(std::move(trapezoids)) {}

    int n() const { return static_cast<int>(traps_.size()); }
    const Trapezoid& trap(int i) const { return traps_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<Trapezoid>& trapezoids() const { return traps_; }

    friend bool operator==(const TrapezoidDiagram&, const TrapezoidDiagram&) = default;

private:
    std::vector<Trapezoid> traps_;
};

// Diagram plus the dummy trapezoids T(0) (all corners 0) and T(n+1) (all
// corners 2n+1), and the upper_index map from each upper coordinate
// 0..2n+1 to the trapezoid owning it — the sweep algorithms' event table.
class AugmentedDiagram {
public:
    explicit AugmentedDiagram(TrapezoidDiagram diagram);

    int n() const { return base_.n(); }
    const TrapezoidDiagram& base() const { return base_; }

    // Indices 0..n+1; 0 and n+1 are the dummies.
    const Trapezoid& trap(int i) const { return all_[static_cast<std::size_t>(i)]; }

    // Owner of upper coordinate j in 0..2n+1.
    int upper_index(int j) const { return upper_index_[static_cast<std::size_t>(j)]; }

private:
    TrapezoidDiagram base_;
    std::vector<Trapezoid> all_;
    std::vector<int> upper_index_;
};

// Throws ValidationError naming the offending trapezoid and rule; returns
// normally iff the diagram satisfies all invariants.
void validate(const TrapezoidDiagram& d);

// The strict partial order: T(i) << T(j) iff b(i) < a(j) and d(i) < c(j).
// Indices 0..n+1 (dummies participate).
bool left_of(const AugmentedDiagram& d, int i, int j);

// Real trapezoids i != j intersect iff neither is left of the other.
bool adjacent(const TrapezoidDiagram& d, int i, int j);

// Intersection graph on vertices 1..n.
Graph to_graph(const TrapezoidDiagram& d);

// Deterministic valid diagram: independently per line, a uniformly random
// ordered pairing of {1..2n} (pair minimum = left corner). Same seed, same
// diagram, on every platform.
TrapezoidDiagram random_diagram(int n, std::uint64_t seed);

AugmentedDiagram augment(const TrapezoidDiagram& d);

} // namespace trapgraph

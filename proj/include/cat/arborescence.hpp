#ifndef CAT_ARBORESCENCE_HPP
#define CAT_ARBORESCENCE_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "cat/graph.hpp"

namespace cat {

/// Dense table of edge weights w(from -> to) for p >= 2 nodes.
///
/// Entries are finite numbers or the forbidden sentinel (+infinity). The
/// diagonal is always forbidden. The sentinel is only ever compared, never
/// added or subtracted.
class WeightMatrix {
public:
    static constexpr double kForbidden = std::numeric_limits<double>::infinity();

    explicit WeightMatrix(std::size_t p, double fill = 0.0);

    std::size_t size() const { return m_p; }
    double operator()(Node from, Node to) const;
    bool forbidden(Node from, Node to) const;
    // value must be finite; throws NonFiniteInput otherwise, InvalidArgument on the diagonal
    void set(Node from, Node to, double value);
    void forbid(Node from, Node to);

    // row-major p*p view; diagonal and forbidden entries hold kForbidden
    const std::vector<double>& data() const { return m_w; }

    bool operator==(const WeightMatrix&) const = default;

private:
    std::size_t index(Node from, Node to) const;

    std::size_t m_p;
    std::vector<double> m_w;
};

struct Arborescence {
    DirectedTree tree;
    double score;
};

/// Minimum-weight spanning arborescence over all roots.
///
/// Ties between incoming edges go to the lowest tail index at every
/// contraction level and ties between roots go to the lowest root, so results
/// are reproducible for identical inputs. The reported score is the plain sum
/// of the original weights over the returned edges, accumulated in head order.
/// Throws InfeasibleError when no spanning arborescence avoids the forbidden entries.
Arborescence solve(const WeightMatrix& w);

// Minimum over trees that contain every required edge, avoid every forbidden
// edge and (if set) are rooted at r. Throws InfeasibleError when no such tree exists.
Arborescence solve_constrained(const WeightMatrix& w, const Substructure& r);

// Lowest-scoring tree different from solve(w).tree, found by forbidding each
// optimal edge in turn and re-solving.
Arborescence second_best(const WeightMatrix& w);

// Restrict `w` so that only trees satisfying r remain feasible.
WeightMatrix apply_constraints(const WeightMatrix& w, const Substructure& r);

// Sum of w over the tree's edges in head order; throws ForbiddenEdgeInTree.
double tree_score(const WeightMatrix& w, const DirectedTree& t);

namespace detail {

constexpr std::size_t kPerRootLimit = 64;

// Chu-Liu/Edmonds contraction for a fixed root on an n*n row-major cost table
// (+inf = absent). Returns the parent array or nullopt when infeasible.
std::optional<std::vector<Node>> min_arborescence_rooted(const std::vector<double>& cost, std::size_t n, Node root);

// Every allowed root tried separately. An empty mask allows every root.
std::optional<Arborescence> solve_per_root(const WeightMatrix& w, const std::vector<bool>& allowed_roots = {});
// One contraction run from an artificial super-root whose out-edges all cost
// more than any finite tree score can differ by.
std::optional<Arborescence> solve_super_root(const WeightMatrix& w, const std::vector<bool>& allowed_roots = {});
// Dispatches on p like `solve`.
std::optional<Arborescence> solve_rooted_subset(const WeightMatrix& w, const std::vector<bool>& allowed_roots);

}  // namespace detail

}  // namespace cat

#endif  // CAT_ARBORESCENCE_HPP

#pragma once

#include <string>
#include <vector>

#include "mselab/error.hpp"
#include "mselab/layout.hpp"
#include "mselab/mse_instance.hpp"
#include "mselab/routes.hpp"

namespace mselab {

// The proposed cover leaves an edge uncovered, so the validation route has
// no shared plain edge to cross that edge's column.
class UncoveredColumn : public PreconditionError {
 public:
  UncoveredColumn(int edge_index, int column, const std::string& what)
      : PreconditionError(what), edge_index_(edge_index), column_(column) {}
  int edge_index() const { return edge_index_; }  // j of e_j, 1-based
  int column() const { return column_; }          // j + 1

 private:
  int edge_index_;
  int column_;
};

// Routes for a cover W with |W| = k on a base-stage instance: M routes
// through each selected row, one through every other row, and the
// validation route. Throws UncoveredColumn if W is not a cover and
// PreconditionError for other invalid input.
RouteSet build_canonical_routes(const MseInstance& inst, const LayoutMap& layout,
                                const std::vector<int>& cover);

struct InvariantVerdict {
  bool pass = false;
  std::string details;
};

// Exactly k source feathers carry M routes, the other n - k carry one each,
// and the source validation chain carries one.
InvariantVerdict check_invariant_1(const MseInstance& inst, const LayoutMap& layout,
                                   const RouteSet& routes);

// Each selected row has exactly m + 1 shared edges in its horizontal
// connections and sink feather, and no shared edge lies outside the selected
// rows' connections and source feathers.
InvariantVerdict check_invariant_2(const MseInstance& inst, const LayoutMap& layout,
                                   const RouteSet& routes);

}  // namespace mselab

#pragma once

#include "symhermite/matrix.hpp"
#include "symhermite/nodes.hpp"

namespace symhermite {

// d x multiplicity block of the confluent Vandermonde matrix for one node:
// entry (r, c) = C(r, c) * a^(r-c) for r >= c, else 0. Column c carries the
// order-c scaled derivative of the power basis at the node.
PolyMatrix vdm_block(const NodeValue& value, int d, int multiplicity,
                     const VariableSet& vars);

// d x d confluent Vandermonde matrix V_d(A): blocks side by side in block
// order, one column per label.
PolyMatrix assemble_vdm(const NodeMultiset& nodes, const VariableSet& vars);

// Copy without the picked columns.
PolyMatrix delete_columns(const PolyMatrix& m, const ColumnSubset& subset);

// Prepend n power columns (x_k^r) for the main variables of `vars`; the input
// must have d rows and d-n columns.
PolyMatrix attach_variable_columns(const PolyMatrix& m, const VariableSet& vars);

// Closed form of det V_d(A): product over block pairs i < j of
// (a_j - a_i)^(m_i * m_j).
Polynomial vdm_det_formula(const NodeMultiset& nodes, const VariableSet& vars);

} // namespace symhermite

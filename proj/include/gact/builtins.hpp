#ifndef GACT_BUILTINS_HPP
#define GACT_BUILTINS_HPP

#include "gact/group.hpp"

namespace gact {

GroupRef make_cyclic(int n);
GroupRef make_direct_product(const GroupRef& a, const GroupRef& b, const std::string& name);
/// symmetric group on three points with a fixed element order:
/// (1), (12), (13), (123), (23), (132)
GroupRef make_s3();
GroupRef make_d4();
GroupRef make_q8();

/// "Z<n>", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "S3", "D4", "Q8"
GroupRef group_by_name(const std::string& name);

/// the bundled collection of every group of order <= 8, one per isomorphism type
std::vector<GroupRef> groups_up_to_order_8();

}  // namespace gact

#endif

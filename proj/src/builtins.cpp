#include "gact/builtins.hpp"

#include <array>
#include <map>

namespace gact {

GroupRef make_cyclic(int n) {
  require(n >= 1, ErrorCode::InputError, "cyclic order must be positive");
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cayley[a][b] = (a + b) % n;
  return Group::from_cayley("Z" + std::to_string(n), std::move(cayley));
}

GroupRef make_direct_product(const GroupRef& a, const GroupRef& b, const std::string& name) {
  const int na = a->order(), nb = b->order(), n = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          cayley[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
  return Group::from_cayley(name, std::move(cayley));
}

GroupRef make_s3() {
  // (1), (12), (13), (123), (23), (132) as images of the three points
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                         {1, 2, 0}, {0, 2, 1}, {2, 0, 1}};
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> cayley(6, std::vector<int>(6));
  for (int aa = 0; aa < 6; ++aa)
    for (int bb = 0; bb < 6; ++bb) {
      std::vector<int> prod(3);
      for (int x = 0; x < 3; ++x) prod[x] = perms[aa][perms[bb][x]];
      cayley[aa][bb] = index.at(prod);
    }
  return Group::from_cayley("S3", std::move(cayley), std::move(perms));
}

GroupRef make_d4() {
  // rotation and a reflection of the square
  return Group::from_permutations("D4", 4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
}

GroupRef make_q8() {
  // elements 1, i, j, k, -1, -i, -j, -k; index = axis + 4 * (sign < 0)
  auto mul = [](int a, int b) {
    int sa = a / 4, ax = a % 4;
    int sb = b / 4, bx = b % 4;
    int sign = sa ^ sb;
    int axis;
    if (ax == 0) {
      axis = bx;
    } else if (bx == 0) {
      axis = ax;
    } else if (ax == bx) {
      axis = 0;
      sign ^= 1;  // i*i = j*j = k*k = -1
    } else {
      axis = 6 - ax - bx;  // the remaining axis among {1,2,3}
      // cyclic products i*j=k, j*k=i, k*i=j are positive
      bool cyclic = (ax == 1 && bx == 2) || (ax == 2 && bx == 3) || (ax == 3 && bx == 1);
      if (!cyclic) sign ^= 1;
    }
    return axis + 4 * sign;
  };
  std::vector<std::vector<int>> cayley(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) cayley[a][b] = mul(a, b);
  return Group::from_cayley("Q8", std::move(cayley));
}

GroupRef group_by_name(const std::string& name) {
  if (name == "S3") return make_s3();
  if (name == "D4") return make_d4();
  if (name == "Q8") return make_q8();
  if (name == "Z2xZ2") return make_direct_product(make_cyclic(2), make_cyclic(2), "Z2xZ2");
  if (name == "Z2xZ4") return make_direct_product(make_cyclic(2), make_cyclic(4), "Z2xZ4");
  if (name == "Z2xZ2xZ2")
    return make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2), "Z2xZ2"),
                               make_cyclic(2), "Z2xZ2xZ2");
  if (name.size() >= 2 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return make_cyclic(std::stoi(name.substr(1)));
  fail(ErrorCode::InputError, "unknown builtin group '" + name + "'");
}

std::vector<GroupRef> groups_up_to_order_8() {
  std::vector<GroupRef> out;
  for (int n = 2; n <= 8; ++n) out.push_back(make_cyclic(n));
  out.push_back(group_by_name("Z2xZ2"));
  out.push_back(group_by_name("Z2xZ4"));
  out.push_back(group_by_name("Z2xZ2xZ2"));
  out.push_back(make_s3());
  out.push_back(make_d4());
  out.push_back(make_q8());
  return out;
}

}  // namespace gact

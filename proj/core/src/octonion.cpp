#include "octa/octonion.hpp"

namespace octa {

const char* basis_name(int slot) {
  static const char* names[8] = {"1", "i", "j", "k", "e", "f", "g", "h"};
  return names[slot];
}

std::string mul_table_csv() {
  std::string out;
  out.reserve(64 * 12);
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      out += basis_name(p);
      out += ',';
      out += basis_name(q);
      out += ',';
      out += kMulTable.sign[p][q] > 0 ? "+1" : "-1";
      out += ',';
      out += basis_name(kMulTable.slot[p][q]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace octa

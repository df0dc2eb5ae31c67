#include "pk/families.hpp"

namespace pk::families {

const std::vector<FamilySpec>& familyTable() {
  static const std::vector<FamilySpec> table = {
      {1, "(2p+1) (i^{2k-1}) (2q+1)", "gcd((2p+1)(2q+1),4pq-1)", ""},
      {2, "(2p+1) (i^{2k-1}) -(2q+1)", "gcd((2p+1)(2q+1),4pq+4p+1)", ""},
      {3, "(2p) 1 (i^{2k-1}) 1 (2q)", "gcd((2p+1)(2q+1),4pq-1)", ""},
      {4, "(2p+1),(2q+1),(i^{2k})", "gcd((2p+1)(2q+1),p+q+1)", ""},
      {5, "(2p+1),-(2q+1),(i^{2k})", "gcd((2p+1)(2q+1),p-q)", ""},
      {6, "(2p+1),(2q) 1,(i^{2k})", "gcd((2p+1)(2q+1),4pq+4q+1)", ""},
      {7, "(2p+1),-(2q) (-1),(i^{2k})", "gcd((2p+1)(2q+1),4pq-1)", ""},
      {8, "(2p+1) (i^{2k}) 1 (2q)", "gcd((2p+1)(2q+1),4pq+4q+1)", ""},
      {9, "(2p+1) (i^{2k}) (-1) (-2q)", "gcd((2p+1)(2q+1),4pq-1)", ""},
      {10, "(2p) 1,(2q) 1,(i^{2k})", "gcd((2p+1)(2q+1),4pq+p+q)", ""},
      {11, "6*(2p).(2q) 0.(i^{2k-1})", "gcd(12pq-2p-2q-1,3p+3q+1)", ""},
      {12, "6*(2p).(2q) 0.(i^{2k-1}) 0", "gcd(12pq-2p-2q-1,12pq+4p+4q+1)", ""},
      {13, "6*(2p).(2q) 0.(i^{2k-1}).(-1).(-1).(-1)", "gcd(12pq-10p-10q+3,3p+3q-1)", ""},
      {14, "6*(2p).(2q) 0.(i^{2k-1}) 0.(-1).(-1).(-1)", "gcd(12pq-10p-10q+3,12pq-4p-4q+1)", ""},
      {15, "6*(2p).(2q) 0::(i^{2k-1})", "gcd(4pq+2p+2q-3,4pq+3p+3q)", ""},
      {16, "6*(2p).(2q) 0::(i^{2k-1}) 0", "gcd(4pq+2p+2q-3,4pq+4p+4q+3)", ""},
      {17, "8*(i^{2k-1})::(i^{2m-1})", "3", ""},
      {18, "8*(i^{2k-1}) 0::(i^{2m-1})", "3", ""},
      {19, "8*(i^{2k-1}) 0::(i^{2m-1}) 0", "3", ""},
      {20, "(2p+1),(2q+1),(i^{2k})+(i^{2m-1})", "gcd((2p+1)(2q+1),4pq+4p+4q+3)", ""},
      {21, "(2p+1),-(2q+1),(i^{2k})+(i^{2m-1})", "gcd((2p+1)(2q+1),4pq+4q+1)", ""},
      {22, "(2p) (2q) (i^{2k-1}) (2r) (2s)",
       "gcd(16pqrs-8pqs-8prs+4pq+4rs-2p-2s+1,16pqrs+4pq+4rs+1)", ""},
      {23, "(2p) (2q) (i^{2k-1}) -(2r) -(2s)",
       "gcd(16pqrs+8pqs-8prs+4pq+4rs-2p+2s+1,16pqrs+4pq+4rs+1)", ""},
      {24, "(2p+1),(2q) 1,(i^{2k})+(i^{2m-1})", "gcd((2p+1)(2q+1),4pq+p+3q+1)", ""},
      {25, "(2p+1),-(2q) (-1),(i^{2k})+(i^{2m-1})", "gcd((2p+1)(2q+1),4pq+p+q)", ""},
      {26, "(2p) 1,(2q) 1,(i^{2k})+(i^{2m-1})", "gcd((2p+1)(2q+1),12pq+4p+4q+1)", ""},
      {27, "6*(i^{2k-1}).(2p):(i^{2m}).(2q) 0", "gcd(12pq+4p+4q+1,4pq+4p+4q+3)", ""},
      {28, "6*(i^{2k-1}) 0.(2p):(i^{2m}).(2q) 0", "gcd(12pq+4p+4q+1,4pq+4p+4q+3)", ""},
      {29, "6*.(i^{2k}):-(2p).(2q) 0", "gcd(8pq+6p-4q-1,2pq+2p-3q-1)", ""},
      {30, "6*.(2p).(i^{2k-1}).-(2q).(2r) 0.(i^{2m-1})",
       "gcd(8pqr+8pq-4pr+4p-2q+1,4pqr+4pq-4pr+2qr+q-r)", ""},
      {31, "6*.(2p):(i^{2k}).(2q) 0", "gcd(12pq+4p+4q+1,4pq+4p+4q+3)", ""},
      {32, "(2p) 1 1 (i^{2k-1}) 1 1 (2q)", "gcd(2p+2q+1,(4p+1)(4q+1))", ""},
      {33, "8*(i^{2k}) 0::(i^{2m-1})", "3", ""},
      {34, "8*(i^{2k}) 0::(i^{2m-1}) 0", "3", ""},
      {35, "8*(i^{2k}) 0::(i^{2m-1}).(-1).(-1).(-1)", "9", ""},
      {36, "8*(i^{2k}) 0::(i^{2m-1}) 0.(-1).(-1).(-1)", "9", ""},
      {37, "8*(2p) 0.(-1).(i^{2k-1}).(-1).(-1).(-1).(i^{2m-1}).(-1)", "gcd(8p+1,9)", ""},
      {38, "8*(2p) 0.(-1).(i^{2k-1}) 0.(-1).(-1).(-1).(i^{2m-1}).(-1)", "gcd(8p+1,9)", ""},
      {39, "8*(2p) 0.(-1).(i^{2k-1}) 0.(-1).(-1).(-1).(i^{2m-1}) 0.(-1)", "gcd(8p+1,9)", ""},
      {40, "(i^{2k-1}),(2p+1),(2q+1)", "gcd(4pq-1,p+q+1)", ""},
      {41, "(i^{2k-1}),(2p) 1,(2q) 1", "gcd(4pq-1,4pq+p+q)", ""},
      {42, "6*(2p) 0.(i^{2k}) 0:(2q).(i^{2m-1})", "gcd(4pq-1,8pq+3p+3q+1)", ""},
      {43, "6*(2p) 0.(i^{2k}) 0:(2q).(i^{2m-1}) 0", "gcd(4pq-1,(2p+1)(2q+1))", ""},
      {44, "6*(2p).(i^{2k-1}).(2q):(2r) 0",
       "gcd(16pqr+4pq-4pr-4qr-1,16pqr+4pq+4pr+4qr+2p+2q+1)", ""},
      {45, "6*(2p).(i^{2k-1}) 0.(2q):(2r) 0", "gcd(16pqr+4pq-4pr-4qr-1,4pr+4qr+p+q+1)", ""},
      {46, "6*(2p):(2q):(i^{2k}) 0", "gcd(4pq+4p+4q+3,4pq+3p+3q)", ""},
      {47, "9*(i^{2k-1})::::(i^{2m-1})", "5", ""},
      {48, "9*(i^{2k-1}) 0::::(i^{2m-1})", "5", ""},
      {49, "9*(i^{2k-1}) 0::::(i^{2m-1}) 0", "5", ""},
      {50, "9*.(i^{2k-1}):.(i^{2m-1}):.(i^{2n-1})", "3", ""},
      {51, "9*.(i^{2k-1}) 0:.(i^{2m-1}):.(i^{2n-1})", "3", ""},
      {52, "9*.(i^{2k-1}) 0:.(i^{2m-1}) 0:.(i^{2n-1})", "3", ""},
      {53, "9*.(i^{2k-1}) 0:.(i^{2m-1}) 0:.(i^{2n-1}) 0", "3", ""},
      {54, "9*.(i^{2k-1}).(-1):(i^{2m-1}).(-1):(i^{2n-1}).(-1)", "9", ""},
      {55, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}).(-1):(i^{2n-1}).(-1)", "9", ""},
      {56, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}) 0.(-1):(i^{2n-1}).(-1)", "9", ""},
      {57, "9*.(i^{2k-1}) 0.(-1):(i^{2m-1}) 0.(-1):(i^{2n-1}) 0.(-1)", "9", ""},
      {58, "6*(i^{2k}) 0:(2p) 0:(2q) 0", "gcd(12pq+4p+4q+1,3p+3q+1)", ""},
      {59, "6*(2p) 0.(i^{2k-1}).(2q) 0:(2r) 0",
       "gcd(4pq+4pr+4qr-4r-1,4pq+4pr+4qr+2p+2q+4r+1)", ""},
      {60, "6*(2p) 0.(i^{2k-1}) 0.(2q) 0:(2r) 0", "gcd(4pq+4pr+4qr-4r-1,4pq+4pr+4qr+p+q)", ""},
  };
  return table;
}

const std::vector<FamilySpec>& supplementaryRows() {
  static const std::vector<FamilySpec> rows = {
      {61, "(2p) 1 i,(2p+1),-(2p+1)", "(2p+1)(2p+1)(2p+1)", "KH family"},
      {62, "(2p) 1 i,3,-3", "18p+9", "KH family"},
      {63, "(2p+1) (i) -(2p+1)", "(2p+1)(2p+1)", "KH family"},
      {64, "(2p+1) (i) -(2p-1)", "(2p+1)(2p+1)", "KH family, literal exponent reading"},
  };
  return rows;
}

}  // namespace pk::families

#pragma once

// Small named states used as oracle inputs.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kuniform/oracle.hpp"

namespace kuniform::corpus {

/// |0...0> + |1...1> + ... + |d-1...d-1> on N parties.
inline PureState ghz(int n, int d) {
  std::map<Ket, GaussRat> amps;
  for (int v = 0; v < d; ++v) amps[Ket(static_cast<std::size_t>(n), v)] = GaussRat(1);
  return PureState(DimensionProfile::homogeneous(d, n), std::move(amps));
}

inline PureState bell() { return ghz(2, 2); }

/// |00> + i|11>
inline PureState complex_bell() {
  return PureState(DimensionProfile::homogeneous(2, 2), {{{0, 0}, GaussRat(1)}, {{1, 1}, GaussRat(0, 1)}});
}

inline PureState product(std::vector<int> dims, Ket ket) {
  return PureState(DimensionProfile(std::move(dims)), {{std::move(ket), GaussRat(1)}});
}

/// |001> + |010> + |100>
inline PureState w3() {
  return PureState(DimensionProfile::homogeneous(2, 3),
                   {{{0, 0, 1}, GaussRat(1)}, {{0, 1, 0}, GaussRat(1)}, {{1, 0, 0}, GaussRat(1)}});
}

/// sum_{i,j} |i, j, i+j, i+2j> mod 3, a 2-uniform state of four qutrits.
inline PureState ame_4_3() {
  std::map<Ket, GaussRat> amps;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) amps[{i, j, (i + j) % 3, (i + 2 * j) % 3}] = GaussRat(1);
  return PureState(DimensionProfile::homogeneous(3, 4), std::move(amps));
}

/// (|0> + |1>) (x) (|0> + 2|1>): a product state with unequal weights.
inline PureState tilted_product() {
  return PureState(DimensionProfile::homogeneous(2, 2), {{{0, 0}, GaussRat(1)},
                                                         {{0, 1}, GaussRat(2)},
                                                         {{1, 0}, GaussRat(1)},
                                                         {{1, 1}, GaussRat(2)}});
}

inline std::vector<std::pair<std::string, PureState>> bundled() {
  std::vector<std::pair<std::string, PureState>> out;
  out.emplace_back("bell", bell());
  out.emplace_back("complex_bell", complex_bell());
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 6; ++n)
      out.emplace_back("ghz_" + std::to_string(n) + "_" + std::to_string(d), ghz(n, d));
  out.emplace_back("product_00", product({2, 2}, {0, 0}));
  out.emplace_back("product_000", product({2, 2, 2}, {0, 0, 0}));
  out.emplace_back("product_0121", product({3, 3, 3, 3}, {0, 1, 2, 1}));
  out.emplace_back("tilted_product", tilted_product());
  out.emplace_back("w3", w3());
  out.emplace_back("ame_4_3", ame_4_3());
  return out;
}

}  // namespace kuniform::corpus

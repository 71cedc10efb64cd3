#include <array>
#include <bit>

#include "gdh/lattice.hpp"
#include "gdh/linalg.hpp"

namespace gdh::lattice {

// F4 = {0, 1, w, w^2} encoded as 0..3
static constexpr int f4add[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
static constexpr int f4mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

bool GolayCode::contains(uint32_t w) const {
  // self-dual: membership = orthogonality to the generators
  for (uint32_t b : basis)
    if (std::popcount(w & b) & 1) return false;
  return true;
}

std::vector<uint32_t> GolayCode::all_words() const {
  std::vector<uint32_t> words{0};
  words.reserve(4096);
  for (uint32_t b : basis) {
    size_t sz = words.size();
    for (size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ b);
  }
  return words;
}

GolayCode golay_code() {
  // hexacode words (a, b, c, phi(1), phi(w), phi(w^2)), phi(x) = a x^2 + b x + c
  std::vector<std::array<int, 6>> hexa;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        int p1 = f4add[f4add[a][b]][c];
        int pw = f4add[f4add[f4mul[a][3]][f4mul[b][2]]][c];
        int pww = f4add[f4add[f4mul[a][2]][f4mul[b][3]]][c];
        hexa.push_back({a, b, c, p1, pw, pww});
      }
  // column lifts: rows labelled 0,1,w,w^2 top to bottom; lift[s][m][t] is the
  // unique 4-bit column with score s, parity m, top bit t
  static constexpr int rowlab[4] = {0, 1, 2, 3};
  int lift[4][2][2];
  for (int bits = 0; bits < 16; ++bits) {
    int s = 0, par = 0;
    for (int r = 0; r < 4; ++r)
      if (bits >> r & 1) {
        s = f4add[s][rowlab[r]];
        par ^= 1;
      }
    lift[s][par][bits & 1] = bits;
  }
  // an array is a codeword iff all column parities equal the top-row parity
  // and the column scores form a hexacode word
  std::vector<uint32_t> words;
  words.reserve(4096);
  for (const auto& w : hexa)
    for (int m = 0; m < 2; ++m)
      for (int tops = 0; tops < 64; ++tops) {
        if (std::popcount(static_cast<unsigned>(tops)) % 2 != m) continue;
        uint32_t bits = 0;
        for (int j = 0; j < 6; ++j) {
          int col = lift[w[j]][m][tops >> j & 1];
          for (int r = 0; r < 4; ++r)
            if (col >> r & 1) bits |= 1u << (r * 6 + j);
        }
        words.push_back(bits);
      }
  // extract an F2 basis
  GolayCode code;
  std::vector<std::pair<int, uint32_t>> pivots;
  for (uint32_t w : words) {
    uint32_t x = w;
    for (auto [p, b] : pivots)
      if (x >> p & 1) x ^= b;
    if (x) {
      pivots.emplace_back(std::bit_width(x) - 1, x);
      code.basis.push_back(x);
      if (code.basis.size() == 12) break;
    }
  }
  return code;
}

ScaledLattice leech_lattice() {
  GolayCode code = golay_code();
  ZMat gens;
  for (uint32_t w : code.basis) {
    ZVec v(24);
    for (int i = 0; i < 24; ++i) v[i] = (w >> i & 1) ? 2 : 0;
    gens.push_back(v);
  }
  for (int i = 1; i < 24; ++i) {
    ZVec v(24, 0);
    v[0] = 4;
    v[i] = -4;
    gens.push_back(v);
  }
  ZVec v(24, 0);
  v[0] = 4;
  v[1] = 4;
  gens.push_back(v);
  ZVec w(24, 1);
  w[0] = -3;
  gens.push_back(w);
  ZMat basis = linalg::lll(linalg::hnf(std::move(gens)));
  return make_lattice(std::move(basis), make_rat(1, 8), 24);
}

}  // namespace gdh::lattice

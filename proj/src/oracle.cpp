#include "plie/oracle.hpp"

#include <map>
#include <stdexcept>

namespace plie {

namespace {

// A right-normed word w encodes the nested bracket
// [g_{w[0]}, [g_{w[1]}, [... , g_{w.back()}]]] in one generator family.
using Word = std::vector<std::size_t>;
using Combo = std::map<Word, Scalar>;  // linear combination of equal-length words

void accumulate(Combo& out, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar& slot = out[w];
  slot += c;
  if (slot.is_zero()) out.erase(w);
}

// Sum of the letters' weight columns, signed for the generator family.
Vec word_weight(const LocalPart& local, const Word& w, int sign) {
  Vec wt = zeros(local.dim0);
  for (std::size_t b : w) {
    const Vec col = local.weights.col(b);
    for (std::size_t q = 0; q < wt.size(); ++q)
      wt[q] += sign > 0 ? col[q] : -col[q];
  }
  return wt;
}

// One contraction step: bracket a combination of length >= 2 words with a
// single opposite generator, expanding
//   [[x_{w0}, u], y_a] = [x_{w0}, [u, y_a]] + [[x_{w0}, y_a], u].
// `sign` says which family the words live in (+1: positive words against
// f_a, -1: negative words against e_a). The result has length - 1.
Combo drop_letter(const LocalPart& local, const Combo& x, std::size_t a, int sign) {
  Combo out;
  for (const auto& [w, c] : x) {
    const Word tail(w.begin() + 1, w.end());
    // [[x_{w0}, y_a], u]: the degree-0 pairing value acts by the weight of u.
    Vec h = sign > 0 ? local.pairing[w[0]][a] : local.pairing[a][w[0]];
    if (sign < 0)
      for (Scalar& s : h) s = -s;
    if (!is_zero(h)) accumulate(out, tail, c * dot(h, word_weight(local, tail, sign)));
    // [x_{w0}, [u, y_a]]
    if (w.size() == 2) {
      Vec g = sign > 0 ? local.pairing[w[1]][a] : local.pairing[a][w[1]];
      if (sign < 0)
        for (Scalar& s : g) s = -s;
      // [x_{w0}, g] = -sign * (g . column w0) x_{w0}
      const Scalar coef = dot(g, local.weights.col(w[0]));
      accumulate(out, Word{w[0]}, sign > 0 ? c * (-coef) : c * coef);
    } else {
      const Combo rec = drop_letter(local, Combo{{tail, Scalar(1)}}, a, sign);
      for (const auto& [u, d] : rec) {
        Word prefixed;
        prefixed.reserve(u.size() + 1);
        prefixed.push_back(w[0]);
        prefixed.insert(prefixed.end(), u.begin(), u.end());
        accumulate(out, prefixed, c * d);
      }
    }
  }
  return out;
}

std::vector<Word> all_words(std::size_t n, int len) {
  std::vector<Word> words;
  if (n == 0) return words;
  Word w(static_cast<std::size_t>(len), 0);
  while (true) {
    words.push_back(w);
    int pos = len - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n - 1) {
      w[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return words;
}

// Flattens the full contraction profile of a word: its image under every
// sequence of len-1 opposite generators, read off in generator coordinates.
// Two words are equal in the minimal algebra exactly when these profiles
// agree, so the component dimension is the rank over all words.
void profile(const LocalPart& local, const Combo& x, int steps, int sign, Vec& row) {
  if (steps == 0) {
    Vec coords = zeros(local.npos);
    for (const auto& [w, c] : x) coords[w[0]] += c;
    row.insert(row.end(), coords.begin(), coords.end());
    return;
  }
  for (std::size_t a = 0; a < local.npos; ++a)
    profile(local, drop_letter(local, x, a, sign), steps - 1, sign, row);
}

}  // namespace

std::vector<std::size_t> oracle_dims(const LocalPart& local, int max_degree, bool force,
                                     int guard) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  if (!force && max_degree > guard)
    throw std::invalid_argument("max_degree exceeds the oracle guard of " +
                                std::to_string(guard) + " (pass force to override)");
  validate(local);
  std::vector<std::size_t> dims(2 * static_cast<std::size_t>(max_degree) + 1, 0);
  const auto at = [&](int deg) -> std::size_t& {
    return dims[static_cast<std::size_t>(deg + max_degree)];
  };
  at(0) = local.dim0;
  at(1) = local.npos;
  at(-1) = local.npos;
  for (int m = 2; m <= max_degree; ++m) {
    const std::vector<Word> words = all_words(local.npos, m);
    std::size_t width = local.npos;
    for (int s = 1; s < m; ++s) width *= local.npos;
    EchelonTracker pos_rank(width);
    EchelonTracker neg_rank(width);
    for (const Word& w : words) {
      const Combo x{{w, Scalar(1)}};
      Vec row;
      row.reserve(width);
      profile(local, x, m - 1, +1, row);
      pos_rank.add(row);
      row.clear();
      profile(local, x, m - 1, -1, row);
      neg_rank.add(row);
    }
    at(m) = pos_rank.kept_count();
    at(-m) = neg_rank.kept_count();
  }
  return dims;
}

}  // namespace plie
